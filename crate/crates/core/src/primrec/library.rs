//! Ready-made terms.

use super::Expr;

/// `add(n, y) = n + y`, recursing on `n`.
pub fn add() -> Expr {
    Expr::rec(Expr::proj(1, 1), Expr::comp(Expr::Succ, vec![Expr::proj(3, 2)]))
}

/// `mul(n, y) = n * y`. Each unfolding adds `y` to the accumulator,
/// so the total cost is `n * (y + 1)` unfoldings.
pub fn mul() -> Expr {
    Expr::rec(Expr::constant(1, 0u32), Expr::comp(add(), vec![Expr::proj(3, 3), Expr::proj(3, 2)]))
}

/// `pred(n) = max(n - 1, 0)`
pub fn pred() -> Expr {
    Expr::rec(Expr::constant(0, 0u32), Expr::proj(2, 1))
}

/// `monus(n, y) = max(y - n, 0)`: subtracts the recursion variable from `y`.
pub fn monus() -> Expr {
    Expr::rec(Expr::proj(1, 1), Expr::comp(pred(), vec![Expr::proj(3, 2)]))
}

/// `pow(n, y) = y^n`
pub fn pow() -> Expr {
    Expr::rec(Expr::constant(1, 1u32), Expr::comp(mul(), vec![Expr::proj(3, 3), Expr::proj(3, 2)]))
}
