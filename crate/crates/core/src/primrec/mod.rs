//! Primitive recursive function terms.
//!
//! Terms are built from constants, the successor, projections,
//! composition and primitive recursion. The recursion operator takes the
//! recursion variable first:
//!
//! ```text
//! f(0,     x..) = base(x..)
//! f(n + 1, x..) = step(n, f(n, x..), x..)
//! ```
//!
//! Every well-formed term denotes a total function. Evaluation still takes
//! a budget of recursion unfoldings, because totality says nothing about
//! how long a term like an iterated exponential takes to evaluate.

pub mod library;
mod syntax;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::diophantine::Polynomial;

pub use syntax::{parse_expr, SyntaxError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    /// `C[k,c]`: the `k`-ary constant `c`.
    Const { arity: usize, value: BigUint },
    /// `S`: `x + 1`.
    Succ,
    /// `P[k,i]`: the `i`-th of `k` arguments, 1-based.
    Proj { arity: usize, index: usize },
    /// `comp(outer; inner..)`
    Comp { outer: Box<Expr>, inners: Vec<Expr> },
    /// `rec(base; step)`
    Rec { base: Box<Expr>, step: Box<Expr> },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IllFormed {
    #[error("projection index {index} is outside 1..={arity}")]
    ProjectionIndex { arity: usize, index: usize },
    #[error("composition has no inner functions")]
    EmptyComposition,
    #[error("inner functions of a composition disagree on arity ({first} vs {other})")]
    InnerArityMismatch { first: usize, other: usize },
    #[error("outer function has arity {outer} but is composed with {inners} inner functions")]
    OuterArityMismatch { outer: usize, inners: usize },
    #[error("recursion step has arity {step}, expected base arity + 2 = {expected}")]
    StepArityMismatch { step: usize, expected: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    IllFormed(#[from] IllFormed),
    #[error("function of arity {expected} applied to {got} arguments")]
    ArityMismatch { expected: usize, got: usize },
    #[error("evaluation needs more than {budget} recursion unfoldings")]
    BudgetExhausted { budget: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolynomialError {
    #[error("coefficient {coefficient} of term {term} is negative")]
    UnsupportedCoefficient { term: String, coefficient: String },
}

impl Expr {
    pub fn constant(arity: usize, value: impl Into<BigUint>) -> Self {
        Expr::Const { arity, value: value.into() }
    }

    pub fn proj(arity: usize, index: usize) -> Self {
        Expr::Proj { arity, index }
    }

    pub fn comp(outer: Expr, inners: Vec<Expr>) -> Self {
        Expr::Comp { outer: Box::new(outer), inners }
    }

    pub fn rec(base: Expr, step: Expr) -> Self {
        Expr::Rec { base: Box::new(base), step: Box::new(step) }
    }

    pub fn arity(&self) -> Result<usize, IllFormed> {
        match self {
            Expr::Const { arity, .. } => Ok(*arity),
            Expr::Succ => Ok(1),
            Expr::Proj { arity, index } => {
                if (1..=*arity).contains(index) {
                    Ok(*arity)
                } else {
                    Err(IllFormed::ProjectionIndex { arity: *arity, index: *index })
                }
            }
            Expr::Comp { outer, inners } => {
                let Some((head, rest)) = inners.split_first() else {
                    return Err(IllFormed::EmptyComposition);
                };
                let first = head.arity()?;
                for inner in rest {
                    let other = inner.arity()?;
                    if other != first {
                        return Err(IllFormed::InnerArityMismatch { first, other });
                    }
                }
                let outer = outer.arity()?;
                if outer != inners.len() {
                    return Err(IllFormed::OuterArityMismatch { outer, inners: inners.len() });
                }
                Ok(first)
            }
            Expr::Rec { base, step } => {
                let k = base.arity()?;
                let s = step.arity()?;
                if s != k + 2 {
                    return Err(IllFormed::StepArityMismatch { step: s, expected: k + 2 });
                }
                Ok(k + 1)
            }
        }
    }

    /// Evaluates with at most `budget` recursion unfoldings in total.
    pub fn eval(&self, args: &[BigUint], budget: u64) -> Result<BigUint, EvalError> {
        let expected = self.arity()?;
        if args.len() != expected {
            return Err(EvalError::ArityMismatch { expected, got: args.len() });
        }
        let mut meter = Meter { left: budget, budget };
        self.eval_checked(args, &mut meter)
    }

    /// [`Expr::eval`] on machine integers.
    pub fn eval_u64(&self, args: &[u64], budget: u64) -> Result<BigUint, EvalError> {
        let args: Vec<BigUint> = args.iter().map(|&a| BigUint::from(a)).collect();
        self.eval(&args, budget)
    }

    fn eval_checked(&self, args: &[BigUint], meter: &mut Meter) -> Result<BigUint, EvalError> {
        match self {
            Expr::Const { value, .. } => Ok(value.clone()),
            Expr::Succ => Ok(&args[0] + 1u32),
            Expr::Proj { index, .. } => Ok(args[index - 1].clone()),
            Expr::Comp { outer, inners } => {
                let mid = inners.iter().map(|inner| inner.eval_checked(args, meter)).collect::<Result<Vec<_>, _>>()?;
                outer.eval_checked(&mid, meter)
            }
            Expr::Rec { base, step } => {
                let (n, rest) = args.split_first().expect("arity checked");
                let mut acc = base.eval_checked(rest, meter)?;
                if n.is_zero() {
                    return Ok(acc);
                }
                // Anything beyond u64 can never fit the budget anyway.
                let n = n.to_u64().unwrap_or(u64::MAX);
                let mut step_args = Vec::with_capacity(args.len() + 1);
                step_args.push(BigUint::zero());
                step_args.push(BigUint::zero());
                step_args.extend_from_slice(rest);
                for i in 0..n {
                    meter.spend()?;
                    step_args[0] = BigUint::from(i);
                    step_args[1] = acc;
                    acc = step.eval_checked(&step_args, meter)?;
                }
                Ok(acc)
            }
        }
    }

    /// Upper bound on the recursion unfoldings needed to evaluate this
    /// term on any arguments `<= max_arg`, or `None` if the bound exceeds
    /// `limit`. The term must be well-formed.
    pub fn unfolding_bound(&self, max_arg: u128, limit: u128) -> Option<u128> {
        self.bounds(max_arg, limit).map(|(_, unfoldings)| unfoldings)
    }

    // (bound on the value, bound on unfoldings), both monotone in max_arg.
    fn bounds(&self, m: u128, limit: u128) -> Option<(u128, u128)> {
        let cap = |v: u128| (v <= limit).then_some(v);
        match self {
            Expr::Const { value, .. } => Some((cap(value.to_u128()?)?, 0)),
            Expr::Succ => Some((cap(m.checked_add(1)?)?, 0)),
            Expr::Proj { .. } => Some((m, 0)),
            Expr::Comp { outer, inners } => {
                let mut top = 0u128;
                let mut work = 0u128;
                for inner in inners {
                    let (v, u) = inner.bounds(m, limit)?;
                    top = top.max(v);
                    work = cap(work.checked_add(u)?)?;
                }
                let (v, u) = outer.bounds(top, limit)?;
                Some((v, cap(work.checked_add(u)?)?))
            }
            Expr::Rec { base, step } => {
                let (mut acc, mut work) = base.bounds(m, limit)?;
                for _ in 0..m {
                    let (v, u) = step.bounds(m.max(acc), limit)?;
                    acc = acc.max(v);
                    work = cap(work.checked_add(u)?.checked_add(1)?)?;
                }
                Some((acc, work))
            }
        }
    }

    /// Number of nodes in the term.
    pub fn size(&self) -> usize {
        match self {
            Expr::Const { .. } | Expr::Succ | Expr::Proj { .. } => 1,
            Expr::Comp { outer, inners } => 1 + outer.size() + inners.iter().map(Expr::size).sum::<usize>(),
            Expr::Rec { base, step } => 1 + base.size() + step.size(),
        }
    }
}

/// Concrete syntax, readable by [`parse_expr`].
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const { arity, value } => write!(f, "C[{arity},{value}]"),
            Expr::Succ => f.write_str("S"),
            Expr::Proj { arity, index } => write!(f, "P[{arity},{index}]"),
            Expr::Comp { outer, inners } => {
                write!(f, "comp({outer};")?;
                for (i, inner) in inners.iter().enumerate() {
                    let sep = if i == 0 { " " } else { ", " };
                    write!(f, "{sep}{inner}")?;
                }
                f.write_str(")")
            }
            Expr::Rec { base, step } => write!(f, "rec({base}; {step})"),
        }
    }
}

struct Meter {
    left: u64,
    budget: u64,
}

impl Meter {
    fn spend(&mut self) -> Result<(), EvalError> {
        if self.left == 0 {
            return Err(EvalError::BudgetExhausted { budget: self.budget });
        }
        self.left -= 1;
        Ok(())
    }
}

/// A term computing `p` on naturals, with `p`'s variables as arguments in order.
///
/// Built as a sum of products from [`library::add`] and [`library::mul`];
/// the zero polynomial becomes a constant 0.
pub fn polynomial_to_primrec(p: &Polynomial) -> Result<Expr, PolynomialError> {
    let k = p.variables().len();
    let mut sum: Option<Expr> = None;
    for (exponents, coefficient) in p.terms() {
        let Some(c) = coefficient.to_biguint() else {
            return Err(PolynomialError::UnsupportedCoefficient {
                term: p.monomial_name(exponents),
                coefficient: coefficient.to_string(),
            });
        };
        let mut product: Option<Expr> = None;
        for (var, &e) in exponents.iter().enumerate() {
            for _ in 0..e {
                let factor = Expr::proj(k, var + 1);
                product = Some(match product {
                    None => factor,
                    Some(acc) => Expr::comp(library::mul(), vec![acc, factor]),
                });
            }
        }
        let term = match product {
            None => Expr::constant(k, c),
            Some(monomial) if c == BigUint::from(1u32) => monomial,
            Some(monomial) => Expr::comp(library::mul(), vec![Expr::constant(k, c), monomial]),
        };
        sum = Some(match sum {
            None => term,
            Some(acc) => Expr::comp(library::add(), vec![acc, term]),
        });
    }
    Ok(sum.unwrap_or_else(|| Expr::constant(k, 0u32)))
}

#[cfg(test)]
mod tests {
    use super::library::{add, mul};
    use super::*;

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn arities() {
        assert_eq!(Expr::Succ.arity(), Ok(1));
        assert_eq!(Expr::proj(3, 2).arity(), Ok(3));
        assert_eq!(add().arity(), Ok(2));
        assert_eq!(mul().arity(), Ok(2));
        assert_eq!(Expr::constant(0, 4u32).arity(), Ok(0));
        assert_eq!(Expr::rec(Expr::constant(0, 1u32), Expr::proj(2, 2)).arity(), Ok(1));
    }

    #[test]
    fn ill_formed_terms() {
        let mismatched = Expr::comp(add(), vec![Expr::proj(1, 1), Expr::proj(2, 1)]);
        assert_eq!(mismatched.arity(), Err(IllFormed::InnerArityMismatch { first: 1, other: 2 }));
        assert_eq!(Expr::proj(2, 3).arity(), Err(IllFormed::ProjectionIndex { arity: 2, index: 3 }));
        assert_eq!(Expr::proj(2, 0).arity(), Err(IllFormed::ProjectionIndex { arity: 2, index: 0 }));
        assert_eq!(Expr::comp(Expr::Succ, vec![]).arity(), Err(IllFormed::EmptyComposition));
        assert_eq!(
            Expr::comp(Expr::Succ, vec![Expr::proj(1, 1), Expr::proj(1, 1)]).arity(),
            Err(IllFormed::OuterArityMismatch { outer: 1, inners: 2 })
        );
        assert_eq!(
            Expr::rec(Expr::proj(1, 1), Expr::proj(2, 1)).arity(),
            Err(IllFormed::StepArityMismatch { step: 2, expected: 3 })
        );
        assert!(matches!(mismatched.eval(&[n(1)], 10), Err(EvalError::IllFormed(_))));
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(add().eval_u64(&[2, 3], 100), Ok(n(5)));
        assert_eq!(mul().eval_u64(&[4, 6], 1000), Ok(n(24)));
        assert_eq!(Expr::constant(2, 7u32).eval_u64(&[100, 200], 0), Ok(n(7)));
        assert_eq!(Expr::Succ.eval_u64(&[41], 0), Ok(n(42)));
        assert_eq!(Expr::proj(3, 3).eval_u64(&[1, 2, 3], 0), Ok(n(3)));
    }

    #[test]
    fn arity_and_budget_errors() {
        assert_eq!(add().eval_u64(&[1], 10), Err(EvalError::ArityMismatch { expected: 2, got: 1 }));
        // add(n, y) unfolds n times.
        assert_eq!(add().eval_u64(&[3, 0], 3), Ok(n(3)));
        assert_eq!(add().eval_u64(&[3, 0], 2), Err(EvalError::BudgetExhausted { budget: 2 }));
        // A huge recursion argument fails fast instead of looping.
        let huge = BigUint::from(u128::MAX);
        assert!(matches!(add().eval(&[huge, n(0)], 10), Err(EvalError::BudgetExhausted { .. })));
    }

    #[test]
    fn unfolding_bound_is_sufficient() {
        for (x, y) in [(0, 0), (3, 4), (7, 7)] {
            let b = mul().unfolding_bound(7, 1 << 40).unwrap();
            assert!(mul().eval_u64(&[x, y], b as u64).is_ok());
        }
        // x^x-ish growth blows past any small limit.
        let exp = Expr::rec(Expr::constant(1, 1u32), Expr::comp(mul(), vec![Expr::proj(3, 2), Expr::proj(3, 3)]));
        assert_eq!(exp.unfolding_bound(60, 1 << 20), None);
    }

    #[test]
    fn polynomials() {
        let p = Polynomial::parse("x^2 + 1").unwrap();
        let e = polynomial_to_primrec(&p).unwrap();
        assert_eq!(e.eval_u64(&[3], 1_000), Ok(n(10)));

        let zero = polynomial_to_primrec(&Polynomial::parse("0").unwrap()).unwrap();
        assert_eq!(zero.eval(&[], 0), Ok(n(0)));

        let p = Polynomial::parse("2*x*y").unwrap();
        let e = polynomial_to_primrec(&p).unwrap();
        assert_eq!(e.eval_u64(&[3, 4], 1_000), Ok(n(24)));

        let err = polynomial_to_primrec(&Polynomial::parse("x - 1").unwrap()).unwrap_err();
        assert!(matches!(err, PolynomialError::UnsupportedCoefficient { .. }));
    }
}
