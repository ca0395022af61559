//! Primitive recursive arithmetic, built from constants, successor,
//! projections, composition and recursion.

use workbench::diophantine::Polynomial;
use workbench::primrec::{library, parse_expr, polynomial_to_primrec};

fn main() {
    let add = library::add();
    let mul = library::mul();
    println!("add = {add}\nmul = {mul}");
    println!("add(19, 23) = {}", add.eval_u64(&[19, 23], 1_000).unwrap());
    println!("mul(6, 7)   = {}", mul.eval_u64(&[6, 7], 1_000).unwrap());
    println!("2^10        = {}", library::pow().eval_u64(&[10, 2], 1_000_000).unwrap());
    println!("8 monus 3   = {}", library::monus().eval_u64(&[3, 8], 1_000).unwrap());

    let parsed = parse_expr("comp(S; comp(S; P[1,1]))").unwrap();
    println!("x + 2 at 40 = {}", parsed.eval_u64(&[40], 10).unwrap());

    // Budgets count recursion unfoldings.
    println!("mul(1000, 1000) with budget 100: {}", mul.eval_u64(&[1000, 1000], 100).unwrap_err());

    let p = Polynomial::parse("x^2 + 3*x*y + 2").unwrap();
    let term = polynomial_to_primrec(&p).unwrap();
    println!("\n{p} as a term of size {}", term.size());
    for (x, y) in [(0, 0), (2, 3), (5, 1)] {
        println!("  at ({x}, {y}): {}", term.eval_u64(&[x, y], 1_000_000).unwrap());
    }
}
