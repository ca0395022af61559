//! Bounded root search for polynomial equations, plus exact solving of
//! linear ones with the extended Euclidean algorithm.

use workbench::diophantine::{linear_family, Domain, Polynomial, Solver};

fn main() {
    let solver = Solver::default();

    let linear = Polynomial::parse("2*x1 - 3*x2 - 1").unwrap();
    println!("{linear} = 0, box [0, 20]: {:?}", solver.search_box(&linear, 20).unwrap());
    let family = linear_family(&linear).unwrap();
    println!("closed form: base {:?}, step {:?}", family.base, family.step);
    println!("exact: {:?}", solver.solve_linear(&linear).unwrap());

    let quadratic = Polynomial::parse("x1^2 - x2^2 - 3").unwrap();
    println!("\n{quadratic} = 0, box [0, 100]: {:?}", solver.search_box(&quadratic, 100).unwrap());
    let int = Solver::new(Domain::Integer);
    println!("over the integers, box [-5, 5]: {:?}", int.search_box(&quadratic, 5).unwrap());

    for text in ["2*x - 4*y - 1", "x^2 + y^2 + 1", "x^2 - 2*y^2 + 1"] {
        let p = Polynomial::parse(text).unwrap();
        println!("\n{p} = 0: {:?}", solver.solve(&p, 5).unwrap());
    }
}
