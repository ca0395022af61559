//! The diagonal function g(n) = f_n(n) + 1, defined wherever machine n
//! halts on its own index.

use workbench::dovetail::{DiagonalValue, Dovetailer};

fn main() {
    let dovetailer = Dovetailer::default();
    // 24 is the first machine with no q0 quadruple: it halts immediately
    // and leaves the input untouched, so g(24) = 25.
    for n in [0, 12, 21, 24, 71, 72, 100] {
        match dovetailer.diagonal_value(n, 1_000).unwrap() {
            DiagonalValue::Defined { value, certificate } => {
                println!("g({n}) = {value}  (halted after {} steps)", certificate.steps)
            }
            DiagonalValue::Unknown { fuel_spent } => println!("g({n}) unknown after {fuel_spent} steps"),
        }
    }
}
