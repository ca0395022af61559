//! Where does the first run of x consecutive 5s start in the decimal
//! expansion of pi? Defined for each x we can find; "unknown" beyond the
//! digits computed.

use workbench::pi::{pi_digits, run_position};

fn main() {
    println!("3.{}", pi_digits(60).unwrap());
    for (x, limit) in [(1, 100), (2, 100), (2, 1_000), (3, 1_000), (4, 10_000), (5, 10_000)] {
        println!("x = {x}, {limit:>5} digits: {}", run_position(x, limit).unwrap());
    }
}
