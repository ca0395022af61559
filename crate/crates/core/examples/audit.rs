//! Any total "halting decider" is wrong somewhere. This hunts for a diagonal
//! pair (n, n) where a candidate decider says "diverges" but the machine
//! visibly halts.

use workbench::dovetail::{BudgetDecider, Claim, Dovetailer};
use workbench::Enumeration;

fn main() {
    let dovetailer = Dovetailer::default();

    let pessimist = |_n: u64, _x: u64| Claim::Diverges;
    let cx = dovetailer.audit(&pessimist, 200, 1_000).unwrap().expect("refuted");
    println!("always-diverges is wrong on machine {}: {:?}", cx.n, cx.certificate);

    for fuel in [5, 20, 100] {
        let decider = BudgetDecider { enumeration: Enumeration::default(), fuel };
        match dovetailer.audit(&decider, 2_000, 10 * fuel).unwrap() {
            Some(cx) => {
                println!("halts-within-{fuel} is wrong on machine {}: halts after {} steps", cx.n, cx.certificate.steps)
            }
            None => println!("halts-within-{fuel}: no refutation found up to machine 2000"),
        }
    }
}
