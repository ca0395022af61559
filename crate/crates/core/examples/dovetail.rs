//! Semi-deciding the halting set by dovetailing over (machine, input) pairs.

use workbench::dovetail::Dovetailer;
use workbench::{Enumeration, Verdict};

fn main() {
    let dovetailer = Dovetailer::default();
    let emissions = dovetailer.dovetail(25).expect("within round cap");
    println!("{} halting pairs witnessed in 25 rounds", emissions.len());
    for e in emissions.iter().filter(|e| e.certificate.steps > 5).take(8) {
        let c = e.certificate;
        println!(
            "round {:>2}: machine {:>2} on {:>2} halts after {:>2} steps with output {} (code {})",
            e.round,
            c.machine_index,
            c.input,
            c.steps,
            c.output,
            c.code().0
        );
    }
    let enumeration = Enumeration::default();
    assert!(emissions.iter().all(|e| e.certificate.replay(&enumeration).unwrap()));

    // The loop machine never shows up, whatever the fuel: the answer is only ever "unknown".
    for fuel in [10, 10_000] {
        match dovetailer.membership_in_k(12, 1, fuel).unwrap() {
            Verdict::Halts { certificate } => println!("halts: {certificate:?}"),
            Verdict::Unknown { fuel_spent } => println!("machine 12 on 1: unknown after {fuel_spent} steps"),
        }
    }
}
