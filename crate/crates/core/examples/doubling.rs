//! A twelve-quadruple machine computing x -> 2x, with a short trace.

use workbench::tm::{trace, trace_line};
use workbench::{parse_machine, run, RunOutcome};

fn main() {
    let machine = parse_machine(include_str!("../machines/double.tm")).expect("valid machine");
    println!("{} quadruples", machine.len());
    for x in 0..=20 {
        match run(&machine, &[x], 10_000) {
            RunOutcome::Halted { output, steps } => println!("{x:>2} -> {output:>2}  ({steps} steps)"),
            other => println!("{x:>2}: {other}"),
        }
    }

    println!("\ntrace on input 1:");
    for (i, config) in trace(&machine, &[1], 100, 1_000).expect("short run").iter().enumerate() {
        println!("  {}", trace_line(i, config));
    }
}
