//! The one-quadruple machine `q0 1 P q0` reads a 1, prints a 1, and stays
//! in q0 forever. No fuel is ever enough.

use workbench::{parse_machine, run};

fn main() {
    let machine = parse_machine(include_str!("../machines/loop.tm")).expect("valid machine");
    print!("{machine}");
    for fuel in [10, 1_000, 1_000_000] {
        println!("fuel {fuel:>9}: {}", run(&machine, &[1], fuel));
    }
    // On the blank tape it reads a 0 and halts at once.
    println!("input 0: {}", run(&machine, &[0], 10));
}
