//! The machine enumeration: group k holds every deterministic machine with
//! exactly k quadruples over states q0..q(2k), listed in a fixed order.

use workbench::enumerate::{group_size, group_start, index_of};
use workbench::Enumeration;

fn main() {
    let e = Enumeration::default();
    for k in 1..=4 {
        println!("group {k}: starts at {:>12}, {:>12} machines", group_start(k), group_size(k));
    }

    println!();
    for (n, machine) in e.iter_from(0).take(6).enumerate() {
        print!("#{n}: {machine}");
    }

    for n in [12, 21, 24, 72, 1_000_000] {
        let machine = e.machine_at(n).expect("within budget");
        assert_eq!(index_of(&machine), Some(n));
        print!("\nmachine {n}:\n{machine}");
    }
}
