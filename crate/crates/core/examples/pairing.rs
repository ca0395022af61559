//! Cantor pairing: a computable bijection between pairs and naturals.

use num_bigint::BigUint;
use workbench::pairing::{cantor_pair, cantor_unpair};

fn main() {
    for z in 0u32..15 {
        let (n, x) = cantor_unpair(&BigUint::from(z));
        println!("{z:>2} <-> ({n}, {x})");
    }
    let big = cantor_pair(u128::MAX, 7u32);
    println!("pair(2^128 - 1, 7) = {big}");
    assert_eq!(cantor_unpair(&big), (BigUint::from(u128::MAX), BigUint::from(7u32)));
}
