//! Cantor pairing `N x N <-> N`.

use num_bigint::BigUint;
use num_traits::One;

/// Cantor code of a pair `(n, x)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairCode(pub BigUint);

impl PairCode {
    pub fn of(n: impl Into<BigUint>, x: impl Into<BigUint>) -> Self {
        PairCode(cantor_pair(n, x))
    }

    pub fn unpair(&self) -> (BigUint, BigUint) {
        cantor_unpair(&self.0)
    }
}

impl std::fmt::Display for PairCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// `(n + x)(n + x + 1) / 2 + x`
pub fn cantor_pair(n: impl Into<BigUint>, x: impl Into<BigUint>) -> BigUint {
    let (n, x) = (n.into(), x.into());
    let w = &n + &x;
    (&w * (&w + 1u32)) / 2u32 + x
}

pub fn cantor_unpair(z: &BigUint) -> (BigUint, BigUint) {
    // w = floor((sqrt(8z + 1) - 1) / 2) is the diagonal holding z.
    let w = ((z * 8u32 + BigUint::one()).sqrt() - 1u32) / 2u32;
    let t = (&w * (&w + 1u32)) / 2u32;
    let x = z - t;
    let n = &w - &x;
    (n, x)
}
