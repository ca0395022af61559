//! Decimal digits of pi, and the partial function "where does the first
//! run of `x` consecutive 5s start".
//!
//! Digits come from Machin's formula `pi = 16 atan(1/5) - 4 atan(1/239)`
//! evaluated in fixed point with guard digits. The truncation error is
//! bounded by the number of series terms, so when the guard digits are too
//! close to a digit boundary to be sure, the computation is repeated with
//! more guard digits. Every returned digit is therefore exact.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

pub const DEFAULT_PRECISION_CAP: usize = 1_000_000;
const MIN_GUARD_DIGITS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PiError {
    #[error("{requested} digits requested, above the precision cap of {cap}")]
    ResourceLimit { requested: usize, cap: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Decimal digits of pi after the point; `digits[0]` is position 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitStream {
    digits: Vec<u8>,
    precision: usize,
}

impl DigitStream {
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Number of digits guaranteed correct (all of them).
    pub fn precision(&self) -> usize {
        self.precision
    }

    /// Digit at 1-based position `pos`.
    pub fn digit(&self, pos: usize) -> Option<u8> {
        pos.checked_sub(1).and_then(|i| self.digits.get(i).copied())
    }

    /// 1-based position where the first run of at least `x` consecutive
    /// `digit`s begins.
    pub fn first_run(&self, digit: u8, x: usize) -> Option<usize> {
        let mut run = 0;
        for (i, &d) in self.digits.iter().enumerate() {
            run = if d == digit { run + 1 } else { 0 };
            if run == x {
                return Some(i + 2 - x);
            }
        }
        None
    }
}

impl fmt::Display for DigitStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// First `count` digits of pi after the decimal point.
pub fn pi_digits(count: usize) -> Result<DigitStream, PiError> {
    pi_digits_capped(count, DEFAULT_PRECISION_CAP)
}

pub fn pi_digits_capped(count: usize, cap: usize) -> Result<DigitStream, PiError> {
    if count > cap {
        return Err(PiError::ResourceLimit { requested: count, cap });
    }
    let mut guard = MIN_GUARD_DIGITS;
    loop {
        if let Some(digits) = machin(count, guard) {
            return Ok(DigitStream { digits, precision: count });
        }
        guard *= 2;
    }
}

/// Digits computed with `guard` extra digits, or `None` if the guard digits
/// cannot rule out a carry into the requested ones.
fn machin(count: usize, guard: usize) -> Option<Vec<u8>> {
    let scale = num_traits::pow(BigUint::from(10u32), count + guard);
    let (a, terms_a) = arctan_inverse(5, &scale);
    let (b, terms_b) = arctan_inverse(239, &scale);
    // Each series term truncates by less than one unit; the multipliers
    // scale that up. Borrow a few units on top for safety.
    let error = BigUint::from(16 * (terms_a + 2) + 4 * (terms_b + 2));
    let approx = a * 16u32 - b * 4u32;
    let unit = num_traits::pow(BigUint::from(10u32), guard);
    let tail = &approx % &unit;
    if tail < error || tail + &error >= unit {
        return None;
    }
    let truncated = approx / unit;
    let text = truncated.to_str_radix(10);
    debug_assert!(text.starts_with('3'));
    Some(text.bytes().skip(1).map(|b| b - b'0').collect())
}

/// `scale * atan(1/x)` by the alternating series, truncating every term.
/// Returns the sum and the number of terms used.
fn arctan_inverse(x: u32, scale: &BigUint) -> (BigUint, usize) {
    let x2 = x * x;
    let mut power = scale / x;
    let mut positive = power.clone();
    let mut negative = BigUint::zero();
    let mut k: u64 = 1;
    let mut terms = 1;
    loop {
        power /= x2;
        if power.is_zero() {
            break;
        }
        let term = &power / (2 * k + 1);
        if k % 2 == 1 {
            negative += term;
        } else {
            positive += term;
        }
        k += 1;
        terms += 1;
    }
    debug_assert!(positive > negative || scale.is_one());
    (positive - negative, terms)
}

/// Outcome of [`run_position`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunPosition {
    Found(usize),
    UnknownBeyondLimit(usize),
}

impl fmt::Display for RunPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunPosition::Found(p) => write!(f, "position={p}"),
            RunPosition::UnknownBeyondLimit(limit) => write!(f, "unknown beyond {limit}"),
        }
    }
}

/// Position of the first digit of the first run of at least `x` fives
/// among the first `digit_limit` digits after the point.
pub fn run_position(x: usize, digit_limit: usize) -> Result<RunPosition, PiError> {
    run_position_capped(x, digit_limit, DEFAULT_PRECISION_CAP)
}

pub fn run_position_capped(x: usize, digit_limit: usize, cap: usize) -> Result<RunPosition, PiError> {
    if x == 0 {
        return Err(PiError::InvalidArgument("run length must be at least 1".into()));
    }
    let stream = pi_digits_capped(digit_limit, cap)?;
    Ok(match stream.first_run(5, x) {
        Some(p) => RunPosition::Found(p),
        None => RunPosition::UnknownBeyondLimit(digit_limit),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const REFERENCE_50: &str = "14159265358979323846264338327950288419716939937510";

    #[test]
    fn first_digits() {
        assert_eq!(pi_digits(10).unwrap().digits(), &[1, 4, 1, 5, 9, 2, 6, 5, 3, 5]);
        assert_eq!(pi_digits(50).unwrap().to_string(), REFERENCE_50);
        assert!(pi_digits(0).unwrap().digits().is_empty());
        assert_eq!(pi_digits(1).unwrap().digit(1), Some(1));
    }

    #[test]
    fn prefix_stability() {
        let short = pi_digits(50).unwrap();
        let long = pi_digits(100).unwrap();
        assert_eq!(short.digits(), &long.digits()[..50]);
        assert_eq!(long.precision(), 100);
    }

    #[test]
    fn cap() {
        assert_eq!(pi_digits_capped(11, 10), Err(PiError::ResourceLimit { requested: 11, cap: 10 }));
    }

    #[test]
    fn runs_of_fives() {
        assert_eq!(run_position(1, 10), Ok(RunPosition::Found(4)));
        assert_eq!(run_position(1, 10_000), Ok(RunPosition::Found(4)));
        assert_eq!(run_position(2, 100), Ok(RunPosition::UnknownBeyondLimit(100)));
        assert_eq!(run_position(2, 200), Ok(RunPosition::Found(130)));
        assert_eq!(run_position(3, 200), Ok(RunPosition::Found(177)));
        assert!(matches!(run_position(0, 10), Err(PiError::InvalidArgument(_))));
        assert_eq!(RunPosition::Found(4).to_string(), "position=4");
        assert_eq!(RunPosition::UnknownBeyondLimit(100).to_string(), "unknown beyond 100");
    }

    #[test]
    fn first_run_positions() {
        let s = DigitStream { digits: vec![5, 1, 5, 5, 5, 0], precision: 6 };
        assert_eq!(s.first_run(5, 1), Some(1));
        assert_eq!(s.first_run(5, 2), Some(3));
        assert_eq!(s.first_run(5, 3), Some(3));
        assert_eq!(s.first_run(5, 4), None);
    }
}
