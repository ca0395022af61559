//! Diophantine equations `p(x1, .., xk) = 0`.
//!
//! Degree-one equations are decided exactly with the extended Euclidean
//! algorithm. Anything of higher degree gets a finite box search plus a
//! couple of syntactic sign certificates. A search that finds nothing
//! reports [`SearchResult::UnknownBeyondBound`], never "no solution".

mod linear;
mod parse;
mod search;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use linear::{linear_family, LinearFamily};
pub use parse::{parse_polynomial, PolyParseError};
pub use search::positivity_certificate;

pub const DEFAULT_STEP_CAP: u64 = 100_000_000;

/// Where solutions are looked for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Domain {
    /// Non-negative integers; boxes are `{0..=bound}^k`.
    #[default]
    Natural,
    /// All integers; boxes are `{-bound..=bound}^k`.
    Integer,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchResult {
    /// Every root inside the box, in lexicographic order. Non-empty.
    AllSolutionsInBox {
        solutions: Vec<Vec<BigInt>>,
        bound: u64,
    },
    DecidedSolvable {
        witness: Vec<BigInt>,
    },
    DecidedUnsolvable {
        reason: String,
    },
    /// Nothing in the box and no certificate either way.
    UnknownBeyondBound {
        bound: u64,
    },
}

impl SearchResult {
    /// Definite answers: a root was exhibited or solvability was decided.
    pub fn is_definite(&self) -> bool {
        !matches!(self, SearchResult::UnknownBeyondBound { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiophantineError {
    #[error("point has {got} coordinates but the polynomial has {expected} variables")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("polynomial has degree {degree}; exact solving needs degree at most 1")]
    DegreeTooHigh { degree: u32 },
    #[error("box search would visit {points} points, above the cap of {cap}")]
    ResourceLimit { points: u128, cap: u64 },
}

/// Multivariate polynomial with integer coefficients.
///
/// Terms map exponent vectors (one entry per variable) to non-zero
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    variables: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Polynomial {
    pub fn parse(text: &str) -> Result<Self, PolyParseError> {
        parse_polynomial(text)
    }

    /// Collects terms, summing repeated exponent vectors and dropping zeros.
    ///
    /// # Panics
    /// If an exponent vector's length differs from the number of variables.
    pub fn new(variables: Vec<String>, terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>) -> Self {
        let mut p = Polynomial { variables, terms: BTreeMap::new() };
        for (exps, c) in terms {
            assert_eq!(exps.len(), p.variables.len(), "exponent vector length");
            p.add_term(exps, c);
        }
        p
    }

    pub(crate) fn zero(variables: Vec<String>) -> Self {
        Polynomial { variables, terms: BTreeMap::new() }
    }

    pub(crate) fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        let entry = self.terms.entry(exps).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    /// Non-zero terms, ascending by exponent vector.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&vec![0; self.variables.len()])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximum total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn evaluate(&self, point: &[BigInt]) -> Result<BigInt, DiophantineError> {
        if point.len() != self.variables.len() {
            return Err(DiophantineError::DimensionMismatch { expected: self.variables.len(), got: point.len() });
        }
        Ok(self
            .terms
            .iter()
            .map(|(exps, c)| {
                exps.iter().zip(point).fold(c.clone(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize))
            })
            .sum())
    }

    pub fn evaluate_i64(&self, point: &[i64]) -> Result<BigInt, DiophantineError> {
        let point: Vec<BigInt> = point.iter().map(|&x| BigInt::from(x)).collect();
        self.evaluate(&point)
    }

    /// `x1^2*x2`-style name of a monomial; `1` for the constant monomial.
    pub fn monomial_name(&self, exponents: &[u32]) -> String {
        let factors: Vec<String> = self
            .variables
            .iter()
            .zip(exponents)
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        if factors.is_empty() {
            "1".into()
        } else {
            factors.join("*")
        }
    }

    pub(crate) fn neg(&self) -> Self {
        Polynomial {
            variables: self.variables.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

/// Graded order, highest degree first; parses back to the same polynomial.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (i, (exps, c)) in terms.into_iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let monomial = self.monomial_name(exps);
            if monomial == "1" {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{monomial}")?;
            } else {
                write!(f, "{magnitude}*{monomial}")?;
            }
        }
        Ok(())
    }
}

/// Solver settings shared by [`Solver::solve_linear`] and [`Solver::search_box`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Solver {
    pub domain: Domain,
    /// Most points a box search (or finite-region scan) may visit.
    pub step_cap: u64,
}

impl Default for Solver {
    fn default() -> Self {
        Solver { domain: Domain::Natural, step_cap: DEFAULT_STEP_CAP }
    }
}

impl Solver {
    pub fn new(domain: Domain) -> Self {
        Solver { domain, ..Solver::default() }
    }

    /// Box search, upgraded by the exact degree-one decision when the box
    /// comes back empty.
    pub fn solve(&self, p: &Polynomial, bound: u64) -> Result<SearchResult, DiophantineError> {
        let boxed = self.search_box(p, bound)?;
        if boxed.is_definite() || p.degree() > 1 {
            return Ok(boxed);
        }
        match self.solve_linear(p)? {
            SearchResult::UnknownBeyondBound { .. } => Ok(boxed),
            decided => Ok(decided),
        }
    }
}

/// [`Solver::solve_linear`] over the naturals.
pub fn solve_linear(p: &Polynomial) -> Result<SearchResult, DiophantineError> {
    Solver::default().solve_linear(p)
}

/// [`Solver::search_box`] over the naturals.
pub fn search_box(p: &Polynomial, bound: u64) -> Result<SearchResult, DiophantineError> {
    Solver::default().search_box(p, bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn evaluation() {
        let p = Polynomial::parse("2*x1 - 3*x2 - 1").unwrap();
        assert_eq!(p.evaluate(&ints(&[2, 1])).unwrap(), BigInt::zero());
        let q = Polynomial::parse("x1^2 - x2^2 - 3").unwrap();
        assert_eq!(q.evaluate(&ints(&[2, 1])).unwrap(), BigInt::zero());
        assert_eq!(q.evaluate(&ints(&[0, 0])).unwrap(), q.constant_term());
        assert_eq!(q.evaluate(&ints(&[1])), Err(DiophantineError::DimensionMismatch { expected: 2, got: 1 }));
    }

    #[test]
    fn evaluation_does_not_overflow() {
        let p = Polynomial::parse("x^5 - y").unwrap();
        let big = BigInt::from(10).pow(30);
        let v = p.evaluate(&[big.clone(), BigInt::one()]).unwrap();
        assert_eq!(v, big.pow(5) - 1);
    }

    #[test]
    fn display_is_canonical() {
        let p = Polynomial::parse("-1 + x2*(-3) + 2*x1").unwrap();
        assert_eq!(p.to_string(), "2*x1 - 3*x2 - 1");
        assert_eq!(Polynomial::parse("(x-y)^2").unwrap().to_string(), "x^2 - 2*x*y + y^2");
        assert_eq!(Polynomial::parse("x - x").unwrap().to_string(), "0");
    }
}
