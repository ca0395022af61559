use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::{DiophantineError, Domain, Polynomial, SearchResult, Solver};

/// A syntactic proof that `p` never vanishes on the domain, if one applies.
///
/// Over the naturals: every coefficient non-negative and a positive
/// constant term (or the same for `-p`). Over the integers the exponents
/// must additionally all be even.
pub fn positivity_certificate(p: &Polynomial, domain: Domain) -> Option<String> {
    let holds = |q: &Polynomial| {
        q.constant_term().is_positive()
            && q.terms()
                .all(|(exps, c)| !c.is_negative() && (domain == Domain::Natural || exps.iter().all(|e| e.is_even())))
    };
    let what = match domain {
        Domain::Natural => "non-negative coefficients",
        Domain::Integer => "non-negative coefficients on even powers",
    };
    if holds(p) {
        Some(format!("p > 0 everywhere: {what} and a positive constant term"))
    } else if holds(&p.neg()) {
        Some(format!("p < 0 everywhere: -p has {what} and a positive constant term"))
    } else {
        None
    }
}

impl Solver {
    /// Largest bound whose box fits in `step_cap` points.
    pub fn largest_bound(&self, dims: usize) -> u64 {
        let fits = |b: u64| self.box_points(dims, b) <= self.step_cap as u128;
        let (mut lo, mut hi) = (0u64, self.step_cap);
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            if fits(mid) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        lo
    }

    fn box_points(&self, dims: usize, bound: u64) -> u128 {
        let side = match self.domain {
            Domain::Natural => bound as u128 + 1,
            Domain::Integer => 2 * bound as u128 + 1,
        };
        side.checked_pow(dims as u32).unwrap_or(u128::MAX)
    }

    /// Scans every point of the box in lexicographic order.
    ///
    /// A sign certificate short-circuits to `DecidedUnsolvable`. Otherwise
    /// roots found are returned as `AllSolutionsInBox`; an empty box gives
    /// `UnknownBeyondBound`.
    pub fn search_box(&self, p: &Polynomial, bound: u64) -> Result<SearchResult, DiophantineError> {
        if let Some(reason) = positivity_certificate(p, self.domain) {
            return Ok(SearchResult::DecidedUnsolvable { reason });
        }
        let dims = p.variables().len();
        let points = self.box_points(dims, bound);
        if points > self.step_cap as u128 {
            return Err(DiophantineError::ResourceLimit { points, cap: self.step_cap });
        }
        let (lo, hi) = match self.domain {
            Domain::Natural => (0i128, bound as i128),
            Domain::Integer => (-(bound as i128), bound as i128),
        };
        let compiled = Compiled::new(p);
        let solutions: Vec<Vec<BigInt>> = if dims == 0 {
            if p.is_zero() {
                vec![vec![]]
            } else {
                vec![]
            }
        } else {
            (lo..=hi)
                .into_par_iter()
                .map(|first| {
                    let mut found = Vec::new();
                    let mut point = vec![lo; dims];
                    point[0] = first;
                    loop {
                        if compiled.is_root(&point) {
                            found.push(point.iter().map(|&v| BigInt::from(v)).collect());
                        }
                        // Odometer over coordinates 1..dims.
                        let mut i = dims;
                        loop {
                            i -= 1;
                            if i == 0 {
                                return found;
                            }
                            if point[i] < hi {
                                point[i] += 1;
                                break;
                            }
                            point[i] = lo;
                        }
                    }
                })
                .flatten()
                .collect()
        };
        Ok(if solutions.is_empty() {
            SearchResult::UnknownBeyondBound { bound }
        } else {
            SearchResult::AllSolutionsInBox { solutions, bound }
        })
    }
}

/// Evaluation with an `i128` fast path and a `BigInt` fallback on overflow.
struct Compiled<'a> {
    poly: &'a Polynomial,
    small: Option<Vec<(Vec<u32>, i128)>>,
}

impl<'a> Compiled<'a> {
    fn new(poly: &'a Polynomial) -> Self {
        let small = poly.terms().map(|(e, c)| c.to_i128().map(|c| (e.to_vec(), c))).collect::<Option<Vec<_>>>();
        Compiled { poly, small }
    }

    fn is_root(&self, point: &[i128]) -> bool {
        if let Some(v) = self.small.as_ref().and_then(|terms| eval_small(terms, point)) {
            return v == 0;
        }
        let big: Vec<BigInt> = point.iter().map(|&v| BigInt::from(v)).collect();
        self.poly.evaluate(&big).expect("dimension").is_zero()
    }
}

fn eval_small(terms: &[(Vec<u32>, i128)], point: &[i128]) -> Option<i128> {
    let mut sum: i128 = 0;
    for (exps, c) in terms {
        let mut term = *c;
        for (&e, &x) in exps.iter().zip(point) {
            if e > 0 {
                term = term.checked_mul(x.checked_pow(e)?)?;
            }
        }
        sum = sum.checked_add(term)?;
    }
    Some(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    fn points(v: &[[i64; 2]]) -> Vec<Vec<BigInt>> {
        v.iter().map(|p| p.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn difference_of_squares() {
        let r = Solver::default().search_box(&poly("x1^2 - x2^2 - 3"), 100).unwrap();
        assert_eq!(r, SearchResult::AllSolutionsInBox { solutions: points(&[[2, 1]]), bound: 100 });
    }

    #[test]
    fn linear_box() {
        let r = Solver::default().search_box(&poly("2*x1 - 3*x2 - 1"), 20).unwrap();
        let expected = points(&[[2, 1], [5, 3], [8, 5], [11, 7], [14, 9], [17, 11], [20, 13]]);
        assert_eq!(r, SearchResult::AllSolutionsInBox { solutions: expected, bound: 20 });
    }

    #[test]
    fn certificates() {
        for bound in [0, 5, 1000] {
            assert!(matches!(
                Solver::default().search_box(&poly("x1^2 + 1"), bound).unwrap(),
                SearchResult::DecidedUnsolvable { .. }
            ));
        }
        let int = Solver::new(Domain::Integer);
        assert!(matches!(int.search_box(&poly("-x^2 - y^4 - 2"), 3).unwrap(), SearchResult::DecidedUnsolvable { .. }));
        // Odd powers can go negative over the integers.
        assert!(positivity_certificate(&poly("x^3 + 1"), Domain::Integer).is_none());
        assert!(positivity_certificate(&poly("x^3 + 1"), Domain::Natural).is_some());
        assert!(positivity_certificate(&poly("x^2"), Domain::Natural).is_none());
    }

    #[test]
    fn unknown_when_nothing_found() {
        // x^2 - 2y^2 = -1: roots (1, 1), (7, 5), (41, 29), ...
        let p = poly("x^2 - 2*y^2 + 1");
        let s = Solver::default();
        assert_eq!(s.search_box(&p, 0).unwrap(), SearchResult::UnknownBeyondBound { bound: 0 });
        assert_eq!(
            s.search_box(&p, 6).unwrap(),
            SearchResult::AllSolutionsInBox { solutions: points(&[[1, 1]]), bound: 6 }
        );
        assert_eq!(
            s.search_box(&p, 7).unwrap(),
            SearchResult::AllSolutionsInBox { solutions: points(&[[1, 1], [7, 5]]), bound: 7 }
        );
    }

    #[test]
    fn integer_box_is_symmetric_and_ordered() {
        let r = Solver::new(Domain::Integer).search_box(&poly("x^2 - y^2 - 3"), 5).unwrap();
        let expected = points(&[[-2, -1], [-2, 1], [2, -1], [2, 1]]);
        assert_eq!(r, SearchResult::AllSolutionsInBox { solutions: expected, bound: 5 });
    }

    #[test]
    fn overflowing_values_fall_back_to_bigint() {
        // 4^70 does not fit in an i128.
        let r = Solver::default().search_box(&poly("x^70 - y^70"), 4).unwrap();
        let diagonal: Vec<[i64; 2]> = (0..=4).map(|v| [v, v]).collect();
        assert_eq!(r, SearchResult::AllSolutionsInBox { solutions: points(&diagonal), bound: 4 });
    }

    #[test]
    fn step_cap() {
        let s = Solver { step_cap: 100, ..Solver::default() };
        assert!(matches!(
            s.search_box(&poly("x + y + z - 7"), 4),
            Err(DiophantineError::ResourceLimit { points: 125, cap: 100 })
        ));
        assert_eq!(s.largest_bound(3), 3);
        assert_eq!(Solver { step_cap: 1000, ..s }.largest_bound(3), 9);
        assert_eq!(Solver { step_cap: 25, domain: Domain::Integer }.largest_bound(2), 2);
    }

    #[test]
    fn constants() {
        assert_eq!(
            Solver::default().search_box(&poly("0"), 3).unwrap(),
            SearchResult::AllSolutionsInBox { solutions: vec![vec![]], bound: 3 }
        );
        assert!(matches!(Solver::default().search_box(&poly("7"), 3).unwrap(), SearchResult::DecidedUnsolvable { .. }));
    }
}
