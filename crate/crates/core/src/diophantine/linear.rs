//! Exact solving of `a1*x1 + ... + ak*xk + c = 0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{DiophantineError, Domain, Polynomial, SearchResult, Solver};

/// All natural solutions of a two-variable equation, as the points
/// `base + j * step` for `j = 0, 1, ...` (up to `count` of them, or
/// forever when `count` is `None`). The first coordinate increases with `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFamily {
    pub base: Vec<BigInt>,
    pub step: Vec<BigInt>,
    pub count: Option<BigInt>,
}

impl LinearFamily {
    pub fn solutions(&self) -> impl Iterator<Item = Vec<BigInt>> + '_ {
        let mut j = BigInt::zero();
        std::iter::from_fn(move || {
            if self.count.as_ref().is_some_and(|c| &j >= c) {
                return None;
            }
            let point = self.base.iter().zip(&self.step).map(|(b, s)| b + s * &j).collect();
            j += 1;
            Some(point)
        })
    }

    /// Members with every coordinate `<= bound`, in increasing order of the first coordinate.
    pub fn within_box(&self, bound: u64) -> Vec<Vec<BigInt>> {
        let bound = BigInt::from(bound);
        self.solutions().take_while(|p| p[0] <= bound).filter(|p| p.iter().all(|v| v <= &bound)).collect()
    }
}

/// The natural-solution family of a degree-one polynomial in exactly two
/// variables that both appear. `None` when there are no natural solutions
/// or the polynomial has another shape.
pub fn linear_family(p: &Polynomial) -> Option<LinearFamily> {
    if p.variables().len() != 2 || p.degree() > 1 {
        return None;
    }
    let (a, c) = linear_parts(p);
    if a.iter().any(Zero::is_zero) {
        return None;
    }
    two_variable_family(&a[0], &a[1], &(-c))
}

/// Coefficients of `x1..xk` and the constant term.
fn linear_parts(p: &Polynomial) -> (Vec<BigInt>, BigInt) {
    let k = p.variables().len();
    let a = (0..k)
        .map(|i| {
            let mut e = vec![0; k];
            e[i] = 1;
            p.coefficient(&e)
        })
        .collect();
    (a, p.constant_term())
}

/// `(g, s, t)` with `a*s + b*t = g = gcd(a, b) >= 0`.
pub(crate) fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = r0.div_floor(&r1);
        (r0, r1) = (r1.clone(), &r0 - &q * &r1);
        (s0, s1) = (s1.clone(), &s0 - &q * &s1);
        (t0, t1) = (t1.clone(), &t0 - &q * &t1);
    }
    if r0.is_negative() {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

/// Integer solution of `sum a_i x_i = t`, assuming `gcd(a) | t`.
fn integer_witness(a: &[BigInt], t: &BigInt) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    let mut coefs: Vec<BigInt> = Vec::with_capacity(a.len());
    for ai in a {
        let (ng, s, u) = extended_gcd(&g, ai);
        for c in &mut coefs {
            *c *= &s;
        }
        coefs.push(u);
        g = ng;
    }
    if g.is_zero() {
        return vec![BigInt::zero(); a.len()];
    }
    let scale = t / &g;
    coefs.into_iter().map(|c| c * &scale).collect()
}

fn two_variable_family(a: &BigInt, b: &BigInt, t: &BigInt) -> Option<LinearFamily> {
    let (g, s, u) = extended_gcd(a, b);
    if !(t % &g).is_zero() {
        return None;
    }
    let m = t / &g;
    let (x0, y0) = (s * &m, u * &m);
    // x = x0 + bb*k, y = y0 - aa*k
    let (aa, bb) = (a / &g, b / &g);
    let mut lo: Option<BigInt> = None;
    let mut hi: Option<BigInt> = None;
    let mut tighten_lo = |v: BigInt| lo = Some(lo.take().map_or(v.clone(), |l: BigInt| l.max(v)));
    let mut tighten_hi = |v: BigInt| hi = Some(hi.take().map_or(v.clone(), |h: BigInt| h.min(v)));
    if bb.is_positive() {
        tighten_lo(ceil_div(&-&x0, &bb));
    } else {
        tighten_hi(x0.div_floor(&-&bb));
    }
    if aa.is_positive() {
        tighten_hi(y0.div_floor(&aa));
    } else {
        tighten_lo(ceil_div(&y0, &aa));
    }
    let count = match (&lo, &hi) {
        (Some(l), Some(h)) if l > h => return None,
        (Some(l), Some(h)) => Some(h - l + 1),
        _ => None,
    };
    // Orient so that x grows along the family.
    let (k0, step) = if bb.is_positive() {
        (lo.expect("x >= 0 bounds k below"), vec![bb.clone(), -&aa])
    } else {
        (hi.expect("x >= 0 bounds k above"), vec![-&bb, aa.clone()])
    };
    let base = vec![&x0 + &bb * &k0, &y0 - &aa * &k0];
    Some(LinearFamily { base, step, count })
}

impl Solver {
    /// Decides solvability of a degree-one equation.
    ///
    /// Over the integers the gcd test is exact. Over the naturals one or two
    /// active variables are decided exactly; with three or more, mixed signs
    /// are always solvable once the gcd test passes, and a single sign
    /// leaves a finite region that is scanned when it fits in `step_cap`.
    pub fn solve_linear(&self, p: &Polynomial) -> Result<SearchResult, DiophantineError> {
        let degree = p.degree();
        if degree > 1 {
            return Err(DiophantineError::DegreeTooHigh { degree });
        }
        let k = p.variables().len();
        let (a, c) = linear_parts(p);
        let t = -c;
        let active: Vec<usize> = (0..k).filter(|&i| !a[i].is_zero()).collect();
        if active.is_empty() {
            return Ok(if t.is_zero() {
                SearchResult::DecidedSolvable { witness: vec![BigInt::zero(); k] }
            } else {
                SearchResult::DecidedUnsolvable { reason: format!("the equation reduces to {} = 0", -t) }
            });
        }
        let coeffs: Vec<BigInt> = active.iter().map(|&i| a[i].clone()).collect();
        let g = coeffs.iter().fold(BigInt::zero(), |g, ai| g.gcd(ai));
        if !(&t % &g).is_zero() {
            return Ok(SearchResult::DecidedUnsolvable {
                reason: format!("gcd {g} of the coefficients does not divide {t}"),
            });
        }
        let spread = |values: Vec<BigInt>| {
            let mut witness = vec![BigInt::zero(); k];
            for (&i, v) in active.iter().zip(values) {
                witness[i] = v;
            }
            witness
        };
        if self.domain == Domain::Integer {
            let witness = spread(integer_witness(&coeffs, &t));
            return Ok(SearchResult::DecidedSolvable { witness });
        }
        match coeffs.len() {
            1 => {
                let x = &t / &coeffs[0];
                Ok(if x.is_negative() {
                    SearchResult::DecidedUnsolvable { reason: format!("{}*x = {t} forces x = {x} < 0", coeffs[0]) }
                } else {
                    SearchResult::DecidedSolvable { witness: spread(vec![x]) }
                })
            }
            2 => Ok(match two_variable_family(&coeffs[0], &coeffs[1], &t) {
                Some(family) => SearchResult::DecidedSolvable { witness: spread(family.base) },
                None => SearchResult::DecidedUnsolvable {
                    reason: "the integer solution line misses the non-negative quadrant".into(),
                },
            }),
            _ => self.many_natural(p, &coeffs, &t, spread),
        }
    }

    fn many_natural(
        &self,
        p: &Polynomial,
        coeffs: &[BigInt],
        t: &BigInt,
        spread: impl Fn(Vec<BigInt>) -> Vec<BigInt>,
    ) -> Result<SearchResult, DiophantineError> {
        let positive: Vec<usize> = (0..coeffs.len()).filter(|&i| coeffs[i].is_positive()).collect();
        let negative: Vec<usize> = (0..coeffs.len()).filter(|&i| coeffs[i].is_negative()).collect();
        if !positive.is_empty() && !negative.is_empty() {
            // Shift an integer solution along null vectors with positive
            // entries: a_p*|a_q| + a_q*a_p = 0 for a_p > 0 > a_q.
            let mut x = integer_witness(coeffs, t);
            let (p0, q0) = (positive[0], negative[0]);
            for &i in &positive {
                if x[i].is_negative() {
                    let times = ceil_div(&-&x[i], &-&coeffs[q0]);
                    x[i] += &times * -&coeffs[q0];
                    x[q0] += &times * &coeffs[i];
                }
            }
            for &j in &negative {
                if x[j].is_negative() {
                    let times = ceil_div(&-&x[j], &coeffs[p0]);
                    x[j] += &times * &coeffs[p0];
                    x[p0] += &times * -&coeffs[j];
                }
            }
            return Ok(SearchResult::DecidedSolvable { witness: spread(x) });
        }
        // One sign: normalize to positive coefficients.
        let flip = negative.len() == coeffs.len();
        let coeffs: Vec<BigInt> = coeffs.iter().map(|c| if flip { -c } else { c.clone() }).collect();
        let t = if flip { -t } else { t.clone() };
        if t.is_negative() {
            return Ok(SearchResult::DecidedUnsolvable {
                reason: "all coefficients share a sign opposite to the constant's".into(),
            });
        }
        if t.is_zero() {
            return Ok(SearchResult::DecidedSolvable { witness: spread(vec![BigInt::zero(); coeffs.len()]) });
        }
        let work = t.to_u64().and_then(|t| t.checked_mul(coeffs.len() as u64));
        match work {
            Some(w) if w <= self.step_cap => {
                let target = t.to_usize().expect("fits");
                Ok(match reachable(&coeffs, target) {
                    Some(x) => SearchResult::DecidedSolvable { witness: spread(x) },
                    None => SearchResult::DecidedUnsolvable {
                        reason: format!("no point of the finite region sum a_i*x_i = {t}, a_i > 0, is a solution"),
                    },
                })
            }
            _ => {
                let bound = self.largest_bound(p.variables().len());
                Ok(match self.search_box(p, bound)? {
                    SearchResult::AllSolutionsInBox { solutions, .. } => {
                        SearchResult::DecidedSolvable { witness: solutions[0].clone() }
                    }
                    _ => SearchResult::UnknownBeyondBound { bound },
                })
            }
        }
    }
}

/// Unbounded knapsack reachability for `sum coeffs_i * x_i = target`, all coefficients positive.
fn reachable(coeffs: &[BigInt], target: usize) -> Option<Vec<BigInt>> {
    let small: Vec<Option<usize>> = coeffs.iter().map(|c| c.to_usize().filter(|&c| c <= target)).collect();
    // last[v] = 1 + index of the coefficient used to reach v, 0 if unreached.
    let mut last = vec![0usize; target + 1];
    for v in 1..=target {
        for (i, c) in small.iter().enumerate() {
            if let Some(c) = *c {
                if c <= v && (v == c || last[v - c] != 0) {
                    last[v] = i + 1;
                    break;
                }
            }
        }
    }
    if last[target] == 0 {
        return None;
    }
    let mut x = vec![BigInt::zero(); coeffs.len()];
    let mut v = target;
    while v > 0 {
        let i = last[v] - 1;
        x[i] += 1;
        v -= small[i].expect("used");
    }
    Some(x)
}
