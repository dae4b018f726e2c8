//! Counting and isolating distinct real roots.
//!
//! Two independent counts are available for a half-open interval `(a, b]`:
//! the classical `V(a) - V(b)` over the canonical Sturm chain, and
//! `q(S(a)) - q(S(b))` where `q` is the negative index of inertia of the
//! Sturm matrix. The second needs no hypothesis on the endpoints.

use std::fmt;

use num_traits::{One, Zero};

use crate::chain::SturmChain;
use crate::error::{Error, Result};
use crate::inertia::{is_normal, q_from_normal_sequence};
use crate::matrix::SturmMatrix;
use crate::poly::{int, Polynomial, Rational};

/// Half-open interval `(lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo < hi {
            Ok(Self { lo, hi })
        } else {
            Err(Error::EmptyInterval { lo: Box::new(lo), hi: Box::new(hi) })
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x <= &self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}]", self.lo, self.hi)
    }
}

/// Negative inertia of the Sturm matrix of a fixed pair `(f, g)` at
/// arbitrary points. The trailing minors are computed symbolically once.
#[derive(Clone, Debug)]
pub struct InertiaCounter {
    chain: SturmChain,
    matrix: SturmMatrix,
    minors: Vec<Polynomial>,
}

impl InertiaCounter {
    pub fn new(f: &Polynomial, g: &Polynomial) -> Result<Self> {
        Ok(Self::from_chain(SturmChain::new(f, g)?))
    }

    pub fn canonical(f: &Polynomial) -> Result<Self> {
        Ok(Self::from_chain(SturmChain::canonical(f)?))
    }

    pub fn from_chain(chain: SturmChain) -> Self {
        Self::from_parts(chain.clone(), SturmMatrix::from_chain(&chain))
    }

    /// Pairs a chain with an arbitrary matrix. Used to inject faults when
    /// exercising the cross-checks.
    #[doc(hidden)]
    pub fn from_parts(chain: SturmChain, matrix: SturmMatrix) -> Self {
        let minors = matrix.trailing_minors();
        Self {
            chain,
            matrix,
            minors,
        }
    }

    pub fn chain(&self) -> &SturmChain {
        &self.chain
    }

    pub fn matrix(&self) -> &SturmMatrix {
        &self.matrix
    }

    /// `D_1..D_m` as polynomials.
    pub fn minors(&self) -> &[Polynomial] {
        &self.minors
    }

    /// `q(S(a))` by congruence diagonalization of the evaluated matrix.
    pub fn q_oracle(&self, a: &Rational) -> usize {
        self.matrix.eval(a).to_sym().inertia().q
    }

    /// `q(S(a))`. When the trailing minors at `a` form a normal sequence the
    /// minor-sign formula is used, otherwise the congruence oracle. Debug
    /// builds cross-check the formula against the oracle.
    pub fn q_at(&self, a: &Rational) -> usize {
        let values: Vec<Rational> = self.minors.iter().map(|d| d.eval(a)).collect();
        let m = values.len();
        // unit off-diagonals force rank >= m - 1
        let rank = if values[m - 1].is_zero() { m - 1 } else { m };
        if is_normal(&values, rank) {
            let q = q_from_normal_sequence(&values, rank).expect("checked normal");
            debug_assert_eq!(q, self.q_oracle(a), "minor formula disagrees at {a}");
            q
        } else {
            self.q_oracle(a)
        }
    }
}

/// `q(S_{f,g}(a))`, valid at every point including common roots.
pub fn q_at(f: &Polynomial, g: &Polynomial, a: &Rational) -> Result<usize> {
    Ok(InertiaCounter::new(f, g)?.q_at(a))
}

/// True when `a` is a root of `f` of multiplicity at least two.
pub fn is_multiple_root(f: &Polynomial, a: &Rational) -> Result<bool> {
    if !f.eval(a).is_zero() {
        return Ok(false);
    }
    Ok(f.gcd(&f.derivative())?.eval(a).is_zero())
}

/// Classical count `V(a) - V(b)`. Fails when an endpoint is a multiple root.
pub fn count_roots_variation(f: &Polynomial, a: &Rational, b: &Rational) -> Result<usize> {
    let iv = Interval::new(a.clone(), b.clone())?;
    let chain = SturmChain::canonical(f)?;
    for end in [iv.lo(), iv.hi()] {
        if is_multiple_root(f, end)? {
            return Err(Error::MultipleRootEndpoint(Box::new(end.clone())));
        }
    }
    let (va, vb) = (chain.variation_at(a), chain.variation_at(b));
    Ok(va.saturating_sub(vb))
}

/// Inertia count `q(S(a)) - q(S(b))` with `g = f'`. Any endpoints.
pub fn count_roots_inertia(f: &Polynomial, a: &Rational, b: &Rational) -> Result<usize> {
    let iv = Interval::new(a.clone(), b.clone())?;
    let counter = InertiaCounter::canonical(f)?;
    Ok(inertia_count(&counter, &iv))
}

fn inertia_count(counter: &InertiaCounter, iv: &Interval) -> usize {
    let (qa, qb) = (counter.q_at(iv.lo()), counter.q_at(iv.hi()));
    qa.saturating_sub(qb)
}

/// Distinct real roots, counted on `(-M, M]` for the Cauchy bound `M`.
pub fn count_all_roots(f: &Polynomial) -> Result<usize> {
    let bound = f.cauchy_bound()?;
    count_roots_inertia(f, &-bound.clone(), &bound)
}

/// Both counts over `(a, b]` side by side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootCountReport {
    pub count_variation: Option<usize>,
    pub count_inertia: usize,
    pub qa: usize,
    pub qb: usize,
}

impl RootCountReport {
    /// `None` when the classical count was not applicable.
    pub fn agreement(&self) -> Option<bool> {
        self.count_variation.map(|v| v == self.count_inertia)
    }
}

/// Runs both methods. The classical one is left out (not an error) when an
/// endpoint is a multiple root.
pub fn count_report(counter: &InertiaCounter, f: &Polynomial, iv: &Interval) -> Result<RootCountReport> {
    let (qa, qb) = (counter.q_at(iv.lo()), counter.q_at(iv.hi()));
    let count_variation = match count_roots_variation(f, iv.lo(), iv.hi()) {
        Ok(v) => Some(v),
        Err(Error::MultipleRootEndpoint(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(RootCountReport {
        count_variation,
        count_inertia: qa.saturating_sub(qb),
        qa,
        qb,
    })
}

/// Disjoint half-open intervals, one per distinct real root, in increasing
/// order. Bisects `(-M, M]` at exact midpoints until each piece counts at
/// most one root.
pub fn isolate_roots(f: &Polynomial) -> Result<Vec<Interval>> {
    let counter = InertiaCounter::canonical(f)?;
    let bound = f.cauchy_bound()?;
    let lo = -bound.clone();
    let (q_lo, q_hi) = (counter.q_at(&lo), counter.q_at(&bound));
    let mut out = Vec::new();
    let mut stack = vec![(lo, q_lo, bound, q_hi)];
    while let Some((lo, q_lo, hi, q_hi)) = stack.pop() {
        match q_lo.saturating_sub(q_hi) {
            0 => {}
            1 => out.push(Interval { lo, hi }),
            _ => {
                let mid = (&lo + &hi) / int(2);
                let q_mid = counter.q_at(&mid);
                // right half first so the left half pops first
                stack.push((mid.clone(), q_mid, hi, q_hi));
                stack.push((lo, q_lo, mid, q_mid));
            }
        }
    }
    Ok(out)
}

/// Outcome of [`structure_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    /// Common value of `q(S(x))` on each open inter-root interval, from
    /// `(-inf, a_1)` to `(a_k, +inf)`.
    pub interval_constants: Vec<usize>,
    /// `q(S(a_i))` at each root.
    pub root_values: Vec<usize>,
    /// Human-readable failures naming the offending sample points.
    pub violations: Vec<String>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Samples `q(S_{f,f'}(x))` around the known distinct real roots of `f`
/// (sorted ascending) and checks that it is constant between roots, drops
/// by exactly one across each root, and at each root equals the value just
/// right of it and one less than the value just left of it.
pub fn structure_check(f: &Polynomial, roots: &[Rational]) -> Result<StructureReport> {
    if roots.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::UnsortedRoots);
    }
    let counter = InertiaCounter::canonical(f)?;
    let bound = f.cauchy_bound()?;
    let (lo, hi) = (-bound.clone(), bound);

    let mut report = StructureReport {
        interval_constants: Vec::new(),
        root_values: Vec::new(),
        violations: Vec::new(),
    };
    for r in roots {
        if !f.eval(r).is_zero() {
            report.violations.push(format!("{r} is not a root of {f}"));
        }
    }
    if !report.passed() {
        return Ok(report);
    }

    // epsilon: a quarter of the smallest gap between roots and bounds, capped at 1/4
    let mut fence = Vec::with_capacity(roots.len() + 2);
    fence.push(lo.clone());
    fence.extend(roots.iter().cloned());
    fence.push(hi.clone());
    let eps = fence
        .windows(2)
        .map(|w| &w[1] - &w[0])
        .fold(Rational::one(), |acc, g| if g < acc { g } else { acc })
        / int(4);

    for (i, w) in fence.windows(2).enumerate() {
        let (left, right) = (&w[0], &w[1]);
        let mut points = vec![left + &eps, (left + right) / int(2), right - &eps];
        if i == 0 {
            points.insert(0, left.clone());
        }
        if i + 1 == fence.len() - 1 {
            points.push(right.clone());
        }
        let values: Vec<usize> = points.iter().map(|x| counter.q_at(x)).collect();
        if values.iter().any(|&v| v != values[0]) {
            let pairs: Vec<String> = points
                .iter()
                .zip(&values)
                .map(|(x, v)| format!("q({x})={v}"))
                .collect();
            report.violations.push(format!(
                "q not constant on ({left}, {right}): {}",
                pairs.join(", ")
            ));
        }
        report.interval_constants.push(values[0]);
    }

    for (i, c) in roots.iter().enumerate() {
        let at = counter.q_at(c);
        report.root_values.push(at);
        let (before, after) = (report.interval_constants[i], report.interval_constants[i + 1]);
        if before != after + 1 {
            report.violations.push(format!(
                "crossing root {c}: q drops from {before} to {after}, expected a drop of 1"
            ));
        }
        let (left, right) = (c - &eps, c + &eps);
        let (ql, qr) = (counter.q_at(&left), counter.q_at(&right));
        if ql != at + 1 || qr != at {
            report.violations.push(format!(
                "at root {c}: q({left})={ql}, q({c})={at}, q({right})={qr}; expected left = at + 1 and right = at"
            ));
        }
    }
    Ok(report)
}
