//! Inertia of real symmetric matrices over the rationals.
//!
//! Three routes are provided and meant to be checked against each other:
//! exact congruence diagonalization (the ground truth), the counting formula
//! over a normal principal minor sequence, and the one-step bordered update.

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{sign, Rational};

/// Square symmetric matrix with rational entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl SymMatrix {
    /// Rejects ragged or asymmetric input.
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        for i in 0..n {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::poly::int(v)).collect())
                .collect(),
        )
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    /// Symmetric tridiagonal matrix with the given diagonal and the constant
    /// `off` on both neighbouring diagonals.
    pub fn tridiagonal(diag: &[Rational], off: &Rational) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d.clone();
            if i + 1 < n {
                m.entries[i * n + i + 1] = off.clone();
                m.entries[(i + 1) * n + i] = off.clone();
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.n.max(1)).map(<[_]>::to_vec).take(self.n).collect()
    }

    /// Principal submatrix on `indices` (kept in the given order).
    pub fn principal(&self, indices: &[usize]) -> Self {
        let k = indices.len();
        let mut entries = Vec::with_capacity(k * k);
        for &i in indices {
            for &j in indices {
                entries.push(self.get(i, j).clone());
            }
        }
        Self { n: k, entries }
    }

    /// `[[A, alpha], [alpha^T, b]]`.
    pub fn bordered(&self, alpha: &[Rational], b: &Rational) -> Result<Self> {
        if alpha.len() != self.n {
            return Err(Error::NotSquare);
        }
        let n = self.n + 1;
        let mut m = Self::zeros(n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.entries[i * n + j] = self.get(i, j).clone();
            }
            m.entries[i * n + self.n] = alpha[i].clone();
            m.entries[self.n * n + i] = alpha[i].clone();
        }
        m.entries[n * n - 1] = b.clone();
        Ok(m)
    }

    /// `P^T A P` for a square `P` given row-major.
    pub fn congruent(&self, p: &[Vec<Rational>]) -> Result<Self> {
        let n = self.n;
        if p.len() != n || p.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        let mut ap = vec![Rational::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                ap[i * n + j] = (0..n).map(|k| self.get(i, k) * &p[k][j]).sum();
            }
        }
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[i * n + j] = (0..n).map(|k| &p[k][i] * &ap[k * n + j]).sum();
            }
        }
        Ok(out)
    }

    /// Determinant by rational Gaussian elimination. The empty matrix has
    /// determinant 1.
    pub fn det(&self) -> Rational {
        determinant(self.entries.clone(), self.n)
    }

    /// Determinant of the principal submatrix on `indices`.
    pub fn principal_minor(&self, indices: &[usize]) -> Rational {
        self.principal(indices).det()
    }

    /// Inertia by symmetric congruence elimination.
    pub fn inertia(&self) -> Inertia {
        let n = self.n;
        let mut a = self.entries.clone();
        let at = |i: usize, j: usize| i * n + j;
        let mut out = Inertia::default();

        for k in 0..n {
            if a[at(k, k)].is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !a[at(j, j)].is_zero()) {
                    swap_sym(&mut a, n, k, j);
                } else if let Some((i, j)) = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[at(i, j)].is_zero())
                {
                    // row_i += row_j, col_i += col_j puts 2 a_ij on the diagonal
                    for c in 0..n {
                        let v = a[at(j, c)].clone();
                        a[at(i, c)] += v;
                    }
                    for r in 0..n {
                        let v = a[at(r, j)].clone();
                        a[at(r, i)] += v;
                    }
                    swap_sym(&mut a, n, k, i);
                } else {
                    out.z += n - k;
                    break;
                }
            }
            let pivot = a[at(k, k)].clone();
            match sign(&pivot) {
                1 => out.p += 1,
                _ => out.q += 1,
            }
            for r in k + 1..n {
                if a[at(r, k)].is_zero() {
                    continue;
                }
                let factor = &a[at(r, k)] / &pivot;
                for c in k + 1..n {
                    let v = &factor * &a[at(k, c)];
                    a[at(r, c)] -= v;
                }
            }
            for r in k + 1..n {
                a[at(r, k)] = Rational::zero();
                a[at(k, r)] = Rational::zero();
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.inertia().rank()
    }
}

fn swap_sym(a: &mut [Rational], n: usize, i: usize, j: usize) {
    if i == j {
        return;
    }
    for c in 0..n {
        a.swap(i * n + c, j * n + c);
    }
    for r in 0..n {
        a.swap(r * n + i, r * n + j);
    }
}

fn determinant(mut a: Vec<Rational>, n: usize) -> Rational {
    let mut det = Rational::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| !a[r * n + k].is_zero()) else {
            return Rational::zero();
        };
        if piv != k {
            for c in 0..n {
                a.swap(k * n + c, piv * n + c);
            }
            det = -det;
        }
        let pivot = a[k * n + k].clone();
        for r in k + 1..n {
            if a[r * n + k].is_zero() {
                continue;
            }
            let factor = &a[r * n + k] / &pivot;
            for c in k..n {
                let v = &factor * &a[k * n + c];
                a[r * n + c] -= v;
            }
        }
        det *= pivot;
    }
    det
}

impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `(p, q, z)`: counts of positive, negative and zero eigenvalues.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub p: usize,
    pub q: usize,
    pub z: usize,
}

impl Inertia {
    pub fn n(&self) -> usize {
        self.p + self.q + self.z
    }

    pub fn rank(&self) -> usize {
        self.p + self.q
    }
}

/// Principal minors along a nested chain `I_1 ⊂ I_2 ⊂ ... ⊂ I_n`.
///
/// The chain is stored as an ordering of the indices: `I_i` is the set of
/// the first `i` entries of `order`, which makes the nesting structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorSequence {
    order: Vec<usize>,
    values: Vec<Rational>,
}

impl MinorSequence {
    /// Minors of `a` along the chain induced by `order` (any prefix of a
    /// permutation of `0..n`).
    pub fn from_order(a: &SymMatrix, order: Vec<usize>) -> Self {
        let values = (1..=order.len())
            .map(|i| a.principal_minor(&order[..i]))
            .collect();
        Self { order, values }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// `I_i` (1-based `i`), sorted.
    pub fn index_set(&self, i: usize) -> Vec<usize> {
        let mut s = self.order[..i].to_vec();
        s.sort_unstable();
        s
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// `D_r != 0` and no two consecutive zeros among `D_1..D_r`. Vacuous at
/// `r = 0`.
pub fn is_normal(values: &[Rational], r: usize) -> bool {
    if r == 0 {
        return true;
    }
    if r > values.len() || values[r - 1].is_zero() {
        return false;
    }
    values[..r]
        .windows(2)
        .all(|w| !(w[0].is_zero() && w[1].is_zero()))
}

/// Negative index from a normal minor sequence of a rank-`r` matrix:
/// `[D_1 < 0] + #{i < r : D_i D_{i+1} < 0} + #{i < r : D_i = 0}`.
pub fn q_from_normal_sequence(values: &[Rational], r: usize) -> Result<usize> {
    if !is_normal(values, r) {
        return Err(Error::NotNormal(r));
    }
    if r == 0 {
        return Ok(0);
    }
    let head = usize::from(sign(&values[0]) < 0);
    let changes = values[..r]
        .windows(2)
        .filter(|w| sign(&w[0]) * sign(&w[1]) < 0)
        .count();
    let zeros = values[..r - 1].iter().filter(|v| v.is_zero()).count();
    Ok(head + changes + zeros)
}

/// Search for a normal principal minor sequence.
///
/// Depth-first over nested index sets, extending by the smallest unused
/// index and trying nonzero minors before zero ones. Dead states
/// `(index set, last minor was zero)` are memoized, so the search is
/// exhaustive. Past depth `rank` the chain is completed in ascending order.
pub fn find_normal_sequence(a: &SymMatrix) -> Result<MinorSequence> {
    let n = a.n();
    assert!(n <= 64, "index sets are tracked as a 64-bit mask");
    let r = a.rank();
    let mut search = Search {
        a,
        r,
        dead: HashSet::new(),
        order: Vec::with_capacity(n),
    };
    if !search.extend(0, false) {
        return Err(Error::NoNormalSequence);
    }
    let mut order = search.order;
    order.extend((0..n).filter(|i| !order.contains(i)).collect::<Vec<_>>());
    let seq = MinorSequence::from_order(a, order);
    debug_assert!(is_normal(seq.values(), r));
    Ok(seq)
}

struct Search<'a> {
    a: &'a SymMatrix,
    r: usize,
    dead: HashSet<(u64, bool)>,
    order: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, mask: u64, last_zero: bool) -> bool {
        let depth = self.order.len();
        if depth == self.r {
            return true;
        }
        if self.dead.contains(&(mask, last_zero)) {
            return false;
        }
        let n = self.a.n();
        let mut nonzero = Vec::new();
        let mut zero = Vec::new();
        for i in (0..n).filter(|i| mask & (1 << i) == 0) {
            self.order.push(i);
            let d = self.a.principal_minor(&self.order);
            self.order.pop();
            if d.is_zero() {
                zero.push(i);
            } else {
                nonzero.push(i);
            }
        }
        for i in nonzero {
            self.order.push(i);
            if self.extend(mask | (1 << i), false) {
                return true;
            }
            self.order.pop();
        }
        // a zero is allowed only strictly before position r and never
        // right after another zero
        if !last_zero && depth + 1 < self.r {
            for i in zero {
                self.order.push(i);
                if self.extend(mask | (1 << i), true) {
                    return true;
                }
                self.order.pop();
            }
        }
        self.dead.insert((mask, last_zero));
        false
    }
}

/// Negative index of `B = [[A, alpha], [alpha^T, b]]` from that of `A`,
/// given `rank(A) >= n - 1`: unchanged when `|A||B| > 0` or `|B| = 0`,
/// one more when `|A||B| < 0` or `|A| = 0`.
pub fn bordered_q_update(q_a: usize, det_a: &Rational, det_b: &Rational) -> Result<usize> {
    match (sign(det_a), sign(det_b)) {
        (0, 0) => Err(Error::BothDeterminantsZero),
        (_, 0) => Ok(q_a),
        (0, _) => Ok(q_a + 1),
        (sa, sb) if sa == sb => Ok(q_a),
        _ => Ok(q_a + 1),
    }
}
