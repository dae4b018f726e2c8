//! Generators and independent oracles shared by the integration tests.

#![allow(dead_code)]

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sturm::poly::{int, ratio};
use sturm::{Polynomial, Rational, SymMatrix};

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

/// Numerator and denominator magnitudes in `1..=9`, any sign, or zero.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    ratio(rng.random_range(-9..=9), rng.random_range(1..=9))
}

pub fn nonzero_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let r = small_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Polynomial of exact degree `deg` with small rational coefficients.
pub fn poly_of_degree(rng: &mut impl Rng, deg: usize) -> Polynomial {
    let mut c: Vec<Rational> = (0..deg).map(|_| small_rational(rng)).collect();
    c.push(nonzero_rational(rng));
    Polynomial::new(c)
}

/// Rational with a small denominator in roughly `[-span, span]`.
pub fn point(rng: &mut impl Rng, span: i64) -> Rational {
    let den = rng.random_range(1..=6);
    ratio(rng.random_range(-span * den..=span * den), den)
}

/// A random pair `(f, g)` of degree at most 8, sometimes sharing factors,
/// plus a list of the rational roots planted in the construction.
pub fn random_pair(rng: &mut impl Rng) -> (Polynomial, Polynomial, Vec<Rational>) {
    let mut planted = Vec::new();
    let shared = if rng.random_bool(0.4) { rng.random_range(1..=3) } else { 0 };
    let mut d = Polynomial::one();
    for _ in 0..shared {
        let r = point(rng, 3);
        d = d * Polynomial::linear_factor(&r);
        planted.push(r);
    }
    let fdeg = rng.random_range(1..=8 - shared.min(7)).max(1);
    let gdeg = rng.random_range(0..=8 - shared);
    let mut f = poly_of_degree(rng, fdeg);
    if rng.random_bool(0.3) {
        // a planted simple root of f
        let r = point(rng, 3);
        f = poly_of_degree(rng, fdeg.saturating_sub(1)) * Polynomial::linear_factor(&r);
        planted.push(r);
    }
    let g = poly_of_degree(rng, gdeg);
    let (f, g) = (&f * &d, &g * &d);
    if f.is_constant() {
        return random_pair(rng);
    }
    (f, g, planted)
}

/// A polynomial with known rational roots and multiplicities, scaled by a
/// random nonzero constant.
pub fn constructed_roots(rng: &mut impl Rng) -> (Polynomial, Vec<(Rational, u32)>) {
    let k = rng.random_range(1..=6);
    let mut roots: Vec<(Rational, u32)> = Vec::new();
    while roots.len() < k {
        let den = rng.random_range(1..=4);
        let r = ratio(rng.random_range(-12..=12), den);
        if roots.iter().all(|(s, _)| s != &r) {
            roots.push((r, rng.random_range(1..=3)));
        }
    }
    roots.sort();
    let f = Polynomial::from_roots(roots.iter().map(|(r, m)| (r, *m)))
        .scale(&nonzero_rational(rng));
    (f, roots)
}

/// Determinant by Leibniz expansion over all permutations, with polynomial
/// entries. Only for tiny matrices.
pub fn leibniz_det(entries: &[Vec<Polynomial>]) -> Polynomial {
    let n = entries.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Polynomial::zero();
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        let term = (0..n).fold(Polynomial::one(), |acc, i| acc * &entries[i][p[i]]);
        total = if inversions % 2 == 0 { &total + &term } else { &total - &term };
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}

/// Dense symbolic Sturm matrix rows, for the Leibniz oracle.
pub fn dense_symbolic(diag: &[Polynomial]) -> Vec<Vec<Polynomial>> {
    let m = diag.len();
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    if i == j {
                        diag[i].clone()
                    } else if i.abs_diff(j) == 1 {
                        Polynomial::one()
                    } else {
                        Polynomial::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn random_sym(rng: &mut impl Rng, n: usize, range: i64, zero_bias: f64) -> SymMatrix {
    let mut rows = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let v = if rng.random_bool(zero_bias) {
                Rational::zero()
            } else {
                int(rng.random_range(-range..=range))
            };
            rows[i][j] = v.clone();
            rows[j][i] = v;
        }
    }
    SymMatrix::new(rows).unwrap()
}

/// Unit upper-triangular matrix with small integer entries (invertible).
pub fn unit_upper(rng: &mut impl Rng, n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Equal => Rational::one(),
                    std::cmp::Ordering::Less => int(rng.random_range(-2..=2)),
                    std::cmp::Ordering::Greater => Rational::zero(),
                })
                .collect()
        })
        .collect()
}

/// `P^T diag(d) P` with `P` random unit upper-triangular: a symmetric matrix
/// whose inertia is read off `d`.
pub fn with_spectrum_signs(rng: &mut impl Rng, d: &[i64]) -> SymMatrix {
    let n = d.len();
    let diag = SymMatrix::new(
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { int(d[i]) } else { Rational::zero() }).collect())
            .collect(),
    )
    .unwrap();
    diag.congruent(&unit_upper(rng, n)).unwrap()
}

/// Number of distinct `roots` in `(a, b]`.
pub fn direct_count(roots: &[(Rational, u32)], a: &Rational, b: &Rational) -> usize {
    roots.iter().filter(|(r, _)| a < r && r <= b).count()
}
