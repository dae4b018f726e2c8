//! Sturm chains built by Euclid's algorithm with negated remainders.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{sign, Polynomial, Rational};

/// `f_0 = f`, `f_1 = g`, and `f_{i-1} = d_i f_i - f_{i+1}` until the
/// division becomes exact at `f_{m-1} = d_m f_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    chain: Vec<Polynomial>,
    quotients: Vec<Polynomial>,
}

impl SturmChain {
    /// Chain associated to the pair `(f, g)`.
    ///
    /// `f` must be non-constant. `g` may be any nonzero polynomial, including
    /// a constant (the canonical chain of a linear `f` needs that).
    pub fn new(f: &Polynomial, g: &Polynomial) -> Result<Self> {
        if f.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![f.clone(), g.clone()];
        let mut quotients = Vec::new();
        loop {
            let n = chain.len();
            let (q, r) = chain[n - 2].div_rem(&chain[n - 1])?;
            quotients.push(q);
            if r.is_zero() {
                break;
            }
            chain.push(-r);
        }
        Ok(Self { chain, quotients })
    }

    /// Canonical chain `(f, f')`.
    pub fn canonical(f: &Polynomial) -> Result<Self> {
        Self::new(f, &f.derivative())
    }

    /// `[f_0, ..., f_m]`.
    pub fn polys(&self) -> &[Polynomial] {
        &self.chain
    }

    /// `[d_1, ..., d_m]`.
    pub fn quotients(&self) -> &[Polynomial] {
        &self.quotients
    }

    /// Index of the last nonzero remainder.
    pub fn m(&self) -> usize {
        self.quotients.len()
    }

    /// `f_m`, a scalar multiple of `gcd(f, g)`.
    pub fn last(&self) -> &Polynomial {
        self.chain.last().expect("chain has at least two entries")
    }

    pub fn eval(&self, a: &Rational) -> Vec<Rational> {
        self.chain.iter().map(|p| p.eval(a)).collect()
    }

    /// `V(a)`: sign variations of the chain evaluated at `a`.
    pub fn variation_at(&self, a: &Rational) -> usize {
        sign_variation(&self.eval(a))
    }

    /// True when `a` is a root of both `f` and `g`, i.e. of `f_m`.
    pub fn is_common_root(&self, a: &Rational) -> bool {
        self.last().eval(a).is_zero()
    }

    /// Divide every member by `f_m`.
    pub fn refine(&self) -> Result<RefinedChain> {
        let last = self.last();
        let chain = self
            .chain
            .iter()
            .map(|p| p.exact_div(last))
            .collect::<Result<Vec<_>>>()?;
        Ok(RefinedChain { chain })
    }
}

/// `f~_i = f_i / f_m`; the last entry is the constant 1 and `f~_0`, `f~_1`
/// are coprime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedChain {
    chain: Vec<Polynomial>,
}

impl RefinedChain {
    pub fn polys(&self) -> &[Polynomial] {
        &self.chain
    }

    pub fn variation_at(&self, a: &Rational) -> usize {
        let values: Vec<_> = self.chain.iter().map(|p| p.eval(a)).collect();
        sign_variation(&values)
    }
}

/// Number of sign changes after deleting zeros. Empty or all-zero input
/// gives 0.
pub fn sign_variation(values: &[Rational]) -> usize {
    let mut count = 0;
    let mut prev = 0i8;
    for s in values.iter().map(sign).filter(|&s| s != 0) {
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}
