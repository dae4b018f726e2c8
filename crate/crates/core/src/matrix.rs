//! The Sturm matrix: symmetric tridiagonal, Euclidean quotients on the
//! diagonal, ones beside it.

use num_traits::One;

use crate::chain::SturmChain;
use crate::inertia::SymMatrix;
use crate::poly::{Polynomial, Rational};

/// Symbolic Sturm matrix. Only the diagonal `d_1..d_m` is stored; the
/// off-diagonal ones and the zeros elsewhere are implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmMatrix {
    diag: Vec<Polynomial>,
}

impl SturmMatrix {
    pub fn from_chain(chain: &SturmChain) -> Self {
        Self {
            diag: chain.quotients().to_vec(),
        }
    }

    /// From an explicit diagonal. Panics if empty.
    pub fn from_diagonal(diag: Vec<Polynomial>) -> Self {
        assert!(!diag.is_empty(), "a Sturm matrix has at least one row");
        Self { diag }
    }

    pub fn diagonal(&self) -> &[Polynomial] {
        &self.diag
    }

    pub fn m(&self) -> usize {
        self.diag.len()
    }

    pub fn eval(&self, a: &Rational) -> EvaluatedSturmMatrix {
        EvaluatedSturmMatrix {
            diag: self.diag.iter().map(|d| d.eval(a)).collect(),
            point: a.clone(),
        }
    }

    /// Trailing principal minors `D_1..D_m`, where `D_i` is the determinant
    /// of rows and columns `m-i+1..m`. Expanding along the first row gives
    /// `D_{k+2} = d_{m-k-1} D_{k+1} - D_k` with `D_0 = 1`.
    pub fn trailing_minors(&self) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = Vec::with_capacity(self.m());
        for (i, d) in self.diag.iter().rev().enumerate() {
            let next = match i {
                0 => d.clone(),
                1 => d * &out[0] - Polynomial::one(),
                _ => d * &out[i - 1] - &out[i - 2],
            };
            out.push(next);
        }
        out
    }
}

/// The Sturm matrix at a rational point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluatedSturmMatrix {
    pub diag: Vec<Rational>,
    pub point: Rational,
}

impl EvaluatedSturmMatrix {
    pub fn to_sym(&self) -> SymMatrix {
        SymMatrix::tridiagonal(&self.diag, &Rational::one())
    }
}
