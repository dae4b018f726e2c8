use thiserror::Error;

use crate::poly::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("expected a non-constant polynomial")]
    ConstantPolynomial,
    #[error("expected a nonzero polynomial")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("interval ({lo}, {hi}] is empty")]
    EmptyInterval { lo: Box<Rational>, hi: Box<Rational> },
    #[error("endpoint {0} is a multiple root; sign-variation counting requires simple or non-root endpoints")]
    MultipleRootEndpoint(Box<Rational>),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("minor sequence is not normal for rank {0}")]
    NotNormal(usize),
    #[error("bordered update needs |A|^2 + |B|^2 != 0")]
    BothDeterminantsZero,
    #[error("no normal principal minor sequence found")]
    NoNormalSequence,
    #[error("roots must be distinct and sorted ascending")]
    UnsortedRoots,
}

pub type Result<T> = std::result::Result<T, Error>;
