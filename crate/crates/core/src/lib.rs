//! Exact counting and isolation of the distinct real roots of a polynomial
//! with rational coefficients.
//!
//! Roots in `(a, b]` are counted two ways: by sign variations of the Sturm
//! chain, and by the negative index of inertia of the Sturm matrix, the
//! symmetric tridiagonal matrix carrying the Euclidean quotients on its
//! diagonal. The inertia count is valid at every endpoint, multiple roots
//! included.
//!
//! ```
//! use sturm::{expr::parse_poly, poly::int, roots};
//!
//! let f = parse_poly("(x-1)^2*(x+2)").unwrap();
//! assert_eq!(roots::count_all_roots(&f).unwrap(), 2);
//! // the endpoint 1 is a double root; only the inertia count accepts it
//! assert_eq!(roots::count_roots_inertia(&f, &int(0), &int(1)).unwrap(), 1);
//! assert!(roots::count_roots_variation(&f, &int(0), &int(1)).is_err());
//! ```

pub mod chain;
pub mod cli;
pub mod error;
pub mod expr;
pub mod inertia;
pub mod matrix;
pub mod poly;
pub mod roots;

pub use chain::{sign_variation, RefinedChain, SturmChain};
pub use error::{Error, Result};
pub use inertia::{Inertia, MinorSequence, SymMatrix};
pub use matrix::{EvaluatedSturmMatrix, SturmMatrix};
pub use poly::{Polynomial, Rational};
pub use roots::{InertiaCounter, Interval, RootCountReport};
