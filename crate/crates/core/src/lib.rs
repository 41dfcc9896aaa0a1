//! Exact computation of the Poincaré series of the algebra of covariants of
//! a binary form of degree `d`.
//!
//! The series is produced in closed form by a finite sum of sectioned
//! residues ([`springer::poincare_series`]) and can be cross-checked against
//! independent counting oracles ([`combinatorics`]) and a brute-force
//! diagonal extraction on truncated bivariate series
//! ([`springer::poincare_series_via_psi`]).
//!
//! ```
//! use covseries::springer::poincare_series;
//!
//! let p3 = poincare_series(3).unwrap();
//! assert_eq!(p3.to_plain(), "(1+z^3)/((1-z)*(1-z^2)*(1-z^4))");
//! ```

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod exactpoly;
pub mod fixtures;
pub mod ratfun;
pub mod section;
pub mod springer;

pub use combinatorics::{DimTable, Method};
pub use error::{Error, Result};
pub use exactpoly::{BivariateTruncatedSeries, IntPolynomial, LaurentPolynomial, TruncatedSeries};
pub use ratfun::FactoredRational;
pub use springer::{poincare_series, ResidueTerm};

/// Largest form degree the CLI and FFI accept.
pub const MAX_FORM_DEGREE: u32 = 20;
