//! Bivariate Poincare series of the algebra of covariants of a binary form.
//!
//! The series `P_d(z, t) = sum dim (C_d)_{i,j} z^i t^j` is computed as an
//! exact factored rational function ([`poincare_series`]) and checked
//! coefficient by coefficient against restricted partition counts
//! ([`dims`]).
//!
//! ```
//! use covseries::{poincare_series, Format};
//!
//! let p2 = poincare_series(2).unwrap();
//! assert_eq!(p2.render(Format::Text), "1/((1-z*t^2)*(1-z^2))");
//! ```

pub mod dims;
pub mod error;
pub mod poly;
pub mod psi;
pub mod springer;

pub use dims::{dim_cov, dim_cov_graded, dim_cov_qbin, dim_inv, dim_table, omega, qbinomial, DimTable};
pub use error::{DivisionFails, Error, Result};
pub use poly::{equal_rational, BinomFactor, FactoredRational, Format, TPoly, ZTPoly};
pub use springer::{poincare_series, verify_dimensions, verify_series, VerificationReport};
