//! Exact linear algebra over ℚ, ℚ(i) and the quaternions ℚ(i) + ℚ(i)𝐣.
//!
//! The crate computes certified Jordan forms, decides reversibility
//! (`g ~ g⁻¹`) and strong reversibility in `GL(n)` and the affine group,
//! Ad-reality in `gl(n)`, and factors elements into involutions. Every
//! witness it returns is checked by exact matrix multiplication before it
//! is handed back.

pub mod affine;
pub mod error;
pub mod jordan;
pub mod json;
pub mod matrices;
pub mod oracle;
pub mod reversibility;
pub mod scalars;

pub use error::{Error, ErrorClass, Result};
pub use matrices::Matrix;
pub use scalars::{DivisionRing, Gaussian, Quaternion, Rational, Ring, Scalar};
