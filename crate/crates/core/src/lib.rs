//! Covariant two-component spinor machinery for Bargmann-Wigner fields of
//! arbitrary spin in momentum space.

pub mod bw;
pub mod dirac;
pub mod error;
pub mod frame;
pub mod maxwell;
pub mod pauli_lubanski;
pub mod quadrature;
pub mod sign;
pub mod spinor;
pub mod tol;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use sign::Sign;
