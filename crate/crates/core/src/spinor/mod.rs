//! Two-component spinor algebra.
//!
//! Conventions: `ε_{AB} = ε^{AB}` with `ε_{01} = ε^{01} = +1`; indices are
//! lowered as `κ_A = κ^B ε_{BA}` and raised as `κ^A = ε^{AB} κ_B`. The world
//! metric is `diag(1, -1, -1, -1)` and the Levi-Civita symbol has
//! `e^{0123} = +1`. Primed spinors share the storage of unprimed ones;
//! complex conjugation moves a spinor to the primed valence.

mod dyad;
mod identities;
mod ivdw;
mod lorentz;
mod random;
mod vector;

pub use dyad::{
    dyad_to_vector, lower_both, lower_first, lower_second, raise_both, vector_to_dyad,
    SpinorDyad, Valence,
};
pub use identities::{
    duality_residual, generator_antisymmetry_residual, iw_product_residual, iw_symmetric_residual,
    spinor_form_residual, trace_reversal_residual,
};
pub use ivdw::{
    complex_vector_from_upper, ivdw, ivdw_lower, ivdw_mixed, ivdw_upper, levi_civita_lower,
    levi_civita_upper, lower_dyad, mixed_lower_first, mixed_lower_second, upper_dyad,
    upper_dyad_complex, vector_from_upper, Generators,
};
pub use lorentz::{lorentz_from_sl2c, LorentzMatrix, Sl2c};
pub use random::{
    random_complex, random_future_momentum, random_sl2c, random_spinor, random_timelike,
};
pub use vector::FourVector;

use nalgebra::{Matrix2, Vector2};
use num_complex::Complex64;

/// 2×2 complex matrix.
pub type Mat2 = Matrix2<Complex64>;
/// Two complex components.
pub type Vec2 = Vector2<Complex64>;

/// Metric signature `g_aa`.
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub(crate) const I: Complex64 = Complex64::new(0.0, 1.0);

/// `ε_{AB}` (equal to `ε^{AB}` componentwise).
pub fn epsilon() -> Mat2 {
    Mat2::new(ZERO, ONE, -ONE, ZERO)
}

/// Largest entry modulus of a 2×2 matrix.
pub fn max_abs(m: &Mat2) -> f64 {
    m.iter().fold(0.0, |a, z| a.max(z.norm()))
}

/// Contravariant unprimed spinor `κ^A`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spinor(pub Vec2);

/// Covariant unprimed spinor `κ_A`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoSpinor(pub Vec2);

impl Spinor {
    pub fn new(k0: Complex64, k1: Complex64) -> Self {
        Self(Vec2::new(k0, k1))
    }

    pub fn real(k0: f64, k1: f64) -> Self {
        Self::new(Complex64::new(k0, 0.0), Complex64::new(k1, 0.0))
    }

    pub fn lower(&self) -> CoSpinor {
        CoSpinor(Vec2::new(-self.0[1], self.0[0]))
    }

    /// Complex conjugate; the result is read as `κ̄^{A'}`.
    pub fn conj(&self) -> Self {
        Self(self.0.map(|z| z.conj()))
    }

    pub fn scale(&self, z: Complex64) -> Self {
        Self(self.0 * z)
    }

    pub fn norm(&self) -> f64 {
        (self.0[0].norm_sqr() + self.0[1].norm_sqr()).sqrt()
    }

    /// `κ^A κ̄^{A'}` as a dyad matrix.
    pub fn outer_conj(&self) -> Mat2 {
        self.0 * self.conj().0.transpose()
    }

    /// Flagpole world-vector of `κ^A κ̄^{A'}`; null and future-pointing.
    pub fn flagpole(&self) -> FourVector {
        vector_from_upper(&self.outer_conj())
    }
}

impl CoSpinor {
    pub fn new(k0: Complex64, k1: Complex64) -> Self {
        Self(Vec2::new(k0, k1))
    }

    pub fn raise(&self) -> Spinor {
        Spinor(Vec2::new(self.0[1], -self.0[0]))
    }

    pub fn conj(&self) -> Self {
        Self(self.0.map(|z| z.conj()))
    }

    pub fn scale(&self, z: Complex64) -> Self {
        Self(self.0 * z)
    }

    /// `κ_A λ^A`.
    pub fn contract(&self, upper: &Spinor) -> Complex64 {
        self.0[0] * upper.0[0] + self.0[1] * upper.0[1]
    }
}

pub fn lower_spinor(k: &Spinor) -> CoSpinor {
    k.lower()
}

pub fn raise_spinor(k: &CoSpinor) -> Spinor {
    k.raise()
}
