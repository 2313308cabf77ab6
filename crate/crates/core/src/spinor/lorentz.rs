use nalgebra::Matrix4;
use num_complex::Complex64;

use crate::{tol, Error, Result};

use super::{
    epsilon, ivdw, upper_dyad, vector_from_upper, CoSpinor, FourVector, Mat2, SpinorDyad, Spinor,
    Valence, I, METRIC, ONE, ZERO,
};

/// Unimodular 2×2 complex matrix acting on `κ^A` by `κ ↦ Aκ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sl2c(Mat2);

impl Sl2c {
    pub fn new(m: Mat2) -> Result<Self> {
        let defect = (m.determinant() - ONE).norm();
        if !(defect <= tol::DETERMINANT) {
            return Err(Error::NonUnitDeterminant(defect));
        }
        Ok(Self(m))
    }

    pub fn identity() -> Self {
        Self(Mat2::identity())
    }

    /// `diag(e^{η/2}, e^{-η/2})`, a boost of rapidity `η` along +z.
    pub fn boost_z(rapidity: f64) -> Self {
        let h = 0.5 * rapidity;
        Self(Mat2::new(
            Complex64::new(h.exp(), 0.0),
            ZERO,
            ZERO,
            Complex64::new((-h).exp(), 0.0),
        ))
    }

    /// Boost of rapidity `η` along the unit direction `n`.
    pub fn boost(direction: [f64; 3], rapidity: f64) -> Self {
        let n = unit(direction);
        let h = 0.5 * rapidity;
        Self(Mat2::identity().scale(h.cosh()) + sigma_dot(n).scale(h.sinh()))
    }

    /// Rotation by `angle` about the unit axis `n`.
    pub fn rotation(axis: [f64; 3], angle: f64) -> Self {
        let n = unit(axis);
        let h = 0.5 * angle;
        Self(Mat2::identity().scale(h.cos()) - sigma_dot(n) * (I * h.sin()))
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let m = &self.0;
        let det = m.determinant();
        Self(Mat2::new(m[(1, 1)], -m[(0, 1)], -m[(1, 0)], m[(0, 0)]) / det)
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self(self.0 * other.0)
    }

    /// Matrix acting on covariant spinors, `κ_A ↦ (ε^T A ε)_A^B κ_B`.
    pub fn cospinor_matrix(&self) -> Mat2 {
        let e = epsilon();
        e.transpose() * self.0 * e
    }

    pub fn transform_spinor(&self, k: &Spinor) -> Spinor {
        Spinor(self.0 * k.0)
    }

    pub fn transform_cospinor(&self, k: &CoSpinor) -> CoSpinor {
        CoSpinor(self.cospinor_matrix() * k.0)
    }

    pub fn transform_vector(&self, p: &FourVector) -> FourVector {
        vector_from_upper(&(self.0 * upper_dyad(p) * self.0.adjoint()))
    }

    pub fn transform_dyad(&self, d: &SpinorDyad) -> SpinorDyad {
        let a = &self.0;
        let m = self.cospinor_matrix();
        let x = &d.matrix;
        let out = match d.valence {
            Valence::Upper => a * x * a.adjoint(),
            Valence::Lower => m * x * m.adjoint(),
            Valence::LowerUpper => m * x * a.adjoint(),
            Valence::UpperLower => a * x * m.adjoint(),
            Valence::UnprimedOperator => m * x * a.transpose(),
            Valence::PrimedOperator => m.conjugate() * x * a.adjoint(),
            Valence::UnprimedLower => m * x * m.transpose(),
            Valence::PrimedLower => m.conjugate() * x * m.adjoint(),
        };
        SpinorDyad::new(out, d.valence)
    }

    pub fn lorentz(&self) -> LorentzMatrix {
        lorentz_from_sl2c(self)
    }
}

fn unit(v: [f64; 3]) -> [f64; 3] {
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    [v[0] / n, v[1] / n, v[2] / n]
}

fn sigma_dot(n: [f64; 3]) -> Mat2 {
    (1..4).fold(Mat2::zeros(), |acc, k| acc + ivdw(k).scale(n[k - 1] * 2f64.sqrt()))
}

/// Real Lorentz matrix `Λ^a_b` acting on upper components.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzMatrix(pub Matrix4<f64>);

impl LorentzMatrix {
    pub fn apply(&self, p: &FourVector) -> FourVector {
        let v = self.0 * nalgebra::Vector4::from(p.0);
        FourVector([v[0], v[1], v[2], v[3]])
    }

    /// `max |Λ^T g Λ - g|`.
    pub fn metric_residual(&self) -> f64 {
        let g = Matrix4::from_diagonal(&nalgebra::Vector4::from(METRIC));
        (self.0.transpose() * g * self.0 - g).amax()
    }

    /// `Λ^{-1} = g Λ^T g`.
    pub fn inverse(&self) -> Self {
        let g = Matrix4::from_diagonal(&nalgebra::Vector4::from(METRIC));
        Self(g * self.0.transpose() * g)
    }

    pub fn determinant(&self) -> f64 {
        self.0.determinant()
    }
}

/// Lorentz matrix induced by `p^{AA'} ↦ A p^{AA'} A^†`.
pub fn lorentz_from_sl2c(a: &Sl2c) -> LorentzMatrix {
    let mut m = Matrix4::zeros();
    for b in 0..4 {
        let mut e = [0.0; 4];
        e[b] = 1.0;
        let col = a.transform_vector(&FourVector(e));
        for r in 0..4 {
            m[(r, b)] = col[r];
        }
    }
    LorentzMatrix(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::{max_abs, random_future_momentum, random_sl2c, random_spinor};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_gives_identity() {
        let l = lorentz_from_sl2c(&Sl2c::identity());
        assert!((l.0 - Matrix4::identity()).amax() < 1e-15);
    }

    #[test]
    fn z_boost_by_ln2() {
        let a = Sl2c::boost_z(2f64.ln());
        let q = a.transform_vector(&FourVector::time());
        let want = FourVector::new(1.25, 0.0, 0.0, 0.75);
        assert!(q.max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn non_unit_determinant_is_rejected() {
        let m = Mat2::identity().scale(1.1);
        assert!(matches!(Sl2c::new(m), Err(Error::NonUnitDeterminant(_))));
    }

    #[test]
    fn induced_matrix_is_proper_orthochronous() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..50 {
            let a = random_sl2c(&mut rng);
            let l = a.lorentz();
            assert!(l.metric_residual() < 1e-12);
            assert!(l.0[(0, 0)] >= 1.0);
            assert!((l.determinant() - 1.0).abs() < 1e-11);
        }
    }

    #[test]
    fn inverse_element_gives_inverse_matrix() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        let a = random_sl2c(&mut rng);
        let l = a.lorentz();
        let li = a.inverse().lorentz();
        assert!((li.0 - l.inverse().0).amax() < 1e-12);
    }

    #[test]
    fn spinor_contraction_is_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let a = random_sl2c(&mut rng);
        let k = random_spinor(&mut rng);
        let l = random_spinor(&mut rng);
        let before = k.lower().contract(&l);
        let after = a
            .transform_cospinor(&k.lower())
            .contract(&a.transform_spinor(&l));
        assert!((before - after).norm() < 1e-12);
        let lowered_after = a.transform_spinor(&k).lower();
        assert!((lowered_after.0 - a.transform_cospinor(&k.lower()).0).norm() < 1e-12);
    }

    #[test]
    fn lower_dyad_transform_matches_vector_transform() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let a = random_sl2c(&mut rng);
        let p = random_future_momentum(1.0, &mut rng).unwrap();
        for v in [
            Valence::Upper,
            Valence::Lower,
            Valence::LowerUpper,
            Valence::UpperLower,
        ] {
            let d = crate::spinor::vector_to_dyad(&p, v).unwrap();
            let direct = crate::spinor::vector_to_dyad(&a.transform_vector(&p), v).unwrap();
            assert!(max_abs(&(a.transform_dyad(&d).matrix - direct.matrix)) < 1e-11, "{v}");
        }
    }

    #[test]
    fn rotation_preserves_time_axis() {
        let r = Sl2c::rotation([0.3, -1.0, 0.2], 1.1);
        let t = r.transform_vector(&FourVector::time());
        assert!(t.max_abs_diff(&FourVector::time()) < 1e-15);
    }
}
