use std::fmt;

use crate::{Error, Result};

use super::{complex_vector_from_upper, epsilon, upper_dyad, FourVector, Mat2};

/// Index structure of a [`SpinorDyad`]. Mixed unprimed/primed dyads keep the
/// unprimed index as the row; same-kind dyads keep the first index as the row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valence {
    /// `X^{AA'}`
    Upper,
    /// `X_{AA'}`
    Lower,
    /// `X_A{}^{B'}`
    LowerUpper,
    /// `X^A{}_{B'}`
    UpperLower,
    /// `X_A{}^B`
    UnprimedOperator,
    /// `X_{A'}{}^{B'}`
    PrimedOperator,
    /// `X_{AB}`
    UnprimedLower,
    /// `X_{A'B'}`
    PrimedLower,
}

impl fmt::Display for Valence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Valence::Upper => "^{AA'}",
            Valence::Lower => "_{AA'}",
            Valence::LowerUpper => "_A^{B'}",
            Valence::UpperLower => "^A_{B'}",
            Valence::UnprimedOperator => "_A^B",
            Valence::PrimedOperator => "_{A'}^{B'}",
            Valence::UnprimedLower => "_{AB}",
            Valence::PrimedLower => "_{A'B'}",
        };
        f.write_str(s)
    }
}

/// A 2×2 complex spinor matrix with its index structure.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinorDyad {
    pub matrix: Mat2,
    pub valence: Valence,
}

impl SpinorDyad {
    pub fn new(matrix: Mat2, valence: Valence) -> Self {
        Self { matrix, valence }
    }

    /// Re-expresses a world-vector dyad with both indices up.
    pub fn to_upper(&self) -> Result<Mat2> {
        let e = epsilon();
        let m = &self.matrix;
        match self.valence {
            Valence::Upper => Ok(*m),
            Valence::Lower => Ok(raise_both(m)),
            Valence::LowerUpper => Ok(e * m),
            Valence::UpperLower => Ok(m * e.transpose()),
            other => Err(mismatch("a world-vector valence", other)),
        }
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        (self.matrix - self.matrix.adjoint())
            .iter()
            .all(|z| z.norm() <= tol)
    }
}

fn mismatch(expected: &str, found: Valence) -> Error {
    Error::ValenceMismatch {
        expected: expected.to_string(),
        found: found.to_string(),
    }
}

/// `X_{AA'} = X^{BB'} ε_{BA} ε_{B'A'}`.
pub fn lower_both(m: &Mat2) -> Mat2 {
    let e = epsilon();
    e.transpose() * m * e
}

/// `X^{AA'} = ε^{AB} ε^{A'B'} X_{BB'}`.
pub fn raise_both(m: &Mat2) -> Mat2 {
    let e = epsilon();
    e * m * e.transpose()
}

/// Lowers the row index: `X_A{}^{B'} = X^{CB'} ε_{CA}`.
pub fn lower_first(m: &Mat2) -> Mat2 {
    epsilon().transpose() * m
}

/// Lowers the column index: `X^A{}_{B'} = X^{AC'} ε_{C'B'}`.
pub fn lower_second(m: &Mat2) -> Mat2 {
    m * epsilon()
}

/// Spinor image of a world-vector in one of the four world-vector valences.
pub fn vector_to_dyad(p: &FourVector, valence: Valence) -> Result<SpinorDyad> {
    let up = upper_dyad(p);
    let matrix = match valence {
        Valence::Upper => up,
        Valence::Lower => lower_both(&up),
        Valence::LowerUpper => lower_first(&up),
        Valence::UpperLower => lower_second(&up),
        other => return Err(mismatch("a world-vector valence", other)),
    };
    Ok(SpinorDyad::new(matrix, valence))
}

/// World-vector of a dyad; imaginary parts (zero for Hermitian input) are dropped.
pub fn dyad_to_vector(d: &SpinorDyad) -> Result<FourVector> {
    let up = d.to_upper()?;
    Ok(FourVector(complex_vector_from_upper(&up).map(|z| z.re)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::{max_abs, random_future_momentum};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn round_trip_all_valences() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = random_future_momentum(1.3, &mut rng).unwrap();
        for v in [
            Valence::Upper,
            Valence::Lower,
            Valence::LowerUpper,
            Valence::UpperLower,
        ] {
            let d = vector_to_dyad(&p, v).unwrap();
            let q = dyad_to_vector(&d).unwrap();
            assert!(p.max_abs_diff(&q) < 1e-14, "{v}");
        }
    }

    #[test]
    fn upper_dyad_is_hermitian_with_half_square_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let p = random_future_momentum(1.0, &mut rng).unwrap();
        let d = vector_to_dyad(&p, Valence::Upper).unwrap();
        assert!(d.is_hermitian(1e-15));
        assert!((d.matrix.determinant().re - 0.5).abs() < 1e-12);
    }

    #[test]
    fn lower_dyad_contracts_to_minkowski_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let p = random_future_momentum(0.7, &mut rng).unwrap();
        let q = random_future_momentum(2.1, &mut rng).unwrap();
        let pl = vector_to_dyad(&p, Valence::Lower).unwrap().matrix;
        let qu = vector_to_dyad(&q, Valence::Upper).unwrap().matrix;
        let s: num_complex::Complex64 = pl.component_mul(&qu).sum();
        assert!((s.re - p.dot(&q)).abs() < 1e-13 * p[0] * q[0]);
        assert!(s.im.abs() < 1e-14);
    }

    #[test]
    fn operator_valence_is_rejected_for_vectors() {
        let p = FourVector::time();
        assert!(vector_to_dyad(&p, Valence::UnprimedOperator).is_err());
        let d = SpinorDyad::new(Mat2::identity(), Valence::PrimedLower);
        assert!(dyad_to_vector(&d).is_err());
    }

    #[test]
    fn raise_undoes_lower() {
        let m = Mat2::new(
            num_complex::Complex64::new(1.0, 2.0),
            num_complex::Complex64::new(-0.5, 0.1),
            num_complex::Complex64::new(3.0, 0.0),
            num_complex::Complex64::new(0.0, -1.0),
        );
        assert!(max_abs(&(raise_both(&lower_both(&m)) - m)) < 1e-15);
    }
}
