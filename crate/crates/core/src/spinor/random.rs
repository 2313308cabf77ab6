use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal, Uniform};

use crate::{Error, Result};

use super::{FourVector, Sl2c, Spinor};

fn normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    StandardNormal.sample(rng)
}

/// Complex number with independent standard normal parts.
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(normal(rng), normal(rng))
}

/// On-shell future-pointing momentum with normally distributed spatial part.
pub fn random_future_momentum<R: Rng + ?Sized>(m: f64, rng: &mut R) -> Result<FourVector> {
    if !(m >= 0.0) {
        return Err(Error::NegativeMass(m));
    }
    loop {
        let s = [normal(rng), normal(rng), normal(rng)];
        if m > 0.0 || s.iter().map(|x| x * x).sum::<f64>() > 1e-4 {
            return Ok(FourVector::on_shell(m, s));
        }
    }
}

/// Future-pointing timelike vector with unit-order components.
pub fn random_timelike<R: Rng + ?Sized>(rng: &mut R) -> FourVector {
    let s = [0.7 * normal(rng), 0.7 * normal(rng), 0.7 * normal(rng)];
    let mass = Uniform::new(0.3, 2.0).sample(rng);
    FourVector::on_shell(mass, s)
}

/// Spinor with standard normal complex components.
pub fn random_spinor<R: Rng + ?Sized>(rng: &mut R) -> Spinor {
    Spinor::new(random_complex(rng), random_complex(rng))
}

/// Rotation-times-boost element with rapidity at most 1.5.
pub fn random_sl2c<R: Rng + ?Sized>(rng: &mut R) -> Sl2c {
    let axis = [normal(rng), normal(rng), normal(rng)];
    let angle = Uniform::new(0.0, 2.0 * std::f64::consts::PI).sample(rng);
    let dir = [normal(rng), normal(rng), normal(rng)];
    let rapidity = Uniform::new(0.0, 1.5).sample(rng);
    Sl2c::boost(dir, rapidity).compose(&Sl2c::rotation(axis, angle))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn massive_momentum_is_on_shell() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let p = random_future_momentum(1.0, &mut rng).unwrap();
        assert!((p.square() - 1.0).abs() < 1e-12 * p[0] * p[0]);
        assert!(p[0] > 0.0);
    }

    #[test]
    fn massless_momentum_is_on_cone() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = random_future_momentum(0.0, &mut rng).unwrap();
        assert!(p.square().abs() < 1e-12 * p[0] * p[0]);
        assert!(p[0] > 0.0);
    }

    #[test]
    fn negative_mass_is_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        assert_eq!(
            random_future_momentum(-1.0, &mut rng),
            Err(Error::NegativeMass(-1.0))
        );
    }

    #[test]
    fn generators_are_deterministic() {
        let draw = || {
            let mut rng = ChaCha8Rng::seed_from_u64(42);
            (
                random_future_momentum(1.0, &mut rng).unwrap(),
                random_sl2c(&mut rng),
                random_spinor(&mut rng),
            )
        };
        assert_eq!(draw(), draw());
    }

    #[test]
    fn random_element_is_unimodular() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let a = random_sl2c(&mut rng);
            assert!((a.matrix().determinant() - 1.0).norm() < 1e-12);
        }
    }
}
