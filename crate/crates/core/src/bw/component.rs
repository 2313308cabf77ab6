use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::frame::{frame_for, SpinFrame, DEFAULT_REFERENCE};
use crate::spinor::{random_timelike, FourVector, Spinor};
use crate::{tol, Error, Result, Sign};

use super::{binomial, SymMultiSpinor, MAX_RANK};

/// Momentum-space Bargmann-Wigner component of spin `n/2`.
///
/// Massive components hold `n + 1` multispinors, `comps[k]` having `n - k`
/// unprimed and `k` primed indices. Massless components hold a single
/// all-unprimed multispinor.
#[derive(Clone, Debug, PartialEq)]
pub struct BwComponent {
    pub n: usize,
    pub mass: f64,
    pub energy: Sign,
    pub p: FourVector,
    pub comps: Vec<SymMultiSpinor>,
}

impl BwComponent {
    /// Validates shapes and the mass shell.
    pub fn new(
        n: usize,
        mass: f64,
        energy: Sign,
        p: FourVector,
        comps: Vec<SymMultiSpinor>,
    ) -> Result<Self> {
        check_rank(n)?;
        if !(mass >= 0.0) {
            return Err(Error::NegativeMass(mass));
        }
        let expected = if mass > 0.0 { n + 1 } else { 1 };
        if comps.len() != expected {
            return Err(Error::valence(format!("{expected} multispinors"), comps.len()));
        }
        for (k, c) in comps.iter().enumerate() {
            if c.unprimed() != n - k || c.primed() != k {
                return Err(Error::valence(
                    format!("({}, {})", n - k, k),
                    format!("({}, {})", c.unprimed(), c.primed()),
                ));
            }
        }
        let scale = p[0] * p[0];
        if !(p[0] > 0.0) {
            return Err(Error::NotFuturePointing);
        }
        if (p.square() - mass * mass).abs() > tol::SHELL * scale.max(mass * mass) {
            return Err(Error::OffShell {
                found: p.square(),
                expected: mass * mass,
            });
        }
        Ok(Self {
            n,
            mass,
            energy,
            p,
            comps,
        })
    }

    pub fn is_massive(&self) -> bool {
        self.mass > 0.0
    }

    /// Largest graded component modulus.
    pub fn max_abs(&self) -> f64 {
        self.comps.iter().fold(0.0, |m, c| m.max(c.max_abs()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.comps.len() != other.comps.len() {
            return f64::INFINITY;
        }
        self.comps
            .iter()
            .zip(&other.comps)
            .fold(0.0, |m, (a, b)| m.max(a.max_abs_diff(b)))
    }
}

pub(crate) fn check_rank(n: usize) -> Result<()> {
    if n == 0 || n > MAX_RANK {
        return Err(Error::RankTooLarge(n));
    }
    Ok(())
}

/// Wigner amplitudes of a component.
///
/// Massive values are `f_k = √C(n,k) f^{0…01…1}` with `k` ones, so that the
/// null-direction integrand equals `Σ_k |f_k|²`. Massless amplitudes hold one value.
#[derive(Clone, Debug, PartialEq)]
pub struct Amplitudes {
    pub values: Vec<Complex64>,
    pub energy: Sign,
}

impl Amplitudes {
    pub fn new(values: Vec<Complex64>, energy: Sign) -> Self {
        Self { values, energy }
    }

    pub fn massless(f: Complex64, energy: Sign) -> Self {
        Self {
            values: vec![f],
            energy,
        }
    }

    /// Builds from the per-pattern amplitudes `f^{0…01…1}`.
    pub fn from_pattern_values(pattern: &[Complex64], energy: Sign) -> Self {
        let n = pattern.len().saturating_sub(1);
        Self {
            values: pattern
                .iter()
                .enumerate()
                .map(|(k, f)| f * binomial(n, k).sqrt())
                .collect(),
            energy,
        }
    }

    /// Spin-doubled rank for massive amplitudes.
    pub fn n(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    /// Per-pattern amplitudes `f^{0…01…1}`.
    pub fn pattern_values(&self) -> Vec<Complex64> {
        let n = self.n();
        self.values
            .iter()
            .enumerate()
            .map(|(k, f)| f / binomial(n, k).sqrt())
            .collect()
    }

    /// `Σ_k |f_k|²`.
    pub fn norm_sqr(&self) -> f64 {
        self.values.iter().map(|f| f.norm_sqr()).sum()
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.values.len() != other.values.len() {
            return f64::INFINITY;
        }
        self.values
            .iter()
            .zip(&other.values)
            .fold(0.0, |m, (a, b)| m.max((a - b).norm()))
    }
}

/// Choice of direction vectors `t_1 … t_n` in the generalized norm.
#[derive(Clone, Debug, PartialEq)]
pub enum DirectionSpec {
    FixedList(Vec<FourVector>),
    /// All `t_k = (1, 0, 0, 0)`.
    StandardTime,
    /// All `t_k = ω^A ω̄^{A'}` of the default frame at each momentum.
    NullOmega,
    /// Seeded random future timelike vectors.
    RandomTimelike(u64),
}

impl DirectionSpec {
    /// Direction list at momentum `p` for rank `n`.
    pub fn resolve(&self, p: &FourVector, n: usize) -> Result<Vec<FourVector>> {
        match self {
            Self::FixedList(ts) => {
                if ts.len() != n {
                    return Err(Error::valence(format!("{n} directions"), ts.len()));
                }
                Ok(ts.clone())
            }
            Self::StandardTime => Ok(vec![FourVector::time(); n]),
            Self::NullOmega => Ok(vec![default_frame(p)?.omega_vec(); n]),
            Self::RandomTimelike(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                Ok((0..n).map(|_| random_timelike(&mut rng)).collect())
            }
        }
    }

    /// True when every resolved direction is the same vector.
    pub fn is_uniform(&self) -> bool {
        !matches!(self, Self::FixedList(_) | Self::RandomTimelike(_))
    }
}

/// Frame at `p` built from the default reference spinor.
pub fn default_frame(p: &FourVector) -> Result<SpinFrame> {
    frame_for(p, &Spinor::real(DEFAULT_REFERENCE[0], DEFAULT_REFERENCE[1]))
}
