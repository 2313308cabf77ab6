//! Null spin-frames `(ω, π)` attached to a momentum.
//!
//! Massless frames satisfy `π^A π̄^{A'} = p^{AA'}` and `π_A ω^A = 1`.
//! Massive frames satisfy `ω_A π^A = 1`, `ω·p = m/√2` and
//! `p = (m/√2)(ω^a + π^a)`. The two regimes normalise the frame with
//! opposite contraction orders; [`SpinFrame::contractions`] reports both.

use num_complex::Complex64;

use crate::spinor::{upper_dyad, vector_from_upper, FourVector, Spinor, Vec2};
use crate::{tol, Error, Result};

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Reference spinor used when a massive frame is needed and none is given.
pub const DEFAULT_REFERENCE: [f64; 2] = [1.0, 0.0];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrameKind {
    Massless,
    Massive,
}

/// A spin-frame at momentum `p`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinFrame {
    pub pi: Spinor,
    pub omega: Spinor,
    pub p: FourVector,
    pub mass: f64,
}

/// Both contraction orders of a frame.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrameContractions {
    /// `ω_A π^A`; equals 1 for massive frames.
    pub omega_pi: Complex64,
    /// `π_A ω^A`; equals 1 for massless frames.
    pub pi_omega: Complex64,
}

impl SpinFrame {
    pub fn kind(&self) -> FrameKind {
        if self.mass > 0.0 {
            FrameKind::Massive
        } else {
            FrameKind::Massless
        }
    }

    pub fn pi_vec(&self) -> FourVector {
        self.pi.flagpole()
    }

    pub fn omega_vec(&self) -> FourVector {
        self.omega.flagpole()
    }

    pub fn contractions(&self) -> FrameContractions {
        FrameContractions {
            omega_pi: self.omega.lower().contract(&self.pi),
            pi_omega: self.pi.lower().contract(&self.omega),
        }
    }

    /// `ω·p`.
    pub fn omega_dot_p(&self) -> f64 {
        self.omega_vec().dot(&self.p)
    }

    /// Normalisation `N = (ω·p)^{1/2}`, equal to `(m/√2)^{1/2}` for massive frames.
    pub fn default_normalization(&self) -> Complex64 {
        Complex64::new(self.omega_dot_p().sqrt(), 0.0)
    }

    /// True when `q` agrees with the frame momentum to the frame-matching tolerance.
    pub fn matches(&self, q: &FourVector) -> bool {
        let scale = self.p.euclidean_norm().max(q.euclidean_norm()).max(1e-300);
        self.p.max_abs_diff(q) <= tol::FRAME_MATCH * scale
    }
}

fn check_null(p: &FourVector) -> Result<()> {
    if !(p[0] > 0.0) {
        return Err(Error::NotFuturePointing);
    }
    if p.square().abs() > tol::NULL * p[0] * p[0] {
        return Err(Error::NotNull(p.square()));
    }
    Ok(())
}

/// Flag spinor `π` with `π^A π̄^{A'} = p^{AA'}` for a future null `p`; the
/// component of largest modulus is made real and positive.
pub fn flag_decompose_massless(p: &FourVector) -> Result<Spinor> {
    check_null(p)?;
    let m = upper_dyad(p);
    let (d0, d1) = (m[(0, 0)].re, m[(1, 1)].re);
    let pi = if d0 >= d1 {
        let a = d0.max(0.0).sqrt();
        Spinor::new(Complex64::new(a, 0.0), m[(1, 0)] / a)
    } else {
        let b = d1.max(0.0).sqrt();
        Spinor::new(m[(0, 1)] / b, Complex64::new(b, 0.0))
    };
    Ok(pi)
}

/// Partner `ω` with `π_A ω^A = 1`, fixed by Euclidean orthogonality to `π`.
pub fn partner_massless(pi: &Spinor) -> Result<Spinor> {
    let n2 = pi.0[0].norm_sqr() + pi.0[1].norm_sqr();
    if n2 == 0.0 || !n2.is_finite() {
        return Err(Error::ZeroSpinor);
    }
    Ok(Spinor(Vec2::new(-pi.0[1].conj(), pi.0[0].conj()).unscale(n2)))
}

/// Frame of a future null momentum: flag spinor and its orthogonal partner.
pub fn frame_massless(p: &FourVector) -> Result<SpinFrame> {
    let pi = flag_decompose_massless(p)?;
    let omega = partner_massless(&pi)?;
    Ok(SpinFrame {
        pi,
        omega,
        p: *p,
        mass: 0.0,
    })
}

/// Frame of a future timelike momentum built from the reference spinor `ν`.
pub fn frame_massive(p: &FourVector, nu: &Spinor) -> Result<SpinFrame> {
    if !(p[0] > 0.0) {
        return Err(Error::NotFuturePointing);
    }
    let m2 = p.square();
    if !(m2 > tol::NULL * p[0] * p[0]) {
        return Err(Error::NotTimelike(m2));
    }
    if nu.norm() == 0.0 {
        return Err(Error::ZeroSpinor);
    }
    let m = m2.sqrt();
    let pu = upper_dyad(p);
    let nu_low = nu.lower().0;
    let nu_bar_low = nu_low.map(|z| z.conj());
    let den = (nu_low.transpose() * pu * nu_bar_low)[(0, 0)].re;
    if !(den > tol::REFERENCE * p.euclidean_norm() * nu.norm().powi(2)) {
        return Err(Error::DegenerateReference(den));
    }
    let root = den.sqrt();
    let omega = Spinor(nu.0.scale((m / SQRT_2).sqrt() / root));
    let pi = Spinor((pu * nu_bar_low).scale((SQRT_2 / m).sqrt() / root));
    Ok(SpinFrame {
        pi,
        omega,
        p: *p,
        mass: m,
    })
}

/// Frame of either kind; null momenta ignore the reference spinor.
pub fn frame_for(p: &FourVector, nu: &Spinor) -> Result<SpinFrame> {
    if p.square().abs() <= tol::NULL * p[0] * p[0] {
        frame_massless(p)
    } else {
        frame_massive(p, nu)
    }
}

/// Relative residuals of the frame invariants.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrameResiduals {
    /// `|ω_A π^A - 1|` (massive) or `|π_A ω^A - 1|` (massless).
    pub normalization: f64,
    /// `|ω·p - m/√2| / m` (massive only).
    pub omega_dot_p: f64,
    /// Massive: `|p - (m/√2)(ω^a + π^a)| / |p|`; massless: `|π^A π̄^{A'} - p^{AA'}| / |p|`.
    pub reconstruction: f64,
    /// `|v·v| / |v|²` for both flagpoles.
    pub null_flags: f64,
    /// 0 when both flagpoles are future-pointing, 1 otherwise.
    pub future_flags: f64,
}

impl FrameResiduals {
    pub fn max(&self) -> f64 {
        self.normalization
            .max(self.omega_dot_p)
            .max(self.reconstruction)
            .max(self.null_flags)
            .max(self.future_flags)
    }
}

pub fn frame_residuals(frame: &SpinFrame) -> FrameResiduals {
    let c = frame.contractions();
    let w = frame.omega_vec();
    let v = frame.pi_vec();
    let scale = frame.p.euclidean_norm().max(1e-300);
    let null_flags = w.null_defect().max(v.null_defect());
    let future_flags = if w[0] > 0.0 && v[0] > 0.0 { 0.0 } else { 1.0 };
    match frame.kind() {
        FrameKind::Massive => {
            let m = frame.mass;
            let recon = frame.p - (w + v) * (m / SQRT_2);
            FrameResiduals {
                normalization: (c.omega_pi - 1.0).norm(),
                omega_dot_p: (frame.omega_dot_p() - m / SQRT_2).abs() / m,
                reconstruction: recon.max_abs() / scale,
                null_flags,
                future_flags,
            }
        }
        FrameKind::Massless => {
            let recon = vector_from_upper(&frame.pi.outer_conj()) - frame.p;
            FrameResiduals {
                normalization: (c.pi_omega - 1.0).norm(),
                omega_dot_p: 0.0,
                reconstruction: recon.max_abs() / scale,
                null_flags,
                future_flags,
            }
        }
    }
}
