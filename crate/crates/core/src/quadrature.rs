//! Midpoint quadrature over the mass shell with the invariant measure
//! `d³p / (2p⁰)`, deterministic parallel reduction, and the Lorentz
//! scalarity harness.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::bw::{
    default_frame, norm_integrand, norm_integrand_p_form, standard_integrand, synth_massive,
    synth_massless, transform_component, Amplitudes, BwComponent, DirectionSpec,
};
use crate::frame::frame_massless;
use crate::spinor::{FourVector, Sl2c};
use crate::{Error, Result, Sign};

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "BWSPINOR_THREADS";

/// Spatial momenta below this norm are dropped from massless grids.
pub const MASSLESS_ORIGIN_GUARD: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ShellSample {
    pub p: FourVector,
    /// Weight for `d³p / (2p⁰)`.
    pub weight: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ShellGrid {
    pub mass: f64,
    pub half_width: f64,
    pub points_per_axis: usize,
    pub samples: Vec<ShellSample>,
}

impl ShellGrid {
    /// `Σ weight · 2p⁰`, the covered coordinate volume.
    pub fn volume(&self) -> f64 {
        pairwise_sum(
            &self
                .samples
                .iter()
                .map(|s| s.weight * 2.0 * s.p[0])
                .collect::<Vec<_>>(),
        )
    }
}

/// Tensor-product midpoint rule on `[-L, L]³` with weights `(2L/N)³ / (2p⁰)`.
pub fn build_grid(mass: f64, half_width: f64, points_per_axis: usize) -> Result<ShellGrid> {
    if !(mass >= 0.0) || !mass.is_finite() {
        return Err(Error::NegativeMass(mass));
    }
    if !(half_width > 0.0) || !half_width.is_finite() {
        return Err(Error::InvalidResolution(format!(
            "half width must be positive, got {half_width}"
        )));
    }
    if points_per_axis < 2 {
        return Err(Error::InvalidResolution(format!(
            "need at least 2 points per axis, got {points_per_axis}"
        )));
    }
    let h = 2.0 * half_width / points_per_axis as f64;
    let coord = |i: usize| -half_width + (i as f64 + 0.5) * h;
    let cell = h * h * h;
    let mut samples = Vec::with_capacity(points_per_axis.pow(3));
    for i in 0..points_per_axis {
        for j in 0..points_per_axis {
            for k in 0..points_per_axis {
                let s = [coord(i), coord(j), coord(k)];
                let r = (s[0] * s[0] + s[1] * s[1] + s[2] * s[2]).sqrt();
                if mass == 0.0 && r < MASSLESS_ORIGIN_GUARD {
                    continue;
                }
                let p = FourVector::on_shell(mass, s);
                samples.push(ShellSample {
                    p,
                    weight: cell / (2.0 * p[0]),
                });
            }
        }
    }
    Ok(ShellGrid {
        mass,
        half_width,
        points_per_axis,
        samples,
    })
}

/// Fixed-shape pairwise sum; the result depends only on the slice contents.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    if values.len() <= 8 {
        return values.iter().sum();
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

/// Worker count from [`THREADS_ENV`], if set to a positive integer.
pub fn configured_threads() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

/// Maps `f` over `items` in parallel, preserving order, honoring [`THREADS_ENV`].
pub fn parallel_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(usize, &T) -> U + Sync + Send,
{
    let run = || items.par_iter().enumerate().map(|(i, x)| f(i, x)).collect();
    match configured_threads() {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map(|pool| pool.install(run))
            .unwrap_or_else(|_| run()),
        None => run(),
    }
}

/// Source of Bargmann-Wigner components at arbitrary on-shell momenta.
pub trait FieldProvider: Sync {
    fn n(&self) -> usize;
    fn mass(&self) -> f64;
    fn component_at(&self, p: &FourVector) -> Result<BwComponent>;
}

/// How the frame normalization `N` is chosen.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Normalization {
    /// `N = (ω·p)^{1/2}`.
    FrameDefault,
    Fixed(Complex64),
}

/// Gaussian wavepacket `f_k(p⃗) = c_k exp(-|p⃗ - p⃗₀|² / (4σ²))`.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussianPacket {
    pub n: usize,
    pub mass: f64,
    pub energy: Sign,
    /// `n + 1` coefficients for massive packets, one for massless.
    pub coefficients: Vec<Complex64>,
    pub center: [f64; 3],
    pub sigma: f64,
    pub normalization: Normalization,
}

impl GaussianPacket {
    pub fn envelope(&self, p: &FourVector) -> f64 {
        let s = p.spatial();
        let d2: f64 = (0..3).map(|i| (s[i] - self.center[i]).powi(2)).sum();
        (-d2 / (4.0 * self.sigma * self.sigma)).exp()
    }

    pub fn amplitudes_at(&self, p: &FourVector) -> Amplitudes {
        let g = self.envelope(p);
        Amplitudes::new(
            self.coefficients.iter().map(|c| c * g).collect(),
            self.energy,
        )
    }
}

impl FieldProvider for GaussianPacket {
    fn n(&self) -> usize {
        self.n
    }

    fn mass(&self) -> f64 {
        self.mass
    }

    fn component_at(&self, p: &FourVector) -> Result<BwComponent> {
        let amps = self.amplitudes_at(p);
        if self.mass > 0.0 {
            let frame = default_frame(p)?;
            let nn = match self.normalization {
                Normalization::FrameDefault => frame.default_normalization(),
                Normalization::Fixed(z) => z,
            };
            synth_massive(&frame, &amps, nn)
        } else {
            let frame = frame_massless(p)?;
            synth_massless(&frame.pi, amps.values[0], self.n, self.energy)
        }
    }
}

/// Pointwise integrand used by [`evaluate_norm`].
#[derive(Clone, Debug, PartialEq)]
pub enum Integrand {
    /// `[t…t T] / [t…t p…p]`.
    Generalized(DirectionSpec),
    /// `m^{-2n} p…p T`, massive only.
    MomentumForm,
    /// Standard Bargmann-Wigner integrand `Σ |ψ|² / |p⁰|^n`.
    Standard,
}

impl Integrand {
    pub fn evaluate(&self, psi: &BwComponent) -> Result<f64> {
        match self {
            Self::Generalized(spec) => norm_integrand(psi, spec),
            Self::MomentumForm => norm_integrand_p_form(psi),
            Self::Standard => Ok(standard_integrand(psi)),
        }
    }
}

/// `Σ_samples weight · integrand`, parallel over samples with a fixed-order reduction.
pub fn evaluate_norm<P: FieldProvider>(
    provider: &P,
    grid: &ShellGrid,
    integrand: &Integrand,
) -> Result<f64> {
    let values = parallel_map(&grid.samples, |i, s| {
        provider
            .component_at(&s.p)
            .and_then(|psi| integrand.evaluate(&psi))
            .map(|v| v * s.weight)
            .map_err(|e| e.at_sample(i))
    });
    let values: Vec<f64> = values.into_iter().collect::<Result<_>>()?;
    Ok(pairwise_sum(&values))
}

/// Weighted sum of integrands over explicit components.
pub fn evaluate_components(
    components: &[(BwComponent, f64)],
    integrand: &Integrand,
) -> Result<f64> {
    let values = parallel_map(components, |i, (psi, w)| {
        integrand
            .evaluate(psi)
            .map(|v| v * w)
            .map_err(|e| e.at_sample(i))
    });
    let values: Vec<f64> = values.into_iter().collect::<Result<_>>()?;
    Ok(pairwise_sum(&values))
}

/// Lorentz scalarity of the integrand and the quadrature-level comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct InvarianceReport {
    /// `max |I(Aψ at Λp) - I(ψ at p)| / |I(ψ at p)|` over samples.
    pub pointwise_max_residual: f64,
    pub samples: usize,
    pub norm_original: f64,
    /// Norm of the transformed field on the same grid; differs from
    /// `norm_original` by discretization error only.
    pub norm_transformed: f64,
    pub quadrature_relative_difference: f64,
}

struct Transformed<'a, P> {
    inner: &'a P,
    a: Sl2c,
    inverse: Sl2c,
}

impl<P: FieldProvider> FieldProvider for Transformed<'_, P> {
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn mass(&self) -> f64 {
        self.inner.mass()
    }

    fn component_at(&self, q: &FourVector) -> Result<BwComponent> {
        let p = self.inverse.transform_vector(q);
        let p = FourVector::on_shell(self.inner.mass(), p.spatial());
        transform_component(&self.inner.component_at(&p)?, &self.a)
    }
}

/// Integrand used for scalarity checks: the momentum form when massive,
/// the null-direction form otherwise.
fn scalar_integrand(mass: f64) -> Integrand {
    if mass > 0.0 {
        Integrand::MomentumForm
    } else {
        Integrand::Generalized(DirectionSpec::NullOmega)
    }
}

pub fn invariance_report<P: FieldProvider>(
    provider: &P,
    a: &Sl2c,
    grid: &ShellGrid,
) -> Result<InvarianceReport> {
    let integrand = scalar_integrand(provider.mass());
    let residuals = parallel_map(&grid.samples, |i, s| {
        let run = || -> Result<f64> {
            let psi = provider.component_at(&s.p)?;
            let moved = transform_component(&psi, a)?;
            let before = integrand.evaluate(&psi)?;
            let after = integrand.evaluate(&moved)?;
            let scale = before.abs().max(f64::MIN_POSITIVE);
            Ok(if before == after { 0.0 } else { (after - before).abs() / scale })
        };
        run().map_err(|e| e.at_sample(i))
    });
    let residuals: Vec<f64> = residuals.into_iter().collect::<Result<_>>()?;
    let pointwise_max_residual = residuals.iter().fold(0.0, |m: f64, r| m.max(*r));
    let norm_original = evaluate_norm(provider, grid, &integrand)?;
    let moved = Transformed {
        inner: provider,
        a: *a,
        inverse: a.inverse(),
    };
    let norm_transformed = evaluate_norm(&moved, grid, &integrand)?;
    Ok(InvarianceReport {
        pointwise_max_residual,
        samples: grid.samples.len(),
        norm_original,
        norm_transformed,
        quadrature_relative_difference: (norm_transformed - norm_original).abs()
            / norm_original.abs().max(f64::MIN_POSITIVE),
    })
}
