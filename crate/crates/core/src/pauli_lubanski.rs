//! Momentum-space Pauli-Lubanski vector, its directional projections, the spin
//! and energy projectors, and the `χ` eigenbasis of a massive spin-frame.
//!
//! Matrices act on covariant spinors: `(Mψ)_X = M[X][Y] ψ_Y`. Bispinors are
//! ordered `(ψ_A, ξ_{A'})`, unprimed block first.

use nalgebra::{Matrix4, Vector4};
use num_complex::Complex64;

use crate::frame::{FrameKind, SpinFrame};
use crate::spinor::{
    epsilon, ivdw_mixed, ivdw_upper, lower_dyad, max_abs, mixed_lower_first, mixed_lower_second,
    raise_both, upper_dyad, FourVector, Mat2, Vec2,
};
use crate::{tol, Error, Result, Sign};

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Four complex components `(ψ_0, ψ_1, ξ_{0'}, ξ_{1'})`.
pub type Bispinor = Vector4<Complex64>;
/// 4×4 complex matrix acting on [`Bispinor`]s.
pub type BispinorMatrix = Matrix4<Complex64>;

pub fn bispinor(unprimed: &Vec2, primed: &Vec2) -> Bispinor {
    Bispinor::new(unprimed[0], unprimed[1], primed[0], primed[1])
}

/// Splits a bispinor into its unprimed and primed halves.
pub fn split(b: &Bispinor) -> (Vec2, Vec2) {
    (Vec2::new(b[0], b[1]), Vec2::new(b[2], b[3]))
}

/// Assembles a 4×4 matrix from 2×2 blocks `[[tl, tr], [bl, br]]`.
pub fn blocks(tl: &Mat2, tr: &Mat2, bl: &Mat2, br: &Mat2) -> BispinorMatrix {
    let mut m = BispinorMatrix::zeros();
    m.fixed_view_mut::<2, 2>(0, 0).copy_from(tl);
    m.fixed_view_mut::<2, 2>(0, 2).copy_from(tr);
    m.fixed_view_mut::<2, 2>(2, 0).copy_from(bl);
    m.fixed_view_mut::<2, 2>(2, 2).copy_from(br);
    m
}

pub fn block_diag(unprimed: &Mat2, primed: &Mat2) -> BispinorMatrix {
    let z = Mat2::zeros();
    blocks(unprimed, &z, &z, primed)
}

/// Largest entry modulus of a 4×4 matrix.
pub fn max_abs4(m: &BispinorMatrix) -> f64 {
    m.iter().fold(0.0, |a, z| a.max(z.norm()))
}

/// A pair of 2×2 operators, one per chirality.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinBlocks {
    /// `M_X{}^Y`
    pub unprimed: Mat2,
    /// `M_{X'}{}^{Y'}`
    pub primed: Mat2,
}

impl SpinBlocks {
    pub fn to_bispinor_matrix(&self) -> BispinorMatrix {
        block_diag(&self.unprimed, &self.primed)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        max_abs(&(self.unprimed - other.unprimed)).max(max_abs(&(self.primed - other.primed)))
    }
}

/// `S^a(p)` in both chirality blocks, upper world index.
#[derive(Clone, Debug, PartialEq)]
pub struct PLOperator {
    pub p: FourVector,
    pub unprimed: [Mat2; 4],
    pub primed: [Mat2; 4],
}

impl PLOperator {
    /// `t_a S^a(p)`.
    pub fn project(&self, t: &FourVector) -> SpinBlocks {
        let tl = t.lowered();
        let mut u = Mat2::zeros();
        let mut v = Mat2::zeros();
        for a in 0..4 {
            u += self.unprimed[a].scale(tl[a]);
            v += self.primed[a].scale(tl[a]);
        }
        SpinBlocks {
            unprimed: u,
            primed: v,
        }
    }

    /// Block-diagonal `S^a(p)_α{}^β`.
    pub fn bispinor_component(&self, a: usize) -> BispinorMatrix {
        block_diag(&self.unprimed[a], &self.primed[a])
    }
}

/// `S^a(p)_X{}^Y = -½(p_{XX'} g^{aYX'} - g^a_{XX'} p^{YX'})` and
/// `S^a(p)_{X'}{}^{Y'} = ½(p_{AX'} g^{aAY'} - g^a_{AX'} p^{AY'})`.
pub fn pl_momentum_rep(p: &FourVector) -> PLOperator {
    let pu = upper_dyad(p);
    let pl = lower_dyad(p);
    let unprimed = std::array::from_fn(|a| {
        (pl * ivdw_upper(a).transpose() - ivdw_mixed(a) * pu.transpose()).scale(-0.5)
    });
    let primed = std::array::from_fn(|a| {
        (pl.transpose() * ivdw_upper(a) - ivdw_mixed(a).transpose() * pu).scale(0.5)
    });
    PLOperator {
        p: *p,
        unprimed,
        primed,
    }
}

/// `S(t,p)` from the closed spinor forms
/// `S_X{}^Y = ½(t^Y{}_{X'} p_X{}^{X'} + t_{XX'} p^{YX'})` and
/// `S_{X'}{}^{Y'} = -½(t_X{}^{Y'} p^X{}_{X'} + t_{XX'} p^{XY'})`.
pub fn pl_project(t: &FourVector, p: &FourVector) -> SpinBlocks {
    let (tlf, tls, tl) = (mixed_lower_first(t), mixed_lower_second(t), lower_dyad(t));
    let (plf, pls, pu) = (mixed_lower_first(p), mixed_lower_second(p), upper_dyad(p));
    SpinBlocks {
        unprimed: (plf * tls.transpose() + tl * pu.transpose()).scale(0.5),
        primed: (pls.transpose() * tlf + tl.transpose() * pu).scale(-0.5),
    }
}

/// `(t·p)² - m² t²` with `m² = p·p`.
pub fn pl_discriminant(t: &FourVector, p: &FourVector) -> f64 {
    let tp = t.dot(p);
    tp * tp - p.square() * t.square()
}

/// Half-eigenvalues `½λ^{(±)} = ±½ √((t·p)² - m² t²)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlEigenvalues {
    pub plus: f64,
    pub minus: f64,
}

impl PlEigenvalues {
    /// `λ^{(+)} = √((t·p)² - m² t²)`.
    pub fn lambda(&self) -> f64 {
        2.0 * self.plus
    }
}

fn direction_scale(t: &FourVector, p: &FourVector) -> f64 {
    t.euclidean_norm() * p.euclidean_norm()
}

pub fn pl_eigenvalues(t: &FourVector, p: &FourVector) -> Result<PlEigenvalues> {
    let d = pl_discriminant(t, p);
    let scale = direction_scale(t, p);
    if d < -tol::DEGENERATE_SPIN * scale * scale {
        return Err(Error::ComplexEigenvalues(d));
    }
    let h = 0.5 * d.max(0.0).sqrt();
    Ok(PlEigenvalues {
        plus: h,
        minus: -h,
    })
}

/// Both eigenvalues of a 2×2 complex matrix, ordered by descending real part.
pub fn matrix_eigenvalues(m: &Mat2) -> (Complex64, Complex64) {
    let half_tr = m.trace() * 0.5;
    let root = (half_tr * half_tr - m.determinant()).sqrt();
    let (a, b) = (half_tr + root, half_tr - root);
    if a.re >= b.re {
        (a, b)
    } else {
        (b, a)
    }
}

/// `[-½ S_{XY} S^{XY}]^{1/2}` for one block, with `S_{XY} = S_X{}^Z ε_{ZY}`.
fn block_magnitude(s: &Mat2) -> Complex64 {
    let low = s * epsilon();
    let up = raise_both(&low);
    (low.component_mul(&up).sum() * -0.5).sqrt()
}

/// Spin projectors `Π^{(±)} = ½(ε ± [-½ S_{XY}S^{XY}]^{-1/2} S)` in both blocks.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinProjectors {
    pub plus: SpinBlocks,
    pub minus: SpinBlocks,
    /// `λ^{(+)}`.
    pub lambda: f64,
}

impl SpinProjectors {
    pub fn get(&self, spin: Sign) -> &SpinBlocks {
        match spin {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }
}

pub fn pl_spin_projectors(t: &FourVector, p: &FourVector) -> Result<SpinProjectors> {
    let ev = pl_eigenvalues(t, p)?;
    let lambda = ev.lambda();
    if !(lambda > tol::DEGENERATE_SPIN * direction_scale(t, p)) {
        return Err(Error::DegenerateSpinDirection(lambda));
    }
    let s = pl_project(t, p);
    let id = Mat2::identity();
    let mu_u = block_magnitude(&s.unprimed);
    let mu_p = block_magnitude(&s.primed);
    let make = |sign: f64| SpinBlocks {
        unprimed: (id + s.unprimed * (sign / mu_u)).scale(0.5),
        primed: (id + s.primed * (sign / mu_p)).scale(0.5),
    };
    Ok(SpinProjectors {
        plus: make(1.0),
        minus: make(-1.0),
        lambda,
    })
}

fn require_mass(p: &FourVector) -> Result<f64> {
    let m2 = p.square();
    if !(m2 > tol::NULL * p[0] * p[0]) {
        return Err(Error::MasslessNotSupported);
    }
    Ok(m2.sqrt())
}

/// `P(±p) = ½[[ε, ±(√2/m) p_A{}^{B'}], [∓(√2/m) p^B{}_{A'}, ε]]`.
pub fn energy_projector(p: &FourVector, energy: Sign) -> Result<BispinorMatrix> {
    let m = require_mass(p)?;
    let c = energy.value() * SQRT_2 / m;
    let id = Mat2::identity();
    Ok(blocks(
        &id,
        &mixed_lower_first(p).scale(c),
        &mixed_lower_second(p).transpose().scale(-c),
        &id,
    )
    .scale(0.5))
}

/// `(P(+p), P(-p))`.
pub fn energy_projectors(p: &FourVector) -> Result<(BispinorMatrix, BispinorMatrix)> {
    Ok((
        energy_projector(p, Sign::Plus)?,
        energy_projector(p, Sign::Minus)?,
    ))
}

/// The four projectors `Π^{(s)}_{e}` indexed by spin sign `s` and energy sign `e`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CombinedProjectors {
    matrices: [[BispinorMatrix; 2]; 2],
}

impl CombinedProjectors {
    pub fn get(&self, spin: Sign, energy: Sign) -> &BispinorMatrix {
        &self.matrices[spin.index()][energy.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Sign, Sign, &BispinorMatrix)> {
        Sign::BOTH.into_iter().flat_map(move |s| {
            Sign::BOTH
                .into_iter()
                .map(move |e| (s, e, &self.matrices[s.index()][e.index()]))
        })
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.iter()
            .map(|(s, e, m)| max_abs4(&(m - other.get(s, e))))
            .fold(0.0, f64::max)
    }
}

fn build_combined(f: impl Fn(Sign, Sign) -> BispinorMatrix) -> CombinedProjectors {
    CombinedProjectors {
        matrices: std::array::from_fn(|s| std::array::from_fn(|e| f(Sign::BOTH[s], Sign::BOTH[e]))),
    }
}

/// `Π^{(s)}_e = P(e p) Π^{(s)}(t,p)`.
pub fn combined_projectors(t: &FourVector, p: &FourVector) -> Result<CombinedProjectors> {
    let spin = pl_spin_projectors(t, p)?;
    let (pp, pm) = energy_projectors(p)?;
    Ok(build_combined(|s, e| {
        let en = if e == Sign::Plus { &pp } else { &pm };
        en * spin.get(s).to_bispinor_matrix()
    }))
}

/// The four combined projectors from their closed-form 4×4 expression in
/// terms of `t`, `p`, `m` and `λ^{(±)}`.
pub fn combined_projectors_closed_form(
    t: &FourVector,
    p: &FourVector,
) -> Result<CombinedProjectors> {
    let m = require_mass(p)?;
    let base = pl_eigenvalues(t, p)?.lambda();
    if !(base > tol::DEGENERATE_SPIN * direction_scale(t, p)) {
        return Err(Error::DegenerateSpinDirection(base));
    }
    let s = pl_project(t, p);
    let tp = t.dot(p);
    let id = Mat2::identity();
    let (plf, pls) = (mixed_lower_first(p), mixed_lower_second(p));
    let (tlf, tls) = (mixed_lower_first(t), mixed_lower_second(t));
    Ok(build_combined(|spin, energy| {
        let lam = spin.value() * base;
        let e = energy.value();
        let tl = id.scale(lam) + s.unprimed.scale(2.0);
        let br = id.scale(lam) + s.primed.scale(2.0);
        let tr = (plf.scale(lam - tp) + tlf.scale(m * m)).scale(e * SQRT_2 / m);
        let bl = (pls.scale(lam + tp) - tls.scale(m * m))
            .transpose()
            .scale(-e * SQRT_2 / m);
        blocks(&tl, &tr, &bl, &br).scale(1.0 / (4.0 * lam))
    }))
}

/// The four combined projectors for `t = ω` written directly in the frame spinors.
pub fn null_frame_projectors(frame: &SpinFrame) -> Result<CombinedProjectors> {
    if frame.kind() != FrameKind::Massive {
        return Err(Error::NotMassive);
    }
    let w = frame.omega.0;
    let pi = frame.pi.0;
    let wl = frame.omega.lower().0;
    let pl = frame.pi.lower().0;
    let outer = |a: &Vec2, b: &Vec2| a * b.transpose();
    let c = |v: &Vec2| v.map(|z| z.conj());
    let id = Mat2::identity();
    let sym = outer(&pl, &w) + outer(&wl, &pi);
    let sym_bar = outer(&c(&pl), &c(&w)) + outer(&c(&wl), &c(&pi));
    Ok(build_combined(|spin, energy| {
        let e = energy.value();
        let m = match spin {
            Sign::Plus => blocks(
                &(id + sym),
                &outer(&wl, &c(&w)).scale(2.0 * e),
                &outer(&c(&pl), &pi).scale(-2.0 * e),
                &(id - sym_bar),
            ),
            Sign::Minus => blocks(
                &(id - sym),
                &outer(&pl, &c(&pi)).scale(2.0 * e),
                &outer(&c(&wl), &w).scale(-2.0 * e),
                &(id + sym_bar),
            ),
        };
        m.scale(0.25)
    }))
}

/// The eigenbispinors `χ^{(s)}_e` of a massive frame:
/// `χ^{(+)}_e = N(e ω_A, -π̄_{A'})`, `χ^{(-)}_e = N(-π_A, -e ω̄_{A'})`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChiBasis {
    pub normalization: Complex64,
    vectors: [[Bispinor; 2]; 2],
}

impl ChiBasis {
    pub fn get(&self, spin: Sign, energy: Sign) -> &Bispinor {
        &self.vectors[spin.index()][energy.index()]
    }

    /// Columns `χ^{(+)}_+, χ^{(+)}_-, χ^{(-)}_+, χ^{(-)}_-`.
    pub fn matrix(&self) -> BispinorMatrix {
        let cols = [
            self.vectors[0][0],
            self.vectors[0][1],
            self.vectors[1][0],
            self.vectors[1][1],
        ];
        BispinorMatrix::from_columns(&cols)
    }
}

/// Unprimed and primed halves of `χ^{(spin)}_{energy}` divided by `N`.
pub(crate) fn chi_halves(frame: &SpinFrame, spin: Sign, energy: Sign) -> (Vec2, Vec2) {
    let e = Complex64::new(energy.value(), 0.0);
    let wl = frame.omega.lower().0;
    let pl = frame.pi.lower().0;
    let c = |v: &Vec2| v.map(|z| z.conj());
    match spin {
        Sign::Plus => (wl * e, -c(&pl)),
        Sign::Minus => (-pl, -c(&wl) * e),
    }
}

pub fn chi_basis(frame: &SpinFrame, normalization: Complex64) -> Result<ChiBasis> {
    if frame.kind() != FrameKind::Massive {
        return Err(Error::NotMassive);
    }
    Ok(ChiBasis {
        normalization,
        vectors: std::array::from_fn(|s| {
            std::array::from_fn(|e| {
                let (u, v) = chi_halves(frame, Sign::BOTH[s], Sign::BOTH[e]);
                bispinor(&u, &v) * normalization
            })
        }),
    })
}

/// Max relative residual of the frame eigenrelations for `t = ω`:
/// `S ω = +½(t·p) ω`, `S π = -½(t·p) π`, `S̄ ω̄ = -½(t·p) ω̄`, `S̄ π̄ = +½(t·p) π̄`.
pub fn pl_eigen_relations_residual(frame: &SpinFrame) -> f64 {
    let t = frame.omega_vec();
    let tp = t.dot(&frame.p);
    let s = pl_project(&t, &frame.p);
    let wl = frame.omega.lower().0;
    let pl = frame.pi.lower().0;
    let c = |v: &Vec2| v.map(|z| z.conj());
    let h = 0.5 * tp;
    let rel = |m: &Mat2, v: &Vec2, k: f64| (m * v - v.scale(k)).norm() / (tp.abs() * v.norm());
    rel(&s.unprimed, &wl, h)
        .max(rel(&s.unprimed, &pl, -h))
        .max(rel(&s.primed, &c(&wl), -h))
        .max(rel(&s.primed, &c(&pl), h))
}
