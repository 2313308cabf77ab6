use num_complex::Complex64;

use crate::pauli_lubanski::pl_momentum_rep;
use crate::spinor::{lower_dyad, FourVector, Spinor};
use crate::{tol, Error, Result, Sign};

use super::component::check_rank;
use super::multispinor::apply_slot;
use super::norm::check_directions;
use super::{contract_full, sym_outer, BwComponent, DirectionSpec, SymMultiSpinor};

fn check_null(p: &FourVector) -> Result<()> {
    if !(p[0] > 0.0) {
        return Err(Error::NotFuturePointing);
    }
    if p.square().abs() > tol::NULL * p[0] * p[0] {
        return Err(Error::NotNull(p.square()));
    }
    Ok(())
}

fn require_massless(psi: &BwComponent) -> Result<()> {
    if psi.is_massive() {
        return Err(Error::NotNull(psi.p.square()));
    }
    check_null(&psi.p)
}

/// `ψ_{A_1…A_n} = π_{A_1} … π_{A_n} f` at the flagpole momentum of `π`.
pub fn synth_massless(pi: &Spinor, f: Complex64, n: usize, energy: Sign) -> Result<BwComponent> {
    check_rank(n)?;
    if pi.norm() == 0.0 {
        return Err(Error::ZeroSpinor);
    }
    let pl = pi.lower().0;
    let psi = sym_outer(&vec![pl; n], &[]).scale(f);
    BwComponent::new(n, 0.0, energy, pi.flagpole(), vec![psi])
}

/// `η^{A'_1…A'_n} = (±i)^n ω̄^{A'_1} … ω̄^{A'_n}`.
pub fn hertz_eta(omega: &Spinor, n: usize, energy: Sign) -> SymMultiSpinor {
    let wb = omega.conj().0;
    sym_outer(&[], &vec![wb; n]).scale(Complex64::new(0.0, energy.value()).powi(n as i32))
}

/// `ψ_{A_1…A_n} = (∓i)^n p_{A_1A'_1} … p_{A_nA'_n} ξ^{A'_1…A'_n}`.
pub fn hertz_psi(xi: &SymMultiSpinor, p: &FourVector, energy: Sign) -> Result<BwComponent> {
    check_null(p)?;
    let n = xi.rank();
    check_rank(n)?;
    if xi.unprimed() != 0 {
        return Err(Error::valence(
            format!("(0, {n})"),
            format!("({}, {})", xi.unprimed(), xi.primed()),
        ));
    }
    let pl = lower_dyad(p);
    let mut dense = xi.to_dense();
    for l in 0..n {
        apply_slot(&mut dense, l, &pl);
    }
    let phase = Complex64::new(0.0, -energy.value()).powi(n as i32);
    let psi = SymMultiSpinor::from_dense(n, 0, &dense)?.scale(phase);
    BwComponent::new(n, 0.0, energy, *p, vec![psi])
}

/// `max_a |Σ_k S^a(p)_{A_k}{}^{B_k} ψ_{…B_k…} + (n/2) p^a ψ| / (|p| max|ψ|)`.
pub fn helicity_residual_massless(psi: &BwComponent) -> Result<f64> {
    require_massless(psi)?;
    let c = &psi.comps[0];
    let scale = c.max_abs();
    if scale == 0.0 {
        return Ok(0.0);
    }
    let n = psi.n;
    let op = pl_momentum_rep(&psi.p);
    let base = c.to_dense();
    let mut worst: f64 = 0.0;
    for a in 0..4 {
        let mut acc: Vec<Complex64> = base.iter().map(|z| z * (0.5 * n as f64 * psi.p[a])).collect();
        for l in 0..n {
            let mut slot = base.clone();
            apply_slot(&mut slot, l, &op.unprimed[a]);
            for (x, y) in acc.iter_mut().zip(&slot) {
                *x += y;
            }
        }
        worst = acc.iter().fold(worst, |m, z| m.max(z.norm()));
    }
    Ok(worst / (scale * psi.p.euclidean_norm()))
}

/// `f = ω^{A_1} … ω^{A_n} ψ_{A_1…A_n}`; exact on `π…π f` since `ω^A π_A = π_A ω^A = 1`.
pub fn extract_massless(psi: &BwComponent, omega: &Spinor) -> Result<Complex64> {
    require_massless(psi)?;
    let pairing = omega.flagpole().dot(&psi.p);
    if !((pairing - 1.0).abs() <= tol::FRAME_MATCH.sqrt()) {
        return Err(Error::FrameMismatch);
    }
    contract_full(&psi.comps[0], &vec![omega.0; psi.n], &[])
}

/// Wigner state `ψ / [t_1·p … t_n·p]^{1/2}`.
pub fn wigner_state(psi: &BwComponent, spec: &DirectionSpec) -> Result<SymMultiSpinor> {
    require_massless(psi)?;
    let ts = spec.resolve(&psi.p, psi.n)?;
    check_directions(&ts, &psi.p)?;
    let denom: f64 = ts.iter().map(|t| t.dot(&psi.p)).product();
    Ok(psi.comps[0].scale(Complex64::new(denom.sqrt().recip(), 0.0)))
}
