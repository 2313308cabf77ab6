use num_complex::Complex64;

use crate::spinor::{upper_dyad, FourVector, Mat2};
use crate::{tol, Error, Result};

use super::multispinor::apply_slot;
use super::{binomial, BwComponent, DirectionSpec, SymMultiSpinor};

/// Checks `|t_k·p| ≥ 1e-12 |t_k| |p|` for every direction.
pub fn check_directions(ts: &[FourVector], p: &FourVector) -> Result<()> {
    for (index, t) in ts.iter().enumerate() {
        let dot = t.dot(p);
        if !(dot.abs() >= tol::ORTHOGONAL * t.euclidean_norm() * p.euclidean_norm()) {
            return Err(Error::OrthogonalDirection { index, dot });
        }
    }
    Ok(())
}

/// `Σ_{X,Y} ψ(X) ψ̄(Y) Π_l K_l(X_l, Y_l)` for the index-type pattern `mask`
/// (bit `l` set when slot `l` is primed).
fn pattern_form(c: &SymMultiSpinor, mask: usize, n: usize, dyads: &[Mat2]) -> Complex64 {
    let value = |idx: usize| {
        let i = (idx & !mask).count_ones() as usize;
        let j = (idx & mask).count_ones() as usize;
        c.get(i, j)
    };
    let mut w: Vec<Complex64> = (0..1usize << n).map(|idx| value(idx).conj()).collect();
    for (l, t) in dyads.iter().enumerate() {
        if mask >> l & 1 == 1 {
            apply_slot(&mut w, l, &t.transpose());
        } else {
            apply_slot(&mut w, l, t);
        }
    }
    w.iter().enumerate().map(|(idx, x)| value(idx) * x).sum()
}

/// `t_1^{a_1} … t_n^{a_n} T_{a_1…a_n}`, summing `ψψ̄` over all index-type patterns.
pub fn contract_t(psi: &BwComponent, ts: &[FourVector]) -> Result<f64> {
    let n = psi.n;
    if ts.len() != n {
        return Err(Error::valence(format!("{n} directions"), ts.len()));
    }
    check_directions(ts, &psi.p)?;
    let dyads: Vec<Mat2> = ts.iter().map(upper_dyad).collect();
    if !psi.is_massive() {
        return Ok(pattern_form(&psi.comps[0], 0, n, &dyads).re);
    }
    let uniform = ts.iter().all(|t| t == &ts[0]);
    let total: Complex64 = if uniform {
        (0..=n)
            .map(|k| {
                let mask = ((1usize << k) - 1) << (n - k);
                pattern_form(&psi.comps[k], mask, n, &dyads) * binomial(n, k)
            })
            .sum()
    } else {
        (0..1usize << n)
            .map(|mask| pattern_form(&psi.comps[mask.count_ones() as usize], mask, n, &dyads))
            .sum()
    };
    Ok(total.re)
}

/// `[t…t T] / [t…t p…p]` with directions resolved at `ψ.p`.
pub fn norm_integrand(psi: &BwComponent, spec: &DirectionSpec) -> Result<f64> {
    let ts = spec.resolve(&psi.p, psi.n)?;
    norm_integrand_with(psi, &ts)
}

/// `[t…t T] / [t…t p…p]` for an explicit direction list.
pub fn norm_integrand_with(psi: &BwComponent, ts: &[FourVector]) -> Result<f64> {
    let t = contract_t(psi, ts)?;
    let denom: f64 = ts.iter().map(|t| t.dot(&psi.p)).product();
    Ok(t / denom)
}

/// `m^{-2n} p^{a_1}…p^{a_n} T_{a_1…a_n}`.
pub fn norm_integrand_p_form(psi: &BwComponent) -> Result<f64> {
    if !psi.is_massive() {
        return Err(Error::NotMassive);
    }
    let t = contract_t(psi, &vec![psi.p; psi.n])?;
    Ok(t / psi.mass.powi(2 * psi.n as i32))
}

/// Standard Bargmann-Wigner integrand `Σ_patterns |ψ|² / |p⁰|^n`.
pub fn standard_integrand(psi: &BwComponent) -> f64 {
    let n = psi.n;
    let sum: f64 = if psi.is_massive() {
        psi.comps
            .iter()
            .enumerate()
            .map(|(k, c)| binomial(n, k) * c.dense_norm_sqr())
            .sum()
    } else {
        psi.comps[0].dense_norm_sqr()
    };
    sum / psi.p[0].abs().powi(n as i32)
}
