use std::f64::consts::SQRT_2;

use num_complex::Complex64;

use crate::frame::{FrameKind, SpinFrame};
use crate::pauli_lubanski::chi_halves;
use crate::spinor::{mixed_lower_first, mixed_lower_second, Vec2};
use crate::{Error, Result, Sign};

use super::component::check_rank;
use super::{binomial, contract_full, sym_outer, Amplitudes, BwComponent, SymMultiSpinor};

/// Massive component `Σ χ^{(s_1)} ⊗ … ⊗ χ^{(s_n)} f^{(s_1…s_n)}` with the
/// pattern amplitude depending only on the number of `(+)` labels.
pub fn synth_massive(
    frame: &SpinFrame,
    amps: &Amplitudes,
    normalization: Complex64,
) -> Result<BwComponent> {
    if frame.kind() != FrameKind::Massive {
        return Err(Error::NotMassive);
    }
    let n = amps.n();
    check_rank(n)?;
    let pattern = amps.pattern_values();
    let e = amps.energy;
    let (up, vp) = chi_halves(frame, Sign::Plus, e);
    let (um, vm) = chi_halves(frame, Sign::Minus, e);
    let (up, vp, um, vm) = (
        up * normalization,
        vp * normalization,
        um * normalization,
        vm * normalization,
    );
    let comps = (0..=n)
        .map(|k| {
            let r = n - k;
            let mut acc = SymMultiSpinor::zeros(r, k);
            for a in 0..=r {
                for b in 0..=k {
                    let f = pattern[a + b];
                    if f == Complex64::new(0.0, 0.0) {
                        continue;
                    }
                    let unprimed: Vec<Vec2> = std::iter::repeat(up)
                        .take(a)
                        .chain(std::iter::repeat(um).take(r - a))
                        .collect();
                    let primed: Vec<Vec2> = std::iter::repeat(vp)
                        .take(b)
                        .chain(std::iter::repeat(vm).take(k - b))
                        .collect();
                    let w = f * (binomial(r, a) * binomial(k, b));
                    acc = acc
                        .add(&sym_outer(&unprimed, &primed).scale(w))
                        .expect("same shape");
                }
            }
            acc
        })
        .collect();
    BwComponent::new(n, frame.mass, e, frame.p, comps)
}

/// Pattern amplitudes `N^{-n} ω^{A_1}…ω^{A_r} ω̄^{A'_{r+1}}…ω̄^{A'_n} ψ^{0…01…1}`.
pub fn extract_pattern_amplitudes(
    psi: &BwComponent,
    frame: &SpinFrame,
    normalization: Complex64,
) -> Result<Vec<Complex64>> {
    if !psi.is_massive() || frame.kind() != FrameKind::Massive {
        return Err(Error::NotMassive);
    }
    if !frame.matches(&psi.p) {
        return Err(Error::FrameMismatch);
    }
    let n = psi.n;
    let w = frame.omega.0;
    let wb = frame.omega.conj().0;
    let inv = normalization.powi(-(n as i32));
    psi.comps
        .iter()
        .enumerate()
        .map(|(k, c)| Ok(contract_full(c, &vec![w; n - k], &vec![wb; k])? * inv))
        .collect()
}

/// Normalized amplitudes `f_k = √C(n,k) f^{0…01…1}`.
pub fn extract_massive(
    psi: &BwComponent,
    frame: &SpinFrame,
    normalization: Complex64,
) -> Result<Amplitudes> {
    let pattern = extract_pattern_amplitudes(psi, frame, normalization)?;
    Ok(Amplitudes::from_pattern_values(&pattern, psi.energy))
}

/// Amplitudes by orthogonal projection onto the synthesized basis fields,
/// using the inner product summed over all index type patterns.
///
/// Agrees with [`extract_massive`] on synthesized fields; rounding stays near
/// machine precision for frames where the contraction loses digits.
pub fn project_massive(
    psi: &BwComponent,
    frame: &SpinFrame,
    normalization: Complex64,
) -> Result<Amplitudes> {
    if !psi.is_massive() || frame.kind() != FrameKind::Massive {
        return Err(Error::NotMassive);
    }
    if !frame.matches(&psi.p) {
        return Err(Error::FrameMismatch);
    }
    let n = psi.n;
    let zero = Complex64::new(0.0, 0.0);
    let pattern = (0..=n)
        .map(|j| {
            let mut unit = vec![zero; n + 1];
            unit[j] = Complex64::new(1.0, 0.0);
            let basis = synth_massive(frame, &Amplitudes::from_pattern_values(&unit, psi.energy), normalization)?;
            let (num, den) = full_inner(&basis, psi)?;
            Ok(num / den.re)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Amplitudes::from_pattern_values(&pattern, psi.energy))
}

/// `(⟨a, b⟩, ⟨a, a⟩)` summed over every unprimed/primed type pattern.
pub(crate) fn full_inner(a: &BwComponent, b: &BwComponent) -> Result<(Complex64, Complex64)> {
    let mut ab = Complex64::new(0.0, 0.0);
    let mut aa = Complex64::new(0.0, 0.0);
    for (k, (x, y)) in a.comps.iter().zip(&b.comps).enumerate() {
        let w = binomial(a.n, k);
        ab += x.dense_inner(y)? * w;
        aa += x.dense_inner(x)? * w;
    }
    Ok((ab, aa))
}

/// Relative residual of `±p^A_{A'} ψ^{…0…}_{…A…} = -(m/√2) ψ^{…1…}_{…A'…}` and
/// `±p_A^{A'} ψ^{…1…}_{…A'…} = (m/√2) ψ^{…0…}_{…A…}` over all index classes.
pub fn field_equation_residual_massive(psi: &BwComponent) -> Result<f64> {
    if !psi.is_massive() {
        return Err(Error::NotMassive);
    }
    let scale = psi.max_abs();
    if scale == 0.0 {
        return Ok(0.0);
    }
    let e = psi.energy.value();
    let h = psi.mass / SQRT_2;
    let up = mixed_lower_second(&psi.p).scale(e);
    let down = mixed_lower_first(&psi.p).scale(e);
    let n = psi.n;
    let mut worst: f64 = 0.0;
    for k in 0..=n {
        let c = &psi.comps[k];
        let r = n - k;
        if r > 0 {
            let next = &psi.comps[k + 1];
            for i in 0..r {
                for j in 0..=k {
                    for a in 0..2 {
                        let lhs = up[(0, a)] * c.get(i, j) + up[(1, a)] * c.get(i + 1, j);
                        worst = worst.max((lhs + next.get(i, j + a) * h).norm());
                    }
                }
            }
        }
        if k > 0 {
            let prev = &psi.comps[k - 1];
            for i in 0..=r {
                for j in 0..k {
                    for a in 0..2 {
                        let lhs = down[(a, 0)] * c.get(i, j) + down[(a, 1)] * c.get(i, j + 1);
                        worst = worst.max((lhs - prev.get(i + a, j) * h).norm());
                    }
                }
            }
        }
    }
    Ok(worst / (scale * psi.p.euclidean_norm().max(psi.mass)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::frame_massive;
    use crate::pauli_lubanski::{chi_basis, Bispinor};
    use crate::spinor::{random_complex, random_future_momentum, random_spinor, FourVector, Spinor};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_amps<R: rand::Rng>(n: usize, energy: Sign, rng: &mut R) -> Amplitudes {
        Amplitudes::new((0..=n).map(|_| random_complex(rng)).collect(), energy)
    }

    fn random_frame<R: rand::Rng>(rng: &mut R) -> SpinFrame {
        let p = random_future_momentum(1.3, rng).unwrap();
        frame_massive(&p, &random_spinor(rng)).unwrap()
    }

    /// Dense value of `Σ_patterns Π χ^{(s_l)}_{α_l} f^{pattern}` at bispinor indices `alpha`.
    fn brute_bispinor(chi: &[Bispinor; 2], pattern: &[Complex64], alpha: &[usize]) -> Complex64 {
        let n = alpha.len();
        let mut acc = Complex64::new(0.0, 0.0);
        for signs in 0..1usize << n {
            let plus = (0..n).filter(|l| signs >> l & 1 == 0).count();
            let mut term = pattern[plus];
            for (l, &al) in alpha.iter().enumerate() {
                term *= chi[signs >> l & 1][al];
            }
            acc += term;
        }
        acc
    }

    #[test]
    fn synthesis_matches_dense_tensor_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=3 {
            for e in Sign::BOTH {
                let frame = random_frame(&mut rng);
                let nn = frame.default_normalization();
                let amps = random_amps(n, e, &mut rng);
                let psi = synth_massive(&frame, &amps, nn).unwrap();
                let basis = chi_basis(&frame, nn).unwrap();
                let chi = [*basis.get(Sign::Plus, e), *basis.get(Sign::Minus, e)];
                let pattern = amps.pattern_values();
                let mut worst: f64 = 0.0;
                for flat in 0..1usize << (2 * n) {
                    let alpha: Vec<usize> = (0..n).map(|l| flat >> (2 * l) & 3).collect();
                    let k = alpha.iter().filter(|&&x| x >= 2).count();
                    let i = alpha.iter().filter(|&&x| x == 1).count();
                    let j = alpha.iter().filter(|&&x| x == 3).count();
                    let got = psi.comps[k].get(i, j);
                    worst = worst.max((got - brute_bispinor(&chi, &pattern, &alpha)).norm());
                }
                assert!(worst < 1e-12, "n={n} worst={worst}");
            }
        }
    }

    #[test]
    fn dirac_case_matches_chi_basis() {
        let frame = frame_massive(&FourVector::time(), &Spinor::real(1.0, 0.0)).unwrap();
        let nn = frame.default_normalization();
        let amps = Amplitudes::new(vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)], Sign::Plus);
        let psi = synth_massive(&frame, &amps, nn).unwrap();
        let chi = *chi_basis(&frame, nn).unwrap().get(Sign::Minus, Sign::Plus);
        for a in 0..2 {
            assert!((psi.comps[0].get(a, 0) - chi[a]).norm() < 1e-15);
            assert!((psi.comps[1].get(0, a) - chi[2 + a]).norm() < 1e-15);
        }
    }

    #[test]
    fn pure_pi_term_for_all_zero_pattern() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let frame = random_frame(&mut rng);
        let nn = frame.default_normalization();
        let amps = Amplitudes::new(
            vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)],
            Sign::Plus,
        );
        let psi = synth_massive(&frame, &amps, nn).unwrap();
        let pl = frame.pi.lower().0;
        let want = sym_outer(&[pl, pl], &[]).scale(nn * nn);
        assert!(psi.comps[0].max_abs_diff(&want) < 1e-13);
    }

    #[test]
    fn zero_amplitudes_give_zero_field() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let frame = random_frame(&mut rng);
        let amps = Amplitudes::new(vec![Complex64::new(0.0, 0.0); 4], Sign::Minus);
        let psi = synth_massive(&frame, &amps, frame.default_normalization()).unwrap();
        assert_eq!(psi.max_abs(), 0.0);
        assert_eq!(field_equation_residual_massive(&psi).unwrap(), 0.0);
    }

    #[test]
    fn synthesis_solves_field_equations() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for n in [1, 2, 3, 4, 6, 8] {
            for e in Sign::BOTH {
                let frame = random_frame(&mut rng);
                let psi =
                    synth_massive(&frame, &random_amps(n, e, &mut rng), frame.default_normalization())
                        .unwrap();
                let r = field_equation_residual_massive(&psi).unwrap();
                assert!(r < 1e-11, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn residual_detects_non_solutions() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let p = random_future_momentum(1.0, &mut rng).unwrap();
        let comps = (0..=2)
            .map(|k| {
                let c = (0..(3 - k) * (k + 1)).map(|_| random_complex(&mut rng)).collect();
                SymMultiSpinor::from_components(2 - k, k, c).unwrap()
            })
            .collect();
        let psi = BwComponent::new(2, 1.0, Sign::Plus, p, comps).unwrap();
        assert!(field_equation_residual_massive(&psi).unwrap() > 1e-2);
    }

    #[test]
    fn extraction_inverts_synthesis() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for n in 1..=8 {
            for _ in 0..50 {
                let p = random_future_momentum(1.3, &mut rng).unwrap();
                let frame = crate::bw::default_frame(&p).unwrap();
                let nn = frame.default_normalization();
                let amps = random_amps(n, Sign::BOTH[n % 2], &mut rng);
                let psi = synth_massive(&frame, &amps, nn).unwrap();
                let back = extract_massive(&psi, &frame, nn).unwrap();
                assert!(back.max_abs_diff(&amps) < 1e-12, "n={n}");
            }
        }
    }

    #[test]
    fn contraction_loses_digits_in_generic_frames() {
        // Pinned so a change in conditioning is noticed.
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        let mut worst: f64 = 0.0;
        for _ in 0..200 {
            let frame = random_frame(&mut rng);
            let nn = frame.default_normalization();
            let amps = random_amps(8, Sign::Plus, &mut rng);
            let psi = synth_massive(&frame, &amps, nn).unwrap();
            worst = worst.max(extract_massive(&psi, &frame, nn).unwrap().max_abs_diff(&amps));
        }
        assert!(worst > 1e-12 && worst < 1e-6, "{worst:e}");
    }

    #[test]
    fn projection_inverts_synthesis_in_any_frame() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for n in 1..=8 {
            for _ in 0..50 {
                let frame = random_frame(&mut rng);
                let nn = random_complex(&mut rng);
                let amps = random_amps(n, Sign::BOTH[n % 2], &mut rng);
                let psi = synth_massive(&frame, &amps, nn).unwrap();
                let back = project_massive(&psi, &frame, nn).unwrap();
                assert!(back.max_abs_diff(&amps) < 1e-12, "n={n}: {:e}", back.max_abs_diff(&amps));
            }
        }
    }

    #[test]
    fn basis_fields_are_orthogonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for n in 1..=5 {
            let frame = random_frame(&mut rng);
            for e in Sign::BOTH {
                let basis: Vec<BwComponent> = (0..=n)
                    .map(|j| {
                        let mut v = vec![Complex64::new(0.0, 0.0); n + 1];
                        v[j] = Complex64::new(1.0, 0.0);
                        synth_massive(&frame, &Amplitudes::new(v, e), Complex64::new(1.0, 0.0)).unwrap()
                    })
                    .collect();
                for a in &basis {
                    for b in &basis {
                        let (ab, aa) = full_inner(a, b).unwrap();
                        let bb = full_inner(b, b).unwrap().1;
                        if a != b {
                            assert!(ab.norm() < 1e-13 * (aa.re * bb.re).sqrt(), "n={n}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn projection_matches_contraction_in_default_frame() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let p = random_future_momentum(0.8, &mut rng).unwrap();
        let frame = crate::bw::default_frame(&p).unwrap();
        let nn = frame.default_normalization();
        let psi = synth_massive(&frame, &random_amps(4, Sign::Minus, &mut rng), nn).unwrap();
        let a = extract_massive(&psi, &frame, nn).unwrap();
        let b = project_massive(&psi, &frame, nn).unwrap();
        assert!(a.max_abs_diff(&b) < 1e-13);
    }

    #[test]
    fn omega_built_field_is_annihilated() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let frame = random_frame(&mut rng);
        let wl = frame.omega.lower().0;
        let c = sym_outer(&[wl, wl, wl], &[]);
        let mut comps = vec![c];
        for k in 1..=3 {
            comps.push(SymMultiSpinor::zeros(3 - k, k));
        }
        let psi = BwComponent::new(3, frame.mass, Sign::Plus, frame.p, comps).unwrap();
        let f = extract_pattern_amplitudes(&psi, &frame, frame.default_normalization()).unwrap();
        assert!(f[0].norm() < 1e-14);
    }

    #[test]
    fn dirac_extraction_relations() {
        let mut rng = ChaCha8Rng::seed_from_u64(18);
        let frame = random_frame(&mut rng);
        let nn = frame.default_normalization();
        let amps = random_amps(1, Sign::Plus, &mut rng);
        let psi = synth_massive(&frame, &amps, nn).unwrap();
        let w = frame.omega.0;
        let wb = frame.omega.conj().0;
        let f0 = w[0] * psi.comps[0].get(0, 0) + w[1] * psi.comps[0].get(1, 0);
        let f1 = wb[0] * psi.comps[1].get(0, 0) + wb[1] * psi.comps[1].get(0, 1);
        assert!((f0 - nn * amps.values[0]).norm() < 1e-12);
        assert!((f1 - nn * amps.values[1]).norm() < 1e-12);
    }

    #[test]
    fn mismatched_frame_is_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        let frame = random_frame(&mut rng);
        let other = random_frame(&mut rng);
        let psi = synth_massive(&frame, &random_amps(2, Sign::Plus, &mut rng), Complex64::new(1.0, 0.0))
            .unwrap();
        assert_eq!(
            extract_massive(&psi, &other, Complex64::new(1.0, 0.0)),
            Err(Error::FrameMismatch)
        );
    }
}
