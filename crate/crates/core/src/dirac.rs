//! Dirac matrices built from the Infeld-van der Waerden symbols, the spinor
//! Dirac current, and the spin-1/2 case of the Bargmann-Wigner machinery.
//!
//! Bispinors are ordered `(ψ_A, ξ_{A'})`.

use std::f64::consts::SQRT_2;

use num_complex::Complex64;

use crate::frame::{FrameKind, SpinFrame};
use crate::pauli_lubanski::{
    bispinor, block_diag, blocks, chi_halves, max_abs4, split, Bispinor, BispinorMatrix,
};
use crate::spinor::{
    epsilon, ivdw, levi_civita_upper, lower_both, lower_first, lower_second, FourVector, Generators, Mat2,
    Vec2, METRIC,
};
use crate::{Error, Result, Sign};

/// `γ_q` with lower world index and `γ_5`.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaSet {
    pub gamma: [BispinorMatrix; 4],
    pub gamma5: BispinorMatrix,
}

/// `γ_q = √2 [[0, g_{qA}{}^{B'}], [-g_q{}^B{}_{A'}, 0]]`.
pub fn gamma(q: usize) -> BispinorMatrix {
    let g = ivdw(q);
    let z = Mat2::zeros();
    blocks(
        &z,
        &lower_first(&g).scale(SQRT_2),
        &(-lower_second(&g).transpose()).scale(SQRT_2),
        &z,
    )
}

/// `γ_5 = (i/4!) e^{abcd} γ_a γ_b γ_c γ_d`.
pub fn gamma5_product(g: &[BispinorMatrix; 4]) -> BispinorMatrix {
    let mut acc = BispinorMatrix::zeros();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let e = levi_civita_upper(a, b, c, d);
                    if e != 0.0 {
                        acc += (g[a] * g[b] * g[c] * g[d]).scale(e);
                    }
                }
            }
        }
    }
    acc * Complex64::new(0.0, 1.0 / 24.0)
}

/// Block form `diag(-ε_X{}^Y, ε_{X'}{}^{Y'})`.
pub fn gamma5_block() -> BispinorMatrix {
    let id = Mat2::identity();
    block_diag(&(-id), &id)
}

pub fn gamma_set() -> GammaSet {
    let gamma = std::array::from_fn(gamma);
    let gamma5 = gamma5_product(&gamma);
    GammaSet { gamma, gamma5 }
}

/// Adjoint-forming matrix `[[0, ε_{A'}{}^{B'}], [-ε_A{}^B, 0]]`, one of the two
/// spinor objects written `γ_0` in textbooks.
pub fn gamma0_bar_form() -> BispinorMatrix {
    let id = Mat2::identity();
    let z = Mat2::zeros();
    blocks(&z, &id, &(-id), &z)
}

/// `γ_0` built from `g_0`, the second object written `γ_0` in textbooks.
pub fn gamma0_ivdw_form() -> BispinorMatrix {
    gamma(0)
}

impl GammaSet {
    /// `max |γ_q γ_r + γ_r γ_q - 2 g_{qr} I|` over all 16 pairs.
    pub fn clifford_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for q in 0..4 {
            for r in 0..4 {
                let g = if q == r { 2.0 * METRIC[q] } else { 0.0 };
                let anti = self.gamma[q] * self.gamma[r] + self.gamma[r] * self.gamma[q];
                worst = worst.max(max_abs4(&(anti - BispinorMatrix::identity().scale(g))));
            }
        }
        worst
    }

    /// `max |γ_q γ_r - γ_r γ_q - 4i σ_{qr}|` against the generators.
    pub fn commutator_residual(&self, generators: &Generators) -> f64 {
        let low = generators.lowered();
        let mut worst: f64 = 0.0;
        for q in 0..4 {
            for r in 0..4 {
                let comm = self.gamma[q] * self.gamma[r] - self.gamma[r] * self.gamma[q];
                let s = block_diag(&low.unprimed[q][r], &low.primed[q][r]);
                worst = worst.max(max_abs4(&(comm - s * Complex64::new(0.0, 4.0))));
            }
        }
        worst
    }

    /// `max |γ_5 γ_a + γ_a γ_5|`.
    pub fn gamma5_anticommutator_residual(&self) -> f64 {
        self.gamma.iter().fold(0.0, |m, g| {
            m.max(max_abs4(&(self.gamma5 * g + g * self.gamma5)))
        })
    }

    /// `|γ_5² - I|`.
    pub fn gamma5_square_residual(&self) -> f64 {
        max_abs4(&(self.gamma5 * self.gamma5 - BispinorMatrix::identity()))
    }

    /// `|γ_5 (product form) - γ_5 (block form)|`.
    pub fn gamma5_form_residual(&self) -> f64 {
        max_abs4(&(self.gamma5 - gamma5_block()))
    }

    /// `p^q γ_q`.
    pub fn slash(&self, p: &FourVector) -> BispinorMatrix {
        (0..4).fold(BispinorMatrix::zeros(), |acc, q| acc + self.gamma[q].scale(p[q]))
    }
}

fn require_massive(frame: &SpinFrame) -> Result<()> {
    if frame.kind() != FrameKind::Massive {
        return Err(Error::NotMassive);
    }
    Ok(())
}

/// `Ψ = f^1 χ^{(+)} + f^0 χ^{(-)}` at the given energy sign.
pub fn dirac_solution(
    frame: &SpinFrame,
    energy: Sign,
    normalization: Complex64,
    f0: Complex64,
    f1: Complex64,
) -> Result<Bispinor> {
    require_massive(frame)?;
    let (up, vp) = chi_halves(frame, Sign::Plus, energy);
    let (um, vm) = chi_halves(frame, Sign::Minus, energy);
    Ok(bispinor(&(up * f1 + um * f0), &(vp * f1 + vm * f0)) * normalization)
}

/// `(f^0, f^1) = (ω^A ψ_A, ω̄^{A'} ξ_{A'}) / N`.
pub fn dirac_amplitudes(
    psi: &Bispinor,
    frame: &SpinFrame,
    normalization: Complex64,
) -> Result<(Complex64, Complex64)> {
    require_massive(frame)?;
    let (u, v) = split(psi);
    let w = frame.omega.0;
    let wb = frame.omega.conj().0;
    Ok((w.dot(&u) / normalization, wb.dot(&v) / normalization))
}

/// `|±p̸ Ψ - m Ψ| / (|p| |Ψ|)`.
pub fn dirac_residual(psi: &Bispinor, p: &FourVector, energy: Sign) -> f64 {
    let scale = psi.norm() * p.euclidean_norm();
    if scale == 0.0 {
        return 0.0;
    }
    let lhs = gamma_set().slash(p) * psi * Complex64::new(energy.value(), 0.0);
    (lhs - psi * Complex64::new(p.mass(), 0.0)).norm() / scale
}

/// Residual of the Pauli-matrix form
/// `±[[0, p^aσ_a], [p^a σ̃_a, 0]] (ψ^B, ξ_{B'}) = m (ψ^A, ξ_{A'})`.
pub fn dirac_sigma_form_residual(psi: &Bispinor, p: &FourVector, energy: Sign) -> f64 {
    let (u, v) = split(psi);
    let scale = psi.norm() * p.euclidean_norm();
    if scale == 0.0 {
        return 0.0;
    }
    let up = epsilon() * u;
    let sigma = (0..4).fold(Mat2::zeros(), |acc, a| acc + ivdw(a).scale(SQRT_2 * p[a]));
    // σ̃_{a A'B} = √2 g_{aBA'}
    let tilde = (0..4).fold(Mat2::zeros(), |acc, a| {
        acc + lower_both(&ivdw(a)).transpose().scale(SQRT_2 * p[a])
    });
    let e = Complex64::new(energy.value(), 0.0);
    let m = Complex64::new(p.mass(), 0.0);
    let top = sigma * v * e - up * m;
    let bottom = tilde * up * e - v * m;
    (top.norm_squared() + bottom.norm_squared()).sqrt() / scale
}

/// `j_a = √2 g_a{}^{AA'} (ψ_A ψ̄_{A'} + ξ_{A'} ξ̄_A)`, returned with upper index.
pub fn dirac_current(psi: &Bispinor) -> FourVector {
    let (u, v) = split(psi);
    let c = |x: &Vec2| x.map(|z| z.conj());
    let t = u * c(&u).transpose() + c(&v) * v.transpose();
    let mut j = [0.0; 4];
    for (a, ja) in j.iter_mut().enumerate() {
        let g = ivdw(a);
        let s: Complex64 = g.iter().zip(t.iter()).map(|(x, y)| x * y).sum();
        *ja = SQRT_2 * s.re * METRIC[a];
    }
    FourVector(j)
}

/// The same current as `(ψ̄^{A'}, ξ̄^A) Γ̄ γ_a Ψ` through the two `γ_0`-like objects.
pub fn dirac_current_bispinor(psi: &Bispinor) -> FourVector {
    let (u, v) = split(psi);
    let e = epsilon();
    let c = |x: &Vec2| x.map(|z| z.conj());
    let row = bispinor(&(e * c(&u)), &(e * c(&v)));
    let g = gamma_set();
    let bar = gamma0_bar_form();
    let mut j = [0.0; 4];
    for (a, ja) in j.iter_mut().enumerate() {
        *ja = (row.transpose() * bar * g.gamma[a] * psi)[0].re * METRIC[a];
    }
    FourVector(j)
}

/// `ω^a T_a / ω·p` with `T_a = j_a / √2`.
pub fn dirac_norm_integrand(psi: &Bispinor, frame: &SpinFrame) -> Result<f64> {
    require_massive(frame)?;
    let w = frame.omega_vec();
    Ok(w.dot(&dirac_current(psi)) / (SQRT_2 * w.dot(&frame.p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bw::{norm_integrand, synth_massive, Amplitudes, DirectionSpec};
    use crate::frame::frame_massive;
    use crate::spinor::{random_complex, random_future_momentum, random_spinor, Spinor};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_frame<R: rand::Rng>(rng: &mut R) -> SpinFrame {
        let p = random_future_momentum(0.9, rng).unwrap();
        frame_massive(&p, &random_spinor(rng)).unwrap()
    }

    #[test]
    fn clifford_table() {
        let g = gamma_set();
        assert!(g.clifford_residual() < 1e-14);
        assert!(max_abs4(&(g.gamma[0] * g.gamma[0] - BispinorMatrix::identity())) < 1e-15);
        assert!(max_abs4(&(g.gamma[1] * g.gamma[2] + g.gamma[2] * g.gamma[1])) < 1e-15);
        assert!(g.commutator_residual(&Generators::new()) < 1e-14);
    }

    #[test]
    fn gamma5_forms() {
        let g = gamma_set();
        assert!(g.gamma5_form_residual() < 1e-14);
        assert!(g.gamma5_square_residual() < 1e-14);
        assert!(g.gamma5_anticommutator_residual() < 1e-14);
    }

    #[test]
    fn sigma_tilde_is_one_minus_pauli() {
        let want = [1.0, -1.0, -1.0, -1.0];
        for a in 0..4 {
            let t = lower_both(&ivdw(a)).transpose().scale(SQRT_2);
            assert!(crate::spinor::max_abs(&(t - ivdw(a).scale(SQRT_2 * want[a]))) < 1e-15);
        }
    }

    #[test]
    fn the_two_gamma0_objects_differ() {
        assert!(max_abs4(&(gamma0_bar_form() - gamma0_ivdw_form())) > 0.5);
    }

    #[test]
    fn rest_frame_solution() {
        let frame = frame_massive(&FourVector::time(), &Spinor::real(1.0, 0.0)).unwrap();
        let nn = frame.default_normalization();
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let psi = dirac_solution(&frame, Sign::Plus, nn, one, zero).unwrap();
        assert!(dirac_residual(&psi, &frame.p, Sign::Plus) < 1e-13);
        let (f0, f1) = dirac_amplitudes(&psi, &frame, nn).unwrap();
        assert!((f0 - one).norm() < 1e-13 && f1.norm() < 1e-13);
        let z = dirac_solution(&frame, Sign::Plus, nn, zero, zero).unwrap();
        assert_eq!(z.norm(), 0.0);
        assert!((dirac_norm_integrand(&psi, &frame).unwrap() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn random_solutions_solve_both_forms() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        for _ in 0..100 {
            let frame = random_frame(&mut rng);
            for e in Sign::BOTH {
                let nn = random_complex(&mut rng);
                let (f0, f1) = (random_complex(&mut rng), random_complex(&mut rng));
                let psi = dirac_solution(&frame, e, nn, f0, f1).unwrap();
                assert!(dirac_residual(&psi, &frame.p, e) < 1e-12);
                assert!(dirac_sigma_form_residual(&psi, &frame.p, e) < 1e-12);
                let (g0, g1) = dirac_amplitudes(&psi, &frame, nn).unwrap();
                assert!((g0 - f0).norm() < 1e-12 && (g1 - f1).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn non_solution_is_detected() {
        let p = FourVector::on_shell(1.0, [0.2, 0.1, -0.4]);
        let psi = Bispinor::new(
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
        );
        assert!(dirac_residual(&psi, &p, Sign::Plus) > 0.1);
    }

    #[test]
    fn current_is_future_causal() {
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        for _ in 0..200 {
            let frame = random_frame(&mut rng);
            let psi = dirac_solution(
                &frame,
                Sign::Plus,
                frame.default_normalization(),
                random_complex(&mut rng),
                random_complex(&mut rng),
            )
            .unwrap();
            let j = dirac_current(&psi);
            assert!(j[0] >= 0.0);
            assert!(j.square() >= -1e-12 * j[0] * j[0]);
            assert!(j.max_abs_diff(&dirac_current_bispinor(&psi)) < 1e-12 * j[0]);
        }
    }

    #[test]
    fn single_chirality_current_is_null() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let u = random_spinor(&mut rng).0;
        let psi = bispinor(&u, &Vec2::zeros());
        let j = dirac_current(&psi);
        assert!(j.square().abs() < 1e-12 * j[0] * j[0]);
        assert_eq!(dirac_current(&Bispinor::zeros()), FourVector::new(0.0, 0.0, 0.0, 0.0));
    }

    #[test]
    fn momentum_current_product() {
        // Dense oracle: p·j summed component by component against 2m|N|²(|f⁰|²+|f¹|²).
        let mut rng = ChaCha8Rng::seed_from_u64(54);
        for _ in 0..50 {
            let frame = random_frame(&mut rng);
            let nn = random_complex(&mut rng);
            let (f0, f1) = (random_complex(&mut rng), random_complex(&mut rng));
            let psi = dirac_solution(&frame, Sign::Plus, nn, f0, f1).unwrap();
            let (u, v) = split(&psi);
            let mut pj = 0.0;
            for a in 0..4 {
                let g = ivdw(a);
                let mut s = Complex64::new(0.0, 0.0);
                for x in 0..2 {
                    for y in 0..2 {
                        s += g[(x, y)] * (u[x] * u[y].conj() + v[y] * v[x].conj());
                    }
                }
                pj += frame.p[a] * SQRT_2 * s.re;
            }
            let want = 2.0 * frame.mass * nn.norm_sqr() * (f0.norm_sqr() + f1.norm_sqr());
            assert!((pj - want).abs() < 1e-12 * want);
            assert!((frame.p.dot(&dirac_current(&psi)) - want).abs() < 1e-12 * want);
        }
    }

    #[test]
    fn integrand_matches_rank_one_field() {
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        for _ in 0..50 {
            let frame = random_frame(&mut rng);
            let nn = frame.default_normalization();
            let (f0, f1) = (random_complex(&mut rng), random_complex(&mut rng));
            let psi = dirac_solution(&frame, Sign::Minus, nn, f0, f1).unwrap();
            let v = dirac_norm_integrand(&psi, &frame).unwrap();
            assert!((v - f0.norm_sqr() - f1.norm_sqr()).abs() < 1e-12 * v);
            let bw = synth_massive(&frame, &Amplitudes::new(vec![f0, f1], Sign::Minus), nn).unwrap();
            let w = norm_integrand(&bw, &DirectionSpec::StandardTime).unwrap();
            assert!((v - w).abs() < 1e-12 * v);
        }
        let frame = random_frame(&mut rng);
        let psi = dirac_solution(
            &frame,
            Sign::Plus,
            frame.default_normalization(),
            Complex64::new(3.0, 0.0),
            Complex64::new(4.0, 0.0),
        )
        .unwrap();
        assert!((dirac_norm_integrand(&psi, &frame).unwrap() - 25.0).abs() < 1e-12 * 25.0);
    }
}
