//! Randomized identity suites behind `bwspinor verify`.

use std::fmt;
use std::str::FromStr;

use bwspinor::bw::{
    default_frame, extract_massive, extract_massless, field_equation_residual_massive,
    helicity_residual_massless, hertz_eta, hertz_psi, norm_integrand, norm_integrand_p_form,
    project_massive, standard_integrand, synth_massive, synth_massless, transform_component, Amplitudes,
    DirectionSpec,
};
use bwspinor::dirac::{
    dirac_current, dirac_current_bispinor, dirac_residual, dirac_sigma_form_residual,
    dirac_solution, gamma_set,
};
use bwspinor::frame::{frame_for, frame_massless, frame_residuals, SpinFrame};
use bwspinor::maxwell::{
    em_spinor, energy_density, gk_norm_integrand, primed_em_spinor, stress_tensor, world_tensor,
    EmSpinor, FieldStrength,
};
use bwspinor::pauli_lubanski::{
    chi_basis, combined_projectors, combined_projectors_closed_form, energy_projectors,
    matrix_eigenvalues, max_abs4, null_frame_projectors, pl_eigen_relations_residual,
    pl_eigenvalues, pl_momentum_rep, pl_project, BispinorMatrix,
};
use bwspinor::spinor::{
    duality_residual, generator_antisymmetry_residual, iw_product_residual,
    iw_symmetric_residual, random_complex, random_future_momentum, random_sl2c, random_spinor,
    random_timelike, spinor_form_residual, trace_reversal_residual, FourVector, Generators, Mat2,
};
use bwspinor::{Complex64, Result, Sign};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Default pass threshold.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Core,
    Pl,
    Bw,
    Dirac,
    Maxwell,
}

impl Suite {
    pub const EACH: [Suite; 5] = [Suite::Core, Suite::Pl, Suite::Bw, Suite::Dirac, Suite::Maxwell];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Core => "core",
            Suite::Pl => "pl",
            Suite::Bw => "bw",
            Suite::Dirac => "dirac",
            Suite::Maxwell => "maxwell",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        [Suite::All]
            .into_iter()
            .chain(Suite::EACH)
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}; expected all, core, pl, bw, dirac or maxwell"))
    }
}

/// One identity and its largest observed residual.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub checks: Vec<Check>,
    pub tolerance: f64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.residual.is_finite() && c.residual < self.tolerance)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let ok = c.residual.is_finite() && c.residual < self.tolerance;
            writeln!(
                f,
                "{:<8} {:<width$}  {:>10.3e}  {}",
                c.suite,
                c.name,
                c.residual,
                if ok { "ok" } else { "FAIL" }
            )?;
        }
        writeln!(
            f,
            "{} checks, tolerance {:e}: {}",
            self.checks.len(),
            self.tolerance,
            if self.passed() { "pass" } else { "FAIL" }
        )
    }
}

pub fn run(suite: Suite, trials: usize, seed: u64, tolerance: f64) -> Result<Report> {
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    let mut checks = Vec::new();
    for s in suites {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let found = match s {
            Suite::Core => core_suite(trials, &mut rng),
            Suite::Pl => pl_suite(trials, &mut rng)?,
            Suite::Bw => bw_suite(trials, &mut rng)?,
            Suite::Dirac => dirac_suite(trials, &mut rng)?,
            Suite::Maxwell => maxwell_suite(trials, &mut rng)?,
            Suite::All => unreachable!(),
        };
        checks.extend(found.into_iter().map(|(name, residual)| Check {
            suite: s.name(),
            name,
            residual,
        }));
    }
    Ok(Report { checks, tolerance })
}

type Found = Vec<(&'static str, f64)>;

fn worst(acc: &mut f64, x: f64) {
    if x.is_nan() || x > *acc {
        *acc = if x.is_nan() { f64::INFINITY } else { x };
    }
}

fn random_mass<R: Rng>(rng: &mut R) -> f64 {
    rng.gen_range(0.2..3.0)
}

fn random_massive_frame<R: Rng>(rng: &mut R) -> Result<SpinFrame> {
    let p = random_future_momentum(random_mass(rng), rng)?;
    frame_for(&p, &random_spinor(rng))
}

/// Future-pointing null vector with unit-order components.
fn random_null<R: Rng>(rng: &mut R) -> Result<FourVector> {
    random_future_momentum(0.0, rng)
}

fn core_suite<R: Rng>(trials: usize, rng: &mut R) -> Found {
    let g = Generators::new();
    let mut tr_massive: f64 = 0.0;
    let mut tr_null: f64 = 0.0;
    let mut lorentz: f64 = 0.0;
    let mut contraction: f64 = 0.0;
    for _ in 0..trials {
        if let Ok(p) = random_future_momentum(random_mass(rng), rng) {
            worst(&mut tr_massive, trace_reversal_residual(&p) / (p[0] * p[0]));
        }
        if let Ok(p) = random_null(rng) {
            worst(&mut tr_null, trace_reversal_residual(&p) / (p[0] * p[0]));
        }
        let a = random_sl2c(rng);
        let l = a.lorentz();
        worst(&mut lorentz, l.metric_residual() / l.0.amax().powi(2));
        let (k, m) = (random_spinor(rng), random_spinor(rng));
        let before = k.lower().contract(&m);
        let after = a.transform_spinor(&k).lower().contract(&a.transform_spinor(&m));
        let scale = k.norm() * m.norm() * a.matrix().norm_squared();
        worst(&mut contraction, (before - after).norm() / scale);
    }
    vec![
        ("IW symmetric relation", iw_symmetric_residual()),
        ("IW product relation", iw_product_residual(&g)),
        ("generator antisymmetry", generator_antisymmetry_residual(&g)),
        ("generator spinor form", spinor_form_residual(&g)),
        ("generator duality", duality_residual(&g)),
        ("trace reversal (massive)", tr_massive),
        ("trace reversal (null)", tr_null),
        ("Lorentz metric preservation", lorentz),
        ("spinor contraction invariance", contraction),
    ]
}

/// Random `t` of the requested causal type with a positive discriminant against `p`.
fn random_direction<R: Rng>(kind: usize, p: &FourVector, rng: &mut R) -> Result<FourVector> {
    match kind {
        0 => Ok(random_timelike(rng)),
        1 => random_null(rng),
        _ => loop {
            let t = FourVector::new(
                rng.gen_range(-0.5..0.5),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            );
            let tp = t.dot(p);
            if t.square() < -0.1 && tp * tp - p.square() * t.square() > 0.0 {
                return Ok(t);
            }
        },
    }
}

fn projector_algebra(ps: &[&BispinorMatrix]) -> f64 {
    let id = BispinorMatrix::identity();
    let scale = ps.iter().map(|m| max_abs4(m)).fold(1.0, f64::max);
    let mut acc: f64 = 0.0;
    let mut sum = BispinorMatrix::zeros();
    for (i, a) in ps.iter().enumerate() {
        sum += *a;
        for (j, b) in ps.iter().enumerate() {
            let want = if i == j { *a } else { &BispinorMatrix::zeros() };
            worst(&mut acc, max_abs4(&(*a * *b - want)) / (scale * scale));
        }
    }
    worst(&mut acc, max_abs4(&(sum - id)) / scale);
    acc
}

fn pl_suite<R: Rng>(trials: usize, rng: &mut R) -> Result<Found> {
    let mut eig: f64 = 0.0;
    let mut null_t: f64 = 0.0;
    let mut omega_t: f64 = 0.0;
    let mut algebra: f64 = 0.0;
    let mut ordering: f64 = 0.0;
    let mut closed: f64 = 0.0;
    let mut null_frame: f64 = 0.0;
    let mut commute: f64 = 0.0;
    let mut chi: f64 = 0.0;
    let mut relations: f64 = 0.0;
    let mut frames: f64 = 0.0;
    for i in 0..trials {
        let p = random_future_momentum(random_mass(rng), rng)?;
        let t = random_direction(i % 3, &p, rng)?;
        let s = pl_project(&t, &p);
        let ev = pl_eigenvalues(&t, &p)?;
        let scale = t.euclidean_norm() * p.euclidean_norm();
        for block in [&s.unprimed, &s.primed] {
            let (a, b) = matrix_eigenvalues(block);
            worst(&mut eig, (a - ev.plus).norm().max((b - ev.minus).norm()) / scale);
        }
        let n = random_null(rng)?;
        worst(
            &mut null_t,
            (pl_eigenvalues(&n, &p)?.lambda() - n.dot(&p)).abs() / n.dot(&p),
        );

        let frame = frame_for(&p, &random_spinor(rng))?;
        let w = frame.omega_vec();
        worst(
            &mut omega_t,
            (pl_eigenvalues(&w, &p)?.lambda() - p.mass() / std::f64::consts::SQRT_2).abs()
                / p.mass(),
        );
        let t = random_timelike(rng);
        let c = combined_projectors(&t, &p)?;
        let all: Vec<&BispinorMatrix> = c.iter().map(|(_, _, m)| m).collect();
        worst(&mut algebra, projector_algebra(&all));
        let (pp, pm) = energy_projectors(&p)?;
        worst(&mut algebra, projector_algebra(&[&pp, &pm]));
        let scale = all.iter().map(|m| max_abs4(m)).fold(1.0, f64::max);
        let spin = bwspinor::pauli_lubanski::pl_spin_projectors(&t, &p)?;
        for (sg, e, m) in c.iter() {
            let en = if e == Sign::Plus { &pp } else { &pm };
            let sm = spin.get(sg).to_bispinor_matrix();
            worst(&mut ordering, max_abs4(&(en * sm - sm * en)) / (scale * scale));
            worst(&mut ordering, max_abs4(&(m - sm * en)) / scale);
        }
        worst(
            &mut closed,
            c.max_abs_diff(&combined_projectors_closed_form(&t, &p)?) / scale,
        );
        let cw = combined_projectors(&w, &p)?;
        let nf = null_frame_projectors(&frame)?;
        let sw = cw.iter().map(|(_, _, m)| max_abs4(m)).fold(1.0, f64::max);
        worst(&mut null_frame, cw.max_abs_diff(&nf) / sw);
        let op = pl_momentum_rep(&p);
        let pscale = p.euclidean_norm() * max_abs4(&pp).max(1.0);
        for a in 0..4 {
            let sa = op.bispinor_component(a);
            for en in [&pp, &pm] {
                worst(&mut commute, max_abs4(&(en * sa - sa * en)) / (pscale * max_abs4(en)));
            }
        }
        let basis = chi_basis(&frame, frame.default_normalization())?;
        for (s1, e1, m) in nf.iter() {
            for s2 in Sign::BOTH {
                for e2 in Sign::BOTH {
                    let x = basis.get(s2, e2);
                    let want = if (s1, e1) == (s2, e2) { *x } else { x * Complex64::new(0.0, 0.0) };
                    worst(&mut chi, (m * x - want).norm() / (x.norm() * sw));
                }
            }
        }
        worst(&mut relations, pl_eigen_relations_residual(&frame));
        worst(&mut frames, frame_residuals(&frame).max());
        let fl = frame_massless(&random_null(rng)?)?;
        worst(&mut relations, pl_eigen_relations_residual(&fl));
        worst(&mut frames, frame_residuals(&fl).max());
    }
    Ok(vec![
        ("eigenvalues vs matrix spectrum", eig),
        ("null direction lambda = t.p", null_t),
        ("t = omega gives lambda = m/sqrt2", omega_t),
        ("projector algebra", algebra),
        ("energy/spin projector ordering", ordering),
        ("combined projector closed form", closed),
        ("null-frame projector matrices", null_frame),
        ("energy projectors commute with S", commute),
        ("chi eigenvectors", chi),
        ("frame eigenrelations", relations),
        ("frame invariants", frames),
    ])
}

fn random_amplitudes<R: Rng>(count: usize, energy: Sign, rng: &mut R) -> Amplitudes {
    Amplitudes::new((0..count).map(|_| random_complex(rng)).collect(), energy)
}

fn random_sign<R: Rng>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

fn rel(a: f64, b: f64) -> f64 {
    let s = a.abs().max(b.abs());
    if s == 0.0 {
        0.0
    } else {
        (a - b).abs() / s
    }
}

fn bw_suite<R: Rng>(trials: usize, rng: &mut R) -> Result<Found> {
    let mut field_eq: f64 = 0.0;
    let mut round_massive: f64 = 0.0;
    let mut projected: f64 = 0.0;
    let mut round_massless: f64 = 0.0;
    let mut helicity: f64 = 0.0;
    let mut hertz: f64 = 0.0;
    let mut t_indep: f64 = 0.0;
    let mut t_indep_massless: f64 = 0.0;
    let mut ex_bw: f64 = 0.0;
    let mut ratio: f64 = 0.0;
    let mut scalar: f64 = 0.0;
    const RANKS: [usize; 6] = [1, 2, 3, 4, 6, 8];
    for i in 0..trials {
        let n = RANKS[i % RANKS.len()];
        let e = random_sign(rng);
        let frame = random_massive_frame(rng)?;
        let amps = random_amplitudes(n + 1, e, rng);
        let nn = random_complex(rng);
        let psi = synth_massive(&frame, &amps, nn)?;
        worst(&mut field_eq, field_equation_residual_massive(&psi)?);
        let amax = amps.values.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let back = project_massive(&psi, &frame, nn)?;
        worst(&mut projected, back.max_abs_diff(&amps) / amax);
        let df = default_frame(&frame.p)?;
        let dn = df.default_normalization();
        let back = extract_massive(&synth_massive(&df, &amps, dn)?, &df, dn)?;
        worst(&mut round_massive, back.max_abs_diff(&amps) / amax);

        let n = 1 + i % 4;
        let p = random_future_momentum(random_mass(rng), rng)?;
        let df = default_frame(&p)?;
        let amps = random_amplitudes(n + 1, e, rng);
        let psi = synth_massive(&df, &amps, df.default_normalization())?;
        let specs = [
            DirectionSpec::StandardTime,
            DirectionSpec::NullOmega,
            DirectionSpec::RandomTimelike(rng.gen()),
        ];
        let values: Vec<f64> = specs
            .iter()
            .map(|s| norm_integrand(&psi, s))
            .collect::<Result<_>>()?;
        for v in &values {
            worst(&mut t_indep, rel(*v, values[0]));
        }
        worst(&mut t_indep, rel(norm_integrand_p_form(&psi)?, values[0]));
        worst(&mut ex_bw, rel(values[1], amps.norm_sqr()));
        worst(
            &mut ratio,
            rel(values[0], standard_integrand(&psi) * 2f64.powf(-(n as f64) / 2.0)),
        );
        let a = random_sl2c(rng);
        let moved = transform_component(&psi, &a)?;
        worst(
            &mut scalar,
            rel(norm_integrand_p_form(&moved)?, norm_integrand_p_form(&psi)?),
        );

        let n = 1 + i % 8;
        let p = random_null(rng)?;
        let fl = frame_massless(&p)?;
        let f = random_complex(rng);
        let psi = synth_massless(&fl.pi, f, n, e)?;
        worst(
            &mut round_massless,
            (extract_massless(&psi, &fl.omega)? - f).norm() / f.norm(),
        );
        worst(&mut helicity, helicity_residual_massless(&psi)?);
        let xi = hertz_eta(&fl.omega, n, e).scale(f);
        let via = hertz_psi(&xi, &p, e)?;
        worst(&mut hertz, via.max_abs_diff(&psi) / psi.max_abs());
        let values: Vec<f64> = specs
            .iter()
            .map(|s| norm_integrand(&psi, s))
            .collect::<Result<_>>()?;
        for v in &values {
            worst(&mut t_indep_massless, rel(*v, f.norm_sqr()));
        }
        let moved = transform_component(&psi, &a)?;
        let t = DirectionSpec::NullOmega;
        worst(&mut scalar, rel(norm_integrand(&moved, &t)?, values[1]));
    }
    Ok(vec![
        ("field equations of synthesized fields", field_eq),
        ("massive extract after synth", round_massive),
        ("massive projection after synth", projected),
        ("massless extract after synth", round_massless),
        ("massless helicity relation", helicity),
        ("Hertz route equals amplitude route", hertz),
        ("integrand independent of t (massive)", t_indep),
        ("integrand independent of t (massless)", t_indep_massless),
        ("null-omega integrand = sum |f_k|^2", ex_bw),
        ("generalized = 2^(-n/2) standard", ratio),
        ("integrand Lorentz scalarity", scalar),
    ])
}

fn dirac_suite<R: Rng>(trials: usize, rng: &mut R) -> Result<Found> {
    let g = gamma_set();
    let gens = Generators::new();
    let mut eq: f64 = 0.0;
    let mut sigma: f64 = 0.0;
    let mut j0: f64 = 0.0;
    let mut jj: f64 = 0.0;
    let mut routes: f64 = 0.0;
    for _ in 0..trials {
        let frame = random_massive_frame(rng)?;
        let e = random_sign(rng);
        let psi = dirac_solution(
            &frame,
            e,
            random_complex(rng),
            random_complex(rng),
            random_complex(rng),
        )?;
        worst(&mut eq, dirac_residual(&psi, &frame.p, e));
        worst(&mut sigma, dirac_sigma_form_residual(&psi, &frame.p, e));
        let j = dirac_current(&psi);
        let scale = j.euclidean_norm();
        worst(&mut j0, (-j[0] / scale).max(0.0));
        worst(&mut jj, (-j.square() / (scale * scale)).max(0.0));
        worst(&mut routes, dirac_current_bispinor(&psi).max_abs_diff(&j) / scale);
    }
    Ok(vec![
        ("Clifford relations", g.clifford_residual()),
        ("commutators vs generators", g.commutator_residual(&gens)),
        ("gamma5 anticommutes", g.gamma5_anticommutator_residual()),
        ("gamma5 squares to one", g.gamma5_square_residual()),
        ("gamma5 product = block form", g.gamma5_form_residual()),
        ("Dirac equation of chi solutions", eq),
        ("Pauli-matrix form of Dirac equation", sigma),
        ("current j0 >= 0", j0),
        ("current causal j.j >= 0", jj),
        ("spinor current = bispinor current", routes),
    ])
}

fn random_field<R: Rng>(rng: &mut R) -> FieldStrength {
    let e = [(); 3].map(|_| random_complex(rng));
    let b = [(); 3].map(|_| random_complex(rng));
    FieldStrength::from_e_b(e, b)
}

fn maxwell_suite<R: Rng>(trials: usize, rng: &mut R) -> Result<Found> {
    let mut stress: f64 = 0.0;
    let mut t00: f64 = 0.0;
    let mut gk: f64 = 0.0;
    let mut real: f64 = 0.0;
    for _ in 0..trials {
        let f = random_field(rng);
        let s = f.max_abs().powi(2);
        let t = stress_tensor(&em_spinor(&f), &f)?;
        worst(&mut stress, t.residual / s);
        worst(&mut t00, (t.t00() - energy_density(&f)).norm() / s);
        let re = [(); 3].map(|_| Complex64::new(rng.gen_range(-1.0..1.0), 0.0));
        let rb = [(); 3].map(|_| Complex64::new(rng.gen_range(-1.0..1.0), 0.0));
        let fr = FieldStrength::from_e_b(re, rb);
        let phi = em_spinor(&fr);
        let direct = world_tensor(&phi.0, &phi.conj().0);
        let via = world_tensor(&phi.0, &primed_em_spinor(&fr).0);
        let mut d: f64 = 0.0;
        for a in 0..4 {
            for b in 0..4 {
                d = d.max((direct[a][b] - via[a][b]).norm());
            }
        }
        worst(&mut real, d / fr.max_abs().powi(2).max(1e-300));

        let p = random_null(rng)?;
        let fl = frame_massless(&p)?;
        let amp = random_complex(rng);
        let psi = synth_massless(&fl.pi, amp, 2, Sign::Plus)?;
        let c = &psi.comps[0];
        let phi = EmSpinor(Mat2::new(c.get(0, 0), c.get(1, 0), c.get(1, 0), c.get(2, 0)));
        let (t1, t2) = (random_timelike(rng), random_timelike(rng));
        let a = gk_norm_integrand(&phi, &p, &t1, &t2)?;
        let b = bwspinor::bw::norm_integrand_with(&psi, &[t1, t2])?;
        worst(&mut gk, rel(a, b));
    }
    let one = Complex64::new(1.0, 0.0);
    let z = Complex64::new(0.0, 0.0);
    let unit = FieldStrength::from_e_b([one, z, z], [z, one, z]);
    let unit_t00 = stress_tensor(&em_spinor(&unit), &unit)?.t00();
    Ok(vec![
        ("spinor vs tensor stress", stress),
        ("T00 = (E.E + B.B)/4", t00),
        ("real fields: primed spinor = conjugate", real),
        ("Gross-Kaiser = rank-2 integrand", gk),
        ("unit E, B gives T00 = 1/2", (unit_t00 - 0.5).norm()),
    ])
}
