//! Synthesis, extraction, norm evaluation, frame inspection and packet generation.

use std::fmt;
use std::str::FromStr;

use bwspinor::bw::{
    default_frame, extract_massive, extract_massless, project_massive, synth_massive,
    synth_massless, Amplitudes, BwComponent, DirectionSpec, SymMultiSpinor,
};
use bwspinor::frame::{frame_for, frame_massless, SpinFrame};
use bwspinor::pauli_lubanski::pl_eigenvalues;
use bwspinor::quadrature::{
    build_grid, evaluate_components, parallel_map, GaussianPacket, Integrand, Normalization,
};
use bwspinor::spinor::{FourVector, Spinor};
use bwspinor::{Complex64, Sign};
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::files::{AmplitudeFile, AmplitudeSample, FieldFile, FieldSample, Header, InputFile};

/// Frame used for a sample: the massless flag frame, or the massive frame
/// built from the header reference spinor.
pub fn frame_at(h: &Header, p: &FourVector) -> bwspinor::Result<SpinFrame> {
    if !h.is_massive() {
        return frame_massless(p);
    }
    match &h.reference {
        Some(nu) => frame_for(p, nu),
        None => default_frame(p),
    }
}

pub fn normalization_at(h: &Header, frame: &SpinFrame) -> Complex64 {
    match h.normalization {
        Normalization::FrameDefault => frame.default_normalization(),
        Normalization::Fixed(z) => z,
    }
}

pub fn synth_sample(h: &Header, s: &AmplitudeSample) -> bwspinor::Result<BwComponent> {
    let frame = frame_at(h, &s.p)?;
    if h.is_massive() {
        let amps = Amplitudes::new(s.f.clone(), h.energy);
        synth_massive(&frame, &amps, normalization_at(h, &frame))
    } else {
        synth_massless(&frame.pi, s.f[0], h.n, h.energy)
    }
}

pub fn component_of(h: &Header, s: &FieldSample) -> bwspinor::Result<BwComponent> {
    let comps = if h.is_massive() {
        s.comps
            .iter()
            .enumerate()
            .map(|(k, c)| SymMultiSpinor::from_components(h.n - k, k, c.clone()))
            .collect::<bwspinor::Result<_>>()?
    } else {
        vec![SymMultiSpinor::from_components(h.n, 0, s.comps[0].clone())?]
    };
    BwComponent::new(h.n, h.mass, h.energy, s.p, comps)
}

pub fn field_sample(psi: &BwComponent, weight: Option<f64>) -> FieldSample {
    FieldSample {
        p: psi.p,
        comps: psi.comps.iter().map(|c| c.components().to_vec()).collect(),
        weight,
    }
}

fn collect<T>(results: Vec<bwspinor::Result<T>>) -> CliResult<Vec<T>> {
    results
        .into_iter()
        .collect::<bwspinor::Result<_>>()
        .map_err(CliError::from)
}

pub fn synth(file: &AmplitudeFile) -> CliResult<FieldFile> {
    let h = &file.header;
    let samples = collect(parallel_map(&file.samples, |i, s| {
        synth_sample(h, s)
            .map(|psi| field_sample(&psi, s.weight))
            .map_err(|e| e.at_sample(i))
    }))?;
    Ok(FieldFile {
        header: h.clone(),
        samples,
    })
}

/// Massive amplitude recovery.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ExtractMethod {
    /// `N^{-n} ω…ω̄ ψ`, one component array per amplitude.
    #[default]
    Contraction,
    /// Orthogonal projection onto the synthesized basis fields.
    Projection,
}

impl FromStr for ExtractMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "contraction" => Ok(Self::Contraction),
            "projection" => Ok(Self::Projection),
            _ => Err(format!("expected contraction or projection, found {s:?}")),
        }
    }
}

pub fn extract(file: &FieldFile, method: ExtractMethod) -> CliResult<AmplitudeFile> {
    let h = &file.header;
    let samples = collect(parallel_map(&file.samples, |i, s| {
        let run = || -> bwspinor::Result<AmplitudeSample> {
            let psi = component_of(h, s)?;
            let frame = frame_at(h, &s.p)?;
            let f = if h.is_massive() {
                let nn = normalization_at(h, &frame);
                match method {
                    ExtractMethod::Contraction => extract_massive(&psi, &frame, nn)?.values,
                    ExtractMethod::Projection => project_massive(&psi, &frame, nn)?.values,
                }
            } else {
                vec![extract_massless(&psi, &frame.omega)?]
            };
            Ok(AmplitudeSample {
                p: s.p,
                f,
                weight: s.weight,
            })
        };
        run().map_err(|e| e.at_sample(i))
    }))?;
    Ok(AmplitudeFile {
        header: h.clone(),
        samples,
    })
}

/// Components of either file kind, with weights defaulting to 1.
pub fn components(input: &InputFile) -> CliResult<Vec<(BwComponent, f64)>> {
    match input {
        InputFile::Amplitudes(a) => collect(parallel_map(&a.samples, |i, s| {
            synth_sample(&a.header, s)
                .map(|psi| (psi, s.weight.unwrap_or(1.0)))
                .map_err(|e| e.at_sample(i))
        })),
        InputFile::Field(f) => collect(parallel_map(&f.samples, |i, s| {
            component_of(&f.header, s)
                .map(|psi| (psi, s.weight.unwrap_or(1.0)))
                .map_err(|e| e.at_sample(i))
        })),
    }
}

/// Direction choice given on the command line.
#[derive(Clone, Debug, PartialEq)]
pub enum DirectionArg {
    Standard,
    NullOmega,
    Random(u64),
    /// One vector (used for every slot) or exactly `n` vectors.
    Fixed(Vec<FourVector>),
}

impl FromStr for DirectionArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "standard" {
            return Ok(Self::Standard);
        }
        if s == "null-omega" {
            return Ok(Self::NullOmega);
        }
        if let Some(seed) = s.strip_prefix("random:") {
            return seed
                .parse()
                .map(Self::Random)
                .map_err(|_| format!("invalid seed {seed:?}"));
        }
        if let Some(list) = s.strip_prefix("fixed:") {
            let vs = list
                .split(';')
                .map(|v| {
                    let x = parse_reals(v)?;
                    if x.len() != 4 {
                        return Err(format!("direction {v:?} needs 4 components"));
                    }
                    Ok(FourVector::new(x[0], x[1], x[2], x[3]))
                })
                .collect::<Result<_, String>>()?;
            return Ok(Self::Fixed(vs));
        }
        Err(format!(
            "expected standard, null-omega, random:<seed> or fixed:<t0,t1,t2,t3>[;...], found {s:?}"
        ))
    }
}

impl fmt::Display for DirectionArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Standard => f.write_str("standard"),
            Self::NullOmega => f.write_str("null-omega"),
            Self::Random(s) => write!(f, "random:{s}"),
            Self::Fixed(vs) => {
                let parts: Vec<String> = vs
                    .iter()
                    .map(|v| v.0.map(|x| x.to_string()).join(","))
                    .collect();
                write!(f, "fixed:{}", parts.join(";"))
            }
        }
    }
}

impl DirectionArg {
    pub fn spec(&self, n: usize) -> CliResult<DirectionSpec> {
        Ok(match self {
            Self::Standard => DirectionSpec::StandardTime,
            Self::NullOmega => DirectionSpec::NullOmega,
            Self::Random(s) => DirectionSpec::RandomTimelike(*s),
            Self::Fixed(vs) if vs.len() == 1 => DirectionSpec::FixedList(vec![vs[0]; n]),
            Self::Fixed(vs) if vs.len() == n => DirectionSpec::FixedList(vs.clone()),
            Self::Fixed(vs) => {
                return Err(CliError::Usage(format!(
                    "fixed directions: expected 1 or {n} vectors, found {}",
                    vs.len()
                )))
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormEntry {
    pub t: String,
    pub norm: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormReport {
    pub n: usize,
    pub mass: f64,
    pub samples: usize,
    pub entries: Vec<NormEntry>,
    /// Largest `|a - b| / max(|a|, |b|)` over pairs of entries.
    pub max_relative_difference: f64,
    /// Weighted sum of the standard integrand `Σ |ψ|² / |p⁰|^n`.
    pub standard: Option<f64>,
    /// `entries[0] / standard`.
    pub ratio: Option<f64>,
}

pub fn norm(input: &InputFile, ts: &[DirectionArg], standard: bool) -> CliResult<NormReport> {
    if ts.is_empty() {
        return Err(CliError::Usage("at least one --t is required".into()));
    }
    let h = input.header();
    let comps = components(input)?;
    let entries = ts
        .iter()
        .map(|t| {
            let integrand = Integrand::Generalized(t.spec(h.n)?);
            Ok(NormEntry {
                t: t.to_string(),
                norm: evaluate_components(&comps, &integrand)?,
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    let mut spread: f64 = 0.0;
    for a in &entries {
        for b in &entries {
            let scale = a.norm.abs().max(b.norm.abs());
            if scale > 0.0 {
                spread = spread.max((a.norm - b.norm).abs() / scale);
            }
        }
    }
    let standard = if standard {
        Some(evaluate_components(&comps, &Integrand::Standard)?)
    } else {
        None
    };
    Ok(NormReport {
        n: h.n,
        mass: h.mass,
        samples: comps.len(),
        ratio: standard.map(|s| entries[0].norm / s),
        entries,
        max_relative_difference: spread,
        standard,
    })
}

impl fmt::Display for NormReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}, mass = {:?}, samples = {}", self.n, self.mass, self.samples)?;
        for e in &self.entries {
            writeln!(f, "norm[{}] = {:?}", e.t, e.norm)?;
        }
        if self.entries.len() > 1 {
            writeln!(f, "max relative difference = {:e}", self.max_relative_difference)?;
        }
        if let (Some(s), Some(r)) = (self.standard, self.ratio) {
            writeln!(f, "standard = {s:?}")?;
            writeln!(f, "ratio = {r:?}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FrameReport {
    pub kind: &'static str,
    pub p: [f64; 4],
    pub mass: f64,
    pub omega: [[f64; 2]; 2],
    pub pi: [[f64; 2]; 2],
    pub omega_flag: [f64; 4],
    pub pi_flag: [f64; 4],
    pub omega_dot_p: f64,
    /// `λ^{(±)}(ω, p)`.
    pub lambda_plus: f64,
    pub lambda_minus: f64,
    pub normalization: f64,
}

fn spinor_parts(s: &Spinor) -> [[f64; 2]; 2] {
    [[s.0[0].re, s.0[0].im], [s.0[1].re, s.0[1].im]]
}

pub fn frame_report(spatial: [f64; 3], mass: f64, nu: Option<[f64; 2]>) -> CliResult<FrameReport> {
    if mass < 0.0 {
        return Err(CliError::Usage(format!("mass must be non-negative, got {mass}")));
    }
    let p = FourVector::on_shell(mass, spatial);
    let frame = if mass > 0.0 {
        let nu = nu.ok_or_else(|| CliError::Usage("--nu is required for massive momenta".into()))?;
        frame_for(&p, &Spinor::real(nu[0], nu[1]))?
    } else {
        frame_massless(&p)?
    };
    let w = frame.omega_vec();
    let ev = pl_eigenvalues(&w, &p)?;
    Ok(FrameReport {
        kind: if mass > 0.0 { "massive" } else { "massless" },
        p: p.0,
        mass,
        omega: spinor_parts(&frame.omega),
        pi: spinor_parts(&frame.pi),
        omega_flag: w.0,
        pi_flag: frame.pi_vec().0,
        omega_dot_p: frame.omega_dot_p(),
        lambda_plus: ev.lambda(),
        lambda_minus: -ev.lambda(),
        normalization: frame.default_normalization().re,
    })
}

impl fmt::Display for FrameReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sp = |s: &[[f64; 2]; 2]| {
            format!("({:.7}{:+.7}i, {:.7}{:+.7}i)", s[0][0], s[0][1], s[1][0], s[1][1])
        };
        let v = |x: &[f64; 4]| format!("({:.7}, {:.7}, {:.7}, {:.7})", x[0], x[1], x[2], x[3]);
        writeln!(f, "kind        {}", self.kind)?;
        writeln!(f, "p           {}", v(&self.p))?;
        writeln!(f, "omega       {}", sp(&self.omega))?;
        writeln!(f, "pi          {}", sp(&self.pi))?;
        writeln!(f, "omega flag  {}", v(&self.omega_flag))?;
        writeln!(f, "pi flag     {}", v(&self.pi_flag))?;
        writeln!(f, "omega.p     {:.7}", self.omega_dot_p)?;
        writeln!(f, "lambda      ±{:.7}", self.lambda_plus)?;
        writeln!(f, "N           {:.7}", self.normalization)
    }
}

/// Gaussian packet sampled on a midpoint shell grid, as an amplitude file.
#[derive(Clone, Debug, PartialEq)]
pub struct PacketArgs {
    pub n: usize,
    pub mass: f64,
    pub energy: Sign,
    pub coefficients: Vec<Complex64>,
    pub center: [f64; 3],
    pub sigma: f64,
    pub half_width: f64,
    pub points: usize,
}

pub fn packet(args: &PacketArgs) -> CliResult<AmplitudeFile> {
    let count = if args.mass > 0.0 { args.n + 1 } else { 1 };
    let coefficients = if args.coefficients.is_empty() {
        vec![Complex64::new(1.0, 0.0); count]
    } else if args.coefficients.len() == count {
        args.coefficients.clone()
    } else {
        return Err(CliError::Usage(format!(
            "expected {count} coefficients, found {}",
            args.coefficients.len()
        )));
    };
    if !(args.sigma > 0.0) {
        return Err(CliError::Usage("sigma must be positive".into()));
    }
    if args.n == 0 || args.n > bwspinor::bw::MAX_RANK {
        return Err(CliError::Usage(format!(
            "n must be in 1..={}",
            bwspinor::bw::MAX_RANK
        )));
    }
    let grid = build_grid(args.mass, args.half_width, args.points)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let pk = GaussianPacket {
        n: args.n,
        mass: args.mass,
        energy: args.energy,
        coefficients,
        center: args.center,
        sigma: args.sigma,
        normalization: Normalization::FrameDefault,
    };
    Ok(AmplitudeFile {
        header: Header {
            n: args.n,
            mass: args.mass,
            energy: args.energy,
            normalization: Normalization::FrameDefault,
            reference: None,
        },
        samples: grid
            .samples
            .iter()
            .map(|s| AmplitudeSample {
                p: s.p,
                f: pk.amplitudes_at(&s.p).values,
                weight: Some(s.weight),
            })
            .collect(),
    })
}

/// Comma-separated reals.
pub fn parse_reals(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<f64>()
                .map_err(|_| format!("invalid number {x:?}"))
        })
        .collect()
}

pub fn parse_vec3(s: &str) -> Result<[f64; 3], String> {
    let v = parse_reals(s)?;
    <[f64; 3]>::try_from(v).map_err(|_| format!("expected 3 comma-separated numbers, found {s:?}"))
}

pub fn parse_pair(s: &str) -> Result<[f64; 2], String> {
    let v = parse_reals(s)?;
    <[f64; 2]>::try_from(v).map_err(|_| format!("expected 2 comma-separated numbers, found {s:?}"))
}
