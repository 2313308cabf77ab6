//! JSON amplitude and field files.
//!
//! Complex numbers are `[re, im]` pairs. Field components `comps[k]` list the
//! graded values of the multispinor with `n - k` unprimed and `k` primed
//! indices, row-major in `(i, j)` where `i` counts unprimed ones and `j`
//! counts primed ones. Massless fields carry a single all-unprimed array.

use std::path::Path;

use bwspinor::bw::MAX_RANK;
use bwspinor::quadrature::Normalization;
use bwspinor::spinor::{FourVector, Spinor};
use bwspinor::{Complex64, Sign};
use serde_json::{json, Map, Value};

use crate::error::{CliError, CliResult};

pub const VERSION: u64 = 1;

/// Relative on-shell tolerance for sample momenta.
pub const SHELL_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq)]
pub struct Header {
    pub n: usize,
    pub mass: f64,
    pub energy: Sign,
    pub normalization: Normalization,
    /// Reference spinor `ν` for massive frames; the default frame when absent.
    pub reference: Option<Spinor>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AmplitudeSample {
    pub p: FourVector,
    pub f: Vec<Complex64>,
    pub weight: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AmplitudeFile {
    pub header: Header,
    pub samples: Vec<AmplitudeSample>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FieldSample {
    pub p: FourVector,
    pub comps: Vec<Vec<Complex64>>,
    pub weight: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FieldFile {
    pub header: Header,
    pub samples: Vec<FieldSample>,
}

/// Either file kind, told apart by the sample payload.
#[derive(Clone, Debug, PartialEq)]
pub enum InputFile {
    Amplitudes(AmplitudeFile),
    Field(FieldFile),
}

impl Header {
    pub fn is_massive(&self) -> bool {
        self.mass > 0.0
    }

    /// Number of amplitudes per sample.
    pub fn amplitude_count(&self) -> usize {
        if self.is_massive() {
            self.n + 1
        } else {
            1
        }
    }

    /// Component array lengths per sample.
    pub fn component_shape(&self) -> Vec<usize> {
        if self.is_massive() {
            (0..=self.n).map(|k| (self.n - k + 1) * (k + 1)).collect()
        } else {
            vec![self.n + 1]
        }
    }
}

fn complex(z: &Complex64) -> Value {
    json!([z.re, z.im])
}

fn header_json(h: &Header) -> Value {
    let mut m = Map::new();
    m.insert("version".into(), json!(VERSION));
    m.insert("n".into(), json!(h.n));
    m.insert("mass".into(), json!(h.mass));
    m.insert("sign".into(), json!(h.energy.symbol()));
    m.insert(
        "normalization".into(),
        match h.normalization {
            Normalization::FrameDefault => json!("paper-default"),
            Normalization::Fixed(z) => complex(&z),
        },
    );
    if let Some(nu) = &h.reference {
        m.insert("nu".into(), json!([complex(&nu.0[0]), complex(&nu.0[1])]));
    }
    Value::Object(m)
}

fn sample_json(p: &FourVector, key: &str, payload: Value, weight: Option<f64>) -> Value {
    let mut m = Map::new();
    m.insert("p".into(), json!(p.0));
    m.insert(key.into(), payload);
    if let Some(w) = weight {
        m.insert("weight".into(), json!(w));
    }
    Value::Object(m)
}

impl AmplitudeFile {
    pub fn to_json(&self) -> Value {
        let samples: Vec<Value> = self
            .samples
            .iter()
            .map(|s| sample_json(&s.p, "f", s.f.iter().map(complex).collect(), s.weight))
            .collect();
        json!({ "header": header_json(&self.header), "samples": samples })
    }

    pub fn from_json(v: &Value) -> CliResult<Self> {
        let header = parse_header(v)?;
        let samples = samples_of(v)?
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let ptr = format!("/samples/{i}");
                let f = complex_list(field(s, "f", &ptr)?, &format!("{ptr}/f"))?;
                if f.len() != header.amplitude_count() {
                    return Err(CliError::schema(
                        format!("{ptr}/f"),
                        format!("expected {} amplitudes, found {}", header.amplitude_count(), f.len()),
                    ));
                }
                Ok(AmplitudeSample {
                    p: momentum(s, &header, &ptr)?,
                    f,
                    weight: weight(s, &ptr)?,
                })
            })
            .collect::<CliResult<_>>()?;
        Ok(Self { header, samples })
    }
}

impl FieldFile {
    pub fn to_json(&self) -> Value {
        let samples: Vec<Value> = self
            .samples
            .iter()
            .map(|s| {
                let comps: Vec<Value> = s
                    .comps
                    .iter()
                    .map(|c| Value::Array(c.iter().map(complex).collect()))
                    .collect();
                sample_json(&s.p, "comps", Value::Array(comps), s.weight)
            })
            .collect();
        json!({ "header": header_json(&self.header), "samples": samples })
    }

    pub fn from_json(v: &Value) -> CliResult<Self> {
        let header = parse_header(v)?;
        let shape = header.component_shape();
        let samples = samples_of(v)?
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let ptr = format!("/samples/{i}");
                let cptr = format!("{ptr}/comps");
                let arr = array(field(s, "comps", &ptr)?, &cptr)?;
                if arr.len() != shape.len() {
                    return Err(CliError::schema(
                        cptr,
                        format!("expected {} component arrays, found {}", shape.len(), arr.len()),
                    ));
                }
                let comps = arr
                    .iter()
                    .zip(&shape)
                    .enumerate()
                    .map(|(k, (c, &len))| {
                        let kptr = format!("{cptr}/{k}");
                        let list = complex_list(c, &kptr)?;
                        if list.len() != len {
                            return Err(CliError::schema(
                                kptr,
                                format!("expected {len} components, found {}", list.len()),
                            ));
                        }
                        Ok(list)
                    })
                    .collect::<CliResult<_>>()?;
                Ok(FieldSample {
                    p: momentum(s, &header, &ptr)?,
                    comps,
                    weight: weight(s, &ptr)?,
                })
            })
            .collect::<CliResult<_>>()?;
        Ok(Self { header, samples })
    }
}

impl InputFile {
    pub fn from_json(v: &Value) -> CliResult<Self> {
        let is_amplitude = v
            .get("samples")
            .and_then(Value::as_array)
            .and_then(|s| s.first())
            .is_some_and(|s| s.get("f").is_some());
        if is_amplitude {
            Ok(Self::Amplitudes(AmplitudeFile::from_json(v)?))
        } else {
            Ok(Self::Field(FieldFile::from_json(v)?))
        }
    }

    pub fn header(&self) -> &Header {
        match self {
            Self::Amplitudes(a) => &a.header,
            Self::Field(f) => &f.header,
        }
    }
}

pub fn read_json(path: &Path) -> CliResult<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::schema("", format!("invalid JSON: {e}")))
}

pub fn write_json(path: &Path, v: &Value) -> CliResult<()> {
    let text = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    std::fs::write(path, text + "\n").map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn field<'a>(v: &'a Value, key: &str, ptr: &str) -> CliResult<&'a Value> {
    let obj = v
        .as_object()
        .ok_or_else(|| CliError::schema(ptr, "expected an object"))?;
    obj.get(key)
        .ok_or_else(|| CliError::schema(format!("{ptr}/{key}"), "missing field"))
}

fn array<'a>(v: &'a Value, ptr: &str) -> CliResult<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| CliError::schema(ptr, "expected an array"))
}

fn real(v: &Value, ptr: &str) -> CliResult<f64> {
    v.as_f64()
        .filter(|x| x.is_finite())
        .ok_or_else(|| CliError::schema(ptr, "expected a finite number"))
}

fn complex_value(v: &Value, ptr: &str) -> CliResult<Complex64> {
    let a = array(v, ptr)?;
    if a.len() != 2 {
        return Err(CliError::schema(ptr, "expected a [re, im] pair"));
    }
    Ok(Complex64::new(
        real(&a[0], &format!("{ptr}/0"))?,
        real(&a[1], &format!("{ptr}/1"))?,
    ))
}

fn complex_list(v: &Value, ptr: &str) -> CliResult<Vec<Complex64>> {
    array(v, ptr)?
        .iter()
        .enumerate()
        .map(|(i, z)| complex_value(z, &format!("{ptr}/{i}")))
        .collect()
}

fn parse_header(v: &Value) -> CliResult<Header> {
    let h = field(v, "header", "")?;
    let version = field(h, "version", "/header")?;
    if version.as_u64() != Some(VERSION) {
        return Err(CliError::schema("/header/version", format!("expected {VERSION}")));
    }
    let n = field(h, "n", "/header")?
        .as_u64()
        .map(|n| n as usize)
        .filter(|&n| (1..=MAX_RANK).contains(&n))
        .ok_or_else(|| {
            CliError::schema("/header/n", format!("expected an integer in 1..={MAX_RANK}"))
        })?;
    let mass = real(field(h, "mass", "/header")?, "/header/mass")?;
    if mass < 0.0 {
        return Err(CliError::schema("/header/mass", "mass must be non-negative"));
    }
    let energy = field(h, "sign", "/header")?
        .as_str()
        .ok_or_else(|| CliError::schema("/header/sign", "expected \"+\" or \"-\""))?
        .parse::<Sign>()
        .map_err(|e| CliError::schema("/header/sign", e))?;
    let normalization = match h.get("normalization") {
        None => Normalization::FrameDefault,
        Some(Value::String(s)) if s == "paper-default" => Normalization::FrameDefault,
        Some(Value::String(s)) => {
            return Err(CliError::schema(
                "/header/normalization",
                format!("expected \"paper-default\" or [re, im], found {s:?}"),
            ))
        }
        Some(z) => Normalization::Fixed(complex_value(z, "/header/normalization")?),
    };
    let reference = match h.get("nu") {
        None => None,
        Some(nu) => {
            let c = complex_list(nu, "/header/nu")?;
            if c.len() != 2 {
                return Err(CliError::schema("/header/nu", "expected two complex components"));
            }
            Some(Spinor::new(c[0], c[1]))
        }
    };
    Ok(Header {
        n,
        mass,
        energy,
        normalization,
        reference,
    })
}

fn samples_of(v: &Value) -> CliResult<&Vec<Value>> {
    array(field(v, "samples", "")?, "/samples")
}

/// Reads `p`, checks it is future-pointing and on shell, and restores the
/// exact on-shell energy.
fn momentum(s: &Value, h: &Header, ptr: &str) -> CliResult<FourVector> {
    let pptr = format!("{ptr}/p");
    let a = array(field(s, "p", ptr)?, &pptr)?;
    if a.len() != 4 {
        return Err(CliError::schema(pptr, "expected 4 components"));
    }
    let mut p = [0.0; 4];
    for (i, x) in a.iter().enumerate() {
        p[i] = real(x, &format!("{pptr}/{i}"))?;
    }
    let p = FourVector(p);
    if !(p[0] > 0.0) {
        return Err(CliError::schema(pptr, "momentum must be future-pointing"));
    }
    let defect = (p.square() - h.mass * h.mass).abs();
    if defect > SHELL_TOLERANCE * p[0] * p[0] {
        return Err(CliError::schema(
            pptr,
            format!("off shell: p·p = {}, mass² = {}", p.square(), h.mass * h.mass),
        ));
    }
    let q = FourVector::on_shell(h.mass, p.spatial());
    if h.mass == 0.0 && !(q[0] > 0.0) {
        return Err(CliError::schema(pptr, "massless momentum must be nonzero"));
    }
    Ok(q)
}

fn weight(s: &Value, ptr: &str) -> CliResult<Option<f64>> {
    match s.get("weight") {
        None => Ok(None),
        Some(w) => Ok(Some(real(w, &format!("{ptr}/weight"))?)),
    }
}
