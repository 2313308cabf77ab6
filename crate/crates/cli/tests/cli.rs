use std::path::Path;
use std::process::{Command, Output};

use bwspinor_cli::files::{read_json, AmplitudeFile, AmplitudeSample, Header, InputFile};
use bwspinor::quadrature::Normalization;
use bwspinor::spinor::{random_complex, random_future_momentum};
use bwspinor::Sign;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bwspinor"))
        .args(args)
        .env_remove("BWSPINOR_THREADS")
        .output()
        .expect("bwspinor runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn random_file(n: usize, mass: f64, samples: usize, seed: u64) -> AmplitudeFile {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let header = Header {
        n,
        mass,
        energy: Sign::Minus,
        normalization: Normalization::FrameDefault,
        reference: None,
    };
    let count = header.amplitude_count();
    let samples = (0..samples)
        .map(|_| AmplitudeSample {
            p: random_future_momentum(mass, &mut rng).unwrap(),
            f: (0..count).map(|_| random_complex(&mut rng)).collect(),
            weight: None,
        })
        .collect();
    AmplitudeFile { header, samples }
}

fn load(p: &str) -> InputFile {
    InputFile::from_json(&read_json(Path::new(p)).unwrap()).unwrap()
}

fn write(dir: &Path, name: &str, v: &Value) -> String {
    let p = dir.join(name);
    std::fs::write(&p, serde_json::to_string_pretty(v).unwrap()).unwrap();
    path(&p).to_owned()
}

#[test]
fn verify_passes_and_reports_failures() {
    let ok = run(&["verify", "--trials", "40"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    assert!(stdout(&ok).contains("46 checks"));
    let strict = run(&["verify", "--suite", "dirac", "--trials", "5", "--tol", "1e-30"]);
    assert_eq!(strict.status.code(), Some(1));
    assert!(stdout(&strict).contains("FAIL"));
    assert_eq!(run(&["verify", "--suite", "bogus"]).status.code(), Some(2));
}

#[test]
fn frame_reports_documented_values() {
    let o = run(&["frame", "--p", "0,0,0", "--mass", "1", "--nu", "1,0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("0.7071068"), "{text}");
    assert!(text.contains("0.8408964"), "{text}");

    let o = run(&["frame", "--p", "0,0,1", "--mass", "0", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let pi = v["pi"][0][0].as_f64().unwrap();
    assert!((pi - 2f64.powf(0.25)).abs() < 1e-12, "{v}");

    let o = run(&["frame", "--p", "0,0,0", "--mass", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--nu"));
}

#[test]
fn synth_then_extract_recovers_amplitudes() {
    let dir = tempfile::tempdir().unwrap();
    for (mass, seed) in [(1.4, 1), (0.0, 2)] {
        let file = random_file(3, mass, 100, seed);
        let input = write(dir.path(), "amps.json", &file.to_json());
        let field = path(&dir.path().join("field.json")).to_owned();
        let back = path(&dir.path().join("back.json")).to_owned();
        assert!(run(&["synth", "--in", &input, "--out", &field]).status.success());
        assert!(matches!(load(&field), InputFile::Field(_)));
        let o = run(&["extract", "--in", &field, "--out", &back]);
        assert!(o.status.success(), "{}", stderr(&o));
        let InputFile::Amplitudes(got) = load(&back) else {
            panic!("extract wrote a field file");
        };
        let mut worst: f64 = 0.0;
        for (a, b) in got.samples.iter().zip(&file.samples) {
            for (x, y) in a.f.iter().zip(&b.f) {
                worst = worst.max((x - y).norm());
            }
        }
        assert!(worst < 1e-12, "mass {mass}: {worst:e}");
    }
}

#[test]
fn norm_is_direction_independent_and_matches_ratio() {
    let dir = tempfile::tempdir().unwrap();
    let file = random_file(2, 0.9, 100, 3);
    let input = write(dir.path(), "amps.json", &file.to_json());
    let o = run(&["norm", "--in", &input, "--t", "standard", "--t", "null-omega", "--json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["max_relative_difference"].as_f64().unwrap() < 1e-10, "{v}");

    let file = random_file(1, 2.0, 50, 4);
    let input = write(dir.path(), "n1.json", &file.to_json());
    let o = run(&["norm", "--in", &input, "--standard", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let ratio = v["ratio"].as_f64().unwrap();
    assert!((ratio - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9, "{v}");
}

#[test]
fn schema_errors_name_the_offending_field() {
    let dir = tempfile::tempdir().unwrap();
    let bad = serde_json::json!({
        "header": {"version": 1, "n": 1, "mass": 1.0, "sign": "+"},
        "samples": [{"p": [1.0, 0.0, 0.0, 0.0], "f": [[1.0, 0.0], [0.0]]}]
    });
    let input = write(dir.path(), "bad.json", &bad);
    let out = path(&dir.path().join("out.json")).to_owned();
    let o = run(&["synth", "--in", &input, "--out", &out]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("/samples/0/f/1"), "{}", stderr(&o));
    assert_eq!(run(&["synth", "--in", "/nonexistent/in.json", "--out", &out]).status.code(), Some(2));
}

#[test]
fn orthogonal_direction_fails_with_sample_index() {
    let dir = tempfile::tempdir().unwrap();
    let file = serde_json::json!({
        "header": {"version": 1, "n": 1, "mass": 0.0, "sign": "+"},
        "samples": [
            {"p": [1.0, 0.0, 0.0, 1.0], "f": [[1.0, 0.0]]},
            {"p": [2.0, 0.0, 2.0, 0.0], "f": [[0.5, 1.0]]}
        ]
    });
    let input = write(dir.path(), "null.json", &file);
    let o = run(&["norm", "--in", &input, "--t", "fixed:0,0,0,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("sample 1"), "{}", stderr(&o));
}

#[test]
fn packet_files_feed_norm() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(&dir.path().join("packet.json")).to_owned();
    let o = run(&[
        "packet", "--n", "1", "--mass", "1", "--coeff", "1,0", "--coeff", "0,1", "--points", "8",
        "--out", &out,
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = run(&["norm", "--in", &out, "--standard", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["samples"].as_u64(), Some(512));
    assert!((v["ratio"].as_f64().unwrap() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
}
