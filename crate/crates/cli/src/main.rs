use std::path::PathBuf;
use std::process::ExitCode;

use bwspinor::{Complex64, Sign};
use bwspinor_cli::commands::{
    self, parse_pair, parse_vec3, DirectionArg, ExtractMethod, PacketArgs,
};
use bwspinor_cli::files::{self, AmplitudeFile, FieldFile, InputFile};
use bwspinor_cli::verify::{self, Suite};
use bwspinor_cli::{CliError, CliResult};
use clap::{Parser, Subcommand};
use serde::Serialize;

/// Spinor calculus, Bargmann-Wigner fields and invariant norms.
#[derive(Parser)]
#[command(name = "bwspinor", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the randomized identity suites and print the residual table.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = verify::DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Print the spin-frame attached to an on-shell momentum.
    Frame {
        /// Spatial momentum `x,y,z`.
        #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true)]
        p: [f64; 3],
        #[arg(long)]
        mass: f64,
        /// Real reference spinor `a,b`; required when the mass is positive.
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        nu: Option<[f64; 2]>,
        #[arg(long)]
        json: bool,
    },
    /// Turn an amplitude file into a field file.
    Synth {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Recover the amplitudes of a field file.
    Extract {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// contraction | projection (massive fields only).
        #[arg(long, default_value = "contraction")]
        method: ExtractMethod,
    },
    /// Weighted generalized norm of a field or amplitude file.
    Norm {
        #[arg(long = "in")]
        input: PathBuf,
        /// standard | null-omega | random:<seed> | fixed:<t0,t1,t2,t3>[;...]
        #[arg(long = "t", default_value = "standard", allow_hyphen_values = true)]
        t: Vec<DirectionArg>,
        /// Also report the standard norm and the ratio to it.
        #[arg(long)]
        standard: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample a Gaussian wavepacket on a midpoint shell grid.
    Packet {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mass: f64,
        #[arg(long, default_value = "+", value_parser = parse_sign, allow_hyphen_values = true)]
        sign: Sign,
        /// Complex coefficient `re,im`; repeat once per amplitude. Defaults to all ones.
        #[arg(long = "coeff", value_parser = parse_pair, allow_hyphen_values = true)]
        coeffs: Vec<[f64; 2]>,
        #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true, default_value = "0,0,0")]
        center: [f64; 3],
        #[arg(long, default_value_t = 0.5)]
        sigma: f64,
        #[arg(long, default_value_t = 3.0)]
        half_width: f64,
        #[arg(long, default_value_t = 16)]
        points: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    match s {
        "+" | "plus" => Ok(Sign::Plus),
        "-" | "minus" => Ok(Sign::Minus),
        _ => Err(format!("expected + or -, found {s:?}")),
    }
}

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("reports always serialize"));
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Verify {
            suite,
            trials,
            seed,
            tol,
        } => {
            let report = verify::run(suite, trials, seed, tol)?;
            print!("{report}");
            if !report.passed() {
                return Err(CliError::Numeric("identity residuals exceed the tolerance".into()));
            }
        }
        Command::Frame { p, mass, nu, json } => {
            let r = commands::frame_report(p, mass, nu)?;
            if json {
                print_json(&r);
            } else {
                print!("{r}");
            }
        }
        Command::Synth { input, out } => {
            let a = AmplitudeFile::from_json(&files::read_json(&input)?)?;
            let f = commands::synth(&a)?;
            files::write_json(&out, &f.to_json())?;
            println!("wrote {} samples to {}", f.samples.len(), out.display());
        }
        Command::Extract { input, out, method } => {
            let f = FieldFile::from_json(&files::read_json(&input)?)?;
            let a = commands::extract(&f, method)?;
            files::write_json(&out, &a.to_json())?;
            println!("wrote {} samples to {}", a.samples.len(), out.display());
        }
        Command::Norm {
            input,
            t,
            standard,
            json,
            out,
        } => {
            let file = InputFile::from_json(&files::read_json(&input)?)?;
            let r = commands::norm(&file, &t, standard)?;
            if let Some(path) = out {
                files::write_json(&path, &serde_json::to_value(&r).expect("reports always serialize"))?;
            }
            if json {
                print_json(&r);
            } else {
                print!("{r}");
            }
        }
        Command::Packet {
            n,
            mass,
            sign,
            coeffs,
            center,
            sigma,
            half_width,
            points,
            out,
        } => {
            let a = commands::packet(&PacketArgs {
                n,
                mass,
                energy: sign,
                coefficients: coeffs.iter().map(|c| Complex64::new(c[0], c[1])).collect(),
                center,
                sigma,
                half_width,
                points,
            })?;
            files::write_json(&out, &a.to_json())?;
            println!("wrote {} samples to {}", a.samples.len(), out.display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
