//! `g2pv`: rational orbit classification from the command line.
//!
//! Output is one JSON document on stdout (or `key: value` lines with
//! `--format text`). Exit status: 0 success, 1 internal invariant failure or
//! failed verification, 2 invalid input.

mod render;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use g2pv::battery::{self, Config};
use g2pv::case1::{classify, delta, reduce_to_normal_form, same_orbit};
use g2pv::case2::{canonical_s, form_report, representative, same_orbit_constructed};
use g2pv::fields::{find_norm_witness, format_rat, norm_report, parse_rat, squarefree_part, square_class};
use g2pv::io::{pair_from_json, pair_to_json, reduction_to_json, vec7_from_json, JsonScalar};
use g2pv::{Error, QuadField, Rat};

/// Environment variable overriding the trial-division ceiling used when
/// factoring.
const TRIAL_CEILING_VAR: &str = "G2PV_TRIAL_CEILING";

/// Height bound for the explicit norm preimage reported by `normclass`.
const NORM_WITNESS_BOUND: u64 = 40;

#[derive(Parser)]
#[command(name = "g2pv", version, about = "Rational orbits of the G2-type prehomogeneous spaces")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(clap::Args)]
struct Input {
    /// Inline JSON.
    #[arg(long, conflicts_with = "file", allow_hyphen_values = true)]
    vector: Option<String>,
    /// Path to a JSON file; stdin is read when neither source is given.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Δ(x) and the square class of Δ(x) for x ∈ ℚ⁷.
    Case1Classify(Input),
    /// Explicit g with g·x = ᵗ(0,1,0,0,−Δ(x)/4,0,0).
    Case1Reduce(Input),
    /// Whether x and y lie in one rational orbit; input {"x": [..], "y": [..]}.
    Case1SameOrbit(Input),
    /// Binary form, discriminant and splitting class of {"x1": [..], "x2": [..]}.
    Case2Classify(Input),
    /// The orbit representative w_α(s) over ℚ(√d).
    Case2Representative {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// Whether w_α(s₁) and w_α(s₂) lie in one rational orbit.
    Case2SameOrbit {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        s1: String,
        #[arg(long, allow_hyphen_values = true)]
        s2: String,
    },
    /// Class of s in ℚ×/N(ℚ(√d)×) with the local symbols.
    Normclass {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// Run the verification battery.
    Verify {
        /// "all", a check group or a single check name.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Reduced sample counts.
        #[arg(long)]
        quick: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_trial_ceiling() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match run(&cli.command) {
        Ok((value, ok)) => {
            println!("{}", render::render(&value, cli.format));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn configure_trial_ceiling() -> Result<()> {
    if let Ok(raw) = std::env::var(TRIAL_CEILING_VAR) {
        let n: u64 = raw.trim().parse().map_err(|_| Error::Parse(format!("{TRIAL_CEILING_VAR}={raw:?} is not an integer")))?;
        square_class::set_trial_ceiling(n);
    }
    Ok(())
}

/// Library errors carry their own category; anything else (I/O, JSON
/// syntax) is an input problem.
fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(err) if !err.is_invalid_input() => 1,
        _ => 2,
    }
}

fn read_json(input: &Input) -> Result<Value> {
    let text = match (&input.vector, &input.file) {
        (Some(v), _) => v.clone(),
        (None, Some(path)) => std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
        (None, None) => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
            buf
        }
    };
    serde_json::from_str(&text).context("malformed JSON input")
}

fn field_arg(d: i64) -> Result<QuadField> {
    Ok(QuadField::new(d)?)
}

fn rat_arg(name: &str, text: &str) -> Result<Rat> {
    parse_rat(text).with_context(|| format!("--{name}"))
}

fn member<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("input needs \"{key}\"")).into())
}

/// Runs one command; the flag is false when a verification did not pass.
fn run(command: &Command) -> Result<(Value, bool)> {
    let value = match command {
        Command::Case1Classify(input) => {
            let x = vec7_from_json::<Rat>((), &read_json(input)?)?;
            let class = classify(&x)?;
            json!({"delta": format_rat(&delta(&x)?), "class": class})
        }
        Command::Case1Reduce(input) => {
            let x = vec7_from_json::<Rat>((), &read_json(input)?)?;
            let r = reduce_to_normal_form(&x)?;
            reduction_to_json(&x, &r)?
        }
        Command::Case1SameOrbit(input) => {
            let v = read_json(input)?;
            let x = vec7_from_json::<Rat>((), member(&v, "x")?)?;
            let y = vec7_from_json::<Rat>((), member(&v, "y")?)?;
            let same = same_orbit(&x, &y)?;
            json!({"same_orbit": same, "class_x": classify(&x)?, "class_y": classify(&y)?})
        }
        Command::Case2Classify(input) => {
            let x = pair_from_json::<Rat>((), &read_json(input)?)?;
            serde_json::to_value(form_report(&x)?)?
        }
        Command::Case2Representative { d, s } => {
            let field = field_arg(*d)?;
            let s = rat_arg("s", s)?;
            let x = representative(field, &s)?;
            let mut out = json!({"d": d, "s": s.to_json()});
            let obj = out.as_object_mut().expect("object literal");
            if let Value::Object(pair) = pair_to_json(&x) {
                obj.extend(pair);
            }
            obj.insert("class".into(), serde_json::to_value(squarefree_part(&field.d_rat())?)?);
            obj.insert("norm_class".into(), json!(format_rat(&canonical_s(field, &s)?)));
            out
        }
        Command::Case2SameOrbit { d, s1, s2 } => {
            let field = field_arg(*d)?;
            let same = same_orbit_constructed(field, &rat_arg("s1", s1)?, &rat_arg("s2", s2)?)?;
            json!({"same_orbit": same})
        }
        Command::Normclass { d, s } => {
            let field = field_arg(*d)?;
            let s = rat_arg("s", s)?;
            let report = norm_report(field, &s)?;
            let witness = find_norm_witness(field, &s, NORM_WITNESS_BOUND)?.map(|x| json!({"a": x.a().to_json(), "b": x.b().to_json()}));
            json!({
                "d": d,
                "s": s.to_json(),
                "is_norm": report.is_norm,
                "class": format_rat(&canonical_s(field, &s)?),
                "obstruction": report.obstruction().map(|p| p.to_string()),
                "symbols": report.symbols.iter().map(|(v, e)| json!({"place": v.to_string(), "symbol": e})).collect::<Vec<_>>(),
                "witness": witness,
            })
        }
        Command::Verify { suite, seed, quick } => {
            let config = if *quick { Config::quick(*seed) } else { Config::full(*seed) };
            let report = battery::run_suite(suite, &config)?;
            let ok = report.passed;
            return Ok((serde_json::to_value(report)?, ok));
        }
    };
    Ok((value, true))
}
