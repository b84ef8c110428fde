//! `eigenweights`: eigenweight tables, character values, tableau counts and
//! the formula-vs-oracle verification sweep.
//!
//! Exit codes: 0 success, 1 mathematical mismatch, 2 usage error.

mod render;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use eigenweights::characters::character;
use eigenweights::{formula_eigen, oracle_eigen, Coweight, Family, GroupSpec, Partition};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "eigenweights", version, about = "Exact eigenweights of the augmentation-quotient operator for classical groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenweights for one group and coweight.
    Eigen {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Type A only: μ = (1^m, 0^{n−m}).
        #[arg(long)]
        m: Option<usize>,
        /// Type D only; defaults to spin.
        #[arg(long, value_parser = parse_coweight)]
        coweight: Option<Coweight>,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Irreducible character value χ^shape(class).
    Char {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        #[arg(long, value_parser = parse_partition)]
        class: Partition,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Number of standard Young tableaux of shape/inner.
    Syt {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        #[arg(long, value_parser = parse_partition)]
        inner: Option<Partition>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Cross-check formulas against the localization oracle.
    ///
    /// Set EIGENWEIGHTS_THREADS to cap the worker pool.
    Verify {
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
        max_a: u64,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
        max_b: u64,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        max_c: u64,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
        max_d: u64,
        /// Restrict to one family.
        #[arg(long, value_parser = parse_family)]
        family: Option<Family>,
        /// Restrict to one rank.
        #[arg(long)]
        n: Option<usize>,
        /// Include per-spec wall time in the report (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Oracle,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Format {
    Json,
    Table,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: eigenweights::Error| e.to_string())
}

fn parse_coweight(s: &str) -> Result<Coweight, String> {
    s.parse().map_err(|e: eigenweights::Error| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: eigenweights::Error| e.to_string())
}

/// Why a command did not succeed.
enum Failure {
    Usage(String),
    Mismatch(Value),
}

impl From<eigenweights::Error> for Failure {
    fn from(e: eigenweights::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(doc: &Value, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(doc).expect("JSON values serialize")),
        Format::Table => print!("{}", render::table(doc)),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Eigen { family, n, m, coweight, method, format } => {
            let spec = GroupSpec::new(family, n, m, coweight)?;
            if method != Method::Formula && spec.coweight() == Some(Coweight::Standard) {
                return Err(Failure::Usage("the oracle does not cover the standard coweight in type D; use --method formula".into()));
            }
            let (result, report) = match method {
                Method::Formula => (formula_eigen(&spec)?, None),
                Method::Oracle => (oracle_eigen(&spec).map_err(|e| Failure::Mismatch(json!({ "spec": render::spec(&spec), "error": e.to_string() })))?, None),
                Method::Both => {
                    let formula = formula_eigen(&spec)?;
                    let oracle = oracle_eigen(&spec);
                    let report = verify::compare(&formula, oracle.as_ref().map_err(|e| e.to_string()));
                    (formula, Some(report))
                }
            };
            let method_name = match method {
                Method::Formula => "formula",
                Method::Oracle => "oracle",
                Method::Both => "both",
            };
            let mut doc = render::eigen(&result, method_name);
            let Some(report) = report else {
                emit(&doc, format);
                return Ok(());
            };
            let ok = report.is_clean();
            doc["agree"] = json!(ok);
            doc["comparison"] = report.to_json();
            emit(&doc, format);
            if ok {
                Ok(())
            } else {
                Err(Failure::Mismatch(doc))
            }
        }
        Command::Char { shape, class, format } => {
            let value = character(&shape, &class)?;
            let doc = json!({
                "command": "char",
                "inputs": { "shape": shape.parts(), "class": class.parts() },
                "value": value.to_string(),
            });
            emit(&doc, format);
            Ok(())
        }
        Command::Syt { shape, inner, format } => {
            let count = match &inner {
                Some(nu) => shape.skew_syt_count(nu)?,
                None => shape.syt_count(),
            };
            let mut inputs = json!({ "shape": shape.parts() });
            if let Some(nu) = &inner {
                inputs["inner"] = json!(nu.parts());
            }
            let doc = json!({ "command": "syt", "inputs": inputs, "count": count.to_string() });
            emit(&doc, format);
            Ok(())
        }
        Command::Verify { max_a, max_b, max_c, max_d, family, n, timings, format } => {
            if let Ok(raw) = std::env::var("EIGENWEIGHTS_THREADS") {
                let threads: usize = raw.parse().ok().filter(|&t| t > 0).ok_or_else(|| Failure::Usage(format!("EIGENWEIGHTS_THREADS must be a positive integer, got {raw:?}")))?;
                rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| Failure::Usage(e.to_string()))?;
            }
            let bounds = verify::Bounds { a: max_a as usize, b: max_b as usize, c: max_c as usize, d: max_d as usize };
            let specs = verify::specs(&bounds, family, n);
            if specs.is_empty() {
                return Err(Failure::Usage("no specs match the given filters".into()));
            }
            let doc = verify::run(&specs, &bounds, family, n, timings);
            emit(&doc, format);
            if doc["failed"] != json!(0) {
                return Err(Failure::Mismatch(Value::Null));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(payload)) => {
            // eigen --method both already printed the full report on stdout
            if !payload.is_null() && payload.get("command").is_none() {
                println!("{}", serde_json::to_string_pretty(&payload).expect("JSON values serialize"));
            }
            eprintln!("error: formula and oracle disagree");
            ExitCode::from(1)
        }
    }
}

