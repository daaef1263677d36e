//! `distlab` — exact compression calculus, distance censuses, and bound
//! reports from the command line.
//!
//! Exit codes: 0 success, 1 when `verify` finds violations of an asserted
//! suite (transference findings are expected discoveries and exit 0),
//! 2 on input or validation errors.

use clap::{Args, Parser, Subcommand};
use distlab::census::{census, PointSet};
use distlab::claims::{
    bound_report, corollary_bound, inequality_sweep, transference_search, ClaimVerdict,
    CorollaryVariant, VIOLATION_CAP,
};
use distlab::compression;
use distlab::error::Error;
use distlab::generate::{generate_concentrated, generate_grid, generate_random};
use distlab::io::{read_pointset, write_pointset};
use distlab::rational::{format_rational, parse_rational};
use distlab::report::{report_to_json, write_report};
use distlab::vector::{RationalVector, Scale};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

/// Environment variable overriding the default worker count.
const WORKERS_ENV: &str = "DISTLAB_WORKERS";

#[derive(Parser)]
#[command(name = "distlab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PointArgs {
    /// Comma-separated exact coordinates, e.g. "1,2,4" or "1/2,-3,7/5"
    #[arg(long)]
    point: String,
    /// Compression scale m >= 1, integer or "p/q"
    #[arg(long, default_value = "1")]
    m: String,
}

#[derive(Subcommand)]
enum Command {
    /// Apply the scale-m compression to a point
    Compress(PointArgs),
    /// Mass of the compressed point (exact rational)
    Mass(PointArgs),
    /// Gap of compression (float), or its exact square with --squared
    Gap {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long)]
        squared: bool,
    },
    /// Distance census of a point-set CSV file
    Census {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "out")]
        output: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Generate a point set and write it as CSV
    Gen {
        /// grid | concentrated | random
        #[arg(long)]
        kind: String,
        #[arg(long = "out")]
        output: PathBuf,
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long)]
        side: Option<u32>,
        #[arg(long)]
        n: Option<u64>,
        /// norm cap for concentrated sets, exact rational
        #[arg(long)]
        radius: Option<String>,
        #[arg(long)]
        coord_bound: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a verification suite; exits 1 if an asserted suite has violations
    Verify {
        /// inequalities | transference
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 12)]
        coord_limit: u64,
        #[arg(long, default_value_t = 5)]
        dim_max: u32,
        #[arg(long, default_value_t = 3)]
        dim: u32,
        /// comma-separated integer scales for the inequality suite
        #[arg(long, default_value = "1,2,3")]
        scales: String,
        #[arg(long)]
        require_distinct: bool,
        #[arg(long = "out")]
        output: Option<PathBuf>,
    },
    /// Census a sweep of square grids against the bound formulas
    Report {
        /// comma-separated grid sides, e.g. "4,8,16,32"
        #[arg(long, default_value = "4,8,16,32")]
        sides: String,
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long, default_value_t = 0.0)]
        epsilon: f64,
        #[arg(long, default_value_t = 1.0)]
        constant: f64,
        #[arg(long = "out")]
        output: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Evaluate one of the closing corollary bound formulas
    Corollary {
        #[arg(long)]
        n: u64,
        /// dim_n | dim_2n | dim_n_squared
        #[arg(long)]
        variant: String,
        #[arg(long, default_value_t = 0.0)]
        epsilon: f64,
    },
}

#[derive(Serialize)]
struct CensusPayload<'a> {
    label: &'a str,
    has_duplicates: bool,
    #[serde(flatten)]
    result: distlab::census::CensusResult,
}

fn default_workers(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var(WORKERS_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(1)
    .max(1)
}

fn parse_point(args: &PointArgs) -> Result<(RationalVector, Scale), Error> {
    let coords = args
        .point
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>, _>>()?;
    let v = RationalVector::new(coords)?;
    let m = Scale::new(parse_rational(&args.m)?)?;
    Ok((v, m))
}

fn parse_u64_list(s: &str) -> Result<Vec<u64>, Error> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer list entry: {p:?}")))
        })
        .collect()
}

fn emit(payload: &str, output: Option<&PathBuf>) -> Result<(), Error> {
    match output {
        Some(path) => std::fs::write(path, payload).map_err(Error::from),
        None => {
            println!("{payload}");
            Ok(())
        }
    }
}

fn verdict_json(v: &ClaimVerdict) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("verdict serialization");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Compress(args) => {
            let (v, m) = parse_point(&args)?;
            println!("{}", compression::compress(&v, &m)?.render());
        }
        Command::Mass(args) => {
            let (v, m) = parse_point(&args)?;
            println!("{}", format_rational(&compression::mass(&v, &m)?));
        }
        Command::Gap { point, squared } => {
            let (v, m) = parse_point(&point)?;
            if squared {
                println!("{}", format_rational(&compression::gap_squared(&v, &m)?));
            } else {
                println!("{}", compression::gap(&v, &m)?);
            }
        }
        Command::Census {
            input,
            output,
            workers,
        } => {
            let ps = read_pointset(&input)?;
            let result = census(&ps, default_workers(workers))?;
            let payload = CensusPayload {
                label: ps.label(),
                has_duplicates: ps.has_duplicates(),
                result,
            };
            let mut text = serde_json::to_string_pretty(&payload).expect("census serialization");
            text.push('\n');
            emit(&text, output.as_ref())?;
        }
        Command::Gen {
            kind,
            output,
            k,
            side,
            n,
            radius,
            coord_bound,
            seed,
        } => {
            let ps = match kind.as_str() {
                "grid" => {
                    let side = side
                        .ok_or_else(|| Error::InvalidParameter("grid needs --side".into()))?;
                    generate_grid(side, k)?
                }
                "concentrated" => {
                    let n = n.ok_or_else(|| {
                        Error::InvalidParameter("concentrated needs --n".into())
                    })?;
                    let radius = radius.ok_or_else(|| {
                        Error::InvalidParameter("concentrated needs --radius".into())
                    })?;
                    generate_concentrated(n, k, &parse_rational(&radius)?, seed)?
                }
                "random" => {
                    let n = n
                        .ok_or_else(|| Error::InvalidParameter("random needs --n".into()))?;
                    let bound = coord_bound.ok_or_else(|| {
                        Error::InvalidParameter("random needs --coord-bound".into())
                    })?;
                    generate_random(n, k, bound, seed)?
                }
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "unknown generator kind: {other}"
                    )))
                }
            };
            write_pointset(&ps, &output)?;
        }
        Command::Verify {
            suite,
            coord_limit,
            dim_max,
            dim,
            scales,
            require_distinct,
            output,
        } => match suite.as_str() {
            "inequalities" => {
                let scales = parse_u64_list(&scales)?;
                let verdict = inequality_sweep(coord_limit, dim_max, &scales)?;
                emit(&verdict_json(&verdict), output.as_ref())?;
                if !verdict.violations.is_empty() {
                    return Ok(1);
                }
            }
            "transference" => {
                // findings here are expected discoveries, not failures
                let verdict =
                    transference_search(coord_limit, dim, require_distinct, VIOLATION_CAP)?;
                emit(&verdict_json(&verdict), output.as_ref())?;
            }
            other => {
                return Err(Error::InvalidParameter(format!("unknown suite: {other}")));
            }
        },
        Command::Report {
            sides,
            k,
            epsilon,
            constant,
            output,
            workers,
        } => {
            let sides = parse_u64_list(&sides)?;
            if sides.is_empty() {
                return Err(Error::EmptyInput);
            }
            let sets = sides
                .iter()
                .map(|&s| {
                    let side = u32::try_from(s)
                        .map_err(|_| Error::InvalidParameter(format!("side too large: {s}")))?;
                    generate_grid(side, k)
                })
                .collect::<Result<Vec<PointSet>, _>>()?;
            let report = bound_report(&sets, epsilon, constant, default_workers(workers))?;
            match output {
                Some(path) => write_report(&report, &path)?,
                None => println!("{}", report_to_json(&report)),
            }
        }
        Command::Corollary {
            n,
            variant,
            epsilon,
        } => {
            let variant: CorollaryVariant = variant.parse()?;
            println!("{}", corollary_bound(n, variant, epsilon)?);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
