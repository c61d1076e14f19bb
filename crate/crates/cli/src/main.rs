//! `intdiff`: batch front end for the operator algebra kernel.

mod json;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use intdiff::expr::{parse, parse1, parse_poly};
use intdiff::oracle::{to_matrix_n, TruncMatrix};
use intdiff::structure::{
    bimodule_filtration_dims, census, multiplicity_report, project_bn, socle_level, split, to_weyl,
    WeylDisplay,
};
use intdiff::verify::{self, Suite, VerifyConfig};
use intdiff::{Element1, ElementN};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "intdiff",
    version,
    about = "Exact computations with integro-differential operators"
)]
struct Cli {
    /// Number of tensor factors.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical form.
    Norm { expr: String },
    /// Act on a polynomial in x1..xn.
    Apply { expr: String, poly: String },
    /// Decompose along A + F + L (rank 1).
    Split { expr: String },
    /// Socle level and label census.
    Socle { expr: String },
    /// F-degree (rank 1).
    Fdeg { expr: String },
    /// Image in the quotient by the matrix-unit ideal.
    Quot { expr: String },
    /// Truncated matrix on divided powers of degree below N.
    Matrix {
        expr: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=64))]
        size: u64,
    },
    /// Bernstein filtration dimensions of the generated bimodule (rank 1).
    Dims {
        /// Comma-separated generators.
        #[arg(long)]
        gen: String,
        #[arg(long)]
        max: usize,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Overrides the sample count of randomized checks.
        #[arg(long)]
        samples: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<intdiff::Error> for Failure {
    fn from(e: intdiff::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(2),
    }
}

fn rank1_only(cli: &Cli, what: &str) -> Result<(), Failure> {
    if cli.n == 1 {
        Ok(())
    } else {
        Err(Failure::Usage(format!("{what} needs --n 1")))
    }
}

fn emit(cli: &Cli, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) {
    match cli.format {
        Format::Text => println!("{}", text().trim_end()),
        Format::Json => println!("{}", value()),
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let n = cli.n as usize;
    match &cli.command {
        Command::Norm { expr } => {
            let a = parse(expr, n)?;
            emit(cli, || a.to_string(), || json::element(&a));
        }
        Command::Apply { expr, poly } => {
            let a = parse(expr, n)?;
            let p = parse_poly(poly, n)?;
            let out = a.apply(&p)?;
            emit(cli, || out.to_string(), || json::poly(&out));
        }
        Command::Split { expr } => {
            rank1_only(cli, "split")?;
            let s = split(&parse1(expr)?);
            let parts = [("A", &s.a_part), ("F", &s.f_part), ("L", &s.l_part)];
            emit(
                cli,
                || {
                    let mut lines: Vec<String> =
                        parts.iter().map(|(k, v)| format!("{k}: {v}")).collect();
                    if let Some(w) = to_weyl(&s.a_part).filter(|w| !w.is_empty()) {
                        lines[0].push_str(&format!("  (= {})", WeylDisplay(&w)));
                    }
                    lines.join("\n")
                },
                || {
                    let lift = |v: &Element1| json::element(&ElementN::from_element1(v));
                    json!({ "a": lift(&s.a_part), "f": lift(&s.f_part), "l": lift(&s.l_part) })
                },
            );
        }
        Command::Socle { expr } => {
            let a = parse(expr, n)?;
            // the zero element lies in every level
            let level = if a.is_zero() {
                None
            } else {
                Some(socle_level(&a)?)
            };
            let labels: Vec<String> = census(&a).iter().map(|l| json::label(l)).collect();
            emit(
                cli,
                || {
                    let level = level.map_or("none".to_string(), |l| l.to_string());
                    format!("level: {level}\ncensus: {}", labels.join(" "))
                },
                || json!({ "level": level, "census": labels }),
            );
        }
        Command::Fdeg { expr } => {
            rank1_only(cli, "fdeg")?;
            let d = parse1(expr)?.fdegree();
            emit(cli, || d.to_string(), || json!(d));
        }
        Command::Quot { expr } => {
            let q = project_bn(&parse(expr, n)?);
            emit(cli, || q.to_string(), || json::quotient(&q));
        }
        Command::Matrix { expr, size } => {
            let a = parse(expr, n)?;
            let total = (*size as usize)
                .checked_pow(n as u32)
                .filter(|&t| t <= 4096);
            let Some(_) = total else {
                return Err(Failure::Usage("matrix would exceed 4096 rows".into()));
            };
            let m: TruncMatrix = to_matrix_n(&a, *size as usize);
            emit(cli, || m.to_string(), || json!(m.to_strings()));
        }
        Command::Dims { gen, max } => {
            rank1_only(cli, "dims")?;
            let gens = split_top_level(gen)
                .into_iter()
                .map(parse1)
                .collect::<intdiff::Result<Vec<_>>>()?;
            let dims = bimodule_filtration_dims(&gens, *max)?;
            let report = multiplicity_report(&dims);
            emit(
                cli,
                || {
                    let line = dims
                        .iter()
                        .map(|d| d.to_string())
                        .collect::<Vec<_>>()
                        .join(" ");
                    let summary = match &report {
                        Some(r) => format!(
                            "degree {} leading difference {} stable from {}",
                            r.degree,
                            r.leading_difference
                                .map_or("-".to_string(), |d| d.to_string()),
                            r.stable_from
                        ),
                        None => "growth not yet stable".to_string(),
                    };
                    format!("dims: {line}\n{summary}")
                },
                || json!({ "dims": dims, "report": report }),
            );
        }
        Command::Verify { suite, samples } => {
            let config = VerifyConfig {
                seed: cli.seed,
                samples: *samples,
            };
            let results = verify::run(*suite, &config);
            emit(
                cli,
                || {
                    results
                        .iter()
                        .map(|r| {
                            let mark = if r.passed { "PASS" } else { "FAIL" };
                            format!("{mark} [{}] {}: {}", r.suite, r.name, r.detail)
                        })
                        .collect::<Vec<_>>()
                        .join("\n")
                },
                || json!(results),
            );
            if results.iter().any(|r| !r.passed) {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

/// Splits on commas outside parentheses, so `e(0,1),I` has two parts.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(s[start..].trim());
    parts
}
