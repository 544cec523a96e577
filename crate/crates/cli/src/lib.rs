//! Command-line front end: parse expressions, normalize, evaluate traces, run suites.

pub mod expr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hecke_core::coeffring::{Bindings, CoeffError, Polynomial, VarTable};
use hecke_core::heckealg::{AlgebraError, Element, HeckeAlgebra};
use hecke_core::markov::{Evaluator, TraceError, TraceKind, TraceParams};
use hecke_core::verify::{run_suite, SuiteError, SuiteOptions, DEFAULT_SAMPLES, DEFAULT_SEED};
use serde_json::json;
use std::io::Write;
use thiserror::Error;

pub use expr::{parse_expr, ParseError, WordSum};

/// Exit status for a run with no violations.
pub const EXIT_OK: i32 = 0;
/// Exit status when a verification suite reports violations.
pub const EXIT_VIOLATIONS: i32 = 1;
/// Exit status for usage, parse and evaluation errors.
pub const EXIT_USAGE: i32 = 2;

/// Environment variable that takes precedence over `--seed`.
pub const SEED_ENV: &str = "HECKE_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "hecke",
    version,
    about = "Normal forms and Markov traces for degenerate cyclotomic Hecke algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the standard-basis normal form of an expression.
    Normalize {
        #[command(flatten)]
        ambient: Ambient,
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Evaluate a trace on an expression.
    Trace {
        #[command(flatten)]
        ambient: Ambient,
        #[arg(long)]
        expr: String,
        #[command(flatten)]
        trace: TraceArgs,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Evaluate a trace on every standard basis monomial.
    Table {
        #[command(flatten)]
        ambient: Ambient,
        #[command(flatten)]
        trace: TraceArgs,
        #[arg(long, value_enum, default_value_t = Output::Csv)]
        output: Output,
    },
    /// Run a verification suite and print its report.
    Verify {
        #[command(flatten)]
        ambient: Ambient,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Output::Json)]
        output: Output,
    },
}

#[derive(Debug, Args)]
pub struct Ambient {
    /// Degree of the cyclotomic relation on t.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub m: u32,
    /// Number of strands.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    /// normalized, raw, canonical0, bk01 or bk.
    #[arg(long, default_value = "normalized")]
    pub kind: String,
    /// Comma-separated rational values, e.g. `z=0,y1=1,u2=-1/2`.
    #[arg(long)]
    pub bind: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("invalid bindings: {0}")]
    Bindings(CoeffError),
    #[error("invalid {SEED_ENV}: `{0}`")]
    Seed(String),
    #[error(transparent)]
    Trace(#[from] TraceError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Suite(#[from] SuiteError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Ambient {
    fn dims(&self) -> (usize, usize) {
        (self.m as usize, self.n as usize)
    }
}

fn bindings(text: Option<&str>, m: usize) -> Result<Bindings, CliError> {
    match text {
        None => Ok(Bindings::new()),
        Some(t) => Bindings::parse(t, VarTable::new(m)).map_err(CliError::Bindings),
    }
}

/// Evaluates one trace kind with bindings applied to the parameters and the result.
struct TraceJob<'a> {
    evaluator: Evaluator<'a>,
    bindings: Bindings,
}

impl<'a> TraceJob<'a> {
    fn new(alg: &'a HeckeAlgebra, args: &TraceArgs) -> Result<Self, CliError> {
        let m = alg.m();
        let kind: TraceKind = args.kind.parse()?;
        let bindings = bindings(args.bind.as_deref(), m)?;
        let params = TraceParams::symbolic(m).specialize(&bindings)?;
        Ok(TraceJob {
            evaluator: Evaluator::new(alg, kind, &params),
            bindings,
        })
    }

    fn eval(&self, x: &Element) -> Result<Polynomial, CliError> {
        Ok(self.evaluator.eval(x)?.substitute(&self.bindings)?)
    }
}

fn one_line(mono: &hecke_core::heckealg::Monomial) -> String {
    let n = mono.n();
    (1..=n)
        .map(|i| mono.perm.apply(i).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Run a parsed command, writing its output to `out`; returns the process exit status.
pub fn run(cli: &Cli, seed_override: Option<&str>, out: &mut impl Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Normalize {
            ambient,
            expr,
            output,
        } => {
            let (m, n) = ambient.dims();
            let alg = HeckeAlgebra::new(m);
            let x = parse_expr(expr, m, n)?.normalize(&alg)?;
            match output {
                Output::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&x.to_json()).expect("json")
                )?,
                Output::Csv => {
                    let cols = (1..=n)
                        .map(|i| format!("a{i}"))
                        .collect::<Vec<_>>()
                        .join(",");
                    writeln!(out, "{cols},perm,coeff")?;
                    for (mono, c) in x.terms() {
                        let exps = mono
                            .exp
                            .iter()
                            .map(|a| a.to_string())
                            .collect::<Vec<_>>()
                            .join(",");
                        writeln!(out, "{exps},{},{c}", one_line(mono))?;
                    }
                }
                Output::Text => writeln!(out, "{x}")?,
            }
        }
        Command::Trace {
            ambient,
            expr,
            trace,
            output,
        } => {
            let (m, n) = ambient.dims();
            let alg = HeckeAlgebra::new(m);
            let x = parse_expr(expr, m, n)?.normalize(&alg)?;
            let value = TraceJob::new(&alg, trace)?.eval(&x)?;
            match output {
                Output::Json => {
                    let doc = json!({ "kind": trace.kind, "m": m, "n": n, "expr": expr, "value": value.to_string() });
                    writeln!(out, "{doc}")?
                }
                Output::Csv => writeln!(out, "value\n{value}")?,
                Output::Text => writeln!(out, "{value}")?,
            }
        }
        Command::Table {
            ambient,
            trace,
            output,
        } => {
            let (m, n) = ambient.dims();
            let alg = HeckeAlgebra::new(m);
            let job = TraceJob::new(&alg, trace)?;
            let mut rows = Vec::new();
            for mono in alg.basis(n) {
                let value = job.eval(&Element::monomial(m, mono.clone()))?;
                rows.push((mono, value));
            }
            match output {
                Output::Json => {
                    let doc: Vec<_> = rows
                        .iter()
                        .map(|(mono, v)| json!({ "exp": mono.exp.to_vec(), "perm": one_line(mono), "monomial": mono.render("J"), "value": v.to_string() }))
                        .collect();
                    writeln!(out, "{}", serde_json::Value::Array(doc))?
                }
                Output::Csv => {
                    let cols = (1..=n)
                        .map(|i| format!("a{i}"))
                        .collect::<Vec<_>>()
                        .join(",");
                    writeln!(out, "{cols},perm,value")?;
                    for (mono, v) in &rows {
                        let exps = mono
                            .exp
                            .iter()
                            .map(|a| a.to_string())
                            .collect::<Vec<_>>()
                            .join(",");
                        writeln!(out, "{exps},{},{v}", one_line(mono))?;
                    }
                }
                Output::Text => {
                    for (mono, v) in &rows {
                        writeln!(out, "{}\t{v}", mono.render("J"))?;
                    }
                }
            }
        }
        Command::Verify {
            ambient,
            suite,
            seed,
            samples,
            output,
        } => {
            let (m, n) = ambient.dims();
            let seed = match seed_override {
                Some(s) => s
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Seed(s.to_string()))?,
                None => *seed,
            };
            let opts = SuiteOptions {
                seed,
                samples: *samples,
            };
            let report = run_suite(suite, m, n, &opts)?;
            match output {
                Output::Json => writeln!(out, "{}", report.to_json())?,
                Output::Csv => {
                    writeln!(out, "description,inputs,lhs,rhs")?;
                    for v in &report.violations {
                        let cells = [&v.description, &v.inputs.to_string(), &v.lhs, &v.rhs]
                            .map(|c| csv_cell(c));
                        writeln!(out, "{}", cells.join(","))?;
                    }
                }
                Output::Text => {
                    let status = if report.pass { "pass" } else { "FAIL" };
                    writeln!(
                        out,
                        "{} m={} n={} seed={}: {status}, {} checks, {} violations",
                        report.suite,
                        report.m,
                        report.n,
                        report.seed,
                        report.checks,
                        report.violations.len()
                    )?;
                    for v in &report.violations {
                        writeln!(
                            out,
                            "  {}: {} | {} != {}",
                            v.description, v.inputs, v.lhs, v.rhs
                        )?;
                    }
                }
            }
            return Ok(if report.pass {
                EXIT_OK
            } else {
                EXIT_VIOLATIONS
            });
        }
    }
    Ok(EXIT_OK)
}

fn csv_cell(text: &str) -> String {
    if text.contains([',', '"', '\n']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}
