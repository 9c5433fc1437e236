use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use qalg::algebra::{singular_chain, ChainReport};
use qalg::models::{Disks, Functions, Intervals, MatrixSets, Reals, Unions};
use qalg::morphisms::parse_hom;
use qalg::spectrum::{qsp, RegularScope};
use qalg::{Elem, Magnitude, QaError, Rational, Scalar, Tag};
use qalg_conformance::{run_suite, Instance, SuiteConfig, INSTANCES};
use serde_json::{json, Value};
use thiserror::Error;

use crate::enclose::enclose;
use crate::expr::{evaluate, lift, ExprError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Qa(#[from] QaError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

/// What a successful run decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A conformance property failed.
    Failed,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failed => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "qalg", version, about = "Exact quasi-algebra calculator and conformance runner")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    All,
    ZeroOnly,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression to canonical form.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Norm of an expression's value.
    Norm {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Hausdorff distance between two values.
    Dist {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        json: bool,
    },
    /// Quasi-spectrum.
    Qsp {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Regular elements admitted below the argument.
        #[arg(long, value_enum, default_value_t = Scope::All)]
        scope: Scope,
        #[arg(long)]
        json: bool,
    },
    /// Strictly increasing chain `x < x1 < x2 < ...`.
    Chain {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(short = 'n', default_value_t = 10)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Apply a named map, e.g. `half`, `abs:2`, `chargeo:2,2,6`.
    Hom {
        name: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the conformance suite.
    Conform {
        /// Instances to run (repeatable or comma-separated); all by default.
        #[arg(long, value_delimiter = ',')]
        instance: Vec<String>,
        #[arg(long, default_value_t = 10_000)]
        cases: usize,
        #[arg(long, env = "QALG_SEED", default_value_t = 0)]
        seed: u64,
        /// Restrict to these property ids.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Write the report here.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Range enclosure of a polynomial over an interval.
    Enclose {
        /// `c0,c1,...` for `c0 + c1 t + ...`
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_scalar, required = true)]
        coeffs: Vec<Rational>,
        #[arg(long, allow_hyphen_values = true)]
        domain: String,
        #[arg(long, default_value_t = 0)]
        depth: u32,
        #[arg(long)]
        json: bool,
    },
}

fn parse_scalar(text: &str) -> Result<Rational, String> {
    Rational::parse_literal(text).ok_or_else(|| format!("not a rational literal: '{text}'"))
}

fn norm_json(m: &Magnitude<Rational>) -> Value {
    json!({
        "value": m.to_string(),
        "exact": m.exact().map(|v| v.to_json_string()),
        "square": m.square().to_json_string(),
    })
}

fn emit(out: &mut impl Write, json: bool, value: Value, text: impl FnOnce() -> String) -> Result<(), CliError> {
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
    } else {
        writeln!(out, "{}", text())?;
    }
    Ok(())
}

fn chain_in<M: Instance<Scalar = Rational>>(
    m: &M,
    x: &Elem<Rational>,
    n: usize,
) -> Result<ChainReport<Elem<Rational>>, QaError> {
    let start = m.from_elem(x).ok_or(QaError::TagMismatch { left: m.tag(), right: x.tag() })?;
    let r = singular_chain(m, &start, n)?;
    Ok(ChainReport { start: x.clone(), links: r.links.iter().map(|l| m.to_elem(l)).collect(), strict: r.strict })
}

/// Chain above an element of any shipped model.
pub fn chain(x: &Elem<Rational>, n: usize) -> Result<ChainReport<Elem<Rational>>, QaError> {
    match x {
        Elem::Real(_) => chain_in(&Reals::new(), x, n),
        Elem::Interval(_) => chain_in(&Intervals::new(), x, n),
        Elem::Union(_) => chain_in(&Unions::new(), x, n),
        Elem::Disk(_) => chain_in(&Disks::new(), x, n),
        Elem::MatrixSet(_) => chain_in(&MatrixSets::new(), x, n),
        Elem::Func(f) => {
            let size = f.len();
            match f.values[0].tag() {
                Tag::Real => chain_in(&Functions::new(Reals::new(), size), x, n),
                Tag::Interval => chain_in(&Functions::new(Intervals::new(), size), x, n),
                Tag::Union => chain_in(&Functions::new(Unions::new(), size), x, n),
                Tag::Disk => chain_in(&Functions::new(Disks::new(), size), x, n),
                Tag::MatrixSet => chain_in(&Functions::new(MatrixSets::new(), size), x, n),
                Tag::Func => Err(QaError::Unsupported(Tag::Func)),
            }
        }
    }
}

/// Executes one command, writing results to `out`.
pub fn run(cli: Cli, out: &mut impl Write) -> Result<Status, CliError> {
    match cli.command {
        Command::Eval { expr, json } => {
            let x = evaluate(&expr)?;
            emit(out, json, json!({ "expr": expr, "result": x.to_json(), "text": x.to_string() }), || x.to_string())?;
        }
        Command::Norm { expr, json } => {
            let n = evaluate(&expr)?.norm();
            emit(out, json, json!({ "expr": expr, "norm": norm_json(&n) }), || n.to_string())?;
        }
        Command::Dist { a, b, json } => {
            let (x, y) = lift(evaluate(&a)?, evaluate(&b)?);
            let h = x.hausdorff(&y)?;
            emit(out, json, json!({ "a": a, "b": b, "distance": norm_json(&h) }), || h.to_string())?;
        }
        Command::Qsp { expr, scope, json } => {
            let scope = match scope {
                Scope::All => RegularScope::All,
                Scope::ZeroOnly => RegularScope::ZeroOnly,
            };
            let sp = qsp(&evaluate(&expr)?, scope);
            emit(out, json, json!({ "expr": expr, "qsp": sp.to_json(), "text": sp.to_string() }), || sp.to_string())?;
        }
        Command::Chain { expr, n, json } => {
            let r = chain(&evaluate(&expr)?, n)?;
            let value = json!({
                "start": r.start.to_json(),
                "links": r.links.iter().map(Elem::to_json).collect::<Vec<_>>(),
                "strict": r.strict,
            });
            emit(out, json, value, || {
                let mut lines: Vec<String> =
                    r.links.iter().enumerate().map(|(i, l)| format!("x{} = {l}", i + 1)).collect();
                lines.push(format!("strictly increasing: {}", r.is_strict()));
                lines.join("\n")
            })?;
        }
        Command::Hom { name, expr, json } => {
            let h = parse_hom::<Rational>(&name)?;
            let x = evaluate(&expr)?;
            let y = h.apply(&x)?;
            let value = json!({ "map": h.name, "input": x.to_json(), "output": y.to_json(), "text": y.to_string() });
            emit(out, json, value, || y.to_string())?;
        }
        Command::Conform { instance, cases, seed, only, json } => {
            let instances =
                if instance.is_empty() { INSTANCES.iter().map(|s| s.to_string()).collect() } else { instance };
            let cfg = SuiteConfig { instances, cases, seed, only, ..SuiteConfig::default() };
            let reports = run_suite(&cfg)?;
            for r in &reports {
                let failures: Vec<_> = r.failures().collect();
                writeln!(
                    out,
                    "{}: {}/{} properties pass (seed {seed}, {cases} cases)",
                    r.instance,
                    r.properties.len() - failures.len(),
                    r.properties.len()
                )?;
                for p in failures {
                    writeln!(out, "  FAIL {} [{}]", p.id, p.anchor)?;
                    if let Some(c) = &p.counterexample {
                        writeln!(out, "    counterexample: {c}")?;
                    }
                }
            }
            if let Some(path) = json {
                let value = match reports.as_slice() {
                    [one] => one.to_json(),
                    many => Value::Array(many.iter().map(|r| r.to_json()).collect()),
                };
                std::fs::write(path, serde_json::to_string_pretty(&value)?)?;
            }
            if reports.iter().any(|r| !r.pass()) {
                return Ok(Status::Failed);
            }
        }
        Command::Enclose { coeffs, domain, depth, json } => {
            let domain = match evaluate(&domain)? {
                Elem::Interval(i) => i,
                other => return Err(QaError::TagMismatch { left: Tag::Interval, right: other.tag() }.into()),
            };
            let e = enclose(&coeffs, &domain, depth)?;
            emit(out, json, e.to_json(), || {
                format!("enclosure {}\nsampled   {}\nexcess    {}", e.enclosure, e.sampled, e.excess)
            })?;
        }
    }
    Ok(Status::Ok)
}
