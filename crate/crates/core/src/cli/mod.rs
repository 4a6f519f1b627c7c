//! The `dunkl` command-line front end.
//!
//! Exit codes: 0 success, 1 a verification suite failed, 2 bad input,
//! 3 internal failure, 4 pole at the requested specialization.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::groups::GroupKind;
use crate::invariants::{canonical_invariant, ebar, elementary_invariant, limit_at};
use crate::polyring::poly_to_json;
use crate::scalars::{Rational, Ring, Scalar};

mod render;
#[macro_use]
mod setup;
pub mod suites;

pub use render::{expansion_latex, expansion_plain};
pub use setup::{Params, Setup};
pub use suites::{run_suite, Report, SuiteConfig, SUITES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;
pub const EXIT_POLE: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Plain,
    Latex,
}

#[derive(Debug, Parser)]
#[command(name = "dunkl", version, about = "Dunkl operators and canonical invariants, computed exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonical invariant b_a.
    Canonical {
        /// `Sn:n`, `Sn0:n` (sum-zero model) or `I2:m`.
        #[arg(long)]
        group: String,
        /// Exponent vector, comma separated.
        #[arg(long)]
        a: String,
        /// `symbolic`, `equal`, or comma-separated rationals (one per class, or one for all).
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        params: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run verification suites.
    Verify {
        /// Suite names; repeat the flag or separate with commas.
        #[arg(long = "suite", required = true, value_delimiter = ',')]
        suites: Vec<String>,
        #[arg(long)]
        group: String,
        #[arg(long)]
        max_degree: Option<u32>,
        /// Truncation order for series-based suites.
        #[arg(long)]
        order: Option<u32>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Number of random samples for sampling suites.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        params: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The elementary canonical invariant of a degree, specialized at a parameter value.
    Limit {
        #[arg(long)]
        group: String,
        #[arg(long)]
        degree: u32,
        /// Rational value for the parameters, comma separated for several classes.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Pole { .. } => EXIT_POLE,
        Error::Parse(_) | Error::InvalidArgument(_) | Error::ArityMismatch { .. } => EXIT_USAGE,
        _ => EXIT_INTERNAL,
    }
}

fn error_outcome(e: Error) -> Outcome {
    let code = exit_code(&e);
    let body = match &e {
        Error::Pole { denominator } => json!({"error": "pole", "denominator": denominator}),
        other => json!({"error": kind_name(other), "message": other.to_string()}),
    };
    let text = format!("{body}\n");
    if code == EXIT_POLE {
        Outcome { code, stdout: text, stderr: String::new() }
    } else {
        Outcome { code, stdout: String::new(), stderr: text }
    }
}

fn kind_name(e: &Error) -> &'static str {
    match e {
        Error::Parse(_) => "parse",
        Error::InvalidArgument(_) => "invalid-argument",
        Error::ArityMismatch { .. } => "arity-mismatch",
        Error::Pole { .. } => "pole",
        _ => "internal",
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(e) => error_outcome(e),
    }
}

fn dispatch(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Canonical { group, a, params, format } => cmd_canonical(&group, &a, &params, format).map(Outcome::ok),
        Command::Verify { suites, group, max_degree, order, seed, samples, params, format } => {
            let cfg = SuiteConfig {
                group: group.parse()?,
                params: params.parse()?,
                max_degree,
                order,
                seed,
                samples,
            };
            let (reports, text) = cmd_verify(&suites, &cfg, format)?;
            let code = if reports.iter().all(Report::passed) { EXIT_OK } else { EXIT_FAILED };
            Ok(Outcome { code, stdout: text, stderr: String::new() })
        }
        Command::Limit { group, degree, at, format } => cmd_limit(&group, degree, &at, format).map(Outcome::ok),
    }
}

fn parse_exponents(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent `{t}`"))))
        .collect()
}

fn parse_rationals(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(|t| t.trim().parse::<Rational>()).collect()
}

/// Renders `b_a` in the requested format.
pub fn cmd_canonical(group: &str, a: &str, params: &str, format: Format) -> Result<String> {
    let kind: GroupKind = group.parse()?;
    let a = parse_exponents(a)?;
    let setup = Setup::new(kind, &params.parse()?)?;
    let zeta = setup.zeta_order();
    with_setup!(setup, ctx, gens, {
        let b = canonical_invariant(&a, gens, ctx)?;
        let names = ctx.param_names().to_vec();
        Ok(match format {
            Format::Json => {
                let expansion: Vec<_> = b
                    .expansion
                    .iter()
                    .rev()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(e, c)| json!({"exp": e, "monomial": gens.monomial_name(e), "coef": c.fmt_params(&names)}))
                    .collect();
                let body = json!({
                    "group": kind.to_string(),
                    "index": b.index,
                    "params": names,
                    "generators": gens.names,
                    "expansion": expansion,
                    "poly": poly_to_json(&b.poly, &names, zeta),
                });
                format!("{}\n", serde_json::to_string_pretty(&body).expect("serializable"))
            }
            Format::Plain => format!("b[{}] = {}\n", gens.monomial_name(&b.index), expansion_plain(&b, gens, &names)),
            Format::Latex => format!("b_{{{}}} = {}\n", latex_index(&b.index), expansion_latex(&b, gens, &names)),
        })
    })
}

fn latex_index(a: &[u32]) -> String {
    format!("({})", a.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
}

/// Runs the suites in parallel; reports come back sorted by suite name.
pub fn cmd_verify(names: &[String], cfg: &SuiteConfig, format: Format) -> Result<(Vec<Report>, String)> {
    let mut names: Vec<String> = names.iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
    names.sort();
    names.dedup();
    if let Some(bad) = names.iter().find(|n| !SUITES.contains(&n.as_str())) {
        return Err(Error::InvalidArgument(format!("unknown suite {bad:?}; known: {}", SUITES.join(", "))));
    }
    let reports: Vec<Report> = names.par_iter().map(|n| run_suite(n, cfg)).collect::<Result<_>>()?;
    let mut text = String::new();
    for r in &reports {
        match format {
            Format::Json => {
                text.push_str(&serde_json::to_string(r).expect("serializable"));
                text.push('\n');
            }
            Format::Plain | Format::Latex => {
                let status = if r.passed() { "pass" } else { "FAIL" };
                text.push_str(&format!("{}: {status} ({} cases, {} failures)\n", r.suite, r.cases, r.failures.len()));
                for f in &r.failures {
                    text.push_str(&format!("  input: {}\n  expected: {}\n  got: {}\n", f.input, f.expected, f.got));
                }
                for v in &r.values {
                    text.push_str(&format!("  {} = {}\n", v.input, v.value));
                }
            }
        }
    }
    Ok((reports, text))
}

/// `e_degree^{(c)}` with every parameter set to the given values.
pub fn cmd_limit(group: &str, degree: u32, at: &str, format: Format) -> Result<String> {
    let kind: GroupKind = group.parse()?;
    let point = parse_rationals(at)?;
    let setup = Setup::new(kind, &Params::Symbolic)?;
    let zeta = setup.zeta_order();
    with_setup!(setup, ctx, gens, {
        let classes = ctx.mult.values.len();
        let point: Vec<Rational> = match point.len() {
            1 => vec![point[0].clone(); classes],
            k if k == classes => point,
            k => return Err(Error::ArityMismatch { expected: classes, found: k }),
        };
        let e = elementary_invariant(degree, gens, ctx)?;
        let lim = limit_at(&e, gens, &point)?;
        let matches_ebar = match kind {
            GroupKind::Symmetric(n) => Some(lim == ebar(degree as usize, n)),
            _ => None,
        };
        let vars = ctx.group.var_names();
        Ok(match format {
            Format::Json => {
                let mut body = json!({
                    "group": kind.to_string(),
                    "degree": degree,
                    "at": point.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
                    "index": e.index,
                    "poly": poly_to_json(&lim, &[], zeta),
                });
                if let Some(m) = matches_ebar {
                    body["equals_centred_elementary"] = json!(m);
                }
                format!("{}\n", serde_json::to_string_pretty(&body).expect("serializable"))
            }
            Format::Plain | Format::Latex => {
                let mut s = lim.fmt_vars(&vars, |c| c.fmt_params(&[]));
                if matches_ebar == Some(true) {
                    s.push_str(&format!("  (= centred e{degree})"));
                }
                format!("{s}\n")
            }
        })
    })
}
