//! Command-line front end. [`run`] is the whole program minus process I/O,
//! so tests can drive it directly.
//!
//! Exit codes: 0 ok, 1 a checked property failed, 2 usage or invalid input,
//! 3 certified not in LP+, 4 degenerate pivot, 5 bad bracket.

mod args;

use std::fmt::Write as _;

use clap::Parser;
use serde::Serialize;

pub use args::{Cli, Command, Format, IdentityCmd, ScanArgs, SymbolicArgs, ThresholdArgs};

use crate::error::Error;
use crate::hyper::{identity_bailey_check, identity_driver_check, laguerre_check};
use crate::rat::Rat;
use crate::scan::{grid_scan, threshold_bisect, to_csv};
use crate::sfrac::{lp_plus_report, Verdict};
use crate::symbolic::{conjecture6a_sample, conjecture6b_check, LeadStatus};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_LP: i32 = 3;
pub const EXIT_DEGENERATE: i32 = 4;
pub const EXIT_BAD_BRACKET: i32 = 5;

const DEFAULT_DEPTH: usize = 12;

/// Result of one invocation: exit code and the two output streams.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(code: i32, msg: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Exit code for a verdict.
pub fn verdict_exit_code(v: &Verdict) -> i32 {
    match v {
        Verdict::StieltjesUpTo(_) => EXIT_OK,
        Verdict::FirstNegativeAlpha { .. } => EXIT_NOT_LP,
        Verdict::Degenerate(_) => EXIT_DEGENERATE,
    }
}

fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::BadBracket { .. } => EXIT_BAD_BRACKET,
        Error::DegeneratePivot(_) => EXIT_DEGENERATE,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let threads = cli
        .threads
        .map(|t| t as usize)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(p) => p,
        Err(e) => return Outcome::error(EXIT_USAGE, e),
    };
    pool.install(|| dispatch(&cli))
}

fn dispatch(cli: &Cli) -> Outcome {
    let mut out = Outcome::default();
    let result = match &cli.command {
        Command::Check { params } => cmd_check(cli, params, &mut out),
        Command::Scan(a) => cmd_scan(cli, a, &mut out),
        Command::Threshold(a) => cmd_threshold(cli, a, &mut out),
        Command::Symbolic(a) => cmd_symbolic(cli, a, &mut out),
        Command::Identity { which } => cmd_identity(cli, which, &mut out),
        Command::Laguerre { b, m } => cmd_laguerre(cli, b, *m, &mut out),
    };
    match result {
        Ok(code) => {
            out.code = code;
            out
        }
        Err(e) => {
            let mut o = Outcome::error(error_exit_code(&e), &e);
            o.stderr.insert_str(0, &out.stderr);
            o
        }
    }
}

type CmdResult = Result<i32, Error>;

fn json_line<T: Serialize>(out: &mut Outcome, value: &T) {
    out.stdout
        .push_str(&serde_json::to_string(value).expect("serializable report"));
    out.stdout.push('\n');
}

fn unsupported(cli: &Cli, cmd: &str) -> Error {
    Error::InvalidArgument(
        format!("--format {:?} is not available for {cmd}", cli.format).to_lowercase(),
    )
}

fn cmd_check(cli: &Cli, params: &crate::hyper::HyperParams, out: &mut Outcome) -> CmdResult {
    let depth = cli.depth.map_or(DEFAULT_DEPTH, |d| d as usize);
    let report = lp_plus_report(params, depth)?;
    match cli.format {
        Format::Json => json_line(out, &report),
        Format::Text => {
            let line = match &report.verdict {
                Verdict::StieltjesUpTo(d) => {
                    format!("{params}: alpha_1..alpha_{d} all positive (consistent with LP+)")
                }
                Verdict::FirstNegativeAlpha { k, alpha } => {
                    format!("{params}: alpha_{k} = {alpha} < 0, not in LP+")
                }
                Verdict::Degenerate(k) => {
                    format!("{params}: alpha_{k} = 0, sign test inconclusive")
                }
            };
            writeln!(out.stdout, "{line}").unwrap();
        }
        Format::Csv => return Err(unsupported(cli, "check")),
    }
    Ok(verdict_exit_code(&report.verdict))
}

/// `b2` beyond which `n >= 7` expansions get expensive.
const COSTLY_B2: i64 = 10_000;

fn cmd_scan(cli: &Cli, a: &ScanArgs, out: &mut Outcome) -> CmdResult {
    if a.n_max == 0 {
        return Err(Error::InvalidArgument("--n-max must be at least 1".into()));
    }
    let depth = cli.depth.map_or(a.n_max, |d| d as usize);
    let costly = Rat::from_int(COSTLY_B2);
    if depth.max(a.n_max) >= 7 && a.b2s.0.iter().any(|b| *b >= costly) {
        writeln!(
            out.stderr,
            "warning: depth {} at b2 >= {COSTLY_B2} involves very large rationals; this may take minutes",
            depth.max(a.n_max)
        )
        .unwrap();
    }
    let points = grid_scan(&a.b1, &a.gammas.0, &a.b2s.0, a.n_max, depth);
    match cli.format {
        Format::Csv => out.stdout.push_str(&to_csv(&points)),
        Format::Json => json_line(out, &points),
        Format::Text => {
            for p in &points {
                let s = match &p.verdict {
                    Verdict::StieltjesUpTo(d) => format!("positive through {d}"),
                    Verdict::FirstNegativeAlpha { k, alpha } => format!("alpha_{k} = {alpha}"),
                    Verdict::Degenerate(k) => format!("degenerate at {k}"),
                };
                writeln!(out.stdout, "gamma={} b2={}: {s}", p.gamma, p.b2).unwrap();
            }
        }
    }
    Ok(EXIT_OK)
}

fn default_bracket(n: usize) -> Option<(Rat, Rat)> {
    match n {
        3 => Some((Rat::from_int(1), Rat::from_int(100))),
        5 => Some((Rat::from_int(100), Rat::from_int(1000))),
        _ => None,
    }
}

fn cmd_threshold(cli: &Cli, a: &ThresholdArgs, out: &mut Outcome) -> CmdResult {
    let defaults = default_bracket(a.n);
    let pick = |given: &Option<Rat>, dflt: Option<Rat>, flag: &str| {
        given
            .clone()
            .or(dflt)
            .ok_or_else(|| Error::InvalidArgument(format!("--{flag} is required for n = {}", a.n)))
    };
    let lo = pick(&a.lo, defaults.as_ref().map(|d| d.0.clone()), "lo")?;
    let hi = pick(&a.hi, defaults.map(|d| d.1), "hi")?;
    let t = threshold_bisect(&a.b1, &a.gamma, a.n, &lo, &hi, &a.prec)?;
    match cli.format {
        Format::Json => json_line(out, &t),
        Format::Text => writeln!(
            out.stdout,
            "alpha_{} changes sign in b2 in [{}, {}] (~{} .. {})",
            t.n,
            t.bracket_lo,
            t.bracket_hi,
            t.bracket_lo.to_decimal(6),
            t.bracket_hi.to_decimal(6)
        )
        .unwrap(),
        Format::Csv => return Err(unsupported(cli, "threshold")),
    }
    Ok(EXIT_OK)
}

fn cmd_symbolic(cli: &Cli, a: &SymbolicArgs, out: &mut Outcome) -> CmdResult {
    if let Some(samples) = a.samples {
        let rep = conjecture6a_sample(a.n, samples, cli.seed)?;
        match cli.format {
            Format::Json => json_line(out, &rep),
            Format::Text => writeln!(
                out.stdout,
                "n={} samples={} seed={} redrawn={} violations={}",
                rep.n,
                rep.samples,
                rep.seed,
                rep.redrawn,
                rep.violations.len()
            )
            .unwrap(),
            Format::Csv => return Err(unsupported(cli, "symbolic")),
        }
        return Ok(if rep.violations.is_empty() {
            EXIT_OK
        } else {
            EXIT_FAILED
        });
    }
    let (gamma, b1) = match (&a.gamma, &a.b1) {
        (Some(g), Some(b)) => (g, b),
        _ => {
            return Err(Error::InvalidArgument(
                "--gamma and --b1 are required".into(),
            ))
        }
    };
    let row = conjecture6b_check(a.n, gamma, b1)?;
    match cli.format {
        Format::Json => json_line(out, &row),
        Format::Text => {
            let deg = row
                .degree_actual
                .map_or("-inf".to_string(), |d| d.to_string());
            writeln!(
                out.stdout,
                "n={} gamma={} b1={}: {:?}, degree {deg} (expected {}), lead {} (expected {})",
                row.n,
                row.gamma,
                row.b1,
                row.status,
                row.degree_expected,
                row.lead_actual,
                row.lead_expected
            )
            .unwrap();
        }
        Format::Csv => return Err(unsupported(cli, "symbolic")),
    }
    Ok(if row.status == LeadStatus::Mismatch {
        EXIT_FAILED
    } else {
        EXIT_OK
    })
}

#[derive(Serialize)]
struct IdentityReport<'a> {
    identity: &'a str,
    order: usize,
    holds: bool,
}

fn cmd_identity(cli: &Cli, which: &IdentityCmd, out: &mut Outcome) -> CmdResult {
    let (name, order, holds) = match which {
        IdentityCmd::Driver { a, order } => ("driver", *order, identity_driver_check(a, *order)?),
        IdentityCmd::Bailey { a, b, order } => {
            ("bailey", *order, identity_bailey_check(a, b, *order)?)
        }
    };
    match cli.format {
        Format::Json => json_line(
            out,
            &IdentityReport {
                identity: name,
                order,
                holds,
            },
        ),
        Format::Text => {
            writeln!(out.stdout, "{name} identity through order {order}: {holds}").unwrap()
        }
        Format::Csv => return Err(unsupported(cli, "identity")),
    }
    Ok(if holds { EXIT_OK } else { EXIT_FAILED })
}

fn cmd_laguerre(cli: &Cli, b: &Rat, m: usize, out: &mut Outcome) -> CmdResult {
    let rep = laguerre_check(b, m)?;
    match cli.format {
        Format::Json => json_line(out, &rep),
        Format::Text => writeln!(
            out.stdout,
            "p(x) = {}; degree {}; {} distinct roots of p(-x) in (0, inf)",
            rep.polynomial, rep.degree, rep.positive_roots_of_reflection
        )
        .unwrap(),
        Format::Csv => return Err(unsupported(cli, "laguerre")),
    }
    Ok(if rep.ok { EXIT_OK } else { EXIT_FAILED })
}
