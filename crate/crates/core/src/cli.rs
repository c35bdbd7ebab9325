//! Command-line front end. [`run`] takes explicit output streams so the
//! whole surface can be driven from tests.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::combinatorics::{
    binomial, c_product, factorial, odd_double_factorial, StirlingKind, StirlingTriangle,
};
use crate::error::{Error, Result};
use crate::exact::ExactInt;
use crate::identities::{
    build_eq3_rhs_poly, interpolate_stirling_diagonal, rows_required, run_suite_on, validate,
    IdentityId, IdentityReport, Sweep, Tables,
};
use crate::par::Execution;
use crate::ratpoly::{c_poly, falling_factorial_poly, RatPoly};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "stirling-odf", version, about = "Exact Stirling numbers and odd double factorial identities")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Plain)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Tsv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a single exact value.
    Compute {
        function: Function,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
    },
    /// Print rows 0..=ROWS of a Stirling triangle.
    Table {
        kind: TableKind,
        #[arg(long, allow_hyphen_values = true)]
        rows: i64,
    },
    /// Print polynomial coefficients, constant term first.
    Poly {
        target: PolyTarget,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
    },
    /// Verify identities over parameter sweeps.
    Verify {
        /// Identity ids (e.g. eq4, eq3-chain, gould-13-32) or `all`.
        #[arg(required = true)]
        ids: Vec<String>,
        /// Upper bound for k-indexed sweeps.
        #[arg(long, default_value_t = 60)]
        k_max: usize,
        /// Upper bound for n-indexed sweeps.
        #[arg(long, default_value_t = 40)]
        n_max: usize,
        /// Evaluate parameter points on one thread.
        #[arg(long)]
        sequential: bool,
        /// Add 1 to one stored entry before verifying: `stirling1:N:K` or `stirling2:N:K`.
        #[arg(long, hide = true)]
        corrupt: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Factorial,
    OddDoubleFactorial,
    Binomial,
    Stirling1,
    Stirling2,
    CProduct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Stirling1,
    Stirling2,
}

impl From<TableKind> for StirlingKind {
    fn from(kind: TableKind) -> Self {
        match kind {
            TableKind::Stirling1 => StirlingKind::FirstSigned,
            TableKind::Stirling2 => StirlingKind::Second,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolyTarget {
    StirlingDiagonal,
    Eq3Rhs,
    CPoly,
    FallingFactorial,
}

/// Default sweep for an identity given the CLI bounds.
pub fn default_sweep(id: IdentityId, k_max: usize, n_max: usize) -> Sweep {
    match id {
        IdentityId::Eq1 | IdentityId::Eq2 | IdentityId::UnitSum => Sweep::Single(0..=n_max),
        IdentityId::Gould1332 => Sweep::Pairs { n: 1..=n_max.max(1), k: 0..=n_max.max(1) },
        IdentityId::Eq3Chain => Sweep::Pairs { n: 1..=n_max.max(1), k: 0..=k_max },
        _ => Sweep::Single(0..=k_max),
    }
}

pub fn parse_ids(ids: &[String]) -> Result<Vec<IdentityId>> {
    if ids.iter().any(|s| s.eq_ignore_ascii_case("all")) {
        return Ok(IdentityId::ALL.to_vec());
    }
    let mut out: Vec<IdentityId> = Vec::new();
    for s in ids {
        let id: IdentityId = s.parse()?;
        if !out.contains(&id) {
            out.push(id);
        }
    }
    Ok(out)
}

fn non_negative(name: &str, v: Option<i64>) -> Result<usize> {
    let v = v.ok_or_else(|| Error::Domain(format!("missing --{name}")))?;
    usize::try_from(v).map_err(|_| Error::Domain(format!("--{name} must be non-negative, got {v}")))
}

fn required(name: &str, v: Option<i64>) -> Result<i64> {
    v.ok_or_else(|| Error::Domain(format!("missing --{name}")))
}

fn reject(name: &str, v: Option<i64>, function: &str) -> Result<()> {
    match v {
        Some(_) => Err(Error::Domain(format!("{function} does not take --{name}"))),
        None => Ok(()),
    }
}

fn compute(function: Function, n: Option<i64>, k: Option<i64>) -> Result<ExactInt> {
    Ok(match function {
        Function::Factorial => {
            reject("k", k, "factorial")?;
            factorial(non_negative("n", n)? as u64)
        }
        Function::OddDoubleFactorial => {
            reject("n", n, "odd-double-factorial")?;
            odd_double_factorial(non_negative("k", k)? as u64)
        }
        Function::Binomial => binomial(non_negative("n", n)? as u64, required("k", k)?),
        Function::Stirling1 | Function::Stirling2 => {
            let (n, k) = (non_negative("n", n)?, non_negative("k", k)?);
            let kind = if function == Function::Stirling1 {
                StirlingKind::FirstSigned
            } else {
                StirlingKind::Second
            };
            StirlingTriangle::with_rows(kind, n).get(n, k)
        }
        Function::CProduct => c_product(required("n", n)?, non_negative("k", k)? as u64),
    })
}

fn poly(target: PolyTarget, k: Option<i64>, n: Option<i64>) -> Result<RatPoly> {
    match target {
        PolyTarget::FallingFactorial => {
            reject("k", k, "falling-factorial")?;
            Ok(falling_factorial_poly(non_negative("n", n)?))
        }
        _ => {
            reject("n", n, "this target")?;
            let k = non_negative("k", k)?;
            match target {
                PolyTarget::CPoly => Ok(c_poly(k)),
                PolyTarget::StirlingDiagonal => Ok(interpolate_stirling_diagonal(&Tables::with_rows(3 * k + 1, 0), k)),
                _ => build_eq3_rhs_poly(&Tables::with_rows(0, 2 * k), k),
            }
        }
    }
}

fn parse_corruption(spec: &str) -> Result<(StirlingKind, usize, usize)> {
    let bad = || Error::Parse(format!("corruption spec {spec:?}, expected stirling1:N:K or stirling2:N:K"));
    let mut parts = spec.split(':');
    let kind = match parts.next() {
        Some("stirling1") => StirlingKind::FirstSigned,
        Some("stirling2") => StirlingKind::Second,
        _ => return Err(bad()),
    };
    let n = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
    let k = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
    if parts.next().is_some() || k > n {
        return Err(bad());
    }
    Ok((kind, n, k))
}

fn write_list<W: Write>(out: &mut W, format: OutputFormat, items: &[String]) -> std::io::Result<()> {
    match format {
        OutputFormat::Plain => writeln!(out, "{}", items.join(" ")),
        OutputFormat::Tsv => writeln!(out, "{}", items.join("\t")),
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(items).expect("strings serialize")),
    }
}

fn write_reports<W: Write>(out: &mut W, format: OutputFormat, reports: &[IdentityReport]) -> std::io::Result<()> {
    match format {
        OutputFormat::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(reports).expect("reports serialize"))
        }
        OutputFormat::Tsv => {
            writeln!(out, "id\tstatus\tchecked\trange\tcounterexamples")?;
            for r in reports {
                let status = if r.passed() { "pass" } else { "fail" };
                writeln!(out, "{}\t{status}\t{}\t{}\t{}", r.id, r.checked, r.range, r.counterexamples.len())?;
            }
            for r in reports {
                for c in &r.counterexamples {
                    let params: Vec<_> = c.params.iter().map(|(p, v)| format!("{p}={v}")).collect();
                    writeln!(out, "{}\tcounterexample\t{}\t{}\t{}", r.id, params.join(","), c.lhs, c.rhs)?;
                }
            }
            Ok(())
        }
        OutputFormat::Plain => {
            for r in reports {
                let status = if r.passed() { "pass" } else { "FAIL" };
                writeln!(out, "{} {status} checked={} range={}", r.id, r.checked, r.range)?;
                for c in &r.counterexamples {
                    let params: Vec<_> = c.params.iter().map(|(p, v)| format!("{p}={v}")).collect();
                    writeln!(out, "  {} lhs={} rhs={}", params.join(" "), c.lhs, c.rhs)?;
                }
            }
            Ok(())
        }
    }
}

enum Failure {
    Usage(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn execute<W: Write>(cli: Cli, out: &mut W) -> Result<i32, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Compute { function, n, k } => {
            let value = compute(function, n, k)?;
            match format {
                OutputFormat::Json => writeln!(out, "{}", serde_json::Value::String(value.to_string()))?,
                _ => writeln!(out, "{value}")?,
            }
        }
        Command::Table { kind, rows } => {
            let rows = non_negative("rows", Some(rows))?;
            let t = StirlingTriangle::with_rows(kind.into(), rows);
            let table: Vec<Vec<String>> =
                t.rows().take(rows + 1).map(|r| r.iter().map(ToString::to_string).collect()).collect();
            match format {
                OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(&table).expect("strings serialize"))?,
                _ => {
                    for row in &table {
                        write_list(out, format, row)?;
                    }
                }
            }
        }
        Command::Poly { target, k, n } => {
            let p = poly(target, k, n)?;
            let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
            write_list(out, format, &coeffs)?;
        }
        Command::Verify { ids, k_max, n_max, sequential, corrupt } => {
            let ids = parse_ids(&ids)?;
            let requests: Vec<(IdentityId, Sweep)> =
                ids.iter().map(|&id| (id, default_sweep(id, k_max, n_max))).collect();
            validate(&requests)?;
            let corruption = corrupt.as_deref().map(parse_corruption).transpose()?;
            let (first, second) = rows_required(&requests);
            let mut tables = Tables::with_rows(first, second);
            if let Some((kind, n, k)) = corruption {
                let tri = tables.triangle_mut(kind);
                tri.ensure_rows(n);
                let bumped = tri.get(n, k) + 1;
                tri.set_entry(n, k, bumped)?;
            }
            let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
            let reports = run_suite_on(&requests, &mut tables, exec)?;
            write_reports(out, format, &reports)?;
            if !reports.iter().all(IdentityReport::passed) {
                return Ok(EXIT_VIOLATION);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name), writes data to `out` and
/// diagnostics to `err`, and returns the process exit code.
pub fn run<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
