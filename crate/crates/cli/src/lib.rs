//! Command implementations behind the `roman-petersen` binary.
//!
//! Machine output goes to the writer handed to [`run`]; diagnostics go to
//! standard error from `main`.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use roman_petersen::{
    ceil_8n_over_7, construct_rdf, gamma_formula, is_valid_rdf, lemma_audit, lower_bound_audit,
    normalize, render_dot, solve, solve_dp, Error, LemmaFlags, Method, PetersenGraph,
    RomanAssignment, WindowReport,
};

#[derive(Debug, Parser)]
#[command(name = "roman-petersen", version, about = "Roman domination on generalized Petersen graphs P(n, 2)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit the explicit RDF of weight ⌈8n/7⌉.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write to this file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compute the exact optimum.
    Solve {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SolveMethod::Dp)]
        method: SolveMethod,
    },
    /// Check an assignment file for validity and report its weight.
    Verify { file: PathBuf },
    /// CSV reproduction table of ⌈8n/7⌉ against the solver.
    Table {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// Largest n solved with the column sweep; larger rows leave dp_optimum empty.
        #[arg(long, default_value_t = 30)]
        dp_cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve, normalize and run the window audits.
    Audit {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = AuditFormat::Json)]
        format: AuditFormat,
    },
    /// DOT rendering: V_2 black, V_1 grey, V_0 white.
    Render {
        #[arg(long)]
        n: usize,
        /// Assignment file; defaults to the explicit construction.
        #[arg(long)]
        assignment: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveMethod {
    Dp,
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AuditFormat {
    Json,
    Csv,
}

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitKind {
    Success = 0,
    Usage = 2,
    Validation = 3,
    Budget = 4,
    Internal = 5,
}

#[derive(Debug)]
pub struct CliError {
    pub kind: ExitKind,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { kind: ExitKind::Usage, message: message.into() }
    }

    fn validation(message: impl Into<String>) -> Self {
        CliError { kind: ExitKind::Validation, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let kind = match e {
            Error::Domain(_) => ExitKind::Usage,
            Error::Budget(_) => ExitKind::Budget,
            Error::Internal(_) => ExitKind::Internal,
            Error::DimensionMismatch { .. }
            | Error::InvalidRdf(_)
            | Error::Schema { .. }
            | Error::Hypothesis(_) => ExitKind::Validation,
        };
        CliError { kind, message: e.to_string() }
    }
}

fn io_error(e: std::io::Error) -> CliError {
    CliError::usage(format!("i/o error: {e}"))
}

/// One line of the reproduction table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub formula: u64,
    pub dp_optimum: Option<u64>,
    pub gamma: u64,
    pub matches: bool,
}

impl TableRow {
    pub fn csv_line(&self) -> String {
        let dp = self.dp_optimum.map(|d| d.to_string()).unwrap_or_default();
        format!("{},{},{},{},{}", self.n, self.formula, dp, self.gamma, self.matches)
    }
}

pub const TABLE_HEADER: &str = "n,formula,dp_optimum,gamma,match";

pub fn table_rows(from: usize, to: usize, dp_cap: usize) -> Result<Vec<TableRow>, CliError> {
    if from < 5 || from > to {
        return Err(CliError::usage(format!(
            "table needs 5 <= from <= to, got from = {from}, to = {to}"
        )));
    }
    (from..=to)
        .map(|n| {
            let formula = ceil_8n_over_7(n as u64);
            let dp_optimum = if n <= dp_cap { Some(solve_dp(n)?.optimum) } else { None };
            Ok(TableRow {
                n,
                formula,
                dp_optimum,
                gamma: gamma_formula(n as u64),
                matches: dp_optimum == Some(formula),
            })
        })
        .collect()
}

fn read_assignment(path: &Path) -> Result<RomanAssignment, CliError> {
    let text = fs::read_to_string(path).map_err(io_error)?;
    Ok(RomanAssignment::from_json_str(&text)?)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct VerifyOutput {
    n: usize,
    valid: bool,
    weight: u64,
    violations: Vec<String>,
}

#[derive(Serialize)]
struct AuditOutput<'a> {
    n: usize,
    optimum: u64,
    passed: bool,
    lemma_audit: &'a WindowReport,
    lower_bound_audit: Option<&'a WindowReport>,
}

fn audit_csv(sections: &[(&str, &WindowReport)]) -> String {
    let mut out = String::from("section,window_index,window_start,r_doubled,class");
    for name in LemmaFlags::NAMES {
        out.push(',');
        out.push_str(name);
    }
    out.push('\n');
    for (section, report) in sections {
        for w in &report.windows {
            let class = w.class.map(|c| c.as_str()).unwrap_or("");
            write!(out, "{section},{},{},{},{class}", w.index, w.start, w.r_doubled.doubled()).unwrap();
            for outcome in w.lemmas.outcomes() {
                write!(out, ",{}", outcome.as_str()).unwrap();
            }
            out.push('\n');
        }
    }
    out
}

/// Runs one command, writing machine output to `out` and notices to `err`.
/// Returns the exit kind for outcomes that are reported rather than raised
/// (an invalid assignment in `verify`, a failed audit).
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<ExitKind, CliError> {
    match cli.command {
        Command::Construct { n, format, output } => {
            let f = construct_rdf(n)?;
            let text = match format {
                Format::Json => to_json(&f),
                Format::Dot => render_dot(&PetersenGraph::p2(n)?, &f)?,
            };
            match output {
                Some(path) => fs::write(path, text).map_err(io_error)?,
                None => out.write_all(text.as_bytes()).map_err(io_error)?,
            }
            Ok(ExitKind::Success)
        }
        Command::Solve { n, method } => {
            let method = match method {
                SolveMethod::Dp => Method::Dp,
                SolveMethod::Brute => Method::Brute,
            };
            let result = solve(n, method)?;
            out.write_all(to_json(&result).as_bytes()).map_err(io_error)?;
            Ok(ExitKind::Success)
        }
        Command::Verify { file } => {
            let f = read_assignment(&file)?;
            let g = PetersenGraph::p2(f.n()).map_err(|e| CliError::validation(e.to_string()))?;
            let report = is_valid_rdf(&g, &f)?;
            let output = VerifyOutput {
                n: f.n(),
                valid: report.valid,
                weight: f.weight(),
                violations: report.violations.iter().map(|w| w.to_string()).collect(),
            };
            out.write_all(to_json(&output).as_bytes()).map_err(io_error)?;
            Ok(if report.valid { ExitKind::Success } else { ExitKind::Validation })
        }
        Command::Table { from, to, dp_cap, out: path } => {
            let rows = table_rows(from, to, dp_cap)?;
            let mut text = String::from(TABLE_HEADER);
            text.push('\n');
            for row in &rows {
                text.push_str(&row.csv_line());
                text.push('\n');
            }
            match path {
                Some(path) => fs::write(path, text).map_err(io_error)?,
                None => out.write_all(text.as_bytes()).map_err(io_error)?,
            }
            Ok(ExitKind::Success)
        }
        Command::Audit { n, format } => {
            if n < 5 {
                return Err(CliError::usage(format!("audit needs n >= 5, got {n}")));
            }
            let g = PetersenGraph::p2(n)?;
            let solved = solve_dp(n)?;
            let f = normalize(&g, &solved.witness)?;
            let lemmas = lemma_audit(&g, &f)?;
            let lower = if n >= 7 {
                Some(lower_bound_audit(&g, &f)?)
            } else {
                writeln!(err, "notice: lower-bound audit skipped, it needs n >= 7 (n = {n})")
                    .map_err(io_error)?;
                None
            };
            let passed = lemmas.passed() && lower.as_ref().is_none_or(|r| r.passed());
            let text = match format {
                AuditFormat::Json => to_json(&AuditOutput {
                    n,
                    optimum: solved.optimum,
                    passed,
                    lemma_audit: &lemmas,
                    lower_bound_audit: lower.as_ref(),
                }),
                AuditFormat::Csv => {
                    let mut sections = vec![("lemma", &lemmas)];
                    if let Some(lb) = &lower {
                        sections.push(("lower_bound", lb));
                    }
                    audit_csv(&sections)
                }
            };
            out.write_all(text.as_bytes()).map_err(io_error)?;
            if let Some(lb) = lower.as_ref().and_then(|r| r.lower_bound.as_ref()) {
                writeln!(
                    err,
                    "chain: 7 * {} = {} >= {} = 8 * {n}",
                    solved.optimum,
                    lb.seven_weight_doubled / 2,
                    8 * n
                )
                .map_err(io_error)?;
            }
            Ok(if passed { ExitKind::Success } else { ExitKind::Validation })
        }
        Command::Render { n, assignment } => {
            let f = match assignment {
                Some(path) => read_assignment(&path)?,
                None => construct_rdf(n)?,
            };
            if f.n() != n {
                return Err(CliError::validation(format!(
                    "assignment has n = {} but --n is {n}",
                    f.n()
                )));
            }
            let dot = render_dot(&PetersenGraph::p2(n)?, &f)?;
            out.write_all(dot.as_bytes()).map_err(io_error)?;
            Ok(ExitKind::Success)
        }
    }
}
