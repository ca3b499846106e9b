use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use thiserror::Error;
use topoindex_core::indices::{self, integral_exponent, IndexError};
use topoindex_core::verify::{
    check_random_graphs, verify_family_with, AllowlistOutcome, MismatchAllowlist, SweepParams,
    VerificationReport,
};
use topoindex_core::{
    compute, generate, Execution, GenerateError, IndexKind, IndexValue, NetworkSpec, Params,
};

use crate::args::{Cli, Command, ComputeArgs, GenArgs, PlotArgs, SweepArgs, VerifyArgs};
use crate::edgelist::write_edge_list;
use crate::plot::{render_svg, PlotError};
use crate::sweep::{read_csv, sweep_rows, write_csv, SweepError, SweepExponents, MAX_EXACT_DIGITS};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Sweep { path: PathBuf, source: SweepError },
    #[error(transparent)]
    Plot(#[from] PlotError),
    #[error("writing output: {0}")]
    Stdout(io::Error),
}

/// How a successful invocation ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Mismatch,
}

impl From<Outcome> for ExitCode {
    fn from(o: Outcome) -> Self {
        match o {
            Outcome::Success => ExitCode::SUCCESS,
            Outcome::Mismatch => ExitCode::from(1),
        }
    }
}

/// Exit status for errors: usage, bad input and I/O alike.
pub const ERROR_EXIT: u8 = 2;

fn stdout_path() -> PathBuf {
    PathBuf::from("<stdout>")
}

fn emit(path: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, bytes).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(bytes)
                .and_then(|_| out.flush())
                .map_err(CliError::Stdout)
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Gen(a) => gen(a),
        Command::Compute(a) => compute_cmd(a),
        Command::Verify(a) => verify(a),
        Command::Sweep(a) => sweep(a),
        Command::Plot(a) => plot(a),
    }
}

fn gen(a: GenArgs) -> Result<Outcome, CliError> {
    let spec = NetworkSpec::new(a.family, a.n);
    let net = generate(spec)?;
    let mut buf = Vec::new();
    write_edge_list(&mut buf, spec, &net.graph).expect("writing to memory");
    emit(a.out.as_deref(), &buf)?;
    Ok(Outcome::Success)
}

/// Text printed by `compute`.
pub fn compute_text(a: &ComputeArgs) -> Result<String, CliError> {
    let spec = NetworkSpec::new(a.family, a.n);
    let net = generate(spec)?;
    let mut out = String::new();
    let _ = match a.index {
        IndexKind::MultFirst => writeln!(out, "{spec} {} (c = {})", a.index, a.c),
        IndexKind::SumConnectivity => writeln!(out, "{spec} {} (alpha = {})", a.index, a.alpha),
        _ => writeln!(out, "{spec} {}", a.index),
    };
    let exact_c = integral_exponent(a.c).map(u64::from);
    if a.index == IndexKind::MultFirst && exact_c.is_none() {
        let _ = writeln!(
            out,
            "log10: {}",
            indices::mult_zagreb_1_log10(&net.graph, a.c)?
        );
        return Ok(out);
    }
    let params = Params {
        c: exact_c.unwrap_or(0),
        alpha: a.alpha,
    };
    let v = compute(&net.graph, a.index, params)?;
    match &v {
        IndexValue::Factored(f) => {
            let _ = writeln!(out, "factored: {f}");
        }
        IndexValue::Real(x) => {
            let _ = writeln!(out, "value: {x:?}");
        }
        IndexValue::Integer(_) => {}
    }
    if let Some(d) = v.exact_decimal(MAX_EXACT_DIGITS) {
        let _ = writeln!(out, "decimal: {d}");
    }
    let _ = writeln!(out, "log10: {}", v.log10());
    Ok(out)
}

fn compute_cmd(a: ComputeArgs) -> Result<Outcome, CliError> {
    emit(None, compute_text(&a)?.as_bytes())?;
    Ok(Outcome::Success)
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::default()
    }
}

/// Human-readable digest of a verification run.
pub fn summary_text(
    report: &VerificationReport,
    outcome: &AllowlistOutcome,
    allowlist: &MismatchAllowlist,
) -> String {
    let mut out = String::new();
    for (family, c) in &report.summary {
        let _ = writeln!(
            out,
            "{family}: {} match, {} mismatch, {} out of range",
            c.matched, c.mismatched, c.out_of_range
        );
    }
    if let Some(r) = &report.random_graphs {
        let _ = writeln!(
            out,
            "random graphs: {} checked (seed {}, up to {} vertices), {} failed",
            r.count,
            r.seed,
            r.max_vertices,
            r.failures.len()
        );
    }
    for e in report.mismatches() {
        let tag = if allowlist.patterns.iter().any(|p| p.matches(e)) {
            "expected"
        } else {
            "MISMATCH"
        };
        let _ = writeln!(
            out,
            "{tag} {}_{} {}: published {}, graph {}",
            e.family,
            e.n,
            e.quantity,
            e.published_value.as_deref().unwrap_or("-"),
            e.oracle_value.as_deref().unwrap_or("-")
        );
    }
    for p in &outcome.unused {
        let _ = writeln!(out, "allowlist entry `{p}` matched no mismatch");
    }
    let _ = writeln!(out, "{}", if outcome.is_clean() { "ok" } else { "FAILED" });
    out
}

fn verify(a: VerifyArgs) -> Result<Outcome, CliError> {
    let exec = execution(a.sequential);
    let params = SweepParams {
        c_values: a.c,
        alpha_values: a.alpha,
    };
    let reports = a
        .family
        .0
        .iter()
        .map(|&f| verify_family_with(f, a.n_range.range(), &params, exec))
        .collect::<Result<Vec<_>, _>>()?;
    let mut report = VerificationReport::merge(reports);
    if a.random_graphs > 0 {
        report.random_graphs = Some(check_random_graphs(
            a.seed,
            a.random_graphs,
            a.max_vertices,
            exec,
        ));
    }
    let allowlist = MismatchAllowlist {
        patterns: a.expect_mismatch,
    };
    let outcome = report.check_allowlist(&allowlist);

    let mut json = serde_json::to_string_pretty(&report).expect("report serializes");
    json.push('\n');
    let summary = summary_text(&report, &outcome, &allowlist);
    match &a.out {
        Some(path) => {
            emit(Some(path), json.as_bytes())?;
            emit(None, summary.as_bytes())?;
        }
        None => {
            emit(None, json.as_bytes())?;
            eprint!("{summary}");
        }
    }
    Ok(if outcome.is_clean() {
        Outcome::Success
    } else {
        Outcome::Mismatch
    })
}

fn sweep(a: SweepArgs) -> Result<Outcome, CliError> {
    if a.n_range.start < 2 {
        return Err(CliError::Usage(format!(
            "sweep needs n >= 2, got --n-range {}",
            a.n_range
        )));
    }
    let exps = SweepExponents {
        c: a.c,
        alpha: a.alpha,
    };
    let path = a.csv.clone().unwrap_or_else(stdout_path);
    let wrap = |source| CliError::Sweep {
        path: path.clone(),
        source,
    };
    let rows = sweep_rows(
        &a.family.0,
        a.n_range.range(),
        &a.index.0,
        exps,
        execution(a.sequential),
    )
    .map_err(wrap)?;
    let mut buf = Vec::new();
    write_csv(&mut buf, &rows).map_err(wrap)?;
    emit(a.csv.as_deref(), &buf)?;
    Ok(Outcome::Success)
}

fn plot(a: PlotArgs) -> Result<Outcome, CliError> {
    let file = fs::File::open(&a.csv).map_err(|source| CliError::Io {
        path: a.csv.clone(),
        source,
    })?;
    let rows = read_csv(io::BufReader::new(file)).map_err(|source| CliError::Sweep {
        path: a.csv.clone(),
        source,
    })?;
    emit(a.svg.as_deref(), render_svg(&rows)?.as_bytes())?;
    Ok(Outcome::Success)
}
