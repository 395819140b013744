//! `qdivisor-lab`: CLI over the qdivisor-core computations.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure,
//! 3 internal invariant breach.

pub mod args;
pub mod cache;
pub mod output;
pub mod scan;
pub mod verify;

use std::ffi::OsString;
use std::fmt;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::Parser;

use qdivisor_core::erdos_nicolas::{
    erdos_nicolas_f, mean_f_table, means_strictly_increasing,
};
use qdivisor_core::kr_poly::polynomial;
use qdivisor_core::pythagorean::is_double_perimeter;
use qdivisor_core::Error;

use args::{Cli, Command, Format, ScanKind};
use cache::ScanCache;
use output::OutputRecord;
use verify::SuiteOutcome;

pub const EXIT_SUCCESS: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_VERIFY_FAILED: u8 = 2;
pub const EXIT_BREACH: u8 = 3;

/// Environment variable naming the default cache directory.
pub const CACHE_DIR_ENV: &str = "QDIVISOR_LAB_CACHE_DIR";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
    Io(io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Core(err) => write!(f, "{err}"),
            CliError::Io(err) => write!(f, "{err}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Core(err)
    }
}

impl From<io::Error> for CliError {
    fn from(err: io::Error) -> Self {
        CliError::Io(err)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Core(err) => match err {
                Error::InvariantBreach(_)
                | Error::OracleSelfCheck(_)
                | Error::NotDivisible
                | Error::DivisionByZero => EXIT_BREACH,
                _ => EXIT_USAGE,
            },
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses the argument list and executes; returns the process exit code.
pub fn run<I, T>(argv: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_SUCCESS
            };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<u8, CliError> {
    let format = resolve_format(cli.format, &cli.command)?;
    let threads = cli
        .threads
        .map(|k| k.get())
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()));
    match cli.command {
        Command::Poly { n } => cmd_poly(n, format),
        Command::FValue { n } => cmd_fn(n, format),
        Command::Scan { start, end, what } => {
            cmd_scan(start, end, what, format, cli.cache, threads)
        }
        Command::Verify { max_n, oracle_max } => cmd_verify(max_n, oracle_max, format),
        Command::Perimeter { n } => cmd_perimeter(n, format),
        Command::Mean { checkpoints } => cmd_mean(&checkpoints, format),
    }
}

/// Applies per-command defaults and rejects format/command mismatches.
fn resolve_format(requested: Option<Format>, command: &Command) -> Result<Format, CliError> {
    match command {
        Command::Scan { .. } => match requested {
            None => Ok(Format::Bfile),
            Some(Format::Human) => Err(usage("scan emits bfile, csv or json")),
            Some(f) => Ok(f),
        },
        _ => match requested {
            None => Ok(Format::Human),
            Some(Format::Bfile) => Err(usage("bfile is a bulk format; use it with scan")),
            Some(f) => Ok(f),
        },
    }
}

fn cache_dir(flag: Option<PathBuf>) -> Option<PathBuf> {
    flag.or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
}

fn cmd_poly(n: u64, format: Format) -> Result<u8, CliError> {
    let poly = polynomial(n)?;
    let mut out = stdout_writer();
    match format {
        Format::Human => writeln!(out, "{}", output::poly_human(&poly))?,
        Format::Json => writeln!(out, "{}", OutputRecord::from_poly(&poly).to_json())?,
        Format::Csv => write!(out, "{}", output::poly_csv(&poly))?,
        Format::Bfile => unreachable!("rejected by resolve_format"),
    }
    out.flush()?;
    Ok(EXIT_SUCCESS)
}

fn cmd_fn(n: u64, format: Format) -> Result<u8, CliError> {
    let witness = erdos_nicolas_f(n)?;
    witness.validate()?;
    let mut out = stdout_writer();
    match format {
        Format::Human => writeln!(out, "{witness}")?,
        Format::Json => writeln!(out, "{}", OutputRecord::from_witness(&witness).to_json())?,
        Format::Csv => write!(out, "{}", output::witness_csv(&witness))?,
        Format::Bfile => unreachable!("rejected by resolve_format"),
    }
    out.flush()?;
    Ok(EXIT_SUCCESS)
}

fn cmd_scan(
    start: u64,
    end: u64,
    what: ScanKind,
    format: Format,
    cache_flag: Option<PathBuf>,
    threads: usize,
) -> Result<u8, CliError> {
    if start == 0 {
        return Err(usage("scan start must be at least 1"));
    }
    if start > end {
        return Err(usage(format!("empty range: start {start} > end {end}")));
    }
    let span = end - start + 1;
    if span > scan::MAX_SPAN {
        return Err(usage(format!(
            "range of {span} values exceeds the scan limit of {}",
            scan::MAX_SPAN
        )));
    }
    let limit = match what {
        ScanKind::F => qdivisor_core::erdos_nicolas::MAX_N_F,
        ScanKind::MaxCoeff => qdivisor_core::kr_poly::MAX_N_POLY,
    };
    if end >= limit {
        return Err(usage(format!("end {end} out of range (must be < {limit})")));
    }

    let mut cache = match cache_dir(cache_flag) {
        Some(dir) => {
            let (cache, warning) = ScanCache::open(&dir, what);
            if let Some(message) = warning {
                eprintln!("warning: {message}");
            }
            Some(cache)
        }
        None => None,
    };

    let mut rows: Vec<(u64, u64)> = Vec::with_capacity(span as usize);
    let mut missing: Vec<u64> = Vec::new();
    for n in start..=end {
        match cache.as_ref().and_then(|c| c.get(n)) {
            Some(value) => rows.push((n, value)),
            None => missing.push(n),
        }
    }
    let computed = scan::compute(&missing, what, threads)?;
    if let Some(cache) = cache.as_mut() {
        for &(n, value) in &computed {
            cache.insert(n, value);
        }
    }
    rows.extend(computed);
    rows.sort_unstable_by_key(|&(n, _)| n);

    let mut out = stdout_writer();
    match format {
        Format::Bfile => {
            for &(n, value) in &rows {
                write!(out, "{}", output::bfile_line(n, value))?;
            }
        }
        Format::Csv => {
            writeln!(out, "n,value")?;
            for &(n, value) in &rows {
                writeln!(out, "{n},{value}")?;
            }
        }
        Format::Json => {
            for &(n, value) in &rows {
                writeln!(out, "{}", OutputRecord::from_scan_row(n, value).to_json())?;
            }
        }
        Format::Human => unreachable!("rejected by resolve_format"),
    }
    out.flush()?;

    if let Some(cache) = &cache {
        if let Err(err) = cache.persist() {
            eprintln!("warning: cache not written: {err}");
        }
    }
    Ok(EXIT_SUCCESS)
}

fn cmd_verify(max_n: u64, oracle_max: u64, format: Format) -> Result<u8, CliError> {
    if max_n == 0 {
        return Err(usage("--max-n must be at least 1"));
    }
    if max_n >= qdivisor_core::kr_poly::MAX_N_POLY {
        return Err(usage(format!(
            "--max-n out of range (must be < {})",
            qdivisor_core::kr_poly::MAX_N_POLY
        )));
    }
    if oracle_max == 0 || oracle_max > qdivisor_core::series_oracle::MAX_TRUNCATION {
        return Err(usage(format!(
            "--oracle-max must be between 1 and {}",
            qdivisor_core::series_oracle::MAX_TRUNCATION
        )));
    }
    let outcomes = verify::run_all(max_n, oracle_max)?;
    let failures = outcomes.iter().filter(|o| !o.passed()).count();

    let mut out = stdout_writer();
    match format {
        Format::Human => {
            for outcome in &outcomes {
                writeln!(out, "{}", suite_line(outcome))?;
            }
            if failures == 0 {
                writeln!(out, "all {} suites passed", outcomes.len())?;
            } else {
                writeln!(out, "{failures} of {} suites FAILED", outcomes.len())?;
            }
        }
        Format::Json => {
            for outcome in &outcomes {
                let record = OutputRecord::Verify {
                    suite: outcome.name.to_string(),
                    scale: outcome.scale,
                    checked: outcome.checked,
                    pass: outcome.passed(),
                    counterexample: outcome.counterexample,
                };
                writeln!(out, "{}", record.to_json())?;
            }
        }
        Format::Csv => {
            writeln!(out, "suite,scale,checked,pass,counterexample")?;
            for outcome in &outcomes {
                let ce = outcome
                    .counterexample
                    .map(|c| c.to_string())
                    .unwrap_or_default();
                writeln!(
                    out,
                    "{},{},{},{},{ce}",
                    outcome.name,
                    outcome.scale,
                    outcome.checked,
                    outcome.passed()
                )?;
            }
        }
        Format::Bfile => unreachable!("rejected by resolve_format"),
    }
    out.flush()?;
    Ok(if failures == 0 {
        EXIT_SUCCESS
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn suite_line(outcome: &SuiteOutcome) -> String {
    match outcome.counterexample {
        None => format!(
            "{}: {}/{} ok",
            outcome.name, outcome.checked, outcome.checked
        ),
        Some(0) => format!("{}: FAIL", outcome.name),
        Some(n) => format!("{}: FAIL at n = {n}", outcome.name),
    }
}

fn cmd_perimeter(n: u64, format: Format) -> Result<u8, CliError> {
    let decision = is_double_perimeter(n)?;
    let mut out = stdout_writer();
    match format {
        Format::Human => writeln!(out, "{}", output::decision_human(&decision))?,
        Format::Json => writeln!(out, "{}", OutputRecord::from_decision(&decision).to_json())?,
        Format::Csv => write!(out, "{}", output::decision_csv(&decision))?,
        Format::Bfile => unreachable!("rejected by resolve_format"),
    }
    out.flush()?;
    Ok(EXIT_SUCCESS)
}

fn cmd_mean(checkpoints: &[u64], format: Format) -> Result<u8, CliError> {
    let table = mean_f_table(checkpoints)?;
    let mut out = stdout_writer();
    match format {
        Format::Human => {
            for point in &table {
                writeln!(out, "{}", output::mean_row_human(point))?;
            }
            if table.len() >= 2 {
                writeln!(
                    out,
                    "strictly increasing: {}",
                    means_strictly_increasing(&table)
                )?;
            }
        }
        Format::Json => {
            for point in &table {
                writeln!(out, "{}", OutputRecord::from_mean_point(point).to_json())?;
            }
        }
        Format::Csv => {
            writeln!(out, "x,numerator,denominator,decimal")?;
            for point in &table {
                writeln!(
                    out,
                    "{},{},{},{}",
                    point.x(),
                    point.numerator(),
                    point.denominator(),
                    point.decimal()
                )?;
            }
        }
        Format::Bfile => unreachable!("rejected by resolve_format"),
    }
    out.flush()?;
    Ok(EXIT_SUCCESS)
}

fn stdout_writer() -> BufWriter<io::StdoutLock<'static>> {
    BufWriter::new(io::stdout().lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_exit_codes() {
        assert_eq!(usage("x").exit_code(), EXIT_USAGE);
        assert_eq!(CliError::Core(Error::ZeroInput).exit_code(), EXIT_USAGE);
        assert_eq!(
            CliError::Core(Error::Overflow("sigma")).exit_code(),
            EXIT_USAGE
        );
        assert_eq!(
            CliError::Core(Error::InvariantBreach("x")).exit_code(),
            EXIT_BREACH
        );
        assert_eq!(
            CliError::Core(Error::OracleSelfCheck("x")).exit_code(),
            EXIT_BREACH
        );
    }

    #[test]
    fn suite_lines() {
        let ok = SuiteOutcome {
            name: "reflection",
            scale: 100,
            checked: 100,
            counterexample: None,
        };
        assert_eq!(suite_line(&ok), "reflection: 100/100 ok");
        let failed = SuiteOutcome {
            name: "checksum",
            scale: 100,
            checked: 42,
            counterexample: Some(42),
        };
        assert_eq!(suite_line(&failed), "checksum: FAIL at n = 42");
    }
}
