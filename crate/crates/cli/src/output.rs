use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::config::{ExperimentConfig, Format};
use crate::experiment::{ExperimentReport, Row};
use crate::CliError;

/// Column order of the per-k CSV table.
pub const CSV_HEADER: &str = "k,word,len,expsum,inf,sup,sss_size,trace,ent_est,ent_lb,converged";

/// Column order of the pairwise sidecar table.
pub const PAIRS_HEADER: &str = "j,k,verdict,basis,traces_differ,witness";

#[derive(Serialize)]
struct CsvRow<'a> {
    k: i64,
    word: &'a str,
    len: usize,
    expsum: i64,
    inf: i64,
    sup: i64,
    sss_size: Option<usize>,
    trace: &'a str,
    ent_est: f64,
    ent_lb: f64,
    converged: bool,
}

impl<'a> From<&'a Row> for CsvRow<'a> {
    fn from(r: &'a Row) -> Self {
        Self {
            k: r.k,
            word: &r.word,
            len: r.len,
            expsum: r.expsum,
            inf: r.inf,
            sup: r.sup,
            sss_size: r.sss_size,
            trace: &r.trace,
            ent_est: r.ent_est,
            ent_lb: r.ent_lb,
            converged: r.converged,
        }
    }
}

#[derive(Serialize)]
struct CsvPair<'a> {
    j: i64,
    k: i64,
    verdict: &'a str,
    basis: &'a str,
    traces_differ: bool,
    witness: &'a str,
}

pub fn write_rows_csv<W: Write>(report: &ExperimentReport, out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for r in &report.rows {
        w.serialize(CsvRow::from(r))?;
    }
    w.flush().map_err(|source| CliError::Io {
        path: "<csv>".into(),
        source,
    })?;
    Ok(())
}

pub fn write_pairs_csv<W: Write>(report: &ExperimentReport, out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for p in &report.pairs {
        w.serialize(CsvPair {
            j: p.j,
            k: p.k,
            verdict: p.verdict.as_str(),
            basis: p.basis.as_str(),
            traces_differ: p.traces_differ,
            witness: p.witness.as_deref().unwrap_or(""),
        })?;
    }
    w.flush().map_err(|source| CliError::Io {
        path: "<csv>".into(),
        source,
    })?;
    Ok(())
}

pub fn write_json<W: Write>(report: &ExperimentReport, out: W) -> Result<(), CliError> {
    let mut out = out;
    serde_json::to_writer_pretty(&mut out, report)?;
    writeln!(out).map_err(|source| CliError::Io {
        path: "<json>".into(),
        source,
    })?;
    Ok(())
}

/// `report.csv` -> `report.pairs.csv`.
pub fn pairs_path(out: &Path) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "report".into());
    out.with_file_name(format!("{stem}.pairs.csv"))
}

fn create(path: &Path) -> Result<File, CliError> {
    File::create(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Writes the report where the config asks. CSV output to a file also
/// writes the pairwise sidecar; CSV on standard output prints the row
/// table, a blank line, then the pairwise table.
pub fn write_report(report: &ExperimentReport, cfg: &ExperimentConfig) -> Result<Vec<PathBuf>, CliError> {
    match (&cfg.out, cfg.format) {
        (Some(path), Format::Csv) => {
            let sidecar = pairs_path(path);
            write_rows_csv(report, create(path)?)?;
            write_pairs_csv(report, create(&sidecar)?)?;
            Ok(vec![path.clone(), sidecar])
        }
        (Some(path), Format::Json) => {
            write_json(report, create(path)?)?;
            Ok(vec![path.clone()])
        }
        (None, Format::Csv) => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write_rows_csv(report, &mut lock)?;
            writeln!(lock).map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            })?;
            write_pairs_csv(report, &mut lock)?;
            Ok(Vec::new())
        }
        (None, Format::Json) => {
            write_json(report, io::stdout().lock())?;
            Ok(Vec::new())
        }
    }
}
