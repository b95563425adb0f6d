//! Trial and summary CSV files.
//!
//! Floats are written in scientific notation with 17 significant digits so
//! that reading a file back reproduces every value bit for bit. Undefined
//! values are empty fields.

use std::path::Path;

use hetmean::simulate::summary::{CountStats, ErrorStats};
use hetmean::simulate::{Summary, TrialRecord};

use crate::error::{CliError, Result};

pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_f64).unwrap_or_default()
}

fn fmt_opt_bool(x: Option<bool>) -> String {
    x.map(|b| b.to_string()).unwrap_or_default()
}

/// `trial,seed,err_<estimator>...,covered,modal_within_4s,accepted_count`.
pub fn trial_header(estimators: &[String]) -> Vec<String> {
    let mut h = vec!["trial".to_string(), "seed".to_string()];
    h.extend(estimators.iter().map(|e| format!("err_{e}")));
    h.extend(["covered", "modal_within_4s", "accepted_count"].map(String::from));
    h
}

fn writer(path: &Path) -> Result<csv::Writer<std::fs::File>> {
    let file = std::fs::File::create(path).map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(csv::Writer::from_writer(file))
}

fn reader(path: &Path) -> Result<csv::Reader<std::fs::File>> {
    let file = std::fs::File::open(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(csv::Reader::from_reader(file))
}

pub fn write_trials(path: &Path, records: &[TrialRecord]) -> Result<()> {
    let names: Vec<String> = records
        .first()
        .map(|r| r.errors.iter().map(|(n, _)| n.clone()).collect())
        .unwrap_or_default();
    let mut w = writer(path)?;
    w.write_record(trial_header(&names))?;
    for r in records {
        let mut row = vec![r.trial_index.to_string(), r.seed.to_string()];
        row.extend(r.errors.iter().map(|(_, e)| fmt_opt(*e)));
        row.push(r.covered_by_median_interval.to_string());
        row.push(fmt_opt_bool(r.modal_within_4s));
        row.push(r.accepted_count.to_string());
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

fn bad(path: &Path, line: usize, text: &str) -> CliError {
    CliError::Parse {
        path: path.to_path_buf(),
        line,
        text: text.to_string(),
    }
}

fn parse_field<T: std::str::FromStr>(path: &Path, line: usize, text: &str) -> Result<T> {
    text.parse().map_err(|_| bad(path, line, text))
}

fn parse_opt<T: std::str::FromStr>(path: &Path, line: usize, text: &str) -> Result<Option<T>> {
    if text.is_empty() {
        Ok(None)
    } else {
        parse_field(path, line, text).map(Some)
    }
}

pub fn read_trials(path: &Path) -> Result<Vec<TrialRecord>> {
    let mut rdr = reader(path)?;
    let header: Vec<String> = rdr.headers()?.iter().map(String::from).collect();
    let k = header.len();
    if k < 5 || header[0] != "trial" || header[1] != "seed" {
        return Err(bad(path, 1, &header.join(",")));
    }
    let names: Vec<String> = header[2..k - 3]
        .iter()
        .map(|h| h.strip_prefix("err_").unwrap_or(h).to_string())
        .collect();
    let mut out = Vec::new();
    for (i, row) in rdr.records().enumerate() {
        let row = row?;
        let line = i + 2;
        let errors = names
            .iter()
            .enumerate()
            .map(|(j, name)| Ok((name.clone(), parse_opt(path, line, &row[2 + j])?)))
            .collect::<Result<Vec<_>>>()?;
        out.push(TrialRecord {
            trial_index: parse_field(path, line, &row[0])?,
            seed: parse_field(path, line, &row[1])?,
            errors,
            covered_by_median_interval: parse_field(path, line, &row[k - 3])?,
            modal_within_4s: parse_opt(path, line, &row[k - 2])?,
            accepted_count: parse_field(path, line, &row[k - 1])?,
        });
    }
    Ok(out)
}

pub const SUMMARY_COLUMNS: [&str; 13] = [
    "n",
    "estimator",
    "trials",
    "defined",
    "median",
    "q90",
    "mean",
    "coverage",
    "modal_within_4s",
    "accepted_min",
    "accepted_median",
    "accepted_mean",
    "accepted_max",
];

/// One row per (sample size, estimator). `slopes`, when given, adds a
/// `slope` column holding the estimator's fitted log-log slope.
pub fn write_summary(
    path: &Path,
    runs: &[(usize, Summary)],
    slopes: Option<&[(String, Option<f64>)]>,
) -> Result<()> {
    let mut w = writer(path)?;
    let mut header: Vec<&str> = SUMMARY_COLUMNS.to_vec();
    if slopes.is_some() {
        header.push("slope");
    }
    w.write_record(&header)?;
    for (n, s) in runs {
        for e in &s.errors {
            let mut row = vec![
                n.to_string(),
                e.estimator.clone(),
                s.trials.to_string(),
                e.count.to_string(),
                fmt_opt(e.median),
                fmt_opt(e.q90),
                fmt_opt(e.mean),
                fmt_f64(s.coverage),
                fmt_opt(s.modal_within_4s),
                s.accepted_count.min.to_string(),
                fmt_f64(s.accepted_count.median),
                fmt_f64(s.accepted_count.mean),
                s.accepted_count.max.to_string(),
            ];
            if let Some(slopes) = slopes {
                let slope = slopes
                    .iter()
                    .find(|(name, _)| *name == e.estimator)
                    .and_then(|(_, s)| *s);
                row.push(fmt_opt(slope));
            }
            w.write_record(row)?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Summary rows keyed by sample size, with the slope column if present.
pub type SummaryRows = Vec<(usize, Summary, Vec<(String, Option<f64>)>)>;

pub fn read_summary(path: &Path) -> Result<SummaryRows> {
    let mut rdr = reader(path)?;
    let header: Vec<String> = rdr.headers()?.iter().map(String::from).collect();
    if header.len() < SUMMARY_COLUMNS.len() || header[..SUMMARY_COLUMNS.len()] != SUMMARY_COLUMNS {
        return Err(bad(path, 1, &header.join(",")));
    }
    let has_slope = header.len() == SUMMARY_COLUMNS.len() + 1;
    let mut out: SummaryRows = Vec::new();
    for (i, row) in rdr.records().enumerate() {
        let row = row?;
        let line = i + 2;
        let field = |j: usize| -> &str { &row[j] };
        let n: usize = parse_field(path, line, field(0))?;
        let stats = ErrorStats {
            estimator: field(1).to_string(),
            count: parse_field(path, line, field(3))?,
            median: parse_opt(path, line, field(4))?,
            q90: parse_opt(path, line, field(5))?,
            mean: parse_opt(path, line, field(6))?,
        };
        let slope = if has_slope {
            parse_opt(path, line, field(13))?
        } else {
            None
        };
        let summary = Summary {
            trials: parse_field(path, line, field(2))?,
            errors: Vec::new(),
            coverage: parse_field(path, line, field(7))?,
            modal_within_4s: parse_opt(path, line, field(8))?,
            accepted_count: CountStats {
                min: parse_field(path, line, field(9))?,
                median: parse_field(path, line, field(10))?,
                mean: parse_field(path, line, field(11))?,
                max: parse_field(path, line, field(12))?,
            },
        };
        match out.last_mut() {
            Some((last_n, s, slopes)) if *last_n == n => {
                slopes.push((stats.estimator.clone(), slope));
                s.errors.push(stats);
            }
            _ => {
                let name = stats.estimator.clone();
                out.push((
                    n,
                    Summary {
                        errors: vec![stats],
                        ..summary
                    },
                    vec![(name, slope)],
                ));
            }
        }
    }
    Ok(out)
}
