use std::io::Write;
use std::path::Path;

use serde::Serialize;

use hetmean::estimators::{adaptive_estimate, sample_mean, sample_median, GridMode};
use hetmean::Sample;

use crate::error::{CliError, Result};
use crate::EstimateArgs;

/// Machine-readable report; keys are stable.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EstimateReport {
    pub n: usize,
    pub delta: f64,
    pub alpha: f64,
    pub median_interval_lo: f64,
    pub median_interval_hi: f64,
    pub mean: f64,
    pub median: f64,
    pub estimate: f64,
    pub final_interval_lo: f64,
    pub final_interval_hi: f64,
    pub accepted_s: Vec<f64>,
    pub fallback_used: bool,
    pub mode: GridMode,
    pub kappa: f64,
    pub eta: f64,
    pub xi: f64,
}

pub const REPORT_KEYS: [&str; 16] = [
    "n",
    "delta",
    "alpha",
    "median_interval_lo",
    "median_interval_hi",
    "mean",
    "median",
    "estimate",
    "final_interval_lo",
    "final_interval_hi",
    "accepted_s",
    "fallback_used",
    "mode",
    "kappa",
    "eta",
    "xi",
];

/// Reads one number per line; blank lines and lines starting with `#` are
/// skipped.
pub fn read_values(path: &Path) -> Result<Vec<f64>> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        match t.parse::<f64>() {
            Ok(x) if x.is_finite() => values.push(x),
            _ => {
                return Err(CliError::Parse {
                    path: path.to_path_buf(),
                    line: i + 1,
                    text: t.to_string(),
                })
            }
        }
    }
    if values.is_empty() {
        return Err(CliError::EmptyInput {
            path: path.to_path_buf(),
        });
    }
    Ok(values)
}

pub fn report(args: &EstimateArgs) -> Result<EstimateReport> {
    let values = read_values(&args.input)?;
    let mode: GridMode = args.mode.parse()?;
    let c = super::constants_with(
        args.delta,
        args.constants.kappa,
        args.constants.eta,
        args.constants.xi,
    );
    c.validate()?;
    let sample = Sample::ingest(&values)?;
    let r = adaptive_estimate(&sample, &c, mode);
    Ok(EstimateReport {
        n: sample.len(),
        delta: c.delta,
        alpha: r.alpha,
        median_interval_lo: r.median_interval.lo(),
        median_interval_hi: r.median_interval.hi(),
        mean: sample_mean(&sample),
        median: sample_median(&sample),
        estimate: r.estimate,
        final_interval_lo: r.final_interval.lo(),
        final_interval_hi: r.final_interval.hi(),
        accepted_s: r.accepted_lengths(),
        fallback_used: r.fallback_used,
        mode,
        kappa: c.kappa,
        eta: c.eta,
        xi: c.xi,
    })
}

pub fn run(args: &EstimateArgs, out: &mut dyn Write) -> Result<()> {
    let r = report(args)?;
    if args.json {
        serde_json::to_writer(&mut *out, &r)?;
        writeln!(out)?;
        return Ok(());
    }
    let accepted: Vec<String> = r.accepted_s.iter().map(|s| format!("{s}")).collect();
    writeln!(out, "n: {}", r.n)?;
    writeln!(out, "delta: {}", r.delta)?;
    writeln!(out, "alpha: {}", r.alpha)?;
    writeln!(out, "median interval: [{}, {}]", r.median_interval_lo, r.median_interval_hi)?;
    writeln!(out, "sample mean: {}", r.mean)?;
    writeln!(out, "sample median: {}", r.median)?;
    writeln!(out, "adaptive estimate: {}", r.estimate)?;
    writeln!(out, "final interval: [{}, {}]", r.final_interval_lo, r.final_interval_hi)?;
    writeln!(out, "accepted s: [{}]", accepted.join(", "))?;
    writeln!(out, "fallback used: {}", r.fallback_used)?;
    writeln!(out, "mode: {}", r.mode)?;
    writeln!(out, "constants: kappa = {}, eta = {}, xi = {}", r.kappa, r.eta, r.xi)?;
    Ok(())
}
