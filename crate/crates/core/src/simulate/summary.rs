//! Aggregate metrics over trial records.

use serde::Serialize;

use super::experiment::{ExperimentRun, TrialRecord};
use crate::error::{Error, Result};

/// Type-7 sample quantile (linear interpolation between order statistics)
/// of an ascending slice. The median of an even count is the midpoint of
/// the two central values.
pub fn quantile(sorted: &[f64], p: f64) -> f64 {
    assert!(!sorted.is_empty(), "quantile of empty slice");
    let h = (sorted.len() - 1) as f64 * p.clamp(0.0, 1.0);
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorStats {
    pub estimator: String,
    /// Trials where the estimator was defined.
    pub count: usize,
    pub median: Option<f64>,
    pub q90: Option<f64>,
    pub mean: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountStats {
    pub min: usize,
    pub median: f64,
    pub mean: f64,
    pub max: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub trials: usize,
    pub errors: Vec<ErrorStats>,
    /// Fraction of trials with `mu` inside the median interval.
    pub coverage: f64,
    /// Fraction of trials with the modal estimate at `s_bar` within
    /// `4 s_bar`; `None` when never defined.
    pub modal_within_4s: Option<f64>,
    pub accepted_count: CountStats,
}

impl Summary {
    pub fn stats(&self, estimator: &str) -> Option<&ErrorStats> {
        self.errors.iter().find(|e| e.estimator == estimator)
    }

    pub fn median_error(&self, estimator: &str) -> Option<f64> {
        self.stats(estimator).and_then(|e| e.median)
    }
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Summarises one batch of trials. Estimators appear in the order of the
/// first record.
pub fn summarize(records: &[TrialRecord]) -> Result<Summary> {
    let first = records
        .first()
        .ok_or_else(|| Error::param("records", "nothing to summarise"))?;
    let errors = first
        .errors
        .iter()
        .map(|(name, _)| {
            let mut xs: Vec<f64> = records.iter().filter_map(|r| r.error(name)).collect();
            xs.sort_by(f64::total_cmp);
            let defined = !xs.is_empty();
            ErrorStats {
                estimator: name.clone(),
                count: xs.len(),
                median: defined.then(|| quantile(&xs, 0.5)),
                q90: defined.then(|| quantile(&xs, 0.9)),
                mean: defined.then(|| mean(&xs)),
            }
        })
        .collect();

    let n = records.len() as f64;
    let coverage = records.iter().filter(|r| r.covered_by_median_interval).count() as f64 / n;
    let modal: Vec<bool> = records.iter().filter_map(|r| r.modal_within_4s).collect();
    let modal_within_4s =
        (!modal.is_empty()).then(|| modal.iter().filter(|&&b| b).count() as f64 / modal.len() as f64);

    let mut counts: Vec<f64> = records.iter().map(|r| r.accepted_count as f64).collect();
    counts.sort_by(f64::total_cmp);
    let accepted_count = CountStats {
        min: counts[0] as usize,
        median: quantile(&counts, 0.5),
        mean: mean(&counts),
        max: counts[counts.len() - 1] as usize,
    };

    Ok(Summary {
        trials: records.len(),
        errors,
        coverage,
        modal_within_4s,
        accepted_count,
    })
}

/// Least-squares slope of `ln y` against `ln x`. `None` with fewer than two
/// usable points (positive `x` and `y`) or no spread in `x`.
pub fn log_log_slope(points: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Summary of every run plus per-estimator slopes of the median error
/// against `n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingSummary {
    pub runs: Vec<(usize, Summary)>,
    pub slopes: Vec<(String, Option<f64>)>,
}

pub fn summarize_scaling(runs: &[ExperimentRun]) -> Result<ScalingSummary> {
    let summaries = runs
        .iter()
        .map(|r| Ok((r.n, summarize(&r.records)?)))
        .collect::<Result<Vec<_>>>()?;
    let names: Vec<String> = summaries
        .first()
        .map(|(_, s)| s.errors.iter().map(|e| e.estimator.clone()).collect())
        .unwrap_or_default();
    let slopes = names
        .into_iter()
        .map(|name| {
            let pts: Vec<(f64, f64)> = summaries
                .iter()
                .filter_map(|(n, s)| s.median_error(&name).map(|m| (*n as f64, m)))
                .collect();
            let slope = log_log_slope(&pts);
            (name, slope)
        })
        .collect();
    Ok(ScalingSummary {
        runs: summaries,
        slopes,
    })
}
