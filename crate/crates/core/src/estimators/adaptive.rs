//! The empirical acceptance test and the adaptive estimator built on it.
//!
//! For a half-length `s`, the densest interval `A_s(c)` is accepted when it
//! holds enough points and beats every interval centred at least `8s` away
//! by a concentration margin. The estimate is the midpoint of the
//! intersection of `A_{8s}(c)` over all accepted `s`, clipped to the median
//! interval; the median interval itself is the fallback.

use std::str::FromStr;

use serde::Serialize;

use super::median::{median_interval, median_interval_alpha};
use super::modal::{max_count_excluding, modal_interval, ModalResult};
use crate::error::{Error, Result};
use crate::sample::{Constants, Interval, Sample};

/// Multiple of `s` used both as the exclusion radius of the acceptance test
/// and as the half-width of the confidence interval an accepted `s` yields.
pub const SEPARATION: f64 = 8.0;

/// Number of halvings of `|I_alpha|` in the dyadic grid.
const DYADIC_DEPTH: i32 = 40;

/// How the candidate half-lengths `s` are enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GridMode {
    /// `|I_alpha| * 2^-i` for `i = 0..=40`.
    #[default]
    Dyadic,
    /// Every half-distance between two observations, O(n^2).
    Pairwise,
}

impl FromStr for GridMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dyadic" => Ok(GridMode::Dyadic),
            "pairwise" => Ok(GridMode::Pairwise),
            other => Err(Error::param("mode", format!("`{other}` is not dyadic|pairwise"))),
        }
    }
}

impl std::fmt::Display for GridMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GridMode::Dyadic => "dyadic",
            GridMode::Pairwise => "pairwise",
        })
    }
}

/// Outcome of the acceptance test at one half-length.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AcceptDecision {
    pub accepted: bool,
    pub modal: ModalResult,
    /// Largest count of an interval centred at least `8s` from the modal centre.
    /// `None` when the count floor already failed and the scan was skipped.
    pub outside_max: Option<usize>,
}

/// Runs the acceptance test for half-length `s`.
pub fn accept(sample: &Sample, s: f64, constants: &Constants) -> AcceptDecision {
    let modal = modal_interval(sample, s);
    let log_term = constants.log_term(sample.len());
    let count = modal.count as f64;
    if count < constants.xi * log_term {
        return AcceptDecision {
            accepted: false,
            modal,
            outside_max: None,
        };
    }
    let outside = max_count_excluding(sample, s, modal.center, SEPARATION * s);
    let margin = constants.eta * ((count * log_term).sqrt() + log_term);
    AcceptDecision {
        accepted: outside as f64 <= count - margin,
        modal,
        outside_max: Some(outside),
    }
}

/// Candidate half-lengths, sorted decreasing.
pub fn candidate_lengths(median_iv: &Interval, mode: GridMode, sample: &Sample) -> Vec<f64> {
    let len = median_iv.length();
    match mode {
        GridMode::Dyadic => {
            if len == 0.0 {
                return vec![0.0];
            }
            (0..=DYADIC_DEPTH).map(|i| len * 2f64.powi(-i)).collect()
        }
        GridMode::Pairwise => {
            let v = sample.values();
            let mut out = Vec::new();
            for i in 0..v.len() {
                for j in i + 1..v.len() {
                    let h = (v[j] - v[i]) / 2.0;
                    if h > len {
                        break;
                    }
                    out.push(h);
                }
            }
            out.sort_by(|a, b| b.total_cmp(a));
            out.dedup();
            out
        }
    }
}

/// One accepted half-length and the modal interval it produced.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AcceptedInterval {
    pub s: f64,
    pub center: f64,
    pub count: usize,
}

impl AcceptedInterval {
    /// `A_s(center)`.
    pub fn modal_window(&self) -> Interval {
        Interval::centered(self.center, self.s)
    }

    /// `A_{8s}(center)`.
    pub fn confidence_interval(&self) -> Interval {
        Interval::centered(self.center, SEPARATION * self.s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdaptiveReport {
    pub estimate: f64,
    pub alpha: f64,
    pub median_interval: Interval,
    /// Accepted half-lengths in scan order (decreasing `s`).
    pub accepted: Vec<AcceptedInterval>,
    pub final_interval: Interval,
    pub fallback_used: bool,
}

impl AdaptiveReport {
    pub fn accepted_lengths(&self) -> Vec<f64> {
        self.accepted.iter().map(|a| a.s).collect()
    }
}

/// The fully adaptive estimator.
pub fn adaptive_estimate(sample: &Sample, constants: &Constants, mode: GridMode) -> AdaptiveReport {
    let alpha = median_interval_alpha(constants.delta);
    let median_iv = median_interval(sample, alpha);
    let floor = constants.xi * constants.log_term(sample.len());

    let mut accepted = Vec::new();
    let mut running: Option<Interval> = None;
    let mut emptied = false;
    for s in candidate_lengths(&median_iv, mode, sample) {
        if s > median_iv.length() {
            continue;
        }
        let decision = accept(sample, s, constants);
        if (decision.modal.count as f64) < floor {
            // max_x D_s(x) only shrinks with s, so no smaller s can pass
            break;
        }
        if !decision.accepted {
            continue;
        }
        let hit = AcceptedInterval {
            s,
            center: decision.modal.center,
            count: decision.modal.count,
        };
        accepted.push(hit);
        if !emptied {
            let ci = hit.confidence_interval();
            match running.map_or(Some(ci), |r| r.intersect(&ci)) {
                Some(r) => running = Some(r),
                None => emptied = true,
            }
        }
    }

    let combined = if emptied {
        None
    } else {
        running.and_then(|r| r.intersect(&median_iv))
    };
    let (final_interval, fallback_used) = match combined {
        Some(iv) => (iv, false),
        None => (median_iv, true),
    };
    AdaptiveReport {
        estimate: final_interval.midpoint(),
        alpha,
        median_interval: median_iv,
        accepted,
        final_interval,
        fallback_used,
    }
}
