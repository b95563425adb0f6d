//! Samples, closed intervals and the numerical constants shared by the
//! estimators.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Observations held in non-decreasing order.
///
/// Ties are kept; the order among equal values follows the input order.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    values: Vec<f64>,
}

impl Sample {
    /// Validates and sorts `values`.
    pub fn ingest(values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySample);
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(pos));
        }
        let mut sorted = values.to_vec();
        // stable, and total since NaN/inf were rejected
        sorted.sort_by(f64::total_cmp);
        Ok(Sample { values: sorted })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false: a sample holds at least one observation.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The `k`-th smallest observation, 1-based.
    pub fn order_statistic(&self, k: usize) -> Result<f64> {
        if k == 0 || k > self.values.len() {
            return Err(Error::OrderStatisticOutOfRange {
                index: k,
                n: self.values.len(),
            });
        }
        Ok(self.values[k - 1])
    }

    /// Order statistic with the index clamped into `1..=n`.
    pub(crate) fn order_statistic_clamped(&self, k: i64) -> f64 {
        let n = self.values.len() as i64;
        self.values[(k.clamp(1, n) - 1) as usize]
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        self.values[self.values.len() - 1]
    }
}

/// A closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return Err(Error::param("interval", format!("[{lo}, {hi}] is not ordered")));
        }
        Ok(Interval { lo, hi })
    }

    /// The interval `[center - radius, center + radius]`.
    pub fn centered(center: f64, radius: f64) -> Self {
        debug_assert!(radius >= 0.0);
        Interval {
            lo: center - radius,
            hi: center + radius,
        }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        // avoids overflow for huge endpoints and stays inside [lo, hi]
        let m = self.lo + (self.hi - self.lo) / 2.0;
        m.clamp(self.lo, self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// `None` when the intervals are disjoint.
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Interval { lo, hi })
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Tunable constants of the acceptance test and the admissibility criterion.
///
/// `kappa` scales the admissibility threshold, `eta` the separation margin
/// of the acceptance test and `xi` its count floor. `beta` is the tail
/// constant of the noise and `delta` the confidence level.
///
/// The defaults for `eta` and `xi` were chosen from simulation: they are
/// roughly twice (and the square of twice) the deviation constant reported
/// by [`crate::theory::calibrate`], rounded up. They are not canonical.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Constants {
    pub delta: f64,
    pub kappa: f64,
    pub eta: f64,
    pub xi: f64,
    pub beta: f64,
}

impl Default for Constants {
    fn default() -> Self {
        Constants {
            delta: 0.1,
            kappa: 4.0,
            eta: 2.0,
            xi: 4.0,
            beta: (2.0 / std::f64::consts::PI).sqrt(),
        }
    }
}

impl Constants {
    pub fn with_delta(mut self, delta: f64) -> Self {
        self.delta = delta;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return Err(Error::param("delta", format!("{} not in (0, 1)", self.delta)));
        }
        for (name, v) in [
            ("kappa", self.kappa),
            ("eta", self.eta),
            ("xi", self.xi),
            ("beta", self.beta),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::param(name, format!("{v} must be positive")));
            }
        }
        Ok(())
    }

    /// `log(2n / delta)`, the confidence term used by the acceptance test.
    pub fn log_term(&self, n: usize) -> f64 {
        (2.0 * n as f64 / self.delta).ln()
    }
}
