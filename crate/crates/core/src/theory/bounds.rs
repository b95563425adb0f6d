//! Closed-form error bounds evaluated on a known scale profile.
//!
//! Unspecified numerical constants in front of the bounds are reported as 1;
//! callers compare shapes and ratios, not absolute levels.

use std::f64::consts::{E, SQRT_2};

use serde::Serialize;

use super::admissibility::{s_bar, Criterion};
use super::family::Family;
use super::profile::SigmaProfile;
use crate::error::{Error, Result};

/// `128 log(6 / delta) <= n`, the standing assumption of the median
/// interval analysis.
pub fn check_median_precondition(n: usize, delta: f64) -> Result<()> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::param("delta", format!("{delta} not in (0, 1)")));
    }
    let need = 128.0 * (6.0 / delta).ln();
    if need > n as f64 {
        return Err(Error::Precondition(format!(
            "128 log(6/delta) = {need:.1} exceeds n = {n}"
        )));
    }
    Ok(())
}

/// `ceil(8 alpha sqrt(n))` clamped to `n`, with `alpha = sqrt(2 log(6/delta))`.
pub fn median_rank_span(n: usize, delta: f64) -> usize {
    let alpha = (2.0 * (6.0 / delta).ln()).sqrt();
    ((8.0 * alpha * (n as f64).sqrt()).ceil() as usize).clamp(1, n)
}

/// Length bound for the median interval that holds with probability
/// `1 - delta`:
///
/// `8 e sqrt(2) (log(3/delta) v log(n+1)) / beta * max_{j <= k} (k + 1 - j) / S_j`
/// with `k = ceil(8 alpha sqrt(n))`.
pub fn median_interval_bound(profile: &SigmaProfile, delta: f64, beta: f64) -> Result<f64> {
    let n = profile.len();
    check_median_precondition(n, delta)?;
    let k = median_rank_span(n, delta);
    let log_factor = (3.0 / delta).ln().max((n as f64 + 1.0).ln());
    Ok(8.0 * E * SQRT_2 * log_factor / beta * profile.rank_ratio(k))
}

/// Moment bound on the `k`-th smallest absolute deviation:
/// `4 sqrt(2) max(p, log(k+1)) / beta * max_{j <= k} (k + 1 - j) / S_j`.
pub fn gordon_moment_bound(profile: &SigmaProfile, k: usize, p: f64, beta: f64) -> Result<f64> {
    if k == 0 || k > profile.len() {
        return Err(Error::param("k", format!("{k} not in 1..={}", profile.len())));
    }
    if !(p >= 1.0) {
        return Err(Error::param("p", format!("{p} < 1")));
    }
    let log_factor = p.max((k as f64 + 1.0).ln());
    Ok(4.0 * SQRT_2 * log_factor / beta * profile.rank_ratio(k))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AdaptiveBound {
    pub s_bar: Option<f64>,
    /// `log(n/delta) / beta * max_{j <= k} (k + 1 - j) / S_j`.
    pub median_term: f64,
    /// Minimum of the two terms.
    pub value: f64,
}

/// Error guarantee of the adaptive estimator, up to a constant factor: the
/// better of the oracle modal scale and the median-interval term.
pub fn adaptive_bound(
    profile: &SigmaProfile,
    family: &Family,
    delta: f64,
    kappa: f64,
) -> Result<AdaptiveBound> {
    let n = profile.len();
    check_median_precondition(n, delta)?;
    let k = median_rank_span(n, delta);
    let median_term = (n as f64 / delta).ln() / family.beta * profile.rank_ratio(k);
    let s_bar = s_bar(profile, family, delta, kappa, Criterion::Exact);
    let value = s_bar.map_or(median_term, |s| s.min(median_term));
    Ok(AdaptiveBound {
        s_bar,
        median_term,
        value,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct XiaBound {
    /// Whether `sqrt(n log(1/delta)) / S_1 <= 7 sqrt(2) sigma_1 / 10` holds.
    pub applicable: bool,
    pub condition_lhs: f64,
    pub condition_rhs: f64,
    /// `(10/7) sqrt(2 n log(1/delta)) / S_1`.
    pub bound: f64,
}

/// Median error bound for Gaussian observations under a small-deviation
/// condition on the scales.
pub fn xia_bound(profile: &SigmaProfile, delta: f64) -> XiaBound {
    let n = profile.len() as f64;
    let inv_sum = profile.suffix_inverse_sums()[0];
    let log_inv = (1.0 / delta).ln();
    let lhs = (n * log_inv).sqrt() / inv_sum;
    let rhs = 7.0 * SQRT_2 * profile.sigmas()[0] / 10.0;
    XiaBound {
        applicable: lhs <= rhs,
        condition_lhs: lhs,
        condition_rhs: rhs,
        bound: (10.0 / 7.0) * (2.0 * n * log_inv).sqrt() / inv_sum,
    }
}

/// `sigma_{ceil(c log n)} sqrt(n) log^{3/2}(n)`.
pub fn chierichetti_style_bound(profile: &SigmaProfile, c: f64) -> Result<f64> {
    if !(c >= 1.0) {
        return Err(Error::param("c", format!("{c} < 1")));
    }
    let n = profile.len();
    let log_n = (n as f64).ln();
    let idx = ((c * log_n).ceil() as usize).max(1);
    let sigma = profile.sigma(idx).ok_or_else(|| {
        Error::Precondition(format!("index ceil(c log n) = {idx} exceeds n = {n}"))
    })?;
    Ok(sigma * (n as f64).sqrt() * log_n.powf(1.5))
}
