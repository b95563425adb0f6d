//! Empirical fit of the deviation constant behind the acceptance margins.
//!
//! For i.i.d. reference samples of size `n` the statistic
//! `sup_I |#I - E #I| / (sqrt(E #I * l_n) + l_n)` with `l_n = 2 ln n` is
//! computed exactly, and `kappa1` is the largest (over sizes) empirical
//! `(1 - delta)`-quantile. The draws do not depend on `delta`, so `kappa1`
//! is non-increasing in `delta` for a fixed seed.

use serde::Serialize;

use super::deviation::ratio_interval_deviation;
use super::family::Family;
use crate::error::{Error, Result};
use crate::sample::Constants;
use crate::simulate::rng::substream;
use crate::simulate::summary::quantile;

pub const MIN_TRIALS: usize = 100;
pub const DEFAULT_SIZES: [usize; 4] = [64, 128, 256, 512];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CalibrationConfig {
    pub family: Family,
    pub delta: f64,
    pub trials: usize,
    pub seed: u64,
    pub sizes: Vec<usize>,
}

impl CalibrationConfig {
    pub fn new(family: Family, delta: f64, trials: usize, seed: u64) -> Self {
        CalibrationConfig {
            family,
            delta,
            trials,
            seed,
            sizes: DEFAULT_SIZES.to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SizeFit {
    pub n: usize,
    pub log_term: f64,
    /// Empirical `(1 - delta)`-quantile of the normalised deviation.
    pub quantile: f64,
    pub median: f64,
    pub max: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Calibration {
    pub kappa1: f64,
    pub per_size: Vec<SizeFit>,
    /// `eta = 2 kappa1`, `kappa = 4 kappa1`, `xi = max(eta^2, 1)`.
    pub suggested: Constants,
}

/// Maps a fitted `kappa1` to constants. The acceptance test compares two
/// interval counts, each off by up to one deviation, hence `eta = 2 kappa1`;
/// admissibility needs that margin twice over. An accepted count must also
/// exceed its own margin, which forces `count >~ eta^2 L`.
pub fn suggest_constants(kappa1: f64, delta: f64) -> Constants {
    let eta = 2.0 * kappa1;
    Constants {
        delta,
        kappa: 4.0 * kappa1,
        eta,
        xi: (eta * eta).max(1.0),
        ..Constants::default()
    }
}

/// Exact statistic for one sample drawn from `family` (unit scale, zero
/// mean).
fn normalised_deviation(values: &[f64], family: &Family) -> Result<f64> {
    let n = values.len();
    // cdf at every endpoint the oracle can visit, looked up by bit pattern
    let mut table: Vec<(f64, f64)> = values
        .iter()
        .flat_map(|&x| [x.next_down(), x, x.next_up()])
        .map(|x| (x, family.cdf(x)))
        .collect();
    table.sort_by(|a, b| a.0.total_cmp(&b.0));
    table.dedup_by(|a, b| a.0 == b.0);
    let cdf = |x: f64| -> f64 {
        if x == f64::NEG_INFINITY {
            return 0.0;
        }
        if x == f64::INFINITY {
            return 1.0;
        }
        match table.binary_search_by(|p| p.0.total_cmp(&x)) {
            Ok(i) => table[i].1,
            Err(_) => family.cdf(x),
        }
    };
    let expected = |a: f64, b: f64| n as f64 * (cdf(b) - cdf(a)).max(0.0);
    ratio_interval_deviation(values, expected, 2.0 * (n as f64).ln())
}

pub fn calibrate(config: &CalibrationConfig) -> Result<Calibration> {
    if config.trials < MIN_TRIALS {
        return Err(Error::InsufficientTrials {
            got: config.trials,
            min: MIN_TRIALS,
        });
    }
    if !(config.delta > 0.0 && config.delta < 1.0) {
        return Err(Error::param("delta", format!("{} is not in (0, 1)", config.delta)));
    }
    if config.sizes.is_empty() || config.sizes.iter().any(|&n| n < 2) {
        return Err(Error::param("sizes", "need sample sizes of at least 2"));
    }
    let mut per_size = Vec::with_capacity(config.sizes.len());
    for &n in &config.sizes {
        let mut stats = (0..config.trials as u64)
            .map(|t| {
                let mut rng = substream(config.seed, &[n as u64, t]);
                let values: Vec<f64> = (0..n).map(|_| config.family.draw(&mut rng)).collect();
                normalised_deviation(&values, &config.family)
            })
            .collect::<Result<Vec<f64>>>()?;
        stats.sort_by(f64::total_cmp);
        per_size.push(SizeFit {
            n,
            log_term: 2.0 * (n as f64).ln(),
            quantile: quantile(&stats, 1.0 - config.delta),
            median: quantile(&stats, 0.5),
            max: stats[stats.len() - 1],
        });
    }
    let kappa1 = per_size.iter().map(|f| f.quantile).fold(0.0, f64::max);
    Ok(Calibration {
        kappa1,
        suggested: suggest_constants(kappa1, config.delta),
        per_size,
    })
}
