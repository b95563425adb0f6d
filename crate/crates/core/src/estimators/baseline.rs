use crate::error::{Error, Result};
use crate::sample::{Interval, Sample};

/// Arithmetic mean, summed in sorted order so the result does not depend on
/// the input order.
pub fn sample_mean(sample: &Sample) -> f64 {
    sample.values().iter().sum::<f64>() / sample.len() as f64
}

/// Inverse-variance weighted mean `sum(x / sigma^2) / sum(1 / sigma^2)`.
///
/// Needs the true per-observation scales, so it only serves as an oracle
/// baseline in simulations.
pub fn weighted_mean_oracle(values: &[f64], sigmas: &[f64]) -> Result<f64> {
    if values.len() != sigmas.len() {
        return Err(Error::LengthMismatch {
            left: values.len(),
            right: sigmas.len(),
        });
    }
    if values.is_empty() {
        return Err(Error::EmptySample);
    }
    if let Some(bad) = sigmas.iter().find(|s| !(**s > 0.0 && s.is_finite())) {
        return Err(Error::param("sigma", format!("{bad} must be positive")));
    }
    let mut pairs: Vec<(f64, f64)> = values.iter().copied().zip(sigmas.iter().copied()).collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    let (num, den) = pairs.iter().fold((0.0, 0.0), |(num, den), &(x, s)| {
        let w = 1.0 / (s * s);
        (num + w * x, den + w)
    });
    Ok(num / den)
}

/// Mean of the observations inside `interval` (closed).
pub fn modal_mean(sample: &Sample, interval: &Interval) -> Result<f64> {
    let v = sample.values();
    let lo = v.partition_point(|&y| y < interval.lo());
    let hi = v.partition_point(|&y| y <= interval.hi());
    if hi <= lo {
        return Err(Error::EmptyModalInterval);
    }
    Ok(v[lo..hi].iter().sum::<f64>() / (hi - lo) as f64)
}
