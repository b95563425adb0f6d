use crate::sample::{Interval, Sample};

/// The lower median: `X_(n/2)` for even `n`, `X_((n+1)/2)` for odd `n`.
pub fn sample_median(sample: &Sample) -> f64 {
    let n = sample.len();
    sample.values()[n.div_ceil(2) - 1]
}

/// Half-width, in order-statistic ranks, of the median interval.
pub fn median_interval_rank_radius(n: usize, alpha: f64) -> i64 {
    (alpha * (n as f64).sqrt()).ceil() as i64
}

/// The `alpha`-median interval `[X_(c-k), X_(c+k)]` with `c = floor(n/2)` and
/// `k = ceil(alpha * sqrt(n))`, indices clamped to `1..=n`.
pub fn median_interval(sample: &Sample, alpha: f64) -> Interval {
    let n = sample.len();
    let k = median_interval_rank_radius(n, alpha);
    let c = (n / 2) as i64;
    let lo = sample.order_statistic_clamped(c - k);
    let hi = sample.order_statistic_clamped(c + k);
    Interval::new(lo, hi).expect("order statistics are sorted")
}

/// `alpha = sqrt(2 log(6 / delta))`, the width that makes the median
/// interval a `1 - delta` confidence set.
pub fn median_interval_alpha(delta: f64) -> f64 {
    (2.0 * (6.0 / delta).ln()).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(v: &[f64]) -> Sample {
        Sample::ingest(v).unwrap()
    }

    #[test]
    fn median_conventions() {
        assert_eq!(sample_median(&sample(&[1.0, 2.0, 3.0, 4.0])), 2.0);
        assert_eq!(sample_median(&sample(&[1.0, 2.0, 3.0])), 2.0);
        assert_eq!(sample_median(&sample(&[5.0; 4])), 5.0);
        assert_eq!(sample_median(&sample(&[7.0])), 7.0);
    }

    #[test]
    fn median_interval_examples() {
        let one_to = |n: usize| sample(&(1..=n).map(|i| i as f64).collect::<Vec<_>>());
        let iv = median_interval(&one_to(16), 0.5);
        assert_eq!((iv.lo(), iv.hi()), (6.0, 10.0));

        let iv = median_interval(&sample(&[3.0; 10]), 1.0);
        assert_eq!((iv.lo(), iv.hi()), (3.0, 3.0));
        assert_eq!(iv.length(), 0.0);

        let iv = median_interval(&one_to(10), 10.0);
        assert_eq!((iv.lo(), iv.hi()), (1.0, 10.0));
    }

    #[test]
    fn median_interval_tiny_samples() {
        let iv = median_interval(&sample(&[4.0]), 1.0);
        assert_eq!((iv.lo(), iv.hi()), (4.0, 4.0));
        let iv = median_interval(&sample(&[-1.0, 0.0, 1.0]), 2.0);
        assert_eq!((iv.lo(), iv.hi()), (-1.0, 1.0));
    }

    #[test]
    fn alpha_value() {
        assert!((median_interval_alpha(0.1) - (2.0 * 60f64.ln()).sqrt()).abs() < 1e-15);
    }
}
