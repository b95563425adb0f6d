//! Exact uniform deviation of interval counts from their expectations.
//!
//! For closed intervals `[a, b]` the supremum of `|#{X_i in [a,b]} - E|` is
//! attained either on a hull `[X_(i), X_(j)]` (fewest expected points for a
//! given set of observations) or on the open gap `(X_(i), X_(j))` between
//! two observations (most expected points for a given set), possibly
//! unbounded. Open ends are realised by stepping one ulp inwards, so point
//! masses in the expectation are handled without special cases.

use crate::error::{Error, Result};

/// Largest sample accepted by the brute-force oracle.
pub const MAX_ORACLE_N: usize = 512;

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptySample);
    }
    if n > MAX_ORACLE_N {
        return Err(Error::OracleTooLarge {
            n,
            max: MAX_ORACLE_N,
        });
    }
    Ok(())
}

/// Calls `visit(a, b, count)` for every extremal candidate interval.
fn for_each_candidate(values: &[f64], mut visit: impl FnMut(f64, f64, usize)) {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    // distinct values with the number of observations strictly below / at most
    let mut distinct: Vec<(f64, usize, usize)> = Vec::new();
    for (i, &x) in v.iter().enumerate() {
        match distinct.last_mut() {
            Some(last) if last.0 == x => last.2 = i + 1,
            _ => distinct.push((x, i, i + 1)),
        }
    }

    visit(f64::NEG_INFINITY, f64::INFINITY, n);
    for (j, &(uj, below_j, upto_j)) in distinct.iter().enumerate() {
        visit(f64::NEG_INFINITY, uj.next_down(), below_j);
        visit(uj.next_up(), f64::INFINITY, n - upto_j);
        for &(ui, below_i, upto_i) in &distinct[..=j] {
            visit(ui, uj, upto_j - below_i);
            let (a, b) = (ui.next_up(), uj.next_down());
            if ui < uj && a <= b {
                visit(a, b, below_j - upto_i);
            }
        }
    }
}

/// `sup_{a <= b} |#{X_i in [a, b]} - sum_i P(X_i in [a, b])|`, where
/// `interval_prob(i, a, b)` returns `P(X_i in [a, b])` for the `i`-th value.
pub fn uniform_interval_deviation(
    values: &[f64],
    interval_prob: impl Fn(usize, f64, f64) -> f64,
) -> Result<f64> {
    let n = values.len();
    uniform_interval_deviation_total(values, |a, b| (0..n).map(|i| interval_prob(i, a, b)).sum())
}

/// As [`uniform_interval_deviation`], with `expected_count(a, b)` giving the
/// summed probability directly. Use this when the observations share a
/// distribution.
pub fn uniform_interval_deviation_total(
    values: &[f64],
    expected_count: impl Fn(f64, f64) -> f64,
) -> Result<f64> {
    check_size(values.len())?;
    let mut sup = 0.0f64;
    for_each_candidate(values, |a, b, count| {
        sup = sup.max((count as f64 - expected_count(a, b)).abs());
    });
    Ok(sup)
}

/// Normalised deviation `sup |count - E| / (sqrt(E * log_term) + log_term)`.
///
/// The normaliser is increasing in `E`, so the supremum is still attained on
/// the same candidate set.
pub fn ratio_interval_deviation(
    values: &[f64],
    expected_count: impl Fn(f64, f64) -> f64,
    log_term: f64,
) -> Result<f64> {
    check_size(values.len())?;
    if !(log_term > 0.0) {
        return Err(Error::param("log_term", format!("{log_term} must be positive")));
    }
    let mut sup = 0.0f64;
    for_each_candidate(values, |a, b, count| {
        let e = expected_count(a, b).max(0.0);
        let ratio = (count as f64 - e).abs() / ((e * log_term).sqrt() + log_term);
        sup = sup.max(ratio);
    });
    Ok(sup)
}
