//! Densest-interval search on a sorted sample.
//!
//! `D_s(x)` counts the observations in `[x - s, x + s]`. It is piecewise
//! constant in `x`, so its maximum is attained by some window of consecutive
//! order statistics `X_(i) ..= X_(j)` of width at most `2s`; a two-pointer
//! scan over the sorted values enumerates all such maximal windows in O(n).

use serde::Serialize;

use crate::sample::Sample;

/// Centre and count of a densest interval of half-length `s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModalResult {
    pub center: f64,
    pub count: usize,
    /// 1-based index of the leftmost order statistic in the window.
    pub window_lo_index: usize,
    /// 1-based index of the rightmost order statistic in the window.
    pub window_hi_index: usize,
}

/// Number of observations in `[x - s, x + s]`, O(log n).
pub fn count_in(sample: &Sample, x: f64, s: f64) -> usize {
    let v = sample.values();
    let lo = v.partition_point(|&y| y < x - s);
    let hi = v.partition_point(|&y| y <= x + s);
    hi.saturating_sub(lo)
}

/// For each start `i`, the largest `j >= i` with `v[j] - v[i] <= 2s` (0-based).
fn window_ends(v: &[f64], s: f64) -> Vec<usize> {
    let width = 2.0 * s;
    let mut ends = Vec::with_capacity(v.len());
    let mut j = 0;
    for i in 0..v.len() {
        j = j.max(i);
        while j + 1 < v.len() && v[j + 1] - v[i] <= width {
            j += 1;
        }
        ends.push(j);
    }
    ends
}

/// A maximiser of `D_s(x)`.
///
/// Among windows with the maximal count the narrowest wins, then the
/// leftmost; the returned centre is that window's midpoint.
pub fn modal_interval(sample: &Sample, s: f64) -> ModalResult {
    let v = sample.values();
    let ends = window_ends(v, s);
    let mut best = (0usize, f64::INFINITY, 0usize);
    for (i, &j) in ends.iter().enumerate() {
        let count = j - i + 1;
        let width = v[j] - v[i];
        if count > best.0 || (count == best.0 && width < best.1) {
            best = (count, width, i);
        }
    }
    let (count, _, i) = best;
    let j = ends[i];
    ModalResult {
        center: (v[i] + v[j]) / 2.0,
        count,
        window_lo_index: i + 1,
        window_hi_index: j + 1,
    }
}

/// `max D_s(x)` over all `x` with `|x - center| >= exclusion_radius`; 0 if
/// no window can be placed there.
pub fn max_count_excluding(sample: &Sample, s: f64, center: f64, exclusion_radius: f64) -> usize {
    let v = sample.values();
    let ends = window_ends(v, s);
    let mut best = 0;

    // Left side: a window X_(i)..X_(j) fits iff X_(j) <= center - r + s.
    let left_limit = center - exclusion_radius + s;
    let p = v.partition_point(|&y| y <= left_limit);
    for (i, &end) in ends[..p].iter().enumerate() {
        let j = end.min(p - 1);
        best = best.max(j - i + 1);
    }

    // Right side: it fits iff X_(i) >= center + r - s.
    let right_limit = center + exclusion_radius - s;
    let q = v.partition_point(|&y| y < right_limit);
    for (i, &j) in ends.iter().enumerate().skip(q) {
        best = best.max(j - i + 1);
    }
    best
}
