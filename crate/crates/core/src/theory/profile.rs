use serde::Serialize;

use crate::error::{Error, Result};

/// Per-observation scales `sigma_1 <= ... <= sigma_n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SigmaProfile {
    sigmas: Vec<f64>,
    label: String,
}

impl SigmaProfile {
    /// Sorts `sigmas` non-decreasing; every entry must be positive and finite.
    pub fn new(mut sigmas: Vec<f64>, label: impl Into<String>) -> Result<Self> {
        if sigmas.is_empty() {
            return Err(Error::param("sigmas", "profile is empty"));
        }
        if let Some(bad) = sigmas.iter().find(|s| !(**s > 0.0 && s.is_finite())) {
            return Err(Error::param("sigmas", format!("{bad} is not a positive scale")));
        }
        sigmas.sort_by(f64::total_cmp);
        Ok(SigmaProfile {
            sigmas,
            label: label.into(),
        })
    }

    pub fn sigmas(&self) -> &[f64] {
        &self.sigmas
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.sigmas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigmas.is_empty()
    }

    /// `sigma_k`, 1-based.
    pub fn sigma(&self, k: usize) -> Option<f64> {
        k.checked_sub(1).and_then(|i| self.sigmas.get(i)).copied()
    }

    /// Every scale multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(
            self.sigmas.iter().map(|s| s * factor).collect(),
            self.label.clone(),
        )
    }

    /// `S_j = sum_{i >= j} 1 / sigma_i` for `j = 1..=n` (index `j - 1`).
    pub fn suffix_inverse_sums(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.sigmas.len()];
        let mut acc = 0.0;
        for (i, s) in self.sigmas.iter().enumerate().rev() {
            acc += 1.0 / s;
            out[i] = acc;
        }
        out
    }

    /// `max_{1 <= j <= k} (k + 1 - j) / S_j`, the rank term shared by the
    /// order-statistic bounds. `k` is clamped to `1..=n`.
    pub fn rank_ratio(&self, k: usize) -> f64 {
        let k = k.clamp(1, self.sigmas.len());
        let sums = self.suffix_inverse_sums();
        (1..=k)
            .map(|j| (k + 1 - j) as f64 / sums[j - 1])
            .fold(0.0, f64::max)
    }
}
