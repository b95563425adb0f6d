//! Point estimators of the common mean.
//!
//! The building blocks live in the submodules as free functions. On top of
//! them every point estimator implements [`Estimator`] so that the CLI and
//! the simulation harness can select estimators by name from an
//! [`EstimatorRegistry`].

pub mod adaptive;
pub mod baseline;
pub mod median;
pub mod modal;

use std::sync::OnceLock;

pub use adaptive::{
    accept, adaptive_estimate, candidate_lengths, AcceptDecision, AcceptedInterval, AdaptiveReport,
    GridMode,
};
pub use baseline::{modal_mean, sample_mean, weighted_mean_oracle};
pub use median::{median_interval, median_interval_alpha, sample_median};
pub use modal::{count_in, max_count_excluding, modal_interval, ModalResult};

use crate::error::{Error, Result};
use crate::sample::{Constants, Sample};

/// Side information only a simulation knows.
#[derive(Debug, Clone, Copy)]
pub struct Oracle<'a> {
    /// Observations in the same order as `sigmas`.
    pub values: &'a [f64],
    pub sigmas: &'a [f64],
    /// Smallest admissible half-length, if one exists.
    pub s_bar: Option<f64>,
}

/// Everything an estimator may look at. The adaptive report is computed at
/// most once and shared between estimators that need it.
pub struct EstimationContext<'a> {
    pub sample: &'a Sample,
    pub constants: Constants,
    pub mode: GridMode,
    pub oracle: Option<Oracle<'a>>,
    adaptive: OnceLock<AdaptiveReport>,
}

impl<'a> EstimationContext<'a> {
    pub fn new(sample: &'a Sample, constants: Constants, mode: GridMode) -> Self {
        EstimationContext {
            sample,
            constants,
            mode,
            oracle: None,
            adaptive: OnceLock::new(),
        }
    }

    pub fn with_oracle(mut self, oracle: Oracle<'a>) -> Self {
        self.oracle = Some(oracle);
        self
    }

    pub fn adaptive(&self) -> &AdaptiveReport {
        self.adaptive
            .get_or_init(|| adaptive_estimate(self.sample, &self.constants, self.mode))
    }
}

/// A named point estimator.
pub trait Estimator: Send + Sync {
    /// Registry key; also the CSV column suffix (`err_<name>`).
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    /// Whether the estimator reads [`EstimationContext::oracle`].
    fn uses_oracle(&self) -> bool {
        false
    }

    /// `Ok(None)` when the estimator is undefined for this input, e.g. no
    /// admissible half-length exists.
    fn estimate(&self, ctx: &EstimationContext<'_>) -> Result<Option<f64>>;
}

struct Mean;

impl Estimator for Mean {
    fn name(&self) -> &'static str {
        "mean"
    }
    fn description(&self) -> &'static str {
        "sample mean"
    }
    fn estimate(&self, ctx: &EstimationContext<'_>) -> Result<Option<f64>> {
        Ok(Some(sample_mean(ctx.sample)))
    }
}

struct Median;

impl Estimator for Median {
    fn name(&self) -> &'static str {
        "median"
    }
    fn description(&self) -> &'static str {
        "sample median (lower median for even n)"
    }
    fn estimate(&self, ctx: &EstimationContext<'_>) -> Result<Option<f64>> {
        Ok(Some(sample_median(ctx.sample)))
    }
}

struct OracleWeighted;

impl Estimator for OracleWeighted {
    fn name(&self) -> &'static str {
        "oracle"
    }
    fn description(&self) -> &'static str {
        "inverse-variance weighted mean with the true scales (oracle)"
    }
    fn uses_oracle(&self) -> bool {
        true
    }
    fn estimate(&self, ctx: &EstimationContext<'_>) -> Result<Option<f64>> {
        let oracle = ctx.oracle.ok_or(Error::OracleUnavailable("oracle"))?;
        weighted_mean_oracle(oracle.values, oracle.sigmas).map(Some)
    }
}

struct ModalAtSBar;

impl Estimator for ModalAtSBar {
    fn name(&self) -> &'static str {
        "modal_sbar"
    }
    fn description(&self) -> &'static str {
        "modal interval centre at the smallest admissible half-length (oracle)"
    }
    fn uses_oracle(&self) -> bool {
        true
    }
    fn estimate(&self, ctx: &EstimationContext<'_>) -> Result<Option<f64>> {
        let oracle = ctx.oracle.ok_or(Error::OracleUnavailable("modal_sbar"))?;
        Ok(oracle.s_bar.map(|s| modal_interval(ctx.sample, s).center))
    }
}

struct Adaptive;

impl Estimator for Adaptive {
    fn name(&self) -> &'static str {
        "adaptive"
    }
    fn description(&self) -> &'static str {
        "midpoint of the accepted modal intervals intersected with the median interval"
    }
    fn estimate(&self, ctx: &EstimationContext<'_>) -> Result<Option<f64>> {
        Ok(Some(ctx.adaptive().estimate))
    }
}

/// Averages the points inside the modal window of the smallest accepted
/// half-length; without acceptances, the points inside the median interval.
struct ModalMean;

impl Estimator for ModalMean {
    fn name(&self) -> &'static str {
        "modal_mean"
    }
    fn description(&self) -> &'static str {
        "mean of the observations in the tightest accepted modal window"
    }
    fn estimate(&self, ctx: &EstimationContext<'_>) -> Result<Option<f64>> {
        let report = ctx.adaptive();
        let window = report
            .accepted
            .last()
            .map(AcceptedInterval::modal_window)
            .unwrap_or(report.median_interval);
        modal_mean(ctx.sample, &window).map(Some)
    }
}

/// Estimators selectable by name, in registration order.
#[derive(Default)]
pub struct EstimatorRegistry {
    entries: Vec<Box<dyn Estimator>>,
}

impl EstimatorRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// mean, median, oracle, modal_sbar, adaptive, modal_mean.
    pub fn builtin() -> Self {
        let mut r = Self::new();
        r.register(Box::new(Mean));
        r.register(Box::new(Median));
        r.register(Box::new(OracleWeighted));
        r.register(Box::new(ModalAtSBar));
        r.register(Box::new(Adaptive));
        r.register(Box::new(ModalMean));
        r
    }

    /// Adds `estimator`, replacing any previous entry of the same name.
    pub fn register(&mut self, estimator: Box<dyn Estimator>) {
        match self.entries.iter().position(|e| e.name() == estimator.name()) {
            Some(i) => self.entries[i] = estimator,
            None => self.entries.push(estimator),
        }
    }

    pub fn get(&self, name: &str) -> Result<&dyn Estimator> {
        self.entries
            .iter()
            .find(|e| e.name() == name)
            .map(|e| e.as_ref())
            .ok_or_else(|| Error::UnknownEstimator(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Estimator> {
        self.entries.iter().map(|e| e.as_ref())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_names() {
        let r = EstimatorRegistry::builtin();
        assert_eq!(
            r.names(),
            ["mean", "median", "oracle", "modal_sbar", "adaptive", "modal_mean"]
        );
        assert!(r.get("adaptive").is_ok());
        assert_eq!(
            r.get("trimmed").err(),
            Some(Error::UnknownEstimator("trimmed".into()))
        );
    }

    #[test]
    fn oracle_estimators_need_oracle() {
        let s = Sample::ingest(&[1.0, 2.0, 3.0]).unwrap();
        let ctx = EstimationContext::new(&s, Constants::default(), GridMode::Dyadic);
        let r = EstimatorRegistry::builtin();
        for e in r.iter() {
            let got = e.estimate(&ctx);
            if e.uses_oracle() {
                assert!(matches!(got, Err(Error::OracleUnavailable(_))));
            } else {
                assert_eq!(got.unwrap(), Some(2.0), "{}", e.name());
            }
        }
        let values = [3.0, 1.0, 2.0];
        let sigmas = [1.0, 1.0, 1.0];
        let ctx = ctx.with_oracle(Oracle {
            values: &values,
            sigmas: &sigmas,
            s_bar: None,
        });
        assert_eq!(r.get("oracle").unwrap().estimate(&ctx).unwrap(), Some(2.0));
        assert_eq!(r.get("modal_sbar").unwrap().estimate(&ctx).unwrap(), None);
    }

    struct Constant;
    impl Estimator for Constant {
        fn name(&self) -> &'static str {
            "median"
        }
        fn description(&self) -> &'static str {
            "always zero"
        }
        fn estimate(&self, _: &EstimationContext<'_>) -> Result<Option<f64>> {
            Ok(Some(0.0))
        }
    }

    #[test]
    fn register_replaces_by_name() {
        let mut r = EstimatorRegistry::builtin();
        r.register(Box::new(Constant));
        assert_eq!(r.len(), 6);
        let s = Sample::ingest(&[5.0]).unwrap();
        let ctx = EstimationContext::new(&s, Constants::default(), GridMode::Dyadic);
        assert_eq!(r.get("median").unwrap().estimate(&ctx).unwrap(), Some(0.0));
    }
}
