//! Estimation of the common mean of independent, heteroscedastic, symmetric
//! observations.
//!
//! The crate is organised around four layers:
//!
//! * [`sample`]: sorted samples, closed intervals and the tunable [`Constants`].
//! * [`estimators`]: the median interval, the modal (densest) interval, the
//!   empirical acceptance test and the adaptive estimator that combines them,
//!   plus the baselines. Every point estimator is also exposed through the
//!   [`estimators::Estimator`] trait and can be looked up by name in an
//!   [`estimators::EstimatorRegistry`].
//! * [`theory`]: oracle-side quantities that need the true scale profile
//!   (admissibility, the smallest admissible length, closed-form bounds) and
//!   an empirical uniform-deviation oracle used for constant calibration.
//! * [`simulate`]: scale-profile generators, synthetic data, a reproducible
//!   Monte Carlo runner and summary statistics.

pub mod error;
pub mod estimators;
pub mod sample;
pub mod simulate;
pub mod theory;

pub use error::{Error, Result};
pub use sample::{Constants, Interval, Sample};
