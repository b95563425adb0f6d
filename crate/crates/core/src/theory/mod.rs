//! Oracle-side quantities that need the scale profile: admissibility, the
//! optimal half-length, closed-form error bounds, and the uniform deviation
//! oracle used to calibrate the estimator constants.

pub mod admissibility;
pub mod bounds;
pub mod calibrate;
pub mod deviation;
pub mod family;
pub mod profile;

pub use admissibility::{
    expected_count, is_admissible, is_admissible_observed, m_of_s, s_bar, Criterion,
};
pub use bounds::{
    adaptive_bound, check_median_precondition, chierichetti_style_bound, gordon_moment_bound,
    median_interval_bound, median_rank_span, xia_bound, AdaptiveBound, XiaBound,
};
pub use calibrate::{calibrate, suggest_constants, Calibration, CalibrationConfig, SizeFit};
pub use deviation::{
    ratio_interval_deviation, uniform_interval_deviation, uniform_interval_deviation_total,
    MAX_ORACLE_N,
};
pub use family::{Family, FamilyKind};
pub use profile::SigmaProfile;
