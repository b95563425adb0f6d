//! Scale profiles, synthetic data and the Monte Carlo harness.

pub mod experiment;
pub mod generate;
pub mod profile;
pub mod rng;
pub mod summary;

pub use experiment::{
    run_at_size, run_experiment, run_scaling, trial_seed, DeltaMode, ExperimentConfig,
    ExperimentRun, TrialRecord, TrialSetup,
};
pub use generate::{draw_in_profile_order, gen_labelled, gen_sample, Labelled};
pub use profile::{make_profile, ProfileKind, ProfileSpec};
pub use summary::{log_log_slope, quantile, summarize, summarize_scaling, ScalingSummary, Summary};
