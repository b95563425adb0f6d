//! Reproducible Monte Carlo trials.

use rayon::prelude::*;
use serde::Serialize;

use super::generate::gen_labelled;
use super::profile::{make_profile, ProfileSpec};
use super::rng::{rng_from_seed, substream_seed};
use crate::error::{Error, Result};
use crate::estimators::{
    modal_interval, EstimationContext, EstimatorRegistry, GridMode, Oracle,
};
use crate::sample::{Constants, Sample};
use crate::theory::{s_bar, Criterion, Family, SigmaProfile};

/// How the failure probability is chosen for each sample size.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaMode {
    Fixed(f64),
    /// `delta = 1 / n`.
    InverseN,
}

impl DeltaMode {
    pub fn resolve(&self, n: usize) -> f64 {
        match *self {
            DeltaMode::Fixed(d) => d,
            DeltaMode::InverseN => 1.0 / n as f64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub profile: ProfileSpec,
    pub family: Family,
    pub mu: f64,
    pub delta: DeltaMode,
    /// `constants.delta` is overwritten by the resolved `delta` for each `n`.
    pub constants: Constants,
    pub mode: GridMode,
    pub trials: usize,
    pub master_seed: u64,
    pub n_grid: Option<Vec<usize>>,
}

impl ExperimentConfig {
    pub fn new(profile: ProfileSpec, family: Family, trials: usize, master_seed: u64) -> Self {
        ExperimentConfig {
            profile,
            family,
            mu: 0.0,
            delta: DeltaMode::Fixed(Constants::default().delta),
            constants: Constants::default(),
            mode: GridMode::default(),
            trials,
            master_seed,
            n_grid: None,
        }
    }

    /// Sample sizes to run: the grid if present, otherwise `profile.n`.
    pub fn sizes(&self) -> Vec<usize> {
        match &self.n_grid {
            Some(grid) => grid.clone(),
            None => vec![self.profile.n],
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::param("trials", "must be at least 1"));
        }
        if !self.mu.is_finite() {
            return Err(Error::param("mu", "must be finite"));
        }
        if let Some(grid) = &self.n_grid {
            if grid.is_empty() || grid.contains(&0) {
                return Err(Error::param("n_grid", "must be a non-empty list of positive sizes"));
            }
        }
        for n in self.sizes() {
            self.constants.with_delta(self.delta.resolve(n)).validate()?;
            make_profile(&self.profile.with_n(n))?;
        }
        Ok(())
    }
}

/// One trial's errors `|estimate - mu|` and diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRecord {
    pub trial_index: u64,
    pub seed: u64,
    /// In registry order; `None` where the estimator is undefined.
    pub errors: Vec<(String, Option<f64>)>,
    pub covered_by_median_interval: bool,
    /// `None` when no admissible half-length exists.
    pub modal_within_4s: Option<bool>,
    pub accepted_count: usize,
}

impl TrialRecord {
    pub fn error(&self, estimator: &str) -> Option<f64> {
        self.errors
            .iter()
            .find(|(name, _)| name == estimator)
            .and_then(|(_, e)| *e)
    }
}

/// All trials at one sample size.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentRun {
    pub n: usize,
    pub delta: f64,
    pub s_bar: Option<f64>,
    pub records: Vec<TrialRecord>,
}

/// Seed of trial `t` at sample size `n`.
pub fn trial_seed(master_seed: u64, n: usize, t: u64) -> u64 {
    substream_seed(master_seed, &[n as u64, t])
}

/// Everything fixed across the trials at one sample size.
#[derive(Debug, Clone)]
pub struct TrialSetup {
    pub mu: f64,
    pub profile: SigmaProfile,
    pub family: Family,
    pub constants: Constants,
    pub mode: GridMode,
    pub s_bar: Option<f64>,
}

impl TrialSetup {
    /// Generates one sample from `seed` and evaluates every estimator.
    pub fn run(&self, seed: u64, trial_index: u64, registry: &EstimatorRegistry) -> Result<TrialRecord> {
        let mu = self.mu;
        let mut rng = rng_from_seed(seed);
        let data = gen_labelled(&mut rng, mu, &self.profile, &self.family);
        let sample = Sample::ingest(&data.values)?;
        let ctx = EstimationContext::new(&sample, self.constants, self.mode).with_oracle(Oracle {
            values: &data.values,
            sigmas: &data.sigmas,
            s_bar: self.s_bar,
        });
        let mut errors = Vec::with_capacity(registry.len());
        for est in registry.iter() {
            let e = est.estimate(&ctx)?.map(|x| (x - mu).abs());
            errors.push((est.name().to_string(), e));
        }
        let report = ctx.adaptive();
        let modal_within_4s = self
            .s_bar
            .map(|s| (modal_interval(&sample, s).center - mu).abs() <= 4.0 * s);
        Ok(TrialRecord {
            trial_index,
            seed,
            errors,
            covered_by_median_interval: report.median_interval.contains(mu),
            modal_within_4s,
            accepted_count: report.accepted.len(),
        })
    }
}

/// Runs every trial at sample size `n` with the given estimators.
pub fn run_at_size(
    config: &ExperimentConfig,
    n: usize,
    registry: &EstimatorRegistry,
) -> Result<ExperimentRun> {
    let profile = make_profile(&config.profile.with_n(n))?;
    let delta = config.delta.resolve(n);
    let constants = config.constants.with_delta(delta);
    constants.validate()?;
    let sb = s_bar(&profile, &config.family, delta, constants.kappa, Criterion::Exact);
    let setup = TrialSetup {
        mu: config.mu,
        profile,
        family: config.family,
        constants,
        mode: config.mode,
        s_bar: sb,
    };
    let records = (0..config.trials as u64)
        .into_par_iter()
        .map(|t| setup.run(trial_seed(config.master_seed, n, t), t, registry))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExperimentRun {
        n,
        delta,
        s_bar: sb,
        records,
    })
}

/// Trials at `profile.n` with the built-in estimators.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Vec<TrialRecord>> {
    config.validate()?;
    Ok(run_at_size(config, config.profile.n, &EstimatorRegistry::builtin())?.records)
}

/// One [`ExperimentRun`] per entry of [`ExperimentConfig::sizes`].
pub fn run_scaling(
    config: &ExperimentConfig,
    registry: &EstimatorRegistry,
) -> Result<Vec<ExperimentRun>> {
    config.validate()?;
    config
        .sizes()
        .into_iter()
        .map(|n| run_at_size(config, n, registry))
        .collect()
}
