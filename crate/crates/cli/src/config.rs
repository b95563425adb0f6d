//! Experiment configuration files.
//!
//! ```toml
//! master_seed = 7
//! trials = 500
//! mu = 0.0                 # optional, default 0
//! family = "gaussian"      # or "laplace"
//! delta = 0.1              # or "inverse_n"
//! mode = "dyadic"          # or "pairwise"
//! n_grid = [256, 1024]     # optional scaling run
//!
//! [profile]
//! kind = "alpha_mixture"   # equal | two_level | alpha_mixture | quadratic | subset_of_signals | custom
//! n = 1024                 # optional when n_grid is given
//! params = { alpha = 0.25, c = 1.0 }
//! # sigmas = [...]         # custom only
//!
//! [constants]              # optional overrides
//! kappa = 4.0
//!
//! [output]
//! trials = "trials.csv"    # relative to the config file
//! summary = "summary.csv"
//! ```

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use hetmean::estimators::GridMode;
use hetmean::simulate::{make_profile, DeltaMode, ExperimentConfig, ProfileKind, ProfileSpec};
use hetmean::theory::Family;
use hetmean::Constants;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfigFile {
    pub master_seed: u64,
    pub trials: usize,
    #[serde(default)]
    pub mu: f64,
    #[serde(default = "default_family")]
    pub family: String,
    #[serde(default)]
    pub delta: Option<DeltaField>,
    #[serde(default)]
    pub mode: Option<String>,
    #[serde(default)]
    pub n_grid: Option<Vec<usize>>,
    pub profile: ProfileFile,
    #[serde(default)]
    pub constants: ConstantsFile,
    pub output: OutputFile,
}

fn default_family() -> String {
    "gaussian".to_string()
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum DeltaField {
    Value(f64),
    Named(String),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileFile {
    pub kind: String,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub params: BTreeMap<String, f64>,
    #[serde(default)]
    pub sigmas: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstantsFile {
    pub kappa: Option<f64>,
    pub eta: Option<f64>,
    pub xi: Option<f64>,
    pub beta: Option<f64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputFile {
    pub trials: PathBuf,
    pub summary: PathBuf,
}

/// A validated experiment plus resolved output locations.
#[derive(Debug, Clone)]
pub struct RunPlan {
    pub experiment: ExperimentConfig,
    pub trials_path: PathBuf,
    pub summary_path: PathBuf,
}

impl ConstantsFile {
    pub fn apply(&self, mut c: Constants) -> Constants {
        if let Some(v) = self.kappa {
            c.kappa = v;
        }
        if let Some(v) = self.eta {
            c.eta = v;
        }
        if let Some(v) = self.xi {
            c.xi = v;
        }
        if let Some(v) = self.beta {
            c.beta = v;
        }
        c
    }
}

pub fn load(path: &Path) -> Result<RunPlan> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    let file: RunConfigFile = toml::from_str(&text).map_err(|e| CliError::Config {
        path: path.to_path_buf(),
        message: e.to_string().trim().replace('\n', " "),
    })?;
    let base = path.parent().unwrap_or(Path::new("."));
    file.resolve(base).map_err(|message| CliError::Config {
        path: path.to_path_buf(),
        message,
    })
}

impl RunConfigFile {
    /// Checks every field and builds the experiment. Errors name the field.
    pub fn resolve(&self, base: &Path) -> std::result::Result<RunPlan, String> {
        let family: Family = self.family.parse().map_err(|e: hetmean::Error| e.to_string())?;
        let mode: GridMode = match &self.mode {
            Some(m) => m.parse().map_err(|e: hetmean::Error| e.to_string())?,
            None => GridMode::default(),
        };
        let delta = match &self.delta {
            None => DeltaMode::Fixed(Constants::default().delta),
            Some(DeltaField::Value(d)) => DeltaMode::Fixed(*d),
            Some(DeltaField::Named(s)) if s == "inverse_n" => DeltaMode::InverseN,
            Some(DeltaField::Named(s)) => {
                return Err(format!("delta: expected a number or \"inverse_n\", got \"{s}\""))
            }
        };
        if self.trials == 0 {
            return Err("trials: must be at least 1".into());
        }

        let kind: ProfileKind = self.profile.kind.parse().map_err(|e: hetmean::Error| e.to_string())?;
        let spec = if kind == ProfileKind::Custom {
            let sigmas = self
                .profile
                .sigmas
                .clone()
                .ok_or("profile.sigmas: required for kind \"custom\"")?;
            if self.n_grid.is_some() {
                return Err("n_grid: not supported for custom profiles".into());
            }
            if !self.profile.params.is_empty() {
                return Err("profile.params: custom profiles take no parameters".into());
            }
            if let Some(n) = self.profile.n {
                if n != sigmas.len() {
                    return Err(format!("profile.n: {n} but {} sigmas given", sigmas.len()));
                }
            }
            ProfileSpec::custom(sigmas)
        } else {
            if self.profile.sigmas.is_some() {
                return Err("profile.sigmas: only allowed for kind \"custom\"".into());
            }
            let n = match (self.profile.n, &self.n_grid) {
                (Some(n), _) => n,
                (None, Some(grid)) if !grid.is_empty() => grid[0],
                _ => return Err("profile.n: required unless n_grid is given".into()),
            };
            ProfileSpec {
                kind,
                params: self.profile.params.clone(),
                custom: None,
                n,
            }
        };
        if let Some(grid) = &self.n_grid {
            if grid.is_empty() || grid.contains(&0) {
                return Err("n_grid: must list positive sample sizes".into());
            }
        }

        let constants = self.constants.apply(Constants::default());
        let experiment = ExperimentConfig {
            profile: spec,
            family,
            mu: self.mu,
            delta,
            constants,
            mode,
            trials: self.trials,
            master_seed: self.master_seed,
            n_grid: self.n_grid.clone(),
        };
        for n in experiment.sizes() {
            make_profile(&experiment.profile.with_n(n)).map_err(|e| e.to_string())?;
            constants
                .with_delta(delta.resolve(n))
                .validate()
                .map_err(|e| format!("constants: {e}"))?;
        }
        experiment.validate().map_err(|e| e.to_string())?;
        Ok(RunPlan {
            experiment,
            trials_path: base.join(&self.output.trials),
            summary_path: base.join(&self.output.summary),
        })
    }
}
