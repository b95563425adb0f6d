//! Command-line front end: estimate from a data file, run simulation
//! experiments, evaluate oracle bounds and calibrate constants.

pub mod commands;
pub mod config;
pub mod csvio;
pub mod error;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use error::{CliError, Result};

#[derive(Debug, Parser)]
#[command(name = "hetmean", version, about = "Mean estimation from heteroscedastic samples")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Estimate the mean of the numbers in a file (one per line).
    Estimate(EstimateArgs),
    /// Run a Monte Carlo experiment described by a TOML file.
    Simulate(SimulateArgs),
    /// Evaluate the oracle bounds for a scale profile.
    Bounds(BoundsArgs),
    /// Fit the deviation constant on reference samples.
    Calibrate(CalibrateArgs),
}

#[derive(Debug, Args)]
pub struct ConstantArgs {
    #[arg(long)]
    pub kappa: Option<f64>,
    #[arg(long)]
    pub eta: Option<f64>,
    #[arg(long)]
    pub xi: Option<f64>,
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    pub input: PathBuf,
    #[arg(long, default_value_t = 0.1)]
    pub delta: f64,
    /// Candidate half-lengths: dyadic or pairwise.
    #[arg(long, default_value = "dyadic")]
    pub mode: String,
    #[command(flatten)]
    pub constants: ConstantArgs,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    pub config: PathBuf,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// equal, two_level, alpha_mixture, quadratic, subset_of_signals or custom.
    #[arg(long)]
    pub profile: String,
    #[arg(long)]
    pub n: Option<usize>,
    /// Profile parameter as name=value; repeatable.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    pub params: Vec<String>,
    /// Comma-separated scales for a custom profile.
    #[arg(long, value_delimiter = ',')]
    pub sigmas: Option<Vec<f64>>,
    #[arg(long, default_value_t = 0.1)]
    pub delta: f64,
    #[arg(long, default_value = "gaussian")]
    pub family: String,
    #[arg(long)]
    pub kappa: Option<f64>,
    /// Rank for the moment bound (default ceil(n/2)).
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 1.0)]
    pub p: f64,
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct CalibrateArgs {
    #[arg(long, default_value = "gaussian")]
    pub family: String,
    #[arg(long, default_value_t = 0.1)]
    pub delta: f64,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Estimate(a) => commands::estimate::run(a, out),
        Command::Simulate(a) => commands::simulate::run(a, out),
        Command::Bounds(a) => commands::bounds::run(a, out),
        Command::Calibrate(a) => commands::calibrate::run(a, out),
    }
}
