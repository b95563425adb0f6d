use std::io::Write;
use std::path::{Path, PathBuf};

use hetmean::estimators::EstimatorRegistry;
use hetmean::simulate::{run_scaling, summarize_scaling};

use crate::config;
use crate::csvio;
use crate::error::Result;
use crate::SimulateArgs;

/// Trial file for one size of a scaling run: `trials.csv` -> `trials_n256.csv`.
pub fn trials_path_for(base: &Path, n: usize) -> PathBuf {
    let stem = base.file_stem().and_then(|s| s.to_str()).unwrap_or("trials");
    let name = match base.extension().and_then(|e| e.to_str()) {
        Some(ext) => format!("{stem}_n{n}.{ext}"),
        None => format!("{stem}_n{n}"),
    };
    base.with_file_name(name)
}

pub fn run(args: &SimulateArgs, out: &mut dyn Write) -> Result<()> {
    let plan = config::load(&args.config)?;
    let exp = &plan.experiment;
    let runs = run_scaling(exp, &EstimatorRegistry::builtin())?;
    let scaling = summarize_scaling(&runs)?;
    let grid = exp.n_grid.is_some();

    for run in &runs {
        let path = if grid {
            trials_path_for(&plan.trials_path, run.n)
        } else {
            plan.trials_path.clone()
        };
        csvio::write_trials(&path, &run.records)?;
        writeln!(out, "wrote {}", path.display())?;
    }
    let slopes = grid.then_some(scaling.slopes.as_slice());
    csvio::write_summary(&plan.summary_path, &scaling.runs, slopes)?;
    writeln!(out, "wrote {}", plan.summary_path.display())?;

    for (run, (n, s)) in runs.iter().zip(&scaling.runs) {
        let sb = run.s_bar.map_or("none".to_string(), |v| format!("{v}"));
        writeln!(
            out,
            "n = {n}, delta = {}, s_bar = {sb}, coverage = {:.4}",
            run.delta, s.coverage
        )?;
        for e in &s.errors {
            let med = e.median.map_or("-".to_string(), |m| format!("{m:.6}"));
            writeln!(out, "  {:<12} median error {med}", e.estimator)?;
        }
    }
    if grid {
        for (name, slope) in &scaling.slopes {
            let v = slope.map_or("-".to_string(), |m| format!("{m:.4}"));
            writeln!(out, "slope {name}: {v}")?;
        }
    }
    Ok(())
}
