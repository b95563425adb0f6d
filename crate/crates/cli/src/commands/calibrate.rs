use std::io::Write;

use hetmean::theory::{calibrate, Calibration, CalibrationConfig, Family};

use crate::error::Result;
use crate::CalibrateArgs;

pub fn fit(args: &CalibrateArgs) -> Result<Calibration> {
    let family: Family = args.family.parse()?;
    let cfg = CalibrationConfig::new(family, args.delta, args.trials, args.seed);
    Ok(calibrate(&cfg)?)
}

pub fn run(args: &CalibrateArgs, out: &mut dyn Write) -> Result<()> {
    let c = fit(args)?;
    if args.json {
        serde_json::to_writer(&mut *out, &c)?;
        writeln!(out)?;
        return Ok(());
    }
    writeln!(out, "family: {}", args.family)?;
    writeln!(out, "delta: {}, trials: {}, seed: {}", args.delta, args.trials, args.seed)?;
    writeln!(out, "{:>6} {:>10} {:>10} {:>10} {:>10}", "n", "log_term", "quantile", "median", "max")?;
    for f in &c.per_size {
        writeln!(
            out,
            "{:>6} {:>10.4} {:>10.4} {:>10.4} {:>10.4}",
            f.n, f.log_term, f.quantile, f.median, f.max
        )?;
    }
    writeln!(out, "kappa1: {:.4}", c.kappa1)?;
    let s = &c.suggested;
    writeln!(
        out,
        "suggested constants: kappa = {:.4}, eta = {:.4}, xi = {:.4}",
        s.kappa, s.eta, s.xi
    )?;
    writeln!(out, "advisory only: defaults are not changed")?;
    Ok(())
}
