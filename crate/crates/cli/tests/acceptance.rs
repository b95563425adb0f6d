//! Acceptance criteria. Each criterion prints one `[PASS]` or `[FAIL]`
//! line; the process exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use clap::Parser;
use rand::seq::SliceRandom;
use rand::Rng;

use hetmean::estimators::{
    adaptive_estimate, count_in, median_interval, median_interval_alpha, modal_interval,
    sample_mean, sample_median, EstimatorRegistry, GridMode,
};
use hetmean::simulate::rng::substream;
use hetmean::simulate::{
    make_profile, run_at_size, run_scaling, summarize, summarize_scaling, DeltaMode,
    ExperimentConfig, ProfileKind, ProfileSpec, TrialRecord,
};
use hetmean::theory::{gordon_moment_bound, median_interval_bound, Family};
use hetmean::{Constants, Sample};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn config(spec: ProfileSpec, trials: usize, seed: u64) -> ExperimentConfig {
    ExperimentConfig::new(spec, Family::gaussian(), trials, seed)
}

fn equal_1024_records(trials: usize) -> (Vec<TrialRecord>, Option<f64>) {
    let cfg = config(ProfileSpec::new(ProfileKind::Equal, 1024).param("sigma", 1.0), trials, 101);
    let run = run_at_size(&cfg, 1024, &EstimatorRegistry::builtin()).unwrap();
    (run.records, run.s_bar)
}

fn median_coverage() -> Outcome {
    let start = Instant::now();
    let (records, _) = equal_1024_records(2000);
    let s = summarize(&records).unwrap();
    let elapsed = start.elapsed();
    let pass = s.coverage >= 0.88 && elapsed < Duration::from_secs(30);
    outcome(
        pass,
        format!("coverage {:.4} (>= 0.88), {:.1} s (< 30 s)", s.coverage, elapsed.as_secs_f64()),
    )
}

fn modal_containment() -> Outcome {
    let (records, s_bar) = equal_1024_records(2000);
    let s = summarize(&records).unwrap();
    match (s_bar, s.modal_within_4s) {
        (Some(sb), Some(rate)) => outcome(
            rate >= 0.88,
            format!("s_bar = {sb}, fraction within 4 s_bar {rate:.4} (>= 0.88)"),
        ),
        _ => outcome(false, "no admissible half-length"),
    }
}

/// Largest window count over centres at midpoints of point pairs.
fn brute_force_modal_count(values: &[f64], s: f64) -> usize {
    let mut best = 0;
    for a in values {
        for b in values {
            let c = (a + b) / 2.0;
            let count = values.iter().filter(|&&x| (x - c).abs() <= s).count();
            best = best.max(count);
        }
    }
    best
}

fn modal_brute_force() -> Outcome {
    let mut rng = substream(303, &[]);
    let mut mismatches = 0;
    for i in 0..500 {
        let n = rng.random_range(1..=64);
        let (values, s): (Vec<f64>, f64) = if i % 2 == 0 {
            // dyadic grid values: all arithmetic exact, many ties
            let v = (0..n).map(|_| rng.random_range(-40..=40) as f64 / 4.0).collect();
            (v, rng.random_range(0..=40) as f64 / 8.0)
        } else {
            let v = (0..n).map(|_| rng.random_range(-10.0..10.0)).collect();
            (v, rng.random_range(0.0..4.0))
        };
        let sample = Sample::ingest(&values).unwrap();
        let got = modal_interval(&sample, s);
        let want = brute_force_modal_count(&values, s);
        if got.count != want || count_in(&sample, got.center, s) != got.count {
            mismatches += 1;
        }
    }
    outcome(mismatches == 0, format!("{mismatches} mismatches in 500 instances"))
}

const GRID: [usize; 4] = [256, 1024, 4096, 16384];

fn adaptive_slope(spec: ProfileSpec, trials: usize, seed: u64) -> (Option<f64>, Vec<(usize, f64)>) {
    let mut cfg = config(spec, trials, seed);
    cfg.n_grid = Some(GRID.to_vec());
    let runs = run_scaling(&cfg, &EstimatorRegistry::builtin()).unwrap();
    let sum = summarize_scaling(&runs).unwrap();
    let slope = sum
        .slopes
        .iter()
        .find(|(name, _)| name == "adaptive")
        .and_then(|(_, s)| *s);
    let medians = sum
        .runs
        .iter()
        .map(|(n, s)| (*n, s.median_error("adaptive").unwrap()))
        .collect();
    (slope, medians)
}

fn fmt_medians(m: &[(usize, f64)]) -> String {
    m.iter()
        .map(|(n, e)| format!("{n}: {e:.4}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn equal_scaling() -> Outcome {
    let start = Instant::now();
    let (slope, medians) = adaptive_slope(ProfileSpec::new(ProfileKind::Equal, 256), 500, 404);
    let elapsed = start.elapsed();
    let slope = slope.unwrap_or(f64::NAN);
    outcome(
        (-0.65..=-0.35).contains(&slope) && elapsed < Duration::from_secs(300),
        format!(
            "slope {slope:.4} in [-0.65, -0.35], {:.1} s (< 300 s); median errors {}",
            elapsed.as_secs_f64(),
            fmt_medians(&medians)
        ),
    )
}

fn alpha_quarter() -> Outcome {
    let spec = ProfileSpec::new(ProfileKind::AlphaMixture, 256)
        .param("c", 1.0)
        .param("alpha", 0.25);
    let (slope, medians) = adaptive_slope(spec, 500, 505);
    let slope = slope.unwrap_or(f64::NAN);
    outcome(
        (-0.40..=-0.10).contains(&slope),
        format!("slope {slope:.4} in [-0.40, -0.10]; median errors {}", fmt_medians(&medians)),
    )
}

fn alpha_three_halves() -> Outcome {
    let spec = ProfileSpec::new(ProfileKind::AlphaMixture, 1024)
        .param("c", 20.0)
        .param("alpha", 1.5);
    let mut cfg = config(spec, 500, 606);
    cfg.n_grid = Some(vec![1024, 16384]);
    let runs = run_scaling(&cfg, &EstimatorRegistry::builtin()).unwrap();
    let sum = summarize_scaling(&runs).unwrap();
    let small = sum.runs[0].1.median_error("adaptive").unwrap();
    let large = sum.runs[1].1.median_error("adaptive").unwrap();
    let ratio = large / small;
    outcome(
        ratio <= 3.0,
        format!("median error {small:.4} (n = 1024), {large:.4} (n = 16384), ratio {ratio:.3} (<= 3)"),
    )
}

fn quadratic() -> Outcome {
    let n = 4096;
    let mut cfg = config(ProfileSpec::new(ProfileKind::Quadratic, n).param("c", 1.0), 300, 707);
    cfg.delta = DeltaMode::InverseN;
    let run = run_at_size(&cfg, n, &EstimatorRegistry::builtin()).unwrap();
    let s = summarize(&run.records).unwrap();
    let adaptive = s.median_error("adaptive").unwrap();
    let median = s.median_error("median").unwrap();
    let cap = 20.0 * (n as f64).ln();
    let pass = adaptive <= median / 5.0 && adaptive <= cap;
    outcome(
        pass,
        format!(
            "median adaptive error {adaptive:.4}, median sample-median error {median:.4}; \
             need adaptive <= {:.4} (median / 5) and <= {cap:.1} (20 log n)",
            median / 5.0
        ),
    )
}

fn subset_of_signals() -> Outcome {
    let n = 4096;
    let spec = ProfileSpec::new(ProfileKind::SubsetOfSignals, n);
    let profile = make_profile(&spec).unwrap();
    let cfg = config(spec, 300, 808);
    let run = run_at_size(&cfg, n, &EstimatorRegistry::builtin()).unwrap();
    let s = summarize(&run.records).unwrap();
    let median = s.median_error("median").unwrap();
    let family = Family::gaussian();
    let bound = median_interval_bound(&profile, Constants::default().delta, family.beta).unwrap();
    outcome(
        median <= bound,
        format!("median sample-median error {median:.4} <= bound {bound:.4}"),
    )
}

fn gordon() -> Outcome {
    let family = Family::gaussian();
    let beta = (2.0 / std::f64::consts::PI).sqrt();
    let profile = hetmean::theory::SigmaProfile::new(vec![1.0; 50], "ones").unwrap();
    let trials = 100_000;
    let mut rng = substream(909, &[]);
    let ks = [5usize, 10, 25];
    let mut sums = [[0.0f64; 2]; 3];
    let mut abs = vec![0.0; 50];
    for _ in 0..trials {
        for a in abs.iter_mut() {
            *a = family.draw(&mut rng).abs();
        }
        abs.sort_by(f64::total_cmp);
        for (i, &k) in ks.iter().enumerate() {
            let x = abs[k - 1];
            sums[i][0] += x;
            sums[i][1] += x * x;
        }
    }
    let mut cells = Vec::new();
    let mut pass = true;
    for (i, &k) in ks.iter().enumerate() {
        for (j, p) in [1.0f64, 2.0].into_iter().enumerate() {
            let empirical = (sums[i][j] / trials as f64).powf(1.0 / p);
            let bound = gordon_moment_bound(&profile, k, p, beta).unwrap();
            pass &= empirical <= bound;
            cells.push(format!("k={k},p={p}: {empirical:.4} <= {bound:.4}"));
        }
    }
    outcome(pass, cells.join("; "))
}

fn phi_lower_bound() -> Outcome {
    let floor = 2.0 / (3.0 * 3f64.sqrt());
    let gaussian = Family::gaussian().phi_mass(1.0);
    let laplace = Family::laplace().phi_mass(1.0);
    let want_gaussian = 0.682_689_492_137_085_9;
    let want_laplace = 1.0 - (-std::f64::consts::SQRT_2).exp();
    let pass = gaussian >= 0.384_900_1
        && laplace >= 0.384_900_1
        && gaussian >= floor
        && laplace >= floor
        && (gaussian - want_gaussian).abs() <= 1e-12
        && (laplace - want_laplace).abs() <= 1e-12;
    outcome(
        pass,
        format!("gaussian {gaussian:.15}, laplace {laplace:.15}, floor {floor:.10}"),
    )
}

fn rel_close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
}

fn equivariance() -> Outcome {
    let mut rng = substream(1111, &[]);
    let c = Constants::default();
    let mut failures = Vec::new();
    for inst in 0..200 {
        let n = rng.random_range(5..=300);
        let values: Vec<f64> = (0..n)
            .map(|i| {
                let scale = if i % 3 == 0 { 0.1 } else { 5.0 };
                rng.random_range(-1.0..1.0) * scale + 0.5
            })
            .collect();
        let t = rng.random_range(-100.0..100.0);
        let lambda = rng.random_range(0.1..10.0);
        let s = rng.random_range(0.01..2.0);
        let alpha = median_interval_alpha(c.delta);

        let base = Sample::ingest(&values).unwrap();
        let shifted = Sample::ingest(&values.iter().map(|x| x + t).collect::<Vec<_>>()).unwrap();
        let scaled = Sample::ingest(&values.iter().map(|x| x * lambda).collect::<Vec<_>>()).unwrap();
        let mut perm = values.clone();
        perm.shuffle(&mut rng);
        let permuted = Sample::ingest(&perm).unwrap();

        let a0 = adaptive_estimate(&base, &c, GridMode::Dyadic);
        let at = adaptive_estimate(&shifted, &c, GridMode::Dyadic);
        let al = adaptive_estimate(&scaled, &c, GridMode::Dyadic);
        let ap = adaptive_estimate(&permuted, &c, GridMode::Dyadic);
        let m0 = modal_interval(&base, s);
        let mt = modal_interval(&shifted, s);
        let ml = modal_interval(&scaled, s * lambda);
        let i0 = median_interval(&base, alpha);
        let il = median_interval(&scaled, alpha);

        let checks = [
            ("translation: median", rel_close(sample_median(&shifted), sample_median(&base) + t)),
            ("translation: mean", rel_close(sample_mean(&shifted), sample_mean(&base) + t)),
            ("translation: modal centre", rel_close(mt.center, m0.center + t) && mt.count == m0.count),
            ("translation: adaptive", rel_close(at.estimate, a0.estimate + t)),
            ("translation: acceptances", at.accepted.len() == a0.accepted.len()),
            ("scale: median", rel_close(sample_median(&scaled), lambda * sample_median(&base))),
            ("scale: median interval", rel_close(il.lo(), lambda * i0.lo()) && rel_close(il.hi(), lambda * i0.hi())),
            ("scale: modal centre", rel_close(ml.center, lambda * m0.center) && ml.count == m0.count),
            ("scale: adaptive", rel_close(al.estimate, lambda * a0.estimate)),
            ("scale: acceptances", al.accepted.len() == a0.accepted.len()),
            ("permutation: adaptive", ap == a0),
            ("permutation: modal", modal_interval(&permuted, s) == m0),
        ];
        for (name, ok) in checks {
            if !ok {
                failures.push(format!("instance {inst}: {name}"));
            }
        }
    }
    let detail = if failures.is_empty() {
        "200 instances, 12 properties each".to_string()
    } else {
        format!("{} failures, first: {}", failures.len(), failures[0])
    };
    outcome(failures.is_empty(), detail)
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(
        &cfg,
        r#"master_seed = 1212
trials = 50
delta = "inverse_n"
n_grid = [128, 512]

[profile]
kind = "two_level"
params = { sigma = 1.0, sigma_prime = 30.0, m_scale = 1.0 }

[output]
trials = "trials.csv"
summary = "summary.csv"
"#,
    )
    .unwrap();
    let files = ["trials_n128.csv", "trials_n512.csv", "summary.csv"];
    let mut snapshots = Vec::new();
    for _ in 0..2 {
        let cli = hetmean_cli::Cli::try_parse_from(["hetmean", "simulate", cfg.to_str().unwrap()])
            .unwrap();
        hetmean_cli::run(&cli, &mut std::io::sink()).unwrap();
        let bytes: Vec<Vec<u8>> = files
            .iter()
            .map(|f| std::fs::read(dir.path().join(f)).unwrap())
            .collect();
        snapshots.push(bytes);
        for f in files {
            std::fs::remove_file(dir.path().join(f)).unwrap();
        }
    }
    let same = snapshots[0] == snapshots[1];
    let size: usize = snapshots[0].iter().map(Vec::len).sum();
    outcome(same, format!("{} files, {size} bytes, identical: {same}", files.len()))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("median-interval coverage", median_coverage),
        ("modal containment at s_bar", modal_containment),
        ("modal window vs brute force", modal_brute_force),
        ("equal-scale error slope", equal_scaling),
        ("alpha-mixture 0.25 slope", alpha_quarter),
        ("alpha-mixture 1.5 bounded error", alpha_three_halves),
        ("quadratic scales", quadratic),
        ("subset of signals vs median bound", subset_of_signals),
        ("moment bound vs Monte Carlo", gordon),
        ("mass of [-1, 1] lower bound", phi_lower_bound),
        ("equivariance and invariance", equivariance),
        ("simulate output determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "[{tag}] {:02} {name}: {} ({:.1} s)",
            i + 1,
            o.detail,
            start.elapsed().as_secs_f64()
        );
        if !o.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
