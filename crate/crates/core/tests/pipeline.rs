use hetmean::estimators::{
    adaptive_estimate, EstimationContext, Estimator, EstimatorRegistry, GridMode,
};
use hetmean::simulate::{
    gen_sample, make_profile, rng::substream, run_at_size, summarize, ExperimentConfig,
    ProfileKind, ProfileSpec,
};
use hetmean::theory::Family;
use hetmean::{Constants, Sample};

/// Midrange; deliberately poor under heavy tails.
struct Midrange;

impl Estimator for Midrange {
    fn name(&self) -> &'static str {
        "midrange"
    }
    fn description(&self) -> &'static str {
        "average of the extreme observations"
    }
    fn estimate(&self, ctx: &EstimationContext<'_>) -> hetmean::Result<Option<f64>> {
        let v = ctx.sample.values();
        Ok(Some((v[0] + v[v.len() - 1]) / 2.0))
    }
}

#[test]
fn custom_estimator_runs_through_the_simulator() {
    let mut registry = EstimatorRegistry::builtin();
    registry.register(Box::new(Midrange));
    assert_eq!(registry.names().last(), Some(&"midrange"));

    let spec = ProfileSpec::new(ProfileKind::TwoLevel, 512)
        .param("sigma_prime", 1000.0)
        .param("m_scale", 1.0);
    let cfg = ExperimentConfig::new(spec, Family::gaussian(), 40, 5);
    let run = run_at_size(&cfg, 512, &registry).unwrap();
    let s = summarize(&run.records).unwrap();
    let midrange = s.median_error("midrange").unwrap();
    let adaptive = s.median_error("adaptive").unwrap();
    assert!(adaptive < midrange, "{adaptive} vs {midrange}");
}

#[test]
fn final_interval_contains_the_mean_under_contamination() {
    let spec = ProfileSpec::new(ProfileKind::TwoLevel, 2000)
        .param("sigma", 0.5)
        .param("sigma_prime", 1e4)
        .param("m", 300.0);
    let profile = make_profile(&spec).unwrap();
    let family = Family::laplace();
    let c = Constants::default();
    for t in 0..20 {
        let mut rng = substream(77, &[t]);
        let values = gen_sample(&mut rng, 3.0, &profile, &family);
        let sample = Sample::ingest(&values).unwrap();
        let report = adaptive_estimate(&sample, &c, GridMode::Dyadic);
        assert!(report.final_interval.contains(3.0), "trial {t}: {report:?}");
        assert!(!report.accepted.is_empty());
        assert!((report.estimate - 3.0).abs() < 1.0);
    }
}

#[test]
fn pairwise_and_dyadic_agree_on_validity() {
    let profile = make_profile(&ProfileSpec::new(ProfileKind::Quadratic, 120)).unwrap();
    let family = Family::gaussian();
    let c = Constants::default();
    for t in 0..5 {
        let mut rng = substream(78, &[t]);
        let values = gen_sample(&mut rng, -1.0, &profile, &family);
        let sample = Sample::ingest(&values).unwrap();
        for mode in [GridMode::Dyadic, GridMode::Pairwise] {
            let report = adaptive_estimate(&sample, &c, mode);
            assert!(report.final_interval.contains(-1.0), "{mode:?}: {report:?}");
        }
    }
}
