use fuzzy_rabi::{
    default_config, DeviationBasis, EnsembleMetrics, EnsembleRunner, FuzzinessSchedule, IntegratorConfig,
    SamplerConfig,
};

/// The reported standard error should describe the spread of independent
/// sub-ensembles of the same size.
#[test]
fn standard_error_matches_sub_ensemble_spread() {
    let phys = default_config();
    let icfg = IntegratorConfig::default();
    let schedule = FuzzinessSchedule::constant(5.0);
    let (mut s, mut d, mut s_se, mut d_se) = (Vec::new(), Vec::new(), 0.0, 0.0);
    for seed in 0..10 {
        let runner = EnsembleRunner::new(&phys, &icfg, &SamplerConfig { seed: 100 + seed, ..Default::default() }).unwrap();
        let out = runner.run(&schedule, 400, None, 0).unwrap();
        let m = EnsembleMetrics::from_summaries(&out.summaries, DeviationBasis::Smoothed).unwrap();
        s.push(m.softness);
        d.push(m.deviation);
        s_se += m.softness_se / 10.0;
        d_se += m.deviation_se / 10.0;
    }
    let sd = |x: &[f64]| {
        let mean = x.iter().sum::<f64>() / x.len() as f64;
        (x.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (x.len() - 1) as f64).sqrt()
    };
    // Ten samples pin a standard deviation only to within a factor of about two.
    assert!(sd(&s) / s_se > 0.4 && sd(&s) / s_se < 2.5, "s: spread {} vs se {s_se}", sd(&s));
    assert!(sd(&d) / d_se > 0.4 && sd(&d) / d_se < 2.5, "d: spread {} vs se {d_se}", sd(&d));
}

#[test]
fn more_sine_modes_change_little() {
    let phys = default_config();
    let icfg = IntegratorConfig::default();
    let schedule = FuzzinessSchedule::constant(5.0);
    let run = |m| {
        let runner = EnsembleRunner::new(&phys, &icfg, &SamplerConfig { m, seed: 1, ..Default::default() }).unwrap();
        let out = runner.run(&schedule, 3000, None, 0).unwrap();
        EnsembleMetrics::from_summaries(&out.summaries, DeviationBasis::Smoothed).unwrap()
    };
    let (a, b) = (run(10), run(16));
    assert!((a.softness - b.softness).abs() < 3.0 * a.softness_se.hypot(b.softness_se) + 0.01);
    assert!((a.deviation - b.deviation).abs() < 3.0 * a.deviation_se.hypot(b.deviation_se) + 0.01);
}
