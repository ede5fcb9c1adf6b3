use fuzzy_rabi::readout::{curve_for_index, parse_curve_dump};
use fuzzy_rabi::schedule::t_eff_from_kappa;
use fuzzy_rabi::{
    default_config, evolve, kappa_from_t_eff, smooth_readout, DensityAccumulator, DeviationBasis, EnsembleMetrics,
    FuzzinessSchedule, GridShape, IntegratorConfig, LambdaForm, ReadoutCurve, SamplerConfig, TrajectorySummary,
};
use proptest::prelude::*;

fn summaries() -> impl Strategy<Value = Vec<TrajectorySummary>> {
    prop::collection::vec((1e-6f64..1.0, 0.0f64..=1.0, 0.0f64..2.0, 0.0f64..2.0), 1..60).prop_map(|v| {
        v.into_iter()
            .enumerate()
            .map(|(i, (weight, c2, raw, smooth))| TrajectorySummary {
                index: i as u64,
                weight,
                final_c2sq: c2,
                msd_raw: raw,
                msd_smoothed: smooth + 1e-3,
                underflow: false,
            })
            .collect()
    })
}

fn schedule() -> impl Strategy<Value = FuzzinessSchedule> {
    prop_oneof![
        (0.5f64..20.0).prop_map(FuzzinessSchedule::constant),
        (0.05f64..0.5).prop_map(FuzzinessSchedule::time_gaussian),
        (0.1f64..0.6).prop_map(FuzzinessSchedule::energy_gaussian),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn metrics_ignore_a_common_weight_scale(s in summaries(), k in -200i32..200) {
        let c = 2f64.powi(k);
        let scaled: Vec<_> = s.iter().map(|t| TrajectorySummary { weight: t.weight * c, ..*t }).collect();
        for basis in [DeviationBasis::Smoothed, DeviationBasis::Raw] {
            let a = EnsembleMetrics::from_summaries(&s, basis).unwrap();
            let b = EnsembleMetrics::from_summaries(&scaled, basis).unwrap();
            prop_assert_eq!(a.softness, b.softness);
            prop_assert_eq!(a.deviation, b.deviation);
            prop_assert_eq!(a.softness_se, b.softness_se);
            prop_assert_eq!(a.deviation_se, b.deviation_se);
            prop_assert_eq!(a.reliability, b.reliability);
            prop_assert_eq!(a.effective_sample_size, b.effective_sample_size);
        }
    }

    #[test]
    fn metrics_stay_in_range(s in summaries()) {
        let m = EnsembleMetrics::from_summaries(&s, DeviationBasis::Smoothed).unwrap();
        prop_assert!((0.0..=1.0).contains(&m.softness));
        prop_assert!(m.deviation > 0.0);
        prop_assert!((m.reliability * m.deviation - 1.0).abs() <= 2.0 * f64::EPSILON);
        prop_assert!(m.effective_sample_size >= 1.0 - 1e-12);
        prop_assert!(m.effective_sample_size <= s.len() as f64);
    }

    #[test]
    fn schedules_stay_between_their_bounds(
        sched in schedule(),
        t in 0.0f64..1.0,
        e in -0.5f64..1.5,
        growing in any::<bool>(),
    ) {
        let phys = default_config();
        let sched = if growing { sched.with_lambda(LambdaForm::Growing) } else { sched };
        let v = sched.t_eff_units(t * phys.t_total, e, &phys);
        match sched.coefficients(&phys) {
            None => prop_assert_eq!(v, sched.t_eff_const),
            Some(_) => {
                prop_assert!(v >= sched.t_eff_min - 1e-12);
                prop_assert!(v <= sched.t_eff_max + 1e-12);
            }
        }
    }

    #[test]
    fn time_profile_is_symmetric_about_the_midpoint(w in 0.05f64..0.5, u in 0.0f64..0.5, e in -0.5f64..1.5) {
        let phys = default_config();
        let s = FuzzinessSchedule::time_gaussian(w);
        let t = phys.t_total;
        let a = s.t_eff_units(t * (0.5 - u), e, &phys);
        let b = s.t_eff_units(t * (0.5 + u), e + 0.3, &phys);
        prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0));
    }

    #[test]
    fn kappa_round_trips(t_eff in 1e-3f64..1e3) {
        let phys = default_config();
        let k = kappa_from_t_eff(t_eff, &phys).unwrap();
        prop_assert!(k > 0.0);
        prop_assert!((t_eff_from_kappa(k, &phys) - t_eff).abs() <= 1e-12 * t_eff);
    }

    #[test]
    fn smoothing_shrinks_modes_and_keeps_endpoints(
        e0 in -0.5f64..1.5,
        e1 in -0.5f64..1.5,
        coeffs in prop::collection::vec(-0.35f64..0.35, 1..20),
    ) {
        let phys = default_config();
        let c = ReadoutCurve::new(e0, e1, coeffs, phys.t_total);
        let s = smooth_readout(&c);
        let l1 = |c: &ReadoutCurve| c.coeffs.iter().map(|a| a.abs()).sum::<f64>();
        prop_assert!(l1(&s) <= l1(&c));
        for (a, b) in s.coeffs.iter().zip(&c.coeffs) {
            prop_assert!(a.abs() <= b.abs());
        }
        prop_assert_eq!(s.eval(0.0), c.eval(0.0));
        prop_assert_eq!(s.eval(phys.t_total), c.eval(phys.t_total));
    }

    #[test]
    fn curve_dump_round_trips(seed in any::<u64>(), idx in 0u64..1_000_000) {
        let phys = default_config();
        let cfg = SamplerConfig { seed, ..SamplerConfig::default() };
        let c = curve_for_index(&cfg, &phys, idx);
        let parsed = parse_curve_dump(&c.dump_line(idx), phys.t_total).unwrap();
        prop_assert_eq!(parsed.len(), 1);
        prop_assert_eq!(parsed[0].0, idx);
        prop_assert_eq!(&parsed[0].1, &c);
    }

    #[test]
    fn density_refinement_bounds(
        series in prop::collection::vec(-0.7f64..1.7, 33),
        series2 in prop::collection::vec(-0.7f64..1.7, 33),
        w in 0.01f64..1.0,
    ) {
        let phys = default_config();
        let coarse_shape = GridShape::readout(&phys, 4, 5, 0.5);
        let fine_shape = GridShape::readout(&phys, 8, 10, 0.5);
        let mut coarse = DensityAccumulator::new(coarse_shape).unwrap();
        let mut fine = DensityAccumulator::new(fine_shape).unwrap();
        for (s, w) in [(&series, w), (&series2, 1.0 - w + 1e-3)] {
            coarse.accumulate(s, w).unwrap();
            fine.accumulate(s, w).unwrap();
        }
        let c = coarse.finalize().unwrap();
        let f = fine.finalize().unwrap();
        prop_assert!(c.cells.iter().chain(&f.cells).all(|p| (0.0..=1.0).contains(p)));
        for t in 0..4 {
            for v in 0..5 {
                let subs = [(2 * t, 2 * v), (2 * t + 1, 2 * v), (2 * t, 2 * v + 1), (2 * t + 1, 2 * v + 1)];
                let sum: f64 = subs.iter().map(|&(a, b)| f.get(a, b)).sum();
                let max = subs.iter().map(|&(a, b)| f.get(a, b)).fold(0.0, f64::max);
                prop_assert!(c.get(t, v) <= sum + 1e-12);
                prop_assert!(c.get(t, v) >= max - 1e-12);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn norm_never_grows(sched in schedule(), seed in any::<u64>(), idx in 0u64..10_000) {
        let phys = default_config();
        let icfg = IntegratorConfig { n_steps: 1024, record_stride: 1 };
        let cfg = SamplerConfig { seed, ..SamplerConfig::default() };
        let r = evolve(&curve_for_index(&cfg, &phys, idx), &sched, &phys, &icfg).unwrap();
        prop_assert!(r.norm_series.windows(2).all(|w| w[1] <= w[0] * (1.0 + 1e-10)));
        prop_assert!(r.c2sq_series.iter().all(|p| (0.0..=1.0 + 1e-12).contains(p)));
        prop_assert!(r.weight > 0.0 && r.weight <= 1.0 + 1e-10);
    }
}
