//! Acceptance checks. Each criterion prints one `[PASS]`/`[FAIL]` line; the
//! test fails at the end if any criterion did.
//!
//! Run with `cargo test -p fuzzy-rabi --test acceptance -- --nocapture`.

mod common;

use std::fmt::Write as _;

use common::{closed_form_decay, tiny_step_reference};
use fuzzy_rabi::harness::{dominance, metrics_csv, run_sweep, Dominance, SweepReport, SweepSpec};
use fuzzy_rabi::readout::curve_for_index;
use fuzzy_rabi::{
    default_config, evolve, kappa_from_t_eff, render_pgm, DensityGrid, EnsembleMetrics, EnsembleRunner,
    FuzzinessSchedule, IntegratorConfig, PhysicsConfig, ReadoutCurve, SamplerConfig,
};

const N: usize = 10_000;
const SEED: u64 = 1;

const C1_S: (f64, f64) = (0.55, 0.65);
const C1_D: (f64, f64) = (0.25, 0.31);
const C2_S: (f64, f64) = (0.64, 0.74);
const C2_D: (f64, f64) = (0.23, 0.29);
const C3_ZENO_S: f64 = 0.15;
const C3_RABI_S: f64 = 0.9;
const C3_VALUES: [f64; 6] = [0.5, 1.0, 2.0, 5.0, 10.0, 20.0];
const C4_WINDOW: (f64, f64) = (4.0, 6.0);
const C5_TOL: f64 = 1e-5;
const C5_PI_PULSE: f64 = 0.999;
const C5_DECAY_TOL: f64 = 1e-6;
const C5_CURVES: u64 = 100;
const C6_TRAJECTORIES: u64 = 1000;
const C6_NORM_SLACK: f64 = 1e-10;
const C7_BRANCH_RATIO: f64 = 2.0;
const C7_DIP: f64 = 0.5;

/// Extra constant cells around the intermediate regime.
const CONSTANT_SWEEP: [f64; 9] = [0.5, 1.0, 2.0, 4.0, 4.3, 5.0, 6.0, 10.0, 20.0];
const TIME_SWEEP: [f64; 3] = [0.1, 0.2, 0.4];
const ENERGY_SWEEP: [f64; 3] = [0.2, 0.3, 0.5];

struct Outcome {
    pass: bool,
    detail: String,
}

fn within((lo, hi): (f64, f64), x: f64) -> bool {
    (lo..=hi).contains(&x)
}

fn fmt_cell(m: &EnsembleMetrics) -> String {
    format!(
        "s={:.4}±{:.4} d={:.4}±{:.4} r={:.3}±{:.3} ess={:.0}",
        m.softness, m.softness_se, m.deviation, m.deviation_se, m.reliability, m.reliability_se, m.effective_sample_size
    )
}

fn sweep(template: FuzzinessSchedule, values: &[f64], grids: bool) -> SweepReport {
    let phys = default_config();
    let mut spec = SweepSpec::new(template, values.to_vec(), N, SEED);
    spec.outputs.density_grids = grids;
    run_sweep(&spec, &phys, &IntegratorConfig::default(), &SamplerConfig::default(), 0).expect("sweep runs")
}

fn metrics(report: &SweepReport, p: f64) -> EnsembleMetrics {
    report.cell(p).expect("cell present").metrics
}

fn criterion_1(constant: &SweepReport) -> Outcome {
    let m = metrics(constant, 5.0);
    Outcome {
        pass: within(C1_S, m.softness) && within(C1_D, m.deviation),
        detail: format!("constant t_eff=5: {}", fmt_cell(&m)),
    }
}

fn criterion_2(constant: &SweepReport, time: &SweepReport) -> Outcome {
    let t = metrics(time, 0.2);
    let c = metrics(constant, 5.0);
    let dom = dominance(&t, &c);
    Outcome {
        pass: within(C2_S, t.softness) && within(C2_D, t.deviation) && dom == Dominance::Better,
        detail: format!("time δT=0.2: {} vs constant 5: {dom:?}", fmt_cell(&t)),
    }
}

fn criterion_3(constant: &SweepReport) -> Outcome {
    let cells: Vec<EnsembleMetrics> = C3_VALUES.iter().map(|&v| metrics(constant, v)).collect();
    let mut pass = true;
    let mut detail = String::new();
    for (v, w) in C3_VALUES.iter().zip(cells.windows(2)) {
        let (a, b) = (&w[0], &w[1]);
        let s_ok = b.softness >= a.softness - a.softness_se.hypot(b.softness_se);
        let r_ok = b.reliability <= a.reliability + a.reliability_se.hypot(b.reliability_se);
        pass &= s_ok && r_ok;
        if !(s_ok && r_ok) {
            let _ = write!(detail, "step after t_eff={v} breaks the trend; ");
        }
    }
    let (first, last) = (cells[0].softness, cells[cells.len() - 1].softness);
    pass &= first < C3_ZENO_S && last > C3_RABI_S;
    let s: Vec<String> = cells.iter().map(|m| format!("{:.3}", m.softness)).collect();
    let r: Vec<String> = cells.iter().map(|m| format!("{:.3}", m.reliability)).collect();
    let _ = write!(detail, "s=[{}] r=[{}]", s.join(", "), r.join(", "));
    Outcome { pass, detail }
}

/// Softness of the piecewise-linear time-family frontier at reliability `r`,
/// with its interpolated standard error.
fn frontier_at(time: &SweepReport, r: f64) -> (f64, f64) {
    let mut pts: Vec<(f64, f64, f64)> = time
        .cells
        .iter()
        .map(|c| (c.metrics.reliability, c.metrics.softness, c.metrics.softness_se))
        .collect();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    if r <= pts[0].0 {
        return (pts[0].1, pts[0].2);
    }
    for w in pts.windows(2) {
        let (a, b) = (w[0], w[1]);
        if r <= b.0 {
            let f = (r - a.0) / (b.0 - a.0);
            return (a.1 + f * (b.1 - a.1), a.2 + f * (b.2 - a.2));
        }
    }
    let last = pts[pts.len() - 1];
    (last.1, last.2)
}

fn criterion_4(constant: &SweepReport, time: &SweepReport, energy: &SweepReport) -> Outcome {
    let mut dominated = Vec::new();
    for e in &energy.cells {
        for c in constant.cells.iter().filter(|c| within(C4_WINDOW, c.parameter())) {
            if dominance(&e.metrics, &c.metrics) == Dominance::Better {
                dominated.push(format!("δE={}>t_eff={}", e.parameter(), c.parameter()));
            }
        }
    }
    let best = energy
        .cells
        .iter()
        .max_by(|a, b| {
            let key = |m: &EnsembleMetrics| m.reliability * m.softness;
            key(&a.metrics).total_cmp(&key(&b.metrics))
        })
        .expect("energy cells");
    let m = best.metrics;
    let (front, front_se) = frontier_at(time, m.reliability);
    let r_max = time.cells.iter().map(|c| c.metrics.reliability).fold(f64::MIN, f64::max);
    let r_max_se = time
        .cells
        .iter()
        .max_by(|a, b| a.metrics.reliability.total_cmp(&b.metrics.reliability))
        .map(|c| c.metrics.reliability_se)
        .unwrap_or(0.0);
    let below = m.softness <= front + front_se.hypot(m.softness_se)
        && m.reliability <= r_max + r_max_se.hypot(m.reliability_se);
    Outcome {
        pass: !dominated.is_empty() && below,
        detail: format!(
            "dominates [{}]; best δE={} {} vs time frontier s={:.4}±{:.4}",
            dominated.join(" "),
            best.parameter(),
            fmt_cell(&m),
            front,
            front_se
        ),
    }
}

fn criterion_5() -> Outcome {
    let phys = default_config();
    let icfg = IntegratorConfig::default();
    let sampler = SamplerConfig {
        seed: 77,
        ..SamplerConfig::default()
    };
    let families = [
        FuzzinessSchedule::constant(5.0),
        FuzzinessSchedule::time_gaussian(0.2),
        FuzzinessSchedule::energy_gaussian(0.3),
    ];
    let mut worst = (0.0f64, 0.0f64);
    for schedule in &families {
        for i in 0..C5_CURVES {
            let curve = curve_for_index(&sampler, &phys, i);
            let a = evolve(&curve, schedule, &phys, &icfg).expect("evolves");
            let b = tiny_step_reference(&curve, schedule, &phys, 1024, 1);
            worst.0 = worst.0.max((a.final_c2sq - b.final_c2sq).abs());
            worst.1 = worst.1.max(((a.weight - b.weight) / b.weight).abs());
        }
    }
    let oracle_ok = worst.0 <= C5_TOL && worst.1 <= C5_TOL;

    let mut pi_min = f64::INFINITY;
    for i in 0..20 {
        let curve = curve_for_index(&sampler, &phys, i);
        let r = evolve(&curve, &FuzzinessSchedule::unmeasured(), &phys, &icfg).expect("evolves");
        pi_min = pi_min.min(r.final_c2sq);
    }

    let undriven = default_config().without_drive();
    let mut decay_err = 0.0f64;
    for (t_eff, e) in [(0.5, 0.1), (2.0, 0.7), (5.0, 0.5), (10.0, -0.4), (20.0, 1.5)] {
        let curve = ReadoutCurve::constant(e, 10, undriven.t_total);
        let kappa = kappa_from_t_eff(t_eff * undriven.t_eff_unit(), &undriven).expect("kappa");
        let expect = closed_form_decay(kappa, (undriven.e1 - e).powi(2), undriven.t_total).powi(2);
        let w = evolve(&curve, &FuzzinessSchedule::constant(t_eff), &undriven, &icfg).expect("evolves").weight;
        decay_err = decay_err.max(((w - expect) / expect).abs());
    }
    Outcome {
        pass: oracle_ok && pi_min >= C5_PI_PULSE && decay_err <= C5_DECAY_TOL,
        detail: format!(
            "oracle max |Δc2|={:.2e} max rel Δw={:.2e}; π-pulse min={:.9}; decay rel err={:.2e}",
            worst.0, worst.1, pi_min, decay_err
        ),
    }
}

fn run_artifacts(workers: usize) -> (String, Vec<Vec<u8>>) {
    let phys = default_config();
    let mut spec = SweepSpec::new(FuzzinessSchedule::time_gaussian(0.2), vec![0.2, 0.4], 700, 9);
    spec.outputs.density_grids = true;
    let report = run_sweep(&spec, &phys, &IntegratorConfig::default(), &SamplerConfig::default(), workers)
        .expect("sweep runs");
    let rasters = report
        .cells
        .iter()
        .flat_map(|c| [c.readout_grid.as_ref(), c.excitation_grid.as_ref()])
        .map(|g| render_pgm(g.expect("grid")))
        .collect();
    (metrics_csv(&report), rasters)
}

fn criterion_6() -> Outcome {
    let phys = default_config();
    let icfg = IntegratorConfig::default();
    let runner = EnsembleRunner::new(&phys, &icfg, &SamplerConfig { seed: 3, ..SamplerConfig::default() })
        .expect("runner");
    let schedules = [
        FuzzinessSchedule::constant(2.0),
        FuzzinessSchedule::time_gaussian(0.1),
        FuzzinessSchedule::energy_gaussian(0.5),
    ];
    let mut norm_ok = true;
    for i in 0..C6_TRAJECTORIES {
        let s = &schedules[(i % 3) as usize];
        let r = runner.evolver().evolve(&runner.curve(i), s).expect("evolves");
        norm_ok &= r.norm_series.windows(2).all(|w| w[1] <= w[0] * (1.0 + C6_NORM_SLACK));
        norm_ok &= r.norm_series[0] == 1.0 && r.weight <= 1.0 + C6_NORM_SLACK;
    }

    let out = runner.run(&FuzzinessSchedule::constant(5.0), 400, None, 1).expect("runs");
    let base = EnsembleMetrics::from_summaries(&out.summaries, Default::default()).expect("metrics");
    let mut scale_ok = true;
    for k in [-300i32, -40, -1, 1, 17, 200] {
        let c = 2f64.powi(k);
        let scaled: Vec<_> = out
            .summaries
            .iter()
            .map(|s| {
                let mut s = *s;
                s.weight *= c;
                s
            })
            .collect();
        let m = EnsembleMetrics::from_summaries(&scaled, Default::default()).expect("metrics");
        scale_ok &= m.softness == base.softness
            && m.deviation == base.deviation
            && m.reliability == base.reliability
            && m.softness_se == base.softness_se
            && m.deviation_se == base.deviation_se;
    }

    let one = run_artifacts(1);
    let identical = [2, 3].iter().all(|&w| run_artifacts(w) == one);
    Outcome {
        pass: norm_ok && scale_ok && identical,
        detail: format!("norm monotone={norm_ok} scale invariant={scale_ok} worker-count identical={identical}"),
    }
}

/// Largest bins in the lower and upper thirds, and the deepest bin between
/// them. Two modes need a dip below half the smaller peak.
fn two_modes(col: &[f64]) -> (usize, usize, f64) {
    let third = col.len() / 3;
    let argmax = |r: std::ops::Range<usize>| r.max_by(|&a, &b| col[a].total_cmp(&col[b])).expect("bins");
    let lo = argmax(0..third);
    let hi = argmax(col.len() - third..col.len());
    let dip = col[lo..=hi].iter().copied().fold(f64::INFINITY, f64::min);
    (lo, hi, dip)
}

fn branch_masses(grid: &DensityGrid, split: f64) -> (f64, f64) {
    let col = grid.column(grid.shape.t_bins - 1);
    col.iter().enumerate().fold((0.0, 0.0), |(lo, hi), (v, p)| {
        if grid.value_center(v) < split {
            (lo + p, hi)
        } else {
            (lo, hi + p)
        }
    })
}

fn criterion_7(constant: &SweepReport, time: &SweepReport, phys: &PhysicsConfig) -> Outcome {
    let exc = constant.cell(5.0).and_then(|c| c.excitation_grid.as_ref()).expect("grid");
    let col = exc.column(exc.shape.t_bins - 1);
    let (lo, hi, dip) = two_modes(&col);
    let bimodal = dip < C7_DIP * col[lo].min(col[hi]);

    let readout = time.cell(0.2).and_then(|c| c.readout_grid.as_ref()).expect("grid");
    let (lower, upper) = branch_masses(readout, phys.mid_energy());
    let ratio = upper / lower;
    Outcome {
        pass: bimodal && ratio > C7_BRANCH_RATIO,
        detail: format!(
            "c2 final column P={:.4} at bin {lo}, P={:.4} at bin {hi}, dip {dip:.4}; upper/lower readout mass={ratio:.3}",
            col[lo], col[hi]
        ),
    }
}

#[test]
fn acceptance() {
    let phys = default_config();
    let constant = sweep(FuzzinessSchedule::constant(5.0), &CONSTANT_SWEEP, true);
    let time = sweep(FuzzinessSchedule::time_gaussian(0.2), &TIME_SWEEP, true);
    let energy = sweep(FuzzinessSchedule::energy_gaussian(0.3), &ENERGY_SWEEP, false);
    for report in [&constant, &time, &energy] {
        assert_eq!(report.failures(), 0, "integration failures in {}", report.family);
    }

    let results = [
        ("1 constant-fuzziness anchor", criterion_1(&constant)),
        ("2 time-dependent improvement", criterion_2(&constant, &time)),
        ("3 monotonic trends", criterion_3(&constant)),
        ("4 energy-dependent regime", criterion_4(&constant, &time, &energy)),
        ("5 oracle equivalence", criterion_5()),
        ("6 invariant suites", criterion_6()),
        ("7 density-plot structure", criterion_7(&constant, &time, &phys)),
    ];
    println!();
    let mut failed = Vec::new();
    for (name, o) in &results {
        println!("[{}] criterion {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failed.push(*name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
