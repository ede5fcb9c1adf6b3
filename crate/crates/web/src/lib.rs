//! Browser bindings: one trajectory, ensemble metrics and density grids.

use fuzzy_rabi::{
    default_config, DensityGrid, DensityOptions, DeviationBasis, EnsembleMetrics, EnsembleRunner, FuzzinessSchedule,
    IntegratorConfig, SamplerConfig, ScheduleKind,
};
use wasm_bindgen::prelude::*;

/// Coarser than the library default; fine enough for drawing.
const STEPS: usize = 1024;
const STRIDE: usize = 4;
const MAX_SAMPLES: usize = 20_000;

fn integrator() -> IntegratorConfig {
    IntegratorConfig {
        n_steps: STEPS,
        record_stride: STRIDE,
    }
}

fn schedule(kind: &str, parameter: f64) -> Result<FuzzinessSchedule, JsError> {
    let kind: ScheduleKind = kind.parse().map_err(|e| JsError::new(&format!("{e}")))?;
    let s = match kind {
        ScheduleKind::Constant => FuzzinessSchedule::constant(parameter),
        ScheduleKind::TimeGaussian => FuzzinessSchedule::time_gaussian(parameter),
        ScheduleKind::EnergyGaussian => FuzzinessSchedule::energy_gaussian(parameter),
    };
    s.validate().map_err(|e| JsError::new(&e.to_string()))?;
    Ok(s)
}

fn runner(seed: u64) -> Result<EnsembleRunner, JsError> {
    let sampler = SamplerConfig {
        seed,
        ..SamplerConfig::default()
    };
    EnsembleRunner::new(&default_config(), &integrator(), &sampler).map_err(|e| JsError::new(&e.to_string()))
}

fn check_samples(n: usize) -> Result<(), JsError> {
    if n == 0 || n > MAX_SAMPLES {
        return Err(JsError::new(&format!("samples must be between 1 and {MAX_SAMPLES}")));
    }
    Ok(())
}

#[wasm_bindgen]
pub struct Trajectory {
    times: Vec<f64>,
    readout: Vec<f64>,
    smoothed: Vec<f64>,
    excitation: Vec<f64>,
    weight: f64,
    final_c2sq: f64,
}

#[wasm_bindgen]
impl Trajectory {
    #[wasm_bindgen(getter)]
    pub fn times(&self) -> Vec<f64> {
        self.times.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn readout(&self) -> Vec<f64> {
        self.readout.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn smoothed(&self) -> Vec<f64> {
        self.smoothed.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn excitation(&self) -> Vec<f64> {
        self.excitation.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn weight(&self) -> f64 {
        self.weight
    }
    #[wasm_bindgen(getter, js_name = finalExcitation)]
    pub fn final_c2sq(&self) -> f64 {
        self.final_c2sq
    }
}

/// Readout curve `index` of `seed` and the atom's response to it.
#[wasm_bindgen]
pub fn trajectory(kind: &str, parameter: f64, seed: u64, index: u64) -> Result<Trajectory, JsError> {
    let sched = schedule(kind, parameter)?;
    let runner = runner(seed)?;
    let curve = runner.curve(index);
    let result = runner
        .evolver()
        .evolve(&curve, &sched)
        .map_err(|e| JsError::new(&e.to_string()))?;
    let times = integrator().record_times(runner.physics().t_total);
    let smooth = curve.smoothed();
    Ok(Trajectory {
        readout: times.iter().map(|&t| curve.eval(t)).collect(),
        smoothed: times.iter().map(|&t| smooth.eval(t)).collect(),
        excitation: result.c2sq_series,
        weight: result.weight,
        final_c2sq: result.final_c2sq,
        times,
    })
}

#[wasm_bindgen]
#[derive(Debug, Clone, Copy)]
pub struct Metrics {
    pub softness: f64,
    #[wasm_bindgen(js_name = softnessSe)]
    pub softness_se: f64,
    pub deviation: f64,
    #[wasm_bindgen(js_name = deviationSe)]
    pub deviation_se: f64,
    pub reliability: f64,
    #[wasm_bindgen(js_name = reliabilitySe)]
    pub reliability_se: f64,
    #[wasm_bindgen(js_name = effectiveSampleSize)]
    pub effective_sample_size: f64,
}

impl From<EnsembleMetrics> for Metrics {
    fn from(m: EnsembleMetrics) -> Self {
        Metrics {
            softness: m.softness,
            softness_se: m.softness_se,
            deviation: m.deviation,
            deviation_se: m.deviation_se,
            reliability: m.reliability,
            reliability_se: m.reliability_se,
            effective_sample_size: m.effective_sample_size,
        }
    }
}

/// Softness, deviation and reliability over trajectories `0..samples`.
#[wasm_bindgen]
pub fn ensemble(kind: &str, parameter: f64, seed: u64, samples: usize) -> Result<Metrics, JsError> {
    check_samples(samples)?;
    let out = runner(seed)?
        .run(&schedule(kind, parameter)?, samples, None, 0)
        .map_err(|e| JsError::new(&e.to_string()))?;
    EnsembleMetrics::from_summaries(&out.summaries, DeviationBasis::Smoothed)
        .map(Metrics::from)
        .map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub struct Densities {
    bins: usize,
    readout: Vec<f64>,
    excitation: Vec<f64>,
    e_range: (f64, f64),
    metrics: Metrics,
}

#[wasm_bindgen]
impl Densities {
    /// Bins per axis of both grids.
    #[wasm_bindgen(getter)]
    pub fn bins(&self) -> usize {
        self.bins
    }
    /// Smoothed-readout occupancy, row-major from the lowest energy bin.
    #[wasm_bindgen(getter)]
    pub fn readout(&self) -> Vec<f64> {
        self.readout.clone()
    }
    /// `|c2|²` occupancy, row-major from the lowest bin.
    #[wasm_bindgen(getter)]
    pub fn excitation(&self) -> Vec<f64> {
        self.excitation.clone()
    }
    #[wasm_bindgen(getter, js_name = energyMin)]
    pub fn energy_min(&self) -> f64 {
        self.e_range.0
    }
    #[wasm_bindgen(getter, js_name = energyMax)]
    pub fn energy_max(&self) -> f64 {
        self.e_range.1
    }
    #[wasm_bindgen(getter)]
    pub fn metrics(&self) -> Metrics {
        self.metrics
    }
}

/// Both density grids, `bins × bins`, over trajectories `0..samples`.
#[wasm_bindgen]
pub fn densities(kind: &str, parameter: f64, seed: u64, samples: usize, bins: usize) -> Result<Densities, JsError> {
    check_samples(samples)?;
    if !(1..=STEPS / (4 * STRIDE)).contains(&bins) {
        return Err(JsError::new(&format!("bins must be between 1 and {}", STEPS / (4 * STRIDE))));
    }
    let opts = DensityOptions {
        t_bins: bins,
        e_bins: bins,
        c2_bins: bins,
    };
    let out = runner(seed)?
        .run(&schedule(kind, parameter)?, samples, Some(&opts), 0)
        .map_err(|e| JsError::new(&e.to_string()))?;
    let metrics = EnsembleMetrics::from_summaries(&out.summaries, DeviationBasis::Smoothed)
        .map_err(|e| JsError::new(&e.to_string()))?;
    let take = |g: Option<DensityGrid>| g.ok_or_else(|| JsError::new("no density grid"));
    let readout = take(out.readout_grid)?;
    let excitation = take(out.excitation_grid)?;
    Ok(Densities {
        bins,
        e_range: readout.shape.v_range,
        readout: readout.cells,
        excitation: excitation.cells,
        metrics: metrics.into(),
    })
}
