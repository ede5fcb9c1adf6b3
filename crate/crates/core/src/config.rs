//! Run configuration file (TOML).
//!
//! Times are given in Rabi periods, fuzziness in `T_R/3`, time widths in
//! `T_R/2` and energy widths in `ΔE`. Every key is optional.
//!
//! ```toml
//! [physics]
//! e1 = 0.0
//! e2 = 1.0
//! v0 = 1.0
//! duration = 0.75        # T in units of T_R
//! pulse_start = 0.125    # T1 in units of T_R; T2 = T1 + πħ/v0
//! envelope_rise = 0.02   # ramp width as a fraction of T2 - T1
//!
//! [schedule]
//! kind = "time-gaussian"
//! width_t = 0.2
//!
//! [sweep]
//! values = [0.1, 0.2, 0.4]
//! n_samples = 10000
//! ```

use std::f64::consts::PI;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::density::PsBands;
use crate::ensemble::DensityOptions;
use crate::error::{Error, Result};
use crate::evolution::IntegratorConfig;
use crate::harness::{OutputFlags, SweepSpec};
use crate::metrics::DeviationBasis;
use crate::physics::{PhysicsConfig, DEFAULT_DURATION_RABI, HBAR};
use crate::readout::SamplerConfig;
use crate::schedule::{FuzzinessSchedule, LambdaForm, ScheduleKind};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PhysicsSection {
    pub e1: f64,
    pub e2: f64,
    pub v0: f64,
    pub duration: f64,
    /// Defaults to centring the pulse in the window.
    pub pulse_start: Option<f64>,
    pub envelope_rise: f64,
}

impl Default for PhysicsSection {
    fn default() -> Self {
        PhysicsSection {
            e1: 0.0,
            e2: 1.0,
            v0: 1.0,
            duration: DEFAULT_DURATION_RABI,
            pulse_start: None,
            envelope_rise: 0.02,
        }
    }
}

impl PhysicsSection {
    pub fn build(&self) -> Result<PhysicsConfig> {
        if !(self.v0 > 0.0) {
            return Err(Error::Physics(format!("v0 must be positive, got {}", self.v0)));
        }
        let rabi = 2.0 * PI * HBAR / self.v0;
        let pulse = PI * HBAR / self.v0;
        let t_total = self.duration * rabi;
        let t1 = match self.pulse_start {
            Some(x) => x * rabi,
            None => 0.5 * (t_total - pulse),
        };
        PhysicsConfig::new(self.e1, self.e2, self.v0, t_total, t1, self.envelope_rise * pulse)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SamplerSection {
    pub modes: usize,
    pub amp_fraction: f64,
    pub margin_fraction: f64,
}

impl Default for SamplerSection {
    fn default() -> Self {
        let d = SamplerConfig::default();
        SamplerSection {
            modes: d.m,
            amp_fraction: d.amp_fraction,
            margin_fraction: d.margin_fraction,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScheduleSection {
    pub kind: ScheduleKind,
    pub t_eff: f64,
    pub t_eff_max: f64,
    pub t_eff_min: f64,
    pub width_t: f64,
    pub width_e: f64,
    pub e_max: Option<f64>,
    pub lambda: LambdaForm,
}

impl Default for ScheduleSection {
    fn default() -> Self {
        let d = FuzzinessSchedule::default();
        ScheduleSection {
            kind: d.kind,
            t_eff: d.t_eff_const,
            t_eff_max: d.t_eff_max,
            t_eff_min: d.t_eff_min,
            width_t: d.width_t,
            width_e: d.width_e,
            e_max: d.e_max,
            lambda: d.lambda,
        }
    }
}

impl ScheduleSection {
    pub fn build(&self) -> FuzzinessSchedule {
        FuzzinessSchedule {
            kind: self.kind,
            t_eff_const: self.t_eff,
            t_eff_max: self.t_eff_max,
            t_eff_min: self.t_eff_min,
            width_t: self.width_t,
            width_e: self.width_e,
            e_max: self.e_max,
            lambda: self.lambda,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepSection {
    /// Swept family; defaults to `schedule.kind`.
    pub family: Option<ScheduleKind>,
    /// Defaults to the values plotted for the family.
    pub values: Option<Vec<f64>>,
    pub n_samples: usize,
    pub base_seed: u64,
    pub deviation: DeviationBasis,
    pub metrics_csv: bool,
    pub density_grids: bool,
    pub curve_dump: bool,
}

impl Default for SweepSection {
    fn default() -> Self {
        SweepSection {
            family: None,
            values: None,
            n_samples: 10_000,
            base_seed: 1,
            deviation: DeviationBasis::default(),
            metrics_csv: true,
            density_grids: false,
            curve_dump: false,
        }
    }
}

/// Parameter values swept by default for each family.
pub fn default_values(kind: ScheduleKind) -> Vec<f64> {
    match kind {
        ScheduleKind::Constant => vec![0.5, 1.0, 2.0, 5.0, 10.0, 20.0],
        ScheduleKind::TimeGaussian => vec![0.1, 0.2, 0.4],
        ScheduleKind::EnergyGaussian => vec![0.2, 0.3, 0.5],
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DensitySection {
    pub t_bins: usize,
    pub e_bins: usize,
    pub c2_bins: usize,
    pub band_edges: Vec<f64>,
}

impl Default for DensitySection {
    fn default() -> Self {
        let d = DensityOptions::default();
        DensitySection {
            t_bins: d.t_bins,
            e_bins: d.e_bins,
            c2_bins: d.c2_bins,
            band_edges: PsBands::default().edges,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FileConfig {
    pub physics: PhysicsSection,
    pub sampler: SamplerSection,
    pub integrator: IntegratorConfig,
    pub schedule: ScheduleSection,
    pub sweep: SweepSection,
    pub density: DensitySection,
}

/// Validated configuration ready to run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub phys: PhysicsConfig,
    pub sampler: SamplerConfig,
    pub integrator: IntegratorConfig,
    pub schedule: FuzzinessSchedule,
    pub sweep: SweepSpec,
}

impl FileConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(vec![e.to_string()]))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    /// Converts to internal units, reporting every invalid setting at once.
    pub fn resolve(&self) -> Result<RunConfig> {
        let mut problems = Vec::new();
        let phys = self.physics.build().map_err(|e| problems.push(e.to_string())).ok();
        let sampler = SamplerConfig {
            m: self.sampler.modes,
            amp_fraction: self.sampler.amp_fraction,
            margin_fraction: self.sampler.margin_fraction,
            seed: self.sweep.base_seed,
        };
        if let Err(e) = sampler.validate() {
            problems.push(e.to_string());
        }
        if let Err(e) = self.integrator.validate() {
            problems.push(e.to_string());
        }
        let schedule = self.schedule.build();
        if let Err(e) = schedule.validate() {
            problems.push(e.to_string());
        }
        let family = self.sweep.family.unwrap_or(self.schedule.kind);
        let template = FuzzinessSchedule {
            kind: family,
            ..schedule.clone()
        };
        let values = self.sweep.values.clone().unwrap_or_else(|| default_values(family));
        let sweep = SweepSpec {
            template,
            values,
            n_samples: self.sweep.n_samples,
            base_seed: self.sweep.base_seed,
            outputs: OutputFlags {
                metrics_csv: self.sweep.metrics_csv,
                density_grids: self.sweep.density_grids,
                curve_dump: self.sweep.curve_dump,
            },
            deviation: self.sweep.deviation,
            density: DensityOptions {
                t_bins: self.density.t_bins,
                e_bins: self.density.e_bins,
                c2_bins: self.density.c2_bins,
            },
            bands: PsBands {
                edges: self.density.band_edges.clone(),
            },
        };
        problems.extend(sweep.problems());
        let e = &self.density.band_edges;
        if e.windows(2).any(|w| w[0] >= w[1]) || e.iter().any(|x| !(0.0..=1.0).contains(x)) {
            problems.push("band_edges must be increasing values in [0, 1]".into());
        }
        match phys {
            Some(phys) if problems.is_empty() => Ok(RunConfig {
                phys,
                sampler,
                integrator: self.integrator,
                schedule,
                sweep,
            }),
            _ => Err(Error::Config(problems)),
        }
    }
}
