//! Parameter sweeps over one schedule family, dominance comparison between
//! sweeps, and the output artifacts (metrics CSV, rasters, curve dumps).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::density::{render_pgm, DensityGrid, PsBands};
use crate::ensemble::{DensityOptions, EnsembleRunner};
use crate::error::{Error, Result};
use crate::evolution::{IntegratorConfig, TrajectoryResult};
use crate::metrics::{DeviationBasis, EnsembleMetrics, TrajectorySummary};
use crate::physics::PhysicsConfig;
use crate::readout::{smooth_readout, ReadoutCurve, SamplerConfig};
use crate::schedule::{FuzzinessSchedule, ScheduleKind};

pub const MIN_SAMPLES: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputFlags {
    pub metrics_csv: bool,
    pub density_grids: bool,
    pub curve_dump: bool,
}

impl Default for OutputFlags {
    fn default() -> Self {
        OutputFlags {
            metrics_csv: true,
            density_grids: false,
            curve_dump: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    /// Shared schedule settings; its kind is the swept family.
    pub template: FuzzinessSchedule,
    /// t_eff, δT or δE values depending on the family.
    pub values: Vec<f64>,
    pub n_samples: usize,
    pub base_seed: u64,
    pub outputs: OutputFlags,
    pub deviation: DeviationBasis,
    pub density: DensityOptions,
    pub bands: PsBands,
}

impl SweepSpec {
    pub fn new(template: FuzzinessSchedule, values: Vec<f64>, n_samples: usize, base_seed: u64) -> Self {
        SweepSpec {
            template,
            values,
            n_samples,
            base_seed,
            outputs: OutputFlags::default(),
            deviation: DeviationBasis::default(),
            density: DensityOptions::default(),
            bands: PsBands::default(),
        }
    }

    pub fn family(&self) -> ScheduleKind {
        self.template.kind
    }

    pub fn schedules(&self) -> impl Iterator<Item = FuzzinessSchedule> + '_ {
        self.values.iter().map(|&v| self.template.clone().with_parameter(v))
    }

    /// Every problem with the spec, collected before any work starts.
    pub fn problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.values.is_empty() {
            out.push("sweep needs at least one parameter value".to_string());
        }
        if self.n_samples < MIN_SAMPLES {
            out.push(format!("n_samples must be at least {MIN_SAMPLES}, got {}", self.n_samples));
        }
        for s in self.schedules() {
            if let Err(e) = s.validate() {
                out.push(format!("{} = {}: {e}", s.kind, s.parameter()));
            }
        }
        let d = &self.density;
        if self.outputs.density_grids && (d.t_bins == 0 || d.e_bins == 0 || d.c2_bins == 0) {
            out.push("density grids need at least one bin per axis".to_string());
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        let p = self.problems();
        if p.is_empty() {
            Ok(())
        } else {
            Err(Error::Config(p))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellReport {
    pub schedule: FuzzinessSchedule,
    pub metrics: EnsembleMetrics,
    pub failures: Vec<(u64, String)>,
    pub underflows: usize,
    pub wall_time_s: f64,
    #[serde(skip)]
    pub readout_grid: Option<DensityGrid>,
    #[serde(skip)]
    pub excitation_grid: Option<DensityGrid>,
}

impl CellReport {
    pub fn parameter(&self) -> f64 {
        self.schedule.parameter()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub family: ScheduleKind,
    pub phys: PhysicsConfig,
    pub integrator: IntegratorConfig,
    pub sampler: SamplerConfig,
    pub deviation: DeviationBasis,
    pub cells: Vec<CellReport>,
}

impl SweepReport {
    pub fn failures(&self) -> usize {
        self.cells.iter().map(|c| c.failures.len()).sum()
    }

    pub fn cell(&self, parameter: f64) -> Option<&CellReport> {
        self.cells.iter().find(|c| c.parameter() == parameter)
    }
}

/// Runs every cell of the sweep. Curves depend only on `(base_seed, index)`,
/// so all cells, and all sweeps sharing a seed, see the same readouts.
pub fn run_sweep(
    spec: &SweepSpec,
    phys: &PhysicsConfig,
    icfg: &IntegratorConfig,
    sampler: &SamplerConfig,
    workers: usize,
) -> Result<SweepReport> {
    let mut problems = spec.problems();
    for check in [phys.validate(), icfg.validate(), sampler.validate()] {
        if let Err(e) = check {
            problems.push(e.to_string());
        }
    }
    if !problems.is_empty() {
        return Err(Error::Config(problems));
    }
    let sampler = SamplerConfig {
        seed: spec.base_seed,
        ..*sampler
    };
    let runner = EnsembleRunner::new(phys, icfg, &sampler)?;
    let density = spec.outputs.density_grids.then_some(&spec.density);
    let mut cells = Vec::with_capacity(spec.values.len());
    for schedule in spec.schedules() {
        let start = Instant::now();
        let out = runner.run(&schedule, spec.n_samples, density, workers)?;
        let metrics = EnsembleMetrics::from_summaries(&out.summaries, spec.deviation)?;
        cells.push(CellReport {
            metrics,
            failures: out.failures.iter().map(|(i, e)| (*i, e.to_string())).collect(),
            underflows: out.summaries.iter().filter(|s| s.underflow).count(),
            wall_time_s: start.elapsed().as_secs_f64(),
            readout_grid: out.readout_grid,
            excitation_grid: out.excitation_grid,
            schedule,
        });
    }
    Ok(SweepReport {
        family: spec.family(),
        phys: phys.clone(),
        integrator: *icfg,
        sampler,
        deviation: spec.deviation,
        cells,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Dominance {
    Better,
    Worse,
    Incomparable,
}

/// Partial order on `(r, s)`: one measurement is better than another when
/// both its reliability and its softness are larger, each by more than one
/// combined standard error.
pub fn dominance(a: &EnsembleMetrics, b: &EnsembleMetrics) -> Dominance {
    let ds = a.softness - b.softness;
    let dr = a.reliability - b.reliability;
    let se_s = a.softness_se.hypot(b.softness_se);
    let se_r = a.reliability_se.hypot(b.reliability_se);
    if ds > se_s && dr > se_r {
        Dominance::Better
    } else if -ds > se_s && -dr > se_r {
        Dominance::Worse
    } else {
        Dominance::Incomparable
    }
}

/// Weak dominance: `a` is nowhere worse than `b` by more than one combined SE.
pub fn weakly_dominates(a: &EnsembleMetrics, b: &EnsembleMetrics) -> bool {
    let se_s = a.softness_se.hypot(b.softness_se);
    let se_r = a.reliability_se.hypot(b.reliability_se);
    a.softness >= b.softness - se_s && a.reliability >= b.reliability - se_r
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DominanceEntry {
    pub a: FuzzinessSchedule,
    pub b: FuzzinessSchedule,
    pub verdict: Dominance,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DominanceTable {
    pub entries: Vec<DominanceEntry>,
}

impl DominanceTable {
    pub fn verdict(&self, a_param: f64, b_param: f64) -> Option<Dominance> {
        self.entries
            .iter()
            .find(|e| e.a.parameter() == a_param && e.b.parameter() == b_param)
            .map(|e| e.verdict)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("a_schedule,a_parameter,b_schedule,b_parameter,verdict\n");
        for e in &self.entries {
            let v = match e.verdict {
                Dominance::Better => "better",
                Dominance::Worse => "worse",
                Dominance::Incomparable => "incomparable",
            };
            let _ = writeln!(out, "{},{},{},{},{v}", e.a.kind, e.a.parameter(), e.b.kind, e.b.parameter());
        }
        out
    }
}

/// Every cell of `a` against every cell of `b`.
pub fn compare_dominance(a: &SweepReport, b: &SweepReport) -> Result<DominanceTable> {
    if a.phys != b.phys {
        return Err(Error::PhysicsMismatch);
    }
    let entries = a
        .cells
        .iter()
        .flat_map(|ca| {
            b.cells.iter().map(move |cb| DominanceEntry {
                a: ca.schedule.clone(),
                b: cb.schedule.clone(),
                verdict: dominance(&ca.metrics, &cb.metrics),
            })
        })
        .collect();
    Ok(DominanceTable { entries })
}

pub const METRICS_HEADER: &str = "schedule,parameter,t_eff_max,t_eff_min,lambda,deviation_basis,s,s_se,d,d_se,r,r_se,ess,n,weight_sum,underflows,failures";

/// One row per cell. Contains no timing, so equal inputs give equal bytes.
pub fn metrics_csv(report: &SweepReport) -> String {
    let mut out = String::from(METRICS_HEADER);
    out.push('\n');
    let basis = match report.deviation {
        DeviationBasis::Smoothed => "smoothed",
        DeviationBasis::Raw => "raw",
    };
    for c in &report.cells {
        let m = &c.metrics;
        let s = &c.schedule;
        let (max, min, lambda) = match s.kind {
            ScheduleKind::Constant => (String::new(), String::new(), ""),
            _ => (
                s.t_eff_max.to_string(),
                s.t_eff_min.to_string(),
                match s.lambda {
                    crate::schedule::LambdaForm::Decaying => "decaying",
                    crate::schedule::LambdaForm::Growing => "growing",
                },
            ),
        };
        let _ = writeln!(
            out,
            "{},{},{max},{min},{lambda},{basis},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{:.2},{},{:.9e},{},{}",
            s.kind,
            s.parameter(),
            m.softness,
            m.softness_se,
            m.deviation,
            m.deviation_se,
            m.reliability,
            m.reliability_se,
            m.effective_sample_size,
            m.n_samples,
            m.weight_sum,
            c.underflows,
            c.failures.len(),
        );
    }
    out
}

fn cell_stem(schedule: &FuzzinessSchedule) -> String {
    format!("{}_{}", schedule.kind, schedule.parameter())
}

/// Writes the `.pgm` raster, `.txt` sidecar and `.dat` matrix for one grid.
pub fn write_grid(dir: &Path, stem: &str, grid: &DensityGrid, bands: &PsBands) -> Result<Vec<PathBuf>> {
    let base = format!("{stem}_{}", grid.shape.kind.as_str());
    let paths = ["pgm", "txt", "dat"].map(|ext| dir.join(format!("{base}.{ext}")));
    fs::write(&paths[0], render_pgm(grid))?;
    fs::write(&paths[1], grid.sidecar_text(bands))?;
    fs::write(&paths[2], grid.matrix_text())?;
    Ok(paths.to_vec())
}

/// Curve dump of trajectories `0..n`, one curve per line.
pub fn curve_dump(runner: &EnsembleRunner, n: usize) -> String {
    let mut out = String::from("# index e_start e_end a_1 .. a_m\n");
    for i in 0..n as u64 {
        out.push_str(&runner.curve(i).dump_line(i));
        out.push('\n');
    }
    out
}

/// Writes the artifacts selected by `spec.outputs` into `dir`.
pub fn write_outputs(report: &SweepReport, spec: &SweepSpec, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    if spec.outputs.metrics_csv {
        let p = dir.join("metrics.csv");
        fs::write(&p, metrics_csv(report))?;
        written.push(p);
    }
    if spec.outputs.density_grids {
        for cell in &report.cells {
            let stem = cell_stem(&cell.schedule);
            for grid in [&cell.readout_grid, &cell.excitation_grid].into_iter().flatten() {
                written.extend(write_grid(dir, &stem, grid, &spec.bands)?);
            }
        }
    }
    if spec.outputs.curve_dump {
        let runner = EnsembleRunner::new(&report.phys, &report.integrator, &report.sampler)?;
        let p = dir.join("curves.txt");
        fs::write(&p, curve_dump(&runner, spec.n_samples))?;
        written.push(p);
    }
    Ok(written)
}

/// Metadata written next to the outputs of a run.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest<'a, C: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'a str,
    pub config: &'a C,
    pub workers: usize,
    pub base_seed: u64,
    pub n_samples: usize,
    pub cells: Vec<ManifestCell>,
    pub total_wall_time_s: f64,
    pub outputs: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ManifestCell {
    pub schedule: String,
    pub parameter: f64,
    pub wall_time_s: f64,
    pub failures: Vec<(u64, String)>,
}

impl ManifestCell {
    pub fn from_report(report: &SweepReport) -> Vec<ManifestCell> {
        report
            .cells
            .iter()
            .map(|c| ManifestCell {
                schedule: c.schedule.kind.to_string(),
                parameter: c.parameter(),
                wall_time_s: c.wall_time_s,
                failures: c.failures.clone(),
            })
            .collect()
    }
}

pub fn write_manifest<C: Serialize>(dir: &Path, manifest: &RunManifest<'_, C>) -> Result<PathBuf> {
    let p = dir.join("manifest.json");
    let text = serde_json::to_string_pretty(manifest).map_err(|e| Error::Io(e.to_string()))?;
    fs::write(&p, text + "\n")?;
    Ok(p)
}

/// A single trajectory rebuilt from its index.
#[derive(Debug, Clone)]
pub struct Replay {
    pub index: u64,
    pub curve: ReadoutCurve,
    pub result: TrajectoryResult,
    pub summary: TrajectorySummary,
}

pub fn replay_index(runner: &EnsembleRunner, schedule: &FuzzinessSchedule, index: u64) -> Result<Replay> {
    replay_curve(runner, schedule, index, runner.curve(index))
}

pub fn replay_curve(
    runner: &EnsembleRunner,
    schedule: &FuzzinessSchedule,
    index: u64,
    curve: ReadoutCurve,
) -> Result<Replay> {
    let prepared = runner.evolver().prepare(schedule)?;
    let (summary, result) = runner.summarize(index, &curve, &prepared)?;
    Ok(Replay {
        index,
        curve,
        result,
        summary,
    })
}

impl Replay {
    /// `t,readout,readout_smoothed,c2sq,norm` on the recording grid.
    pub fn series_csv(&self, icfg: &IntegratorConfig) -> String {
        let smoothed = smooth_readout(&self.curve);
        let mut out = String::from("t,readout,readout_smoothed,c2sq,norm\n");
        let times = icfg.record_times(self.curve.t_total);
        for (i, &t) in times.iter().enumerate() {
            let _ = writeln!(
                out,
                "{t:.9e},{:.9e},{:.9e},{:.9e},{:.9e}",
                self.curve.eval(t),
                smoothed.eval(t),
                self.result.c2sq_series[i],
                self.result.norm_series[i]
            );
        }
        out
    }
}

/// Re-evaluates a dumped ensemble under `schedule`.
pub fn replay_dump(
    runner: &EnsembleRunner,
    schedule: &FuzzinessSchedule,
    curves: Vec<(u64, ReadoutCurve)>,
) -> Result<Vec<TrajectorySummary>> {
    let prepared = runner.evolver().prepare(schedule)?;
    curves
        .into_iter()
        .map(|(i, c)| runner.summarize(i, &c, &prepared).map(|(s, _)| s))
        .collect()
}
