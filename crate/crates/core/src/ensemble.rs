//! Runs an ensemble of trajectories for one schedule.
//!
//! Trajectory `i` always uses curve `i` of the stream keyed by the base
//! seed, whatever the schedule. Work is cut into fixed chunks of trajectory
//! indices; chunk results are reduced in index order, so results are
//! identical for any number of workers.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use serde::{Deserialize, Serialize};

use crate::density::{DensityAccumulator, DensityGrid, GridShape};
use crate::error::{Error, Result};
use crate::evolution::{Evolver, IntegratorConfig, PreparedSchedule, TrajectoryResult};
use crate::metrics::{mean_square_deviation, TrajectorySummary};
use crate::physics::PhysicsConfig;
use crate::readout::{curve_for_index, smooth_readout, ReadoutCurve, SamplerConfig};
use crate::schedule::FuzzinessSchedule;

const CHUNK: usize = 64;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityOptions {
    pub t_bins: usize,
    pub e_bins: usize,
    pub c2_bins: usize,
}

impl Default for DensityOptions {
    fn default() -> Self {
        DensityOptions {
            t_bins: 40,
            e_bins: 40,
            c2_bins: 40,
        }
    }
}

#[derive(Debug, Clone)]
pub struct EnsembleOutput {
    pub summaries: Vec<TrajectorySummary>,
    pub readout_grid: Option<DensityGrid>,
    pub excitation_grid: Option<DensityGrid>,
    /// Trajectories whose integration failed, with the error.
    pub failures: Vec<(u64, Error)>,
}

/// Everything needed to run trajectories of one ensemble.
#[derive(Debug, Clone)]
pub struct EnsembleRunner {
    evolver: Evolver,
    sampler: SamplerConfig,
}

struct ChunkOutput {
    summaries: Vec<TrajectorySummary>,
    grids: Option<(DensityAccumulator, DensityAccumulator)>,
    failures: Vec<(u64, Error)>,
}

impl EnsembleRunner {
    pub fn new(phys: &PhysicsConfig, icfg: &IntegratorConfig, sampler: &SamplerConfig) -> Result<Self> {
        sampler.validate()?;
        Ok(EnsembleRunner {
            evolver: Evolver::new(phys, icfg, sampler.m)?,
            sampler: *sampler,
        })
    }

    pub fn physics(&self) -> &PhysicsConfig {
        self.evolver.physics()
    }

    pub fn sampler(&self) -> &SamplerConfig {
        &self.sampler
    }

    pub fn evolver(&self) -> &Evolver {
        &self.evolver
    }

    pub fn curve(&self, index: u64) -> ReadoutCurve {
        curve_for_index(&self.sampler, self.physics(), index)
    }

    /// Evolves one curve and reduces it to its summary.
    pub fn summarize(
        &self,
        index: u64,
        curve: &ReadoutCurve,
        prepared: &PreparedSchedule,
    ) -> Result<(TrajectorySummary, TrajectoryResult)> {
        let phys = self.physics();
        let result = self.evolver.run(curve, prepared)?;
        let smoothed = smooth_readout(curve);
        let summary = TrajectorySummary {
            index,
            weight: result.weight,
            final_c2sq: result.final_c2sq,
            msd_raw: mean_square_deviation(curve, &result.c2sq_series, phys),
            msd_smoothed: mean_square_deviation(&smoothed, &result.c2sq_series, phys),
            underflow: result.underflow,
        };
        Ok((summary, result))
    }

    fn grid_shapes(&self, opts: &DensityOptions) -> (GridShape, GridShape) {
        let phys = self.physics();
        (
            GridShape::readout(phys, opts.t_bins, opts.e_bins, self.sampler.margin_fraction),
            GridShape::excitation(phys, opts.t_bins, opts.c2_bins),
        )
    }

    fn run_chunk(
        &self,
        indices: std::ops::Range<u64>,
        prepared: &PreparedSchedule,
        density: Option<&DensityOptions>,
    ) -> Result<ChunkOutput> {
        let phys = self.physics();
        let mut grids = match density {
            Some(opts) => {
                let (r, e) = self.grid_shapes(opts);
                Some((DensityAccumulator::new(r)?, DensityAccumulator::new(e)?))
            }
            None => None,
        };
        let times = self.evolver.integrator().record_times(phys.t_total);
        let mut summaries = Vec::with_capacity(indices.clone().count());
        let mut failures = Vec::new();
        for index in indices {
            let curve = self.curve(index);
            match self.summarize(index, &curve, prepared) {
                Ok((summary, result)) => {
                    if let Some((readout, excitation)) = grids.as_mut() {
                        let smoothed = smooth_readout(&curve);
                        let series: Vec<f64> = times.iter().map(|&t| smoothed.eval(t)).collect();
                        readout.accumulate(&series, summary.weight)?;
                        excitation.accumulate(&result.c2sq_series, summary.weight)?;
                    }
                    summaries.push(summary);
                }
                Err(e @ Error::Integration { .. }) => failures.push((index, e)),
                Err(e) => return Err(e),
            }
        }
        Ok(ChunkOutput {
            summaries,
            grids,
            failures,
        })
    }

    /// Runs trajectories `0..n` under `schedule` on `workers` threads
    /// (`0` uses the global pool).
    pub fn run(
        &self,
        schedule: &FuzzinessSchedule,
        n: usize,
        density: Option<&DensityOptions>,
        workers: usize,
    ) -> Result<EnsembleOutput> {
        if n == 0 {
            return Err(Error::EmptyEnsemble);
        }
        let prepared = self.evolver.prepare(schedule)?;
        let chunks: Vec<std::ops::Range<u64>> = (0..n)
            .step_by(CHUNK)
            .map(|start| start as u64..(start + CHUNK).min(n) as u64)
            .collect();
        let outputs = self.map_chunks(chunks, &prepared, density, workers)?;

        let mut summaries = Vec::with_capacity(n);
        let mut failures = Vec::new();
        let mut grids = match density {
            Some(opts) => {
                let (r, e) = self.grid_shapes(opts);
                Some((DensityAccumulator::new(r)?, DensityAccumulator::new(e)?))
            }
            None => None,
        };
        for chunk in outputs {
            summaries.extend(chunk.summaries);
            failures.extend(chunk.failures);
            if let (Some((r, e)), Some((cr, ce))) = (grids.as_mut(), chunk.grids.as_ref()) {
                r.merge(cr)?;
                e.merge(ce)?;
            }
        }
        let (readout_grid, excitation_grid) = match grids {
            Some((r, e)) if !summaries.is_empty() => (Some(r.finalize()?), Some(e.finalize()?)),
            _ => (None, None),
        };
        Ok(EnsembleOutput {
            summaries,
            readout_grid,
            excitation_grid,
            failures,
        })
    }

    #[cfg(feature = "parallel")]
    fn map_chunks(
        &self,
        chunks: Vec<std::ops::Range<u64>>,
        prepared: &PreparedSchedule,
        density: Option<&DensityOptions>,
        workers: usize,
    ) -> Result<Vec<ChunkOutput>> {
        let work = || {
            chunks
                .into_par_iter()
                .map(|c| self.run_chunk(c, prepared, density))
                .collect::<Result<Vec<_>>>()
        };
        if workers == 0 {
            return work();
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::Io(format!("cannot build worker pool: {e}")))?;
        pool.install(work)
    }

    #[cfg(not(feature = "parallel"))]
    fn map_chunks(
        &self,
        chunks: Vec<std::ops::Range<u64>>,
        prepared: &PreparedSchedule,
        density: Option<&DensityOptions>,
        _workers: usize,
    ) -> Result<Vec<ChunkOutput>> {
        chunks
            .into_iter()
            .map(|c| self.run_chunk(c, prepared, density))
            .collect()
    }
}
