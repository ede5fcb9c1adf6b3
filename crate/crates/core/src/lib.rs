//! Monte Carlo simulation of a continuous fuzzy energy measurement on a
//! two-level atom driven through a resonant π-pulse.
//!
//! A measurement is described by a readout curve `E(t)`. For each readout the
//! damped Schrödinger equation gives the conditioned state and, through the
//! final squared norm, the probability density of that readout. Ensembles of
//! random readouts are weighted by these densities to estimate how often the
//! transition survives the measurement (softness) and how well the readout
//! tracks `|c2(t)|²` (reliability).

pub mod config;
pub mod density;
pub mod ensemble;
pub mod error;
pub mod evolution;
pub mod harness;
pub mod metrics;
pub mod physics;
pub mod readout;
pub mod schedule;

pub use density::{render_pgm, DensityAccumulator, DensityGrid, GridKind, GridShape, PsBands};
pub use ensemble::{DensityOptions, EnsembleOutput, EnsembleRunner};
pub use error::{Error, Result};
pub use evolution::{evolve, weight_of, Evolver, IntegratorConfig, TrajectoryResult};
pub use metrics::{DeviationBasis, EnsembleMetrics, Estimate, TrajectorySummary};
pub use physics::{default_config, PhysicsConfig, QuantumState};
pub use readout::{eval_readout, sample_readout, smooth_readout, ReadoutCurve, SamplerConfig};
pub use schedule::{kappa_from_t_eff, FuzzinessSchedule, LambdaForm, ScheduleKind};
