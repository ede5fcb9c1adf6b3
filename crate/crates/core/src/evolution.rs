//! Integration of the damped two-level system for a prescribed readout.
//!
//! In the rotating frame the amplitudes obey
//!
//! ```text
//! dc1/dt = -i Ω(t) c2 - κ(t) (E1 - E(t))² c1
//! dc2/dt = -i Ω(t) c1 - κ(t) (E2 - E(t))² c2
//! ```
//!
//! with `Ω(t) = v0·env(t)/(2ħ)`. The system is advanced with classical
//! fixed-step RK4 from `|E1⟩`; the state is never renormalized, so the final
//! squared norm is the readout's probability density.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::physics::{PhysicsConfig, QuantumState};
use crate::readout::ReadoutCurve;
use crate::schedule::FuzzinessSchedule;

/// Squared norm below which a trajectory is treated as having zero weight.
pub const UNDERFLOW_NORM: f64 = 1e-150;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct IntegratorConfig {
    pub n_steps: usize,
    pub record_stride: usize,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        IntegratorConfig {
            n_steps: 4096,
            record_stride: 4,
        }
    }
}

impl IntegratorConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_steps < 256 {
            return Err(Error::Integrator(format!("n_steps must be >= 256, got {}", self.n_steps)));
        }
        if self.record_stride == 0 || self.n_steps % self.record_stride != 0 {
            return Err(Error::Integrator(format!(
                "record_stride {} must divide n_steps {}",
                self.record_stride, self.n_steps
            )));
        }
        Ok(())
    }

    /// Number of recorded points, including both endpoints.
    pub fn n_records(&self) -> usize {
        self.n_steps / self.record_stride + 1
    }

    /// Recording times on `[0, t_total]`.
    pub fn record_times(&self, t_total: f64) -> Vec<f64> {
        let r = self.n_steps / self.record_stride;
        (0..=r).map(|i| t_total * i as f64 / r as f64).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryResult {
    /// Probability density of the readout, the final squared norm.
    pub weight: f64,
    /// Normalized |c2|² on the recording grid.
    pub c2sq_series: Vec<f64>,
    /// Unnormalized squared norm on the recording grid.
    pub norm_series: Vec<f64>,
    pub final_c2sq: f64,
    /// Set when the norm fell below [`UNDERFLOW_NORM`]; `weight` is then 0.
    pub underflow: bool,
}

/// Fixed-step propagator with the time grid, the envelope and the sine
/// basis tabulated at every RK4 stage time.
#[derive(Debug, Clone)]
pub struct Evolver {
    phys: PhysicsConfig,
    icfg: IntegratorConfig,
    m: usize,
    /// Stage times `t_j = j·h/2`, `j = 0..=2N`.
    nodes: Vec<f64>,
    coupling: Vec<f64>,
    /// Row-major `(2N+1) × m` table of `sin(kπt_j/T)`.
    basis: Vec<f64>,
}

/// A schedule prepared for one [`Evolver`]: κ is tabulated up front unless it
/// depends on the readout.
#[derive(Debug, Clone)]
pub struct PreparedSchedule {
    schedule: FuzzinessSchedule,
    kappa: Option<Vec<f64>>,
}

impl PreparedSchedule {
    pub fn schedule(&self) -> &FuzzinessSchedule {
        &self.schedule
    }
}

impl Evolver {
    pub fn new(phys: &PhysicsConfig, icfg: &IntegratorConfig, m: usize) -> Result<Self> {
        phys.validate()?;
        icfg.validate()?;
        let stages = 2 * icfg.n_steps;
        let nodes: Vec<f64> = (0..=stages)
            .map(|j| phys.t_total * j as f64 / stages as f64)
            .collect();
        let coupling = nodes.iter().map(|&t| phys.coupling_rate(t)).collect();
        let mut basis = Vec::with_capacity(nodes.len() * m);
        for &t in &nodes {
            let w = std::f64::consts::PI * t / phys.t_total;
            basis.extend((1..=m).map(|k| (k as f64 * w).sin()));
        }
        Ok(Evolver {
            phys: phys.clone(),
            icfg: *icfg,
            m,
            nodes,
            coupling,
            basis,
        })
    }

    pub fn physics(&self) -> &PhysicsConfig {
        &self.phys
    }

    pub fn integrator(&self) -> &IntegratorConfig {
        &self.icfg
    }

    pub fn prepare(&self, schedule: &FuzzinessSchedule) -> Result<PreparedSchedule> {
        schedule.validate()?;
        let kappa = (!schedule.depends_on_readout()).then(|| {
            self.nodes
                .iter()
                .map(|&t| schedule.kappa_at(t, 0.0, &self.phys))
                .collect()
        });
        Ok(PreparedSchedule {
            schedule: schedule.clone(),
            kappa,
        })
    }

    fn readout_at_node(&self, curve: &ReadoutCurve, j: usize) -> f64 {
        let last = self.nodes.len() - 1;
        if j == 0 {
            curve.e_start
        } else if j == last {
            curve.e_end
        } else if curve.m() == self.m {
            curve.eval_with_basis(self.nodes[j], &self.basis[j * self.m..(j + 1) * self.m])
        } else {
            curve.eval(self.nodes[j])
        }
    }

    pub fn evolve(&self, curve: &ReadoutCurve, schedule: &FuzzinessSchedule) -> Result<TrajectoryResult> {
        let prepared = self.prepare(schedule)?;
        self.run(curve, &prepared)
    }

    /// Integrates one trajectory.
    pub fn run(&self, curve: &ReadoutCurve, prepared: &PreparedSchedule) -> Result<TrajectoryResult> {
        let phys = &self.phys;
        let n_nodes = self.nodes.len();
        // Diagonal damping rates κ(E_i − E)² at every stage time.
        let mut g1 = Vec::with_capacity(n_nodes);
        let mut g2 = Vec::with_capacity(n_nodes);
        for j in 0..n_nodes {
            let e = self.readout_at_node(curve, j);
            let kappa = match &prepared.kappa {
                Some(k) => k[j],
                None => prepared.schedule.kappa_at(self.nodes[j], e, phys),
            };
            g1.push(kappa * (phys.e1 - e) * (phys.e1 - e));
            g2.push(kappa * (phys.e2 - e) * (phys.e2 - e));
        }

        let rhs = |s: &QuantumState, j: usize| -> QuantumState {
            let omega = Complex64::new(0.0, -self.coupling[j]);
            QuantumState {
                c1: omega * s.c2 - g1[j] * s.c1,
                c2: omega * s.c1 - g2[j] * s.c2,
            }
        };

        let n = self.icfg.n_steps;
        let stride = self.icfg.record_stride;
        let h = phys.t_total / n as f64;
        let mut state = QuantumState::ground();
        let mut c2sq_series = Vec::with_capacity(self.icfg.n_records());
        let mut norm_series = Vec::with_capacity(self.icfg.n_records());
        c2sq_series.push(state.excited_population());
        norm_series.push(state.norm_sqr());
        let mut underflow = false;

        for step in 0..n {
            let j = 2 * step;
            let k1 = rhs(&state, j);
            let k2 = rhs(&axpy(&state, 0.5 * h, &k1), j + 1);
            let k3 = rhs(&axpy(&state, 0.5 * h, &k2), j + 1);
            let k4 = rhs(&axpy(&state, h, &k3), j + 2);
            state.c1 += (h / 6.0) * (k1.c1 + 2.0 * k2.c1 + 2.0 * k3.c1 + k4.c1);
            state.c2 += (h / 6.0) * (k1.c2 + 2.0 * k2.c2 + 2.0 * k3.c2 + k4.c2);

            if !state.is_finite() {
                return Err(Error::Integration { step: step + 1 });
            }
            let norm = state.norm_sqr();
            if norm < UNDERFLOW_NORM {
                // Past this point the weight is zero; keep the direction only.
                underflow = true;
                if norm == 0.0 {
                    return Err(Error::Integration { step: step + 1 });
                }
                state.scale(norm.sqrt().recip());
            }
            if (step + 1) % stride == 0 {
                c2sq_series.push(state.excited_population());
                norm_series.push(if underflow { 0.0 } else { state.norm_sqr() });
            }
        }

        let weight = if underflow { 0.0 } else { state.norm_sqr() };
        Ok(TrajectoryResult {
            weight,
            final_c2sq: *c2sq_series.last().expect("series has the initial point"),
            c2sq_series,
            norm_series,
            underflow,
        })
    }
}

fn axpy(s: &QuantumState, h: f64, k: &QuantumState) -> QuantumState {
    QuantumState {
        c1: s.c1 + h * k.c1,
        c2: s.c2 + h * k.c2,
    }
}

pub fn evolve(
    curve: &ReadoutCurve,
    schedule: &FuzzinessSchedule,
    phys: &PhysicsConfig,
    icfg: &IntegratorConfig,
) -> Result<TrajectoryResult> {
    Evolver::new(phys, icfg, curve.m())?.evolve(curve, schedule)
}

pub fn weight_of(
    curve: &ReadoutCurve,
    schedule: &FuzzinessSchedule,
    phys: &PhysicsConfig,
    icfg: &IntegratorConfig,
) -> Result<f64> {
    evolve(curve, schedule, phys, icfg).map(|r| r.weight)
}
