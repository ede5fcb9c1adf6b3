//! Driven two-level atom: energies, π-pulse timing and the pulse envelope.
//!
//! Internal units are ħ = 1. The atom is integrated in the frame rotating
//! with the resonant drive, so the only time dependence left in the
//! Hamiltonian is the envelope of the coupling.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reduced Planck constant in internal units.
pub const HBAR: f64 = 1.0;

/// Relative tolerance on the π-pulse condition `t2 - t1 = πħ/v0`.
pub const PI_PULSE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhysicsConfig {
    pub e1: f64,
    pub e2: f64,
    pub delta_e: f64,
    /// Coupling matrix element; `v0/ħ` is the Rabi angular frequency.
    pub v0: f64,
    pub t_total: f64,
    pub t1: f64,
    pub t2: f64,
    pub rabi_period: f64,
    /// Width of the logistic on/off ramps of the pulse.
    pub envelope_rise: f64,
    /// When false the envelope is identically zero (free evolution under measurement).
    pub drive: bool,
}

impl PhysicsConfig {
    /// Builds a configuration whose pulse starts at `t1` and lasts exactly `πħ/v0`.
    pub fn new(e1: f64, e2: f64, v0: f64, t_total: f64, t1: f64, envelope_rise: f64) -> Result<Self> {
        let t2 = t1 + PI * HBAR / v0;
        Self::with_pulse(e1, e2, v0, t_total, t1, t2, envelope_rise)
    }

    /// Builds a configuration with explicit pulse edges, checking every invariant.
    pub fn with_pulse(
        e1: f64,
        e2: f64,
        v0: f64,
        t_total: f64,
        t1: f64,
        t2: f64,
        envelope_rise: f64,
    ) -> Result<Self> {
        let cfg = PhysicsConfig {
            e1,
            e2,
            delta_e: e2 - e1,
            v0,
            t_total,
            t1,
            t2,
            rabi_period: 2.0 * PI * HBAR / v0,
            envelope_rise,
            drive: true,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.e1, self.e2, self.v0, self.t_total, self.t1, self.t2, self.envelope_rise];
        if all.iter().any(|x| !x.is_finite()) {
            return Err(Error::Physics("all parameters must be finite".into()));
        }
        if self.e2 <= self.e1 {
            return Err(Error::Physics(format!("need e2 > e1, got e1={} e2={}", self.e1, self.e2)));
        }
        if self.delta_e != self.e2 - self.e1 {
            return Err(Error::Physics("delta_e must equal e2 - e1".into()));
        }
        if self.v0 <= 0.0 {
            return Err(Error::Physics(format!("coupling v0 must be positive, got {}", self.v0)));
        }
        if !(0.0 <= self.t1 && self.t1 < self.t2 && self.t2 <= self.t_total) {
            return Err(Error::Physics(format!(
                "pulse [{}, {}] must lie inside [0, {}]",
                self.t1, self.t2, self.t_total
            )));
        }
        let duration = self.t2 - self.t1;
        if ((duration - PI * HBAR / self.v0) / duration).abs() >= PI_PULSE_TOLERANCE {
            return Err(Error::Physics(format!(
                "pulse duration {duration} is not a π-pulse (πħ/v0 = {})",
                PI * HBAR / self.v0
            )));
        }
        if !(self.envelope_rise > 0.0 && self.envelope_rise < duration / 10.0) {
            return Err(Error::Physics(format!(
                "envelope_rise must be in (0, {}), got {}",
                duration / 10.0,
                self.envelope_rise
            )));
        }
        Ok(())
    }

    /// Same configuration with the drive switched off.
    pub fn without_drive(mut self) -> Self {
        self.drive = false;
        self
    }

    pub fn pulse_duration(&self) -> f64 {
        self.t2 - self.t1
    }

    /// The unit in which fuzziness values are quoted: `T_R / 3`.
    pub fn t_eff_unit(&self) -> f64 {
        self.rabi_period / 3.0
    }

    /// The unit in which time widths are quoted: `T_R / 2`.
    pub fn width_unit(&self) -> f64 {
        self.rabi_period / 2.0
    }

    /// Ramp profile multiplying `v0`: the product of a rising logistic centred
    /// on `t1` and a falling logistic centred on `t2`.
    pub fn pulse_envelope(&self, t: f64) -> f64 {
        if !self.drive {
            return 0.0;
        }
        logistic((t - self.t1) / self.envelope_rise) * logistic((self.t2 - t) / self.envelope_rise)
    }

    /// Off-diagonal rate of the rotating-frame Hamiltonian, `v0·env(t)/(2ħ)`.
    pub fn coupling_rate(&self, t: f64) -> f64 {
        0.5 * self.v0 * self.pulse_envelope(t) / HBAR
    }

    /// Lower and upper edge of the readout sampling interval for a given margin.
    pub fn readout_interval(&self, margin_fraction: f64) -> (f64, f64) {
        (
            self.e1 - margin_fraction * self.delta_e,
            self.e2 + margin_fraction * self.delta_e,
        )
    }

    pub fn mid_energy(&self) -> f64 {
        0.5 * (self.e1 + self.e2)
    }
}

impl Default for PhysicsConfig {
    fn default() -> Self {
        default_config()
    }
}

fn logistic(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

/// Window length of the default configuration, in Rabi periods.
pub const DEFAULT_DURATION_RABI: f64 = 0.75;

/// Canonical dimensionless configuration: ħ = 1, E1 = 0, E2 = 1, v0 = 1
/// (so T_R = 2π), a window of `0.75·T_R` with the π-pulse centred in it,
/// and ramps of one fiftieth of the pulse length.
pub fn default_config() -> PhysicsConfig {
    let v0 = 1.0;
    let rabi = 2.0 * PI * HBAR / v0;
    let t_total = DEFAULT_DURATION_RABI * rabi;
    let duration = PI * HBAR / v0;
    let t1 = 0.5 * (t_total - duration);
    PhysicsConfig::new(0.0, 1.0, v0, t_total, t1, duration / 50.0)
        .expect("default physics configuration is valid")
}

/// Amplitudes on |E1⟩ and |E2⟩ in the rotating frame; not necessarily normalized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumState {
    pub c1: Complex64,
    pub c2: Complex64,
}

impl QuantumState {
    pub fn ground() -> Self {
        QuantumState {
            c1: Complex64::new(1.0, 0.0),
            c2: Complex64::new(0.0, 0.0),
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.c1.norm_sqr() + self.c2.norm_sqr()
    }

    /// Normalized excited-state population `|c2|² / (|c1|² + |c2|²)`.
    pub fn excited_population(&self) -> f64 {
        let n = self.norm_sqr();
        if n > 0.0 {
            (self.c2.norm_sqr() / n).clamp(0.0, 1.0)
        } else {
            0.0
        }
    }

    pub fn is_finite(&self) -> bool {
        self.c1.is_finite() && self.c2.is_finite()
    }

    pub fn scale(&mut self, factor: f64) {
        self.c1 *= factor;
        self.c2 *= factor;
    }
}
