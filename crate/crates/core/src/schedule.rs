//! Fuzziness schedules and the conversion between fuzziness and measurement strength.
//!
//! Schedule parameters are stored in the units used for reporting:
//! fuzziness in `T_R/3`, time widths in `T_R/2`, energy widths in `ΔE`.
//! Evaluation converts to internal units through the physics configuration.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::physics::PhysicsConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScheduleKind {
    Constant,
    TimeGaussian,
    EnergyGaussian,
}

impl ScheduleKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ScheduleKind::Constant => "constant",
            ScheduleKind::TimeGaussian => "time-gaussian",
            ScheduleKind::EnergyGaussian => "energy-gaussian",
        }
    }
}

impl fmt::Display for ScheduleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ScheduleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "constant" => Ok(ScheduleKind::Constant),
            "time-gaussian" => Ok(ScheduleKind::TimeGaussian),
            "energy-gaussian" => Ok(ScheduleKind::EnergyGaussian),
            other => Err(Error::Schedule(format!("unknown schedule kind {other:?}"))),
        }
    }
}

/// Sign convention of the profile `λ(x) = exp(±(x−x₀)²/2δ²)`.
///
/// `Decaying` is the ordinary Gaussian bump of width δ. `Growing` takes the
/// positive exponent literally; the `a, b` normalization still pins the peak
/// and the offset, but the profile is flat with a sharp drop at the edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LambdaForm {
    #[default]
    Decaying,
    Growing,
}

impl LambdaForm {
    fn eval(self, offset: f64, width: f64) -> f64 {
        let x = offset * offset / (2.0 * width * width);
        match self {
            LambdaForm::Decaying => (-x).exp(),
            LambdaForm::Growing => x.exp(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzinessSchedule {
    pub kind: ScheduleKind,
    /// Constant fuzziness; `f64::INFINITY` switches the measurement off.
    pub t_eff_const: f64,
    pub t_eff_max: f64,
    pub t_eff_min: f64,
    pub width_t: f64,
    pub width_e: f64,
    /// Energy at which the energy profile reaches `t_eff_min`; `None` means `E2 + ΔE/2`.
    pub e_max: Option<f64>,
    pub lambda: LambdaForm,
}

impl Default for FuzzinessSchedule {
    fn default() -> Self {
        FuzzinessSchedule {
            kind: ScheduleKind::Constant,
            t_eff_const: 5.0,
            t_eff_max: 10.0,
            t_eff_min: 2.0,
            width_t: 0.2,
            width_e: 0.3,
            e_max: None,
            lambda: LambdaForm::Decaying,
        }
    }
}

/// Coefficients of `T_eff = a·λ + b`, in `T_R/3` units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileCoefficients {
    pub a: f64,
    pub b: f64,
}

impl FuzzinessSchedule {
    pub fn constant(t_eff: f64) -> Self {
        FuzzinessSchedule {
            kind: ScheduleKind::Constant,
            t_eff_const: t_eff,
            ..Default::default()
        }
    }

    /// No measurement at all (κ ≡ 0).
    pub fn unmeasured() -> Self {
        Self::constant(f64::INFINITY)
    }

    pub fn time_gaussian(width_t: f64) -> Self {
        FuzzinessSchedule {
            kind: ScheduleKind::TimeGaussian,
            width_t,
            ..Default::default()
        }
    }

    pub fn energy_gaussian(width_e: f64) -> Self {
        FuzzinessSchedule {
            kind: ScheduleKind::EnergyGaussian,
            width_e,
            ..Default::default()
        }
    }

    pub fn with_peak(mut self, t_eff_max: f64, t_eff_min: f64) -> Self {
        self.t_eff_max = t_eff_max;
        self.t_eff_min = t_eff_min;
        self
    }

    pub fn with_e_max(mut self, e_max: f64) -> Self {
        self.e_max = Some(e_max);
        self
    }

    pub fn with_lambda(mut self, lambda: LambdaForm) -> Self {
        self.lambda = lambda;
        self
    }

    /// Copy of `self` with its family's swept parameter replaced.
    pub fn with_parameter(mut self, value: f64) -> Self {
        match self.kind {
            ScheduleKind::Constant => self.t_eff_const = value,
            ScheduleKind::TimeGaussian => self.width_t = value,
            ScheduleKind::EnergyGaussian => self.width_e = value,
        }
        self
    }

    /// The family's swept parameter: t_eff, δT or δE.
    pub fn parameter(&self) -> f64 {
        match self.kind {
            ScheduleKind::Constant => self.t_eff_const,
            ScheduleKind::TimeGaussian => self.width_t,
            ScheduleKind::EnergyGaussian => self.width_e,
        }
    }

    pub fn depends_on_readout(&self) -> bool {
        self.kind == ScheduleKind::EnergyGaussian
    }

    pub fn validate(&self) -> Result<()> {
        match self.kind {
            ScheduleKind::Constant => {
                if !(self.t_eff_const > 0.0) {
                    return Err(Error::Schedule(format!(
                        "constant t_eff must be positive, got {}",
                        self.t_eff_const
                    )));
                }
            }
            ScheduleKind::TimeGaussian | ScheduleKind::EnergyGaussian => {
                if !(self.t_eff_max > self.t_eff_min && self.t_eff_min > 0.0 && self.t_eff_max.is_finite()) {
                    return Err(Error::Schedule(format!(
                        "need t_eff_max > t_eff_min > 0, got {} and {}",
                        self.t_eff_max, self.t_eff_min
                    )));
                }
                let width = if self.kind == ScheduleKind::TimeGaussian {
                    self.width_t
                } else {
                    self.width_e
                };
                if !(width > 0.0 && width.is_finite()) {
                    return Err(Error::Schedule(format!("width must be positive, got {width}")));
                }
                if let Some(e) = self.e_max {
                    if !e.is_finite() {
                        return Err(Error::Schedule("e_max must be finite".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn resolved_e_max(&self, phys: &PhysicsConfig) -> f64 {
        self.e_max.unwrap_or(phys.e2 + 0.5 * phys.delta_e)
    }

    fn coefficients_for(&self, lambda_edge: f64) -> ProfileCoefficients {
        let a = (self.t_eff_max - self.t_eff_min) / (1.0 - lambda_edge);
        ProfileCoefficients {
            a,
            b: self.t_eff_max - a,
        }
    }

    /// `a` and `b` of the profile; `None` for constant schedules.
    pub fn coefficients(&self, phys: &PhysicsConfig) -> Option<ProfileCoefficients> {
        match self.kind {
            ScheduleKind::Constant => None,
            ScheduleKind::TimeGaussian => Some(self.coefficients_for(self.time_lambda(phys.t_total, phys))),
            ScheduleKind::EnergyGaussian => {
                Some(self.coefficients_for(self.energy_lambda(self.resolved_e_max(phys), phys)))
            }
        }
    }

    fn time_lambda(&self, t: f64, phys: &PhysicsConfig) -> f64 {
        self.lambda
            .eval(t - 0.5 * phys.t_total, self.width_t * phys.width_unit())
    }

    fn energy_lambda(&self, e: f64, phys: &PhysicsConfig) -> f64 {
        self.lambda.eval(e - phys.mid_energy(), self.width_e * phys.delta_e)
    }

    /// Fuzziness in `T_R/3` units at time `t` for readout value `e_readout`.
    pub fn t_eff_units(&self, t: f64, e_readout: f64, phys: &PhysicsConfig) -> f64 {
        match self.kind {
            ScheduleKind::Constant => self.t_eff_const,
            ScheduleKind::TimeGaussian => {
                let c = self.coefficients_for(self.time_lambda(phys.t_total, phys));
                (c.a * self.time_lambda(t, phys) + c.b).max(self.t_eff_min)
            }
            ScheduleKind::EnergyGaussian => {
                let c = self.coefficients_for(self.energy_lambda(self.resolved_e_max(phys), phys));
                let v = c.a * self.energy_lambda(e_readout, phys) + c.b;
                // Growing form overflows far from the centre; both limits land on the floor.
                if v.is_nan() {
                    self.t_eff_min
                } else {
                    v.max(self.t_eff_min)
                }
            }
        }
    }

    /// Fuzziness in internal time units.
    pub fn t_eff_at(&self, t: f64, e_readout: f64, phys: &PhysicsConfig) -> Result<f64> {
        if !e_readout.is_finite() {
            return Err(Error::NonFiniteReadout(e_readout));
        }
        Ok(self.t_eff_units(t, e_readout, phys) * phys.t_eff_unit())
    }

    /// Measurement strength κ at `(t, e_readout)`; zero when the fuzziness is infinite.
    pub fn kappa_at(&self, t: f64, e_readout: f64, phys: &PhysicsConfig) -> f64 {
        let t_eff = self.t_eff_units(t, e_readout, phys) * phys.t_eff_unit();
        kappa_for(t_eff, phys.delta_e)
    }
}

fn kappa_for(t_eff: f64, delta_e: f64) -> f64 {
    4.0 * PI / (t_eff * delta_e * delta_e)
}

/// `κ = 4π / (T_eff·ΔE²)` with `t_eff` in internal time units.
pub fn kappa_from_t_eff(t_eff: f64, phys: &PhysicsConfig) -> Result<f64> {
    if !(t_eff > 0.0) {
        return Err(Error::NonPositiveTeff(t_eff));
    }
    Ok(kappa_for(t_eff, phys.delta_e))
}

/// Inverse of [`kappa_from_t_eff`].
pub fn t_eff_from_kappa(kappa: f64, phys: &PhysicsConfig) -> f64 {
    4.0 * PI / (kappa * phys.delta_e * phys.delta_e)
}
