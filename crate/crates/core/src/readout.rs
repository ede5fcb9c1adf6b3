//! Random readout curves: a straight trend plus a truncated sine series.

use std::f64::consts::PI;
use std::fmt::Write as _;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::physics::PhysicsConfig;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SamplerConfig {
    /// Number of sine modes.
    pub m: usize,
    /// Half-width of the coefficient interval, in units of ΔE.
    pub amp_fraction: f64,
    /// Extension of the endpoint interval beyond [E1, E2], in units of ΔE.
    pub margin_fraction: f64,
    pub seed: u64,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            m: 10,
            amp_fraction: 0.35,
            margin_fraction: 0.5,
            seed: 0,
        }
    }
}

impl SamplerConfig {
    pub fn validate(&self) -> Result<()> {
        if self.m < 1 {
            return Err(Error::Sampler("need at least one Fourier mode".into()));
        }
        if !(self.amp_fraction >= 0.0 && self.amp_fraction.is_finite()) {
            return Err(Error::Sampler(format!("amp_fraction must be >= 0, got {}", self.amp_fraction)));
        }
        if !(self.margin_fraction >= 0.0 && self.margin_fraction.is_finite()) {
            return Err(Error::Sampler(format!(
                "margin_fraction must be >= 0, got {}",
                self.margin_fraction
            )));
        }
        Ok(())
    }
}

/// A candidate readout `E(t) = g(t) + Σ a_k sin(kπt/T)` with `g` the line
/// through `(0, e_start)` and `(T, e_end)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReadoutCurve {
    pub e_start: f64,
    pub e_end: f64,
    pub coeffs: Vec<f64>,
    pub t_total: f64,
}

impl ReadoutCurve {
    pub fn new(e_start: f64, e_end: f64, coeffs: Vec<f64>, t_total: f64) -> Self {
        ReadoutCurve {
            e_start,
            e_end,
            coeffs,
            t_total,
        }
    }

    /// `E(t) ≡ value` with `m` zero coefficients.
    pub fn constant(value: f64, m: usize, t_total: f64) -> Self {
        Self::new(value, value, vec![0.0; m], t_total)
    }

    pub fn m(&self) -> usize {
        self.coeffs.len()
    }

    pub fn trend(&self, t: f64) -> f64 {
        let x = t / self.t_total;
        self.e_start + (self.e_end - self.e_start) * x
    }

    pub fn eval(&self, t: f64) -> f64 {
        // Endpoints are returned exactly; sin(kπ) is only ~1e-16 in floating point.
        if t == 0.0 {
            return self.e_start;
        }
        if t == self.t_total {
            return self.e_end;
        }
        let w = PI * t / self.t_total;
        let series: f64 = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a * ((i + 1) as f64 * w).sin())
            .sum();
        self.trend(t) + series
    }

    /// Evaluates with a precomputed row `sin(kπt/T)`, k = 1..m.
    pub(crate) fn eval_with_basis(&self, t: f64, sines: &[f64]) -> f64 {
        debug_assert_eq!(sines.len(), self.coeffs.len());
        let series: f64 = self.coeffs.iter().zip(sines).map(|(a, s)| a * s).sum();
        self.trend(t) + series
    }

    pub fn smoothed(&self) -> ReadoutCurve {
        smooth_readout(self)
    }

    /// One line of the curve dump: `index e_start e_end a_1 .. a_m`.
    pub fn dump_line(&self, index: u64) -> String {
        let mut line = format!("{index} {:e} {:e}", self.e_start, self.e_end);
        for a in &self.coeffs {
            let _ = write!(line, " {a:e}");
        }
        line
    }
}

/// Damping factor `exp{-(k/3)²}` applied to mode `k` (1-based).
pub fn smoothing_factor(k: usize) -> f64 {
    let x = k as f64 / 3.0;
    (-x * x).exp()
}

pub fn smooth_readout(curve: &ReadoutCurve) -> ReadoutCurve {
    let coeffs = curve
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, a)| a * smoothing_factor(i + 1))
        .collect();
    ReadoutCurve {
        coeffs,
        ..curve.clone()
    }
}

pub fn eval_readout(curve: &ReadoutCurve, t: f64) -> f64 {
    curve.eval(t)
}

fn uniform<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * rng.random::<f64>()
}

/// Draws endpoints uniformly from `I_E` and each coefficient uniformly from
/// `I_a`, in the order `e_start, e_end, a_1, .., a_m`.
pub fn sample_readout<R: Rng + ?Sized>(rng: &mut R, cfg: &SamplerConfig, phys: &PhysicsConfig) -> ReadoutCurve {
    let (lo, hi) = phys.readout_interval(cfg.margin_fraction);
    let amp = cfg.amp_fraction * phys.delta_e;
    let e_start = uniform(rng, lo, hi);
    let e_end = uniform(rng, lo, hi);
    let coeffs = (0..cfg.m).map(|_| uniform(rng, -amp, amp)).collect();
    ReadoutCurve::new(e_start, e_end, coeffs, phys.t_total)
}

/// Random stream for trajectory `index`: ChaCha8 keyed by `base_seed`,
/// stream number `index`. Independent of scheduling and of the schedule.
pub fn trajectory_rng(base_seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(base_seed);
    rng.set_stream(index);
    rng
}

/// The curve of trajectory `index` in the ensemble keyed by `cfg.seed`.
pub fn curve_for_index(cfg: &SamplerConfig, phys: &PhysicsConfig, index: u64) -> ReadoutCurve {
    sample_readout(&mut trajectory_rng(cfg.seed, index), cfg, phys)
}

/// Parses a dump produced by [`ReadoutCurve::dump_line`]. Blank lines and
/// lines starting with `#` are skipped.
pub fn parse_curve_dump(text: &str, t_total: f64) -> Result<Vec<(u64, ReadoutCurve)>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |reason: String| Error::CurveDump {
            line: lineno + 1,
            reason,
        };
        let mut fields = line.split_whitespace();
        let index: u64 = fields
            .next()
            .ok_or_else(|| bad("missing index".into()))?
            .parse()
            .map_err(|e| bad(format!("index: {e}")))?;
        let nums = fields
            .map(|f| f.parse::<f64>().map_err(|e| bad(format!("{f:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if nums.len() < 3 {
            return Err(bad("need e_start, e_end and at least one coefficient".into()));
        }
        out.push((index, ReadoutCurve::new(nums[0], nums[1], nums[2..].to_vec(), t_total)));
    }
    Ok(out)
}
