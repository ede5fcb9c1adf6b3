//! Self-normalized weighted estimates of softness and deviation.
//!
//! Every estimator takes `(weight, value)` pairs in trajectory-index order
//! and reduces them sequentially with compensated summation, so the result
//! does not depend on how trajectories were distributed over workers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::physics::PhysicsConfig;
use crate::readout::ReadoutCurve;

/// `|c2(T)|²` at or above this value counts as an approximate transition.
pub const TRANSITION_THRESHOLD: f64 = 0.5;

pub fn in_transition_set(final_c2sq: f64) -> bool {
    final_c2sq >= TRANSITION_THRESHOLD
}

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = CompensatedSum::default();
        for x in iter {
            s.add(x);
        }
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub value: f64,
    /// Linearized standard error of the ratio estimator.
    pub se: f64,
}

/// `f̄ = Σ p_i f_i / Σ p_i` with standard error `√(Σ p_i² (f_i − f̄)²) / Σ p_i`.
pub fn weighted_mean<I>(samples: I) -> Result<Estimate>
where
    I: IntoIterator<Item = (f64, f64)>,
    I::IntoIter: Clone,
{
    let iter = samples.into_iter();
    let mut n = 0usize;
    let mut norm = CompensatedSum::default();
    let mut num = CompensatedSum::default();
    for (w, f) in iter.clone() {
        n += 1;
        norm.add(w);
        num.add(w * f);
    }
    if n == 0 {
        return Err(Error::EmptyEnsemble);
    }
    let norm = norm.value();
    if !(norm > 0.0) {
        return Err(Error::ZeroWeight);
    }
    let value = num.value() / norm;
    let var: CompensatedSum = iter.map(|(w, f)| (w * (f - value)).powi(2)).collect();
    Ok(Estimate {
        value,
        se: var.value().sqrt() / norm,
    })
}

/// Weighted probability of an approximate transition from `(weight, |c2(T)|²)` pairs.
pub fn softness<I>(samples: I) -> Result<Estimate>
where
    I: IntoIterator<Item = (f64, f64)>,
    I::IntoIter: Clone,
{
    weighted_mean(
        samples
            .into_iter()
            .map(|(w, c2)| (w, if in_transition_set(c2) { 1.0 } else { 0.0 })),
    )
}

/// Root of the weighted mean of per-trajectory mean-square deviations,
/// with the delta-method standard error `se(d²) / 2d`.
pub fn deviation<I>(samples: I) -> Result<Estimate>
where
    I: IntoIterator<Item = (f64, f64)>,
    I::IntoIter: Clone,
{
    let d2 = weighted_mean(samples)?;
    let d = d2.value.max(0.0).sqrt();
    let se = if d > 0.0 { d2.se / (2.0 * d) } else { 0.0 };
    Ok(Estimate { value: d, se })
}

/// `(1/T) ∫₀ᵀ [(E(t) − E1)/ΔE − |c2(t)|²]² dt` by the trapezoid rule on the
/// uniform recording grid of `c2sq_series`.
pub fn mean_square_deviation(curve: &ReadoutCurve, c2sq_series: &[f64], phys: &PhysicsConfig) -> f64 {
    let r = c2sq_series.len() - 1;
    let integrand = |i: usize| {
        let t = phys.t_total * i as f64 / r as f64;
        let x = (curve.eval(t) - phys.e1) / phys.delta_e - c2sq_series[i];
        x * x
    };
    let mut acc = CompensatedSum::default();
    acc.add(0.5 * (integrand(0) + integrand(r)));
    for i in 1..r {
        acc.add(integrand(i));
    }
    acc.value() / r as f64
}

/// Which version of the readout enters the deviation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeviationBasis {
    /// Readouts with Fourier coefficients damped by `exp{-(k/3)²}`.
    #[default]
    Smoothed,
    Raw,
}

/// Per-trajectory quantities the ensemble metrics are built from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrajectorySummary {
    pub index: u64,
    pub weight: f64,
    pub final_c2sq: f64,
    pub msd_raw: f64,
    pub msd_smoothed: f64,
    pub underflow: bool,
}

impl TrajectorySummary {
    pub fn msd(&self, basis: DeviationBasis) -> f64 {
        match basis {
            DeviationBasis::Smoothed => self.msd_smoothed,
            DeviationBasis::Raw => self.msd_raw,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnsembleMetrics {
    pub softness: f64,
    pub softness_se: f64,
    pub deviation: f64,
    pub deviation_se: f64,
    pub reliability: f64,
    pub reliability_se: f64,
    pub n_samples: usize,
    pub weight_sum: f64,
    pub effective_sample_size: f64,
}

impl EnsembleMetrics {
    pub fn from_summaries(summaries: &[TrajectorySummary], basis: DeviationBasis) -> Result<Self> {
        let s = softness(summaries.iter().map(|t| (t.weight, t.final_c2sq)))?;
        let d = deviation(summaries.iter().map(|t| (t.weight, t.msd(basis))))?;
        let weight_sum = summaries.iter().map(|t| t.weight).collect::<CompensatedSum>().value();
        let sq = summaries.iter().map(|t| t.weight * t.weight).collect::<CompensatedSum>().value();
        let reliability = 1.0 / d.value;
        Ok(EnsembleMetrics {
            softness: s.value,
            softness_se: s.se,
            deviation: d.value,
            deviation_se: d.se,
            reliability,
            reliability_se: d.se * reliability * reliability,
            n_samples: summaries.len(),
            weight_sum,
            effective_sample_size: (weight_sum * weight_sum / sq).min(summaries.len() as f64),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::physics::default_config;

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut s = CompensatedSum::default();
        s.add(1e16);
        for _ in 0..1000 {
            s.add(1.0);
        }
        s.add(-1e16);
        assert_eq!(s.value(), 1000.0);
    }

    #[test]
    fn constant_functional_is_one() {
        let e = weighted_mean([(0.3, 1.0), (1e-9, 1.0), (0.7, 1.0)]).unwrap();
        assert_eq!(e.value, 1.0);
        assert_eq!(e.se, 0.0);
    }

    #[test]
    fn softness_counts_threshold_inclusively() {
        let s = softness([(1.0, 0.5), (1.0, 0.49999), (2.0, 0.9)]).unwrap();
        assert!((s.value - 0.75).abs() < 1e-15);
        let all = softness([(0.2, 0.999), (0.5, 1.0)]).unwrap();
        assert_eq!(all.value, 1.0);
    }

    #[test]
    fn errors() {
        assert_eq!(weighted_mean(Vec::<(f64, f64)>::new()), Err(Error::EmptyEnsemble));
        assert_eq!(softness([(0.0, 1.0), (0.0, 0.2)]), Err(Error::ZeroWeight));
        assert_eq!(deviation([(0.0, 1.0)]), Err(Error::ZeroWeight));
    }

    #[test]
    fn perfect_agreement_has_zero_deviation() {
        let phys = default_config();
        let curve = ReadoutCurve::constant(phys.e1, 10, phys.t_total);
        let msd = mean_square_deviation(&curve, &vec![0.0; 1025], &phys);
        assert_eq!(msd, 0.0);
        let d = deviation([(0.4, msd), (0.6, msd)]).unwrap();
        assert_eq!(d.value, 0.0);
    }

    #[test]
    fn msd_of_offset_line() {
        // E(t) ≡ E1 + 0.3ΔE against |c2|² ≡ 0 gives exactly 0.09.
        let phys = default_config();
        let curve = ReadoutCurve::constant(phys.e1 + 0.3, 10, phys.t_total);
        let msd = mean_square_deviation(&curve, &vec![0.0; 257], &phys);
        assert!((msd - 0.09).abs() < 1e-15);
    }

    #[test]
    fn reliability_is_reciprocal() {
        let s: Vec<_> = (0..10)
            .map(|i| TrajectorySummary {
                index: i,
                weight: 0.1 + i as f64 * 0.05,
                final_c2sq: i as f64 / 10.0,
                msd_raw: 0.2,
                msd_smoothed: 0.01 * (i + 1) as f64,
                underflow: false,
            })
            .collect();
        let m = EnsembleMetrics::from_summaries(&s, DeviationBasis::Smoothed).unwrap();
        assert!((m.reliability * m.deviation - 1.0).abs() <= 2.0 * f64::EPSILON);
        assert!(m.effective_sample_size <= 10.0);
        assert!((0.0..=1.0).contains(&m.softness));
        let raw = EnsembleMetrics::from_summaries(&s, DeviationBasis::Raw).unwrap();
        assert!((raw.deviation - 0.2f64.sqrt()).abs() < 1e-15);
    }
}
