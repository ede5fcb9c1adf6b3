//! Occupancy density plots: for a grid of equal-area squares over the
//! time-value plane, the weighted probability that a curve passes through
//! each square.
//!
//! A curve is the polyline through its samples. It visits a square if any
//! point of the polyline lies inside it, and contributes its weight at most
//! once per square.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::physics::PhysicsConfig;

/// Minimum number of samples per time bin.
pub const OVERSAMPLING: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GridKind {
    /// Smoothed readout curves over `I_E`.
    Readout,
    /// `|c2(t)|²` over `[0, 1]`.
    Excitation,
}

impl GridKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            GridKind::Readout => "readout",
            GridKind::Excitation => "excitation",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridShape {
    pub kind: GridKind,
    pub t_bins: usize,
    pub v_bins: usize,
    pub t_range: (f64, f64),
    pub v_range: (f64, f64),
}

impl GridShape {
    pub fn readout(phys: &PhysicsConfig, t_bins: usize, e_bins: usize, margin_fraction: f64) -> Self {
        GridShape {
            kind: GridKind::Readout,
            t_bins,
            v_bins: e_bins,
            t_range: (0.0, phys.t_total),
            v_range: phys.readout_interval(margin_fraction),
        }
    }

    pub fn excitation(phys: &PhysicsConfig, t_bins: usize, bins: usize) -> Self {
        GridShape {
            kind: GridKind::Excitation,
            t_bins,
            v_bins: bins,
            t_range: (0.0, phys.t_total),
            v_range: (0.0, 1.0),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.t_bins == 0 || self.v_bins == 0 {
            return Err(Error::Config(vec!["density grid needs at least one bin per axis".into()]));
        }
        if !(self.t_range.1 > self.t_range.0 && self.v_range.1 > self.v_range.0) {
            return Err(Error::Config(vec!["density grid ranges must be increasing".into()]));
        }
        Ok(())
    }

    fn cells(&self) -> usize {
        self.t_bins * self.v_bins
    }

    fn value_bin(&self, v: f64) -> f64 {
        (v - self.v_range.0) / (self.v_range.1 - self.v_range.0) * self.v_bins as f64
    }
}

/// Weighted visit counts, mergeable across workers.
#[derive(Debug, Clone)]
pub struct DensityAccumulator {
    shape: GridShape,
    /// Row-major by value bin: `mass[v * t_bins + t]`.
    mass: Vec<f64>,
    total_weight: f64,
    curves: usize,
    stamp: Vec<u32>,
    generation: u32,
}

impl DensityAccumulator {
    pub fn new(shape: GridShape) -> Result<Self> {
        shape.validate()?;
        Ok(DensityAccumulator {
            shape,
            mass: vec![0.0; shape.cells()],
            total_weight: 0.0,
            curves: 0,
            stamp: vec![0; shape.cells()],
            generation: 0,
        })
    }

    pub fn shape(&self) -> &GridShape {
        &self.shape
    }

    /// Adds one curve sampled uniformly over the grid's time range.
    pub fn accumulate(&mut self, series: &[f64], weight: f64) -> Result<()> {
        let sh = self.shape;
        let required = OVERSAMPLING * sh.t_bins + 1;
        if series.len() < required {
            return Err(Error::Resolution {
                samples: series.len(),
                t_bins: sh.t_bins,
                required,
            });
        }
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.generation = 1;
        }
        let segments = series.len() - 1;
        let tb = sh.t_bins as f64;
        for i in 0..segments {
            let (va, vb) = (series[i], series[i + 1]);
            // Positions in time-bin units.
            let xa = i as f64 / segments as f64 * tb;
            let xb = (i + 1) as f64 / segments as f64 * tb;
            let mut x0 = xa;
            while x0 < xb {
                let col = (x0.floor() as usize).min(sh.t_bins - 1);
                let x1 = ((col + 1) as f64).min(xb);
                let frac = |x: f64| (x - xa) / (xb - xa);
                let v0 = va + (vb - va) * frac(x0);
                let v1 = va + (vb - va) * frac(x1);
                self.mark_span(col, v0.min(v1), v0.max(v1), weight);
                if x1 <= x0 {
                    break;
                }
                x0 = x1;
            }
        }
        self.total_weight += weight;
        self.curves += 1;
        Ok(())
    }

    fn mark_span(&mut self, col: usize, lo: f64, hi: f64, weight: f64) {
        let sh = &self.shape;
        if hi < sh.v_range.0 || lo > sh.v_range.1 || !(lo.is_finite() && hi.is_finite()) {
            return;
        }
        let top = sh.v_bins - 1;
        let first = (sh.value_bin(lo).floor().max(0.0) as usize).min(top);
        let last = (sh.value_bin(hi).floor().max(0.0) as usize).min(top);
        for v in first..=last {
            let cell = v * sh.t_bins + col;
            if self.stamp[cell] != self.generation {
                self.stamp[cell] = self.generation;
                self.mass[cell] += weight;
            }
        }
    }

    /// Adds another accumulator's counts; shapes must match.
    pub fn merge(&mut self, other: &DensityAccumulator) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::GridMismatch);
        }
        for (a, b) in self.mass.iter_mut().zip(&other.mass) {
            *a += b;
        }
        self.total_weight += other.total_weight;
        self.curves += other.curves;
        Ok(())
    }

    /// Normalizes by the total weight.
    pub fn finalize(&self) -> Result<DensityGrid> {
        if self.curves == 0 {
            return Err(Error::EmptyEnsemble);
        }
        if !(self.total_weight > 0.0) {
            return Err(Error::ZeroWeight);
        }
        Ok(DensityGrid {
            shape: self.shape,
            cells: self
                .mass
                .iter()
                .map(|m| (m / self.total_weight).clamp(0.0, 1.0))
                .collect(),
            total_weight: self.total_weight,
            curves: self.curves,
        })
    }
}

/// Occupancy probabilities `P_S` per square.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityGrid {
    pub shape: GridShape,
    /// Row-major by value bin, lowest value first.
    pub cells: Vec<f64>,
    pub total_weight: f64,
    pub curves: usize,
}

impl DensityGrid {
    pub fn get(&self, t_bin: usize, v_bin: usize) -> f64 {
        self.cells[v_bin * self.shape.t_bins + t_bin]
    }

    /// `P_S` of one time column, lowest value bin first.
    pub fn column(&self, t_bin: usize) -> Vec<f64> {
        (0..self.shape.v_bins).map(|v| self.get(t_bin, v)).collect()
    }

    /// Centre of value bin `v`.
    pub fn value_center(&self, v_bin: usize) -> f64 {
        let (lo, hi) = self.shape.v_range;
        lo + (v_bin as f64 + 0.5) * (hi - lo) / self.shape.v_bins as f64
    }

    /// Matrix dump: one line per value bin from the lowest, one column per time bin.
    pub fn matrix_text(&self) -> String {
        let mut out = String::new();
        for v in 0..self.shape.v_bins {
            let row: Vec<String> = (0..self.shape.t_bins).map(|t| format!("{:.9e}", self.get(t, v))).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Axis ranges and band edges as `key = value` lines.
    pub fn sidecar_text(&self, bands: &PsBands) -> String {
        let sh = &self.shape;
        let mut out = String::new();
        let _ = writeln!(out, "kind = {}", sh.kind.as_str());
        let _ = writeln!(out, "width = {}", sh.t_bins);
        let _ = writeln!(out, "height = {}", sh.v_bins);
        let _ = writeln!(out, "t_min = {:e}", sh.t_range.0);
        let _ = writeln!(out, "t_max = {:e}", sh.t_range.1);
        let _ = writeln!(out, "value_min = {:e}", sh.v_range.0);
        let _ = writeln!(out, "value_max = {:e}", sh.v_range.1);
        let _ = writeln!(out, "row_order = top-is-value-max");
        let _ = writeln!(out, "gray = round(255 * (1 - P_S))");
        let _ = writeln!(out, "curves = {}", self.curves);
        let _ = writeln!(out, "total_weight = {:e}", self.total_weight);
        let edges: Vec<String> = bands.edges.iter().map(|e| format!("{e}")).collect();
        let _ = writeln!(out, "band_edges = {}", edges.join(","));
        let counts = bands.histogram(&self.cells);
        let counts: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(out, "band_cell_counts = {}", counts.join(","));
        out
    }
}

/// Gray level of a cell: dark for probable squares.
pub fn gray_level(p: f64) -> u8 {
    (255.0 * (1.0 - p.clamp(0.0, 1.0))).round() as u8
}

/// Binary 8-bit portable graymap; the top raster row is the highest value bin.
pub fn render_pgm(grid: &DensityGrid) -> Vec<u8> {
    let sh = &grid.shape;
    let mut out = format!("P5\n{} {}\n255\n", sh.t_bins, sh.v_bins).into_bytes();
    out.reserve(sh.cells());
    for v in (0..sh.v_bins).rev() {
        out.extend((0..sh.t_bins).map(|t| gray_level(grid.get(t, v))));
    }
    out
}

/// Band edges used to classify `P_S` values, e.g. `0.3 ≤ P_S ≤ 0.4`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PsBands {
    pub edges: Vec<f64>,
}

impl Default for PsBands {
    fn default() -> Self {
        PsBands {
            edges: (1..10).map(|i| i as f64 / 10.0).collect(),
        }
    }
}

impl PsBands {
    /// The `[lo, hi]` band containing `p`, using 0 and 1 as outer edges.
    pub fn band(&self, p: f64) -> (f64, f64) {
        let mut lo = 0.0;
        for &e in &self.edges {
            if p < e {
                return (lo, e);
            }
            lo = e;
        }
        (lo, 1.0)
    }

    /// Number of nonzero cells in each band.
    pub fn histogram(&self, cells: &[f64]) -> Vec<usize> {
        let mut counts = vec![0; self.edges.len() + 1];
        for &p in cells.iter().filter(|&&p| p > 0.0) {
            let idx = self.edges.iter().take_while(|&&e| p >= e).count();
            counts[idx] += 1;
        }
        counts
    }
}
