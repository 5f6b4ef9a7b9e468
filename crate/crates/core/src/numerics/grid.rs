use serde::{Deserialize, Serialize};

use super::NumericsError;

/// Uniform radial grid `r_i = r_min + i·spacing`, `i = 0..n_points`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadialGrid {
    pub r_min: f64,
    pub r_max: f64,
    pub n_points: usize,
    pub spacing: f64,
}

impl RadialGrid {
    pub fn new(r_min: f64, r_max: f64, n_points: usize) -> Result<Self, NumericsError> {
        if !(r_min > 0.0 && r_min < r_max) || n_points < 3 || !r_max.is_finite() {
            return Err(NumericsError::InvalidGrid(format!("r_min={r_min}, r_max={r_max}, n_points={n_points}")));
        }
        Ok(RadialGrid { r_min, r_max, n_points, spacing: (r_max - r_min) / (n_points - 1) as f64 })
    }

    /// Cell-centred grid `r_i = (i + ½)h` ending at `r_max`; the origin is a
    /// cell face, which keeps the discretization second order for every `m`.
    pub fn cell_centred(r_max: f64, n_points: usize) -> Result<Self, NumericsError> {
        let h = r_max / (n_points as f64 - 0.5);
        Self::new(h / 2.0, r_max, n_points)
    }

    pub fn oscillator_reference() -> Self {
        Self::cell_centred(14.0, 4000).unwrap()
    }

    pub fn hydrogen_reference() -> Self {
        Self::cell_centred(60.0, 12000).unwrap()
    }

    pub fn point(&self, i: usize) -> f64 {
        self.r_min + i as f64 * self.spacing
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_points).map(|i| self.point(i))
    }

    /// Same node count, every coordinate multiplied by `s > 0`.
    pub fn scaled(&self, s: f64) -> Self {
        RadialGrid { r_min: self.r_min * s, r_max: self.r_max * s, n_points: self.n_points, spacing: self.spacing * s }
    }

    /// Cell-centred grid with half the nodes over the same range.
    pub fn coarsened(&self) -> Result<Self, NumericsError> {
        Self::cell_centred(self.r_max, self.n_points / 2)
    }

    pub fn is_cell_centred(&self) -> bool {
        (self.r_min - self.spacing / 2.0).abs() <= 1e-12 * self.spacing.max(1.0)
    }
}
