//! Sampled radial functions and the diagonal spectral calculus of the
//! sector Laplacian: multipliers m(-Delta_l), the fractional power, its
//! logarithmic derivative, and the three norms M, T, V.

use crate::error::{Error, Result};
use crate::grid::RadialGrid;
use nalgebra::DVector;
use std::sync::{Arc, OnceLock};

/// A radial function sampled on a grid, with lazily cached coefficients.
#[derive(Clone)]
pub struct RadialField {
    grid: Arc<RadialGrid>,
    values: DVector<f64>,
    coeffs: Arc<OnceLock<DVector<f64>>>,
}

impl RadialField {
    pub fn from_values(grid: Arc<RadialGrid>, values: DVector<f64>) -> Self {
        assert_eq!(values.len(), grid.modes);
        RadialField { grid, values, coeffs: Arc::new(OnceLock::new()) }
    }

    pub fn from_coeffs(grid: Arc<RadialGrid>, coeffs: DVector<f64>) -> Self {
        assert_eq!(coeffs.len(), grid.modes);
        let values = grid.synthesize(&coeffs);
        let cell = OnceLock::new();
        let _ = cell.set(coeffs);
        RadialField { grid, values, coeffs: Arc::new(cell) }
    }

    pub fn from_fn(grid: Arc<RadialGrid>, f: impl Fn(f64) -> f64) -> Self {
        let values = DVector::from_iterator(grid.modes, grid.nodes.iter().map(|&r| f(r)));
        Self::from_values(grid, values)
    }

    pub fn zero(grid: Arc<RadialGrid>) -> Self {
        let n = grid.modes;
        Self::from_values(grid, DVector::zeros(n))
    }

    pub fn grid(&self) -> &Arc<RadialGrid> {
        &self.grid
    }

    pub fn values(&self) -> &DVector<f64> {
        &self.values
    }

    pub fn coeffs(&self) -> &DVector<f64> {
        self.coeffs.get_or_init(|| self.grid.forward(&self.values))
    }

    /// Evaluate at an arbitrary radius in [0, R) by basis synthesis.
    pub fn eval_at(&self, r: f64) -> f64 {
        let row = self.grid.basis_row(r);
        row.iter().zip(self.coeffs().iter()).map(|(b, c)| b * c).sum()
    }

    /// Radial derivative sampled at the nodes (spectral).
    pub fn derivative_values(&self) -> DVector<f64> {
        self.grid.deriv_matrix() * self.coeffs()
    }

    pub fn l2_norm(&self) -> f64 {
        self.coeffs().norm()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.amax()
    }

    /// Full R^N inner product.
    pub fn inner(&self, other: &RadialField) -> f64 {
        self.coeffs().dot(other.coeffs())
    }

    pub fn scale(&self, factor: f64) -> RadialField {
        RadialField::from_values(self.grid.clone(), &self.values * factor)
    }

    pub fn add_scaled(&self, other: &RadialField, factor: f64) -> RadialField {
        RadialField::from_values(self.grid.clone(), &self.values + &other.values * factor)
    }
}

/// Apply a spectral multiplier m(-Delta_l): c_k -> m(mu_k) c_k.
pub fn apply_multiplier(f: &RadialField, m: impl Fn(f64) -> f64) -> Result<RadialField> {
    let grid = f.grid().clone();
    let mut c = f.coeffs().clone();
    for (k, mu) in grid.eigenvalues.iter().enumerate() {
        let v = m(*mu);
        if !v.is_finite() {
            return Err(Error::InvalidInput(format!(
                "multiplier not finite at mu_{k} = {mu}: {v}"
            )));
        }
        c[k] *= v;
    }
    Ok(RadialField::from_coeffs(grid, c))
}

/// Fractional sector Laplacian (-Delta_l)^s, 0 < s <= 1.
pub fn fractional_laplacian(f: &RadialField, s: f64) -> Result<RadialField> {
    if !(s > 0.0 && s <= 1.0) {
        return Err(Error::InvalidInput(format!("s = {s} must lie in (0, 1]")));
    }
    apply_multiplier(f, |mu| mu.powf(s))
}

/// (-Delta_l)^s log(-Delta_l): multiplier mu^s ln(mu), 0 < s < 1.
pub fn log_laplacian_s(f: &RadialField, s: f64) -> Result<RadialField> {
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::InvalidInput(format!("s = {s} must lie in (0, 1)")));
    }
    apply_multiplier(f, |mu| mu.powf(s) * mu.ln())
}

/// The three norms of a profile: M = int |f|^2, T = int |(-Delta)^(s/2) f|^2
/// (spectrally, sum mu_k^s c_k^2), V = int |f|^(alpha+2).
pub fn norms(f: &RadialField, s: f64, alpha: f64) -> (f64, f64, f64) {
    let c = f.coeffs();
    let grid = f.grid();
    let m: f64 = c.iter().map(|x| x * x).sum();
    let t: f64 = c
        .iter()
        .zip(&grid.eigenvalues)
        .map(|(x, mu)| mu.powf(s) * x * x)
        .sum();
    let v: f64 = grid
        .weights
        .iter()
        .zip(f.values().iter())
        .map(|(w, x)| w * x.abs().powf(alpha + 2.0))
        .sum();
    (m, t, v)
}
