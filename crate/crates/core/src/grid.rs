//! Fourier-Bessel discretization of radial functions on a ball, one
//! angular-momentum sector at a time.
//!
//! Basis functions e_k(r) = c_k r^(-(N-2)/2) J_nu(j_k r / R) with
//! nu = l + (N-2)/2 diagonalize the sector Laplacian -Delta_l with Dirichlet
//! eigenvalues mu_k = (j_k/R)^2. Collocation nodes sit at the scaled zeros
//! j_q R / j_(M+1); the forward transform is the LU-backed inverse of the
//! synthesis matrix, so round trips are exact to machine precision, and the
//! quadrature weights carry the full R^N measure including |S^(N-1)|.

use crate::error::{Error, Result};
use crate::special::{bessel_j, bessel_zeros, sphere_area};
use nalgebra::{DMatrix, DVector};
use std::sync::{Arc, Mutex, OnceLock};

/// Angular-momentum sector of R^N.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SectorIndex {
    pub n_dim: u32,
    pub ell: u32,
}

impl SectorIndex {
    pub fn new(n_dim: u32, ell: u32) -> Result<Self> {
        if n_dim < 1 {
            return Err(Error::InvalidInput("N must be >= 1".into()));
        }
        if n_dim == 1 && ell > 1 {
            return Err(Error::InvalidInput(format!(
                "N = 1 admits only ell in {{0, 1}} (even/odd), got ell = {ell}"
            )));
        }
        Ok(SectorIndex { n_dim, ell })
    }

    /// Bessel order nu = ell + (N-2)/2; always >= -1/2.
    pub fn nu(&self) -> f64 {
        self.ell as f64 + (self.n_dim as f64 - 2.0) / 2.0
    }
}

/// Fourier-Bessel grid for one sector on the ball of radius R.
pub struct RadialGrid {
    pub sector: SectorIndex,
    pub radius: f64,
    pub modes: usize,
    /// Collocation radii, ascending in (0, R).
    pub nodes: Vec<f64>,
    /// Quadrature weights for full R^N integrals (|S^(N-1)| included).
    pub weights: Vec<f64>,
    /// Dirichlet eigenvalues mu_k of -Delta_l, ascending.
    pub eigenvalues: Vec<f64>,
    zeros: Vec<f64>,
    norm_consts: Vec<f64>,
    synth: DMatrix<f64>,
    forward: DMatrix<f64>,
    deriv: OnceLock<DMatrix<f64>>,
}

impl RadialGrid {
    /// Values of all basis functions at radius r (a synthesis row).
    pub fn basis_row(&self, r: f64) -> Vec<f64> {
        let m_exp = (self.sector.n_dim as f64 - 2.0) / 2.0;
        let nu = self.sector.nu();
        if r == 0.0 {
            // ell = 0: e_k(0) = c_k (j_k / 2R)^m / Gamma(m+1); ell > 0: 0
            return self
                .zeros
                .iter()
                .zip(&self.norm_consts)
                .map(|(&j, &c)| {
                    if self.sector.ell == 0 {
                        c * (j / (2.0 * self.radius)).powf(m_exp)
                            / crate::special::gamma(m_exp + 1.0)
                    } else {
                        0.0
                    }
                })
                .collect();
        }
        self.zeros
            .iter()
            .zip(&self.norm_consts)
            .map(|(&j, &c)| c * r.powf(-m_exp) * bessel_j(nu, j * r / self.radius))
            .collect()
    }

    /// Radial derivatives of all basis functions at radius r > 0:
    /// e_k'(r) = c_k r^(-m) [ (l/r) J_nu(b r) - b J_(nu+1)(b r) ], b = j_k/R.
    pub fn basis_deriv_row(&self, r: f64) -> Vec<f64> {
        let m_exp = (self.sector.n_dim as f64 - 2.0) / 2.0;
        let nu = self.sector.nu();
        let ell = self.sector.ell as f64;
        self.zeros
            .iter()
            .zip(&self.norm_consts)
            .map(|(&j, &c)| {
                let b = j / self.radius;
                c * r.powf(-m_exp)
                    * (ell / r * bessel_j(nu, b * r) - b * bessel_j(nu + 1.0, b * r))
            })
            .collect()
    }

    /// Synthesis matrix S[q, k] = e_k(node_q).
    pub fn synthesis(&self) -> &DMatrix<f64> {
        &self.synth
    }

    /// Derivative synthesis matrix D[q, k] = e_k'(node_q), built on demand.
    pub fn deriv_matrix(&self) -> &DMatrix<f64> {
        self.deriv.get_or_init(|| {
            let m = self.modes;
            let mut d = DMatrix::zeros(m, m);
            for (q, &r) in self.nodes.iter().enumerate() {
                for (k, v) in self.basis_deriv_row(r).into_iter().enumerate() {
                    d[(q, k)] = v;
                }
            }
            d
        })
    }

    /// values -> spectral coefficients (exact inverse of synthesis).
    pub fn forward(&self, values: &DVector<f64>) -> DVector<f64> {
        &self.forward * values
    }

    /// spectral coefficients -> values at the nodes.
    pub fn synthesize(&self, coeffs: &DVector<f64>) -> DVector<f64> {
        &self.synth * coeffs
    }

    /// Full R^N integral of a sampled radial function.
    pub fn integrate(&self, values: &DVector<f64>) -> f64 {
        self.weights.iter().zip(values.iter()).map(|(w, v)| w * v).sum()
    }

    /// Full R^N inner product of two sampled radial functions.
    pub fn inner(&self, a: &DVector<f64>, b: &DVector<f64>) -> f64 {
        self.weights
            .iter()
            .zip(a.iter().zip(b.iter()))
            .map(|(w, (x, y))| w * x * y)
            .sum()
    }

    /// Coefficient-space matrix of multiplication by sampled values:
    /// S^T diag(w * v) S. Exactly symmetric by construction of the product.
    pub fn multiplication_matrix(&self, values: &DVector<f64>) -> DMatrix<f64> {
        let m = self.modes;
        let mut scaled = DMatrix::zeros(m, m);
        for q in 0..m {
            let wv = self.weights[q] * values[q];
            for k in 0..m {
                scaled[(q, k)] = wv * self.synth[(q, k)];
            }
        }
        let a = self.synth.transpose() * scaled;
        0.5 * (&a + a.transpose())
    }
}

/// Build a grid. Rejects M < 8, nonpositive R, and N = 1 with ell > 1.
pub fn make_grid(sector: SectorIndex, radius: f64, modes: usize) -> Result<Arc<RadialGrid>> {
    SectorIndex::new(sector.n_dim, sector.ell)?;
    if modes < 8 {
        return Err(Error::InvalidInput(format!("M = {modes} < 8")));
    }
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::InvalidInput(format!("R = {radius} must be positive")));
    }
    let nu = sector.nu();
    let all_zeros = bessel_zeros(nu, modes + 1)?;
    let j_last = all_zeros[modes];
    let zeros = all_zeros[..modes].to_vec();
    let nodes: Vec<f64> = zeros.iter().map(|j| j * radius / j_last).collect();
    let eigenvalues: Vec<f64> = zeros.iter().map(|j| (j / radius).powi(2)).collect();
    let area = sphere_area(sector.n_dim);
    let n_f = sector.n_dim as f64;
    let m_exp = (n_f - 2.0) / 2.0;
    // c_k = sqrt(2) / (R |J_(nu+1)(j_k)| sqrt(|S^(N-1)|))
    let j_next: Vec<f64> = zeros.iter().map(|&j| bessel_j(nu + 1.0, j)).collect();
    let norm_consts: Vec<f64> = j_next
        .iter()
        .map(|jn| 2f64.sqrt() / (radius * jn.abs() * area.sqrt()))
        .collect();
    // w_q = |S^(N-1)| (2 R^2 / (j_(M+1)^2 J_(nu+1)(j_q)^2)) r_q^(N-2)
    let weights: Vec<f64> = nodes
        .iter()
        .zip(&j_next)
        .map(|(&r, jn)| area * 2.0 * radius * radius / (j_last * j_last * jn * jn) * r.powf(n_f - 2.0))
        .collect();
    let mut synth = DMatrix::zeros(modes, modes);
    for (q, &r) in nodes.iter().enumerate() {
        let rm = r.powf(-m_exp);
        for k in 0..modes {
            synth[(q, k)] = norm_consts[k] * rm * bessel_j(nu, zeros[k] * r / radius);
        }
    }
    let forward = synth
        .clone()
        .lu()
        .try_inverse()
        .ok_or_else(|| Error::Numerics("synthesis matrix is singular".into()))?;
    Ok(Arc::new(RadialGrid {
        sector,
        radius,
        modes,
        nodes,
        weights,
        eigenvalues,
        zeros,
        norm_consts,
        synth,
        forward,
        deriv: OnceLock::new(),
    }))
}

/// Process-wide grid cache keyed by (sector, R bits, M); grids are immutable.
pub fn cached_grid(sector: SectorIndex, radius: f64, modes: usize) -> Result<Arc<RadialGrid>> {
    type Key = (SectorIndex, u64, usize);
    static CACHE: OnceLock<Mutex<Vec<(Key, Arc<RadialGrid>)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
    let key = (sector, radius.to_bits(), modes);
    {
        let guard = cache.lock().unwrap();
        if let Some((_, g)) = guard.iter().find(|(k, _)| *k == key) {
            return Ok(g.clone());
        }
    }
    let grid = make_grid(sector, radius, modes)?;
    let mut guard = cache.lock().unwrap();
    if let Some((_, g)) = guard.iter().find(|(k, _)| *k == key) {
        return Ok(g.clone());
    }
    guard.push((key, grid.clone()));
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn rejects_bad_arguments() {
        let s = SectorIndex { n_dim: 1, ell: 0 };
        assert!(make_grid(s, 10.0, 4).is_err());
        assert!(make_grid(s, -1.0, 16).is_err());
        assert!(make_grid(s, 0.0, 16).is_err());
        assert!(SectorIndex::new(1, 2).is_err());
        assert!(SectorIndex::new(3, 5).is_ok());
    }

    #[test]
    fn cosine_sector_eigenvalues() {
        // N=1, ell=0, R=pi: mu_k = (k - 1/2)^2
        let g = make_grid(SectorIndex { n_dim: 1, ell: 0 }, PI, 8).unwrap();
        for (k, &mu) in g.eigenvalues.iter().enumerate() {
            let expect = (k as f64 + 0.5).powi(2);
            assert_relative_eq!(mu, expect, max_relative = 1e-12);
        }
    }

    #[test]
    fn sine_sector_eigenvalues() {
        // N=3, ell=0, R=1: nu = 1/2, mu_k = (k pi)^2
        let g = make_grid(SectorIndex { n_dim: 3, ell: 0 }, 1.0, 8).unwrap();
        for (k, &mu) in g.eigenvalues.iter().enumerate() {
            let expect = ((k + 1) as f64 * PI).powi(2);
            assert_relative_eq!(mu, expect, max_relative = 1e-12);
        }
    }

    #[test]
    fn disc_eigenvalues_from_zero_tables() {
        // N=2, ell=0, R=1, M=2 -> j_{0,1}^2, j_{0,2}^2
        let g = make_grid(SectorIndex { n_dim: 2, ell: 0 }, 1.0, 8).unwrap();
        assert_relative_eq!(g.eigenvalues[0], 5.783_185_962_946_785, max_relative = 1e-10);
        assert_relative_eq!(g.eigenvalues[1], 30.471_262_343_662_087, max_relative = 1e-10);
    }

    #[test]
    fn eigenvalues_strictly_increasing_positive() {
        for (n, l) in [(1u32, 0u32), (1, 1), (2, 0), (2, 2), (3, 1), (3, 3)] {
            let g = make_grid(SectorIndex { n_dim: n, ell: l }, 50.0, 32).unwrap();
            assert!(g.eigenvalues[0] > 0.0);
            for w in g.eigenvalues.windows(2) {
                assert!(w[1] > w[0]);
            }
            for w in g.nodes.windows(2) {
                assert!(w[1] > w[0] && w[0] > 0.0 && w[1] < 50.0);
            }
        }
    }

    #[test]
    fn n1_basis_is_normalized_cosine() {
        let g = make_grid(SectorIndex { n_dim: 1, ell: 0 }, 17.0, 16).unwrap();
        // e_k(r) = sqrt(1/R) cos(j_k r / R) once the |S^0| = 2 factor is folded in
        let r = 3.2;
        let row = g.basis_row(r);
        for (k, &j) in g.zeros.iter().enumerate() {
            let expect = (1.0 / 17.0f64).sqrt() * (j * r / 17.0).cos();
            assert_relative_eq!(row[k], expect, max_relative = 1e-10, epsilon = 1e-12);
        }
        // and at the origin
        let row0 = g.basis_row(0.0);
        for v in &row0 {
            assert_relative_eq!(*v, (1.0 / 17.0f64).sqrt(), max_relative = 1e-10);
        }
    }

    #[test]
    fn basis_deriv_matches_finite_differences() {
        for (n, l) in [(1u32, 0u32), (2, 1), (3, 0), (3, 2)] {
            let g = make_grid(SectorIndex { n_dim: n, ell: l }, 30.0, 24).unwrap();
            let r = 7.3;
            let h = 1e-6;
            let up = g.basis_row(r + h);
            let dn = g.basis_row(r - h);
            let drow = g.basis_deriv_row(r);
            for k in [0usize, 5, 15, 23] {
                let fd = (up[k] - dn[k]) / (2.0 * h);
                assert_relative_eq!(drow[k], fd, max_relative = 1e-6, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn sector_ordering_of_eigenvalues() {
        // mu_k^(l') > mu_k^(l) for l' > l, matched mode index
        for n in [2u32, 3] {
            let mut prev: Option<Vec<f64>> = None;
            for l in 0..4 {
                let g = make_grid(SectorIndex { n_dim: n, ell: l }, 40.0, 24).unwrap();
                if let Some(p) = &prev {
                    for (a, b) in g.eigenvalues.iter().zip(p) {
                        assert!(a > b, "sector ordering violated at N={n}, l={l}");
                    }
                }
                prev = Some(g.eigenvalues.clone());
            }
        }
    }
}
