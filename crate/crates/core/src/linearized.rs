//! The linearized operator L_(+,l) = (-Delta_l)^s + 1 - (alpha+1) Q^alpha
//! per angular-momentum sector: assembly, dense symmetric spectra, Morse
//! index and kernel diagnostics, and sign-change counting.

use crate::error::{Error, Result};
use crate::field::RadialField;
use crate::grid::{cached_grid, RadialGrid, SectorIndex};
use crate::ground_state::GroundState;
use nalgebra::{DMatrix, DVector};
use std::sync::Arc;

/// Spectrum of one sector operator: the k lowest eigenpairs plus counts
/// over the full discrete spectrum.
pub struct SectorSpectrum {
    pub sector: SectorIndex,
    pub eigenvalues: Vec<f64>,
    pub eigenfields: Vec<RadialField>,
    pub negative_count: usize,
    pub near_zero: Vec<f64>,
    pub zero_tol: f64,
}

/// zero_tol = 1e-5 x (bottom of the free spectrum mu_1^s + shift).
pub fn zero_tolerance(grid: &RadialGrid, s: f64, shift: f64) -> f64 {
    1e-5 * (grid.eigenvalues[0].powf(s) + shift)
}

/// Dense symmetric coefficient-space matrix of m(-Delta_l) + diag potential:
/// diag(m(mu_k)) + S^T diag(w V) S, symmetrized.
pub fn operator_matrix(
    grid: &RadialGrid,
    multiplier: impl Fn(f64) -> f64,
    potential_values: &DVector<f64>,
) -> DMatrix<f64> {
    let mut a = grid.multiplication_matrix(potential_values);
    for (k, &mu) in grid.eigenvalues.iter().enumerate() {
        a[(k, k)] += multiplier(mu);
    }
    a
}

/// Assemble L_(+,l) around a converged ground state, on the sector grid with
/// the same (R, M) as the state's own grid.
pub fn assemble_lplus(
    gs: &GroundState,
    sector: SectorIndex,
) -> Result<(Arc<RadialGrid>, DMatrix<f64>)> {
    let base = gs.q.grid();
    if sector.n_dim != base.sector.n_dim {
        return Err(Error::InvalidInput(format!(
            "sector dimension {} does not match ground state dimension {}",
            sector.n_dim, base.sector.n_dim
        )));
    }
    let s = gs.params.s;
    let alpha = gs.params.alpha;
    let grid = if sector == base.sector {
        base.clone()
    } else {
        cached_grid(sector, base.radius, base.modes)?
    };
    // Q^alpha sampled at the sector grid nodes (cross-grid synthesis)
    let qa: DVector<f64> = if sector == base.sector {
        DVector::from_iterator(
            grid.modes,
            gs.q.values().iter().map(|&v| v.max(0.0).powf(alpha)),
        )
    } else {
        DVector::from_iterator(
            grid.modes,
            grid.nodes.iter().map(|&r| gs.q.eval_at(r).max(0.0).powf(alpha)),
        )
    };
    let pot = qa * (-(alpha + 1.0));
    let a = operator_matrix(&grid, |mu| mu.powf(s) + 1.0, &pot);
    Ok((grid, a))
}

/// Lowest-k eigenpairs of a dense symmetric sector operator.
pub fn sector_spectrum(
    grid: Arc<RadialGrid>,
    matrix: &DMatrix<f64>,
    k: usize,
    zero_tol: f64,
) -> Result<SectorSpectrum> {
    let asym = (matrix - matrix.transpose()).amax();
    if asym > 1e-10 * matrix.amax().max(1e-300) {
        return Err(Error::Numerics(format!("operator matrix asymmetry {asym:.3e}")));
    }
    let eig = nalgebra::SymmetricEigen::new(matrix.clone());
    let m = matrix.nrows();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].partial_cmp(&eig.eigenvalues[j]).unwrap());
    let negative_count = order.iter().filter(|&&i| eig.eigenvalues[i] < 0.0).count();
    let near_zero: Vec<f64> = order
        .iter()
        .map(|&i| eig.eigenvalues[i])
        .filter(|e| e.abs() < zero_tol)
        .collect();
    let take = k.min(m);
    let mut eigenvalues = Vec::with_capacity(take);
    let mut eigenfields = Vec::with_capacity(take);
    for &i in order.iter().take(take) {
        eigenvalues.push(eig.eigenvalues[i]);
        let coeffs = DVector::from_column_slice(eig.eigenvectors.column(i).as_slice());
        eigenfields.push(RadialField::from_coeffs(grid.clone(), coeffs));
    }
    Ok(SectorSpectrum {
        sector: grid.sector,
        eigenvalues,
        eigenfields,
        negative_count,
        near_zero,
        zero_tol,
    })
}

/// Count strict sign alternations among samples with |f| above
/// threshold_rel * max|f|.
pub fn sign_changes(f: &RadialField, threshold_rel: f64) -> usize {
    let cut = threshold_rel * f.max_abs();
    let mut count = 0;
    let mut last = 0.0f64;
    for &v in f.values().iter() {
        if v.abs() <= cut {
            continue;
        }
        if last != 0.0 && v.signum() != last.signum() {
            count += 1;
        }
        last = v;
    }
    count
}

/// One sector's line in the nondegeneracy report.
#[derive(Debug)]
pub struct SectorFinding {
    pub ell: u32,
    pub min_eigenvalue: f64,
    pub distance_to_zero: f64,
    pub negative_count: usize,
    pub zero_modes: usize,
}

/// Kernel structure of L_+ across sectors 0..=ell_max: the radial sector
/// needs a spectral gap at zero and exactly one negative eigenvalue, l=1
/// exactly the translation zero mode collinear with Q', and every higher
/// sector strictly positive. FAIL is a finding, not an error.
pub struct NondegeneracyReport {
    pub sectors: Vec<SectorFinding>,
    pub radial_gap: f64,
    pub translation_cosine: f64,
    pub zero_tol: f64,
    pub pass: bool,
}

pub fn nondegeneracy_report(gs: &GroundState, ell_max: u32) -> Result<NondegeneracyReport> {
    if ell_max < 2 {
        return Err(Error::InvalidInput("ell_max must be >= 2".into()));
    }
    let n_dim = gs.params.n_dim;
    let s = gs.params.s;
    let mut sectors = Vec::new();
    let mut radial_gap = f64::NAN;
    let mut translation_cosine = f64::NAN;
    let mut zero_tol = f64::NAN;
    let mut pass = true;
    let ell_top = if n_dim == 1 { 1 } else { ell_max };
    for ell in 0..=ell_top {
        let sector = SectorIndex { n_dim, ell };
        let (grid, a) = assemble_lplus(gs, sector)?;
        let tol = zero_tolerance(&grid, s, 1.0);
        zero_tol = tol;
        let spec = sector_spectrum(grid.clone(), &a, 4, tol)?;
        let min_e = spec.eigenvalues[0];
        let zero_modes = spec.near_zero.len();
        sectors.push(SectorFinding {
            ell,
            min_eigenvalue: min_e,
            distance_to_zero: spec.eigenvalues.iter().map(|e| e.abs()).fold(f64::INFINITY, f64::min),
            negative_count: spec.negative_count,
            zero_modes,
        });
        match ell {
            0 => {
                radial_gap =
                    spec.eigenvalues.iter().map(|e| e.abs()).fold(f64::INFINITY, f64::min);
                if spec.negative_count != 1 || zero_modes != 0 {
                    pass = false;
                }
            }
            1 => {
                if spec.negative_count != 0 || zero_modes != 1 || min_e.abs() > tol {
                    pass = false;
                }
                // translation mode: Q' synthesized onto the l=1 grid
                let qprime = DVector::from_iterator(
                    grid.modes,
                    grid.nodes.iter().map(|&r| {
                        gs.q
                            .grid()
                            .basis_deriv_row(r)
                            .iter()
                            .zip(gs.q.coeffs().iter())
                            .map(|(b, c)| b * c)
                            .sum::<f64>()
                    }),
                );
                let qp = RadialField::from_values(grid.clone(), qprime);
                let c1 = qp.coeffs().normalize();
                let c2 = spec.eigenfields[0].coeffs().normalize();
                translation_cosine = c1.dot(&c2).abs();
                if translation_cosine < 1.0 - 1e-6 {
                    pass = false;
                }
            }
            _ => {
                if min_e <= tol {
                    pass = false;
                }
            }
        }
    }
    // sector minima strictly increasing in l (quadratic-form ordering)
    for w in sectors.windows(2) {
        if w[1].min_eigenvalue <= w[0].min_eigenvalue {
            pass = false;
        }
    }
    Ok(NondegeneracyReport { sectors, radial_gap, translation_cosine, zero_tol, pass })
}
