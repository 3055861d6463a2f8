//! Numerical toolkit for radial problems with the fractional Laplacian
//! (-Delta)^s on R^N: Fourier-Bessel spectral calculus per angular-momentum
//! sector, resolvent and heat kernels, solitary-wave ground states with
//! Pohozaev and nondegeneracy certificates, the weighted harmonic extension
//! to the upper half-space with its monotone quantity, fractional
//! Schrodinger spectra with oscillation counts, and continuation of the
//! ground-state branch in the order s.

pub mod continuation;
pub mod error;
pub mod extension;
pub mod field;
pub mod grid;
pub mod ground_state;
pub mod linearized;
pub mod quad;
pub mod resolvent;
pub mod schrodinger;
pub mod special;

pub use error::{Error, Result};
pub use field::{apply_multiplier, fractional_laplacian, log_laplacian_s, norms, RadialField};
pub use grid::{cached_grid, make_grid, RadialGrid, SectorIndex};
