use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("inadmissible exponent: alpha = {alpha} must lie in (0, {alpha_star}) for s = {s}, N = {n_dim}")]
    InadmissibleAlpha { alpha: f64, s: f64, n_dim: u32, alpha_star: f64 },

    #[error("numerical failure: {0}")]
    Numerics(String),

    #[error("petviashvili iteration stalled: |gamma - 1| = {gamma_gap:.3e} after {iterations} iterations")]
    Stalled { gamma_gap: f64, iterations: usize },

    #[error("newton-singular: radial linearized operator is numerically singular ({0})")]
    NewtonSingular(String),

    #[error("degenerate L_+: smallest radial eigenvalue magnitude {sigma:.3e} below tolerance {tol:.3e}")]
    DegenerateLPlus { sigma: f64, tol: f64 },

    #[error("no plateau: tail residual {residual:.3e} exceeds {limit:.3e}")]
    NoPlateau { residual: f64, limit: f64 },

    #[error("oscillatory quadrature failed to converge at r = {radius}")]
    OscillatoryQuadrature { radius: f64 },

    #[error("extrapolation unstable: estimates spread by factor {spread:.2e}")]
    ExtrapolationUnstable { spread: f64 },

    #[error("continuity break in homotopy at kappa = {kappa}: overlap {overlap:.4}")]
    ContinuityBreak { kappa: f64, overlap: f64 },

    #[error("branch stall at s = {last_good_s}: step fell below {min_step}")]
    BranchStall { last_good_s: f64, min_step: f64 },

    #[error("bisection bracket failure: {0}")]
    BracketFailure(String),

    #[error("bad exponential fit: residual {0:.3e}")]
    BadExponentialFit(f64),
}
