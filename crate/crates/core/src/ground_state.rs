//! Ground-state profiles Q of (-Delta)^s Q + Q - |Q|^alpha Q = 0: the
//! Weinstein quotient, a Petviashvili stage with Newton polish, Pohozaev
//! residuals, and the algebraic tail certificate.

use crate::error::{Error, Result};
use crate::field::{fractional_laplacian, norms, RadialField};
use crate::grid::{RadialGrid, SectorIndex};
use crate::linearized::operator_matrix;
use crate::resolvent::resolvent_kernel_value;
use crate::special::{bessel_k, sphere_area};
use nalgebra::DVector;
use serde::Serialize;
use std::f64::consts::PI;
use std::sync::Arc;

/// Problem parameters (N, s, alpha) with the admissibility bound
/// alpha < alpha_*(s, N) enforced at construction.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ProblemParams {
    pub n_dim: u32,
    pub s: f64,
    pub alpha: f64,
}

/// alpha_*(s, N) = 4s/(N - 2s) below s = N/2, infinite above.
pub fn alpha_star(s: f64, n_dim: u32) -> f64 {
    let n = n_dim as f64;
    if s < n / 2.0 {
        4.0 * s / (n - 2.0 * s)
    } else {
        f64::INFINITY
    }
}

impl ProblemParams {
    pub fn new(n_dim: u32, s: f64, alpha: f64) -> Result<Self> {
        if n_dim < 1 {
            return Err(Error::InvalidInput("N must be >= 1".into()));
        }
        if !(s > 0.0 && s <= 1.0) {
            return Err(Error::InvalidInput(format!("s = {s} must lie in (0, 1]")));
        }
        let a_star = alpha_star(s, n_dim);
        if !(alpha > 0.0 && alpha < a_star) {
            return Err(Error::InadmissibleAlpha { alpha, s, n_dim, alpha_star: a_star });
        }
        Ok(ProblemParams { n_dim, s, alpha })
    }
}

/// Default desk-scale grid per dimension: (R, M).
pub fn default_grid_size(n_dim: u32) -> (f64, usize) {
    if n_dim == 1 {
        (200.0, 1024)
    } else {
        (100.0, 768)
    }
}

/// A converged profile with its diagnostics.
pub struct GroundState {
    pub params: ProblemParams,
    pub q: RadialField,
    pub mass: f64,
    pub kinetic: f64,
    pub potential: f64,
    pub pohozaev1_residual: f64,
    pub pohozaev2_residual: f64,
    pub tail_constant: Option<f64>,
    pub tail_residual: Option<f64>,
    pub weinstein_j: f64,
    pub petviashvili_iterations: usize,
    pub newton_iterations: usize,
    pub residual: f64,
    pub converged: bool,
}

/// Scalar summary for serialization.
#[derive(Debug, Clone, Serialize)]
pub struct GroundStateSummary {
    pub n_dim: u32,
    pub s: f64,
    pub alpha: f64,
    pub radius: f64,
    pub modes: usize,
    pub q_origin: f64,
    pub mass: f64,
    pub kinetic: f64,
    pub potential: f64,
    pub pohozaev1_residual: f64,
    pub pohozaev2_residual: f64,
    pub tail_constant: Option<f64>,
    pub tail_residual: Option<f64>,
    pub weinstein_j: f64,
    pub petviashvili_iterations: usize,
    pub newton_iterations: usize,
    pub residual: f64,
    pub converged: bool,
}

impl GroundState {
    pub fn summary(&self) -> GroundStateSummary {
        GroundStateSummary {
            n_dim: self.params.n_dim,
            s: self.params.s,
            alpha: self.params.alpha,
            radius: self.q.grid().radius,
            modes: self.q.grid().modes,
            q_origin: self.q.eval_at(0.0),
            mass: self.mass,
            kinetic: self.kinetic,
            potential: self.potential,
            pohozaev1_residual: self.pohozaev1_residual,
            pohozaev2_residual: self.pohozaev2_residual,
            tail_constant: self.tail_constant,
            tail_residual: self.tail_residual,
            weinstein_j: self.weinstein_j,
            petviashvili_iterations: self.petviashvili_iterations,
            newton_iterations: self.newton_iterations,
            residual: self.residual,
            converged: self.converged,
        }
    }

    /// Positivity and strict radial monotonicity at the nodes.
    pub fn positive_and_decreasing(&self) -> (bool, bool) {
        let v = self.q.values();
        let positive = v.iter().all(|&x| x > 0.0);
        let decreasing = v.as_slice().windows(2).all(|w| w[1] < w[0]);
        (positive, decreasing)
    }
}

/// Weinstein quotient J(u) = T^(N alpha/4s) M^((alpha/4s)(2s-N)+1) / V.
pub fn weinstein_j(u: &RadialField, params: &ProblemParams) -> Result<f64> {
    let (m, t, v) = norms(u, params.s, params.alpha);
    if v == 0.0 {
        return Err(Error::InvalidInput("Weinstein quotient undefined for u == 0".into()));
    }
    let n = params.n_dim as f64;
    let (s, alpha) = (params.s, params.alpha);
    Ok(t.powf(n * alpha / (4.0 * s)) * m.powf(alpha / (4.0 * s) * (2.0 * s - n) + 1.0) / v)
}

/// Pohozaev residuals of a state: res1 = |T + M - V|/V,
/// res2 = |(N-2s)/2 T + N/2 M - N/(alpha+2) V|/V.
pub fn pohozaev_check(gs: &GroundState) -> (f64, f64) {
    pohozaev_residuals(gs.mass, gs.kinetic, gs.potential, &gs.params)
}

pub(crate) fn pohozaev_residuals(m: f64, t: f64, v: f64, params: &ProblemParams) -> (f64, f64) {
    let n = params.n_dim as f64;
    let (s, alpha) = (params.s, params.alpha);
    let res1 = (t + m - v).abs() / v;
    let res2 = ((n - 2.0 * s) / 2.0 * t + n / 2.0 * m - n / (alpha + 2.0) * v).abs() / v;
    (res1, res2)
}

const PETVIASHVILI_MAX: usize = 500;
const NEWTON_MAX: usize = 50;
const GAMMA_SWITCH: f64 = 1e-4;
const RESIDUAL_TOL: f64 = 1e-9;

/// Equation residual ||(-Delta)^s Q + Q - Q^(alpha+1)||_2 / ||Q||_2,
/// recomputed from scratch.
pub fn equation_residual(q: &RadialField, params: &ProblemParams) -> f64 {
    let grid = q.grid();
    let c = q.coeffs();
    let nl = DVector::from_iterator(
        grid.modes,
        q.values().iter().map(|&v| v.abs().powf(params.alpha) * v),
    );
    let cnl = grid.forward(&nl);
    let mut res = 0.0;
    for k in 0..grid.modes {
        let r = (grid.eigenvalues[k].powf(params.s) + 1.0) * c[k] - cnl[k];
        res += r * r;
    }
    (res / c.norm_squared()).sqrt()
}

/// Solve for the ground state on the given l=0 grid by Petviashvili
/// iteration with stabilizing exponent (alpha+1)/alpha, then Newton polish
/// on the assembled radial L_+.
pub fn solve_ground_state(
    params: &ProblemParams,
    grid: &Arc<RadialGrid>,
    init: Option<&RadialField>,
) -> Result<GroundState> {
    if grid.sector.ell != 0 || grid.sector.n_dim != params.n_dim {
        return Err(Error::InvalidInput(
            "ground-state grid must be the radial (l = 0) sector of the problem dimension".into(),
        ));
    }
    let (s, alpha) = (params.s, params.alpha);
    let mut v: DVector<f64> = match init {
        Some(f) => {
            if f.values().iter().any(|&x| x < 0.0) && f.values().iter().any(|&x| x > 0.0) {
                // mixed-sign initializations are allowed; Petviashvili will
                // settle the overall sign itself
            }
            f.values().clone()
        }
        None => {
            let w = grid.radius / 20.0;
            DVector::from_iterator(grid.modes, grid.nodes.iter().map(|&r| (-(r / w).powi(2)).exp()))
        }
    };
    let mus: Vec<f64> = grid.eigenvalues.iter().map(|mu| mu.powf(s) + 1.0).collect();
    let p_exp = (alpha + 1.0) / alpha;
    let mut pet_iter = 0;
    let mut gamma_gap = f64::INFINITY;
    for it in 0..PETVIASHVILI_MAX {
        let c = grid.forward(&v);
        let nl = DVector::from_iterator(grid.modes, v.iter().map(|&x| x.abs().powf(alpha) * x));
        let cnl = grid.forward(&nl);
        let num: f64 = c.iter().zip(&mus).map(|(x, m)| m * x * x).sum();
        let den: f64 = c.dot(&cnl);
        if den == 0.0 || !den.is_finite() {
            return Err(Error::Stalled { gamma_gap, iterations: it });
        }
        let gamma = num / den;
        gamma_gap = (gamma - 1.0).abs();
        let scaled = DVector::from_iterator(grid.modes, cnl.iter().zip(&mus).map(|(x, m)| x / m));
        v = grid.synthesize(&scaled) * gamma.powf(p_exp);
        pet_iter = it + 1;
        if gamma_gap < GAMMA_SWITCH {
            break;
        }
    }
    if gamma_gap >= GAMMA_SWITCH {
        return Err(Error::Stalled { gamma_gap, iterations: pet_iter });
    }
    // Newton stage on the assembled radial L_+
    let mut newton_iter = 0;
    let mut residual = f64::INFINITY;
    for _ in 0..NEWTON_MAX {
        let c = grid.forward(&v);
        let nl = DVector::from_iterator(grid.modes, v.iter().map(|&x| x.abs().powf(alpha) * x));
        let cnl = grid.forward(&nl);
        let res_c = DVector::from_iterator(
            grid.modes,
            c.iter().zip(&mus).zip(cnl.iter()).map(|((x, m), y)| m * x - y),
        );
        residual = (res_c.norm_squared() / c.norm_squared()).sqrt();
        if residual < RESIDUAL_TOL {
            break;
        }
        let qa = DVector::from_iterator(
            grid.modes,
            v.iter().map(|&x| -(alpha + 1.0) * x.abs().powf(alpha)),
        );
        let a = operator_matrix(grid, |mu| mu.powf(s) + 1.0, &qa);
        let lu = a.lu();
        let delta = lu
            .solve(&res_c)
            .ok_or_else(|| Error::NewtonSingular("LU solve failed on the radial Jacobian".into()))?;
        v = grid.synthesize(&(c - delta));
        newton_iter += 1;
    }
    let q = RadialField::from_values(grid.clone(), v);
    let residual = equation_residual(&q, params);
    let converged = residual < RESIDUAL_TOL;
    if !converged {
        return Err(Error::Numerics(format!(
            "newton stage left residual {residual:.3e} above {RESIDUAL_TOL:.1e}"
        )));
    }
    let (mass, kinetic, potential) = norms(&q, s, alpha);
    let (res1, res2) = pohozaev_residuals(mass, kinetic, potential, params);
    let weinstein = weinstein_j(&q, params)?;
    let mut gs = GroundState {
        params: *params,
        q,
        mass,
        kinetic,
        potential,
        pohozaev1_residual: res1,
        pohozaev2_residual: res2,
        tail_constant: None,
        tail_residual: None,
        weinstein_j: weinstein,
        petviashvili_iterations: pet_iter,
        newton_iterations: newton_iter,
        residual,
        converged,
    };
    if let Ok((c_fit, tail_res)) = tail_fit(&gs) {
        gs.tail_constant = Some(c_fit);
        gs.tail_residual = Some(tail_res);
    }
    Ok(gs)
}

/// Resolvent kernel of ((-Delta)^s + 1)^-1 at radius r; closed forms at the
/// local endpoint s = 1.
fn resolvent_at(s: f64, n_dim: u32, r: f64) -> Result<f64> {
    if s < 1.0 {
        resolvent_kernel_value(s, 1.0, n_dim, r)
    } else {
        Ok(match n_dim {
            1 => 0.5 * (-r).exp(),
            2 => bessel_k(0.0, r) / (2.0 * PI),
            3 => (-r).exp() / (4.0 * PI * r),
            _ => return Err(Error::InvalidInput("s = 1 tail kernel needs N <= 3".into())),
        })
    }
}

/// Algebraic tail certificate: the fitted limit of r^(N+2s) Q(r) over the
/// window [0.5 R, 0.8 R], with Q's tail evaluated through the resolvent
/// representation Q = G_(s,1) * Q^(alpha+1) (the ball basis itself cannot
/// carry the free-space tail). The residual is the window's raw relative
/// variation; > 0.1 reports "no plateau" (exponential decay at s = 1 lands
/// there by design).
pub fn tail_fit(gs: &GroundState) -> Result<(f64, f64)> {
    let grid = gs.q.grid();
    let r_ball = grid.radius;
    let q0 = gs.q.eval_at(0.0);
    let q_far = gs.q.eval_at(0.8 * r_ball).abs();
    if q_far / q0.abs() >= 1e-4 {
        return Err(Error::InvalidInput(format!(
            "domain too small for a tail fit: Q(0.8R)/Q(0) = {:.2e}",
            q_far / q0.abs()
        )));
    }
    let (s, alpha) = (gs.params.s, gs.params.alpha);
    let n_dim = gs.params.n_dim;
    let n_f = n_dim as f64;
    // source integral of the convolution representation
    let source: f64 = grid
        .weights
        .iter()
        .zip(gs.q.values().iter())
        .map(|(w, &v)| w * v.abs().powf(alpha) * v)
        .sum();
    let n_pts = 14;
    let (lo, hi) = (0.5 * r_ball, 0.8 * r_ball);
    let mut samples = Vec::with_capacity(n_pts);
    for i in 0..n_pts {
        let r = lo * (hi / lo).powf(i as f64 / (n_pts - 1) as f64);
        let g = resolvent_at(s, n_dim, r)?;
        samples.push((r, r.powf(n_f + 2.0 * s) * g * source));
    }
    let mean = samples.iter().map(|(_, y)| y).sum::<f64>() / n_pts as f64;
    let (mut lo_v, mut hi_v) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(_, y) in &samples {
        lo_v = lo_v.min(y);
        hi_v = hi_v.max(y);
    }
    let residual = (hi_v - lo_v) / mean.abs().max(1e-300);
    if residual > 0.1 {
        return Err(Error::NoPlateau { residual, limit: 0.1 });
    }
    // two-term fit y = C + D r^(-2s) extrapolates the finite-r correction
    let (mut sx, mut sxx, mut sy, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(r, y) in &samples {
        let x = r.powf(-2.0 * s);
        sx += x;
        sxx += x * x;
        sy += y;
        sxy += x * y;
    }
    let n_p = n_pts as f64;
    let det = n_p * sxx - sx * sx;
    let c_fit = (sxx * sy - sx * sxy) / det;
    Ok((c_fit, residual))
}

/// Gaussian bump of unit height and width R/20 (the default initialization).
pub fn gaussian_init(grid: &Arc<RadialGrid>) -> RadialField {
    let w = grid.radius / 20.0;
    RadialField::from_fn(grid.clone(), move |r| (-(r / w).powi(2)).exp())
}

/// Lorentzian bump (an alternative positive initialization).
pub fn lorentzian_init(grid: &Arc<RadialGrid>) -> RadialField {
    let w = grid.radius / 30.0;
    RadialField::from_fn(grid.clone(), move |r| 1.0 / (1.0 + (r / w).powi(2)))
}

/// |S^(N-1)| exposed for consumers normalizing angular factors.
pub fn angular_factor(n_dim: u32) -> f64 {
    sphere_area(n_dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid;
    use approx::assert_relative_eq;

    fn radial_grid(n: u32, r: f64, m: usize) -> Arc<RadialGrid> {
        make_grid(SectorIndex { n_dim: n, ell: 0 }, r, m).unwrap()
    }

    #[test]
    fn alpha_admissibility() {
        assert!(ProblemParams::new(1, 0.5, 1.0).is_ok());
        // alpha_*(0.5, 3) = 4*0.5/(3-1) = 1: alpha = 1 is out (strict), 2.5 far out
        assert!(ProblemParams::new(3, 0.5, 1.0).is_err());
        assert!(ProblemParams::new(3, 0.5, 2.5).is_err());
        assert!(ProblemParams::new(3, 0.5, 0.9).is_ok());
        // s >= N/2 removes the ceiling
        assert!(ProblemParams::new(1, 0.5, 25.0).is_ok());
        assert_relative_eq!(alpha_star(0.5, 3), 1.0);
        assert!(alpha_star(0.6, 1).is_infinite());
    }

    #[test]
    fn weinstein_homogeneity_and_determinism() {
        let params = ProblemParams::new(1, 0.5, 1.0).unwrap();
        let g = radial_grid(1, 100.0, 256);
        let u = RadialField::from_fn(g.clone(), |r| (-r * r / 30.0).exp());
        let j1 = weinstein_j(&u, &params).unwrap();
        let j2 = weinstein_j(&u.scale(3.7), &params).unwrap();
        assert_relative_eq!(j1, j2, max_relative = 1e-10);
        let j3 = weinstein_j(&u, &params).unwrap();
        assert_eq!(j1.to_bits(), j3.to_bits());
        assert!(weinstein_j(&RadialField::zero(g), &params).is_err());
    }

    #[test]
    fn benjamin_ono_soliton() {
        // s = 1/2, alpha = 1, N = 1: Q = 2/(1+r^2)
        let params = ProblemParams::new(1, 0.5, 1.0).unwrap();
        let g = radial_grid(1, 200.0, 1024);
        let gs = solve_ground_state(&params, &g, None).unwrap();
        assert!(gs.converged && gs.residual < 1e-9);
        let q0 = gs.q.eval_at(0.0);
        assert!((q0 - 2.0).abs() < 1e-3, "Q(0) = {q0}");
        let bo_max_err = g
            .nodes
            .iter()
            .zip(gs.q.values().iter())
            .map(|(&r, &v)| (v - 2.0 / (1.0 + r * r)).abs())
            .fold(0.0f64, f64::max);
        assert!(bo_max_err / 2.0 < 1e-3, "max-norm relative error {:.2e}", bo_max_err / 2.0);
        // pohozaev residuals at the default grid: res1 machine-level
        assert!(gs.pohozaev1_residual < 1e-10);
        let (p, d) = gs.positive_and_decreasing();
        assert!(p && d);
        // Weinstein minimizer property: J(Q) <= J(Gaussian of the same mass)
        let gauss = RadialField::from_fn(g.clone(), |r| (-r * r).exp());
        let jq = gs.weinstein_j;
        let jg = weinstein_j(&gauss, &params).unwrap();
        assert!(jq < jg, "J(Q) = {jq} vs J(gauss) = {jg}");
    }

    #[test]
    fn cubic_nls_against_shooting_oracle() {
        // s = 1, alpha = 2, N = 1: oracle by RK4 shooting on Q'' = Q - Q^3
        let oracle = shooting_origin_value();
        assert_relative_eq!(oracle, 2f64.sqrt(), max_relative = 1e-7);
        let params = ProblemParams::new(1, 1.0, 2.0).unwrap();
        let g = radial_grid(1, 60.0, 384);
        let gs = solve_ground_state(&params, &g, None).unwrap();
        let q0 = gs.q.eval_at(0.0);
        assert!((q0 - oracle).abs() < 1e-5, "Q(0) = {q0} vs oracle {oracle}");
    }

    /// Bisection on Q(0): the separatrix of Q'' = Q - Q^3, Q'(0) = 0.
    /// Too large an origin value makes Q cross zero; too small makes it
    /// turn back upward before decaying.
    fn shooting_origin_value() -> f64 {
        let crosses_zero = |a: f64| -> bool {
            let (mut q, mut p) = (a, 0.0);
            let h = 1e-3;
            let mut r = 0.0;
            while r < 25.0 {
                // RK4 on (q, p): q' = p, p' = q - q^3
                let f = |q: f64, p: f64| (p, q - q * q * q);
                let (k1q, k1p) = f(q, p);
                let (k2q, k2p) = f(q + 0.5 * h * k1q, p + 0.5 * h * k1p);
                let (k3q, k3p) = f(q + 0.5 * h * k2q, p + 0.5 * h * k2p);
                let (k4q, k4p) = f(q + h * k3q, p + h * k3p);
                q += h / 6.0 * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
                p += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
                r += h;
                if q <= 0.0 {
                    return true;
                }
                if p > 0.0 {
                    return false; // turned back up: subcritical
                }
            }
            false
        };
        let (mut lo, mut hi) = (1.0, 2.0);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if crosses_zero(mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn pohozaev_detector_catches_perturbations() {
        let params = ProblemParams::new(2, 0.7, 1.0).unwrap();
        let g = radial_grid(2, 100.0, 384);
        let gs = solve_ground_state(&params, &g, None).unwrap();
        assert!(gs.pohozaev1_residual < 1e-6 && gs.pohozaev2_residual < 1e-6);
        // +1% multiplicative bump breaks the identity loudly
        let perturbed = RadialField::from_values(g.clone(), gs.q.values() * 1.01);
        let (m, t, v) = norms(&perturbed, params.s, params.alpha);
        let (res1, _res2) = pohozaev_residuals(m, t, v, &params);
        assert!(res1 > 1e-3, "detector too dull: {res1:.2e}");
    }

    #[test]
    fn initialization_independence() {
        let params = ProblemParams::new(2, 0.7, 1.0).unwrap();
        let g = radial_grid(2, 100.0, 384);
        let a = solve_ground_state(&params, &g, Some(&gaussian_init(&g))).unwrap();
        let b = solve_ground_state(&params, &g, Some(&lorentzian_init(&g))).unwrap();
        let diff = (a.q.values() - b.q.values()).amax() / a.q.max_abs();
        assert!(diff < 1e-7, "initialization dependence {diff:.2e}");
    }

    #[test]
    fn linearized_identities_at_the_state() {
        // (Q, L_+ Q) = -alpha int Q^(alpha+2)  and  L_+ R = -2s Q with
        // R = (2s/alpha) Q + r Q'
        let params = ProblemParams::new(1, 0.5, 1.0).unwrap();
        let g = radial_grid(1, 200.0, 1024);
        let gs = solve_ground_state(&params, &g, None).unwrap();
        let (s, alpha) = (params.s, params.alpha);
        let lap = fractional_laplacian(&gs.q, s).unwrap();
        let lplus_q = DVector::from_iterator(
            g.modes,
            (0..g.modes).map(|i| {
                lap.values()[i] + gs.q.values()[i]
                    - (alpha + 1.0) * gs.q.values()[i].abs().powf(alpha) * gs.q.values()[i]
            }),
        );
        let lhs = g.inner(gs.q.values(), &lplus_q);
        let rhs = -alpha * gs.potential;
        assert_relative_eq!(lhs, rhs, max_relative = 1e-8);
        // scaling identity
        let qprime = gs.q.derivative_values();
        let rgen = DVector::from_iterator(
            g.modes,
            (0..g.modes)
                .map(|i| 2.0 * s / alpha * gs.q.values()[i] + g.nodes[i] * qprime[i]),
        );
        let rfield = RadialField::from_values(g.clone(), rgen);
        let lap_r = fractional_laplacian(&rfield, s).unwrap();
        let lhs_field = DVector::from_iterator(
            g.modes,
            (0..g.modes).map(|i| {
                lap_r.values()[i] + rfield.values()[i]
                    - (alpha + 1.0)
                        * gs.q.values()[i].abs().powf(alpha)
                        * rfield.values()[i]
            }),
        );
        let rhs_field = gs.q.values() * (-2.0 * s);
        let err = (&lhs_field - &rhs_field).norm() / rhs_field.norm();
        assert!(err < 1e-6, "L_+ R = -2sQ residual {err:.2e}");
    }

    #[test]
    fn tail_certificate_bo_and_local_case() {
        // BO: r^2 Q -> 2 within 5%
        let params = ProblemParams::new(1, 0.5, 1.0).unwrap();
        let g = radial_grid(1, 200.0, 1024);
        let gs = solve_ground_state(&params, &g, None).unwrap();
        let (c_fit, residual) = tail_fit(&gs).unwrap();
        assert!((c_fit - 2.0).abs() / 2.0 < 0.05, "C_fit = {c_fit}, residual {residual}");
        assert!(c_fit > 0.0);
        // s = 1: exponential decay has no algebraic plateau
        let params1 = ProblemParams::new(1, 1.0, 2.0).unwrap();
        let g1 = radial_grid(1, 60.0, 384);
        let gs1 = solve_ground_state(&params1, &g1, None).unwrap();
        match tail_fit(&gs1) {
            Err(Error::NoPlateau { .. }) => {}
            other => panic!("expected no-plateau for s = 1, got {other:?}"),
        }
    }
}

impl std::fmt::Debug for GroundState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroundState")
            .field("params", &self.params)
            .field("mass", &self.mass)
            .field("kinetic", &self.kinetic)
            .field("potential", &self.potential)
            .field("residual", &self.residual)
            .field("converged", &self.converged)
            .finish()
    }
}
