//! Quadrature machinery: Gauss-Legendre panels, power-mapped endpoint
//! handling for t^a weights, and the zero-segmented oscillatory Hankel
//! inversion used by the resolvent/heat kernels.

use crate::error::{Error, Result};
use crate::special::bessel_j;
use std::f64::consts::PI;
use std::sync::OnceLock;

/// Gauss-Legendre nodes and weights on [-1, 1].
pub fn gauss_legendre(n: usize) -> &'static (Vec<f64>, Vec<f64>) {
    static CACHE: OnceLock<[(Vec<f64>, Vec<f64>); 3]> = OnceLock::new();
    let cache = CACHE.get_or_init(|| [compute_gl(16), compute_gl(24), compute_gl(32)]);
    match n {
        16 => &cache[0],
        24 => &cache[1],
        32 => &cache[2],
        _ => panic!("unsupported GL order {n}"),
    }
}

fn compute_gl(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..(n + 1) / 2 {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(x) and derivative by recurrence
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Integrate f over [lo, hi] with one 24-point Gauss panel.
pub fn gauss_panel(f: &mut dyn FnMut(f64) -> f64, lo: f64, hi: f64) -> f64 {
    let (x, w) = gauss_legendre(24);
    let c = 0.5 * (hi - lo);
    let m = 0.5 * (hi + lo);
    let mut acc = 0.0;
    for (xi, wi) in x.iter().zip(w) {
        acc += wi * f(c * xi + m);
    }
    c * acc
}

/// Integrate f over [lo, hi] split into n equal panels.
pub fn panels(f: &mut dyn FnMut(f64) -> f64, lo: f64, hi: f64, n: usize) -> f64 {
    let h = (hi - lo) / n as f64;
    (0..n).map(|k| gauss_panel(f, lo + k as f64 * h, lo + (k + 1) as f64 * h)).sum()
}

/// Integrate f over [lo, hi] on log-spaced panels (lo > 0).
pub fn log_panels(f: &mut dyn FnMut(f64) -> f64, lo: f64, hi: f64, n: usize) -> f64 {
    let edges: Vec<f64> = (0..=n)
        .map(|k| lo * (hi / lo).powf(k as f64 / n as f64))
        .collect();
    edges.windows(2).map(|e| gauss_panel(f, e[0], e[1])).sum()
}

/// Integrate f over [0, cut] under the substitution t = u^p, which absorbs an
/// algebraic endpoint singularity of f at 0.
pub fn power_mapped_panels(f: &mut dyn FnMut(f64) -> f64, cut: f64, p: f64, n: usize) -> f64 {
    let u_max = cut.powf(1.0 / p);
    let mut g = |u: f64| f(u.powf(p)) * p * u.powf(p - 1.0);
    panels(&mut g, 0.0, u_max, n)
}

/// Nodes/weights version of the combined map: [0, cut] power-mapped plus
/// [cut, hi] log panels. Useful when the integrand is evaluated as a matrix.
pub fn singular_grid(cut: f64, hi: f64, p: f64, n_inner: usize, n_outer: usize) -> (Vec<f64>, Vec<f64>) {
    let (x, w) = gauss_legendre(24);
    let mut nodes = Vec::new();
    let mut weights = Vec::new();
    let u_max = cut.powf(1.0 / p);
    let h = u_max / n_inner as f64;
    for k in 0..n_inner {
        let (lo, hi_) = (k as f64 * h, (k + 1) as f64 * h);
        let c = 0.5 * (hi_ - lo);
        let m = 0.5 * (hi_ + lo);
        for (xi, wi) in x.iter().zip(w) {
            let u = c * xi + m;
            nodes.push(u.powf(p));
            weights.push(c * wi * p * u.powf(p - 1.0));
        }
    }
    let edges: Vec<f64> = (0..=n_outer)
        .map(|k| cut * (hi / cut).powf(k as f64 / n_outer as f64))
        .collect();
    for e in edges.windows(2) {
        let c = 0.5 * (e[1] - e[0]);
        let m = 0.5 * (e[1] + e[0]);
        for (xi, wi) in x.iter().zip(w) {
            nodes.push(c * xi + m);
            weights.push(c * wi);
        }
    }
    (nodes, weights)
}

/// Radial Fourier inversion of an isotropic multiplier:
///   g(r) = (2 pi)^(-N/2) r^(1-N/2) * Int_0^inf m(xi) J_(N/2-1)(r xi) xi^(N/2) dxi.
///
/// The head [0, H] resolves the multiplier's own scale; the oscillatory tail
/// is integrated in pi/r segments whose alternating partial sums are
/// accelerated by iterated averaging. `head_scale` is the multiplier's decay
/// scale in xi (e.g. lambda^(1/2s) for the resolvent).
pub fn radial_fourier_inversion(
    mult: &dyn Fn(f64) -> f64,
    n_dim: u32,
    r: f64,
    head_scale: f64,
) -> Result<f64> {
    let nu = n_dim as f64 / 2.0 - 1.0;
    let half_n = n_dim as f64 / 2.0;
    let mut f = |xi: f64| mult(xi) * bessel_j(nu, r * xi) * xi.powf(half_n);
    let h = PI / r;
    // the head must resolve the multiplier's own scale even when r is so
    // small that one oscillation period dwarfs the multiplier support
    let mult_end = 40.0 * head_scale;
    let mut head = 0.0;
    let head_end = if h >= mult_end {
        let segs = 1usize;
        head += panels(&mut f, 0.0, mult_end, 80);
        head += log_panels(&mut f, mult_end, h, 40);
        segs as f64 * h
    } else {
        let head_segments = ((mult_end / h).ceil() as usize).clamp(1, 4000);
        let per_panel = (120 / head_segments).clamp(1, 60);
        for k in 0..head_segments {
            head += panels(&mut f, k as f64 * h, (k + 1) as f64 * h, per_panel);
        }
        head_segments as f64 * h
    };
    // oscillatory tail: partial sums + iterated averaging
    let n_seg = 70usize;
    let mut partial = Vec::with_capacity(n_seg);
    let mut acc = 0.0;
    for k in 0..n_seg {
        let lo = head_end + k as f64 * h;
        acc += gauss_panel(&mut f, lo, lo + h);
        partial.push(acc);
    }
    let mut s = partial;
    let mut last_len = s.len();
    for _ in 0..40 {
        if s.len() < 2 {
            break;
        }
        let next: Vec<f64> = s.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
        s = next;
        last_len = s.len();
    }
    let tail = s[last_len - 1];
    // convergence estimate from the spread of the last averaged values
    if s.len() >= 2 {
        let spread = (s[s.len() - 1] - s[s.len() - 2]).abs();
        let scale = (head.abs() + tail.abs()).max(1e-300);
        if spread > 1e-6 * scale {
            return Err(Error::OscillatoryQuadrature { radius: r });
        }
    }
    Ok((2.0 * PI).powf(-half_n) * r.powf(1.0 - half_n) * (head + tail))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gl_integrates_polynomials_exactly() {
        // degree 2n-1 exactness on a panel
        let mut f = |x: f64| 3.0 * x.powi(7) - x.powi(3) + 2.0;
        let v = gauss_panel(&mut f, -1.0, 2.0);
        // exact: 3/8 x^8 - x^4/4 + 2x on [-1,2]
        let exact = |x: f64| 0.375 * x.powi(8) - 0.25 * x.powi(4) + 2.0 * x;
        assert_relative_eq!(v, exact(2.0) - exact(-1.0), max_relative = 1e-14);
    }

    #[test]
    fn power_map_handles_algebraic_singularity() {
        // int_0^1 t^(-0.6) dt = 2.5
        let mut f = |t: f64| t.powf(-0.6);
        let v = power_mapped_panels(&mut f, 1.0, 1.0 / 0.4, 10);
        assert_relative_eq!(v, 2.5, max_relative = 1e-12);
    }

    #[test]
    fn fourier_inversion_gaussian() {
        // multiplier e^(-xi^2/2) inverts to (2 pi)^(-N/2) ... the standard Gaussian
        for n_dim in [1u32, 2, 3] {
            for r in [0.4, 1.3, 3.0] {
                let g = radial_fourier_inversion(&|xi: f64| (-0.5 * xi * xi).exp(), n_dim, r, 1.0)
                    .unwrap();
                let exact = (2.0 * PI).powf(-(n_dim as f64) / 2.0) * (-0.5 * r * r).exp();
                assert_relative_eq!(g, exact, max_relative = 1e-8);
            }
        }
    }

    #[test]
    fn fourier_inversion_cauchy() {
        // N=1: multiplier e^{-|xi|} inverts to (1/pi)/(1+x^2)
        for r in [0.3, 1.0, 5.0] {
            let g = radial_fourier_inversion(&|xi: f64| (-xi).exp(), 1, r, 1.0).unwrap();
            assert_relative_eq!(g, (1.0 / PI) / (1.0 + r * r), max_relative = 1e-8);
        }
    }
}
