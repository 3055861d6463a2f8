//! Special functions: Gamma, Bessel J of integer/half-integer order with zeros,
//! modified Bessel K of real order, and the extension mode profile.
//!
//! Everything here is hand-rolled against double precision: the grid, the
//! Dirichlet-Neumann constant and the per-mode extension profile all sit on
//! top of these evaluations, so their accuracy caps the whole toolkit.

use crate::error::{Error, Result};
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function (Lanczos approximation, reflection for x < 1/2).
pub fn gamma(x: f64) -> f64 {
    if x < 0.5 {
        PI / ((PI * x).sin() * gamma(1.0 - x))
    } else {
        let x = x - 1.0;
        let mut a = LANCZOS[0];
        let t = x + LANCZOS_G + 0.5;
        for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
            a += c / (x + i as f64);
        }
        (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * a
    }
}

/// Dirichlet-Neumann constant d_s = 2^(2s-1) Gamma(s)/Gamma(1-s).
pub fn d_s(s: f64) -> f64 {
    2f64.powf(2.0 * s - 1.0) * gamma(s) / gamma(1.0 - s)
}

/// Area of the unit sphere S^(N-1) in R^N.
pub fn sphere_area(n_dim: u32) -> f64 {
    let n = n_dim as f64;
    2.0 * PI.powf(n / 2.0) / gamma(n / 2.0)
}

/// Bessel J_nu(x) for x >= 0 and nu an integer or half-integer >= -3/2.
///
/// Power series below x = 11 (cancellation ~e^x eps stays near 1e-12 there),
/// Hankel's asymptotic expansion above (truncation ~1e-13 from x = 11 up).
/// The zero refinement rides on this accuracy.
pub fn bessel_j(nu: f64, x: f64) -> f64 {
    debug_assert!(
        (2.0 * nu).round() == 2.0 * nu && nu >= -1.5,
        "order must be integer or half-integer, got {nu}"
    );
    if x == 0.0 {
        return if nu == 0.0 {
            1.0
        } else if nu > 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
    }
    if x <= 11.0 {
        bessel_j_series(nu, x)
    } else {
        bessel_j_asymptotic(nu, x)
    }
}

/// J_nu'(x) = (nu/x) J_nu(x) - J_{nu+1}(x).
pub fn bessel_j_prime(nu: f64, x: f64) -> f64 {
    (nu / x) * bessel_j(nu, x) - bessel_j(nu + 1.0, x)
}

fn bessel_j_series(nu: f64, x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = (0.5 * x).powf(nu) / gamma(nu + 1.0);
    let mut sum = term;
    for m in 1..200 {
        let m = m as f64;
        term *= -q / (m * (nu + m));
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum
}

fn bessel_j_asymptotic(nu: f64, x: f64) -> f64 {
    // J_nu(x) ~ sqrt(2/(pi x)) [ P cos(w) - Q sin(w) ],  w = x - (nu/2 + 1/4) pi
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..60 {
        let k = k as f64;
        term *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (k * 8.0 * x);
        if term.abs() > prev {
            break;
        }
        prev = term.abs();
        let j = k as usize;
        match j % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-17 {
            break;
        }
    }
    let w = x - (0.5 * nu + 0.25) * PI;
    (2.0 / (PI * x)).sqrt() * (p * w.cos() - q * w.sin())
}

/// First `count` positive zeros of J_nu, refined to ~1e-13 relative.
///
/// McMahon guesses with bracket verification; a forward scan backstops the
/// low zeros of higher orders where McMahon is unreliable.
pub fn bessel_zeros(nu: f64, count: usize) -> Result<Vec<f64>> {
    // closed forms for the trigonometric orders
    if nu == -0.5 {
        return Ok((1..=count).map(|k| (k as f64 - 0.5) * PI).collect());
    }
    if nu == 0.5 {
        return Ok((1..=count).map(|k| k as f64 * PI).collect());
    }
    let mut zeros = Vec::with_capacity(count);
    let mut prev = nu.max(0.0);
    for k in 1..=count {
        let guess = mcmahon(nu, k);
        let (lo, hi) = if guess > prev + 0.3 && bracket_ok(nu, guess) {
            (guess - 0.45 * PI, guess + 0.45 * PI)
        } else {
            scan_bracket(nu, prev)?
        };
        let z = refine_zero(nu, lo.max(prev + 1e-9), hi)?;
        if z <= prev {
            return Err(Error::Numerics(format!(
                "bessel zeros out of order at nu={nu}, k={k}"
            )));
        }
        zeros.push(z);
        prev = z;
    }
    Ok(zeros)
}

fn mcmahon(nu: f64, k: usize) -> f64 {
    let beta = (k as f64 + 0.5 * nu - 0.25) * PI;
    let mu = 4.0 * nu * nu;
    beta - (mu - 1.0) / (8.0 * beta)
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * (8.0 * beta).powi(3))
}

fn bracket_ok(nu: f64, guess: f64) -> bool {
    let lo = guess - 0.45 * PI;
    let hi = guess + 0.45 * PI;
    lo > 0.0 && bessel_j(nu, lo) * bessel_j(nu, hi) < 0.0
}

fn scan_bracket(nu: f64, from: f64) -> Result<(f64, f64)> {
    let step = PI / 8.0;
    let mut x = from + 1e-9;
    let mut fx = bessel_j(nu, x);
    for _ in 0..100_000 {
        let x2 = x + step;
        let fx2 = bessel_j(nu, x2);
        if fx * fx2 < 0.0 {
            return Ok((x, x2));
        }
        x = x2;
        fx = fx2;
    }
    Err(Error::Numerics(format!("no bessel zero found beyond {from} for nu={nu}")))
}

fn refine_zero(nu: f64, mut lo: f64, mut hi: f64) -> Result<f64> {
    let mut flo = bessel_j(nu, lo);
    if flo == 0.0 {
        return Ok(lo);
    }
    if flo * bessel_j(nu, hi) > 0.0 {
        let (l, h) = scan_bracket(nu, lo)?;
        lo = l;
        hi = h;
        flo = bessel_j(nu, lo);
    }
    // bisection to get close, then Newton
    for _ in 0..40 {
        let mid = 0.5 * (lo + hi);
        let fm = bessel_j(nu, mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if flo * fm < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    let mut z = 0.5 * (lo + hi);
    for _ in 0..8 {
        let f = bessel_j(nu, z);
        let df = bessel_j_prime(nu, z);
        let dz = f / df;
        z -= dz;
        if dz.abs() < 1e-14 * z {
            break;
        }
    }
    Ok(z)
}

/// Modified Bessel K_nu(x) for 0 < nu < 2, x > 0.
///
/// Temme's series for x < 2, Steed's continued fraction CF2 above
/// (the GSL decomposition). Returns (K_mu, K_{mu+1}) for mu = nu - floor-ish
/// reduction internally; callers get K at the requested order.
pub fn bessel_k(nu: f64, x: f64) -> f64 {
    debug_assert!(x > 0.0 && nu >= 0.0 && nu < 2.0);
    if x > 700.0 {
        return 0.0; // underflow
    }
    if nu < 1.0 {
        let (k_mu, k_mu1) = k_order_pair(nu, x);
        let _ = k_mu1;
        k_mu
    } else {
        // upward recurrence from mu = nu - 1 in [0,1)
        let mu = nu - 1.0;
        let (k_mu, k_mu1) = k_order_pair(mu, x);
        let _ = k_mu;
        k_mu1
    }
}

/// (K_mu(x), K_{mu+1}(x)) for 0 <= mu < 1.
fn k_order_pair(mu: f64, x: f64) -> (f64, f64) {
    if x < 2.0 {
        k_temme(mu, x)
    } else {
        let (k, k1) = k_steed_scaled(mu, x);
        let e = (-x).exp();
        (k * e, k1 * e)
    }
}

/// Temme's series for K_mu, K_{mu+1}, 0 <= mu < 1, 0 < x < 2 (unscaled).
fn k_temme(mu: f64, x: f64) -> (f64, f64) {
    let half_x = 0.5 * x;
    let ln_half_x = half_x.ln();
    let sigma = -mu * ln_half_x;
    let pi_mu = PI * mu;
    let sinrat = if pi_mu.abs() < 1e-290 { 1.0 } else { pi_mu / pi_mu.sin() };
    let sinhrat = if sigma.abs() < 1e-290 { 1.0 } else { sigma.sinh() / sigma };
    // gamma combinations: g1 = 1/(2mu) [1/Gamma(1-mu) - 1/Gamma(1+mu)], g2 = their mean
    let (g1, g2) = if mu.abs() < 1e-10 {
        // limits: g1 -> -psi(1) = euler gamma, g2 -> 1
        (0.577_215_664_901_532_9, 1.0)
    } else {
        let rg_p = 1.0 / gamma(1.0 + mu);
        let rg_m = 1.0 / gamma(1.0 - mu);
        ((rg_m - rg_p) / (2.0 * mu), 0.5 * (rg_m + rg_p))
    };
    let mut fk = sinrat * (sigma.cosh() * g1 + sinhrat * (-ln_half_x) * g2);
    let half_x_mu = (mu * ln_half_x).exp();
    let mut pk = 0.5 / half_x_mu * gamma(1.0 + mu);
    let mut qk = 0.5 * half_x_mu * gamma(1.0 - mu);
    let mut hk = pk;
    let mut ck = 1.0;
    let mut sum0 = fk;
    let mut sum1 = hk;
    for k in 1..2000 {
        let kf = k as f64;
        fk = (kf * fk + pk + qk) / (kf * kf - mu * mu);
        ck *= half_x * half_x / kf;
        pk /= kf - mu;
        qk /= kf + mu;
        hk = -kf * fk + pk;
        let del0 = ck * fk;
        let del1 = ck * hk;
        sum0 += del0;
        sum1 += del1;
        if del0.abs() < 0.5 * f64::EPSILON * sum0.abs() {
            break;
        }
    }
    (sum0, sum1 * 2.0 / x)
}

/// Steed/Temme CF2 for scaled e^x K_mu, e^x K_{mu+1}; 0 <= mu < 1, x >= 2.
fn k_steed_scaled(mu: f64, x: f64) -> (f64, f64) {
    let mut bi = 2.0 * (1.0 + x);
    let mut di = 1.0 / bi;
    let mut delhi = di;
    let mut hi = di;
    let mut qi = 0.0;
    let mut qip1 = 1.0;
    let mut ai = -(0.25 - mu * mu);
    let a1 = ai;
    let mut ci = -ai;
    let mut bqi = -ai;
    let mut s = 1.0 + bqi * delhi;
    for i in 2..10_000 {
        ai -= 2.0 * (i - 1) as f64;
        ci = -ai * ci / i as f64;
        let tmp = (qi - bi * qip1) / ai;
        qi = qip1;
        qip1 = tmp;
        bqi += ci * qip1;
        bi += 2.0;
        di = 1.0 / (bi + ai * di);
        delhi = (bi * di - 1.0) * delhi;
        hi += delhi;
        let dels = bqi * delhi;
        s += dels;
        if (dels / s).abs() < f64::EPSILON {
            break;
        }
    }
    let hi = -a1 * hi;
    let k_mu = (PI / (2.0 * x)).sqrt() / s;
    let k_mu1 = k_mu * (mu + x + 0.5 - hi) / x;
    (k_mu, k_mu1)
}

/// Extension mode profile phi_s(tau) = (2^(1-s)/Gamma(s)) tau^s K_s(tau),
/// normalized so phi_s(0) = 1; solves phi'' + ((1-2s)/tau) phi' = phi.
///
/// The series branch below tau = 2 keeps the tau^(2s) and tau^2 scales
/// separate, which the K-recurrence form cancels catastrophically at small tau.
pub struct ModeProfile {
    s: f64,
    kappa: f64,
    k_norm: f64,
}

impl ModeProfile {
    pub fn new(s: f64) -> Self {
        // kappa_s = Gamma(1-s)/(s Gamma(s) 4^s) = 1/(2 s d_s)
        let kappa = gamma(1.0 - s) / (s * gamma(s) * 4f64.powf(s));
        let k_norm = 2f64.powf(1.0 - s) / gamma(s);
        ModeProfile { s, kappa, k_norm }
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    /// phi_s(tau)
    pub fn value(&self, tau: f64) -> f64 {
        if tau == 0.0 {
            return 1.0;
        }
        if tau >= 700.0 {
            return 0.0;
        }
        let s = self.s;
        if tau < 2.0 {
            let (a, b) = self.series_ab(tau);
            a - self.kappa * tau.powf(2.0 * s) * b
        } else {
            self.k_norm * tau.powf(s) * bessel_k(s, tau)
        }
    }

    /// phi_s'(tau)
    pub fn deriv(&self, tau: f64) -> f64 {
        let s = self.s;
        if tau >= 700.0 {
            return 0.0;
        }
        if tau < 2.0 {
            let (da, b, db) = self.series_dab(tau);
            da - self.kappa * (2.0 * s * tau.powf(2.0 * s - 1.0) * b + tau.powf(2.0 * s) * db)
        } else {
            // phi' = k_norm [ 2 s tau^{s-1} K_s - tau^s K_{s+1} ]
            self.k_norm
                * (2.0 * s * tau.powf(s - 1.0) * bessel_k(s, tau)
                    - tau.powf(s) * bessel_k(s + 1.0, tau))
        }
    }

    /// A(tau) = sum_m (tau^2/4)^m / (m! (1-s)_m), B likewise with (1+s)_m.
    fn series_ab(&self, tau: f64) -> (f64, f64) {
        let q = 0.25 * tau * tau;
        let s = self.s;
        let (mut a, mut b) = (1.0, 1.0);
        let (mut ta, mut tb) = (1.0, 1.0);
        for m in 1..60 {
            let m = m as f64;
            ta *= q / (m * (m - s));
            tb *= q / (m * (m + s));
            a += ta;
            b += tb;
            if ta.abs() < 1e-18 * a.abs() && tb.abs() < 1e-18 * b.abs() {
                break;
            }
        }
        (a, b)
    }

    /// (A'(tau), B(tau), B'(tau))
    fn series_dab(&self, tau: f64) -> (f64, f64, f64) {
        let q = 0.25 * tau * tau;
        let s = self.s;
        let (mut b, mut tb) = (1.0, 1.0);
        // A' = (tau/2) sum_{m>=1} q^{m-1} / ((m-1)! (1-s)_m), similarly B'
        let mut da = tau / (2.0 * (1.0 - s));
        let mut db = tau / (2.0 * (1.0 + s));
        let mut tda = da;
        let mut tdb = db;
        for m in 1..60 {
            let m = m as f64;
            tb *= q / (m * (m + s));
            b += tb;
            tda *= q / (m * (m + 1.0 - s));
            tdb *= q / (m * (m + 1.0 + s));
            da += tda;
            db += tdb;
            if tb.abs() < 1e-18 * b.abs() && tda.abs() < 1e-18 * da.abs().max(1e-300) {
                break;
            }
        }
        (da, b, db)
    }
}
