//! Tricomi confluent hypergeometric function `Ψ(a, b; z)` for integer `b ≥ 1`
//! and complex `a`, on the universal cover of `ℂ∖{0}`.
//!
//! Principal sheet: double-double logarithmic series for `|z| ≤ 20`,
//! exponentially improved asymptotic expansion for `20 < |z| < 40 + 10|a|`,
//! plain least-term asymptotics beyond. Other sheets follow from the monodromy
//! relations, applied recursively.

use super::dd::{self, Cdd, Dd};
use crate::error::{Error, Result};
use crate::quadgrid::{laguerre_halfline, legendre_reference};
use crate::special::{ln_gamma, rgamma};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::OnceLock;

/// Radius below which the convergent series is used.
pub const SERIES_RADIUS: f64 = 20.0;
/// Radius (plus `10|a|`) beyond which plain least-term asymptotics suffice.
pub const IMPROVED_LIMIT: f64 = 40.0;
/// Default bound on `|a|`.
pub const PARAMETER_CAP: f64 = 5.0;
/// Error-monitor threshold.
pub const MONITOR_TOL: f64 = 1e-8;
/// Number of re-expansion terms in the improved asymptotics.
const REEXPANSION_TERMS: usize = 10;

/// Value and derivative of `Ψ(a, 1; z)` at a point of the universal cover.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TricomiEval {
    pub a: Complex64,
    pub z: Complex64,
    /// Continuous argument of `z` (principal argument plus `2π·sheet`).
    pub arg: f64,
    pub sheet: i32,
    pub value: Complex64,
    pub derivative: Complex64,
}

/// `Ψ(a, 1; z e^{2iπ sheet})` with `z` taken at its principal argument.
pub fn tricomi_psi(a: Complex64, z: Complex64, sheet: i32) -> Result<TricomiEval> {
    if z.norm() == 0.0 {
        return Err(Error::Parameter("Tricomi function is singular at z = 0".into()));
    }
    let arg = z.arg() + 2.0 * PI * sheet as f64;
    let (value, derivative) = tricomi_psi_arg(a, z.norm(), arg)?;
    Ok(TricomiEval { a, z, arg, sheet, value, derivative })
}

/// `(Ψ(a,1;z), Ψ'(a,1;z))` at `z = r e^{iθ}` for any real `θ`.
pub fn tricomi_psi_arg(a: Complex64, r: f64, theta: f64) -> Result<(Complex64, Complex64)> {
    check_inputs(a, r)?;
    let i = Complex64::i();
    let z = Complex64::from_polar(r, theta);
    let coupling = 2.0 * PI * i * rgamma(a) * rgamma(a) * z.exp();
    if theta > PI {
        let t = theta - 2.0 * PI;
        let (v, d) = tricomi_psi_arg(a, r, t)?;
        let (w, dw) = tricomi_psi_arg(1.0 - a, r, t + PI)?;
        let ph = (-i * PI * a).exp();
        return Ok((v * ph * ph + coupling * ph * w, d * ph * ph + coupling * ph * (w - dw)));
    }
    if theta <= -PI {
        let t = theta + 2.0 * PI;
        let (v, d) = tricomi_psi_arg(a, r, t)?;
        let (w, dw) = tricomi_psi_arg(1.0 - a, r, t - PI)?;
        let ph = (i * PI * a).exp();
        return Ok((v * ph * ph - coupling * ph * w, d * ph * ph - coupling * ph * (w - dw)));
    }
    let (v, _) = principal_u(a, 1, r, theta)?;
    let d = if a == Complex64::new(0.0, 0.0) {
        Complex64::new(0.0, 0.0)
    } else {
        -a * principal_u(a + 1.0, 2, r, theta)?.0
    };
    Ok((v, d))
}

fn check_inputs(a: Complex64, r: f64) -> Result<()> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::Parameter(format!("Tricomi argument modulus must be positive, got {r}")));
    }
    if !(a.norm() <= PARAMETER_CAP + 3.0) || !a.is_finite() {
        return Err(Error::Parameter(format!("Tricomi parameter |a| = {} exceeds the cap", a.norm())));
    }
    Ok(())
}

/// Principal-sheet `U(a, b, z)` (`-π < θ ≤ π`) with a relative error estimate.
pub fn principal_u(a: Complex64, b: u32, r: f64, theta: f64) -> Result<(Complex64, f64)> {
    check_inputs(a, r)?;
    if b == 0 {
        return Err(Error::Parameter("integer b must be at least 1".into()));
    }
    if let Some(m) = nonpositive_integer(a) {
        return Ok((polynomial_u(m, b, Complex64::from_polar(r, theta)), 1e-15));
    }
    let (v, est) = if r <= SERIES_RADIUS {
        series_u(a, b, r, theta)
    } else {
        asymptotic_u(a, b, r, theta)
    };
    if est > MONITOR_TOL {
        return Err(Error::Accuracy { what: format!("Tricomi U at r={r}, arg={theta}"), estimate: est });
    }
    Ok((v, est))
}

fn nonpositive_integer(a: Complex64) -> Option<u32> {
    if a.im == 0.0 && a.re <= 0.0 && a.re == a.re.round() {
        Some((-a.re) as u32)
    } else {
        None
    }
}

/// `U(-m, b, z) = (-1)^m (b)_m M(-m, b, z)`, a polynomial.
fn polynomial_u(m: u32, b: u32, z: Complex64) -> Complex64 {
    let bf = b as f64;
    let mut poch_b = 1.0;
    for j in 0..m {
        poch_b *= bf + j as f64;
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..m {
        let kf = k as f64;
        term *= (kf - m as f64) * z / ((bf + kf) * (kf + 1.0));
        sum += term;
    }
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    sign * poch_b * sum
}

/// Logarithmic-case convergent series for `U(a, n+1, z)`, summed in
/// double-double arithmetic; `ln z = ln r + iθ` for any real `θ`, which also
/// realizes the analytic continuation to every sheet.
pub fn series_u(a: Complex64, b: u32, r: f64, theta: f64) -> (Complex64, f64) {
    let n = b - 1;
    let nf = n as f64;
    let zc = {
        let (s, c) = Dd::new(theta).sin_cos();
        Cdd::new(c.mul_f64(r), s.mul_f64(r))
    };
    let lnz = Cdd::new(Dd::new(r).ln(), Dd::new(theta));
    let z = Complex64::from_polar(r, theta);

    // finite part: (1/Γ(a)) Σ_{k=1}^{n} (k-1)! (1-a+k)_{n-k} / (n-k)! z^{-k}
    let mut finite = Complex64::new(0.0, 0.0);
    for k in 1..=n {
        let mut poch = Complex64::new(1.0, 0.0);
        for j in 0..(n - k) {
            poch *= 1.0 - a + k as f64 + j as f64;
        }
        finite += factorial(k - 1) * poch / factorial(n - k) * z.powi(-(k as i32));
    }
    finite *= rgamma(a);

    let pref = rgamma(a - nf);
    if pref == Complex64::new(0.0, 0.0) {
        return (finite, 1e-15);
    }
    let sign = if (n + 1) % 2 == 0 { 1.0 } else { -1.0 };
    let pref = sign * pref / factorial(n);

    let ac = Cdd::from_c64(a);
    let mut psi_a = dd::digamma(ac);
    let mut psi_1 = -dd::EULER;
    let mut psi_n = -dd::EULER;
    for j in 1..=n {
        psi_n = psi_n + Dd::new(j as f64).recip();
    }
    let mut term = Cdd::ONE;
    let mut sum = Cdd::ZERO;
    let mut max_term: f64 = 0.0;
    for k in 0..2000u32 {
        let kf = k as f64;
        let coef = lnz + psi_a + Cdd::new(-(psi_1 + psi_n), Dd::ZERO);
        let contrib = term * coef;
        let mag = contrib.abs_f64();
        max_term = max_term.max(mag);
        sum = sum + contrib;
        if kf > r && mag < 1e-34 * max_term.max(1e-300) {
            break;
        }
        // advance
        let ak = ac + Cdd::from_c64(Complex64::new(kf, 0.0));
        psi_a = psi_a + ak.recip();
        psi_1 = psi_1 + Dd::new(kf + 1.0).recip();
        psi_n = psi_n + Dd::new(nf + kf + 1.0).recip();
        let den = Dd::new((nf + 1.0 + kf) * (kf + 1.0));
        term = (term * ak * zc).scale(den.recip());
    }
    let value = pref * sum.to_c64() + finite;
    let est = 1e-31 * max_term * pref.norm() / value.norm().max(1e-300) + 1e-16;
    (value, est)
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Large-`|z|` asymptotics; exponentially improved below `40 + 10|a|`.
pub fn asymptotic_u(a: Complex64, b: u32, r: f64, theta: f64) -> (Complex64, f64) {
    let bf = b as f64;
    let z = Complex64::from_polar(r, theta);
    let lnz = Complex64::new(r.ln(), theta);
    let c = a - bf + 1.0;
    let minus_inv_z = -1.0 / z;
    let z_to_minus_a = (-a * lnz).exp();
    if r >= IMPROVED_LIMIT + 10.0 * a.norm() {
        let mut sum = Complex64::new(0.0, 0.0);
        let mut term = Complex64::new(1.0, 0.0);
        let mut last = f64::INFINITY;
        for s in 0..(4 * r as usize + 10) {
            let mag = term.norm();
            if mag > last || mag < 1e-17 * sum.norm() {
                break;
            }
            sum += term;
            last = mag;
            let sf = s as f64;
            term *= (a + sf) * (c + sf) / (sf + 1.0) * minus_inv_z;
        }
        let est = last / sum.norm().max(1e-300) + 1e-16;
        return (z_to_minus_a * sum, est);
    }
    let nterms = r.floor() as usize + 1;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    for s in 0..nterms {
        sum += term;
        let sf = s as f64;
        term *= (a + sf) * (c + sf) / (sf + 1.0) * minus_inv_z;
    }
    let plain = z_to_minus_a * sum;
    let front = rgamma(a) * rgamma(c);
    if front == Complex64::new(0.0, 0.0) {
        return (plain, 1e-15);
    }
    let sign = if nterms % 2 == 0 { 1.0 } else { -1.0 };
    let front = sign * 2.0 * PI * ((a - bf) * lnz).exp() * front;
    let mut rem = Complex64::new(0.0, 0.0);
    let mut coef = Complex64::new(1.0, 0.0);
    let mut last = 0.0;
    for s in 0..REEXPANSION_TERMS {
        let p = nterms as f64 + 2.0 * a - bf - s as f64;
        let g = g_function(p, r, theta);
        let piece = coef * g;
        rem += piece;
        last = piece.norm();
        let sf = s as f64;
        coef *= (1.0 - a + sf) * (bf - a + sf) / (sf + 1.0) * minus_inv_z;
    }
    let value = plain + front * rem;
    let est = (front.norm() * last) / value.norm().max(1e-300) + 1e-13;
    (value, est)
}

struct IncompleteGammaRules {
    arc_x: Vec<f64>,
    arc_w: Vec<f64>,
    ray_u: Vec<f64>,
    ray_w: Vec<f64>,
}

fn rules() -> &'static IncompleteGammaRules {
    static RULES: OnceLock<IncompleteGammaRules> = OnceLock::new();
    RULES.get_or_init(|| {
        let (arc_x, arc_w) = legendre_reference(128);
        let lag = laguerre_halfline(40, 1.0).expect("fixed Laguerre rule");
        let ray_w = lag.nodes.iter().zip(&lag.weights).map(|(u, w)| w * (-u).exp()).collect();
        IncompleteGammaRules { arc_x, arc_w, ray_u: lag.nodes, ray_w }
    })
}

/// `G_p(z) = e^z Γ(p) Γ(1-p, z) / (2π)` with the incomplete gamma function
/// integrated along the arc `|t| = |z|` down to the positive axis, then the ray.
fn g_function(p: Complex64, r: f64, theta: f64) -> Complex64 {
    let q = 1.0 - p;
    let z = Complex64::from_polar(r, theta);
    let lg = ln_gamma(p);
    let rl = rules();
    let i = Complex64::i();
    let mut arc = Complex64::new(0.0, 0.0);
    for (&x, &w) in rl.arc_x.iter().zip(&rl.arc_w) {
        let phi = 0.5 * theta * (x + 1.0);
        let t = Complex64::from_polar(r, phi);
        let lt = Complex64::new(r.ln(), phi);
        let f = (-t + z + (q - 1.0) * lt + lg).exp();
        arc += w * f * i * t * (0.5 * theta);
    }
    let mut ray = Complex64::new(0.0, 0.0);
    for (&u, &w) in rl.ray_u.iter().zip(&rl.ray_w) {
        ray += w * (-r + z + (q - 1.0) * (r + u).ln() + lg).exp();
    }
    (ray - arc) / (2.0 * PI)
}
