//! Quadrature rules: Gauss–Legendre on intervals (plain and endpoint-graded),
//! Gauss-panel stadium contours around a segment, and Gauss–Laguerre on the
//! half-line.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Quadrature rule on a real interval `[a, b]`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalRule {
    pub a: f64,
    pub b: f64,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl IntervalRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate<F: Fn(f64) -> Complex64>(&self, f: F) -> Complex64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| f(x) * w)
            .sum()
    }

    pub fn integrate_real<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| f(x) * w)
            .sum()
    }

    /// Smallest gap between consecutive nodes (or to an endpoint).
    pub fn min_spacing(&self) -> f64 {
        let mut gap = self.nodes[0] - self.a;
        for pair in self.nodes.windows(2) {
            gap = gap.min(pair[1] - pair[0]);
        }
        gap.min(self.b - self.nodes[self.nodes.len() - 1])
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`, ascending.
pub(crate) fn legendre_reference(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (p, d) = legendre_eval(n, z);
            dp = d;
            let dz = p / d;
            z -= dz;
            if dz.abs() < 1e-16 {
                let (_, d) = legendre_eval(n, z);
                dp = d;
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    if n % 2 == 1 {
        x[n / 2] = 0.0;
    }
    (x, w)
}

/// `(P_n(z), P_n'(z))` by the three-term recurrence.
fn legendre_eval(n: usize, z: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = z;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (z * p1 - p0) / (z * z - 1.0);
    (p1, d)
}

fn check_interval(n: usize, a: f64, b: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::Parameter("rule size must be at least 1".into()));
    }
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Parameter(format!("need a < b, got [{a}, {b}]")));
    }
    Ok(())
}

/// Gauss–Legendre rule with `n` points mapped to `[a, b]`.
pub fn gauss_interval(n: usize, a: f64, b: f64) -> Result<IntervalRule> {
    check_interval(n, a, b)?;
    let (x, w) = legendre_reference(n);
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    Ok(IntervalRule {
        a,
        b,
        nodes: x.iter().map(|&s| mid + half * s).collect(),
        weights: w.iter().map(|&v| half * v).collect(),
    })
}

/// Gauss–Legendre rule pushed through the sigmoidal map
/// `s -> s^p / (s^p + (1-s)^p)`, clustering nodes at both endpoints.
///
/// Used for densities carrying algebraic endpoint factors such as `(λ-a)^ν`.
pub fn graded_interval(n: usize, a: f64, b: f64, p: u32) -> Result<IntervalRule> {
    check_interval(n, a, b)?;
    if p == 0 {
        return Err(Error::Parameter("grading exponent must be positive".into()));
    }
    let (x, w) = legendre_reference(n);
    let pf = p as f64;
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for (&xi, &wi) in x.iter().zip(&w) {
        let s = 0.5 * (xi + 1.0);
        let sp = s.powf(pf);
        let tp = (1.0 - s).powf(pf);
        let den = sp + tp;
        let g = sp / den;
        let dg = pf * s.powf(pf - 1.0) * (1.0 - s).powf(pf - 1.0) / (den * den);
        nodes.push(a + (b - a) * g);
        weights.push((b - a) * dg * 0.5 * wi);
    }
    Ok(IntervalRule { a, b, nodes, weights })
}

/// Closed counterclockwise stadium around `[a, b]` at constant distance `radius`.
#[derive(Debug, Clone, PartialEq)]
pub struct Contour {
    pub a: f64,
    pub b: f64,
    pub radius: f64,
    pub points: Vec<Complex64>,
    pub weights: Vec<Complex64>,
}

impl Contour {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `∮ f(z) dz`.
    pub fn integrate<F: Fn(Complex64) -> Complex64>(&self, f: F) -> Complex64 {
        self.points
            .iter()
            .zip(&self.weights)
            .map(|(&z, &w)| f(z) * w)
            .sum()
    }

    pub fn perimeter(&self) -> f64 {
        2.0 * (self.b - self.a) + 2.0 * PI * self.radius
    }

    /// Maximum distance of a sample from `[a, b]` equals `radius * (1 + SHAPE_CONSTANT)`.
    pub const SHAPE_CONSTANT: f64 = 0.0;
}

/// Minimum number of Gauss points per contour panel.
const MIN_PANEL_POINTS: usize = 16;

/// Stadium contour with Gauss–Legendre panels of length at most `2 radius`.
///
/// `n_per_unit` sets the point density per unit arclength; `bound` is the
/// caller's safety limit on the radius (pass `f64::INFINITY` for none).
pub fn stadium_contour(a: f64, b: f64, radius: f64, n_per_unit: f64, bound: f64) -> Result<Contour> {
    if !(a < b) {
        return Err(Error::Parameter(format!("need a < b, got [{a}, {b}]")));
    }
    if !(radius > 0.0) || !(n_per_unit > 0.0) {
        return Err(Error::Parameter("contour radius and density must be positive".into()));
    }
    if radius >= bound {
        return Err(Error::ContourSafety { radius, bound });
    }
    let i = Complex64::i();
    let mut points = Vec::new();
    let mut weights = Vec::new();

    let segment = |start: Complex64, dir: f64, len: f64, points: &mut Vec<Complex64>, weights: &mut Vec<Complex64>| {
        let panels = (len / (2.0 * radius)).ceil().max(1.0) as usize;
        let plen = len / panels as f64;
        let q = ((n_per_unit * plen).ceil() as usize).max(MIN_PANEL_POINTS);
        let (x, w) = legendre_reference(q);
        for k in 0..panels {
            let s0 = k as f64 * plen;
            for (&xi, &wi) in x.iter().zip(&w) {
                let s = s0 + 0.5 * plen * (xi + 1.0);
                points.push(start + dir * s);
                weights.push(Complex64::new(dir * 0.5 * plen * wi, 0.0));
            }
        }
    };
    let cap = |center: f64, theta0: f64, points: &mut Vec<Complex64>, weights: &mut Vec<Complex64>| {
        let len = PI * radius;
        let panels = (len / (2.0 * radius)).ceil().max(1.0) as usize;
        let dtheta = PI / panels as f64;
        let q = ((n_per_unit * radius * dtheta).ceil() as usize).max(MIN_PANEL_POINTS);
        let (x, w) = legendre_reference(q);
        for k in 0..panels {
            let t0 = theta0 + k as f64 * dtheta;
            for (&xi, &wi) in x.iter().zip(&w) {
                let th = t0 + 0.5 * dtheta * (xi + 1.0);
                let e = Complex64::from_polar(1.0, th);
                points.push(center + radius * e);
                weights.push(i * radius * e * (0.5 * dtheta * wi));
            }
        }
    };

    let len = b - a;
    segment(Complex64::new(a, -radius), 1.0, len, &mut points, &mut weights);
    cap(b, -0.5 * PI, &mut points, &mut weights);
    segment(Complex64::new(b, radius), -1.0, len, &mut points, &mut weights);
    cap(a, 0.5 * PI, &mut points, &mut weights);
    Ok(Contour { a, b, radius, points, weights })
}

/// Gauss–Laguerre rule rescaled to `∫_0^∞ g(s) ds` for `g ~ e^{-c s}` decay.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfLineRule {
    pub c: f64,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl HalfLineRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate<F: Fn(f64) -> Complex64>(&self, f: F) -> Complex64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&s, &w)| f(s) * w)
            .sum()
    }
}

/// Scaled Laguerre values `(L_n(u) e^{-u/2}, L_{n-1}(u) e^{-u/2})`.
fn laguerre_scaled(n: usize, u: f64) -> (f64, f64) {
    let scale = (-0.5 * u).exp();
    let mut p0 = 0.0;
    let mut p1 = scale;
    for k in 1..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0 - u) * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    (p1, p0)
}

/// `n`-point Gauss–Laguerre rule for `∫_0^∞ g(s) ds`, nodes `s = u / c`.
///
/// Weights include the factor `e^{u}` so that plain integrands (carrying
/// their own exponential decay) are summed directly.
pub fn laguerre_halfline(n: usize, c: f64) -> Result<HalfLineRule> {
    if n == 0 {
        return Err(Error::Parameter("rule size must be at least 1".into()));
    }
    if !(c > 0.0) || !c.is_finite() {
        return Err(Error::Parameter(format!("decay scale must be positive, got {c}")));
    }
    let nf = n as f64;
    let mut roots: Vec<f64> = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    let mut z = 0.0;
    for i in 1..=n {
        if i == 1 {
            z = 3.0 / (1.0 + 2.4 * nf);
        } else if i == 2 {
            z += 15.0 / (1.0 + 2.5 * nf);
        } else {
            let ai = (i - 2) as f64;
            z += (1.0 + 2.55 * ai) / (1.9 * ai) * (z - roots[i - 3]);
        }
        for _ in 0..200 {
            let (pn, pm) = laguerre_scaled(n, z);
            let dp = nf * (pn - pm) / z;
            let dz = pn / dp;
            z -= dz;
            if dz.abs() <= 1e-15 * z.abs().max(1.0) {
                break;
            }
        }
        roots.push(z);
        let (pn1, _) = laguerre_scaled(n + 1, z);
        weights.push(z / ((nf + 1.0) * (nf + 1.0) * pn1 * pn1));
    }
    Ok(HalfLineRule {
        c,
        nodes: roots.iter().map(|u| u / c).collect(),
        weights: weights.iter().map(|w| w / c).collect(),
    })
}
