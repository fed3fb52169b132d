//! Problem data (interval, shift, deformation, oscillation, symbols) and the
//! scalar functions built from it: `ν`, `τ_k`, `α`, `α_k`, plus Cauchy-type
//! boundary-value machinery.

use crate::error::{Error, Result};
use crate::quadgrid::{gauss_interval, stadium_contour, IntervalRule};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt::Debug;
use std::sync::Arc;

/// A function holomorphic in a declared neighbourhood of `[a, b]`.
pub trait Holomorphic: Send + Sync + Debug {
    fn eval(&self, z: Complex64) -> Complex64;

    /// Derivative; central differences unless overridden.
    fn deriv(&self, z: Complex64) -> Complex64 {
        let h = 1e-5 * (1.0 + z.norm());
        (self.eval(z + h) - self.eval(z - h)) / (2.0 * h)
    }

    /// Human-readable description of the validity region.
    fn domain(&self) -> String {
        "entire".into()
    }
}

/// The closed preset family exposed through configuration files.
#[derive(Debug, Clone, PartialEq)]
pub enum SymbolPreset {
    Constant(Complex64),
    /// Real coefficients, ascending powers.
    Polynomial(Vec<f64>),
    /// `γ · exp(Σ c_k λ^k)`.
    ExpPolynomial { gamma: f64, coeffs: Vec<f64> },
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::new(0.0, 0.0);
    let mut d = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        d = d * z + v;
        v = v * z + c;
    }
    (v, d)
}

impl Holomorphic for SymbolPreset {
    fn eval(&self, z: Complex64) -> Complex64 {
        match self {
            SymbolPreset::Constant(g) => *g,
            SymbolPreset::Polynomial(c) => horner(c, z).0,
            SymbolPreset::ExpPolynomial { gamma, coeffs } => *gamma * horner(coeffs, z).0.exp(),
        }
    }

    fn deriv(&self, z: Complex64) -> Complex64 {
        match self {
            SymbolPreset::Constant(_) => Complex64::new(0.0, 0.0),
            SymbolPreset::Polynomial(c) => horner(c, z).1,
            SymbolPreset::ExpPolynomial { gamma, coeffs } => {
                let (v, d) = horner(coeffs, z);
                *gamma * v.exp() * d
            }
        }
    }
}

/// Serializable description of a preset symbol (`kind` plus `params`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymbolSpec {
    pub kind: String,
    #[serde(default)]
    pub params: Vec<f64>,
}

impl SymbolSpec {
    pub fn to_preset(&self) -> Result<SymbolPreset> {
        match self.kind.as_str() {
            "constant" => match self.params.as_slice() {
                [g] => Ok(SymbolPreset::Constant(Complex64::new(*g, 0.0))),
                [re, im] => Ok(SymbolPreset::Constant(Complex64::new(*re, *im))),
                _ => Err(Error::Config("constant symbol takes 1 or 2 params".into())),
            },
            "polynomial" => {
                if self.params.is_empty() {
                    return Err(Error::Config("polynomial symbol needs coefficients".into()));
                }
                Ok(SymbolPreset::Polynomial(self.params.clone()))
            }
            "exp_polynomial" => match self.params.split_first() {
                Some((g, rest)) if !rest.is_empty() => Ok(SymbolPreset::ExpPolynomial {
                    gamma: *g,
                    coeffs: rest.to_vec(),
                }),
                _ => Err(Error::Config("exp_polynomial takes gamma followed by coefficients".into())),
            },
            other => Err(Error::Config(format!("unknown symbol kind '{other}'"))),
        }
    }
}

/// Inputs to [`make_problem`].
#[derive(Debug, Clone)]
pub struct ProblemInput {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub t: Complex64,
    pub x: f64,
    pub f: Arc<dyn Holomorphic>,
    pub p: Arc<dyn Holomorphic>,
    pub margin: f64,
}

/// Validated analytic inputs.
#[derive(Debug, Clone)]
pub struct ProblemData {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub t: Complex64,
    pub x: f64,
    pub f: Arc<dyn Holomorphic>,
    pub p: Arc<dyn Holomorphic>,
    pub margin: f64,
}

/// Side of the interval for boundary values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn sign(self) -> f64 {
        match self {
            Side::Plus => 1.0,
            Side::Minus => -1.0,
        }
    }
}

/// `ε_1 = -1`, `ε_2 = +1`.
pub fn eps(k: usize) -> f64 {
    if k == 1 {
        -1.0
    } else {
        1.0
    }
}

const VALIDATION_NODES: usize = 64;

/// Validate inputs: `p` real with `p' > 0` on `[a, b]`, `|arg(1+F)| < π` on
/// the interval and on a stadium at half the margin.
pub fn make_problem(input: ProblemInput) -> Result<ProblemData> {
    let ProblemInput { a, b, c, t, x, f, p, margin } = input;
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Parameter(format!("need a < b, got [{a}, {b}]")));
    }
    if !(c > 0.0) || !(x > 0.0) || !(margin > 0.0) || !t.is_finite() {
        return Err(Error::Parameter("c, x and margin must be positive, t finite".into()));
    }
    let rule = gauss_interval(VALIDATION_NODES, a, b)?;
    let scale = (p.eval(Complex64::new(b, 0.0)) - p.eval(Complex64::new(a, 0.0))).norm().max(1.0);
    for &l in rule.nodes.iter().chain([a, b].iter()) {
        let z = Complex64::new(l, 0.0);
        let pv = p.eval(z);
        if pv.im.abs() > 1e-12 * scale.max(pv.norm()) {
            return Err(Error::SymbolDomain { what: "p is not real on [a,b]".into(), node: l });
        }
        let dp = p.deriv(z);
        if !(dp.re > 0.0) {
            return Err(Error::SymbolDomain { what: format!("p'(λ) = {dp} is not positive"), node: l });
        }
    }
    let contour = stadium_contour(a, b, 0.5 * margin, 8.0 / margin.min(b - a), f64::INFINITY)?;
    let check = |z: Complex64| -> Result<()> {
        let w = 1.0 + f.eval(z);
        if !w.is_finite() || w.norm() == 0.0 || PI - w.arg().abs() < 1e-12 {
            return Err(Error::SymbolDomain {
                what: format!("|arg(1+F)| reaches π (1+F = {w}) at {z}"),
                node: z.re,
            });
        }
        Ok(())
    };
    for &l in &rule.nodes {
        check(Complex64::new(l, 0.0))?;
    }
    for &z in &contour.points {
        check(z)?;
    }
    Ok(ProblemData { a, b, c, t, x, f, p, margin })
}

impl ProblemData {
    /// Same data with another deformation parameter.
    pub fn with_t(&self, t: Complex64) -> ProblemData {
        ProblemData { t, ..self.clone() }
    }

    /// Same data with another oscillation parameter.
    pub fn with_x(&self, x: f64) -> ProblemData {
        ProblemData { x, ..self.clone() }
    }

    pub fn f(&self, z: Complex64) -> Complex64 {
        self.f.eval(z)
    }

    pub fn p(&self, z: Complex64) -> Complex64 {
        self.p.eval(z)
    }

    pub fn dp(&self, z: Complex64) -> Complex64 {
        self.p.deriv(z)
    }

    /// Distance from `λ` to the segment `[a, b]`.
    pub fn distance(&self, z: Complex64) -> f64 {
        (z - z.re.clamp(self.a, self.b)).norm()
    }

    pub fn on_interval(&self, z: Complex64) -> bool {
        self.distance(z) < 1e-13 * (self.b - self.a)
    }
}

/// `ν(λ) = -ln(1+F(λ)) / (2πi)`, principal branch.
pub fn nu(pd: &ProblemData, z: Complex64) -> Result<Complex64> {
    let w = 1.0 + pd.f(z);
    if w.norm() == 0.0 {
        return Err(Error::Branch(format!("1 + F vanishes at {z}")));
    }
    Ok(-w.ln() / Complex64::new(0.0, 2.0 * PI))
}

/// `ν'(λ) = -F'(λ) / (2πi (1 + F(λ)))`.
pub fn nu_prime(pd: &ProblemData, z: Complex64) -> Complex64 {
    -pd.f.deriv(z) / ((1.0 + pd.f(z)) * Complex64::new(0.0, 2.0 * PI))
}

/// `τ_1 = -F/(1+F)`, `τ_2 = F`.
pub fn tau(k: usize, pd: &ProblemData, z: Complex64) -> Result<Complex64> {
    let f = pd.f(z);
    match k {
        1 => {
            if (1.0 + f).norm() == 0.0 {
                return Err(Error::Branch(format!("τ_1 has a pole at {z}")));
            }
            Ok(-f / (1.0 + f))
        }
        2 => Ok(f),
        _ => Err(Error::Parameter(format!("k must be 1 or 2, got {k}"))),
    }
}

/// `ln((b-λ)/(a-λ))`; on the interval the `±iπ` boundary value is used.
pub fn endpoint_log(a: f64, b: f64, z: Complex64, side: Option<Side>) -> Complex64 {
    match side {
        Some(s) => Complex64::new(((b - z.re) / (z.re - a)).abs().ln(), s.sign() * PI),
        None => ((b - z) / (a - z)).ln(),
    }
}

/// `∫_a^b g(μ)/(μ-λ) dμ` with singularity subtraction, `g` analytic near the
/// interval. With `side` set, `λ` must be real in `(a, b)` and the `±`
/// boundary value is returned.
pub fn cauchy_subtracted<G>(rule: &IntervalRule, g: G, z: Complex64, side: Option<Side>) -> Complex64
where
    G: Fn(Complex64) -> Complex64,
{
    let gz = g(z);
    let mut acc = Complex64::new(0.0, 0.0);
    for (&m, &w) in rule.nodes.iter().zip(&rule.weights) {
        let d = Complex64::new(m, 0.0) - z;
        if d.norm() < 1e-14 * (rule.b - rule.a) {
            // removable point: g'(λ) by a symmetric difference
            let h = 1e-5 * (rule.b - rule.a);
            acc += w * (g(z + h) - g(z - h)) / (2.0 * h);
        } else {
            acc += w * (g(Complex64::new(m, 0.0)) - gz) / d;
        }
    }
    acc + gz * endpoint_log(rule.a, rule.b, z, side)
}

/// Scalar RHP data: `ν` and `α` evaluated through an interval rule.
#[derive(Debug, Clone)]
pub struct ScalarRH {
    pub pd: ProblemData,
    pub rule: IntervalRule,
    nu_nodes: Vec<Complex64>,
}

/// Default node count for the `α` exponent integral.
pub const ALPHA_NODES: usize = 64;

impl ScalarRH {
    pub fn new(pd: &ProblemData, rule: IntervalRule) -> Result<Self> {
        let nu_nodes = rule
            .nodes
            .iter()
            .map(|&m| nu(pd, Complex64::new(m, 0.0)))
            .collect::<Result<Vec<_>>>()?;
        Ok(ScalarRH { pd: pd.clone(), rule, nu_nodes })
    }

    pub fn with_default_rule(pd: &ProblemData) -> Result<Self> {
        ScalarRH::new(pd, gauss_interval(ALPHA_NODES, pd.a, pd.b)?)
    }

    pub fn nu(&self, z: Complex64) -> Complex64 {
        nu(&self.pd, z).unwrap_or(Complex64::new(f64::NAN, f64::NAN))
    }

    /// `∫ ν(μ)/(μ-λ) dμ`, subtracted near the interval.
    fn exponent(&self, z: Complex64, side: Option<Side>) -> Complex64 {
        if side.is_none() && self.pd.distance(z) > 0.5 * self.pd.margin {
            return self
                .rule
                .nodes
                .iter()
                .zip(&self.rule.weights)
                .zip(&self.nu_nodes)
                .map(|((&m, &w), &v)| w * v / (m - z))
                .sum();
        }
        let nz = self.nu(z);
        let mut acc = Complex64::new(0.0, 0.0);
        for ((&m, &w), &v) in self.rule.nodes.iter().zip(&self.rule.weights).zip(&self.nu_nodes) {
            let d = m - z;
            if d.norm() < 1e-14 * (self.pd.b - self.pd.a) {
                acc += w * nu_prime(&self.pd, z);
            } else {
                acc += w * (v - nz) / d;
            }
        }
        acc + nz * endpoint_log(self.pd.a, self.pd.b, z, side)
    }

    /// `α(λ)` for `λ` off `[a, b]`.
    pub fn alpha(&self, z: Complex64) -> Result<Complex64> {
        if self.pd.on_interval(z) {
            return Err(Error::Proximity { what: "α evaluated on [a,b]".into(), re: z.re, im: z.im });
        }
        Ok(self.exponent(z, None).exp())
    }

    /// `α_k = α^{ε_k}`.
    pub fn alpha_k(&self, k: usize, z: Complex64) -> Result<Complex64> {
        let v = self.alpha(z)?;
        Ok(if k == 1 { 1.0 / v } else { v })
    }

    /// Boundary value `α_±(λ0)` for `λ0 ∈ (a, b)`.
    pub fn alpha_bv(&self, l0: f64, side: Side) -> Result<Complex64> {
        if !(l0 > self.pd.a && l0 < self.pd.b) {
            return Err(Error::Parameter(format!("boundary value requested at {l0} outside (a,b)")));
        }
        Ok(self.exponent(Complex64::new(l0, 0.0), Some(side)).exp())
    }

    pub fn alpha_k_bv(&self, k: usize, l0: f64, side: Side) -> Result<Complex64> {
        let v = self.alpha_bv(l0, side)?;
        Ok(if k == 1 { 1.0 / v } else { v })
    }

    /// `α` on a chosen side: off-axis value, or the boundary value on `(a, b)`.
    pub fn alpha_side(&self, z: Complex64, side: Side) -> Result<Complex64> {
        if z.im == 0.0 && z.re > self.pd.a && z.re < self.pd.b {
            self.alpha_bv(z.re, side)
        } else {
            self.alpha(z)
        }
    }

    /// Analytic continuation of `α_+` off `(a, b)`: `α` above, `α/(1+F)` below.
    pub fn alpha_plus_continued(&self, z: Complex64) -> Result<Complex64> {
        if z.im > 0.0 {
            self.alpha(z)
        } else if z.im < 0.0 {
            Ok(self.alpha(z)? / (1.0 + self.pd.f(z)))
        } else {
            self.alpha_bv(z.re, Side::Plus)
        }
    }
}

/// One-shot `α(λ)` with the given rule.
pub fn alpha(pd: &ProblemData, rule: &IntervalRule, z: Complex64) -> Result<Complex64> {
    ScalarRH::new(pd, rule.clone())?.alpha(z)
}

/// Geometric `δ` schedule for `±iδ` limits.
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaSchedule {
    pub deltas: Vec<f64>,
}

impl DeltaSchedule {
    /// `δ ∈ {1e-2, 1e-3, 1e-4, 1e-5}·(b-a)`.
    pub fn standard(a: f64, b: f64) -> Self {
        DeltaSchedule { deltas: (2..=5).map(|k| 10f64.powi(-k) * (b - a)).collect() }
    }
}

/// Richardson (Neville) extrapolation of `f(λ0 ± iδ)` to `δ = 0`.
///
/// Returns the limit and an error estimate.
pub fn boundary_value<F>(f: F, l0: f64, side: Side, schedule: &DeltaSchedule) -> Result<(Complex64, f64)>
where
    F: Fn(Complex64) -> Complex64,
{
    let h = &schedule.deltas;
    if h.len() < 2 {
        return Err(Error::Parameter("δ schedule needs at least two values".into()));
    }
    let mut table: Vec<Complex64> = h
        .iter()
        .map(|&d| f(Complex64::new(l0, side.sign() * d)))
        .collect();
    let n = table.len();
    let mut estimates = Vec::new();
    let mut prev_best = table[n - 1];
    for level in 1..n {
        for i in (level..n).rev() {
            let hi = h[i];
            let hj = h[i - level];
            table[i] = (table[i] * hj - table[i - 1] * hi) / (hj - hi);
        }
        let best = table[n - 1];
        estimates.push((best - prev_best).norm());
        prev_best = best;
    }
    let est = *estimates.last().unwrap();
    if estimates.len() >= 2 && est > 10.0 * estimates[estimates.len() - 2] && est > 1e-8 {
        return Err(Error::BoundaryLimit { estimate: est });
    }
    if !prev_best.is_finite() {
        return Err(Error::BoundaryLimit { estimate: f64::INFINITY });
    }
    Ok((prev_best, est))
}
