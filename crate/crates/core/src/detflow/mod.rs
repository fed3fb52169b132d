//! Orchestration: configuration, the large-`x` determinant sweep, the
//! `t`-derivative check, and CSV / summary emission.

pub mod criteria;

use crate::error::{Error, Result};
use crate::fredholm::{self, Support};
use crate::kernels::{u_kt, u_pm, PmSign, SineKernel, VtKernel};
use crate::l2half::{kappa_form, HalfLineGrid};
use crate::linalg::CMat;
use crate::quadgrid::gauss_interval;
use crate::rhpcore::{
    beta_diagnostics, chi_diagnostics, factorization_diagnostics, fitted_decay_exponent, oscillation_nodes, pi_residual,
    solve_beta_default, solve_chi, BetaSolution, DiagnosticRow, PiReport, ProbeSet,
};
use crate::symbolspace::{eps, make_problem, tau, ProblemData, ProblemInput, SymbolSpec};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

/// Smallest accepted interval node count.
pub const MIN_INTERVAL_NODES: usize = 16;
/// Smallest accepted half-line node count.
pub const MIN_HALFLINE_NODES: usize = 24;
/// Largest interval node count the sweep will use.
pub const MAX_INTERVAL_NODES: usize = 4000;
/// Determinants below this modulus are treated as vanishing.
pub const VANISHING_DET: f64 = 1e-13;

/// Relative error required at the last `x` of a sweep.
pub const TOL_LIMIT: f64 = 0.05;
/// Slack on the nonincreasing-tail check.
pub const TAIL_SLACK: f64 = 1.5;
/// Agreement of the two right-hand-side routes.
pub const TOL_ROUTES: f64 = 1e-6;
/// Contour-radius invariance of contour determinants.
pub const TOL_RADIUS: f64 = 1e-8;
/// Floor of the finite-difference / trace agreement.
pub const TOL_DT: f64 = 1e-6;

/// Radius of the circle carrying the trace formula.
pub const TRACE_RADIUS: f64 = 2.0;
/// Trapezoid points on that circle.
pub const TRACE_POINTS: usize = 96;

fn default_margin() -> f64 {
    0.5
}
fn default_ns() -> usize {
    crate::l2half::DEFAULT_NS
}
fn default_density() -> f64 {
    60.0
}

/// Sweep configuration, read from TOML.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub t_re: f64,
    #[serde(default)]
    pub t_im: f64,
    #[serde(default)]
    pub x_list: Vec<f64>,
    #[serde(rename = "F")]
    pub f: SymbolSpec,
    pub p: SymbolSpec,
    #[serde(default = "default_margin")]
    pub margin: f64,
    /// Minimum interval node count (raised to resolve the oscillation).
    #[serde(default)]
    pub n: Option<usize>,
    /// Half-line node count.
    #[serde(default = "default_ns")]
    pub ns: usize,
    /// Contour points per unit arclength.
    #[serde(default = "default_density")]
    pub contour_density: f64,
    #[serde(default)]
    pub contour_radius: Option<f64>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub output: Option<PathBuf>,
}

impl SweepConfig {
    /// `F ≡ 0.2`, `p = id`, `[-1, 1]`, `c = 1`, `t = 1`, `x ∈ {50, 100, 200}`.
    pub fn headline() -> Self {
        SweepConfig {
            a: -1.0,
            b: 1.0,
            c: 1.0,
            t_re: 1.0,
            t_im: 0.0,
            x_list: vec![50.0, 100.0, 200.0],
            f: SymbolSpec { kind: "constant".into(), params: vec![0.2] },
            p: SymbolSpec { kind: "polynomial".into(), params: vec![0.0, 1.0] },
            margin: default_margin(),
            n: None,
            ns: default_ns(),
            contour_density: default_density(),
            contour_radius: None,
            seed: 0,
            output: None,
        }
    }

    pub fn from_toml_str(s: &str) -> Result<Self> {
        let cfg: SweepConfig = toml::from_str(s).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let s = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&s)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(n) = self.n {
            if n < MIN_INTERVAL_NODES {
                return Err(Error::Config(format!("n = {n} is below the minimum {MIN_INTERVAL_NODES}")));
            }
        }
        if self.ns < MIN_HALFLINE_NODES {
            return Err(Error::Config(format!("ns = {} is below the minimum {MIN_HALFLINE_NODES}", self.ns)));
        }
        if !(self.contour_density > 0.0) {
            return Err(Error::Config("contour_density must be positive".into()));
        }
        if self.x_list.iter().any(|x| !(*x > 0.0) || !x.is_finite()) {
            return Err(Error::Config("x_list entries must be positive".into()));
        }
        if self.x_list.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Config("x_list must be strictly increasing".into()));
        }
        self.problem(self.x_list.first().copied().unwrap_or(1.0))?;
        Ok(())
    }

    pub fn t(&self) -> Complex64 {
        Complex64::new(self.t_re, self.t_im)
    }

    /// Problem data at oscillation parameter `x`.
    pub fn problem(&self, x: f64) -> Result<ProblemData> {
        make_problem(ProblemInput {
            a: self.a,
            b: self.b,
            c: self.c,
            t: self.t(),
            x,
            f: Arc::new(self.f.to_preset()?),
            p: Arc::new(self.p.to_preset()?),
            margin: self.margin,
        })
    }

    /// Interval node count at `pd.x`: the oscillation rule or `n`, whichever is larger.
    pub fn interval_nodes(&self, pd: &ProblemData) -> Result<usize> {
        let n = oscillation_nodes(pd).max(self.n.unwrap_or(0));
        if n > MAX_INTERVAL_NODES {
            return Err(Error::Resolution { needed: n, cap: MAX_INTERVAL_NODES });
        }
        Ok(n)
    }

    /// Contour radius: configured, or inside the interval scale, the margin
    /// and the pole distance `c/(2|t|)` with a factor-2 safety.
    pub fn radius(&self) -> f64 {
        self.contour_radius.unwrap_or_else(|| {
            let tn = self.t().norm().max(1.0);
            (0.1 * (self.b - self.a)).min(self.c / (4.0 * tn)).min(0.8 * self.margin)
        })
    }

    /// Safety bound passed to the contour generator.
    fn radius_bound(&self) -> f64 {
        self.c / (2.0 * self.t().norm().max(1.0))
    }

    pub fn contour(&self, radius: f64) -> Result<Support> {
        Support::stadium(self.a, self.b, radius, self.contour_density, self.radius_bound())
    }
}

/// One `x` of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub x: f64,
    pub nodes: usize,
    pub det_v: Complex64,
    pub det_v0: Complex64,
    pub ratio: Complex64,
    pub det_u_plus: Complex64,
    pub det_u_minus: Complex64,
    pub product: Complex64,
    pub relative_error: f64,
    /// `κ` of `relative_error ≈ C x^{-κ}` fitted over the whole sweep.
    pub decay_exponent: f64,
    /// Relative error against `det(I+U_{1;1}) det(I+U_{2;1})`.
    pub relative_error_factorized: f64,
    pub runtime_s: f64,
}

/// Contour determinants, which do not depend on `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct ContourDeterminants {
    pub radius: f64,
    pub det_u_plus: Complex64,
    pub det_u_minus: Complex64,
    pub det_u1: Complex64,
    pub det_u2: Complex64,
    /// `max |det(r) - det(r/2)|` over the four determinants.
    pub radius_gap: f64,
}

impl ContourDeterminants {
    pub fn product(&self) -> Complex64 {
        self.det_u_plus * self.det_u_minus
    }

    pub fn product_factorized(&self) -> Complex64 {
        self.det_u1 * self.det_u2
    }

    /// Relative gap between the two right-hand-side routes.
    pub fn route_gap(&self) -> f64 {
        (self.product() - self.product_factorized()).norm() / self.product_factorized().norm()
    }
}

/// Result of [`theorem1_sweep`].
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    pub contour: Option<ContourDeterminants>,
    pub diagnostics: Vec<DiagnosticRow>,
    pub pi: Option<PiReport>,
    pub runtime_s: f64,
}

/// Pass/fail line of a summary.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, pass: bool, detail: String) -> Self {
        Check { name: name.into(), pass, detail }
    }

    pub fn line(&self) -> String {
        format!("{} {}: {}", if self.pass { "PASS" } else { "FAIL" }, self.name, self.detail)
    }
}

/// `det(I+U_±)`, `det(I+U_{k;1})` at radius `r` and `r/2`.
pub fn contour_determinants(cfg: &SweepConfig) -> Result<ContourDeterminants> {
    let pd = cfg.problem(1.0)?;
    let pd1 = pd.with_t(Complex64::new(1.0, 0.0));
    let kernels = [u_pm(&pd, PmSign::Plus)?, u_pm(&pd, PmSign::Minus)?, u_kt(&pd1, 1)?, u_kt(&pd1, 2)?];
    let r = cfg.radius();
    let dets: Vec<(Complex64, Complex64)> = kernels
        .par_iter()
        .map(|k| {
            let d = fredholm::determinant(k, cfg.contour(r)?)?.value;
            let h = fredholm::determinant(k, cfg.contour(0.5 * r)?)?.value;
            Ok((d, h))
        })
        .collect::<Result<_>>()?;
    let radius_gap = dets.iter().map(|(d, h)| (d - h).norm()).fold(0.0, f64::max);
    Ok(ContourDeterminants {
        radius: r,
        det_u_plus: dets[0].0,
        det_u_minus: dets[1].0,
        det_u1: dets[2].0,
        det_u2: dets[3].0,
        radius_gap,
    })
}

/// `det(I+V)` and `det(I+V0)` at `pd.x` on the Gauss rule with `n` nodes.
pub fn interval_determinants(pd: &ProblemData, n: usize) -> Result<(Complex64, Complex64)> {
    let s = Support::gauss(n, pd.a, pd.b)?;
    let dv = fredholm::determinant(&VtKernel::new(pd), s.clone())?.value;
    let dv0 = fredholm::determinant(&SineKernel::new(pd), s)?.value;
    if dv0.norm() < VANISHING_DET {
        return Err(Error::Parameter(format!("det(I+V0) vanishes at x = {}", pd.x)));
    }
    Ok((dv, dv0))
}

/// Residual diagnostics of the operator objects: `χ` at every `x`, the
/// `x`-independent `β_k` once, and the small-norm residual over the sweep.
fn sweep_diagnostics(cfg: &SweepConfig) -> Result<(Vec<DiagnosticRow>, Option<PiReport>)> {
    let Some(&x0) = cfg.x_list.first() else {
        return Ok((Vec::new(), None));
    };
    let pd = cfg.problem(x0)?;
    let grid = HalfLineGrid::new(&pd, cfg.ns)?;
    let probes = ProbeSet::seeded(cfg.a, cfg.b, cfg.seed);
    let mut rows: Vec<DiagnosticRow> = cfg
        .x_list
        .par_iter()
        .map(|&x| {
            let pd = cfg.problem(x)?;
            let rule = gauss_interval(cfg.interval_nodes(&pd)?, pd.a, pd.b)?;
            let chi = solve_chi(&pd, &rule, &grid)?;
            let mut r = chi_diagnostics(&chi, &probes)?;
            for d in &mut r {
                d.object = format!("{}@x={}", d.object, x);
            }
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let b1 = Arc::new(solve_beta_default(&pd, &grid, 1)?);
    let b2 = Arc::new(solve_beta_default(&pd, &grid, 2)?);
    rows.extend(beta_diagnostics(&b1, &probes)?);
    rows.extend(beta_diagnostics(&b2, &probes)?);
    rows.extend(factorization_diagnostics(&b1, &b2, &probes)?);
    let delta = crate::chfparam::parametrix::DEFAULT_DISK_RADIUS.min(0.5 * cfg.margin).min(0.25 * (cfg.b - cfg.a));
    let pi = pi_residual(&b1, &b2, &cfg.x_list, delta)?;
    Ok((rows, Some(pi)))
}

/// The large-`x` sweep: `det(I+V)/det(I+V0)` against `det(I+U_+)det(I+U_-)`.
pub fn theorem1_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    cfg.validate()?;
    let start = Instant::now();
    if cfg.x_list.is_empty() {
        return Ok(SweepReport { rows: Vec::new(), contour: None, diagnostics: Vec::new(), pi: None, runtime_s: 0.0 });
    }
    let contour = contour_determinants(cfg)?;
    let product = contour.product();
    let product_f = contour.product_factorized();
    let mut rows: Vec<SweepRow> = cfg
        .x_list
        .par_iter()
        .map(|&x| {
            let t0 = Instant::now();
            let pd = cfg.problem(x)?;
            let n = cfg.interval_nodes(&pd)?;
            let (det_v, det_v0) = interval_determinants(&pd, n)?;
            let ratio = det_v / det_v0;
            Ok(SweepRow {
                x,
                nodes: n,
                det_v,
                det_v0,
                ratio,
                det_u_plus: contour.det_u_plus,
                det_u_minus: contour.det_u_minus,
                product,
                relative_error: (ratio / product - 1.0).norm(),
                decay_exponent: f64::NAN,
                relative_error_factorized: (ratio / product_f - 1.0).norm(),
                runtime_s: t0.elapsed().as_secs_f64(),
            })
        })
        .collect::<Result<_>>()?;
    let errs: Vec<f64> = rows.iter().map(|r| r.relative_error).collect();
    let kappa = fitted_decay_exponent(&cfg.x_list, &errs).unwrap_or(f64::NAN);
    for r in &mut rows {
        r.decay_exponent = kappa;
    }
    let (diagnostics, pi) = sweep_diagnostics(cfg)?;
    Ok(SweepReport { rows, contour: Some(contour), diagnostics, pi, runtime_s: start.elapsed().as_secs_f64() })
}

/// `[a, b, ...]` in short scientific notation.
pub fn sci_list(v: &[f64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| format!("{x:.3e}")).collect();
    format!("[{}]", parts.join(", "))
}

/// Whether `v` is nonincreasing up to the factor `slack`.
pub fn nonincreasing_with_slack(v: &[f64], slack: f64) -> bool {
    v.windows(2).all(|w| w[1] <= slack * w[0])
}

impl SweepReport {
    /// Pass/fail checks of the sweep; empty when there are no rows.
    pub fn checks(&self) -> Vec<Check> {
        let mut out = Vec::new();
        let (Some(first), Some(last), Some(cd)) = (self.rows.first(), self.rows.last(), &self.contour) else {
            return out;
        };
        let errs: Vec<f64> = self.rows.iter().map(|r| r.relative_error).collect();
        let errs_s = sci_list(&errs);
        let decreasing = self.rows.len() < 2 || last.relative_error < first.relative_error;
        out.push(Check::new(
            "limit",
            last.relative_error < TOL_LIMIT && decreasing,
            format!(
                "relative error {:.3e} at x={} (tolerance {TOL_LIMIT}), {:.3e} at x={}",
                last.relative_error, last.x, first.relative_error, first.x
            ),
        ));
        out.push(Check::new(
            "tail_nonincreasing",
            nonincreasing_with_slack(&errs, TAIL_SLACK),
            format!("relative errors {errs_s}, slack {TAIL_SLACK}"),
        ));
        let ef: Vec<f64> = self.rows.iter().map(|r| r.relative_error_factorized).collect();
        let ef_s = sci_list(&ef);
        out.push(Check::new(
            "limit_factorized",
            last.relative_error_factorized < TOL_LIMIT
                && (self.rows.len() < 2 || last.relative_error_factorized < first.relative_error_factorized),
            format!("relative errors against det(I+U_11)det(I+U_21): {ef_s}"),
        ));
        out.push(Check::new(
            "route_consistency",
            cd.route_gap() < TOL_ROUTES,
            format!(
                "det(I+U+)det(I+U-) = {:.12} vs det(I+U_11)det(I+U_21) = {:.12}, relative gap {:.3e}",
                cd.product(),
                cd.product_factorized(),
                cd.route_gap()
            ),
        ));
        out.push(Check::new(
            "radius_invariance",
            cd.radius_gap < TOL_RADIUS,
            format!("max |det(r) - det(r/2)| = {:.3e} at r = {}", cd.radius_gap, cd.radius),
        ));
        let bad: Vec<&DiagnosticRow> = self.diagnostics.iter().filter(|d| !d.pass).collect();
        let worst = self.diagnostics.iter().map(|d| d.residual / d.tolerance).fold(0.0, f64::max);
        out.push(Check::new(
            "operator_diagnostics",
            bad.is_empty(),
            format!("{} rows, {} failing, worst residual/tolerance {:.3e}", self.diagnostics.len(), bad.len(), worst),
        ));
        if let Some(pi) = &self.pi {
            let res: Vec<f64> = pi.rows.iter().map(|r| r.residual).collect();
            let res_s = sci_list(&res);
            out.push(Check::new(
                "small_norm_residual",
                res.windows(2).all(|w| w[1] < w[0]),
                format!(
                    "residuals {res_s}, fitted decay exponent {:.3}, 1 - epsilon = {:.3}",
                    pi.decay_exponent.unwrap_or(f64::NAN),
                    1.0 - pi.epsilon
                ),
            ));
        }
        out
    }
}

/// The three evaluations of `∂_t ln det(I+V_t)` at one `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct DtRow {
    pub x: f64,
    pub finite_difference: Complex64,
    pub contour_trace: Complex64,
    pub reduced: Complex64,
    pub fd_vs_trace: f64,
    pub fd_vs_reduced: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Result of [`dt_logdet_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct DtReport {
    pub t0: Complex64,
    pub h: f64,
    pub rows: Vec<DtRow>,
}

/// `ln det(I+V_t)` at `pd.t` on `n` Gauss nodes.
pub fn log_det_v(pd: &ProblemData, n: usize) -> Result<Complex64> {
    Ok(fredholm::determinant(&VtKernel::new(pd), Support::gauss(n, pd.a, pd.b)?)?.log)
}

/// Central difference in `t` with one Richardson step (`h` and `h/2`).
pub fn dt_finite_difference(pd: &ProblemData, n: usize, h: f64) -> Result<Complex64> {
    let t0 = pd.t;
    let cd = |h: f64| -> Result<Complex64> {
        let up = log_det_v(&pd.with_t(t0 + h), n)?;
        let dn = log_det_v(&pd.with_t(t0 - h), n)?;
        Ok((up - dn) / (2.0 * h))
    };
    let (d1, d2) = (cd(h)?, cd(0.5 * h)?);
    Ok((4.0 * d2 - d1) / 3.0)
}

/// `∮ z tr[∂_z χ · diag(s, -s) · χ^{-1}] dz / 2π` on a circle of radius
/// [`TRACE_RADIUS`] about the interval midpoint.
pub fn dt_contour_trace(pd: &ProblemData, n: usize, ns: usize) -> Result<Complex64> {
    let grid = HalfLineGrid::new(pd, ns)?;
    let rule = gauss_interval(n, pd.a, pd.b)?;
    let chi = solve_chi(pd, &rule, &grid)?;
    let s: Vec<f64> = grid.nodes().iter().chain(grid.nodes()).copied().collect();
    let sign = |q: usize| if q < ns { 1.0 } else { -1.0 };
    let mid = 0.5 * (pd.a + pd.b);
    let radius = TRACE_RADIUS.max(0.75 * (pd.b - pd.a));
    let terms: Vec<Complex64> = (0..TRACE_POINTS)
        .into_par_iter()
        .map(|k| {
            let e = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / TRACE_POINTS as f64);
            let z = mid + radius * e;
            let dz = Complex64::i() * radius * e * (2.0 * PI / TRACE_POINTS as f64);
            let d = chi.dchi(z)?;
            let inv = chi.chi_inv(z)?;
            let ds = CMat::from_fn(2 * ns, 2 * ns, |i, q| d[(i, q)] * s[q] * sign(q));
            let tr = (0..2 * ns).map(|i| (0..2 * ns).map(|q| ds[(i, q)] * inv.mat[(q, i)]).sum::<Complex64>()).sum::<Complex64>();
            Ok(z * tr * dz)
        })
        .collect::<Result<_>>()?;
    Ok(terms.iter().sum::<Complex64>() / (2.0 * PI))
}

/// `Σ_k ε_k ∫ τ_k(μ) κ_k(μ)[s ρ_k(μ)] dμ / 2π`.
pub fn dt_reduced(b1: &BetaSolution, b2: &BetaSolution) -> Result<Complex64> {
    let mut total = Complex64::new(0.0, 0.0);
    for b in [b1, b2] {
        let pd = &b.pd;
        let grid = &b.grid;
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, (&mu, &w)) in b.rule.nodes.iter().zip(&b.rule.weights).enumerate() {
            let z = Complex64::new(mu, 0.0);
            let kap = kappa_form(b.k, grid, z)?;
            let pairing: Complex64 = (0..grid.len()).map(|q| kap.0[q] * grid.nodes()[q] * b.rho[(j, q)] * grid.weights()[q]).sum();
            acc += w * tau(b.k, pd, z)? * pairing;
        }
        total += eps(b.k) * acc / (2.0 * PI);
    }
    Ok(total)
}

/// Compare the finite difference, the contour trace and the reduced form at `t0`.
pub fn dt_logdet_check(cfg: &SweepConfig, t0: Complex64, h: f64) -> Result<DtReport> {
    cfg.validate()?;
    if !(h > 0.0) {
        return Err(Error::Parameter(format!("step h must be positive, got {h}")));
    }
    let rows = cfg
        .x_list
        .iter()
        .map(|&x| {
            let pd = cfg.problem(x)?.with_t(t0);
            let n = cfg.interval_nodes(&pd)?;
            let fd = dt_finite_difference(&pd, n, h)?;
            let tr = dt_contour_trace(&pd, n, cfg.ns)?;
            let grid = HalfLineGrid::new(&pd, cfg.ns)?;
            let b1 = solve_beta_default(&pd, &grid, 1)?;
            let b2 = solve_beta_default(&pd, &grid, 2)?;
            let red = dt_reduced(&b1, &b2)?;
            let tolerance = TOL_DT.max(h * h);
            let fd_vs_trace = (fd - tr).norm();
            Ok(DtRow {
                x,
                finite_difference: fd,
                contour_trace: tr,
                reduced: red,
                fd_vs_trace,
                fd_vs_reduced: (fd - red).norm(),
                tolerance,
                pass: fd_vs_trace < tolerance,
            })
        })
        .collect::<Result<_>>()?;
    Ok(DtReport { t0, h, rows })
}

/// Format with 17 significant digits.
pub fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

/// Column names of the sweep CSV.
pub const SWEEP_HEADER: &str = "x,det_V_re,det_V_im,det_V0_re,det_V0_im,ratio_re,ratio_im,det_U_plus_re,det_U_plus_im,det_U_minus_re,det_U_minus_im,product_re,product_im,relative_error,decay_exponent";

/// Column names of the derivative-check CSV.
pub const DT_HEADER: &str = "x,fd_re,fd_im,trace_re,trace_im,reduced_re,reduced_im,fd_vs_trace,fd_vs_reduced,tolerance,pass";

fn cplx(z: Complex64) -> String {
    format!("{},{}", fmt17(z.re), fmt17(z.im))
}

pub fn sweep_csv(report: &SweepReport) -> String {
    let mut s = String::from(SWEEP_HEADER);
    s.push('\n');
    for r in &report.rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{}",
            fmt17(r.x),
            cplx(r.det_v),
            cplx(r.det_v0),
            cplx(r.ratio),
            cplx(r.det_u_plus),
            cplx(r.det_u_minus),
            cplx(r.product),
            fmt17(r.relative_error),
            fmt17(r.decay_exponent)
        );
    }
    s
}

pub fn diagnostics_csv(rows: &[DiagnosticRow]) -> String {
    let mut s = String::from(DiagnosticRow::CSV_HEADER);
    s.push('\n');
    for r in rows {
        s.push_str(&r.csv());
        s.push('\n');
    }
    s
}

pub fn dt_csv(report: &DtReport) -> String {
    let mut s = String::from(DT_HEADER);
    s.push('\n');
    for r in &report.rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{}",
            fmt17(r.x),
            cplx(r.finite_difference),
            cplx(r.contour_trace),
            cplx(r.reduced),
            fmt17(r.fd_vs_trace),
            fmt17(r.fd_vs_reduced),
            fmt17(r.tolerance),
            r.pass
        );
    }
    s
}

/// Summary text: one line per check, or `no rows`.
pub fn summary_text(checks: &[Check], extra: &[String]) -> String {
    let mut s = String::new();
    if checks.is_empty() {
        s.push_str("no rows\n");
    }
    for c in checks {
        s.push_str(&c.line());
        s.push('\n');
    }
    for e in extra {
        s.push_str(e);
        s.push('\n');
    }
    let overall = checks.iter().all(|c| c.pass);
    let _ = writeln!(s, "{}", if overall { "OVERALL PASS" } else { "OVERALL FAIL" });
    s
}

/// Companion file path: `out.csv` → `out.<suffix>`.
pub fn companion(path: &Path, suffix: &str) -> PathBuf {
    path.with_extension(suffix)
}

fn write(path: &Path, content: &str) -> Result<()> {
    std::fs::write(path, content).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Write the sweep CSV, the diagnostics CSV and the summary; returns whether all checks pass.
pub fn emit_sweep(report: &SweepReport, path: &Path) -> Result<bool> {
    let checks = report.checks();
    let mut extra = Vec::new();
    if let Some(cd) = &report.contour {
        extra.push(format!(
            "info det(I+U+) = {:.13}, det(I+U-) = {:.13}, det(I+U_11) = {:.13}, det(I+U_21) = {:.13}",
            cd.det_u_plus, cd.det_u_minus, cd.det_u1, cd.det_u2
        ));
    }
    for r in &report.rows {
        extra.push(format!("info x={} nodes={} runtime={:.2}s", r.x, r.nodes, r.runtime_s));
    }
    write(path, &sweep_csv(report))?;
    write(&companion(path, "diagnostics.csv"), &diagnostics_csv(&report.diagnostics))?;
    write(&companion(path, "summary.txt"), &summary_text(&checks, &extra))?;
    Ok(checks.iter().all(|c| c.pass))
}

/// Write the derivative-check CSV and summary; returns whether all rows pass.
pub fn emit_dt(report: &DtReport, path: &Path) -> Result<bool> {
    let checks: Vec<Check> = report
        .rows
        .iter()
        .map(|r| {
            Check::new(
                &format!("dt_identity@x={}", r.x),
                r.pass,
                format!(
                    "finite difference {:.14} vs contour trace {:.14}: {:.3e} (tolerance {:.1e}); reduced form {:.14}, gap {:.3e}",
                    r.finite_difference, r.contour_trace, r.fd_vs_trace, r.tolerance, r.reduced, r.fd_vs_reduced
                ),
            )
        })
        .collect();
    write(path, &dt_csv(report))?;
    write(&companion(path, "summary.txt"), &summary_text(&checks, &[]))?;
    Ok(checks.iter().all(|c| c.pass))
}
