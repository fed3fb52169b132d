//! Operator-valued Riemann–Hilbert objects on the discretized half-line:
//! `χ` from `F_R`/`F_L`, the scalar-type solutions `β_k` from `ρ_k`, the
//! regular operator `O`, the factorization pieces `P`, `Q`, `M↑`, `M↓`,
//! `G_χ`, and residual diagnostics.

use crate::error::{Error, Result};
use crate::fredholm::{NystromSystem, Support};
use crate::kernels::{alpha_k_plus, KernelHandle, VtKernel};
use crate::l2half::{e_vectors, kappa_form, m_vec, rank_one, BlockOperator, HalfLineGrid};
use crate::linalg::{self, CMat};
use crate::quadgrid::{gauss_interval, graded_interval, stadium_contour, Contour, IntervalRule};
use crate::symbolspace::{endpoint_log, eps, nu, tau, ProblemData, ScalarRH, Side};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;
use std::sync::Arc;

/// Extra nodes added on top of the oscillation rule for `χ`.
pub const CHI_EXTRA_NODES: usize = 24;
/// Minimum interval node count for `χ`.
pub const CHI_MIN_NODES: usize = 60;
/// Graded-rule size for `ρ_k`.
pub const BETA_NODES: usize = 60;
/// Grading exponent for `ρ_k` and `K_{k;t}`.
pub const BETA_GRADING: u32 = 3;
/// Oversampling of the auxiliary rule used for far-field `β_k` sums.
pub const BETA_DENSE_FACTOR: usize = 8;
/// Point density on the contour carrying the `w_k` right-hand side.
pub const W_CONTOUR_DENSITY: f64 = 60.0;

/// Interval node count resolving `e^{ixp}`: `8 + 6x(p(b)-p(a))/(2π)` plus a
/// margin, rounded up to even so the midpoint is never a node.
pub fn oscillation_nodes(pd: &ProblemData) -> usize {
    let span = (pd.p(Complex64::new(pd.b, 0.0)) - pd.p(Complex64::new(pd.a, 0.0))).re.abs();
    let n = 8.0 + 6.0 * pd.x * span / (2.0 * PI);
    let n = (n.ceil() as usize + CHI_EXTRA_NODES).max(CHI_MIN_NODES);
    n + n % 2
}

/// Radius of the contour carrying `w_k`: inside the symbol margin and the
/// growth strip `|Im(tλ)| < c/4`.
pub fn w_contour_radius(pd: &ProblemData) -> f64 {
    let strip = pd.c / (4.0 * pd.t.norm().max(1e-300));
    (0.1 * (pd.b - pd.a)).min(0.8 * strip).min(0.8 * pd.margin)
}

fn i2pi() -> Complex64 {
    Complex64::new(0.0, 2.0 * PI)
}

fn admissible(pd: &ProblemData, z: Complex64) -> bool {
    (pd.t * z).im.abs() < pd.c / 4.0
}

/// `Σ_j c_j u_j ⊗ v_j` with rows `u_j`, `v_j` and the half-line weights on columns.
fn weighted_outer_sum(u: &CMat, v: &CMat, coef: &[Complex64], sweights: &[f64]) -> CMat {
    let n = u.nrows();
    let scaled = CMat::from_fn(n, v.ncols(), |j, q| coef[j] * v[(j, q)] * sweights[q % sweights.len()]);
    u.transpose() * scaled
}

fn outer(u: &[Complex64], v: &[Complex64], sweights: &[f64]) -> CMat {
    CMat::from_fn(u.len(), v.len(), |i, q| u[i] * v[q] * sweights[q % sweights.len()])
}

/// Concatenated half-line values `(f_1, f_2)`.
fn concat2(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    a.iter().chain(b.iter()).copied().collect()
}

/// Solution of the `χ` problem on a Gauss interval rule.
#[derive(Debug, Clone)]
pub struct ChiSolution {
    pub pd: ProblemData,
    pub rule: IntervalRule,
    pub grid: HalfLineGrid,
    kernel: VtKernel,
    /// Rows `F_R(μ_j)` (length `2N_s`).
    pub fr: CMat,
    /// Rows `F_L(μ_j)` (length `2N_s`).
    pub fl: CMat,
    er: CMat,
    el: CMat,
    /// Condition estimate of `I + V_t`.
    pub condition: f64,
}

/// Solve `(I + V_t^T)F_R = E_R` and `(I + V_t)F_L = E_L`.
pub fn solve_chi(pd: &ProblemData, rule: &IntervalRule, grid: &HalfLineGrid) -> Result<ChiSolution> {
    let kernel = VtKernel::new(pd);
    let nodes: Vec<Complex64> = rule.nodes.iter().map(|&m| Complex64::new(m, 0.0)).collect();
    let vmat = kernel.matrix(&nodes)?;
    let support = Support::Interval { rule: rule.clone(), grading: None };
    let sys = NystromSystem::from_kernel_matrix(support.clone(), &vmat)?;
    let sys_t = NystromSystem::from_kernel_matrix(support, &vmat.transpose())?;
    let n = nodes.len();
    let ns2 = 2 * grid.len();
    let ev = nodes.par_iter().map(|&m| e_vectors(pd, grid, m)).collect::<Result<Vec<_>>>()?;
    let er = CMat::from_fn(n, ns2, |j, q| {
        let (k, s) = (q / grid.len(), q % grid.len());
        ev[j].right[k].0[s]
    });
    let el = CMat::from_fn(n, ns2, |j, q| {
        let (k, s) = (q / grid.len(), q % grid.len());
        ev[j].left[k].0[s]
    });
    let fr = sys_t.solve(&er)?;
    let fl = sys.solve(&el)?;
    Ok(ChiSolution {
        pd: pd.clone(),
        rule: rule.clone(),
        grid: grid.clone(),
        kernel,
        fr,
        fl,
        er,
        el,
        condition: sys.condition,
    })
}

/// `solve_chi` with the oscillation-resolving Gauss rule.
pub fn solve_chi_default(pd: &ProblemData, grid: &HalfLineGrid) -> Result<ChiSolution> {
    solve_chi(pd, &gauss_interval(oscillation_nodes(pd), pd.a, pd.b)?, grid)
}

impl ChiSolution {
    pub fn ns(&self) -> usize {
        self.grid.len()
    }

    fn e_row(&self, z: Complex64) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
        let e = e_vectors(&self.pd, &self.grid, z)?;
        Ok((concat2(&e.right[0].0, &e.right[1].0), concat2(&e.left[0].0, &e.left[1].0)))
    }

    /// `F_R(μ) = E_R(μ) - Σ_j w_j V_t(μ_j, μ) F_R(μ_j)`.
    pub fn fr_at(&self, mu: Complex64) -> Result<Vec<Complex64>> {
        let (mut out, _) = self.e_row(mu)?;
        for (j, (&m, &w)) in self.rule.nodes.iter().zip(&self.rule.weights).enumerate() {
            let m = Complex64::new(m, 0.0);
            let v = if (m - mu).norm() == 0.0 { self.kernel.diag(mu)? } else { self.kernel.eval(m, mu)? };
            let c = w * v;
            for (q, o) in out.iter_mut().enumerate() {
                *o -= c * self.fr[(j, q)];
            }
        }
        Ok(out)
    }

    /// `F_L(λ) = E_L(λ) - Σ_j w_j V_t(λ, μ_j) F_L(μ_j)`.
    pub fn fl_at(&self, l: Complex64) -> Result<Vec<Complex64>> {
        let (_, mut out) = self.e_row(l)?;
        for (j, (&m, &w)) in self.rule.nodes.iter().zip(&self.rule.weights).enumerate() {
            let m = Complex64::new(m, 0.0);
            let v = if (m - l).norm() == 0.0 { self.kernel.diag(l)? } else { self.kernel.eval(l, m)? };
            let c = w * v;
            for (q, o) in out.iter_mut().enumerate() {
                *o -= c * self.fl[(j, q)];
            }
        }
        Ok(out)
    }

    /// `(covector, vector)` pairing on both components.
    pub fn pair(&self, cov: &[Complex64], v: &[Complex64]) -> Complex64 {
        let w = self.grid.weights();
        cov.iter().zip(v).enumerate().map(|(q, (a, b))| a * b * w[q % w.len()]).sum()
    }

    fn use_subtraction(&self, z: Complex64, side: Option<Side>) -> bool {
        side.is_some() || (z.re > self.pd.a && z.re < self.pd.b && self.pd.distance(z) < 0.25 * (self.pd.b - self.pd.a) && admissible(&self.pd, z))
    }

    /// `Σ_j w_j (u_j ⊗ v_j)/(μ_j - λ)`, subtracted near `(a, b)`.
    fn cauchy_outer(
        &self,
        u: &CMat,
        v: &CMat,
        z: Complex64,
        side: Option<Side>,
        at: &dyn Fn(Complex64) -> Result<(Vec<Complex64>, Vec<Complex64>)>,
    ) -> Result<CMat> {
        let sw = self.grid.weights();
        if let Some(_) = side {
            if !(z.im == 0.0 && z.re > self.pd.a && z.re < self.pd.b) {
                return Err(Error::Parameter("boundary values need a real point inside (a,b)".into()));
            }
        }
        if !self.use_subtraction(z, side) {
            if self.pd.on_interval(z) {
                return Err(Error::Proximity { what: "χ on [a,b] without a side".into(), re: z.re, im: z.im });
            }
            let coef: Vec<Complex64> = self.rule.nodes.iter().zip(&self.rule.weights).map(|(&m, &w)| w / (m - z)).collect();
            return Ok(weighted_outer_sum(u, v, &coef, sw));
        }
        let (u0, v0) = at(z)?;
        let f0 = outer(&u0, &v0, sw);
        let mut coef = Vec::with_capacity(self.rule.len());
        let mut total = Complex64::new(0.0, 0.0);
        for (&m, &w) in self.rule.nodes.iter().zip(&self.rule.weights) {
            let d = m - z;
            if d.norm() < 1e-14 * (self.pd.b - self.pd.a) {
                return Err(Error::Proximity { what: "probe on a quadrature node".into(), re: z.re, im: z.im });
            }
            coef.push(w / d);
            total += w / d;
        }
        let s = weighted_outer_sum(u, v, &coef, sw);
        Ok(s - f0 * (total - endpoint_log(self.pd.a, self.pd.b, z, side)))
    }

    fn chi_hat(&self, z: Complex64, side: Option<Side>) -> Result<CMat> {
        self.cauchy_outer(&self.fr, &self.el, z, side, &|l| {
            let fr = self.fr_at(l)?;
            let (_, el) = self.e_row(l)?;
            Ok((fr, el))
        })
    }

    fn chi_inv_hat(&self, z: Complex64, side: Option<Side>) -> Result<CMat> {
        self.cauchy_outer(&self.er, &self.fl, z, side, &|l| {
            let fl = self.fl_at(l)?;
            let (er, _) = self.e_row(l)?;
            Ok((er, fl))
        })
    }

    /// `χ(λ) = I - Σ w_j F_R(μ_j) ⊗ E_L(μ_j)/(μ_j - λ)`.
    pub fn chi(&self, z: Complex64) -> Result<BlockOperator> {
        let m = self.chi_hat(z, None)?;
        Ok(BlockOperator { mat: CMat::identity(m.nrows(), m.ncols()) - m, identity_plus_smoothing: true })
    }

    /// `χ^{-1}(λ) = I + Σ w_j E_R(μ_j) ⊗ F_L(μ_j)/(μ_j - λ)`.
    pub fn chi_inv(&self, z: Complex64) -> Result<BlockOperator> {
        let m = self.chi_inv_hat(z, None)?;
        Ok(BlockOperator { mat: CMat::identity(m.nrows(), m.ncols()) + m, identity_plus_smoothing: true })
    }

    /// Boundary value `χ_±(λ0)`, `λ0 ∈ (a, b)`.
    pub fn chi_bv(&self, l0: f64, side: Side) -> Result<BlockOperator> {
        let m = self.chi_hat(Complex64::new(l0, 0.0), Some(side))?;
        Ok(BlockOperator { mat: CMat::identity(m.nrows(), m.ncols()) - m, identity_plus_smoothing: true })
    }

    pub fn chi_inv_bv(&self, l0: f64, side: Side) -> Result<BlockOperator> {
        let m = self.chi_inv_hat(Complex64::new(l0, 0.0), Some(side))?;
        Ok(BlockOperator { mat: CMat::identity(m.nrows(), m.ncols()) + m, identity_plus_smoothing: true })
    }

    /// `∂_z χ(z) = -Σ w_j F_R(μ_j) ⊗ E_L(μ_j)/(μ_j - z)²`, `z` away from `[a, b]`.
    pub fn dchi(&self, z: Complex64) -> Result<CMat> {
        if self.pd.distance(z) < 0.25 * (self.pd.b - self.pd.a) {
            return Err(Error::Proximity { what: "∂χ requested near [a,b]".into(), re: z.re, im: z.im });
        }
        let coef: Vec<Complex64> = self.rule.nodes.iter().zip(&self.rule.weights).map(|(&m, &w)| w / ((m - z) * (m - z))).collect();
        Ok(-weighted_outer_sum(&self.fr, &self.el, &coef, self.grid.weights()))
    }

    /// `F_R ⊗ E_L` at `λ`.
    pub fn fr_el(&self, l: Complex64) -> Result<CMat> {
        let fr = self.fr_at(l)?;
        let (_, el) = self.e_row(l)?;
        Ok(outer(&fr, &el, self.grid.weights()))
    }
}

/// `G_χ(λ)` built from `m_k ⊗ κ_k` with `F` and `e^{±ixp}` factors.
pub fn g_chi(pd: &ProblemData, grid: &HalfLineGrid, l: Complex64) -> Result<BlockOperator> {
    let n = grid.len();
    let f = pd.f(l);
    let e = (Complex64::i() * pd.x * pd.p(l)).exp();
    let (m1, m2) = (m_vec(1, grid, l)?, m_vec(2, grid, l)?);
    let (k1, k2) = (kappa_form(1, grid, l)?, kappa_form(2, grid, l)?);
    let id = CMat::identity(n, n);
    let b11 = &id - rank_one(grid, &m1, &k1)? * f;
    let b12 = rank_one(grid, &m1, &k2)? * (f * e);
    let b21 = rank_one(grid, &m2, &k1)? * (-f / e);
    let b22 = &id + rank_one(grid, &m2, &k2)? * f;
    Ok(BlockOperator::from_blocks([[&b11, &b12], [&b21, &b22]], true))
}

/// Solution `ρ_k` of `(I + K_{k;t})ρ_k = w_k` and the operator `β_k`.
#[derive(Debug, Clone)]
pub struct BetaSolution {
    pub k: usize,
    pub pd: ProblemData,
    pub grid: HalfLineGrid,
    pub rule: IntervalRule,
    pub rh: Arc<ScalarRH>,
    pub contour: Contour,
    /// Rows `ρ_k(μ_j)` on `rule`.
    pub rho: CMat,
    /// `τ_k(μ) / α_k(μ + iε_k c/t)` on `rule`.
    right: Vec<Complex64>,
    /// `√c e^{-cs/2 - iε_k t z s}/α_k(z)` on the contour.
    h: CMat,
    dense: IntervalRule,
    dense_rho: CMat,
    dense_kappa: CMat,
    dense_tau: Vec<Complex64>,
    pub condition: f64,
}

/// Solve for `ρ_k` on the graded rule.
pub fn solve_beta(pd: &ProblemData, rule: &IntervalRule, grid: &HalfLineGrid, k: usize) -> Result<BetaSolution> {
    if k != 1 && k != 2 {
        return Err(Error::Parameter(format!("k must be 1 or 2, got {k}")));
    }
    if pd.t.norm() == 0.0 {
        return Err(Error::Parameter("β_k needs t ≠ 0".into()));
    }
    let rh = Arc::new(ScalarRH::with_default_rule(pd)?);
    let r = w_contour_radius(pd);
    let strip = pd.c / (4.0 * pd.t.norm());
    let contour = stadium_contour(pd.a, pd.b, r, W_CONTOUR_DENSITY, strip.min(pd.margin))?;
    let e = eps(k);
    let shift = Complex64::new(0.0, e * pd.c) / pd.t;
    let sc = pd.c.sqrt();
    let h_rows = contour
        .points
        .par_iter()
        .map(|&z| {
            let a = rh.alpha_k(k, z)?;
            Ok(grid
                .nodes()
                .iter()
                .map(|&s| sc * (-0.5 * pd.c * s - Complex64::new(0.0, e) * pd.t * z * s).exp() / a)
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    let h = CMat::from_fn(contour.len(), grid.len(), |i, q| h_rows[i][q]);
    let right_of = |m: f64| -> Result<Complex64> {
        let m = Complex64::new(m, 0.0);
        Ok(tau(k, pd, m)? / rh.alpha_k(k, m + shift)?)
    };
    let right = rule.nodes.par_iter().map(|&m| right_of(m)).collect::<Result<Vec<_>>>()?;
    let mut sol = BetaSolution {
        k,
        pd: pd.clone(),
        grid: grid.clone(),
        rule: rule.clone(),
        rh,
        contour,
        rho: CMat::zeros(0, 0),
        right,
        h,
        dense: rule.clone(),
        dense_rho: CMat::zeros(0, 0),
        dense_kappa: CMat::zeros(0, 0),
        dense_tau: Vec::new(),
        condition: 0.0,
    };
    let n = rule.len();
    let left = rule
        .nodes
        .par_iter()
        .map(|&m| alpha_k_plus(&sol.rh, k, Complex64::new(m, 0.0)))
        .collect::<Result<Vec<_>>>()?;
    let kmat = CMat::from_fn(n, n, |i, j| left[i] * sol.right[j] * sol.core(rule.nodes[i].into(), rule.nodes[j].into()));
    let wrows = rule
        .nodes
        .par_iter()
        .zip(left.par_iter())
        .map(|(&m, &a)| sol.w_raw(Complex64::new(m, 0.0)).map(|v| v.into_iter().map(|x| x * a).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    let wmat = CMat::from_fn(n, grid.len(), |i, q| wrows[i][q]);
    let sys = NystromSystem::from_kernel_matrix(Support::Interval { rule: rule.clone(), grading: Some(BETA_GRADING) }, &kmat)?;
    sol.rho = sys.solve(&wmat)?;
    sol.condition = sys.condition;
    // far-field sums use an oversampled rule with Nyström-interpolated ρ_k
    let dense = graded_interval(BETA_DENSE_FACTOR * n, pd.a, pd.b, BETA_GRADING)?;
    let rows = dense
        .nodes
        .par_iter()
        .map(|&m| sol.rho_at(Complex64::new(m, 0.0)))
        .collect::<Result<Vec<_>>>()?;
    let nd = dense.len();
    sol.dense_rho = CMat::from_fn(nd, grid.len(), |j, q| rows[j][q]);
    let kap = dense
        .nodes
        .iter()
        .map(|&m| kappa_form(k, grid, Complex64::new(m, 0.0)))
        .collect::<Result<Vec<_>>>()?;
    sol.dense_kappa = CMat::from_fn(nd, grid.len(), |j, q| kap[j].0[q]);
    sol.dense_tau = dense.nodes.iter().map(|&m| tau(k, pd, Complex64::new(m, 0.0))).collect::<Result<Vec<_>>>()?;
    sol.dense = dense;
    Ok(sol)
}

/// `solve_beta` on the default graded rule.
pub fn solve_beta_default(pd: &ProblemData, grid: &HalfLineGrid, k: usize) -> Result<BetaSolution> {
    solve_beta(pd, &graded_interval(BETA_NODES, pd.a, pd.b, BETA_GRADING)?, grid, k)
}

impl BetaSolution {
    pub fn eps(&self) -> f64 {
        eps(self.k)
    }

    fn core(&self, l: Complex64, m: Complex64) -> Complex64 {
        let t = self.pd.t;
        -t / (i2pi() * (t * (m - l) + Complex64::new(0.0, self.eps() * self.pd.c)))
    }

    /// `∮_Γ h(z)/(z-λ) dz/(2iπ)` (without the `α_{k;+}(λ)` factor).
    fn w_raw(&self, l: Complex64) -> Result<Vec<Complex64>> {
        if self.pd.distance(l) >= 0.999 * self.contour.radius {
            return Err(Error::Proximity { what: "w_k needs λ inside its contour".into(), re: l.re, im: l.im });
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.grid.len()];
        for (i, (&z, &wz)) in self.contour.points.iter().zip(&self.contour.weights).enumerate() {
            let c = wz / ((z - l) * i2pi());
            for (q, o) in out.iter_mut().enumerate() {
                *o += c * self.h[(i, q)];
            }
        }
        Ok(out)
    }

    /// `ρ_k(λ) = w_k(λ) - Σ_j w_j K_{k;t}(λ, μ_j) ρ_k(μ_j)`, continued off the axis.
    pub fn rho_at(&self, l: Complex64) -> Result<Vec<Complex64>> {
        let a = alpha_k_plus(&self.rh, self.k, l)?;
        let mut out: Vec<Complex64> = self.w_raw(l)?.into_iter().map(|v| v * a).collect();
        for (j, (&m, &w)) in self.rule.nodes.iter().zip(&self.rule.weights).enumerate() {
            let c = w * a * self.right[j] * self.core(l, m.into());
            for (q, o) in out.iter_mut().enumerate() {
                *o -= c * self.rho[(j, q)];
            }
        }
        Ok(out)
    }

    fn subtract_near(&self, z: Complex64, side: Option<Side>) -> bool {
        side.is_some()
            || (z.re > self.pd.a
                && z.re < self.pd.b
                && self.pd.distance(z) < 0.5 * self.contour.radius
                && admissible(&self.pd, z))
    }

    /// `Σ τ_k ρ_k ⊗ κ_k/(μ-λ)/(2iπ)`.
    fn beta_hat(&self, z: Complex64, side: Option<Side>) -> Result<CMat> {
        let sw = self.grid.weights();
        if let Some(_) = side {
            if !(z.im == 0.0 && z.re > self.pd.a && z.re < self.pd.b) {
                return Err(Error::Parameter("boundary values need a real point inside (a,b)".into()));
            }
        }
        if !self.subtract_near(z, side) {
            if self.pd.on_interval(z) {
                return Err(Error::Proximity { what: "β on [a,b] without a side".into(), re: z.re, im: z.im });
            }
            let coef: Vec<Complex64> = self
                .dense
                .nodes
                .iter()
                .zip(&self.dense.weights)
                .zip(&self.dense_tau)
                .map(|((&m, &w), &t)| w * t / ((m - z) * i2pi()))
                .collect();
            return Ok(weighted_outer_sum(&self.dense_rho, &self.dense_kappa, &coef, sw));
        }
        let rho0 = self.rho_at(z)?;
        let kap0 = kappa_form(self.k, &self.grid, z)?;
        let f0 = outer(&rho0, &kap0.0, sw) * tau(self.k, &self.pd, z)?;
        let mut coef = Vec::with_capacity(self.dense.len());
        let mut total = Complex64::new(0.0, 0.0);
        for ((&m, &w), &t) in self.dense.nodes.iter().zip(&self.dense.weights).zip(&self.dense_tau) {
            let d = m - z;
            if d.norm() < 1e-14 * (self.pd.b - self.pd.a) {
                return Err(Error::Proximity { what: "probe on a quadrature node".into(), re: z.re, im: z.im });
            }
            coef.push(w * t / d);
            total += w / d;
        }
        let s = weighted_outer_sum(&self.dense_rho, &self.dense_kappa, &coef, sw);
        Ok((s - f0 * (total - endpoint_log(self.pd.a, self.pd.b, z, side))) / i2pi())
    }

    /// `β_k(λ)` off `[a, b]`.
    pub fn beta(&self, z: Complex64) -> Result<CMat> {
        let n = self.grid.len();
        Ok(CMat::identity(n, n) - self.beta_hat(z, None)?)
    }

    /// Boundary value `β_{k;±}(λ0)`.
    pub fn beta_bv(&self, l0: f64, side: Side) -> Result<CMat> {
        let n = self.grid.len();
        Ok(CMat::identity(n, n) - self.beta_hat(Complex64::new(l0, 0.0), Some(side))?)
    }

    /// `β_k` off the axis or as a boundary value.
    pub fn beta_side(&self, z: Complex64, side: Option<Side>) -> Result<CMat> {
        match side {
            Some(s) => self.beta_bv(z.re, s),
            None => self.beta(z),
        }
    }

    pub fn beta_inv(&self, z: Complex64, side: Option<Side>) -> Result<CMat> {
        linalg::inverse(&self.beta_side(z, side)?)
    }
}

/// `α` off the axis or as a boundary value.
fn alpha_at(rh: &ScalarRH, z: Complex64, side: Option<Side>) -> Result<Complex64> {
    match side {
        Some(s) => rh.alpha_bv(z.re, s),
        None => rh.alpha(z),
    }
}

/// The regular operator `O(λ)` as a 2×2 array of `N_s × N_s` blocks.
#[derive(Debug, Clone)]
pub struct RegularO {
    pub lambda: Complex64,
    pub side: Option<Side>,
    pub blocks: [[CMat; 2]; 2],
    pub alpha: Complex64,
}

impl RegularO {
    pub fn block(&self, j: usize, l: usize) -> &CMat {
        &self.blocks[j - 1][l - 1]
    }

    /// `max |O_{jl} O_{lk} - O_{jk}|` over all index triples.
    pub fn composition_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for j in 0..2 {
            for l in 0..2 {
                for k in 0..2 {
                    let p = &self.blocks[j][l] * &self.blocks[l][k];
                    worst = worst.max(linalg::max_abs_diff(&p, &self.blocks[j][k]));
                }
            }
        }
        worst
    }
}

/// `O_{jl} = β_j m_j ⊗ κ_l β_l^{-1}`, times `α²` on `(1,2)` and `α^{-2}` on `(2,1)`.
pub fn build_o(b1: &BetaSolution, b2: &BetaSolution, z: Complex64, side: Option<Side>) -> Result<RegularO> {
    let grid = &b1.grid;
    let be = [b1.beta_side(z, side)?, b2.beta_side(z, side)?];
    let bi = [linalg::inverse(&be[0])?, linalg::inverse(&be[1])?];
    let m = [m_vec(1, grid, z)?, m_vec(2, grid, z)?];
    let k = [kappa_form(1, grid, z)?, kappa_form(2, grid, z)?];
    let a = alpha_at(&b1.rh, z, side)?;
    let a2 = a * a;
    let blk = |j: usize, l: usize| -> Result<CMat> {
        let r = rank_one(grid, &m[j], &k[l])?;
        let f = match (j, l) {
            (0, 1) => a2,
            (1, 0) => 1.0 / a2,
            _ => Complex64::new(1.0, 0.0),
        };
        Ok(&be[j] * r * &bi[l] * f)
    };
    Ok(RegularO {
        lambda: z,
        side,
        blocks: [[blk(0, 0)?, blk(0, 1)?], [blk(1, 0)?, blk(1, 1)?]],
        alpha: a,
    })
}

/// The lens factors `P` and `Q`.
#[derive(Debug, Clone)]
pub struct PQ {
    pub p: CMat,
    pub q: CMat,
}

/// Direct forms `P = F/(1+F) β_1 m_1⊗κ_2 β_2^{-1}`, `Q = -F/(1+F) β_2 m_2⊗κ_1 β_1^{-1}`.
pub fn build_pq(b1: &BetaSolution, b2: &BetaSolution, z: Complex64, side: Option<Side>) -> Result<PQ> {
    let pd = &b1.pd;
    let grid = &b1.grid;
    let f = pd.f(z);
    let r = f / (1.0 + f);
    let be1 = b1.beta_side(z, side)?;
    let be2 = b2.beta_side(z, side)?;
    let p = &be1 * rank_one(grid, &m_vec(1, grid, z)?, &kappa_form(2, grid, z)?)? * linalg::inverse(&be2)? * r;
    let q = &be2 * rank_one(grid, &m_vec(2, grid, z)?, &kappa_form(1, grid, z)?)? * linalg::inverse(&be1)? * (-r);
    Ok(PQ { p, q })
}

/// O-forms `P = -2i e^{iπν} sin(πν) α^{-2} O_12`, `Q = 2i e^{iπν} sin(πν) α² O_21`.
pub fn build_pq_from_o(pd: &ProblemData, o: &RegularO) -> Result<PQ> {
    let v = nu(pd, o.lambda)?;
    let i = Complex64::i();
    let s = 2.0 * i * (i * PI * v).exp() * (PI * v).sin();
    let a2 = o.alpha * o.alpha;
    Ok(PQ { p: o.block(1, 2) * (-s / a2), q: o.block(2, 1) * (s * a2) })
}

/// `M↑ = [[I, P e^{ixp}], [0, I]]`.
pub fn m_up(pd: &ProblemData, p: &CMat, z: Complex64) -> BlockOperator {
    let n = p.nrows();
    let id = CMat::identity(n, n);
    let zero = CMat::zeros(n, n);
    let e = (Complex64::i() * pd.x * pd.p(z)).exp();
    BlockOperator::from_blocks([[&id, &(p * e)], [&zero, &id]], true)
}

/// `M↓ = [[I, 0], [Q e^{-ixp}, I]]`.
pub fn m_down(pd: &ProblemData, q: &CMat, z: Complex64) -> BlockOperator {
    let n = q.nrows();
    let id = CMat::identity(n, n);
    let zero = CMat::zeros(n, n);
    let e = (-Complex64::i() * pd.x * pd.p(z)).exp();
    BlockOperator::from_blocks([[&id, &zero], [&(q * e), &id]], true)
}

fn block_diag(a: &CMat, b: &CMat) -> BlockOperator {
    let n = a.nrows();
    let zero = CMat::zeros(n, n);
    BlockOperator::from_blocks([[a, &zero], [&zero, b]], true)
}

/// `max |G_χ - diag(β_+)^{-1} M↑_+ M↓_- diag(β_-)|` at `λ0 ∈ (a, b)`.
pub fn factorization_residual(b1: &BetaSolution, b2: &BetaSolution, l0: f64) -> Result<f64> {
    let pd = &b1.pd;
    let z = Complex64::new(l0, 0.0);
    let g = g_chi(pd, &b1.grid, z)?;
    let bp = [b1.beta_bv(l0, Side::Plus)?, b2.beta_bv(l0, Side::Plus)?];
    let bm = [b1.beta_bv(l0, Side::Minus)?, b2.beta_bv(l0, Side::Minus)?];
    let pq_p = build_pq(b1, b2, z, Some(Side::Plus))?;
    let pq_m = build_pq(b1, b2, z, Some(Side::Minus))?;
    let left = block_diag(&linalg::inverse(&bp[0])?, &linalg::inverse(&bp[1])?);
    let rhs = left
        .compose(&m_up(pd, &pq_p.p, z))
        .compose(&m_down(pd, &pq_m.q, z))
        .compose(&block_diag(&bm[0], &bm[1]));
    Ok(g.distance(&rhs))
}

/// `max |β_{k;+}(id + τ_k m_k ⊗ κ_k) - β_{k;-}|` at `λ0 ∈ (a, b)`.
pub fn beta_jump_residual(b: &BetaSolution, l0: f64) -> Result<f64> {
    let z = Complex64::new(l0, 0.0);
    let n = b.grid.len();
    let g = CMat::identity(n, n) + rank_one(&b.grid, &m_vec(b.k, &b.grid, z)?, &kappa_form(b.k, &b.grid, z)?)? * tau(b.k, &b.pd, z)?;
    let lhs = b.beta_bv(l0, Side::Plus)? * g;
    Ok(linalg::max_abs_diff(&lhs, &b.beta_bv(l0, Side::Minus)?))
}

/// `max |χ_+ G_χ - χ_-|` at `λ0 ∈ (a, b)`.
pub fn chi_jump_residual(chi: &ChiSolution, l0: f64) -> Result<f64> {
    let g = g_chi(&chi.pd, &chi.grid, Complex64::new(l0, 0.0))?;
    let lhs = chi.chi_bv(l0, Side::Plus)?.compose(&g);
    Ok(lhs.distance(&chi.chi_bv(l0, Side::Minus)?))
}

/// `max |χ_+ - χ_- + 2iπ F_R ⊗ E_L|` at `λ0 ∈ (a, b)`.
pub fn chi_plemelj_residual(chi: &ChiSolution, l0: f64) -> Result<f64> {
    let d = chi.chi_bv(l0, Side::Plus)?.mat - chi.chi_bv(l0, Side::Minus)?.mat;
    let f = chi.fr_el(Complex64::new(l0, 0.0))? * i2pi();
    Ok(linalg::max_abs(&(d + f)))
}

/// Probe points: interior points of `(a, b)` and off-interval points.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeSet {
    pub interior: Vec<f64>,
    pub exterior: Vec<Complex64>,
}

impl ProbeSet {
    /// Seed 0: five Chebyshev points and fixed exterior points; other
    /// seeds draw interior points uniformly from the middle 90%.
    pub fn seeded(a: f64, b: f64, seed: u64) -> Self {
        let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
        let interior: Vec<f64> = if seed == 0 {
            (1..=5).map(|j| mid + half * ((2 * j - 1) as f64 * PI / 10.0).cos()).collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..5).map(|_| mid + half * rng.gen_range(-0.9..0.9)).collect()
        };
        let i = Complex64::i();
        let exterior = vec![
            a + i * half,
            a - i * half,
            mid + 0.1 * half + 0.1 * half * i,
            mid - 0.3 * half - 0.1 * half * i,
            Complex64::new(b + 0.25 * half, 0.0),
        ];
        ProbeSet { interior, exterior }
    }
}

/// One residual diagnostic.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiagnosticRow {
    pub object: String,
    pub lambda_re: f64,
    pub lambda_im: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl DiagnosticRow {
    pub fn new(object: &str, z: Complex64, residual: f64, tolerance: f64) -> Self {
        DiagnosticRow {
            object: object.into(),
            lambda_re: z.re,
            lambda_im: z.im,
            residual,
            tolerance,
            pass: residual.is_finite() && residual < tolerance,
        }
    }

    pub const CSV_HEADER: &'static str = "object,lambda_re,lambda_im,residual,tolerance,pass";

    pub fn csv(&self) -> String {
        format!(
            "{},{:.16e},{:.16e},{:.16e},{:.16e},{}",
            self.object, self.lambda_re, self.lambda_im, self.residual, self.tolerance, self.pass
        )
    }
}

/// Tolerances of the solvability checks.
pub const TOL_DET_CHI: f64 = 1e-7;
pub const TOL_CHI_INVERSE: f64 = 1e-8;
pub const TOL_JUMP: f64 = 1e-6;
pub const TOL_DET_G: f64 = 1e-9;
pub const TOL_DET_BETA: f64 = 1e-7;
pub const TOL_RECONSTRUCTION: f64 = 1e-8;

/// `χ` checks: `det χ = 1`, `χχ^{-1} = I`, jumps and the `F_R` reconstruction.
pub fn chi_diagnostics(chi: &ChiSolution, probes: &ProbeSet) -> Result<Vec<DiagnosticRow>> {
    let mut rows = Vec::new();
    for &z in &probes.exterior {
        let c = chi.chi(z)?;
        let d = c.determinant()?.value;
        rows.push(DiagnosticRow::new("det_chi", z, (d - 1.0).norm(), TOL_DET_CHI));
        let ci = chi.chi_inv(z)?;
        let n = c.mat.nrows();
        let r = linalg::max_abs_diff(&c.compose(&ci).mat, &CMat::identity(n, n));
        rows.push(DiagnosticRow::new("chi_times_inverse", z, r, TOL_CHI_INVERSE));
    }
    for &l0 in &probes.interior {
        let z = Complex64::new(l0, 0.0);
        rows.push(DiagnosticRow::new("chi_jump", z, chi_jump_residual(chi, l0)?, TOL_JUMP));
        rows.push(DiagnosticRow::new("chi_plemelj", z, chi_plemelj_residual(chi, l0)?, TOL_JUMP));
        let g = g_chi(&chi.pd, &chi.grid, z)?;
        rows.push(DiagnosticRow::new("det_g_chi", z, (g.determinant()?.value - 1.0).norm(), TOL_DET_G));
    }
    // F_R(μ) = χ_±(μ) E_R(μ) between interval nodes (the subtracted sum
    // needs μ off the nodes; F_R there is the Nyström interpolant)
    let n = chi.rule.len();
    for j in [n / 7, n / 2, (5 * n) / 7] {
        let mu = 0.5 * (chi.rule.nodes[j] + chi.rule.nodes[j + 1]);
        let z = Complex64::new(mu, 0.0);
        let (er, _) = chi.e_row(z)?;
        let fr = chi.fr_at(z)?;
        for side in [Side::Plus, Side::Minus] {
            let v = crate::l2half::apply(&chi.chi_bv(mu, side)?.mat, &crate::l2half::HVector(er.clone()));
            let r = v.0.iter().zip(&fr).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
            rows.push(DiagnosticRow::new("fr_reconstruction", z, r, TOL_RECONSTRUCTION));
        }
    }
    Ok(rows)
}

/// `β_k` checks: `det β_k = α_k` off the axis, and the jump relation.
pub fn beta_diagnostics(b: &BetaSolution, probes: &ProbeSet) -> Result<Vec<DiagnosticRow>> {
    let mut rows = Vec::new();
    let name_det = if b.k == 1 { "det_beta1" } else { "det_beta2" };
    let name_jump = if b.k == 1 { "beta1_jump" } else { "beta2_jump" };
    for &z in &probes.exterior {
        let d = linalg::determinant(&b.beta(z)?)?.value;
        let a = b.rh.alpha_k(b.k, z)?;
        rows.push(DiagnosticRow::new(name_det, z, (d - a).norm() / a.norm(), TOL_DET_BETA));
    }
    for &l0 in &probes.interior {
        rows.push(DiagnosticRow::new(name_jump, Complex64::new(l0, 0.0), beta_jump_residual(b, l0)?, TOL_JUMP));
    }
    Ok(rows)
}

/// Factorization `G_χ = diag(β_+)^{-1} M↑_+ M↓_- diag(β_-)` at interior probes.
pub fn factorization_diagnostics(b1: &BetaSolution, b2: &BetaSolution, probes: &ProbeSet) -> Result<Vec<DiagnosticRow>> {
    probes
        .interior
        .iter()
        .map(|&l0| Ok(DiagnosticRow::new("factorization", Complex64::new(l0, 0.0), factorization_residual(b1, b2, l0)?, TOL_JUMP)))
        .collect()
}

/// Residual of the small-norm problem at one `x`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PiRow {
    pub x: f64,
    /// `max ‖P e^{ixp}‖` on the upper lip and `‖Q e^{-ixp}‖` on the lower lip, outside the disks.
    pub lens: f64,
    /// `max ‖P_ς - I‖` on both disk boundaries.
    pub disk: f64,
    pub residual: f64,
}

/// [`pi_residual`] output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PiReport {
    pub rows: Vec<PiRow>,
    /// `κ` in a least-squares fit `residual ≈ C x^{-κ}`, when at least two `x` are given.
    pub decay_exponent: Option<f64>,
    /// `2 sup |Re ν|` on the disk boundaries.
    pub epsilon: f64,
    pub lens_offset: f64,
}

/// Least-squares slope of `ln y` against `ln x`, negated.
pub fn fitted_decay_exponent(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = xs.iter().zip(ys).filter(|(x, y)| **x > 0.0 && **y > 0.0).map(|(x, y)| (x.ln(), y.ln())).collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(-sxy / sxx)
}

/// Sup of `‖G_Π - I‖` over probes of the lens lips (at `Im λ = ±y`, `y`
/// inside the growth strip) and of the disk boundaries, for each `x`.
pub fn pi_residual(b1: &Arc<BetaSolution>, b2: &Arc<BetaSolution>, xs: &[f64], delta: f64) -> Result<PiReport> {
    use crate::chfparam::parametrix::{Endpoint, Parametrix, ParametrixForm, BOUNDARY_ANGLES};
    let pd0 = &b1.pd;
    let y = (0.6 * pd0.c / (4.0 * pd0.t.norm())).min(0.15);
    let (lo, hi) = (pd0.a + delta, pd0.b - delta);
    if !(hi > lo) {
        return Err(Error::Parameter("disks cover the whole interval".into()));
    }
    let lens_pts: Vec<f64> = (0..5).map(|j| lo + (hi - lo) * (j as f64 + 0.5) / 5.0).collect();
    let pq: Vec<(Complex64, PQ, Complex64, PQ)> = lens_pts
        .iter()
        .map(|&r| {
            let up = Complex64::new(r, y);
            let dn = Complex64::new(r, -y);
            Ok((up, build_pq(b1, b2, up, None)?, dn, build_pq(b1, b2, dn, None)?))
        })
        .collect::<Result<_>>()?;
    let mut epsilon: f64 = 0.0;
    let rows: Vec<PiRow> = xs
        .iter()
        .map(|&x| {
            let pd = pd0.with_x(x);
            let i = Complex64::i();
            let mut lens: f64 = 0.0;
            for (up, p, dn, q) in &pq {
                lens = lens.max(linalg::max_abs(&p.p) * (i * x * pd.p(*up)).exp().norm());
                lens = lens.max(linalg::max_abs(&q.q) * (-i * x * pd.p(*dn)).exp().norm());
            }
            let mut disk: f64 = 0.0;
            for end in [Endpoint::A, Endpoint::B] {
                let par = Parametrix::new(end, &pd, b1.clone(), b2.clone(), delta, ParametrixForm::Consistent)?;
                disk = disk.max(par.boundary_residual(&BOUNDARY_ANGLES)?);
            }
            Ok(PiRow { x, lens, disk, residual: lens.max(disk) })
        })
        .collect::<Result<_>>()?;
    for end in [Endpoint::A, Endpoint::B] {
        let par = Parametrix::new(end, pd0, b1.clone(), b2.clone(), delta, ParametrixForm::Consistent)?;
        epsilon = epsilon.max(par.epsilon(&BOUNDARY_ANGLES)?);
    }
    let res: Vec<f64> = rows.iter().map(|r| r.residual).collect();
    Ok(PiReport { decay_exponent: fitted_decay_exponent(xs, &res), rows, epsilon, lens_offset: y })
}
