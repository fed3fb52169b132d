//! Scalar integral kernels: the c-shifted kernel `V_t`, the generalized sine
//! kernel `V0`, the interval kernels `K_{k;t}`, the contour kernels
//! `U_{k;t}` and `U_±`, and the resolvent `R_t`.

use crate::error::{Error, Result};
use crate::linalg::CMat;
use crate::rhpcore::ChiSolution;
use crate::symbolspace::{eps, tau, ProblemData, ScalarRH, Side};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;
use std::fmt::Debug;
use std::sync::Arc;

/// Distance below which a kernel pole counts as hit.
pub const POLE_TOL: f64 = 1e-8;

/// Where a kernel is meant to be discretized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupportTag {
    Interval,
    Contour,
}

/// A kernel `K(λ, μ)` with its diagonal limit and pole data.
pub trait KernelHandle: Send + Sync + Debug {
    fn eval(&self, l: Complex64, m: Complex64) -> Result<Complex64>;

    /// The `λ = μ` value.
    fn diag(&self, l: Complex64) -> Result<Complex64>;

    fn support(&self) -> SupportTag;

    /// Offsets `d` with a pole at `λ - μ = d`.
    fn pole_offsets(&self) -> Vec<Complex64> {
        Vec::new()
    }

    fn check_pair(&self, l: Complex64, m: Complex64) -> Result<()> {
        for d in self.pole_offsets() {
            let z = l - m - d;
            if z.norm() < POLE_TOL {
                return Err(Error::Proximity { what: "kernel pole".into(), re: l.re, im: l.im });
            }
        }
        Ok(())
    }

    /// Matrix `K(z_i, z_j)` (weights not applied).
    fn matrix(&self, nodes: &[Complex64]) -> Result<CMat> {
        let n = nodes.len();
        let rows: Vec<Vec<Complex64>> = nodes
            .par_iter()
            .enumerate()
            .map(|(i, &l)| {
                (0..n)
                    .map(|j| if i == j { self.diag(l) } else { self.eval(l, nodes[j]) })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CMat::from_fn(n, n, |i, j| rows[i][j]))
    }
}

fn i2pi() -> Complex64 {
    Complex64::new(0.0, 2.0 * PI)
}

/// `V_t(λ,μ) = icF(λ)/(2iπ(λ-μ)) · {e^{iθ}/(t(λ-μ)+ic) + e^{-iθ}/(t(λ-μ)-ic)}`,
/// `θ = x(p(λ)-p(μ))/2`.
#[derive(Debug, Clone)]
pub struct VtKernel {
    pub pd: ProblemData,
}

impl VtKernel {
    pub fn new(pd: &ProblemData) -> Self {
        VtKernel { pd: pd.clone() }
    }
}

impl KernelHandle for VtKernel {
    fn eval(&self, l: Complex64, m: Complex64) -> Result<Complex64> {
        self.check_pair(l, m)?;
        let pd = &self.pd;
        let d = l - m;
        if d.norm() == 0.0 {
            return self.diag(l);
        }
        let th = 0.5 * pd.x * (pd.p(l) - pd.p(m));
        let (c, t) = (pd.c, pd.t);
        // equivalent form: cF(td cos θ + c sin θ) / (π d (t²d² + c²))
        Ok(c * pd.f(l) * (t * d * th.cos() + c * th.sin()) / (PI * d * (t * t * d * d + c * c)))
    }

    fn diag(&self, l: Complex64) -> Result<Complex64> {
        let pd = &self.pd;
        Ok(pd.f(l) * (pd.x * pd.dp(l) / (2.0 * PI) + pd.t / (PI * pd.c)))
    }

    fn support(&self) -> SupportTag {
        SupportTag::Interval
    }

    fn pole_offsets(&self) -> Vec<Complex64> {
        if self.pd.t.norm() == 0.0 {
            return Vec::new();
        }
        let s = Complex64::new(0.0, self.pd.c) / self.pd.t;
        vec![s, -s]
    }
}

/// `V0(λ,μ) = F(λ) sin(x[p(λ)-p(μ)]/2) / (π(λ-μ))`.
#[derive(Debug, Clone)]
pub struct SineKernel {
    pub pd: ProblemData,
}

impl SineKernel {
    pub fn new(pd: &ProblemData) -> Self {
        SineKernel { pd: pd.clone() }
    }
}

impl KernelHandle for SineKernel {
    fn eval(&self, l: Complex64, m: Complex64) -> Result<Complex64> {
        let pd = &self.pd;
        let d = l - m;
        if d.norm() == 0.0 {
            return self.diag(l);
        }
        Ok(pd.f(l) * (0.5 * pd.x * (pd.p(l) - pd.p(m))).sin() / (PI * d))
    }

    fn diag(&self, l: Complex64) -> Result<Complex64> {
        let pd = &self.pd;
        Ok(pd.f(l) * pd.x * pd.dp(l) / (2.0 * PI))
    }

    fn support(&self) -> SupportTag {
        SupportTag::Interval
    }
}

type Factor = Arc<dyn Fn(Complex64) -> Result<Complex64> + Send + Sync>;

/// Kernels of the form `-t·A(λ)·B(μ) / (2iπ[t(μ-λ) + iεc])`.
#[derive(Clone)]
pub struct ShiftedCauchyKernel {
    pub name: &'static str,
    pub t: Complex64,
    pub eps: f64,
    pub c: f64,
    pub tag: SupportTag,
    left: Factor,
    right: Factor,
}

impl Debug for ShiftedCauchyKernel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ShiftedCauchyKernel")
            .field("name", &self.name)
            .field("t", &self.t)
            .field("eps", &self.eps)
            .field("c", &self.c)
            .finish()
    }
}

impl ShiftedCauchyKernel {
    fn core(&self, l: Complex64, m: Complex64) -> Result<Complex64> {
        let den = i2pi() * (self.t * (m - l) + Complex64::new(0.0, self.eps * self.c));
        if den.norm() < POLE_TOL {
            return Err(Error::Proximity { what: format!("{} pole", self.name), re: l.re, im: l.im });
        }
        Ok(-self.t / den)
    }
}

impl KernelHandle for ShiftedCauchyKernel {
    fn eval(&self, l: Complex64, m: Complex64) -> Result<Complex64> {
        Ok((self.left)(l)? * (self.right)(m)? * self.core(l, m)?)
    }

    fn diag(&self, l: Complex64) -> Result<Complex64> {
        self.eval(l, l)
    }

    fn support(&self) -> SupportTag {
        self.tag
    }

    fn pole_offsets(&self) -> Vec<Complex64> {
        vec![Complex64::new(0.0, self.eps * self.c) / self.t]
    }

    fn matrix(&self, nodes: &[Complex64]) -> Result<CMat> {
        let left = nodes.par_iter().map(|&z| (self.left)(z)).collect::<Result<Vec<_>>>()?;
        let right = nodes.par_iter().map(|&z| (self.right)(z)).collect::<Result<Vec<_>>>()?;
        let n = nodes.len();
        let rows: Vec<Vec<Complex64>> = (0..n)
            .into_par_iter()
            .map(|i| {
                (0..n)
                    .map(|j| Ok(left[i] * right[j] * self.core(nodes[i], nodes[j])?))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CMat::from_fn(n, n, |i, j| rows[i][j]))
    }
}

fn shift(pd: &ProblemData, k: usize) -> Complex64 {
    Complex64::new(0.0, eps(k) * pd.c) / pd.t
}

/// `U_{k;t}(λ,μ) = -t α_k(λ) α_k^{-1}(μ + iε_k c/t) / (2iπ[t(μ-λ) + iε_k c])`, on a contour.
pub fn u_kt(pd: &ProblemData, k: usize) -> Result<ShiftedCauchyKernel> {
    check_k(k)?;
    check_t(pd)?;
    let rh = Arc::new(ScalarRH::with_default_rule(pd)?);
    let s = shift(pd, k);
    let (r1, r2) = (rh.clone(), rh);
    Ok(ShiftedCauchyKernel {
        name: "U_kt",
        t: pd.t,
        eps: eps(k),
        c: pd.c,
        tag: SupportTag::Contour,
        left: Arc::new(move |z| r1.alpha_k(k, z)),
        right: Arc::new(move |z| Ok(1.0 / r2.alpha_k(k, z + s)?)),
    })
}

/// Sign of `U_±`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PmSign {
    Plus,
    Minus,
}

/// `U_±(λ,μ) = α(λ) α^{-1}(μ ∓ ic) / (2iπ(λ - μ ± ic))`, on a contour.
pub fn u_pm(pd: &ProblemData, sign: PmSign) -> Result<ShiftedCauchyKernel> {
    let rh = Arc::new(ScalarRH::with_default_rule(pd)?);
    // 1/(2iπ(λ-μ±ic)) = -1/(2iπ[(μ-λ) + iεc]) with ε = ∓1
    let e = match sign {
        PmSign::Plus => -1.0,
        PmSign::Minus => 1.0,
    };
    let s = Complex64::new(0.0, e * pd.c);
    let (r1, r2) = (rh.clone(), rh);
    Ok(ShiftedCauchyKernel {
        name: "U_pm",
        t: Complex64::new(1.0, 0.0),
        eps: e,
        c: pd.c,
        tag: SupportTag::Contour,
        left: Arc::new(move |z| r1.alpha(z)),
        right: Arc::new(move |z| Ok(1.0 / r2.alpha(z + s)?)),
    })
}

/// `K_{k;t}(λ,μ) = -t α_{k;+}(λ) α_k^{-1}(μ + iε_k c/t) τ_k(μ) / (2iπ[t(μ-λ) + iε_k c])`,
/// on `[a, b]`.
pub fn k_kt(pd: &ProblemData, k: usize) -> Result<ShiftedCauchyKernel> {
    check_k(k)?;
    check_t(pd)?;
    let rh = Arc::new(ScalarRH::with_default_rule(pd)?);
    let s = shift(pd, k);
    let (r1, r2) = (rh.clone(), rh);
    let pd2 = pd.clone();
    Ok(ShiftedCauchyKernel {
        name: "K_kt",
        t: pd.t,
        eps: eps(k),
        c: pd.c,
        tag: SupportTag::Interval,
        left: Arc::new(move |z| alpha_k_plus(&r1, k, z)),
        right: Arc::new(move |z| Ok(tau(k, &pd2, z)? / r2.alpha_k(k, z + s)?)),
    })
}

/// `α_{k;+}` on `(a, b)`, continued off the axis.
pub fn alpha_k_plus(rh: &ScalarRH, k: usize, z: Complex64) -> Result<Complex64> {
    let v = if z.im == 0.0 && z.re > rh.pd.a && z.re < rh.pd.b {
        rh.alpha_bv(z.re, Side::Plus)?
    } else {
        rh.alpha_plus_continued(z)?
    };
    Ok(if k == 1 { 1.0 / v } else { v })
}

fn check_k(k: usize) -> Result<()> {
    if k == 1 || k == 2 {
        Ok(())
    } else {
        Err(Error::Parameter(format!("k must be 1 or 2, got {k}")))
    }
}

fn check_t(pd: &ProblemData) -> Result<()> {
    if pd.t.norm() == 0.0 {
        return Err(Error::Parameter("t = 0 has no shifted kernel".into()));
    }
    Ok(())
}

/// `R_t(λ,μ) = (F_L(λ), F_R(μ)) / (λ - μ)` from a solved `χ`.
#[derive(Debug, Clone)]
pub struct ResolventKernel {
    pub chi: Arc<ChiSolution>,
}

/// Step of the five-point stencil used for the diagonal.
const RESOLVENT_DIAG_STEP: f64 = 1e-3;

impl ResolventKernel {
    pub fn new(chi: Arc<ChiSolution>) -> Self {
        ResolventKernel { chi }
    }

    fn numerator(&self, l: Complex64, m: Complex64) -> Result<Complex64> {
        let fl = self.chi.fl_at(l)?;
        let fr = self.chi.fr_at(m)?;
        Ok(self.chi.pair(&fl, &fr))
    }
}

impl KernelHandle for ResolventKernel {
    fn eval(&self, l: Complex64, m: Complex64) -> Result<Complex64> {
        if (l - m).norm() == 0.0 {
            return self.diag(l);
        }
        Ok(self.numerator(l, m)? / (l - m))
    }

    /// `∂_λ (F_L(λ), F_R(μ))` at `μ = λ` by a five-point stencil.
    fn diag(&self, l: Complex64) -> Result<Complex64> {
        let h = RESOLVENT_DIAG_STEP * (self.chi.pd.b - self.chi.pd.a);
        let f = |s: f64| self.numerator(l + s * h, l);
        Ok((f(-2.0)? - 8.0 * f(-1.0)? + 8.0 * f(1.0)? - f(2.0)?) / (12.0 * h))
    }

    fn support(&self) -> SupportTag {
        SupportTag::Interval
    }
}
