//! Local parametrices at the endpoints `a` and `b`, built from `Ψ(·,1;·)`
//! with operator coefficients taken from the regular operator `O`.

use super::tricomi::tricomi_psi_arg;
use crate::error::{Error, Result};
use crate::l2half::BlockOperator;
use crate::linalg::{self, CMat};
use crate::rhpcore::{build_o, build_pq, m_down, m_up, BetaSolution};
use crate::special::{gamma, rgamma};
use crate::symbolspace::{nu, ProblemData};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::Arc;

/// Default disk radius; keeps `|Im λ|` inside the strip where `m_k` is bounded
/// for the reference configuration.
pub const DEFAULT_DISK_RADIUS: f64 = 0.2;

/// Offset used to approach jump contours and the cut.
const APPROACH: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    A,
    B,
}

/// Which algebraic form of the parametrix to assemble.
///
/// `Consistent` satisfies the jump relations and is continuous across the
/// cut; `Alternate` swaps in the other sector matrices, Ψ argument and
/// extra right factor, for comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParametrixForm {
    Consistent,
    Alternate,
}

/// Sector of `arg ζ`: `|arg| ≤ π/2`, `(π/2, π)`, `(-π, -π/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sector {
    Inner,
    Upper,
    Lower,
}

/// `ζ_ς(λ) = x(p(λ) - p(ς))` with its principal argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Zeta {
    pub value: Complex64,
    pub arg: f64,
}

impl Zeta {
    pub fn sector(&self) -> Sector {
        if self.arg.abs() <= 0.5 * PI {
            Sector::Inner
        } else if self.arg > 0.0 {
            Sector::Upper
        } else {
            Sector::Lower
        }
    }

    /// `ζ^w` on the principal branch.
    pub fn pow(&self, w: Complex64) -> Complex64 {
        (w * Complex64::new(self.value.norm().ln(), self.arg)).exp()
    }
}

fn endpoint_value(end: Endpoint, pd: &ProblemData) -> f64 {
    match end {
        Endpoint::A => pd.a,
        Endpoint::B => pd.b,
    }
}

/// `ζ_ς(λ)`; errors on the cut, where `arg ζ = ±π`.
pub fn zeta(end: Endpoint, pd: &ProblemData, l: Complex64) -> Result<Zeta> {
    let s = Complex64::new(endpoint_value(end, pd), 0.0);
    let value = pd.x * (pd.p(l) - pd.p(s));
    if value.norm() == 0.0 {
        return Ok(Zeta { value, arg: 0.0 });
    }
    if value.im == 0.0 && value.re < 0.0 {
        return Err(Error::Branch(format!("ζ on its cut at λ = {l}")));
    }
    Ok(Zeta { value, arg: value.arg() })
}

/// Scalar ingredients of a parametrix at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParametrixScalars {
    pub nu: Complex64,
    pub zeta: Zeta,
    pub alpha: Complex64,
    /// `α` above, `α e^{2iπν}` below (the `a`-side coefficient function).
    pub alpha0: Complex64,
    pub b12: Complex64,
    pub b21: Complex64,
}

/// Parametrix at an endpoint for a given `x`.
#[derive(Debug, Clone)]
pub struct Parametrix {
    pub end: Endpoint,
    pub pd: ProblemData,
    pub delta: f64,
    pub form: ParametrixForm,
    b1: Arc<BetaSolution>,
    b2: Arc<BetaSolution>,
}

fn psi_cover(a: Complex64, z: &Zeta, shift: f64) -> Result<Complex64> {
    // Ψ(a,1; e^{i shift} ζ) on the universal cover
    Ok(tricomi_psi_arg(a, z.value.norm(), z.arg + shift)?.0)
}

/// `sin(πν) Γ(w)²`.
fn sin_gamma2(v: Complex64, w: Complex64) -> Complex64 {
    (PI * v).sin() * gamma(w) * gamma(w)
}

/// `rgamma(w)² / sin(πν)` with the `ν → 0` limit `0` when `w ∈ {ν, -ν}`.
fn rgamma2_over_sin(v: Complex64, w: Complex64) -> Complex64 {
    let s = (PI * v).sin();
    if s.norm() == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    rgamma(w) * rgamma(w) / s
}

impl Parametrix {
    /// Parametrix at `end` for the oscillation parameter `x` of `pd`.
    pub fn new(end: Endpoint, pd: &ProblemData, b1: Arc<BetaSolution>, b2: Arc<BetaSolution>, delta: f64, form: ParametrixForm) -> Result<Self> {
        if !(delta > 0.0) || delta >= pd.margin {
            return Err(Error::Parameter(format!("disk radius {delta} must lie in (0, margin)")));
        }
        if !(pd.x > 0.0) {
            return Err(Error::Parameter("x must be positive".into()));
        }
        if b1.k != 1 || b2.k != 2 {
            return Err(Error::Parameter("expected β_1 and β_2".into()));
        }
        Ok(Parametrix { end, pd: pd.clone(), delta, form, b1, b2 })
    }

    /// Same parametrix at another `x` (the `β_k` do not depend on `x`).
    pub fn with_x(&self, x: f64) -> Self {
        Parametrix { pd: self.pd.with_x(x), ..self.clone() }
    }

    pub fn center(&self) -> f64 {
        endpoint_value(self.end, &self.pd)
    }

    pub fn scalars(&self, l: Complex64) -> Result<ParametrixScalars> {
        let pd = &self.pd;
        let v = nu(pd, l)?;
        let z = zeta(self.end, pd, l)?;
        let alpha = self.b1.rh.alpha(l)?;
        let i = Complex64::i();
        let e2 = (2.0 * i * PI * v).exp();
        let alpha0 = if l.im > 0.0 { alpha } else { alpha * e2 };
        let ps = pd.p(Complex64::new(self.center(), 0.0));
        let ex = (i * pd.x * ps).exp();
        let (b12, b21) = match self.end {
            Endpoint::A => {
                let zp = z.pow(2.0 * v) / e2;
                let b12 = -i * sin_gamma2(v, 1.0 + v) * ex / (PI * alpha0 * alpha0 * zp);
                let b21 = -i * PI * alpha0 * alpha0 * zp * rgamma2_over_sin(v, v) / ex;
                (b12, b21)
            }
            Endpoint::B => {
                let zp = z.pow(2.0 * v);
                let b12 = i * sin_gamma2(v, 1.0 - v) * zp * ex / (PI * alpha * alpha);
                let b21 = i * PI * alpha * alpha * rgamma2_over_sin(v, -v) / (ex * zp);
                (b12, b21)
            }
        };
        Ok(ParametrixScalars { nu: v, zeta: z, alpha, alpha0, b12, b21 })
    }

    /// `P_ς(λ)` with the natural sector.
    pub fn eval(&self, l: Complex64) -> Result<BlockOperator> {
        let z = zeta(self.end, &self.pd, l)?;
        self.eval_in(l, z.sector())
    }

    /// `P_ς(λ)` with the sector matrix `L` forced to `sector`.
    pub fn eval_in(&self, l: Complex64, sector: Sector) -> Result<BlockOperator> {
        let sc = self.scalars(l)?;
        let o = build_o(&self.b1, &self.b2, l, None)?;
        let (v, z) = (sc.nu, sc.zeta);
        let i = Complex64::i();
        let h = 0.5 * PI;
        // Ψ entries and the diagonal factor D
        let (p11, p12, p21, p22, d1, d2) = match self.end {
            Endpoint::A => (
                psi_cover(-v, &z, -h)?,
                i * sc.b12 * psi_cover(1.0 + v, &z, h)?,
                -i * sc.b21 * psi_cover(1.0 - v, &z, -h)?,
                psi_cover(v, &z, h)?,
                z.pow(-v) * (i * PI * v / 2.0).exp(),
                z.pow(v) * (i * PI * v / 2.0).exp(),
            ),
            Endpoint::B => {
                let s22 = match self.form {
                    ParametrixForm::Consistent => h,
                    ParametrixForm::Alternate => -h,
                };
                (
                    psi_cover(v, &z, -h)?,
                    i * sc.b12 * psi_cover(1.0 - v, &z, h)?,
                    -i * sc.b21 * psi_cover(1.0 + v, &z, -h)?,
                    psi_cover(-v, &z, s22)?,
                    z.pow(v) * (-i * PI * v / 2.0).exp(),
                    z.pow(-v) * (-i * PI * v / 2.0).exp(),
                )
            }
        };
        let psi_d = [
            [o.block(1, 1) * (p11 * d1), o.block(1, 2) * (p12 * d2)],
            [o.block(2, 1) * (p21 * d1), o.block(2, 2) * (p22 * d2)],
        ];
        let n = o.block(1, 1).nrows();
        let psi_d = BlockOperator::from_blocks([[&psi_d[0][0], &psi_d[0][1]], [&psi_d[1][0], &psi_d[1][1]]], false);
        let l_mat = self.sector_matrix(l, sector, sc.nu)?;
        let mut out = psi_d.compose(&l_mat);
        if self.end == Endpoint::B && self.form == ParametrixForm::Alternate {
            let id = CMat::identity(n, n);
            let zero = CMat::zeros(n, n);
            let extra = BlockOperator::from_blocks([[&(&id * z.pow(v)), &zero], [&zero, &(&id * z.pow(-v))]], false);
            out = out.compose(&extra);
        }
        let id = CMat::identity(n, n);
        {
            let mut top = out.mat.view_mut((0, 0), (n, n));
            top += &id - o.block(1, 1);
        }
        {
            let mut bottom = out.mat.view_mut((n, n), (n, n));
            bottom += &id - o.block(2, 2);
        }
        out.identity_plus_smoothing = true;
        Ok(out)
    }

    fn sector_matrix(&self, l: Complex64, sector: Sector, v: Complex64) -> Result<BlockOperator> {
        let n = self.b1.grid.len();
        if sector == Sector::Inner {
            return Ok(BlockOperator::identity(n));
        }
        let pq = build_pq(&self.b1, &self.b2, l, None)?;
        let e2 = (2.0 * Complex64::i() * PI * v).exp();
        let pd = &self.pd;
        let neg = |m: &CMat| m * Complex64::new(-1.0, 0.0);
        let (p, q) = match (self.end, self.form) {
            // M↑^{-1} above, M↓ below
            (Endpoint::A, ParametrixForm::Consistent) => (neg(&pq.p), pq.q.clone()),
            (Endpoint::A, ParametrixForm::Alternate) => (&pq.p * (-1.0 / e2), neg(&pq.q)),
            // M↑ above, M↓^{-1} below
            (Endpoint::B, ParametrixForm::Consistent) => (pq.p.clone(), neg(&pq.q)),
            (Endpoint::B, ParametrixForm::Alternate) => (neg(&pq.p), neg(&pq.q)),
        };
        Ok(match sector {
            Sector::Upper => m_up(pd, &p, l),
            _ => m_down(pd, &q, l),
        })
    }

    /// Jump residual on the ray `ς ± iy`: `P_+ M↑ - P_-` above and
    /// `P_+ M↓^{-1} - P_-` below, `+` being the side outside the lens.
    pub fn jump_residual(&self, y: f64, upper: bool) -> Result<f64> {
        let s = Complex64::new(self.center(), if upper { y } else { -y });
        let eta = APPROACH * self.delta;
        let (outside, inside) = match self.end {
            Endpoint::A => (s - eta, s + eta),
            Endpoint::B => (s + eta, s - eta),
        };
        let pp = self.eval(outside)?;
        let pm = self.eval(inside)?;
        let pq = build_pq(&self.b1, &self.b2, s, None)?;
        let g = if upper { m_up(&self.pd, &pq.p, s) } else { m_down(&self.pd, &pq.q, s).inverse()? };
        Ok(pp.compose(&g).distance(&pm))
    }

    /// `max |P(λ + iη) - P(λ - iη)|` at `λ = ς - δ/2` (across the cut of `ζ`).
    pub fn cut_residual(&self, eta: f64) -> Result<f64> {
        let l = Complex64::new(self.center() - 0.5 * self.delta, 0.0);
        let up = self.eval(l + Complex64::new(0.0, eta))?;
        let dn = self.eval(l - Complex64::new(0.0, eta))?;
        Ok(up.distance(&dn))
    }

    /// `max |P_ς - I|` over `ς + δ e^{iθ}`.
    pub fn boundary_residual(&self, angles: &[f64]) -> Result<f64> {
        let n = self.b1.grid.len();
        let id = CMat::identity(2 * n, 2 * n);
        let mut worst: f64 = 0.0;
        for &th in angles {
            let l = Complex64::new(self.center(), 0.0) + Complex64::from_polar(self.delta, th);
            worst = worst.max(linalg::max_abs_diff(&self.eval(l)?.mat, &id));
        }
        Ok(worst)
    }

    /// `ε = 2 sup |Re ν|` over the boundary probes.
    pub fn epsilon(&self, angles: &[f64]) -> Result<f64> {
        let mut e: f64 = 0.0;
        for &th in angles {
            let l = Complex64::new(self.center(), 0.0) + Complex64::from_polar(self.delta, th);
            e = e.max(2.0 * nu(&self.pd, l)?.re.abs());
        }
        Ok(e)
    }
}

/// Boundary probe angles, kept off the real axis.
pub const BOUNDARY_ANGLES: [f64; 6] = [0.3, 1.2, 2.0, -0.7, -2.0, -2.8];
