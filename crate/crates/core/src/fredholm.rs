//! Nyström discretization of `I + K` on an interval or a closed contour:
//! determinants, linear solves and refinement error estimates.

use crate::error::{Error, Result};
use crate::kernels::KernelHandle;
use crate::linalg::{self, CMat, Determinant};
use crate::quadgrid::{gauss_interval, graded_interval, stadium_contour, Contour, IntervalRule};
use nalgebra::{Dyn, LU};
use num_complex::Complex64;

/// Default cap on the condition number accepted by [`NystromSystem::solve`].
pub const CONDITION_CAP: f64 = 1e12;

/// Residual tolerance of [`NystromSystem::solve`], relative to `‖g‖∞`.
pub const SOLVE_RESIDUAL_TOL: f64 = 1e-10;

/// Quadrature support of a discretized operator.
#[derive(Debug, Clone, PartialEq)]
pub enum Support {
    /// Gauss–Legendre (`grading = None`) or sigmoidally graded rule.
    Interval { rule: IntervalRule, grading: Option<u32> },
    /// Stadium contour with its generation parameters.
    Contour { contour: Contour, n_per_unit: f64, bound: f64 },
}

impl Support {
    pub fn gauss(n: usize, a: f64, b: f64) -> Result<Self> {
        Ok(Support::Interval { rule: gauss_interval(n, a, b)?, grading: None })
    }

    pub fn graded(n: usize, a: f64, b: f64, p: u32) -> Result<Self> {
        Ok(Support::Interval { rule: graded_interval(n, a, b, p)?, grading: Some(p) })
    }

    pub fn stadium(a: f64, b: f64, radius: f64, n_per_unit: f64, bound: f64) -> Result<Self> {
        Ok(Support::Contour { contour: stadium_contour(a, b, radius, n_per_unit, bound)?, n_per_unit, bound })
    }

    pub fn len(&self) -> usize {
        match self {
            Support::Interval { rule, .. } => rule.len(),
            Support::Contour { contour, .. } => contour.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn nodes(&self) -> Vec<Complex64> {
        match self {
            Support::Interval { rule, .. } => rule.nodes.iter().map(|&m| Complex64::new(m, 0.0)).collect(),
            Support::Contour { contour, .. } => contour.points.clone(),
        }
    }

    pub fn weights(&self) -> Vec<Complex64> {
        match self {
            Support::Interval { rule, .. } => rule.weights.iter().map(|&w| Complex64::new(w, 0.0)).collect(),
            Support::Contour { contour, .. } => contour.weights.clone(),
        }
    }

    /// Same kind of support with about twice the nodes.
    pub fn refined(&self) -> Result<Self> {
        match self {
            Support::Interval { rule, grading: None } => Support::gauss(2 * rule.len(), rule.a, rule.b),
            Support::Interval { rule, grading: Some(p) } => Support::graded(2 * rule.len(), rule.a, rule.b, *p),
            Support::Contour { contour, n_per_unit, bound } => {
                Support::stadium(contour.a, contour.b, contour.radius, 2.0 * n_per_unit, *bound)
            }
        }
    }
}

/// The matrix `I + K·diag(w)` with its LU factorization.
#[derive(Debug, Clone)]
pub struct NystromSystem {
    pub support: Support,
    pub matrix: CMat,
    /// `‖A‖∞ ‖A^{-1}‖∞`, infinite when singular.
    pub condition: f64,
    lu: LU<Complex64, Dyn, Dyn>,
}

impl NystromSystem {
    /// Build from an unweighted kernel matrix `K(z_i, z_j)`.
    pub fn from_kernel_matrix(support: Support, kmat: &CMat) -> Result<Self> {
        let n = support.len();
        if kmat.nrows() != n || kmat.ncols() != n {
            return Err(Error::Dimension { expected: n, got: kmat.nrows() });
        }
        let w = support.weights();
        let mut matrix = CMat::from_fn(n, n, |i, j| kmat[(i, j)] * w[j]);
        for i in 0..n {
            matrix[(i, i)] += 1.0;
        }
        if matrix.iter().any(|z| !z.is_finite()) {
            return Err(Error::Parameter("kernel is not finite on its support".into()));
        }
        let lu = matrix.clone().lu();
        let condition = match lu.try_inverse() {
            Some(inv) => linalg::norm_inf(&matrix) * linalg::norm_inf(&inv),
            None => f64::INFINITY,
        };
        Ok(NystromSystem { support, matrix, condition, lu })
    }

    pub fn len(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn determinant(&self) -> Result<Determinant> {
        let n = self.len();
        if n == 0 {
            return Ok(Determinant { value: Complex64::new(1.0, 0.0), log: Complex64::new(0.0, 0.0) });
        }
        let u = self.lu.u();
        let parity: f64 = self.lu.p().determinant();
        let mut log = Complex64::new(0.0, 0.0);
        for i in 0..n {
            let d = u[(i, i)];
            if d.norm() == 0.0 {
                return Ok(Determinant { value: Complex64::new(0.0, 0.0), log: Complex64::new(f64::NEG_INFINITY, 0.0) });
            }
            log += d.ln();
        }
        if parity < 0.0 {
            log += Complex64::new(0.0, std::f64::consts::PI);
        }
        Ok(Determinant { value: log.exp(), log })
    }

    /// Solve `(I + K diag w) f = g` for every column of `rhs`.
    pub fn solve(&self, rhs: &CMat) -> Result<CMat> {
        self.solve_capped(rhs, CONDITION_CAP)
    }

    pub fn solve_capped(&self, rhs: &CMat, cap: f64) -> Result<CMat> {
        if rhs.nrows() != self.len() {
            return Err(Error::Dimension { expected: self.len(), got: rhs.nrows() });
        }
        if !(self.condition <= cap) {
            return Err(Error::NearSingular { condition: self.condition });
        }
        let f = self.lu.solve(rhs).ok_or(Error::NearSingular { condition: self.condition })?;
        let res = &self.matrix * &f - rhs;
        let scale = linalg::max_abs(rhs).max(f64::MIN_POSITIVE);
        let r = linalg::max_abs(&res);
        if r > SOLVE_RESIDUAL_TOL * scale {
            return Err(Error::Accuracy { what: "Nyström solve residual".into(), estimate: r / scale });
        }
        Ok(f)
    }
}

/// Discretize `I + K` on `support`.
pub fn assemble(kernel: &dyn KernelHandle, support: Support) -> Result<NystromSystem> {
    let kmat = kernel.matrix(&support.nodes())?;
    NystromSystem::from_kernel_matrix(support, &kmat)
}

/// `det(I + K)` on `support`.
pub fn determinant(kernel: &dyn KernelHandle, support: Support) -> Result<Determinant> {
    assemble(kernel, support)?.determinant()
}

/// Determinant on the refined support with the difference to the coarse one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RefinedDeterminant {
    pub det: Determinant,
    pub coarse: Determinant,
    pub estimate: f64,
}

pub fn determinant_with_estimate(kernel: &dyn KernelHandle, support: Support) -> Result<RefinedDeterminant> {
    let fine = support.refined()?;
    let coarse = determinant(kernel, support)?;
    let det = determinant(kernel, fine)?;
    Ok(RefinedDeterminant { det, coarse, estimate: (det.value - coarse.value).norm() })
}
