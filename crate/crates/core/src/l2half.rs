//! Discretized `L²(ℝ⁺, ds)`: the functions `m_k`, one-forms `κ_k`, the
//! vectors `E_L`, `E_R`, rank-one operators and 2×2 block operators.

use crate::error::{Error, Result};
use crate::linalg::{self, CMat, Determinant};
use crate::quadgrid::{laguerre_halfline, HalfLineRule};
use crate::symbolspace::ProblemData;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Default number of half-line nodes.
pub const DEFAULT_NS: usize = 48;

/// Half-line discretization tied to `(c, t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfLineGrid {
    pub rule: HalfLineRule,
    pub c: f64,
    pub t: Complex64,
}

impl HalfLineGrid {
    pub fn new(pd: &ProblemData, ns: usize) -> Result<Self> {
        Ok(HalfLineGrid { rule: laguerre_halfline(ns, pd.c)?, c: pd.c, t: pd.t })
    }

    pub fn len(&self) -> usize {
        self.rule.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rule.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.rule.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.rule.weights
    }

    fn check_growth(&self, z: Complex64) -> Result<()> {
        if (self.t * z).im.abs() >= self.c / 4.0 {
            return Err(Error::Growth { re: z.re, im: z.im });
        }
        Ok(())
    }
}

/// Values of a function on the half-line nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct HVector(pub Vec<Complex64>);

/// Values of a one-form density on the half-line nodes; pairing uses the weights.
#[derive(Debug, Clone, PartialEq)]
pub struct HCovector(pub Vec<Complex64>);

impl HVector {
    pub fn zeros(n: usize) -> Self {
        HVector(vec![Complex64::new(0.0, 0.0); n])
    }

    pub fn scale(&self, s: Complex64) -> Self {
        HVector(self.0.iter().map(|v| v * s).collect())
    }

    pub fn norm(&self, grid: &HalfLineGrid) -> f64 {
        self.0
            .iter()
            .zip(grid.weights())
            .map(|(v, w)| v.norm_sqr() * w)
            .sum::<f64>()
            .sqrt()
    }
}

impl HCovector {
    pub fn scale(&self, s: Complex64) -> Self {
        HCovector(self.0.iter().map(|v| v * s).collect())
    }

    /// `κ[f] = Σ κ_j f_j w_j`.
    pub fn pair(&self, grid: &HalfLineGrid, f: &HVector) -> Complex64 {
        self.0
            .iter()
            .zip(&f.0)
            .zip(grid.weights())
            .map(|((k, v), w)| k * v * w)
            .sum()
    }
}

fn phase_vector(grid: &HalfLineGrid, z: Complex64, sign: f64) -> Vec<Complex64> {
    let sc = grid.c.sqrt();
    let i = Complex64::i();
    grid.nodes()
        .iter()
        .map(|&s| sc * (-0.5 * grid.c * s + sign * i * s * grid.t * z).exp())
        .collect()
}

/// `m_1 = √c e^{-cs/2} e^{istλ}`, `m_2 = √c e^{-cs/2} e^{-istλ}`.
pub fn m_vec(k: usize, grid: &HalfLineGrid, z: Complex64) -> Result<HVector> {
    grid.check_growth(z)?;
    match k {
        1 => Ok(HVector(phase_vector(grid, z, 1.0))),
        2 => Ok(HVector(phase_vector(grid, z, -1.0))),
        _ => Err(Error::Parameter(format!("k must be 1 or 2, got {k}"))),
    }
}

/// `κ_1` carries `e^{-istλ}`, `κ_2` carries `e^{+istλ}`.
pub fn kappa_form(k: usize, grid: &HalfLineGrid, z: Complex64) -> Result<HCovector> {
    grid.check_growth(z)?;
    match k {
        1 => Ok(HCovector(phase_vector(grid, z, -1.0))),
        2 => Ok(HCovector(phase_vector(grid, z, 1.0))),
        _ => Err(Error::Parameter(format!("k must be 1 or 2, got {k}"))),
    }
}

/// `E_L(μ)` (pair of one-forms) and `E_R(μ)` (pair of functions).
#[derive(Debug, Clone, PartialEq)]
pub struct EVectors {
    pub left: [HCovector; 2],
    pub right: [HVector; 2],
}

/// `E_L = F(μ)(e^{-ixp/2} κ_1, -e^{ixp/2} κ_2)`,
/// `E_R = -(2iπ)^{-1}(e^{ixp/2} m_1, e^{-ixp/2} m_2)`.
pub fn e_vectors(pd: &ProblemData, grid: &HalfLineGrid, mu: Complex64) -> Result<EVectors> {
    let i = Complex64::i();
    let f = pd.f(mu);
    let ph = (i * pd.x * pd.p(mu) / 2.0).exp();
    let k1 = kappa_form(1, grid, mu)?;
    let k2 = kappa_form(2, grid, mu)?;
    let m1 = m_vec(1, grid, mu)?;
    let m2 = m_vec(2, grid, mu)?;
    let r = -1.0 / Complex64::new(0.0, 2.0 * PI);
    Ok(EVectors {
        left: [k1.scale(f / ph), k2.scale(-f * ph)],
        right: [m1.scale(r * ph), m2.scale(r / ph)],
    })
}

/// `(E_L(λ), E_R(μ)) = Σ_k E_{L,k}(λ)[E_{R,k}(μ)]`.
pub fn e_pairing(grid: &HalfLineGrid, left: &EVectors, right: &EVectors) -> Complex64 {
    left.left[0].pair(grid, &right.right[0]) + left.left[1].pair(grid, &right.right[1])
}

/// Matrix of `v ⊗ κ`: entries `v_i κ_j w_j`.
pub fn rank_one(grid: &HalfLineGrid, v: &HVector, k: &HCovector) -> Result<CMat> {
    let n = grid.len();
    if v.0.len() != n || k.0.len() != n {
        return Err(Error::Dimension { expected: n, got: v.0.len().min(k.0.len()) });
    }
    Ok(CMat::from_fn(n, n, |i, j| v.0[i] * k.0[j] * grid.weights()[j]))
}

/// Apply an operator matrix to a vector.
pub fn apply(m: &CMat, v: &HVector) -> HVector {
    let x = nalgebra::DVector::from_column_slice(&v.0);
    HVector((m * x).iter().copied().collect())
}

/// A 2×2 array of half-line operators stored as one `2N × 2N` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockOperator {
    pub mat: CMat,
    /// Whether the operator is identity plus a smoothing part.
    pub identity_plus_smoothing: bool,
}

impl BlockOperator {
    pub fn identity(n: usize) -> Self {
        BlockOperator { mat: CMat::identity(2 * n, 2 * n), identity_plus_smoothing: true }
    }

    pub fn from_blocks(blocks: [[&CMat; 2]; 2], identity_plus_smoothing: bool) -> Self {
        let n = blocks[0][0].nrows();
        let mut mat = CMat::zeros(2 * n, 2 * n);
        for (bi, row) in blocks.iter().enumerate() {
            for (bj, blk) in row.iter().enumerate() {
                mat.view_mut((bi * n, bj * n), (n, n)).copy_from(*blk);
            }
        }
        BlockOperator { mat, identity_plus_smoothing }
    }

    pub fn half(&self) -> usize {
        self.mat.nrows() / 2
    }

    pub fn block(&self, i: usize, j: usize) -> CMat {
        let n = self.half();
        self.mat.view((i * n, j * n), (n, n)).into_owned()
    }

    pub fn compose(&self, other: &BlockOperator) -> BlockOperator {
        BlockOperator {
            mat: &self.mat * &other.mat,
            identity_plus_smoothing: self.identity_plus_smoothing && other.identity_plus_smoothing,
        }
    }

    pub fn inverse(&self) -> Result<BlockOperator> {
        Ok(BlockOperator { mat: linalg::inverse(&self.mat)?, identity_plus_smoothing: self.identity_plus_smoothing })
    }

    pub fn determinant(&self) -> Result<Determinant> {
        linalg::determinant(&self.mat)
    }

    /// Largest entry modulus of `self - other`.
    pub fn distance(&self, other: &BlockOperator) -> f64 {
        linalg::max_abs_diff(&self.mat, &other.mat)
    }

    /// Largest ratio `|M_ij - δ_ij| / e^{-c(s_i+s_j)/4}` over the grid.
    pub fn smoothing_bound(&self, grid: &HalfLineGrid) -> f64 {
        let n = self.half();
        let s = grid.nodes();
        let w = grid.weights();
        let mut worst: f64 = 0.0;
        for i in 0..2 * n {
            for j in 0..2 * n {
                let id = if i == j { 1.0 } else { 0.0 };
                // strip the quadrature weight carried by column j
                let v = (self.mat[(i, j)] - id).norm() / w[j % n];
                let envelope = (-grid.c * (s[i % n] + s[j % n]) / 4.0).exp();
                worst = worst.max(v / envelope);
            }
        }
        worst
    }
}
