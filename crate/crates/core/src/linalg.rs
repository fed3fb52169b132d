//! Dense complex linear algebra helpers on top of `nalgebra`.

use crate::error::{Error, Result};
use nalgebra::DMatrix;
use num_complex::Complex64;

pub type CMat = DMatrix<Complex64>;

/// Determinant with its logarithm (sum of `ln` of the LU pivots).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Determinant {
    pub value: Complex64,
    pub log: Complex64,
}

/// Determinant through partial-pivot LU.
pub fn determinant(m: &CMat) -> Result<Determinant> {
    if m.nrows() != m.ncols() {
        return Err(Error::Dimension { expected: m.nrows(), got: m.ncols() });
    }
    if m.nrows() == 0 {
        return Ok(Determinant { value: Complex64::new(1.0, 0.0), log: Complex64::new(0.0, 0.0) });
    }
    let lu = m.clone().lu();
    let u = lu.u();
    let parity: f64 = lu.p().determinant();
    let mut log = Complex64::new(0.0, 0.0);
    for i in 0..u.nrows() {
        let d = u[(i, i)];
        if d.norm() == 0.0 {
            return Ok(Determinant {
                value: Complex64::new(0.0, 0.0),
                log: Complex64::new(f64::NEG_INFINITY, 0.0),
            });
        }
        log += d.ln();
    }
    if parity < 0.0 {
        log += Complex64::new(0.0, std::f64::consts::PI);
    }
    Ok(Determinant { value: log.exp(), log })
}

/// Largest entry modulus.
pub fn max_abs(m: &CMat) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

/// Largest entry modulus of `a - b`.
pub fn max_abs_diff(a: &CMat, b: &CMat) -> f64 {
    a.iter().zip(b.iter()).fold(0.0, |acc, (x, y)| acc.max((x - y).norm()))
}

/// Infinity-norm (maximum absolute row sum).
pub fn norm_inf(m: &CMat) -> f64 {
    (0..m.nrows())
        .map(|i| m.row(i).iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Inverse via LU; errors on an exactly singular matrix.
pub fn inverse(m: &CMat) -> Result<CMat> {
    m.clone()
        .lu()
        .try_inverse()
        .ok_or(Error::NearSingular { condition: f64::INFINITY })
}
