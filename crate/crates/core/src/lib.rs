//! Numerical laboratory for Fredholm determinants of c-shifted integrable
//! kernels and the operator-valued Riemann–Hilbert objects behind their
//! large-`x` asymptotics.

pub mod chfparam;
pub mod detflow;
pub mod error;
pub mod fredholm;
pub mod kernels;
pub mod l2half;
pub mod linalg;
pub mod quadgrid;
pub mod rhpcore;
pub mod special;
pub mod symbolspace;

pub use error::{Error, Result};
