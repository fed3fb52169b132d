//! Error type shared by every module.

use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("parameter out of domain: {0}")]
    Parameter(String),
    #[error("contour radius {radius} violates safety bound {bound}")]
    ContourSafety { radius: f64, bound: f64 },
    #[error("symbol hypothesis violated at node {node}: {what}")]
    SymbolDomain { what: String, node: f64 },
    #[error("branch error: {0}")]
    Branch(String),
    #[error("point {re}+{im}i too close to a singular set ({what})")]
    Proximity { what: String, re: f64, im: f64 },
    #[error("boundary limit did not converge (error estimate {estimate:e})")]
    BoundaryLimit { estimate: f64 },
    #[error("growth condition |Im(t*lambda)| < c/4 violated at {re}+{im}i")]
    Growth { re: f64, im: f64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("near-singular system (condition estimate {condition:e})")]
    NearSingular { condition: f64 },
    #[error("accuracy monitor exceeded: {what} (estimate {estimate:e})")]
    Accuracy { what: String, estimate: f64 },
    #[error("node budget exceeded: need {needed}, cap {cap}")]
    Resolution { needed: usize, cap: usize },
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
