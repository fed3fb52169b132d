#![allow(dead_code)]

use detlab::symbolspace::{make_problem, ProblemData, ProblemInput, SymbolPreset};
use num_complex::Complex64;
use std::sync::Arc;

/// `F ≡ g`, `p = id` on `[-1, 1]` with `c = 1`.
pub fn problem(g: f64, t: Complex64, x: f64) -> ProblemData {
    make_problem(ProblemInput {
        a: -1.0,
        b: 1.0,
        c: 1.0,
        t,
        x,
        f: Arc::new(SymbolPreset::Constant(Complex64::new(g, 0.0))),
        p: Arc::new(SymbolPreset::Polynomial(vec![0.0, 1.0])),
        margin: 0.5,
    })
    .unwrap()
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
