//! Confluent hypergeometric building blocks and the local endpoint parametrices.

pub mod dd;
pub mod parametrix;
pub mod tricomi;

pub use tricomi::{principal_u, series_u, asymptotic_u, tricomi_psi, tricomi_psi_arg, TricomiEval};
