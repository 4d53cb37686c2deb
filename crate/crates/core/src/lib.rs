pub mod autodiff;
pub mod config;
pub mod decomposition;
pub mod dominance;
pub mod error;
pub mod evaluator;
pub mod indicators;
pub mod io;
pub mod mcdm;
pub mod moea;
pub mod operators;
pub mod population;
pub mod problem;
pub mod problems;
pub mod rng;
pub mod termination;
pub mod viz;

pub use error::{Error, Result};

/// Row-major matrix: one inner vector per row.
pub type Matrix = Vec<Vec<f64>>;
