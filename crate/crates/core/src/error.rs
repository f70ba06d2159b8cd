use std::io;

use thiserror::Error;

/// Errors produced by the simulation library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {what}: expected {expected}, found {found}{}", fmt_index(*index))]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
        index: Option<usize>,
    },

    #[error("non-finite value in {what} at index {index}: {value}")]
    NonFinite {
        what: &'static str,
        index: usize,
        value: f64,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no real synchronized amplitude: radicand {radicand} is negative")]
    NoRealFixedPoint { radicand: f64 },

    #[error("divergence at step {step} (t = {time}): node {node} has amplitude {value}")]
    Divergence {
        step: u64,
        time: f64,
        node: usize,
        value: f64,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("transient cut at t >= {cut} leaves no samples")]
    EmptyWindow { cut: f64 },

    #[error("all amplitudes are zero; normalized order parameter is undefined")]
    ZeroAmplitude,

    #[error("run failed (seed {seed}, sigma {sigma}, epsilon {epsilon}, lambda {lambda}): {source}")]
    Run {
        seed: u64,
        sigma: f64,
        epsilon: f64,
        lambda: f64,
        source: Box<Error>,
    },

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

fn fmt_index(index: Option<usize>) -> String {
    match index {
        Some(i) => format!(" (index {i})"),
        None => String::new(),
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
