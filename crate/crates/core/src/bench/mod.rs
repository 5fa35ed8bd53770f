//! Runtime scaling measurements and least-squares linearity analysis.
//!
//! Timings `t` against point counts `n` are fitted to `t = a·n + b`; the
//! fit from small runs is then used to predict larger ones and the
//! prediction errors are tabulated.

mod fit;
mod report;
mod runner;

pub use fit::{
    error_report, fit_by_algorithm, fit_line, least_squares_fit, predict, r_squared, ErrorReport,
    ErrorRow, FitCoefficients, NamedFit,
};
pub use report::{
    emit_report, read_fits_csv, read_report, read_timings_csv, write_timings_csv, BenchReport,
    TABLE_HEADER, TIMINGS_HEADER,
};
pub use runner::{generate_points, run_scaling_bench, BenchConfig};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One wall-clock measurement of a batch run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimingSample {
    pub n_points: usize,
    pub algorithm: String,
    pub elapsed_seconds: f64,
}

impl TimingSample {
    pub fn new(n_points: usize, algorithm: impl Into<String>, elapsed_seconds: f64) -> Self {
        Self {
            n_points,
            algorithm: algorithm.into(),
            elapsed_seconds,
        }
    }
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("cannot fit a line: {0}")]
    DegenerateFit(String),
    #[error("no fit for algorithm `{0}`")]
    MissingFit(String),
    #[error("invalid benchmark configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Io(#[from] crate::io::IoError),
}
