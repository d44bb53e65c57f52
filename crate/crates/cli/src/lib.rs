//! Experiment harness: builds `ex^k(β)` over a range of `k`, decides
//! pairwise conjugacy with memoized summit sets, and writes CSV or JSON
//! reports.

pub mod config;
pub mod experiment;
pub mod output;

use thiserror::Error;

pub use config::{ExperimentConfig, Format};
pub use experiment::{run_experiment, ExperimentReport};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] braidforge::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// Process exit code: 2 for resource exhaustion, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(e) if e.is_resource() => 2,
            _ => 1,
        }
    }
}
