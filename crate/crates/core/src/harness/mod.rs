//! Experiment runner behind the `zeno-lab` binary.
//!
//! A run is fully described by an [`ExperimentConfig`]; [`run`] turns it into
//! a sorted table of [`Row`]s and [`render`] serializes the table as CSV or
//! JSON. Identical configs produce byte-identical output.

mod config;
mod experiments;
mod output;

pub use config::{env_seed, ConfigLayer, Experiment, ExperimentConfig, Format, HamiltonianKind, SEED_ENV_VAR};
pub use experiments::run;
pub use output::{parse_json, render, Row, CSV_HEADER};

use serde_json::json;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),

    #[error("{operation}: {source}")]
    Operation {
        operation: &'static str,
        #[source]
        source: crate::Error,
    },

    #[error("{operation}: invariant violated: {message}")]
    InvariantViolation { operation: &'static str, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl HarnessError {
    pub fn kind(&self) -> &'static str {
        match self {
            HarnessError::ConfigInvalid(_) => "ConfigInvalid",
            HarnessError::Operation { .. } => "OperationFailed",
            HarnessError::InvariantViolation { .. } => "InvariantViolation",
            HarnessError::Io(_) => "Io",
        }
    }

    pub fn operation(&self) -> Option<&'static str> {
        match self {
            HarnessError::Operation { operation, .. } | HarnessError::InvariantViolation { operation, .. } => Some(operation),
            _ => None,
        }
    }

    /// Machine-readable error record written to stderr by the binary.
    pub fn record(&self) -> serde_json::Value {
        json!({
            "error": {
                "kind": self.kind(),
                "operation": self.operation(),
                "message": self.to_string(),
            }
        })
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::ConfigInvalid(_) => 2,
            _ => 1,
        }
    }
}

pub(crate) trait OpContext<T> {
    fn op(self, operation: &'static str) -> Result<T, HarnessError>;
}

impl<T> OpContext<T> for crate::Result<T> {
    fn op(self, operation: &'static str) -> Result<T, HarnessError> {
        self.map_err(|source| HarnessError::Operation { operation, source })
    }
}
