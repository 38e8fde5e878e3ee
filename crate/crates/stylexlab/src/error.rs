//! Crate-wide error type and exit-code mapping.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("factor `{factor}` out of range: {value} not in [{lo}, {hi}]")]
    FactorRange {
        factor: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("shape mismatch: expected {expected}, got {got}")]
    Shape { expected: String, got: String },

    #[error("configuration invalid:\n{}", .0.join("\n"))]
    Config(Vec<String>),

    #[error("unknown head `{0}`")]
    UnknownHead(String),

    #[error("AUC undefined: dataset contains a single class for head `{0}`")]
    SingleClass(String),

    #[error("classifier gate failed: tune AUC {auc:.4} below threshold {threshold}")]
    GateFailed { auc: f64, threshold: f64 },

    #[error("upstream hash mismatch for `{artifact}`: manifest {expected}, found {got}")]
    HashMismatch {
        artifact: String,
        expected: String,
        got: String,
    },

    #[error("stage `{stage}` requires `{upstream}` to be done first")]
    UpstreamMissing { stage: String, upstream: String },

    #[error("non-finite value in {0}")]
    NonFinite(String),

    #[error("checkpoint format error: {0}")]
    Checkpoint(String),

    #[error("ingestion failed:\n{}", .0.join("\n"))]
    Ingest(Vec<String>),

    #[error("no ground-truth oracle: dataset is not synthetic")]
    NoOracle,

    #[error("output root is locked by another run ({0})")]
    Locked(String),

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Image(#[from] image::ImageError),
}

impl Error {
    /// Process exit code for the CLI: 0 success, 2 validation error,
    /// 3 gate refusal, 4 upstream-hash mismatch, 5 numeric failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Invalid(_) => 2,
            Error::GateFailed { .. } => 3,
            Error::HashMismatch { .. } => 4,
            Error::NonFinite(_) => 5,
            _ => 1,
        }
    }
}
