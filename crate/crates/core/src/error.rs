//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, CoreError>;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("column `{column}` not found in {path}")]
    MissingColumn { path: String, column: String },

    #[error("{path}:{row}: cannot parse `{value}` in column `{column}` as a real number")]
    BadCell {
        path: String,
        row: usize,
        column: String,
        value: String,
    },

    #[error("series `{name}` is empty or contains non-finite values")]
    InvalidSeries { name: String },

    #[error("series of length {n} too short: need at least {needed}")]
    SeriesTooShort { needed: usize, got: usize, n: usize },

    #[error("training series is constant; min-max scaling is undefined")]
    ConstantSeries,

    #[error("split of {n} points at fraction {fraction} leaves an empty side")]
    DegenerateSplit { n: usize, fraction: f64 },

    #[error("{what}: expected dimension {expected}, got {got}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("integration diverged at t = {t}")]
    IntegrationDiverged { t: f64 },

    #[error("collected only {found} of {needed} events before t = {t_max}")]
    EventTimeout { needed: usize, found: usize, t_max: f64 },

    #[error("{model} training diverged at epoch {epoch}")]
    TrainingDiverged { model: &'static str, epoch: usize },

    #[error("ridge system is singular; use a positive ridge_lambda")]
    SingularRidgeSystem,

    #[error("reservoir build failed after {attempts} attempts (zero spectral radius)")]
    ReservoirBuildFailed { attempts: usize },

    #[error("model has no trained readout")]
    Untrained,

    #[error("invalid weights: {reason}")]
    InvalidWeights { reason: String },

    #[error("non-finite value in {what}")]
    NonFinite { what: &'static str },

    #[error("invalid config field `{field}`: {reason}")]
    InvalidConfig { field: &'static str, reason: String },

    #[error("reports mix datasets: `{a}` and `{b}`")]
    MixedDatasets { a: String, b: String },
}
