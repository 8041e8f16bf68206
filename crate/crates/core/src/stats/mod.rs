//! Corpus-level statistics: Welch's t-test, two-corpus comparison reports
//! and document-by-metric feature matrices.

mod compare;
mod matrix;
pub mod special;
mod welch;

pub use compare::{
    compare_corpora, ComparisonEntry, ComparisonReport, Direction, SkippedMetric, ABSENT_IN_A, ABSENT_IN_B,
    DEFAULT_ALPHA, INSUFFICIENT,
};
pub use matrix::{export_features, format_value, FeatureMatrix, FeatureRow};
pub use welch::{welch_t, WelchResult};

#[derive(Debug, thiserror::Error)]
pub enum StatsError {
    #[error("each sample needs at least 2 values (got {n_a} and {n_b})")]
    InsufficientData { n_a: usize, n_b: usize },
    #[error("samples contain non-finite values")]
    NonFinite,
    #[error("corpus is empty")]
    EmptyCorpus,
    #[error("duplicate document id {0:?}")]
    DuplicateDocId(String),
    #[error("{labels} labels given for {documents} documents")]
    LabelCount { documents: usize, labels: usize },
    #[error("feature matrices share no metric column")]
    DisjointColumns,
    #[error("alpha must lie in (0, 1), got {0}")]
    InvalidAlpha(f64),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
