//! Text-complexity metrics for annotated Brazilian Portuguese text.
//!
//! The engine ingests CoNLL-U (or degraded plain text), loads a bundle of
//! lexical resources and evaluates a registry of metrics grouped into
//! fourteen categories. Corpus-level helpers compare two corpora with
//! Welch's t-test and export document-by-metric feature matrices.

pub mod metrics;
pub mod resources;
pub mod stats;
pub mod stem;
pub mod text;

pub use metrics::{compute_all, list_metrics, Category, MetricDef, MetricVector, Requirement};
pub use resources::{load_bundle, ResourceBundle, ResourceError};
pub use stats::{compare_corpora, export_features, welch_t, ComparisonReport, FeatureMatrix, StatsError, WelchResult};
pub use text::{ingest_plaintext, parse_conllu, syllabify, Document, Paragraph, Sentence, Token, TextError};
