//! Annotated document model and ingestion.

mod conllu;
mod model;
mod plaintext;
mod syllable;
mod tree;

pub use conllu::{parse_conllu, parse_conllu_str, to_conllu};
pub use model::{Annotation, Document, LeafMode, Paragraph, Pos, Sentence, Token, Tree};
pub use plaintext::{ingest_plaintext, ingest_plaintext_str};
pub use syllable::{syllabify, word_syllables};
pub use tree::{parse_bracketed, ConstituencyNode};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TextError {
    #[error("empty input")]
    Empty,
    #[error("input is not valid UTF-8")]
    Encoding,
    #[error("line {line}: expected 10 tab-separated columns, found {found}")]
    ColumnCount { line: usize, found: usize },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("sentence ending at line {line}: {message}")]
    Invalid { line: usize, message: String },
    #[error("'{0}' is not an alphabetic word")]
    NotAlphabetic(String),
    #[error("constituency tree: {0}")]
    Tree(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
