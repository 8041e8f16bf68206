//! Lexical resources consumed by the metrics.
//!
//! A bundle is described by a manifest of `key=path` lines (paths relative
//! to the manifest). Every resource is optional; metrics depending on an
//! absent resource evaluate to missing.
//!
//! | key                 | format                                   |
//! |---------------------|------------------------------------------|
//! | `simple_words`, `concrete_words`, `easy_conjunctions`, `hard_conjunctions`, `discourse_markers`, `abstract_nouns` | one entry per line |
//! | `connectives`       | `form<TAB>kind<TAB>polarity`             |
//! | `norms`             | `word<TAB>aoa<TAB>conc<TAB>fam<TAB>imag` |
//! | `senses`            | `word<TAB>pos<TAB>count`                 |
//! | `hypernyms`         | `verb<TAB>hypernyms`                     |
//! | `polarity`          | `word<TAB>positive\|negative`            |
//! | `freq_a`, `freq_b`, `freq_legacy` | `word<TAB>fpm`             |
//! | `embeddings`        | header `V d`, then `word v1 ... vd`      |

mod embedding;
mod lexicon;
mod tables;

use std::collections::HashSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;
use unicode_normalization::UnicodeNormalization;

pub use embedding::EmbeddingModel;
pub use lexicon::{
    greedy_longest_match, match_connectives, ConnectiveEntry, ConnectiveKind, ConnectiveLexicon, ConnectiveMatch,
    Polarity, WordSet,
};
pub use tables::{FreqTable, HypernymTable, NormScores, NormTable, PolarityLexicon, SensePos, SenseTable};

#[derive(Debug, Error)]
pub enum ResourceError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}:{line}: {message}", path.display())]
    Format { path: PathBuf, line: usize, message: String },
    #[error("{}:{line}: {field} score {value} for '{word}' is outside [1, 7]", path.display())]
    OutOfRange { path: PathBuf, line: usize, word: String, field: &'static str, value: f64 },
    #[error("{}:{line}: duplicate entry '{entry}'", path.display())]
    Duplicate { path: PathBuf, line: usize, entry: String },
    #[error("{}: no entries", path.display())]
    Empty { path: PathBuf },
    #[error("zipf needs a positive frequency, got {0}")]
    NonPositiveFrequency(f64),
}

/// Lowercase, NFC-normalized form used for every lexicon lookup.
pub fn normalize(s: &str) -> String {
    s.nfc().flat_map(char::to_lowercase).nfc().collect()
}

/// Zipf scale: `log10(fpm) + 3`.
pub fn zipf(fpm: f64) -> Result<f64, ResourceError> {
    if fpm > 0.0 && fpm.is_finite() {
        Ok(fpm.log10() + 3.0)
    } else {
        Err(ResourceError::NonPositiveFrequency(fpm))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ResourceKind {
    SimpleWords,
    ConcreteWords,
    EasyConjunctions,
    HardConjunctions,
    Connectives,
    DiscourseMarkers,
    Norms,
    Senses,
    Hypernyms,
    Polarity,
    AbstractNouns,
    FreqA,
    FreqB,
    FreqLegacy,
    Embeddings,
}

impl ResourceKind {
    pub const ALL: [ResourceKind; 15] = [
        ResourceKind::SimpleWords,
        ResourceKind::ConcreteWords,
        ResourceKind::EasyConjunctions,
        ResourceKind::HardConjunctions,
        ResourceKind::Connectives,
        ResourceKind::DiscourseMarkers,
        ResourceKind::Norms,
        ResourceKind::Senses,
        ResourceKind::Hypernyms,
        ResourceKind::Polarity,
        ResourceKind::AbstractNouns,
        ResourceKind::FreqA,
        ResourceKind::FreqB,
        ResourceKind::FreqLegacy,
        ResourceKind::Embeddings,
    ];

    /// Manifest key.
    pub fn key(self) -> &'static str {
        match self {
            ResourceKind::SimpleWords => "simple_words",
            ResourceKind::ConcreteWords => "concrete_words",
            ResourceKind::EasyConjunctions => "easy_conjunctions",
            ResourceKind::HardConjunctions => "hard_conjunctions",
            ResourceKind::Connectives => "connectives",
            ResourceKind::DiscourseMarkers => "discourse_markers",
            ResourceKind::Norms => "norms",
            ResourceKind::Senses => "senses",
            ResourceKind::Hypernyms => "hypernyms",
            ResourceKind::Polarity => "polarity",
            ResourceKind::AbstractNouns => "abstract_nouns",
            ResourceKind::FreqA => "freq_a",
            ResourceKind::FreqB => "freq_b",
            ResourceKind::FreqLegacy => "freq_legacy",
            ResourceKind::Embeddings => "embeddings",
        }
    }

    pub fn from_key(key: &str) -> Option<ResourceKind> {
        ResourceKind::ALL.iter().copied().find(|k| k.key() == key)
    }
}

impl fmt::Display for ResourceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Debug, Clone, Default)]
pub struct ResourceBundle {
    pub simple_words: Option<WordSet>,
    pub concrete_words: Option<WordSet>,
    pub easy_conjunctions: Option<WordSet>,
    pub hard_conjunctions: Option<WordSet>,
    pub connectives: Option<ConnectiveLexicon>,
    pub discourse_markers: Option<WordSet>,
    pub norms: Option<NormTable>,
    pub senses: Option<SenseTable>,
    pub hypernyms: Option<HypernymTable>,
    pub polarity: Option<PolarityLexicon>,
    pub abstract_nouns: Option<WordSet>,
    /// Frequency table whose part-of-speech assignment was done out of context.
    pub freq_a: Option<FreqTable>,
    /// Frequency table whose part-of-speech assignment was done in context.
    pub freq_b: Option<FreqTable>,
    /// Raw (non-normalised) frequencies from an older, smaller corpus.
    pub freq_legacy: Option<FreqTable>,
    pub embeddings: Option<EmbeddingModel>,
}

impl ResourceBundle {
    pub fn has(&self, kind: ResourceKind) -> bool {
        match kind {
            ResourceKind::SimpleWords => self.simple_words.is_some(),
            ResourceKind::ConcreteWords => self.concrete_words.is_some(),
            ResourceKind::EasyConjunctions => self.easy_conjunctions.is_some(),
            ResourceKind::HardConjunctions => self.hard_conjunctions.is_some(),
            ResourceKind::Connectives => self.connectives.is_some(),
            ResourceKind::DiscourseMarkers => self.discourse_markers.is_some(),
            ResourceKind::Norms => self.norms.is_some(),
            ResourceKind::Senses => self.senses.is_some(),
            ResourceKind::Hypernyms => self.hypernyms.is_some(),
            ResourceKind::Polarity => self.polarity.is_some(),
            ResourceKind::AbstractNouns => self.abstract_nouns.is_some(),
            ResourceKind::FreqA => self.freq_a.is_some(),
            ResourceKind::FreqB => self.freq_b.is_some(),
            ResourceKind::FreqLegacy => self.freq_legacy.is_some(),
            ResourceKind::Embeddings => self.embeddings.is_some(),
        }
    }

    pub fn load_resource(&mut self, kind: ResourceKind, path: &Path) -> Result<(), ResourceError> {
        match kind {
            ResourceKind::SimpleWords => self.simple_words = Some(WordSet::load(path)?),
            ResourceKind::ConcreteWords => self.concrete_words = Some(WordSet::load(path)?),
            ResourceKind::EasyConjunctions => self.easy_conjunctions = Some(WordSet::load(path)?),
            ResourceKind::HardConjunctions => self.hard_conjunctions = Some(WordSet::load(path)?),
            ResourceKind::Connectives => self.connectives = Some(ConnectiveLexicon::load(path)?),
            ResourceKind::DiscourseMarkers => self.discourse_markers = Some(WordSet::load(path)?),
            ResourceKind::Norms => self.norms = Some(NormTable::load(path)?),
            ResourceKind::Senses => self.senses = Some(SenseTable::load(path)?),
            ResourceKind::Hypernyms => self.hypernyms = Some(HypernymTable::load(path)?),
            ResourceKind::Polarity => self.polarity = Some(PolarityLexicon::load(path)?),
            ResourceKind::AbstractNouns => self.abstract_nouns = Some(WordSet::load(path)?),
            ResourceKind::FreqA => self.freq_a = Some(FreqTable::load(path)?),
            ResourceKind::FreqB => self.freq_b = Some(FreqTable::load(path)?),
            ResourceKind::FreqLegacy => self.freq_legacy = Some(FreqTable::load(path)?),
            ResourceKind::Embeddings => self.embeddings = Some(EmbeddingModel::load(path)?),
        }
        Ok(())
    }
}

/// Loads every resource listed in a `key=path` manifest.
pub fn load_bundle(manifest_path: impl AsRef<Path>) -> Result<ResourceBundle, ResourceError> {
    let manifest_path = manifest_path.as_ref();
    let text = read_to_string(manifest_path)?;
    let base = manifest_path.parent().unwrap_or_else(|| Path::new("."));
    let mut bundle = ResourceBundle::default();
    let mut seen = HashSet::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let format_err = |message: String| ResourceError::Format {
            path: manifest_path.to_path_buf(),
            line: i + 1,
            message,
        };
        let (key, value) = line.split_once('=').ok_or_else(|| format_err("expected key=path".into()))?;
        let key = key.trim();
        let kind = ResourceKind::from_key(key).ok_or_else(|| format_err(format!("unknown resource key '{key}'")))?;
        if !seen.insert(kind) {
            return Err(ResourceError::Duplicate {
                path: manifest_path.to_path_buf(),
                line: i + 1,
                entry: key.to_string(),
            });
        }
        bundle.load_resource(kind, &base.join(value.trim()))?;
    }
    Ok(bundle)
}

pub(crate) fn read_to_string(path: &Path) -> Result<String, ResourceError> {
    fs::read_to_string(path).map_err(|source| ResourceError::Io { path: path.to_path_buf(), source })
}

/// Non-empty, non-comment lines with their 1-based line numbers.
pub(crate) fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with("# "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn zipf_anchors() {
        assert_abs_diff_eq!(zipf(1.0).unwrap(), 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(zipf(1000.0).unwrap(), 6.0, epsilon = 1e-12);
        // log10(31.62) = 1.49996...
        assert_abs_diff_eq!(zipf(31.62).unwrap(), 4.5, epsilon = 1e-4);
    }

    #[test]
    fn zipf_rejects_non_positive() {
        assert!(zipf(0.0).is_err());
        assert!(zipf(-3.0).is_err());
        assert!(zipf(f64::NAN).is_err());
    }

    #[test]
    fn normalize_folds_case_and_composition() {
        assert_eq!(normalize("ÁGUA"), "água");
        assert_eq!(normalize("a\u{301}gua"), "água");
    }

    proptest::proptest! {
        #[test]
        fn zipf_strictly_monotone(a in 1e-6f64..1e6, b in 1e-6f64..1e6) {
            proptest::prop_assume!(a < b);
            proptest::prop_assert!(zipf(a).unwrap() < zipf(b).unwrap());
        }
    }
}
