use std::collections::HashMap;
use std::path::Path;

use super::lexicon::Polarity;
use super::{data_lines, normalize, read_to_string, ResourceError};
use crate::text::Pos;

fn columns<'a>(path: &Path, line: usize, raw: &'a str, expected: usize, shape: &str) -> Result<Vec<&'a str>, ResourceError> {
    let cols: Vec<&str> = raw.split('\t').map(str::trim).collect();
    if cols.len() != expected {
        return Err(ResourceError::Format {
            path: path.to_path_buf(),
            line,
            message: format!("expected {shape}, found {} columns", cols.len()),
        });
    }
    Ok(cols)
}

fn number<T: std::str::FromStr>(path: &Path, line: usize, s: &str) -> Result<T, ResourceError> {
    s.parse().map_err(|_| ResourceError::Format {
        path: path.to_path_buf(),
        line,
        message: format!("'{s}' is not a valid number"),
    })
}

fn insert_unique<K: std::hash::Hash + Eq, V>(
    map: &mut HashMap<K, V>,
    key: K,
    value: V,
    path: &Path,
    line: usize,
    shown: &str,
) -> Result<(), ResourceError> {
    if map.insert(key, value).is_some() {
        return Err(ResourceError::Duplicate { path: path.to_path_buf(), line, entry: shown.to_string() });
    }
    Ok(())
}

fn non_empty<K, V>(map: &HashMap<K, V>, path: &Path) -> Result<(), ResourceError> {
    if map.is_empty() {
        Err(ResourceError::Empty { path: path.to_path_buf() })
    } else {
        Ok(())
    }
}

/// Psycholinguistic norms on a 1–7 scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormScores {
    pub aoa: f64,
    pub concreteness: f64,
    pub familiarity: f64,
    pub imageability: f64,
}

#[derive(Debug, Clone, Default)]
pub struct NormTable {
    entries: HashMap<String, NormScores>,
}

impl NormTable {
    pub fn from_entries(entries: impl IntoIterator<Item = (String, NormScores)>) -> Self {
        NormTable { entries: entries.into_iter().map(|(w, s)| (normalize(&w), s)).collect() }
    }

    pub fn load(path: &Path) -> Result<Self, ResourceError> {
        let text = read_to_string(path)?;
        let mut entries = HashMap::new();
        for (line, raw) in data_lines(&text) {
            let cols = columns(path, line, raw, 5, "word<TAB>aoa<TAB>conc<TAB>fam<TAB>imag")?;
            let word = normalize(cols[0]);
            let mut scores = [0.0; 4];
            for (k, field) in ["aoa", "concreteness", "familiarity", "imageability"].into_iter().enumerate() {
                let value: f64 = number(path, line, cols[k + 1])?;
                if !(1.0..=7.0).contains(&value) {
                    return Err(ResourceError::OutOfRange { path: path.to_path_buf(), line, word, field, value });
                }
                scores[k] = value;
            }
            let scores = NormScores { aoa: scores[0], concreteness: scores[1], familiarity: scores[2], imageability: scores[3] };
            insert_unique(&mut entries, word.clone(), scores, path, line, &word)?;
        }
        non_empty(&entries, path)?;
        Ok(NormTable { entries })
    }

    pub fn get(&self, word: &str) -> Option<&NormScores> {
        self.entries.get(word)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Part-of-speech classes the sense inventory distinguishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SensePos {
    Noun,
    Verb,
    Adj,
    Adv,
}

impl SensePos {
    pub fn from_pos(pos: Pos) -> Option<Self> {
        match pos {
            Pos::Noun | Pos::Propn => Some(SensePos::Noun),
            Pos::Verb => Some(SensePos::Verb),
            Pos::Adj => Some(SensePos::Adj),
            Pos::Adv => Some(SensePos::Adv),
            _ => None,
        }
    }

    fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_uppercase().as_str() {
            "NOUN" | "N" => Some(SensePos::Noun),
            "VERB" | "V" => Some(SensePos::Verb),
            "ADJ" | "A" => Some(SensePos::Adj),
            "ADV" | "R" => Some(SensePos::Adv),
            _ => None,
        }
    }
}

/// Number of senses per `(word, pos)`.
#[derive(Debug, Clone, Default)]
pub struct SenseTable {
    senses: HashMap<(String, SensePos), u32>,
}

impl SenseTable {
    pub fn from_entries(entries: impl IntoIterator<Item = (String, SensePos, u32)>) -> Self {
        SenseTable { senses: entries.into_iter().map(|(w, p, c)| ((normalize(&w), p), c)).collect() }
    }

    pub fn load(path: &Path) -> Result<Self, ResourceError> {
        let text = read_to_string(path)?;
        let mut senses = HashMap::new();
        for (line, raw) in data_lines(&text) {
            let cols = columns(path, line, raw, 3, "word<TAB>pos<TAB>count")?;
            let pos = SensePos::parse(cols[1]).ok_or_else(|| ResourceError::Format {
                path: path.to_path_buf(),
                line,
                message: format!("unknown sense part of speech '{}'", cols[1]),
            })?;
            let count: u32 = number(path, line, cols[2])?;
            if count == 0 {
                return Err(ResourceError::Format {
                    path: path.to_path_buf(),
                    line,
                    message: "sense count must be at least 1".into(),
                });
            }
            let word = normalize(cols[0]);
            let shown = format!("{word} {}", cols[1]);
            insert_unique(&mut senses, (word, pos), count, path, line, &shown)?;
        }
        non_empty(&senses, path)?;
        Ok(SenseTable { senses })
    }

    pub fn get(&self, word: &str, pos: SensePos) -> Option<u32> {
        self.senses.get(&(word.to_string(), pos)).copied()
    }
}

/// Number of hypernyms per verb lemma.
#[derive(Debug, Clone, Default)]
pub struct HypernymTable {
    counts: HashMap<String, u32>,
}

impl HypernymTable {
    pub fn from_entries(entries: impl IntoIterator<Item = (String, u32)>) -> Self {
        HypernymTable { counts: entries.into_iter().map(|(w, c)| (normalize(&w), c)).collect() }
    }

    pub fn load(path: &Path) -> Result<Self, ResourceError> {
        let text = read_to_string(path)?;
        let mut counts = HashMap::new();
        for (line, raw) in data_lines(&text) {
            let cols = columns(path, line, raw, 2, "verb<TAB>hypernyms")?;
            let count: u32 = number(path, line, cols[1])?;
            let word = normalize(cols[0]);
            insert_unique(&mut counts, word.clone(), count, path, line, &word)?;
        }
        non_empty(&counts, path)?;
        Ok(HypernymTable { counts })
    }

    pub fn get(&self, verb: &str) -> Option<u32> {
        self.counts.get(verb).copied()
    }
}

#[derive(Debug, Clone, Default)]
pub struct PolarityLexicon {
    entries: HashMap<String, Polarity>,
}

impl PolarityLexicon {
    pub fn from_entries(entries: impl IntoIterator<Item = (String, Polarity)>) -> Self {
        PolarityLexicon { entries: entries.into_iter().map(|(w, p)| (normalize(&w), p)).collect() }
    }

    pub fn load(path: &Path) -> Result<Self, ResourceError> {
        let text = read_to_string(path)?;
        let mut entries = HashMap::new();
        for (line, raw) in data_lines(&text) {
            let cols = columns(path, line, raw, 2, "word<TAB>polarity")?;
            let polarity = Polarity::parse(cols[1]).ok_or_else(|| ResourceError::Format {
                path: path.to_path_buf(),
                line,
                message: format!("unknown polarity '{}'", cols[1]),
            })?;
            let word = normalize(cols[0]);
            insert_unique(&mut entries, word.clone(), polarity, path, line, &word)?;
        }
        non_empty(&entries, path)?;
        Ok(PolarityLexicon { entries })
    }

    pub fn get(&self, word: &str) -> Option<Polarity> {
        self.entries.get(word).copied()
    }
}

/// Word frequencies per million tokens. `# corpus = NAME` and
/// `# total_tokens = N` header comments are optional.
#[derive(Debug, Clone, Default)]
pub struct FreqTable {
    pub corpus_name: String,
    pub total_tokens: Option<u64>,
    entries: HashMap<String, f64>,
}

impl FreqTable {
    pub fn from_entries(corpus_name: impl Into<String>, entries: impl IntoIterator<Item = (String, f64)>) -> Self {
        FreqTable {
            corpus_name: corpus_name.into(),
            total_tokens: None,
            entries: entries.into_iter().map(|(w, f)| (normalize(&w), f)).collect(),
        }
    }

    pub fn load(path: &Path) -> Result<Self, ResourceError> {
        let text = read_to_string(path)?;
        let mut table = FreqTable {
            corpus_name: path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default(),
            ..FreqTable::default()
        };
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            if let Some(header) = raw.strip_prefix("# ") {
                match header.split_once('=').map(|(k, v)| (k.trim(), v.trim())) {
                    Some(("corpus", v)) => table.corpus_name = v.to_string(),
                    Some(("total_tokens", v)) => table.total_tokens = Some(number(path, line, v)?),
                    _ => {}
                }
                continue;
            }
            if raw.trim().is_empty() {
                continue;
            }
            let cols = columns(path, line, raw, 2, "word<TAB>fpm")?;
            let fpm: f64 = number(path, line, cols[1])?;
            if !(fpm > 0.0 && fpm.is_finite()) {
                return Err(ResourceError::Format {
                    path: path.to_path_buf(),
                    line,
                    message: format!("frequency must be positive, got {fpm}"),
                });
            }
            let word = normalize(cols[0]);
            insert_unique(&mut table.entries, word.clone(), fpm, path, line, &word)?;
        }
        non_empty(&table.entries, path)?;
        Ok(table)
    }

    pub fn get(&self, word: &str) -> Option<f64> {
        self.entries.get(word).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
