use std::collections::{HashMap, HashSet};
use std::fmt;
use std::path::Path;

use super::{data_lines, normalize, read_to_string, ResourceError};
use crate::text::Sentence;

/// A named set of lowercase entries. Entries may span several tokens,
/// written space-joined (`no entanto`).
#[derive(Debug, Clone)]
pub struct WordSet {
    pub name: String,
    entries: HashSet<String>,
    max_tokens: usize,
}

impl WordSet {
    pub fn new(name: impl Into<String>, entries: impl IntoIterator<Item = impl AsRef<str>>) -> Self {
        let entries: HashSet<String> = entries.into_iter().map(|e| canonical_phrase(e.as_ref())).collect();
        let max_tokens = entries.iter().map(|e| e.split(' ').count()).max().unwrap_or(0);
        WordSet { name: name.into(), entries, max_tokens }
    }

    pub fn load(path: &Path) -> Result<Self, ResourceError> {
        let text = read_to_string(path)?;
        let mut entries = HashSet::new();
        for (line, raw) in data_lines(&text) {
            let entry = canonical_phrase(raw);
            if !entries.insert(entry.clone()) {
                return Err(ResourceError::Duplicate { path: path.to_path_buf(), line, entry });
            }
        }
        if entries.is_empty() {
            return Err(ResourceError::Empty { path: path.to_path_buf() });
        }
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        Ok(WordSet::new(name, entries))
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries.contains(word) || self.entries.contains(&normalize(word))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_tokens(&self) -> usize {
        self.max_tokens
    }

    /// Non-overlapping longest matches over normalized tokens, as `(start, len)`.
    pub fn matches(&self, tokens: &[String]) -> Vec<(usize, usize)> {
        greedy_longest_match(tokens, self.max_tokens, |phrase| self.entries.contains(phrase))
    }
}

fn canonical_phrase(s: &str) -> String {
    normalize(s).split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Left-to-right greedy matching: at each position the longest phrase
/// (up to `max_len` tokens) accepted by `known` wins, and scanning resumes
/// after it.
pub fn greedy_longest_match(tokens: &[String], max_len: usize, known: impl Fn(&str) -> bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        let longest = (1..=max_len.min(tokens.len() - i)).rev().find(|&len| known(&tokens[i..i + len].join(" ")));
        match longest {
            Some(len) => {
                out.push((i, len));
                i += len;
            }
            None => i += 1,
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConnectiveKind {
    Additive,
    Causal,
    Logical,
    Temporal,
}

impl ConnectiveKind {
    pub const ALL: [ConnectiveKind; 4] =
        [ConnectiveKind::Additive, ConnectiveKind::Causal, ConnectiveKind::Logical, ConnectiveKind::Temporal];

    fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "additive" => Some(ConnectiveKind::Additive),
            "causal" => Some(ConnectiveKind::Causal),
            "logical" => Some(ConnectiveKind::Logical),
            "temporal" => Some(ConnectiveKind::Temporal),
            _ => None,
        }
    }
}

impl fmt::Display for ConnectiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConnectiveKind::Additive => "additive",
            ConnectiveKind::Causal => "causal",
            ConnectiveKind::Logical => "logical",
            ConnectiveKind::Temporal => "temporal",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Positive,
    Negative,
}

impl Polarity {
    pub(crate) fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "positive" | "pos" | "+" => Some(Polarity::Positive),
            "negative" | "neg" | "-" => Some(Polarity::Negative),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectiveEntry {
    pub form: String,
    pub kind: ConnectiveKind,
    pub polarity: Polarity,
}

#[derive(Debug, Clone, Default)]
pub struct ConnectiveLexicon {
    entries: Vec<ConnectiveEntry>,
    by_form: HashMap<String, Vec<(ConnectiveKind, Polarity)>>,
    max_tokens: usize,
}

impl ConnectiveLexicon {
    /// Fails on a duplicate `(form, kind)` pair, reporting the entry index.
    pub fn new(entries: Vec<ConnectiveEntry>) -> Result<Self, (usize, ConnectiveEntry)> {
        let mut lex = ConnectiveLexicon::default();
        for (i, mut e) in entries.into_iter().enumerate() {
            e.form = canonical_phrase(&e.form);
            let senses = lex.by_form.entry(e.form.clone()).or_default();
            if senses.iter().any(|(k, _)| *k == e.kind) {
                return Err((i, e));
            }
            senses.push((e.kind, e.polarity));
            lex.max_tokens = lex.max_tokens.max(e.form.split(' ').count());
            lex.entries.push(e);
        }
        Ok(lex)
    }

    pub fn load(path: &Path) -> Result<Self, ResourceError> {
        let text = read_to_string(path)?;
        let mut entries = Vec::new();
        let mut lines = Vec::new();
        for (line, raw) in data_lines(&text) {
            let fmt_err = |message: String| ResourceError::Format { path: path.to_path_buf(), line, message };
            let cols: Vec<&str> = raw.split('\t').collect();
            if cols.len() != 3 {
                return Err(fmt_err(format!("expected form<TAB>kind<TAB>polarity, found {} columns", cols.len())));
            }
            let kind = ConnectiveKind::parse(cols[1].trim())
                .ok_or_else(|| fmt_err(format!("unknown connective kind '{}'", cols[1])))?;
            let polarity =
                Polarity::parse(cols[2].trim()).ok_or_else(|| fmt_err(format!("unknown polarity '{}'", cols[2])))?;
            entries.push(ConnectiveEntry { form: cols[0].to_string(), kind, polarity });
            lines.push(line);
        }
        if entries.is_empty() {
            return Err(ResourceError::Empty { path: path.to_path_buf() });
        }
        ConnectiveLexicon::new(entries).map_err(|(i, e)| ResourceError::Duplicate {
            path: path.to_path_buf(),
            line: lines[i],
            entry: format!("{} ({})", e.form, e.kind),
        })
    }

    pub fn entries(&self) -> &[ConnectiveEntry] {
        &self.entries
    }

    pub fn senses(&self, form: &str) -> &[(ConnectiveKind, Polarity)] {
        self.by_form.get(form).map(Vec::as_slice).unwrap_or(&[])
    }

    /// A form listed under more than one kind.
    pub fn is_ambiguous(&self, form: &str) -> bool {
        self.senses(form).len() > 1
    }

    pub fn max_tokens(&self) -> usize {
        self.max_tokens
    }

    pub fn match_tokens(&self, tokens: &[String]) -> Vec<ConnectiveMatch> {
        greedy_longest_match(tokens, self.max_tokens, |p| self.by_form.contains_key(p))
            .into_iter()
            .map(|(start, len)| {
                let form = tokens[start..start + len].join(" ");
                let senses = self.by_form[&form].clone();
                ConnectiveMatch { start, len, form, senses }
            })
            .collect()
    }
}

/// A matched connective occurrence: `len` tokens from 0-based `start`.
/// Forms listed under several kinds carry every `(kind, polarity)` sense.
#[derive(Debug, Clone, PartialEq)]
pub struct ConnectiveMatch {
    pub start: usize,
    pub len: usize,
    pub form: String,
    pub senses: Vec<(ConnectiveKind, Polarity)>,
}

pub fn match_connectives(sentence: &Sentence, lexicon: &ConnectiveLexicon) -> Vec<ConnectiveMatch> {
    let tokens: Vec<String> = sentence.tokens.iter().map(|t| normalize(&t.surface)).collect();
    lexicon.match_tokens(&tokens)
}
