use std::collections::BTreeMap;
use std::fmt;

use super::tree::ConstituencyNode;
use super::TextError;

/// Coarse part-of-speech tags (the universal tag set).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pos {
    Noun,
    Propn,
    Verb,
    Aux,
    Adj,
    Adv,
    Pron,
    Det,
    Adp,
    Cconj,
    Sconj,
    Num,
    Part,
    Intj,
    Punct,
    Sym,
    X,
}

impl Pos {
    pub const ALL: [Pos; 17] = [
        Pos::Noun,
        Pos::Propn,
        Pos::Verb,
        Pos::Aux,
        Pos::Adj,
        Pos::Adv,
        Pos::Pron,
        Pos::Det,
        Pos::Adp,
        Pos::Cconj,
        Pos::Sconj,
        Pos::Num,
        Pos::Part,
        Pos::Intj,
        Pos::Punct,
        Pos::Sym,
        Pos::X,
    ];

    pub fn from_tag(tag: &str) -> Option<Pos> {
        Pos::ALL.iter().copied().find(|p| p.tag() == tag)
    }

    pub fn tag(self) -> &'static str {
        match self {
            Pos::Noun => "NOUN",
            Pos::Propn => "PROPN",
            Pos::Verb => "VERB",
            Pos::Aux => "AUX",
            Pos::Adj => "ADJ",
            Pos::Adv => "ADV",
            Pos::Pron => "PRON",
            Pos::Det => "DET",
            Pos::Adp => "ADP",
            Pos::Cconj => "CCONJ",
            Pos::Sconj => "SCONJ",
            Pos::Num => "NUM",
            Pos::Part => "PART",
            Pos::Intj => "INTJ",
            Pos::Punct => "PUNCT",
            Pos::Sym => "SYM",
            Pos::X => "X",
        }
    }

    /// Nouns, proper nouns, verbs, adjectives and adverbs. Auxiliaries are
    /// function words.
    pub fn is_content(self) -> bool {
        matches!(self, Pos::Noun | Pos::Propn | Pos::Verb | Pos::Adj | Pos::Adv)
    }

    pub fn is_punctuation(self) -> bool {
        matches!(self, Pos::Punct | Pos::Sym)
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    /// 1-based position in the sentence.
    pub index: usize,
    pub surface: String,
    pub lemma: Option<String>,
    pub pos: Pos,
    pub morph: BTreeMap<String, String>,
    /// Sentence-local head index, 0 for the root.
    pub head: usize,
    pub deprel: String,
}

impl Token {
    pub fn new(index: usize, surface: impl Into<String>, pos: Pos) -> Self {
        Token {
            index,
            surface: surface.into(),
            lemma: None,
            pos,
            morph: BTreeMap::new(),
            head: 0,
            deprel: String::new(),
        }
    }

    /// Anything that is not punctuation or a symbol.
    pub fn is_word(&self) -> bool {
        !self.pos.is_punctuation()
    }

    pub fn is_content(&self) -> bool {
        self.pos.is_content()
    }

    pub fn feature(&self, name: &str) -> Option<&str> {
        self.morph.get(name).map(String::as_str)
    }

    pub fn lemma_or_surface(&self) -> &str {
        self.lemma.as_deref().unwrap_or(&self.surface)
    }

    /// Relation without its subtype (`acl:relcl` -> `acl`).
    pub fn base_deprel(&self) -> &str {
        self.deprel.split(':').next().unwrap_or("")
    }

    pub fn is_finite_verb(&self) -> bool {
        matches!(self.pos, Pos::Verb | Pos::Aux)
            && match self.feature("VerbForm") {
                Some(form) => form == "Fin",
                None => self.feature("Mood").is_some(),
            }
    }
}

/// Which tokens the leaves of a constituency tree stand for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeafMode {
    AllTokens,
    NonPunctuation,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Tree {
    pub root: ConstituencyNode,
    pub mode: LeafMode,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sentence {
    pub tokens: Vec<Token>,
    pub tree: Option<Tree>,
}

impl Sentence {
    pub fn new(tokens: Vec<Token>) -> Self {
        Sentence { tokens, tree: None }
    }

    /// Token at a 1-based index.
    pub fn token(&self, index: usize) -> Option<&Token> {
        index.checked_sub(1).and_then(|i| self.tokens.get(i))
    }

    pub fn root(&self) -> Option<&Token> {
        self.tokens.iter().find(|t| t.head == 0)
    }

    pub fn dependents(&self, head: usize) -> impl Iterator<Item = &Token> {
        self.tokens.iter().filter(move |t| t.head == head)
    }

    pub fn words(&self) -> impl Iterator<Item = &Token> {
        self.tokens.iter().filter(|t| t.is_word())
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.tokens.is_empty() {
            return Err("sentence has no tokens".into());
        }
        let n = self.tokens.len();
        let mut roots = 0;
        for (i, t) in self.tokens.iter().enumerate() {
            if t.index != i + 1 {
                return Err(format!("token ids must run 1..{n}, found {} at position {}", t.index, i + 1));
            }
            if t.head > n {
                return Err(format!("token {} has head {} outside 0..={n}", t.index, t.head));
            }
            if t.head == t.index {
                return Err(format!("token {} is its own head", t.index));
            }
            if t.head == 0 {
                roots += 1;
            }
        }
        if roots != 1 {
            return Err(format!("expected exactly one root, found {roots}"));
        }
        if let Some(tree) = &self.tree {
            let leaves = tree.root.leaf_tokens();
            let expected: Vec<usize> = match tree.mode {
                LeafMode::AllTokens => self.tokens.iter().map(|t| t.index).collect(),
                LeafMode::NonPunctuation => self.words().map(|t| t.index).collect(),
            };
            if leaves != expected {
                return Err("constituency leaves do not line up with the tokens".into());
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Paragraph {
    pub sentences: Vec<Sentence>,
    pub is_heading: bool,
}

/// Annotation layers present in a document; metrics needing an absent
/// layer evaluate to missing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Annotation {
    pub pos: bool,
    pub deps: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub id: String,
    pub paragraphs: Vec<Paragraph>,
    pub metadata: BTreeMap<String, String>,
    pub annotation: Annotation,
}

impl Document {
    pub fn sentences(&self) -> impl Iterator<Item = &Sentence> {
        self.paragraphs.iter().flat_map(|p| p.sentences.iter())
    }

    pub fn sentence_count(&self) -> usize {
        self.paragraphs.iter().map(|p| p.sentences.len()).sum()
    }

    pub fn validate(&self) -> Result<(), TextError> {
        if self.id.is_empty() {
            return Err(TextError::Invalid { line: 0, message: "document id is empty".into() });
        }
        if self.paragraphs.is_empty() {
            return Err(TextError::Empty);
        }
        for p in &self.paragraphs {
            if p.sentences.is_empty() {
                return Err(TextError::Invalid { line: 0, message: "empty paragraph".into() });
            }
            for s in &p.sentences {
                s.validate().map_err(|message| TextError::Invalid { line: 0, message })?;
            }
        }
        Ok(())
    }
}
