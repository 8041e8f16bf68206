use std::ops::Range;

use crate::resources::{normalize, ResourceBundle};
use crate::text::{Document, Pos, Sentence, Token};

/// A document with the normalized forms every family needs, computed once.
pub(crate) struct Context<'a> {
    pub doc: &'a Document,
    pub bundle: &'a ResourceBundle,
    pub sentences: Vec<SentenceView<'a>>,
    /// Sentence index range of each paragraph.
    pub paragraphs: Vec<Range<usize>>,
}

pub(crate) struct SentenceView<'a> {
    pub sentence: &'a Sentence,
    /// Normalized surface of every token, punctuation included.
    pub lower: Vec<String>,
    /// Normalized lemma, falling back to the surface.
    pub lemmas: Vec<String>,
}

#[derive(Clone, Copy)]
pub(crate) struct WordRef<'a> {
    pub token: &'a Token,
    pub lower: &'a str,
    pub lemma: &'a str,
}

impl<'a> WordRef<'a> {
    pub fn pos(&self) -> Pos {
        self.token.pos
    }

    pub fn is_content(&self) -> bool {
        self.token.is_content()
    }

    /// Lemma first, then surface.
    pub fn lookup_lemma_first<T>(&self, f: impl Fn(&str) -> Option<T>) -> Option<T> {
        f(self.lemma).or_else(|| f(self.lower))
    }

    /// Surface first, then lemma.
    pub fn lookup_surface_first<T>(&self, f: impl Fn(&str) -> Option<T>) -> Option<T> {
        f(self.lower).or_else(|| f(self.lemma))
    }
}

impl<'a> SentenceView<'a> {
    /// All tokens, punctuation included.
    pub fn tokens(&self) -> impl Iterator<Item = WordRef<'_>> + '_ {
        self.sentence.tokens.iter().enumerate().map(move |(i, t)| WordRef {
            token: t,
            lower: &self.lower[i],
            lemma: &self.lemmas[i],
        })
    }

    /// Tokens that are not punctuation or symbols.
    pub fn words(&self) -> impl Iterator<Item = WordRef<'_>> + '_ {
        self.tokens().filter(|w| w.token.is_word())
    }

    pub fn word_count(&self) -> usize {
        self.sentence.tokens.iter().filter(|t| t.is_word()).count()
    }

    pub fn count_words(&self, pred: impl Fn(&Token) -> bool) -> usize {
        self.sentence.tokens.iter().filter(|t| t.is_word() && pred(t)).count()
    }
}

impl<'a> Context<'a> {
    pub fn new(doc: &'a Document, bundle: &'a ResourceBundle) -> Self {
        let mut sentences = Vec::new();
        let mut paragraphs = Vec::new();
        for paragraph in &doc.paragraphs {
            let start = sentences.len();
            for sentence in &paragraph.sentences {
                let lower: Vec<String> = sentence.tokens.iter().map(|t| normalize(&t.surface)).collect();
                let lemmas = sentence
                    .tokens
                    .iter()
                    .zip(&lower)
                    .map(|(t, l)| match &t.lemma {
                        Some(lemma) => normalize(lemma),
                        None => l.clone(),
                    })
                    .collect();
                sentences.push(SentenceView { sentence, lower, lemmas });
            }
            paragraphs.push(start..sentences.len());
        }
        Context { doc, bundle, sentences, paragraphs }
    }

    pub fn words(&self) -> impl Iterator<Item = WordRef<'_>> + '_ {
        self.sentences.iter().flat_map(|s| s.words())
    }

    pub fn tokens(&self) -> impl Iterator<Item = WordRef<'_>> + '_ {
        self.sentences.iter().flat_map(|s| s.tokens())
    }

    pub fn word_count(&self) -> usize {
        self.sentences.iter().map(SentenceView::word_count).sum()
    }

    pub fn count_words(&self, pred: impl Fn(&Token) -> bool + Copy) -> usize {
        self.sentences.iter().map(|s| s.count_words(pred)).sum()
    }
}

/// `PronType=Prs`, or a pronoun carrying `Person` when `PronType` is absent.
pub(crate) fn is_personal_pronoun(t: &Token) -> bool {
    t.pos == Pos::Pron
        && match t.feature("PronType") {
            Some(kind) => kind == "Prs",
            None => t.feature("Person").is_some(),
        }
}

pub(crate) fn has_pron_type(t: &Token, kind: &str) -> bool {
    t.pos == Pos::Pron && t.feature("PronType") == Some(kind)
}

pub(crate) fn person(t: &Token) -> Option<u8> {
    match t.feature("Person")? {
        "1" => Some(1),
        "2" => Some(2),
        "3" => Some(3),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_conllu_str;

    const DOC: &str = "# newpar\n\
1\tO\to\tDET\t_\t_\t2\tdet\t_\t_\n\
2\tGato\tgato\tNOUN\t_\t_\t3\tnsubj\t_\t_\n\
3\tdorme\tdormir\tVERB\t_\tMood=Ind|VerbForm=Fin\t0\troot\t_\t_\n\
4\t.\t.\tPUNCT\t_\t_\t3\tpunct\t_\t_\n\
\n\
# newpar\n\
1\tEle\tele\tPRON\t_\tPerson=3|PronType=Prs\t2\tnsubj\t_\t_\n\
2\tacorda\tacordar\tVERB\t_\t_\t0\troot\t_\t_\n\n";

    #[test]
    fn views_and_paragraph_ranges() {
        let doc = parse_conllu_str(DOC, "d").unwrap();
        let bundle = ResourceBundle::default();
        let ctx = Context::new(&doc, &bundle);
        assert_eq!(ctx.paragraphs, vec![0..1, 1..2]);
        assert_eq!(ctx.word_count(), 5);
        let first: Vec<&str> = ctx.sentences[0].words().map(|w| w.lower).collect();
        assert_eq!(first, ["o", "gato", "dorme"]);
        let lemmas: Vec<&str> = ctx.sentences[0].words().map(|w| w.lemma).collect();
        assert_eq!(lemmas, ["o", "gato", "dormir"]);
        let ele = ctx.sentences[1].words().next().unwrap();
        assert!(is_personal_pronoun(ele.token));
        assert_eq!(person(ele.token), Some(3));
    }
}
