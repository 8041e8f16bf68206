//! Polarity, ambiguity (sense counts), verb hypernyms and noun classes.
//! Lexicon lookups use the lemma first, then the surface; uncovered words
//! are excluded from the averages.

use super::{mean, ratio_usize, Context, Emitted};
use crate::resources::{Polarity, ResourceBundle, SensePos};
use crate::text::{Document, Pos};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemanticWordInfo {
    pub positive_ratio: Option<f64>,
    pub negative_ratio: Option<f64>,
    pub content_ambiguity: Option<f64>,
    pub noun_ambiguity: Option<f64>,
    pub adjective_ambiguity: Option<f64>,
    pub verb_ambiguity: Option<f64>,
    pub adverb_ambiguity: Option<f64>,
    /// Mean over sentences of the mean hypernym count of their verbs.
    pub verb_hypernyms: Option<f64>,
    pub abstract_noun_ratio: Option<f64>,
    pub abstract_nouns_per_sentence: Option<f64>,
    /// Proper nouns over nouns plus proper nouns.
    pub proper_noun_ratio: Option<f64>,
}

pub fn semantic_word_info(doc: &Document, bundle: &ResourceBundle) -> SemanticWordInfo {
    compute(&Context::new(doc, bundle))
}

fn compute(ctx: &Context) -> SemanticWordInfo {
    let b = ctx.bundle;
    let words = ctx.word_count();

    let polarity_ratio = |wanted: Polarity| {
        let lexicon = b.polarity.as_ref()?;
        let hits = ctx.words().filter(|w| w.lookup_lemma_first(|f| lexicon.get(f)) == Some(wanted)).count();
        ratio_usize(hits, words)
    };

    let ambiguity = |class: Option<SensePos>| {
        let senses = b.senses.as_ref()?;
        let counts: Vec<f64> = ctx
            .words()
            .filter(|w| w.is_content())
            .filter_map(|w| {
                let pos = SensePos::from_pos(w.pos())?;
                if class.is_some_and(|c| c != pos) {
                    return None;
                }
                w.lookup_lemma_first(|f| senses.get(f, pos)).map(f64::from)
            })
            .collect();
        mean(&counts)
    };

    let verb_hypernyms = b.hypernyms.as_ref().and_then(|table| {
        let per_sentence: Vec<f64> = ctx
            .sentences
            .iter()
            .filter_map(|s| {
                let counts: Vec<f64> = s
                    .words()
                    .filter(|w| w.pos() == Pos::Verb)
                    .filter_map(|w| w.lookup_lemma_first(|f| table.get(f)).map(f64::from))
                    .collect();
                mean(&counts)
            })
            .collect();
        mean(&per_sentence)
    });

    let (abstract_noun_ratio, abstract_nouns_per_sentence) = match b.abstract_nouns.as_ref() {
        Some(list) => {
            let mut total = (0, 0);
            let mut per_sentence = Vec::new();
            for s in &ctx.sentences {
                let nouns: Vec<_> = s.words().filter(|w| w.pos() == Pos::Noun).collect();
                let hits = nouns.iter().filter(|w| list.contains(w.lemma) || list.contains(w.lower)).count();
                total.0 += hits;
                total.1 += nouns.len();
                per_sentence.extend(ratio_usize(hits, nouns.len()));
            }
            (ratio_usize(total.0, total.1), mean(&per_sentence))
        }
        None => (None, None),
    };

    let nouns = ctx.count_words(|t| t.pos == Pos::Noun);
    let proper = ctx.count_words(|t| t.pos == Pos::Propn);

    SemanticWordInfo {
        positive_ratio: polarity_ratio(Polarity::Positive),
        negative_ratio: polarity_ratio(Polarity::Negative),
        content_ambiguity: ambiguity(None),
        noun_ambiguity: ambiguity(Some(SensePos::Noun)),
        adjective_ambiguity: ambiguity(Some(SensePos::Adj)),
        verb_ambiguity: ambiguity(Some(SensePos::Verb)),
        adverb_ambiguity: ambiguity(Some(SensePos::Adv)),
        verb_hypernyms,
        abstract_noun_ratio,
        abstract_nouns_per_sentence,
        proper_noun_ratio: ratio_usize(proper, nouns + proper),
    }
}

pub(crate) fn emit(ctx: &Context) -> Emitted {
    let s = compute(ctx);
    vec![
        ("positive_words_ratio", s.positive_ratio),
        ("negative_words_ratio", s.negative_ratio),
        ("content_words_ambiguity", s.content_ambiguity),
        ("nouns_ambiguity", s.noun_ambiguity),
        ("adjectives_ambiguity", s.adjective_ambiguity),
        ("verbs_ambiguity", s.verb_ambiguity),
        ("adverbs_ambiguity", s.adverb_ambiguity),
        ("hypernyms_verbs", s.verb_hypernyms),
        ("abstract_nouns_ratio", s.abstract_noun_ratio),
        ("abstract_nouns_per_sentence", s.abstract_nouns_per_sentence),
        ("proper_noun_ratio", s.proper_noun_ratio),
    ]
}
