//! Connective densities. Occurrences come from greedy longest matching of
//! the lexicon over each sentence's lowercase tokens; every ratio is per
//! word.

use super::{ratio_usize, Context, Emitted};
use crate::resources::{ConnectiveKind, ConnectiveLexicon, Polarity, ResourceBundle};
use crate::text::{Document, Pos};

pub const NEGATION_WORDS: [&str; 5] = ["não", "nem", "nunca", "jamais", "tampouco"];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConnectiveRatios {
    /// Tokens covered by any connective.
    pub all: f64,
    pub additive_pos: f64,
    pub additive_neg: f64,
    pub causal_pos: f64,
    pub causal_neg: f64,
    pub logical_pos: f64,
    pub logical_neg: f64,
    pub and: f64,
    pub or: f64,
    /// `se` as a conjunction (pronoun uses are excluded when tagged).
    pub if_: f64,
    pub negation: f64,
    /// Markers listed under more than one connective kind.
    pub ambiguous: f64,
}

/// `None` without a connective lexicon or without words.
pub fn connective_ratios(doc: &Document, bundle: &ResourceBundle) -> Option<ConnectiveRatios> {
    compute(&Context::new(doc, bundle))
}

/// Occurrences per `(kind, polarity)` sense, plus covered token count.
struct Tally {
    covered: usize,
    senses: Vec<((ConnectiveKind, Polarity), usize)>,
}

fn tally(ctx: &Context, lexicon: &ConnectiveLexicon) -> Tally {
    let mut t = Tally { covered: 0, senses: Vec::new() };
    for s in &ctx.sentences {
        for m in lexicon.match_tokens(&s.lower) {
            t.covered += m.len;
            for sense in m.senses {
                match t.senses.iter_mut().find(|(k, _)| *k == sense) {
                    Some((_, n)) => *n += 1,
                    None => t.senses.push((sense, 1)),
                }
            }
        }
    }
    t
}

impl Tally {
    fn count(&self, kind: ConnectiveKind, polarity: Polarity) -> usize {
        self.senses.iter().find(|(k, _)| *k == (kind, polarity)).map_or(0, |(_, n)| *n)
    }
}

fn compute(ctx: &Context) -> Option<ConnectiveRatios> {
    let lexicon = ctx.bundle.connectives.as_ref()?;
    let words = ctx.word_count();
    let per_word = |n: usize| ratio_usize(n, words);
    let t = tally(ctx, lexicon);
    let surface = |form: &str, exclude_pron: bool| {
        ctx.words().filter(|w| w.lower == form && !(exclude_pron && w.pos() == Pos::Pron)).count()
    };
    let negations = ctx.words().filter(|w| NEGATION_WORDS.contains(&w.lower)).count();
    let ambiguous: usize = ctx
        .sentences
        .iter()
        .map(|s| match ctx.bundle.discourse_markers.as_ref() {
            Some(markers) => markers
                .matches(&s.lower)
                .into_iter()
                .filter(|&(start, len)| lexicon.is_ambiguous(&s.lower[start..start + len].join(" ")))
                .count(),
            None => lexicon.match_tokens(&s.lower).iter().filter(|m| m.senses.len() > 1).count(),
        })
        .sum();
    use ConnectiveKind::*;
    use Polarity::*;
    Some(ConnectiveRatios {
        all: per_word(t.covered)?,
        additive_pos: per_word(t.count(Additive, Positive))?,
        additive_neg: per_word(t.count(Additive, Negative))?,
        causal_pos: per_word(t.count(Causal, Positive))?,
        causal_neg: per_word(t.count(Causal, Negative))?,
        logical_pos: per_word(t.count(Logical, Positive))?,
        logical_neg: per_word(t.count(Logical, Negative))?,
        and: per_word(surface("e", false))?,
        or: per_word(surface("ou", false))?,
        if_: per_word(surface("se", true))?,
        negation: per_word(negations)?,
        ambiguous: per_word(ambiguous)?,
    })
}

/// Positive and negative temporal connectives per word.
pub(crate) fn temporal_ratios(ctx: &Context) -> (Option<f64>, Option<f64>) {
    let Some(lexicon) = ctx.bundle.connectives.as_ref() else {
        return (None, None);
    };
    let t = tally(ctx, lexicon);
    let words = ctx.word_count();
    (
        ratio_usize(t.count(ConnectiveKind::Temporal, Polarity::Positive), words),
        ratio_usize(t.count(ConnectiveKind::Temporal, Polarity::Negative), words),
    )
}

pub(crate) fn emit(ctx: &Context) -> Emitted {
    let r = compute(ctx);
    let get = |f: fn(&ConnectiveRatios) -> f64| r.as_ref().map(f);
    vec![
        ("connectives_ratio", get(|r| r.all)),
        ("additive_pos_ratio", get(|r| r.additive_pos)),
        ("additive_neg_ratio", get(|r| r.additive_neg)),
        ("causal_pos_ratio", get(|r| r.causal_pos)),
        ("causal_neg_ratio", get(|r| r.causal_neg)),
        ("logical_pos_ratio", get(|r| r.logical_pos)),
        ("logical_neg_ratio", get(|r| r.logical_neg)),
        ("and_ratio", get(|r| r.and)),
        ("or_ratio", get(|r| r.or)),
        ("if_ratio", get(|r| r.if_)),
        ("negation_ratio", get(|r| r.negation)),
        ("ambiguous_discourse_markers_ratio", get(|r| r.ambiguous)),
    ]
}
