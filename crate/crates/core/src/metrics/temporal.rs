//! Tense and mood shares over finite verbs, compound tenses and temporal
//! connectives.

use std::collections::BTreeSet;

use super::connectives::temporal_ratios;
use super::{ratio_usize, Context, Emitted};
use crate::resources::ResourceBundle;
use crate::text::{Document, Pos, Sentence, Token};

pub const COMPOUND_AUXILIARIES: [&str; 4] = ["ter", "haver", "ser", "estar"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TenseMood {
    IndicativePresent,
    /// Perfective past and pluperfect.
    IndicativePreterite,
    IndicativeImperfect,
    IndicativeFuture,
    Conditional,
    Subjunctive,
    Imperative,
}

/// Bucket of a finite verb from its `Mood` and `Tense` features.
pub fn tense_mood(t: &Token) -> Option<TenseMood> {
    match (t.feature("Mood")?, t.feature("Tense")) {
        ("Ind", Some("Pres")) => Some(TenseMood::IndicativePresent),
        ("Ind", Some("Past" | "Pqp")) => Some(TenseMood::IndicativePreterite),
        ("Ind", Some("Imp")) => Some(TenseMood::IndicativeImperfect),
        ("Ind", Some("Fut")) => Some(TenseMood::IndicativeFuture),
        ("Cnd", _) => Some(TenseMood::Conditional),
        ("Sub", _) => Some(TenseMood::Subjunctive),
        ("Imp", _) => Some(TenseMood::Imperative),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TemporalProfile {
    pub finite_verbs: usize,
    pub present: Option<f64>,
    pub preterite: Option<f64>,
    pub imperfect: Option<f64>,
    pub future: Option<f64>,
    pub conditional: Option<f64>,
    pub subjunctive: Option<f64>,
    pub imperative: Option<f64>,
    pub aux_participle: Option<f64>,
    /// Distinct `(Mood, Tense)` pairs among finite verbs.
    pub variety: Option<usize>,
    pub temporal_pos: Option<f64>,
    pub temporal_neg: Option<f64>,
}

pub fn temporal_profile(doc: &Document, bundle: &ResourceBundle) -> TemporalProfile {
    compute(&Context::new(doc, bundle))
}

fn is_participle(t: &Token) -> bool {
    matches!(t.pos, Pos::Verb | Pos::Aux | Pos::Adj) && t.feature("VerbForm") == Some("Part")
}

/// A finite `ter`/`haver`/`ser`/`estar` whose head or next word is a participle.
fn is_compound_auxiliary(s: &Sentence, t: &Token) -> bool {
    let lemma = t.lemma_or_surface().to_lowercase();
    if !t.is_finite_verb() || !COMPOUND_AUXILIARIES.contains(&lemma.as_str()) {
        return false;
    }
    let governs = s.token(t.head).is_some_and(is_participle);
    let next = s.tokens[t.index..].iter().find(|n| n.is_word()).is_some_and(is_participle);
    governs || next
}

fn compute(ctx: &Context) -> TemporalProfile {
    let mut finite = 0;
    let mut buckets = [0usize; 7];
    let mut compound = 0;
    let mut combos = BTreeSet::new();
    for s in &ctx.sentences {
        for t in s.sentence.tokens.iter().filter(|t| t.is_finite_verb()) {
            finite += 1;
            if let Some(b) = tense_mood(t) {
                buckets[b as usize] += 1;
            }
            if is_compound_auxiliary(s.sentence, t) {
                compound += 1;
            }
            combos.insert((t.feature("Mood").unwrap_or(""), t.feature("Tense").unwrap_or("")));
        }
    }
    let share = |b: TenseMood| ratio_usize(buckets[b as usize], finite);
    let (temporal_pos, temporal_neg) = temporal_ratios(ctx);
    TemporalProfile {
        finite_verbs: finite,
        present: share(TenseMood::IndicativePresent),
        preterite: share(TenseMood::IndicativePreterite),
        imperfect: share(TenseMood::IndicativeImperfect),
        future: share(TenseMood::IndicativeFuture),
        conditional: share(TenseMood::Conditional),
        subjunctive: share(TenseMood::Subjunctive),
        imperative: share(TenseMood::Imperative),
        aux_participle: ratio_usize(compound, finite),
        variety: (finite > 0).then_some(combos.len()),
        temporal_pos,
        temporal_neg,
    }
}

pub(crate) fn emit(ctx: &Context) -> Emitted {
    let p = compute(ctx);
    vec![
        ("indicative_present_ratio", p.present),
        ("indicative_preterite_ratio", p.preterite),
        ("indicative_imperfect_ratio", p.imperfect),
        ("indicative_future_ratio", p.future),
        ("indicative_conditional_ratio", p.conditional),
        ("subjunctive_ratio", p.subjunctive),
        ("imperative_ratio", p.imperative),
        ("aux_participle_ratio", p.aux_participle),
        ("tense_mood_variety", p.variety.map(|n| n as f64)),
        ("temporal_pos_ratio", p.temporal_pos),
        ("temporal_neg_ratio", p.temporal_neg),
    ]
}
