use super::context::{is_personal_pronoun, person};
use super::descriptive::sentence_lengths;
use super::{ratio_usize, Context, Emitted};
use crate::resources::{ResourceBundle, WordSet};
use crate::text::{Document, Pos};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LengthClass {
    Short,
    Medium,
    Long,
    VeryLong,
}

/// Short up to 11 words, medium exactly 12, long 13 to 15, very long above 15.
pub fn classify_length(words: usize) -> LengthClass {
    match words {
        0..=11 => LengthClass::Short,
        12 => LengthClass::Medium,
        13..=15 => LengthClass::Long,
        _ => LengthClass::VeryLong,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LengthClasses {
    pub short: f64,
    pub medium: f64,
    pub long: f64,
    pub very_long: f64,
}

/// `None` for a document without sentences.
pub fn sentence_length_classes(doc: &Document) -> Option<LengthClasses> {
    let bundle = ResourceBundle::default();
    length_classes(&Context::new(doc, &bundle))
}

fn length_classes(ctx: &Context) -> Option<LengthClasses> {
    let lengths = sentence_lengths(ctx);
    let share = |class: LengthClass| {
        ratio_usize(lengths.iter().filter(|&&n| classify_length(n) == class).count(), lengths.len())
    };
    Some(LengthClasses {
        short: share(LengthClass::Short)?,
        medium: share(LengthClass::Medium)?,
        long: share(LengthClass::Long)?,
        very_long: share(LengthClass::VeryLong)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Easability {
    pub easy_conj_ratio: Option<f64>,
    pub hard_conj_ratio: Option<f64>,
    /// First-person personal pronouns over personal pronouns.
    pub first_person_pronoun_ratio: Option<f64>,
    /// Personal pronouns over pronouns.
    pub personal_pronoun_ratio: Option<f64>,
    /// Content words in the simple or concrete lists over content words.
    pub simple_word_ratio: Option<f64>,
}

pub fn easability(doc: &Document, bundle: &ResourceBundle) -> Easability {
    compute(&Context::new(doc, bundle))
}

/// Longest-match occurrences of list entries, per word.
fn list_ratio(ctx: &Context, list: Option<&WordSet>) -> Option<f64> {
    let list = list?;
    let hits: usize = ctx.sentences.iter().map(|s| list.matches(&s.lower).len()).sum();
    ratio_usize(hits, ctx.word_count())
}

fn compute(ctx: &Context) -> Easability {
    let bundle = ctx.bundle;
    let personal: Vec<_> = ctx.words().filter(|w| is_personal_pronoun(w.token)).collect();
    let first = personal.iter().filter(|w| person(w.token) == Some(1)).count();
    let pronouns = ctx.count_words(|t| t.pos == Pos::Pron);

    let simple_word_ratio = bundle.simple_words.as_ref().and_then(|simple| {
        let listed = |w: &str| simple.contains(w) || bundle.concrete_words.as_ref().is_some_and(|c| c.contains(w));
        let content: Vec<_> = ctx.words().filter(|w| w.is_content()).collect();
        let hits = content.iter().filter(|w| listed(w.lemma) || listed(w.lower)).count();
        ratio_usize(hits, content.len())
    });

    Easability {
        easy_conj_ratio: list_ratio(ctx, bundle.easy_conjunctions.as_ref()),
        hard_conj_ratio: list_ratio(ctx, bundle.hard_conjunctions.as_ref()),
        first_person_pronoun_ratio: ratio_usize(first, personal.len()),
        personal_pronoun_ratio: ratio_usize(personal.len(), pronouns),
        simple_word_ratio,
    }
}

pub(crate) fn emit(ctx: &Context) -> Emitted {
    let classes = length_classes(ctx);
    let e = compute(ctx);
    vec![
        ("short_sentence_ratio", classes.map(|c| c.short)),
        ("medium_sentence_ratio", classes.map(|c| c.medium)),
        ("long_sentence_ratio", classes.map(|c| c.long)),
        ("very_long_sentence_ratio", classes.map(|c| c.very_long)),
        ("easy_conjunctions_ratio", e.easy_conj_ratio),
        ("hard_conjunctions_ratio", e.hard_conj_ratio),
        ("first_person_personal_pronouns", e.first_person_pronoun_ratio),
        ("personal_pronoun_ratio", e.personal_pronoun_ratio),
        ("simple_word_ratio", e.simple_word_ratio),
    ]
}
