//! Readability formulas. The `*_score` functions are the bare formulas;
//! the document-level functions derive their inputs from words (tokens
//! other than punctuation and symbols).

use std::collections::HashMap;

use super::{Context, Emitted};
use crate::resources::ResourceBundle;
use crate::text::{word_syllables, Document};

/// `248.835 - 1.015 * asl - 84.6 * asw`.
pub fn flesch_score(asl: f64, asw: f64) -> f64 {
    248.835 - 1.015 * asl - 84.6 * asw
}

/// `pct_unfamiliar` on the 0-100 scale.
pub fn dale_chall_score(pct_unfamiliar: f64, asl: f64) -> f64 {
    0.1579 * pct_unfamiliar + 0.0496 * asl + 3.6365
}

/// `pct_difficult` on the 0-100 scale.
pub fn gunning_fog_score(asl: f64, pct_difficult: f64) -> f64 {
    0.4 * (asl + pct_difficult)
}

/// `N ^ (V ^ -0.165)` for `n` tokens and `v` types.
pub fn brunet_score(n: usize, v: usize) -> f64 {
    (n as f64).powf((v as f64).powf(-0.165))
}

/// `100 ln N / (1 - V1/V)`; `None` when every type is a hapax (or `v == 0`).
pub fn honore_score(n: usize, v: usize, v1: usize) -> Option<f64> {
    (v > 0 && v1 < v).then(|| 100.0 * (n as f64).ln() / (1.0 - v1 as f64 / v as f64))
}

struct Counts {
    words: usize,
    sentences: usize,
    /// Words containing at least one letter, and their syllables.
    syllabified: usize,
    syllables: usize,
    difficult: usize,
    type_freq: HashMap<String, usize>,
}

impl Counts {
    fn of(ctx: &Context) -> Self {
        let mut c = Counts {
            words: 0,
            sentences: ctx.sentences.len(),
            syllabified: 0,
            syllables: 0,
            difficult: 0,
            type_freq: HashMap::new(),
        };
        for w in ctx.words() {
            c.words += 1;
            *c.type_freq.entry(w.lower.to_string()).or_default() += 1;
            if let Some(n) = word_syllables(&w.token.surface) {
                c.syllabified += 1;
                c.syllables += n;
                if n > 2 {
                    c.difficult += 1;
                }
            }
        }
        c
    }

    fn asl(&self) -> Option<f64> {
        (self.words > 0 && self.sentences > 0).then(|| self.words as f64 / self.sentences as f64)
    }

    fn percent(&self, count: usize) -> f64 {
        100.0 * count as f64 / self.words as f64
    }
}

fn flesch_of(c: &Counts) -> Option<f64> {
    let asl = c.asl()?;
    let asw = (c.syllabified > 0).then(|| c.syllables as f64 / c.syllabified as f64)?;
    Some(flesch_score(asl, asw))
}

fn dale_chall_of(ctx: &Context, c: &Counts) -> Option<f64> {
    let simple = ctx.bundle.simple_words.as_ref()?;
    let asl = c.asl()?;
    let unfamiliar = ctx.words().filter(|w| !simple.contains(w.lemma) && !simple.contains(w.lower)).count();
    Some(dale_chall_score(c.percent(unfamiliar), asl))
}

fn gunning_fog_of(c: &Counts) -> Option<f64> {
    Some(gunning_fog_score(c.asl()?, c.percent(c.difficult)))
}

fn brunet_of(c: &Counts) -> Option<f64> {
    (c.words > 0).then(|| brunet_score(c.words, c.type_freq.len()))
}

fn honore_of(c: &Counts) -> Option<f64> {
    let hapax = c.type_freq.values().filter(|&&n| n == 1).count();
    (c.words > 0).then(|| honore_score(c.words, c.type_freq.len(), hapax)).flatten()
}

fn with_ctx<T>(doc: &Document, bundle: &ResourceBundle, f: impl Fn(&Context, &Counts) -> T) -> T {
    let ctx = Context::new(doc, bundle);
    let counts = Counts::of(&ctx);
    f(&ctx, &counts)
}

/// ASW is averaged over all words that contain letters.
pub fn flesch(doc: &Document) -> Option<f64> {
    with_ctx(doc, &ResourceBundle::default(), |_, c| flesch_of(c))
}

/// Unfamiliar words are those whose lemma and surface are both absent from
/// the simple-word list. `None` without the list.
pub fn dale_chall_adapted(doc: &Document, bundle: &ResourceBundle) -> Option<f64> {
    with_ctx(doc, bundle, dale_chall_of)
}

pub fn gunning_fog(doc: &Document) -> Option<f64> {
    with_ctx(doc, &ResourceBundle::default(), |_, c| gunning_fog_of(c))
}

pub fn brunet(doc: &Document) -> Option<f64> {
    with_ctx(doc, &ResourceBundle::default(), |_, c| brunet_of(c))
}

pub fn honore(doc: &Document) -> Option<f64> {
    with_ctx(doc, &ResourceBundle::default(), |_, c| honore_of(c))
}

pub(crate) fn emit(ctx: &Context) -> Emitted {
    let c = Counts::of(ctx);
    vec![
        ("brunet", brunet_of(&c)),
        ("dalechall_adapted", dale_chall_of(ctx, &c)),
        ("flesch", flesch_of(&c)),
        ("gunning_fog", gunning_fog_of(&c)),
        ("honore", honore_of(&c)),
    ]
}
