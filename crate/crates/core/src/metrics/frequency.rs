//! Word frequency on the zipf scale. Words absent from a table are left
//! out of both numerator and denominator. Lookups use the surface form,
//! then the lemma.

use super::{mean, min, Context, Emitted};
use crate::resources::{zipf, FreqTable, ResourceBundle};
use crate::text::Document;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencyProfile {
    pub content_mean: Option<f64>,
    /// Mean over sentences of the rarest content word.
    pub content_rare: Option<f64>,
    pub all_mean: Option<f64>,
    /// Mean over sentences of the rarest word.
    pub all_rare: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WordFrequency {
    pub corpus_a: Option<FrequencyProfile>,
    pub corpus_b: Option<FrequencyProfile>,
    /// Raw frequency (not zipf) from the legacy table.
    pub legacy_content_mean: Option<f64>,
    pub legacy_rare: Option<f64>,
}

pub fn word_frequency(doc: &Document, bundle: &ResourceBundle) -> WordFrequency {
    compute(&Context::new(doc, bundle))
}

/// `transform` maps an fpm value to the reported scale.
fn profile(ctx: &Context, table: &FreqTable, transform: fn(f64) -> f64) -> FrequencyProfile {
    let mut content_all = Vec::new();
    let mut all = Vec::new();
    let mut content_rare = Vec::new();
    let mut all_rare = Vec::new();
    for s in &ctx.sentences {
        let mut sentence_content = Vec::new();
        let mut sentence_all = Vec::new();
        for w in s.words() {
            if let Some(fpm) = w.lookup_surface_first(|f| table.get(f)) {
                let value = transform(fpm);
                sentence_all.push(value);
                if w.is_content() {
                    sentence_content.push(value);
                }
            }
        }
        content_rare.extend(min(&sentence_content));
        all_rare.extend(min(&sentence_all));
        content_all.extend(sentence_content);
        all.extend(sentence_all);
    }
    FrequencyProfile {
        content_mean: mean(&content_all),
        content_rare: mean(&content_rare),
        all_mean: mean(&all),
        all_rare: mean(&all_rare),
    }
}

fn zipf_of(fpm: f64) -> f64 {
    // Table loading guarantees fpm > 0.
    zipf(fpm).unwrap_or(f64::NAN)
}

fn compute(ctx: &Context) -> WordFrequency {
    let b = ctx.bundle;
    let legacy = b.freq_legacy.as_ref().map(|t| profile(ctx, t, |f| f));
    WordFrequency {
        corpus_a: b.freq_a.as_ref().map(|t| profile(ctx, t, zipf_of)),
        corpus_b: b.freq_b.as_ref().map(|t| profile(ctx, t, zipf_of)),
        legacy_content_mean: legacy.and_then(|p| p.content_mean),
        legacy_rare: legacy.and_then(|p| p.all_rare),
    }
}

pub(crate) fn emit(ctx: &Context) -> Emitted {
    let f = compute(ctx);
    let a = f.corpus_a;
    let b = f.corpus_b;
    vec![
        ("cw_freq_a", a.and_then(|p| p.content_mean)),
        ("min_cw_freq_a", a.and_then(|p| p.content_rare)),
        ("freq_a", a.and_then(|p| p.all_mean)),
        ("min_freq_a", a.and_then(|p| p.all_rare)),
        ("cw_freq_b", b.and_then(|p| p.content_mean)),
        ("min_cw_freq_b", b.and_then(|p| p.content_rare)),
        ("freq_b", b.and_then(|p| p.all_mean)),
        ("min_freq_b", b.and_then(|p| p.all_rare)),
        ("cw_freq_legacy", f.legacy_content_mean),
        ("min_freq_legacy", f.legacy_rare),
    ]
}
