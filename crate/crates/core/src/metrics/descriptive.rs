//! Basic text statistics. Sentence lengths are measured in words, i.e.
//! tokens other than punctuation and symbols.

use super::{mean, ratio_usize, std_dev, Context, Emitted};
use crate::resources::ResourceBundle;
use crate::text::{word_syllables, Document};

#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceProfile {
    pub words: usize,
    pub sentences: usize,
    pub paragraphs: usize,
    pub sentences_per_paragraph: Option<f64>,
    /// Over content words with at least one letter.
    pub syllables_per_content_word: Option<f64>,
    pub words_per_sentence: Option<f64>,
    pub sentence_length_max: Option<usize>,
    pub sentence_length_min: Option<usize>,
    /// Population standard deviation.
    pub sentence_length_sd: Option<f64>,
    /// Heading paragraphs over sentences.
    pub heading_ratio: Option<f64>,
}

pub fn descriptive_index(doc: &Document) -> SurfaceProfile {
    let bundle = ResourceBundle::default();
    profile(&Context::new(doc, &bundle))
}

pub(crate) fn sentence_lengths(ctx: &Context) -> Vec<usize> {
    ctx.sentences.iter().map(|s| s.word_count()).collect()
}

fn profile(ctx: &Context) -> SurfaceProfile {
    let lengths = sentence_lengths(ctx);
    let as_f64: Vec<f64> = lengths.iter().map(|&n| n as f64).collect();
    let syllables: Vec<f64> = ctx
        .words()
        .filter(|w| w.is_content())
        .filter_map(|w| word_syllables(&w.token.surface))
        .map(|n| n as f64)
        .collect();
    let headings = ctx.doc.paragraphs.iter().filter(|p| p.is_heading).count();
    SurfaceProfile {
        words: lengths.iter().sum(),
        sentences: lengths.len(),
        paragraphs: ctx.doc.paragraphs.len(),
        sentences_per_paragraph: ratio_usize(lengths.len(), ctx.doc.paragraphs.len()),
        syllables_per_content_word: mean(&syllables),
        words_per_sentence: mean(&as_f64),
        sentence_length_max: lengths.iter().copied().max(),
        sentence_length_min: lengths.iter().copied().min(),
        sentence_length_sd: std_dev(&as_f64),
        heading_ratio: ratio_usize(headings, lengths.len()),
    }
}

pub(crate) fn emit(ctx: &Context) -> Emitted {
    let p = profile(ctx);
    vec![
        ("words", Some(p.words as f64)),
        ("sentences", Some(p.sentences as f64)),
        ("paragraphs", Some(p.paragraphs as f64)),
        ("sentences_per_paragraph", p.sentences_per_paragraph),
        ("syllables_per_content_word", p.syllables_per_content_word),
        ("words_per_sentence", p.words_per_sentence),
        ("sentence_length_max", p.sentence_length_max.map(|n| n as f64)),
        ("sentence_length_min", p.sentence_length_min.map(|n| n as f64)),
        ("sentence_length_standard_deviation", p.sentence_length_sd),
        ("subtitle_ratio", p.heading_ratio),
    ]
}
