//! Referential cohesion: argument, stem and content-word overlap between
//! sentence pairs, and pronoun-noun agreement across sentences.

use std::collections::HashSet;

use super::context::{is_personal_pronoun, person, SentenceView};
use super::{mean, ratio_usize, Context, Emitted};
use crate::resources::ResourceBundle;
use crate::stem::{PortugueseStemmer, Stemmer};
use crate::text::{Document, Pos, Token};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferentialCohesion {
    pub adjacent_argument: Option<f64>,
    pub global_argument: Option<f64>,
    pub adjacent_stem: Option<f64>,
    pub global_stem: Option<f64>,
    pub adjacent_content: Option<f64>,
    pub global_content: Option<f64>,
    /// Third-person pronouns with an agreeing noun in the previous sentence.
    pub adjacent_references: Option<f64>,
    /// Third-person pronouns with an agreeing noun in any earlier sentence.
    pub anaphoric_references: Option<f64>,
    /// Mean per sentence (from the second) of such pronouns.
    pub coreferent_pronouns: Option<f64>,
}

pub fn referential_overlaps(doc: &Document) -> ReferentialCohesion {
    referential_overlaps_with(doc, &PortugueseStemmer)
}

pub fn referential_overlaps_with(doc: &Document, stemmer: &dyn Stemmer) -> ReferentialCohesion {
    let bundle = ResourceBundle::default();
    compute(&Context::new(doc, &bundle), stemmer)
}

struct Features {
    arguments: HashSet<String>,
    noun_stems: HashSet<String>,
    content_stems: HashSet<String>,
    content_lemmas: Vec<String>,
}

impl Features {
    fn of(s: &SentenceView, stemmer: &dyn Stemmer) -> Self {
        let mut f = Features {
            arguments: HashSet::new(),
            noun_stems: HashSet::new(),
            content_stems: HashSet::new(),
            content_lemmas: Vec::new(),
        };
        for w in s.words() {
            if matches!(w.pos(), Pos::Noun | Pos::Propn | Pos::Pron) {
                f.arguments.insert(w.lemma.to_string());
            }
            if w.is_content() {
                let stem = stemmer.stem(w.lower);
                if matches!(w.pos(), Pos::Noun | Pos::Propn) {
                    f.noun_stems.insert(stem.clone());
                }
                f.content_stems.insert(stem);
                f.content_lemmas.push(w.lemma.to_string());
            }
        }
        f
    }
}

fn argument_overlap(a: &Features, b: &Features) -> f64 {
    f64::from(u8::from(!a.arguments.is_disjoint(&b.arguments)))
}

fn stem_overlap(a: &Features, b: &Features) -> f64 {
    let hit = !a.noun_stems.is_disjoint(&b.content_stems) || !b.noun_stems.is_disjoint(&a.content_stems);
    f64::from(u8::from(hit))
}

/// Content tokens of either sentence whose lemma occurs in the other, over
/// all content tokens of the pair. `None` when neither has content words.
pub fn content_overlap(a: &[String], b: &[String]) -> Option<f64> {
    let sa: HashSet<&String> = a.iter().collect();
    let sb: HashSet<&String> = b.iter().collect();
    let shared = a.iter().filter(|l| sb.contains(l)).count() + b.iter().filter(|l| sa.contains(l)).count();
    ratio_usize(shared, a.len() + b.len())
}

fn agrees(pronoun: &Token, noun: &Token) -> bool {
    ["Gender", "Number"].iter().all(|f| match (pronoun.feature(f), noun.feature(f)) {
        (Some(p), Some(n)) => p == n,
        _ => true,
    })
}

fn is_third_person_pronoun(t: &Token) -> bool {
    is_personal_pronoun(t) && person(t) == Some(3)
}

fn has_antecedent(pronoun: &Token, s: &SentenceView) -> bool {
    s.sentence.tokens.iter().any(|t| matches!(t.pos, Pos::Noun | Pos::Propn) && agrees(pronoun, t))
}

fn pairs(n: usize, adjacent: bool) -> Vec<(usize, usize)> {
    if adjacent {
        (1..n).map(|j| (j - 1, j)).collect()
    } else {
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
    }
}

fn compute(ctx: &Context, stemmer: &dyn Stemmer) -> ReferentialCohesion {
    let n = ctx.sentences.len();
    let features: Vec<Features> = ctx.sentences.iter().map(|s| Features::of(s, stemmer)).collect();
    let over = |adjacent: bool, f: &dyn Fn(&Features, &Features) -> Option<f64>| {
        mean(&pairs(n, adjacent).into_iter().filter_map(|(i, j)| f(&features[i], &features[j])).collect::<Vec<_>>())
    };
    let arg = |a: &Features, b: &Features| Some(argument_overlap(a, b));
    let stem = |a: &Features, b: &Features| Some(stem_overlap(a, b));
    let content = |a: &Features, b: &Features| content_overlap(&a.content_lemmas, &b.content_lemmas);

    let mut adjacent_hits = 0;
    let mut global_hits = 0;
    let mut pronouns = 0;
    let mut per_sentence = Vec::new();
    for j in 1..n {
        let mut linked = 0;
        for t in ctx.sentences[j].sentence.tokens.iter().filter(|t| is_third_person_pronoun(t)) {
            pronouns += 1;
            if has_antecedent(t, &ctx.sentences[j - 1]) {
                adjacent_hits += 1;
                linked += 1;
            }
            if ctx.sentences[..j].iter().any(|s| has_antecedent(t, s)) {
                global_hits += 1;
            }
        }
        per_sentence.push(linked as f64);
    }

    ReferentialCohesion {
        adjacent_argument: over(true, &arg),
        global_argument: over(false, &arg),
        adjacent_stem: over(true, &stem),
        global_stem: over(false, &stem),
        adjacent_content: over(true, &content),
        global_content: over(false, &content),
        adjacent_references: ratio_usize(adjacent_hits, pronouns),
        anaphoric_references: ratio_usize(global_hits, pronouns),
        coreferent_pronouns: mean(&per_sentence),
    }
}

pub(crate) fn emit(ctx: &Context) -> Emitted {
    let r = compute(ctx, &PortugueseStemmer);
    vec![
        ("adj_arg_ovl", r.adjacent_argument),
        ("arg_ovl", r.global_argument),
        ("adj_stem_ovl", r.adjacent_stem),
        ("stem_ovl", r.global_stem),
        ("adj_cw_ovl", r.adjacent_content),
        ("cw_ovl", r.global_content),
        ("adjacent_refs", r.adjacent_references),
        ("anaphoric_refs", r.anaphoric_references),
        ("coreferent_pronouns", r.coreferent_pronouns),
    ]
}
