//! Type-token ratios per word class. Types are lowercase surface forms.

use std::collections::HashSet;

use super::context::has_pron_type;
use super::{max, ratio_usize, Context, Emitted, WordRef};
use crate::resources::ResourceBundle;
use crate::text::{Document, Pos, Token};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LexicalDiversity {
    pub ttr: Option<f64>,
    pub content_words_ttr: Option<f64>,
    pub function_words_ttr: Option<f64>,
    pub nouns_ttr: Option<f64>,
    pub verbs_ttr: Option<f64>,
    pub adjectives_ttr: Option<f64>,
    pub pronouns_ttr: Option<f64>,
    pub indefinite_pronouns_ttr: Option<f64>,
    pub relative_pronouns_ttr: Option<f64>,
    pub prepositions_ttr: Option<f64>,
    pub punctuation_ttr: Option<f64>,
    /// Content words divided by function words.
    pub content_density: Option<f64>,
    /// Largest per-sentence share of content words among words.
    pub content_word_max: Option<f64>,
}

/// Distinct forms over occurrences; `None` when nothing matches.
pub fn type_token_ratio<'a>(forms: impl IntoIterator<Item = &'a str>) -> Option<f64> {
    let mut types = HashSet::new();
    let mut tokens = 0;
    for form in forms {
        types.insert(form);
        tokens += 1;
    }
    ratio_usize(types.len(), tokens)
}

pub fn lexical_diversity(doc: &Document) -> LexicalDiversity {
    let bundle = ResourceBundle::default();
    compute(&Context::new(doc, &bundle))
}

fn compute(ctx: &Context) -> LexicalDiversity {
    let words: Vec<WordRef> = ctx.words().collect();
    let ttr_of = |pred: &dyn Fn(&Token) -> bool| type_token_ratio(words.iter().filter(|w| pred(w.token)).map(|w| w.lower));
    let content = words.iter().filter(|w| w.is_content()).count();
    let function = words.len() - content;
    let per_sentence: Vec<f64> = ctx
        .sentences
        .iter()
        .filter_map(|s| ratio_usize(s.count_words(Token::is_content), s.word_count()))
        .collect();
    LexicalDiversity {
        ttr: ttr_of(&|_| true),
        content_words_ttr: ttr_of(&|t| t.is_content()),
        function_words_ttr: ttr_of(&|t| !t.is_content()),
        nouns_ttr: ttr_of(&|t| t.pos == Pos::Noun),
        verbs_ttr: ttr_of(&|t| t.pos == Pos::Verb),
        adjectives_ttr: ttr_of(&|t| t.pos == Pos::Adj),
        pronouns_ttr: ttr_of(&|t| t.pos == Pos::Pron),
        indefinite_pronouns_ttr: ttr_of(&|t| has_pron_type(t, "Ind")),
        relative_pronouns_ttr: ttr_of(&|t| has_pron_type(t, "Rel")),
        prepositions_ttr: ttr_of(&|t| t.pos == Pos::Adp),
        punctuation_ttr: type_token_ratio(ctx.tokens().filter(|w| w.pos() == Pos::Punct).map(|w| w.lower)),
        content_density: ratio_usize(content, function),
        content_word_max: max(&per_sentence),
    }
}

pub(crate) fn emit(ctx: &Context) -> Emitted {
    let d = compute(ctx);
    vec![
        ("ttr", d.ttr),
        ("content_words_ttr", d.content_words_ttr),
        ("function_words_ttr", d.function_words_ttr),
        ("nouns_ttr", d.nouns_ttr),
        ("verbs_ttr", d.verbs_ttr),
        ("adjectives_ttr", d.adjectives_ttr),
        ("pronouns_ttr", d.pronouns_ttr),
        ("indefinite_pronouns_ttr", d.indefinite_pronouns_ttr),
        ("relative_pronouns_ttr", d.relative_pronouns_ttr),
        ("prepositions_ttr", d.prepositions_ttr),
        ("punctuation_ttr", d.punctuation_ttr),
        ("content_density", d.content_density),
        ("content_word_max", d.content_word_max),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ttr_counts_repeats() {
        assert_eq!(type_token_ratio(["o", "gato", "viu", "o", "rato"]), Some(0.8));
        assert_eq!(type_token_ratio(Vec::<&str>::new()), None);
    }
}
