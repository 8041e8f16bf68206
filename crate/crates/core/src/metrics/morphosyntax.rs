//! Word-class incidences (per word), pronoun breakdowns and per-sentence
//! distributions of class incidence.

use super::context::{has_pron_type, is_personal_pronoun, person};
use super::dependency::clause_count;
use super::{max, mean, min, ratio_usize, std_dev, Context, Emitted};
use crate::resources::ResourceBundle;
use crate::text::{Document, Pos, Token};

/// Ids for the mean, sd, min and max of one per-sentence proportion.
type Ids = [&'static str; 4];
type PosClass = (&'static Ids, fn(&Token) -> bool);

fn is_verbal(t: &Token) -> bool {
    matches!(t.pos, Pos::Verb | Pos::Aux)
}

fn is_non_finite(t: &Token) -> bool {
    is_verbal(t) && matches!(t.feature("VerbForm"), Some("Inf" | "Ger" | "Part"))
}

/// The 42-value family as `(id, value)` pairs in registry order.
pub fn morphosyntactic_profile(doc: &Document) -> Vec<(&'static str, Option<f64>)> {
    let bundle = ResourceBundle::default();
    emit(&Context::new(doc, &bundle))
}

pub(crate) fn emit(ctx: &Context) -> Emitted {
    let words = ctx.word_count();
    let count = |pred: fn(&Token) -> bool| ctx.count_words(pred);
    let incidence = |pred: fn(&Token) -> bool| ratio_usize(count(pred), words);

    let content = count(Token::is_content);
    let function = words - content;
    let pronouns = count(|t| t.pos == Pos::Pron);
    let personal: Vec<&Token> = ctx.words().map(|w| w.token).filter(|t| is_personal_pronoun(t)).collect();
    let person_share = |p: u8| ratio_usize(personal.iter().filter(|t| person(t) == Some(p)).count(), personal.len());
    let prepositions = count(|t| t.pos == Pos::Adp);
    let clauses: usize = ctx.sentences.iter().map(|s| clause_count(s.sentence)).sum();

    let mut out: Emitted = vec![
        ("content_words", ratio_usize(content, words)),
        ("function_words", ratio_usize(function, words)),
        ("ratio_function_to_content_words", ratio_usize(function, content)),
        ("nouns", incidence(|t| t.pos == Pos::Noun)),
        ("proper_nouns", incidence(|t| t.pos == Pos::Propn)),
        ("adjectives", incidence(|t| t.pos == Pos::Adj)),
        ("adverbs", incidence(|t| t.pos == Pos::Adv)),
        ("verbs", incidence(|t| t.pos == Pos::Verb)),
        ("auxiliary_verbs", incidence(|t| t.pos == Pos::Aux)),
        ("inflected_verbs", incidence(Token::is_finite_verb)),
        ("non_inflected_verbs", incidence(is_non_finite)),
        ("infinitive_verbs", incidence(|t| is_verbal(t) && t.feature("VerbForm") == Some("Inf"))),
        ("pronouns", ratio_usize(pronouns, words)),
        ("personal_pronouns", ratio_usize(personal.len(), words)),
        ("first_person_pronouns", person_share(1)),
        ("second_person_pronouns", person_share(2)),
        ("third_person_pronouns", person_share(3)),
        ("relative_pronouns", ratio_usize(count(|t| has_pron_type(t, "Rel")), pronouns)),
        ("indefinite_pronouns", ratio_usize(count(|t| has_pron_type(t, "Ind")), pronouns)),
        ("prepositions", ratio_usize(prepositions, words)),
        ("prepositions_per_sentence", ratio_usize(prepositions, ctx.sentences.len())),
        ("prepositions_per_clause", ratio_usize(prepositions, clauses)),
    ];

    let classes: [PosClass; 5] = [
        (&["nouns_mean", "nouns_standard_deviation", "nouns_min", "nouns_max"], |t| t.pos == Pos::Noun),
        (&["verbs_mean", "verbs_standard_deviation", "verbs_min", "verbs_max"], |t| t.pos == Pos::Verb),
        (&["adjectives_mean", "adjectives_standard_deviation", "adjectives_min", "adjectives_max"], |t| t.pos == Pos::Adj),
        (&["adverbs_mean", "adverbs_standard_deviation", "adverbs_min", "adverbs_max"], |t| t.pos == Pos::Adv),
        (&["pronouns_mean", "pronouns_standard_deviation", "pronouns_min", "pronouns_max"], |t| t.pos == Pos::Pron),
    ];
    for (ids, pred) in classes {
        let per_sentence: Vec<f64> =
            ctx.sentences.iter().filter_map(|s| ratio_usize(s.count_words(pred), s.word_count())).collect();
        out.push((ids[0], mean(&per_sentence)));
        out.push((ids[1], std_dev(&per_sentence)));
        out.push((ids[2], min(&per_sentence)));
        out.push((ids[3], max(&per_sentence)));
    }
    out
}
