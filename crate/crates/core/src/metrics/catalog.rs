use super::{Category, MetricDef, Requirement};
use crate::resources::ResourceKind;

const POS: Requirement = Requirement::Pos;
const DEP: Requirement = Requirement::Dep;
const TREE: Requirement = Requirement::Tree;
const SIMPLE: Requirement = Requirement::Resource(ResourceKind::SimpleWords);
const EASY_CONJ: Requirement = Requirement::Resource(ResourceKind::EasyConjunctions);
const HARD_CONJ: Requirement = Requirement::Resource(ResourceKind::HardConjunctions);
const CONN: Requirement = Requirement::Resource(ResourceKind::Connectives);
const NORMS: Requirement = Requirement::Resource(ResourceKind::Norms);
const SENSES: Requirement = Requirement::Resource(ResourceKind::Senses);
const HYPERNYMS: Requirement = Requirement::Resource(ResourceKind::Hypernyms);
const POLARITY: Requirement = Requirement::Resource(ResourceKind::Polarity);
const ABSTRACT: Requirement = Requirement::Resource(ResourceKind::AbstractNouns);
const FREQ_A: Requirement = Requirement::Resource(ResourceKind::FreqA);
const FREQ_B: Requirement = Requirement::Resource(ResourceKind::FreqB);
const LEGACY: Requirement = Requirement::Resource(ResourceKind::FreqLegacy);
const EMB: Requirement = Requirement::Resource(ResourceKind::Embeddings);

macro_rules! m {
    ($id:literal, $cat:ident, [$($req:expr),*], $desc:literal) => {
        MetricDef { id: $id, category: Category::$cat, requires: &[$($req),*], description: $desc }
    };
}

/// The full registry. Order is stable and grouped by category.
pub static CATALOG: &[MetricDef] = &[
    // Descriptive Index
    m!("words", DescriptiveIndex, [], "Number of words (tokens other than punctuation and symbols)"),
    m!("sentences", DescriptiveIndex, [], "Number of sentences"),
    m!("paragraphs", DescriptiveIndex, [], "Number of paragraphs"),
    m!("sentences_per_paragraph", DescriptiveIndex, [], "Mean number of sentences per paragraph"),
    m!("syllables_per_content_word", DescriptiveIndex, [POS], "Mean number of syllables per content word"),
    m!("words_per_sentence", DescriptiveIndex, [], "Mean number of words per sentence"),
    m!("sentence_length_max", DescriptiveIndex, [], "Largest number of words in a sentence"),
    m!("sentence_length_min", DescriptiveIndex, [], "Smallest number of words in a sentence"),
    m!("sentence_length_standard_deviation", DescriptiveIndex, [], "Population standard deviation of words per sentence"),
    m!("subtitle_ratio", DescriptiveIndex, [], "Heading paragraphs divided by the number of sentences"),
    // Text Easability
    m!("short_sentence_ratio", TextEasability, [], "Share of sentences with at most 11 words"),
    m!("medium_sentence_ratio", TextEasability, [], "Share of sentences with exactly 12 words"),
    m!("long_sentence_ratio", TextEasability, [], "Share of sentences with 13 to 15 words"),
    m!("very_long_sentence_ratio", TextEasability, [], "Share of sentences with more than 15 words"),
    m!("easy_conjunctions_ratio", TextEasability, [EASY_CONJ], "Easy conjunction occurrences per word"),
    m!("hard_conjunctions_ratio", TextEasability, [HARD_CONJ], "Hard conjunction occurrences per word"),
    m!("first_person_personal_pronouns", TextEasability, [POS], "First-person personal pronouns over all personal pronouns"),
    m!("personal_pronoun_ratio", TextEasability, [POS], "Personal pronouns over all pronouns"),
    m!("simple_word_ratio", TextEasability, [POS, SIMPLE], "Content words found in the simple or concrete word lists, over content words"),
    // Referential Cohesion
    m!("adj_arg_ovl", ReferentialCohesion, [POS], "Adjacent sentence pairs sharing a noun or pronoun lemma"),
    m!("arg_ovl", ReferentialCohesion, [POS], "Sentence pairs sharing a noun or pronoun lemma"),
    m!("adj_stem_ovl", ReferentialCohesion, [POS], "Adjacent pairs where a noun stem matches a content-word stem of the other sentence"),
    m!("stem_ovl", ReferentialCohesion, [POS], "Sentence pairs where a noun stem matches a content-word stem of the other sentence"),
    m!("adj_cw_ovl", ReferentialCohesion, [POS], "Mean share of content words shared by adjacent sentences"),
    m!("cw_ovl", ReferentialCohesion, [POS], "Mean share of content words shared by sentence pairs"),
    m!("adjacent_refs", ReferentialCohesion, [POS], "Share of third-person pronouns with an agreeing noun in the previous sentence"),
    m!("anaphoric_refs", ReferentialCohesion, [POS], "Share of third-person pronouns with an agreeing noun in any previous sentence"),
    m!("coreferent_pronouns", ReferentialCohesion, [POS], "Mean number of pronouns per sentence with an agreeing noun in the previous sentence"),
    // LSA-Semantic Cohesion
    m!("lsa_adj_mean", LsaSemanticCohesion, [EMB], "Mean cosine between adjacent sentence vectors"),
    m!("lsa_adj_std", LsaSemanticCohesion, [EMB], "Standard deviation of adjacent sentence cosines"),
    m!("lsa_paragraph_mean", LsaSemanticCohesion, [EMB], "Mean cosine between adjacent paragraph vectors"),
    m!("lsa_paragraph_std", LsaSemanticCohesion, [EMB], "Standard deviation of adjacent paragraph cosines"),
    m!("lsa_all_mean", LsaSemanticCohesion, [EMB], "Mean cosine over all sentence pairs"),
    m!("lsa_all_std", LsaSemanticCohesion, [EMB], "Standard deviation of cosines over all sentence pairs"),
    m!("lsa_givenness_mean", LsaSemanticCohesion, [EMB], "Mean cosine between each sentence and the mean of its predecessors"),
    m!("lsa_givenness_std", LsaSemanticCohesion, [EMB], "Standard deviation of givenness"),
    m!("lsa_span_mean", LsaSemanticCohesion, [EMB], "Mean norm share of each sentence vector inside the span of its predecessors"),
    m!("lsa_span_std", LsaSemanticCohesion, [EMB], "Standard deviation of span"),
    m!("cross_entropy", LsaSemanticCohesion, [], "Mean base-2 cross-entropy of each sentence under the add-one unigram model of its predecessor"),
    // Lexical Diversity
    m!("ttr", LexicalDiversity, [], "Type-token ratio over all words"),
    m!("content_words_ttr", LexicalDiversity, [POS], "Type-token ratio of content words"),
    m!("function_words_ttr", LexicalDiversity, [POS], "Type-token ratio of function words"),
    m!("nouns_ttr", LexicalDiversity, [POS], "Type-token ratio of nouns"),
    m!("verbs_ttr", LexicalDiversity, [POS], "Type-token ratio of verbs"),
    m!("adjectives_ttr", LexicalDiversity, [POS], "Type-token ratio of adjectives"),
    m!("pronouns_ttr", LexicalDiversity, [POS], "Type-token ratio of pronouns"),
    m!("indefinite_pronouns_ttr", LexicalDiversity, [POS], "Type-token ratio of indefinite pronouns"),
    m!("relative_pronouns_ttr", LexicalDiversity, [POS], "Type-token ratio of relative pronouns"),
    m!("prepositions_ttr", LexicalDiversity, [POS], "Type-token ratio of prepositions"),
    m!("punctuation_ttr", LexicalDiversity, [POS], "Type-token ratio of punctuation marks"),
    m!("content_density", LexicalDiversity, [POS], "Content words divided by function words"),
    m!("content_word_max", LexicalDiversity, [POS], "Largest per-sentence share of content words"),
    // Connectives
    m!("connectives_ratio", Connectives, [CONN], "Tokens covered by connectives per word"),
    m!("additive_pos_ratio", Connectives, [CONN], "Positive additive connectives per word"),
    m!("additive_neg_ratio", Connectives, [CONN], "Negative additive connectives per word"),
    m!("causal_pos_ratio", Connectives, [CONN], "Positive causal connectives per word"),
    m!("causal_neg_ratio", Connectives, [CONN], "Negative causal connectives per word"),
    m!("logical_pos_ratio", Connectives, [CONN], "Positive logical connectives per word"),
    m!("logical_neg_ratio", Connectives, [CONN], "Negative logical connectives per word"),
    m!("and_ratio", Connectives, [CONN], "Occurrences of 'e' per word"),
    m!("or_ratio", Connectives, [CONN], "Occurrences of 'ou' per word"),
    m!("if_ratio", Connectives, [CONN], "Occurrences of 'se' per word"),
    m!("negation_ratio", Connectives, [CONN], "Negation words per word"),
    m!("ambiguous_discourse_markers_ratio", Connectives, [CONN], "Discourse markers listed under more than one connective kind, per word"),
    // Temporal Lexicon
    m!("indicative_present_ratio", TemporalLexicon, [POS], "Finite verbs in the present indicative over finite verbs"),
    m!("indicative_preterite_ratio", TemporalLexicon, [POS], "Finite verbs in the preterite or pluperfect indicative over finite verbs"),
    m!("indicative_imperfect_ratio", TemporalLexicon, [POS], "Finite verbs in the imperfect indicative over finite verbs"),
    m!("indicative_future_ratio", TemporalLexicon, [POS], "Finite verbs in the future indicative over finite verbs"),
    m!("indicative_conditional_ratio", TemporalLexicon, [POS], "Finite verbs in the conditional over finite verbs"),
    m!("subjunctive_ratio", TemporalLexicon, [POS], "Finite verbs in the subjunctive over finite verbs"),
    m!("imperative_ratio", TemporalLexicon, [POS], "Finite verbs in the imperative over finite verbs"),
    m!("aux_participle_ratio", TemporalLexicon, [POS], "Finite auxiliaries (ter, haver, ser, estar) followed by a participle, over finite verbs"),
    m!("tense_mood_variety", TemporalLexicon, [POS], "Number of distinct mood and tense combinations among finite verbs"),
    m!("temporal_pos_ratio", TemporalLexicon, [CONN], "Positive temporal connectives per word"),
    m!("temporal_neg_ratio", TemporalLexicon, [CONN], "Negative temporal connectives per word"),
    // Syntactic Complexity
    m!("yngve", SyntacticComplexity, [TREE], "Mean Yngve load per word, averaged over sentences with a tree"),
    m!("frazier", SyntacticComplexity, [TREE], "Mean Frazier score per word, averaged over sentences with a tree"),
    m!("dep_distance", SyntacticComplexity, [DEP], "Mean distance between a word and its head, averaged over sentences"),
    m!("words_before_main_verb", SyntacticComplexity, [POS, DEP], "Mean number of words before the main verb"),
    m!("adverbs_before_main_verb", SyntacticComplexity, [POS, DEP], "Mean number of adverbs before the main verb"),
    m!("clauses_per_sentence", SyntacticComplexity, [POS], "Mean number of clauses (finite verbs, at least one) per sentence"),
    m!("sentences_with_one_clause", SyntacticComplexity, [POS], "Share of sentences with one clause"),
    m!("sentences_with_two_clauses", SyntacticComplexity, [POS], "Share of sentences with two clauses"),
    m!("sentences_with_three_clauses", SyntacticComplexity, [POS], "Share of sentences with three clauses"),
    m!("sentences_with_four_clauses", SyntacticComplexity, [POS], "Share of sentences with four clauses"),
    m!("sentences_with_five_clauses", SyntacticComplexity, [POS], "Share of sentences with five clauses"),
    m!("sentences_with_six_or_more_clauses", SyntacticComplexity, [POS], "Share of sentences with six or more clauses"),
    m!("coordinate_conjunctions_per_clauses", SyntacticComplexity, [POS, DEP], "Clauses opened by a coordinating conjunction over clauses"),
    m!("subordinate_clauses", SyntacticComplexity, [POS, DEP], "Subordinate clauses over clauses"),
    m!("relative_clauses", SyntacticComplexity, [POS, DEP], "Relative clauses over clauses"),
    m!("adverbial_clauses", SyntacticComplexity, [POS, DEP], "Adverbial clauses over clauses"),
    m!("passive_ratio", SyntacticComplexity, [POS, DEP], "Clauses in the passive voice over clauses"),
    m!("non_svo_ratio", SyntacticComplexity, [POS, DEP], "Clauses not in subject-verb-object order over clauses"),
    m!("postponed_subject_ratio", SyntacticComplexity, [POS, DEP], "Clauses whose subject follows the verb over clauses"),
    m!("infinitive_clauses", SyntacticComplexity, [POS, DEP], "Infinitive clauses over clauses"),
    m!("participle_clauses", SyntacticComplexity, [POS, DEP], "Participle clauses over clauses"),
    // Syntactic Pattern Density
    m!("gerund_clauses", SyntacticPatternDensity, [POS, DEP], "Gerund clauses over clauses"),
    m!("mean_noun_phrase", SyntacticPatternDensity, [POS, DEP], "Mean number of words per noun phrase"),
    m!("max_noun_phrase", SyntacticPatternDensity, [POS, DEP], "Largest noun phrase, in words"),
    m!("min_noun_phrase", SyntacticPatternDensity, [POS, DEP], "Smallest noun phrase, in words"),
    // Semantic Word Information
    m!("positive_words_ratio", SemanticWordInformation, [POLARITY], "Words of positive polarity per word"),
    m!("negative_words_ratio", SemanticWordInformation, [POLARITY], "Words of negative polarity per word"),
    m!("content_words_ambiguity", SemanticWordInformation, [POS, SENSES], "Mean number of senses of content words"),
    m!("nouns_ambiguity", SemanticWordInformation, [POS, SENSES], "Mean number of senses of nouns"),
    m!("adjectives_ambiguity", SemanticWordInformation, [POS, SENSES], "Mean number of senses of adjectives"),
    m!("verbs_ambiguity", SemanticWordInformation, [POS, SENSES], "Mean number of senses of verbs"),
    m!("adverbs_ambiguity", SemanticWordInformation, [POS, SENSES], "Mean number of senses of adverbs"),
    m!("hypernyms_verbs", SemanticWordInformation, [POS, HYPERNYMS], "Mean over sentences of the mean hypernym count of their verbs"),
    m!("abstract_nouns_ratio", SemanticWordInformation, [POS, ABSTRACT], "Abstract nouns over nouns in the text"),
    m!("abstract_nouns_per_sentence", SemanticWordInformation, [POS, ABSTRACT], "Mean over sentences of abstract nouns over nouns"),
    m!("proper_noun_ratio", SemanticWordInformation, [POS], "Proper nouns over nouns and proper nouns"),
    // Morphosyntactic Word Information
    m!("content_words", MorphosyntacticWordInformation, [POS], "Content words per word"),
    m!("function_words", MorphosyntacticWordInformation, [POS], "Function words per word"),
    m!("ratio_function_to_content_words", MorphosyntacticWordInformation, [POS], "Function words divided by content words"),
    m!("nouns", MorphosyntacticWordInformation, [POS], "Nouns per word"),
    m!("proper_nouns", MorphosyntacticWordInformation, [POS], "Proper nouns per word"),
    m!("adjectives", MorphosyntacticWordInformation, [POS], "Adjectives per word"),
    m!("adverbs", MorphosyntacticWordInformation, [POS], "Adverbs per word"),
    m!("verbs", MorphosyntacticWordInformation, [POS], "Main verbs per word"),
    m!("auxiliary_verbs", MorphosyntacticWordInformation, [POS], "Auxiliary verbs per word"),
    m!("inflected_verbs", MorphosyntacticWordInformation, [POS], "Finite verbs and auxiliaries per word"),
    m!("non_inflected_verbs", MorphosyntacticWordInformation, [POS], "Infinitive, gerund and participle verb forms per word"),
    m!("infinitive_verbs", MorphosyntacticWordInformation, [POS], "Infinitive verb forms per word"),
    m!("pronouns", MorphosyntacticWordInformation, [POS], "Pronouns per word"),
    m!("personal_pronouns", MorphosyntacticWordInformation, [POS], "Personal pronouns per word"),
    m!("first_person_pronouns", MorphosyntacticWordInformation, [POS], "First-person share of personal pronouns"),
    m!("second_person_pronouns", MorphosyntacticWordInformation, [POS], "Second-person share of personal pronouns"),
    m!("third_person_pronouns", MorphosyntacticWordInformation, [POS], "Third-person share of personal pronouns"),
    m!("relative_pronouns", MorphosyntacticWordInformation, [POS], "Relative pronouns over pronouns"),
    m!("indefinite_pronouns", MorphosyntacticWordInformation, [POS], "Indefinite pronouns over pronouns"),
    m!("prepositions", MorphosyntacticWordInformation, [POS], "Prepositions per word"),
    m!("prepositions_per_sentence", MorphosyntacticWordInformation, [POS], "Mean number of prepositions per sentence"),
    m!("prepositions_per_clause", MorphosyntacticWordInformation, [POS], "Prepositions divided by clauses"),
    m!("nouns_mean", MorphosyntacticWordInformation, [POS], "Mean per-sentence noun incidence"),
    m!("nouns_standard_deviation", MorphosyntacticWordInformation, [POS], "Standard deviation of per-sentence noun incidence"),
    m!("nouns_min", MorphosyntacticWordInformation, [POS], "Smallest per-sentence noun incidence"),
    m!("nouns_max", MorphosyntacticWordInformation, [POS], "Largest per-sentence noun incidence"),
    m!("verbs_mean", MorphosyntacticWordInformation, [POS], "Mean per-sentence verb incidence"),
    m!("verbs_standard_deviation", MorphosyntacticWordInformation, [POS], "Standard deviation of per-sentence verb incidence"),
    m!("verbs_min", MorphosyntacticWordInformation, [POS], "Smallest per-sentence verb incidence"),
    m!("verbs_max", MorphosyntacticWordInformation, [POS], "Largest per-sentence verb incidence"),
    m!("adjectives_mean", MorphosyntacticWordInformation, [POS], "Mean per-sentence adjective incidence"),
    m!("adjectives_standard_deviation", MorphosyntacticWordInformation, [POS], "Standard deviation of per-sentence adjective incidence"),
    m!("adjectives_min", MorphosyntacticWordInformation, [POS], "Smallest per-sentence adjective incidence"),
    m!("adjectives_max", MorphosyntacticWordInformation, [POS], "Largest per-sentence adjective incidence"),
    m!("adverbs_mean", MorphosyntacticWordInformation, [POS], "Mean per-sentence adverb incidence"),
    m!("adverbs_standard_deviation", MorphosyntacticWordInformation, [POS], "Standard deviation of per-sentence adverb incidence"),
    m!("adverbs_min", MorphosyntacticWordInformation, [POS], "Smallest per-sentence adverb incidence"),
    m!("adverbs_max", MorphosyntacticWordInformation, [POS], "Largest per-sentence adverb incidence"),
    m!("pronouns_mean", MorphosyntacticWordInformation, [POS], "Mean per-sentence pronoun incidence"),
    m!("pronouns_standard_deviation", MorphosyntacticWordInformation, [POS], "Standard deviation of per-sentence pronoun incidence"),
    m!("pronouns_min", MorphosyntacticWordInformation, [POS], "Smallest per-sentence pronoun incidence"),
    m!("pronouns_max", MorphosyntacticWordInformation, [POS], "Largest per-sentence pronoun incidence"),
    // Word Frequency
    m!("cw_freq_a", WordFrequency, [POS, FREQ_A], "Mean zipf frequency of content words, table A"),
    m!("min_cw_freq_a", WordFrequency, [POS, FREQ_A], "Mean over sentences of the rarest content word zipf, table A"),
    m!("freq_a", WordFrequency, [FREQ_A], "Mean zipf frequency of all words, table A"),
    m!("min_freq_a", WordFrequency, [FREQ_A], "Mean over sentences of the rarest word zipf, table A"),
    m!("cw_freq_b", WordFrequency, [POS, FREQ_B], "Mean zipf frequency of content words, table B"),
    m!("min_cw_freq_b", WordFrequency, [POS, FREQ_B], "Mean over sentences of the rarest content word zipf, table B"),
    m!("freq_b", WordFrequency, [FREQ_B], "Mean zipf frequency of all words, table B"),
    m!("min_freq_b", WordFrequency, [FREQ_B], "Mean over sentences of the rarest word zipf, table B"),
    m!("cw_freq_legacy", WordFrequency, [POS, LEGACY], "Mean raw frequency of content words, legacy table"),
    m!("min_freq_legacy", WordFrequency, [LEGACY], "Mean over sentences of the rarest word raw frequency, legacy table"),
    // Psycholinguistic Measures
    m!("idade_aquisicao_mean", PsycholinguisticMeasures, [POS, NORMS], "Mean age of acquisition of content words"),
    m!("idade_aquisicao_std", PsycholinguisticMeasures, [POS, NORMS], "Standard deviation of age of acquisition"),
    m!("idade_aquisicao_1_25_ratio", PsycholinguisticMeasures, [POS, NORMS], "Share of content words with age of acquisition in [1, 2.5)"),
    m!("idade_aquisicao_25_4_ratio", PsycholinguisticMeasures, [POS, NORMS], "Share of content words with age of acquisition in [2.5, 4)"),
    m!("idade_aquisicao_4_55_ratio", PsycholinguisticMeasures, [POS, NORMS], "Share of content words with age of acquisition in [4, 5.5)"),
    m!("idade_aquisicao_55_7_ratio", PsycholinguisticMeasures, [POS, NORMS], "Share of content words with age of acquisition in [5.5, 7]"),
    m!("concretude_mean", PsycholinguisticMeasures, [POS, NORMS], "Mean concreteness of content words"),
    m!("concretude_std", PsycholinguisticMeasures, [POS, NORMS], "Standard deviation of concreteness"),
    m!("concretude_1_25_ratio", PsycholinguisticMeasures, [POS, NORMS], "Share of content words with concreteness in [1, 2.5)"),
    m!("concretude_25_4_ratio", PsycholinguisticMeasures, [POS, NORMS], "Share of content words with concreteness in [2.5, 4)"),
    m!("concretude_4_55_ratio", PsycholinguisticMeasures, [POS, NORMS], "Share of content words with concreteness in [4, 5.5)"),
    m!("concretude_55_7_ratio", PsycholinguisticMeasures, [POS, NORMS], "Share of content words with concreteness in [5.5, 7]"),
    m!("familiaridade_mean", PsycholinguisticMeasures, [POS, NORMS], "Mean familiarity of content words"),
    m!("familiaridade_std", PsycholinguisticMeasures, [POS, NORMS], "Standard deviation of familiarity"),
    m!("familiaridade_1_25_ratio", PsycholinguisticMeasures, [POS, NORMS], "Share of content words with familiarity in [1, 2.5)"),
    m!("familiaridade_25_4_ratio", PsycholinguisticMeasures, [POS, NORMS], "Share of content words with familiarity in [2.5, 4)"),
    m!("familiaridade_4_55_ratio", PsycholinguisticMeasures, [POS, NORMS], "Share of content words with familiarity in [4, 5.5)"),
    m!("familiaridade_55_7_ratio", PsycholinguisticMeasures, [POS, NORMS], "Share of content words with familiarity in [5.5, 7]"),
    m!("imageabilidade_mean", PsycholinguisticMeasures, [POS, NORMS], "Mean imageability of content words"),
    m!("imageabilidade_std", PsycholinguisticMeasures, [POS, NORMS], "Standard deviation of imageability"),
    m!("imageabilidade_1_25_ratio", PsycholinguisticMeasures, [POS, NORMS], "Share of content words with imageability in [1, 2.5)"),
    m!("imageabilidade_25_4_ratio", PsycholinguisticMeasures, [POS, NORMS], "Share of content words with imageability in [2.5, 4)"),
    m!("imageabilidade_4_55_ratio", PsycholinguisticMeasures, [POS, NORMS], "Share of content words with imageability in [4, 5.5)"),
    m!("imageabilidade_55_7_ratio", PsycholinguisticMeasures, [POS, NORMS], "Share of content words with imageability in [5.5, 7]"),
    // Readability Formulas
    m!("brunet", ReadabilityFormulas, [], "Brunet's W: tokens raised to types^-0.165"),
    m!("dalechall_adapted", ReadabilityFormulas, [SIMPLE], "Adapted Dale-Chall: 0.1579 %unfamiliar + 0.0496 ASL + 3.6365"),
    m!("flesch", ReadabilityFormulas, [], "Adapted Flesch: 248.835 - 1.015 ASL - 84.6 ASW"),
    m!("gunning_fog", ReadabilityFormulas, [], "Gunning Fog: 0.4 (ASL + %words with more than two syllables)"),
    m!("honore", ReadabilityFormulas, [], "Honore's R: 100 ln N / (1 - V1/V)"),
];
