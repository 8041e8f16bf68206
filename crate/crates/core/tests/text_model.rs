mod common;

use nilcmetrix::text::{ingest_plaintext_str, parse_conllu_str, syllabify, to_conllu, Pos, TextError};
use nilcmetrix::{ingest_plaintext, parse_conllu};
use proptest::prelude::*;

#[test]
fn minimal_conllu_document() {
    let doc = parse_conllu("1\tcasa\tcasa\tNOUN\t_\t_\t0\troot\t_\t_\n".as_bytes()).unwrap();
    assert_eq!(doc.paragraphs.len(), 1);
    assert_eq!(doc.sentence_count(), 1);
    assert_eq!(doc.paragraphs[0].sentences[0].tokens.len(), 1);
    assert!(doc.annotation.pos && doc.annotation.deps);
}

#[test]
fn nine_column_row_names_its_line() {
    let text = "# text = casa\n1\tcasa\tcasa\tNOUN\t_\t_\t0\troot\t_\n";
    match parse_conllu_str(text, "d") {
        Err(TextError::ColumnCount { line, found }) => assert_eq!((line, found), (2, 9)),
        other => panic!("expected a column error, got {other:?}"),
    }
}

#[test]
fn sentences_without_newpar_share_one_paragraph() {
    let text = format!(
        "{}\n{}\n",
        common::sentence_block(&["Oi oi INTJ _ 0 root"]),
        common::sentence_block(&["Tchau tchau INTJ _ 0 root"])
    );
    let doc = parse_conllu_str(&text, "d").unwrap();
    assert_eq!(doc.paragraphs.len(), 1);
    assert_eq!(doc.paragraphs[0].sentences.len(), 2);
    // Count oracle: sentences equal the number of blank-line separated blocks.
    let blocks = text.split("\n\n").filter(|b| !b.trim().is_empty()).count();
    assert_eq!(doc.sentence_count(), blocks);
}

#[test]
fn plaintext_examples() {
    let doc = ingest_plaintext("Oi. Tchau.".as_bytes()).unwrap();
    assert_eq!(doc.paragraphs.len(), 1);
    assert_eq!(doc.sentence_count(), 2);
    assert!(matches!(ingest_plaintext_str("", "d"), Err(TextError::Empty)));
    let doc = ingest_plaintext_str("Um dois três", "d").unwrap();
    assert_eq!(doc.sentence_count(), 1);
    assert_eq!(doc.paragraphs[0].sentences[0].tokens.len(), 3);
    assert!(!doc.annotation.pos && !doc.annotation.deps);
}

#[test]
fn plaintext_blank_lines_split_paragraphs() {
    let doc = ingest_plaintext_str("Primeiro parágrafo.\n\nSegundo. Terceiro.", "d").unwrap();
    assert_eq!(doc.paragraphs.len(), 2);
    assert_eq!(doc.sentence_count(), 3);
}

#[test]
fn syllable_examples() {
    assert_eq!(syllabify("a").unwrap(), 1);
    assert_eq!(syllabify("casa").unwrap(), 2);
    assert_eq!(syllabify("criança").unwrap(), 3);
    assert!(syllabify("c3po").is_err());
}

#[test]
fn content_words_include_proper_nouns_not_auxiliaries() {
    assert!(Pos::Propn.is_content());
    assert!(!Pos::Aux.is_content());
    assert!(Pos::Adv.is_content());
}

fn vowel_letters(w: &str) -> usize {
    w.chars().filter(|c| "aeiouáéíóúâêôãõàü".contains(*c)).count()
}

const LETTERS: &str = "abcdefghijlmnopqrstuvxzçáéíóúâêôãõàü";

fn word() -> impl Strategy<Value = String> {
    let letters: Vec<char> = LETTERS.chars().collect();
    prop::collection::vec(prop::sample::select(letters), 1..14).prop_map(|v| v.into_iter().collect())
}

fn random_conllu() -> impl Strategy<Value = String> {
    let sentence = prop::collection::vec((word(), 0usize..4), 1..8).prop_map(|tokens| {
        let tags = ["NOUN", "VERB", "ADJ", "DET"];
        let rels = ["nsubj", "obj", "amod", "det"];
        let mut block = String::new();
        for (i, (w, tag)) in tokens.iter().enumerate() {
            let (head, rel) = if i == 0 { (0, "root") } else { (1, rels[*tag]) };
            block.push_str(&format!("{}\t{w}\t{w}\t{}\t_\t_\t{head}\t{rel}\t_\t_\n", i + 1, tags[*tag]));
        }
        block
    });
    prop::collection::vec(sentence, 1..5).prop_map(|blocks| blocks.join("\n"))
}

proptest! {
    #[test]
    fn syllables_bounded_by_vowels(w in word()) {
        let n = syllabify(&w).unwrap();
        prop_assert!(n >= 1);
        prop_assert!(n <= vowel_letters(&w).max(1));
    }

    #[test]
    fn conllu_round_trip(text in random_conllu()) {
        let doc = parse_conllu_str(&text, "d").unwrap();
        let again = parse_conllu_str(&to_conllu(&doc), "d").unwrap();
        let flat = |d: &nilcmetrix::Document| -> Vec<(String, usize, String)> {
            d.sentences().flat_map(|s| s.tokens.iter().map(|t| (t.surface.clone(), t.head, t.deprel.clone()))).collect()
        };
        prop_assert_eq!(flat(&doc), flat(&again));
        for s in again.sentences() {
            prop_assert_eq!(s.tokens.iter().filter(|t| t.head == 0).count(), 1);
        }
    }

    #[test]
    fn plaintext_sentences_have_one_root(words in prop::collection::vec(word(), 1..30)) {
        let doc = ingest_plaintext_str(&words.join(" "), "d").unwrap();
        for s in doc.sentences() {
            prop_assert_eq!(s.tokens.iter().filter(|t| t.head == 0).count(), 1);
        }
    }
}
