mod common;

use std::fs;

use nilcmetrix::resources::{
    load_bundle, match_connectives, normalize, zipf, ConnectiveEntry, ConnectiveKind, ConnectiveLexicon, Polarity,
    ResourceError, ResourceKind,
};
use nilcmetrix::text::{Pos, Sentence, Token};
use proptest::prelude::*;

fn sentence(words: &[&str]) -> Sentence {
    Sentence::new(words.iter().enumerate().map(|(i, w)| Token::new(i + 1, *w, Pos::X)).collect())
}

fn lexicon(entries: &[(&str, ConnectiveKind, Polarity)]) -> ConnectiveLexicon {
    ConnectiveLexicon::new(
        entries.iter().map(|(f, k, p)| ConnectiveEntry { form: f.to_string(), kind: *k, polarity: *p }).collect(),
    )
    .unwrap()
}

#[test]
fn partial_manifest_loads_only_listed_resource() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("simple.txt"), "casa\ngato\n").unwrap();
    fs::write(dir.path().join("m.manifest"), "simple_words=simple.txt\n").unwrap();
    let bundle = load_bundle(dir.path().join("m.manifest")).unwrap();
    assert!(bundle.has(ResourceKind::SimpleWords));
    assert!(bundle.simple_words.as_ref().unwrap().contains("gato"));
    for kind in ResourceKind::ALL.iter().filter(|k| **k != ResourceKind::SimpleWords) {
        assert!(!bundle.has(*kind), "{kind} should be absent");
    }
}

#[test]
fn out_of_range_norm_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("norms.tsv"), "casa\t9.0\t5\t5\t5\n").unwrap();
    fs::write(dir.path().join("m.manifest"), "norms=norms.tsv\n").unwrap();
    match load_bundle(dir.path().join("m.manifest")) {
        Err(ResourceError::OutOfRange { line, value, .. }) => assert_eq!((line, value), (1, 9.0)),
        other => panic!("expected an out-of-range error, got {other:?}"),
    }
}

#[test]
fn unreadable_resource_names_the_file() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("m.manifest"), "polarity=missing.tsv\n").unwrap();
    let err = load_bundle(dir.path().join("m.manifest")).unwrap_err();
    assert!(err.to_string().contains("missing.tsv"));
}

#[test]
fn toy_fixture_bundle_is_complete() {
    let bundle = load_bundle(common::fixtures().join("resources/toy.manifest")).unwrap();
    for kind in ResourceKind::ALL {
        assert!(bundle.has(kind), "{kind} missing from the toy bundle");
    }
    // Counts checked against the fixture files.
    assert_eq!(bundle.norms.as_ref().unwrap().len(), 12);
    assert_eq!(bundle.embeddings.as_ref().unwrap().len(), 14);
    assert_eq!(bundle.embeddings.as_ref().unwrap().dim(), 3);
    assert!(bundle.connectives.as_ref().unwrap().is_ambiguous("mas"));
    assert_eq!(bundle.freq_a.as_ref().unwrap().corpus_name, "toy_a");
    let norms = bundle.norms.as_ref().unwrap();
    assert_eq!(norms.get("gato").unwrap().concreteness, 6.8);
}

#[test]
fn zipf_examples() {
    assert!((zipf(1.0).unwrap() - 3.0).abs() < 1e-12);
    assert!((zipf(1000.0).unwrap() - 6.0).abs() < 1e-12);
    assert!((zipf(31.62).unwrap() - 4.5).abs() < 1e-4);
    assert!(zipf(0.0).is_err());
}

#[test]
fn connective_matching_examples() {
    let lex = lexicon(&[("e", ConnectiveKind::Additive, Polarity::Positive)]);
    let m = match_connectives(&sentence(&["e"]), &lex);
    assert_eq!(m.len(), 1);
    assert_eq!((m[0].start, m[0].len), (0, 1));
    assert_eq!(m[0].senses, vec![(ConnectiveKind::Additive, Polarity::Positive)]);

    let lex = lexicon(&[
        ("por isso", ConnectiveKind::Causal, Polarity::Positive),
        ("por", ConnectiveKind::Causal, Polarity::Positive),
    ]);
    let m = match_connectives(&sentence(&["por", "isso"]), &lex);
    assert_eq!(m.len(), 1);
    assert_eq!((m[0].start, m[0].len, m[0].form.as_str()), (0, 2, "por isso"));

    assert!(match_connectives(&sentence(&["e", "mas"]), &ConnectiveLexicon::default()).is_empty());
}

#[test]
fn lookups_are_case_and_normalization_insensitive() {
    let lex = lexicon(&[("além disso", ConnectiveKind::Additive, Polarity::Positive)]);
    // Decomposed "é" and upper case still match.
    let m = match_connectives(&sentence(&["ALE\u{301}M", "Disso"]), &lex);
    assert_eq!(m.len(), 1);
    assert_eq!(normalize("ALE\u{301}M"), "além");
}

fn phrase_lexicon() -> ConnectiveLexicon {
    lexicon(&[
        ("a", ConnectiveKind::Additive, Polarity::Positive),
        ("a b", ConnectiveKind::Causal, Polarity::Positive),
        ("b c a", ConnectiveKind::Logical, Polarity::Negative),
        ("c", ConnectiveKind::Temporal, Polarity::Positive),
    ])
}

proptest! {
    #[test]
    fn zipf_is_strictly_monotone(a in 1e-6f64..1e6, b in 1e-6f64..1e6) {
        prop_assume!(a < b);
        prop_assert!(zipf(a).unwrap() < zipf(b).unwrap());
    }

    #[test]
    fn matches_are_sorted_and_disjoint(words in prop::collection::vec(prop::sample::select(vec!["a", "b", "c", "d"]), 0..20)) {
        let m = match_connectives(&sentence(&words), &phrase_lexicon());
        for pair in m.windows(2) {
            prop_assert!(pair[0].start + pair[0].len <= pair[1].start);
        }
        for x in &m {
            prop_assert!(x.start + x.len <= words.len());
        }
    }
}
