//! Builders for small CoNLL-U documents. A token is written as
//! `"form lemma UPOS feats head deprel"`, with `_` for empty features.
#![allow(dead_code)]

use std::path::PathBuf;

use nilcmetrix::text::parse_conllu_str;
use nilcmetrix::Document;

pub fn sentence_block(tokens: &[&str]) -> String {
    let mut out = String::new();
    for (i, spec) in tokens.iter().enumerate() {
        let f: Vec<&str> = spec.split_whitespace().collect();
        assert_eq!(f.len(), 6, "bad token spec {spec:?}");
        out.push_str(&format!("{}\t{}\t{}\t{}\t_\t{}\t{}\t{}\t_\t_\n", i + 1, f[0], f[1], f[2], f[3], f[4], f[5]));
    }
    out
}

/// One paragraph per inner slice.
pub fn paragraphs(paras: &[&[&[&str]]]) -> Document {
    let mut text = String::new();
    for para in paras {
        text.push_str("# newpar\n");
        for s in *para {
            text.push_str(&sentence_block(s));
            text.push('\n');
        }
    }
    parse_conllu_str(&text, "test").expect("valid test document")
}

pub fn doc(sentences: &[&[&str]]) -> Document {
    paragraphs(&[sentences])
}

/// A sentence of `n` nouns attached to the first one.
pub fn noun_sentence(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| if i == 0 { "w0 w0 NOUN _ 0 root".to_string() } else { format!("w{i} w{i} NOUN _ 1 nmod") })
        .collect()
}

/// Document made of noun-only sentences of the given lengths.
pub fn doc_with_lengths(lengths: &[usize]) -> Document {
    let owned: Vec<Vec<String>> = lengths.iter().map(|&n| noun_sentence(n)).collect();
    let refs: Vec<Vec<&str>> = owned.iter().map(|s| s.iter().map(String::as_str).collect()).collect();
    let slices: Vec<&[&str]> = refs.iter().map(Vec::as_slice).collect();
    doc(&slices)
}

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// The fixture corpus in file-name order.
pub fn fixture_corpus() -> Vec<Document> {
    let dir = fixtures().join("corpus");
    let mut paths: Vec<PathBuf> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let text = std::fs::read_to_string(p).unwrap();
            let stem = p.file_stem().unwrap().to_string_lossy().into_owned();
            parse_conllu_str(&text, &stem).unwrap()
        })
        .collect()
}
