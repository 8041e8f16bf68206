mod common;

use common::doc;
use nilcmetrix::metrics::dependency::{
    clause_analysis, dependency_distance, noun_phrases, pattern_density, syntactic_complexity, words_before_main_verb,
};
use nilcmetrix::metrics::trees::{frazier, frazier_scores, yngve, yngve_loads, DEFAULT_SENTENCE_LABELS};
use nilcmetrix::text::{parse_bracketed, ConstituencyNode};
use nilcmetrix::Sentence;
use proptest::prelude::*;

const FIN: &str = "Mood=Ind|Tense=Pres|VerbForm=Fin";

fn sentence(tokens: &[&str]) -> Sentence {
    doc(&[tokens]).paragraphs[0].sentences[0].clone()
}

fn tree(text: &str) -> ConstituencyNode {
    parse_bracketed(text).unwrap()
}

#[test]
fn yngve_examples() {
    assert_eq!(yngve(&tree("(S w)")), 0.0);
    assert_eq!(yngve_loads(&tree("(S a b c)")), vec![2.0, 1.0, 0.0]);
    assert_eq!(yngve(&tree("(S a b c)")), 1.0);
    // (S (NP a b) c): a carries 1 (NP's sibling) + 1, b carries 1, c carries 0.
    assert_eq!(yngve_loads(&tree("(S (NP a b) c)")), vec![2.0, 1.0, 0.0]);
}

#[test]
fn frazier_examples() {
    assert_eq!(frazier(&tree("(S w)")), 2.5);
    // b is the leftmost child of a non-leftmost VP: it restarts at 0 + 1.
    let scores = frazier_scores(&tree("(S a (VP b c))"), &DEFAULT_SENTENCE_LABELS);
    assert_eq!(scores, vec![2.5, 1.0, 0.0]);
}

#[test]
fn dependency_distance_examples() {
    assert_eq!(dependency_distance(&sentence(&["Ele ele PRON _ 2 nsubj", &format!("dorme dormir VERB {FIN} 0 root")])), Some(1.0));
    // Arcs of length 1, 1 and 4; the punctuation arc is ignored.
    let s = sentence(&[
        "a a NOUN _ 2 nsubj",
        &format!("b b VERB {FIN} 0 root"),
        "c c ADV _ 2 advmod",
        ", , PUNCT _ 2 punct",
        "e e NOUN _ 1 nmod",
    ]);
    assert_eq!(dependency_distance(&s), Some(2.0));
    assert_eq!(dependency_distance(&sentence(&["Sim sim INTJ _ 0 root"])), None);
}

#[test]
fn words_before_main_verb_examples() {
    let s = sentence(&["O o DET _ 2 det", "gato gato NOUN _ 3 nsubj", &format!("dorme dormir VERB {FIN} 0 root")]);
    assert_eq!(words_before_main_verb(&s), Some(2));
    let s = sentence(&[&format!("Dorme dormir VERB {FIN} 0 root"), "o o DET _ 3 det", "gato gato NOUN _ 1 nsubj"]);
    assert_eq!(words_before_main_verb(&s), Some(0));
    let s = sentence(&["Bom bom ADJ _ 2 amod", "dia dia NOUN _ 0 root"]);
    assert_eq!(words_before_main_verb(&s), None);
}

#[test]
fn clause_analysis_examples() {
    let svo = sentence(&[
        "O o DET _ 2 det",
        "gato gato NOUN _ 3 nsubj",
        &format!("come comer VERB {FIN} 0 root"),
        "peixe peixe NOUN _ 3 obj",
    ]);
    let a = clause_analysis(&svo);
    assert_eq!((a.clause_count, a.non_svo, a.passive), (1, 0, 0));

    let passive = sentence(&[
        "O o DET _ 2 det",
        "peixe peixe NOUN _ 4 nsubj:pass",
        &format!("foi ser AUX {FIN} 4 aux:pass"),
        "comido comer VERB VerbForm=Part 0 root",
    ]);
    let a = clause_analysis(&passive);
    assert_eq!(a.passive, 1);
    assert_eq!(a.clause_count, 1);

    let inverted = sentence(&[&format!("Chegou chegar VERB {FIN} 0 root"), "o o DET _ 3 det", "gato gato NOUN _ 1 nsubj"]);
    let a = clause_analysis(&inverted);
    assert_eq!((a.non_svo, a.postponed_subject), (1, 1));
}

#[test]
fn noun_phrase_examples() {
    let s = sentence(&["o o DET _ 2 det", "gato gato NOUN _ 3 nsubj", &format!("dorme dormir VERB {FIN} 0 root")]);
    assert_eq!(noun_phrases(&s), vec![2]);
    let s = sentence(&["Ele ele PRON _ 2 nsubj", &format!("dorme dormir VERB {FIN} 0 root")]);
    assert_eq!(noun_phrases(&s), vec![1]);
    let p = pattern_density(&doc(&[&["o o DET _ 2 det", "gato gato NOUN _ 3 nsubj", &format!("dorme dormir VERB {FIN} 0 root")]]));
    assert_eq!(p.np_mean_words, Some(2.0));
    assert_eq!(p.np_min_words, Some(2.0));
    let verbs_only = pattern_density(&doc(&[&[&format!("Chove chover VERB {FIN} 0 root")]]));
    assert_eq!(verbs_only.np_mean_words, None);
}

fn arb_tree() -> impl Strategy<Value = ConstituencyNode> {
    let leaf = Just(ConstituencyNode::leaf("w", 0));
    leaf.prop_recursive(5, 24, 4, |inner| {
        (prop::sample::select(vec!["S", "NP", "VP", "PP", "IP", "CP"]), prop::collection::vec(inner, 1..4))
            .prop_map(|(label, children)| ConstituencyNode::node(label, children))
    })
}

fn is_chain(t: &ConstituencyNode) -> bool {
    t.is_leaf() || (t.children.len() == 1 && is_chain(&t.children[0]))
}

/// Wraps the leftmost leaf in a new unary node.
fn deepen_leftmost(t: &ConstituencyNode, label: &str) -> ConstituencyNode {
    if t.is_leaf() {
        return ConstituencyNode::node(label, vec![t.clone()]);
    }
    let mut children = t.children.clone();
    children[0] = deepen_leftmost(&children[0], label);
    ConstituencyNode::node(t.label.clone(), children)
}

fn words(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| if i == 0 { format!("v v VERB {FIN} 0 root") } else { format!("w{i} w NOUN _ 1 obj") })
        .collect()
}

proptest! {
    #[test]
    fn yngve_zero_only_for_chains(t in arb_tree()) {
        let y = yngve(&t);
        prop_assert!(y >= 0.0);
        prop_assert_eq!(y == 0.0, is_chain(&t));
    }

    #[test]
    fn frazier_grows_with_leftmost_depth(t in arb_tree(), label in prop::sample::select(vec!["S", "NP"])) {
        let before = frazier(&t);
        let after = frazier(&deepen_leftmost(&t, label));
        prop_assert!(before >= 0.0);
        prop_assert!(after > before);
    }

    #[test]
    fn dependency_distance_at_least_one(n in 2usize..15) {
        let owned = words(n);
        let specs: Vec<&str> = owned.iter().map(String::as_str).collect();
        let d = dependency_distance(&sentence(&specs)).unwrap();
        prop_assert!(d >= 1.0);
    }

    #[test]
    fn clause_proportions_in_unit_interval(
        rels in prop::collection::vec(prop::sample::select(vec!["nsubj", "obj", "advcl", "acl:relcl", "ccomp", "aux:pass", "conj", "xcomp"]), 1..10),
        finite in prop::collection::vec(any::<bool>(), 10),
    ) {
        let mut owned = vec![format!("v v VERB {FIN} 0 root")];
        for (i, rel) in rels.iter().enumerate() {
            let feats = if finite[i] { FIN } else { "VerbForm=Inf" };
            let pos = if rel.starts_with("aux") { "AUX" } else { "VERB" };
            owned.push(format!("x{i} x {pos} {feats} 1 {rel}"));
        }
        let specs: Vec<&str> = owned.iter().map(String::as_str).collect();
        let c = syntactic_complexity(&doc(&[&specs]));
        for v in [c.coordinate_per_clause, c.subordinate, c.relative, c.adverbial, c.passive, c.non_svo, c.postponed_subject, c.infinitive, c.participle] {
            let v = v.unwrap();
            prop_assert!((0.0..=1.0).contains(&v), "{v}");
        }
        prop_assert!(clause_analysis(&sentence(&specs)).clause_count >= 1);
    }
}
