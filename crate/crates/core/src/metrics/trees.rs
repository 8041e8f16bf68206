//! Constituency-tree complexity: Yngve and Frazier scores.
//!
//! Frazier, per leaf: the root carries 1; a leftmost child carries its
//! parent's value plus 1.5 when the parent is a sentence node (1
//! otherwise); any other child restarts at 0. A leaf's score is the value
//! it carries. A single word under S therefore scores 1 + 1.5 = 2.5 and a
//! leaf that is not a leftmost child scores 0.

use super::{mean, Context, Emitted};
use crate::text::{ConstituencyNode, Document};

pub const DEFAULT_SENTENCE_LABELS: [&str; 3] = ["S", "IP", "CP"];

/// Label without function tags or indices (`S-TPC=2` -> `S`).
fn base_label(label: &str) -> &str {
    label.split(['-', '=']).next().unwrap_or(label)
}

fn is_sentence_label(label: &str, sentence_labels: &[&str]) -> bool {
    let base = base_label(label);
    sentence_labels.contains(&base)
}

/// Per-leaf Yngve loads in left-to-right order: for each leaf, the sum over
/// the nodes on its root path of the number of right siblings.
pub fn yngve_loads(tree: &ConstituencyNode) -> Vec<f64> {
    fn walk(node: &ConstituencyNode, load: usize, out: &mut Vec<f64>) {
        if node.is_leaf() {
            out.push(load as f64);
            return;
        }
        let n = node.children.len();
        for (i, child) in node.children.iter().enumerate() {
            walk(child, load + (n - 1 - i), out);
        }
    }
    let mut out = Vec::new();
    walk(tree, 0, &mut out);
    out
}

/// Mean Yngve load over leaves.
pub fn yngve(tree: &ConstituencyNode) -> f64 {
    mean(&yngve_loads(tree)).unwrap_or(0.0)
}

pub fn frazier_scores(tree: &ConstituencyNode, sentence_labels: &[&str]) -> Vec<f64> {
    fn walk(node: &ConstituencyNode, carried: f64, labels: &[&str], out: &mut Vec<f64>) {
        if node.is_leaf() {
            out.push(carried);
            return;
        }
        let weight = if is_sentence_label(&node.label, labels) { 1.5 } else { 1.0 };
        for (i, child) in node.children.iter().enumerate() {
            let value = if i == 0 { carried + weight } else { 0.0 };
            walk(child, value, labels, out);
        }
    }
    let mut out = Vec::new();
    walk(tree, 1.0, sentence_labels, &mut out);
    out
}

/// Mean Frazier score over leaves with the default sentence labels.
pub fn frazier(tree: &ConstituencyNode) -> f64 {
    frazier_with_labels(tree, &DEFAULT_SENTENCE_LABELS)
}

pub fn frazier_with_labels(tree: &ConstituencyNode, sentence_labels: &[&str]) -> f64 {
    mean(&frazier_scores(tree, sentence_labels)).unwrap_or(0.0)
}

/// Means over the sentences that carry a tree; `None` when none does.
pub fn tree_complexity(doc: &Document) -> (Option<f64>, Option<f64>) {
    let trees: Vec<&ConstituencyNode> = doc.sentences().filter_map(|s| s.tree.as_ref().map(|t| &t.root)).collect();
    let y: Vec<f64> = trees.iter().map(|t| yngve(t)).collect();
    let f: Vec<f64> = trees.iter().map(|t| frazier(t)).collect();
    (mean(&y), mean(&f))
}

pub(crate) fn emit(ctx: &Context) -> Emitted {
    let (y, f) = tree_complexity(ctx.doc);
    vec![("yngve", y), ("frazier", f)]
}
