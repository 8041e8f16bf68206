//! Semantic cohesion in an embedding space. A sentence vector is the
//! unweighted mean of the vectors of its in-vocabulary words (surface form
//! first, then lemma).

use std::collections::{HashMap, HashSet};

use super::context::SentenceView;
use super::{mean, std_dev, Context, Emitted};
use crate::resources::{EmbeddingModel, ResourceBundle};
use crate::text::Document;

#[derive(Debug, Clone, PartialEq)]
pub struct SentenceVector {
    pub values: Vec<f64>,
    /// Share of the sentence's words found in the model.
    pub coverage: f64,
}

impl SentenceVector {
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| *v == 0.0)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// `None` when either vector is zero.
pub fn cosine(a: &[f64], b: &[f64]) -> Option<f64> {
    let (na, nb) = (norm(a), norm(b));
    (na > 0.0 && nb > 0.0).then(|| (dot(a, b) / (na * nb)).clamp(-1.0, 1.0))
}

fn mean_vector<'a>(dim: usize, vectors: impl IntoIterator<Item = &'a [f64]>) -> Vec<f64> {
    let mut sum = vec![0.0; dim];
    let mut n = 0;
    for v in vectors {
        for (s, x) in sum.iter_mut().zip(v) {
            *s += x;
        }
        n += 1;
    }
    if n > 0 {
        sum.iter_mut().for_each(|s| *s /= n as f64);
    }
    sum
}

fn vector_of(s: &SentenceView, model: &EmbeddingModel) -> SentenceVector {
    let words: Vec<_> = s.words().collect();
    let found: Vec<&[f64]> = words.iter().filter_map(|w| w.lookup_surface_first(|f| model.get(f))).collect();
    let coverage = if words.is_empty() { 0.0 } else { found.len() as f64 / words.len() as f64 };
    SentenceVector { values: mean_vector(model.dim(), found), coverage }
}

/// Vectors for every sentence of a document, in order.
pub fn sentence_vectors(doc: &Document, model: &EmbeddingModel) -> Vec<SentenceVector> {
    let bundle = ResourceBundle::default();
    let ctx = Context::new(doc, &bundle);
    ctx.sentences.iter().map(|s| vector_of(s, model)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanSd {
    pub mean: f64,
    pub sd: f64,
}

impl MeanSd {
    fn of(values: &[f64]) -> Option<MeanSd> {
        Some(MeanSd { mean: mean(values)?, sd: std_dev(values)? })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LsaSimilarities {
    pub adjacent: Option<MeanSd>,
    pub paragraphs: Option<MeanSd>,
    pub all_pairs: Option<MeanSd>,
}

/// Cosines between consecutive sentences, consecutive paragraphs (mean of
/// their sentence vectors) and all sentence pairs. Pairs involving a zero
/// vector are skipped.
pub fn lsa_similarities(doc: &Document, model: &EmbeddingModel) -> LsaSimilarities {
    let bundle = ResourceBundle::default();
    let ctx = Context::new(doc, &bundle);
    let vectors: Vec<Vec<f64>> = ctx.sentences.iter().map(|s| vector_of(s, model).values).collect();
    similarities(&ctx, &vectors, model.dim())
}

fn similarities(ctx: &Context, v: &[Vec<f64>], dim: usize) -> LsaSimilarities {
    let adjacent: Vec<f64> = v.windows(2).filter_map(|w| cosine(&w[0], &w[1])).collect();
    let all: Vec<f64> =
        (0..v.len()).flat_map(|i| (i + 1..v.len()).map(move |j| (i, j))).filter_map(|(i, j)| cosine(&v[i], &v[j])).collect();
    let paragraphs: Vec<Vec<f64>> =
        ctx.paragraphs.iter().map(|r| mean_vector(dim, v[r.clone()].iter().map(Vec::as_slice))).collect();
    let para: Vec<f64> = paragraphs.windows(2).filter_map(|w| cosine(&w[0], &w[1])).collect();
    LsaSimilarities { adjacent: MeanSd::of(&adjacent), paragraphs: MeanSd::of(&para), all_pairs: MeanSd::of(&all) }
}

/// Cosine of each sentence (from the second) with the mean of all the
/// sentences before it.
pub fn lsa_givenness(doc: &Document, model: &EmbeddingModel) -> Option<MeanSd> {
    let vectors: Vec<Vec<f64>> = sentence_vectors(doc, model).into_iter().map(|s| s.values).collect();
    givenness(&vectors, model.dim())
}

fn givenness(v: &[Vec<f64>], dim: usize) -> Option<MeanSd> {
    let scores: Vec<f64> = (1..v.len())
        .filter_map(|i| cosine(&v[i], &mean_vector(dim, v[..i].iter().map(Vec::as_slice))))
        .collect();
    MeanSd::of(&scores)
}

/// Residuals smaller than this fraction of the input norm are dropped when
/// extending the orthonormal basis.
pub const SPAN_TOLERANCE: f64 = 1e-10;

/// Share of `v`'s norm inside the span of `basis` (orthonormal).
fn projection_ratio(v: &[f64], basis: &[Vec<f64>]) -> f64 {
    let projected: f64 = basis.iter().map(|e| dot(v, e).powi(2)).sum::<f64>().sqrt();
    (projected / norm(v)).clamp(0.0, 1.0)
}

fn extend_basis(basis: &mut Vec<Vec<f64>>, v: &[f64]) {
    let scale = norm(v);
    if scale == 0.0 {
        return;
    }
    let mut r = v.to_vec();
    // Two passes of modified Gram-Schmidt keep the basis orthogonal.
    for _ in 0..2 {
        for e in basis.iter() {
            let c = dot(&r, e);
            r.iter_mut().zip(e).for_each(|(x, y)| *x -= c * y);
        }
    }
    let rn = norm(&r);
    if rn > SPAN_TOLERANCE * scale {
        basis.push(r.into_iter().map(|x| x / rn).collect());
    }
}

/// For each sentence from the second, `|projection| / |v|` of its vector
/// onto the span of the previous sentence vectors. Zero vectors are skipped.
pub fn lsa_span(doc: &Document, model: &EmbeddingModel) -> Option<MeanSd> {
    let vectors: Vec<Vec<f64>> = sentence_vectors(doc, model).into_iter().map(|s| s.values).collect();
    span(&vectors)
}

/// Span scores for an explicit vector sequence.
pub fn span_scores(vectors: &[Vec<f64>]) -> Vec<f64> {
    let mut basis = Vec::new();
    let mut scores = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if i > 0 && norm(v) > 0.0 {
            scores.push(projection_ratio(v, &basis));
        }
        extend_basis(&mut basis, v);
    }
    scores
}

fn span(v: &[Vec<f64>]) -> Option<MeanSd> {
    MeanSd::of(&span_scores(v))
}

/// Mean over adjacent pairs `(p, q)` of `-(1/|q|) sum log2 P_p(w)` for the
/// words `w` of `q`, with `P_p` the add-one smoothed unigram model of `p`
/// over the union vocabulary of both sentences.
pub fn cross_entropy(doc: &Document) -> Option<f64> {
    let bundle = ResourceBundle::default();
    cross_entropy_of(&Context::new(doc, &bundle))
}

pub fn pair_cross_entropy(p: &[&str], q: &[&str]) -> Option<f64> {
    if q.is_empty() {
        return None;
    }
    let vocab: HashSet<&str> = p.iter().chain(q).copied().collect();
    let mut counts: HashMap<&str, usize> = HashMap::new();
    for w in p {
        *counts.entry(w).or_default() += 1;
    }
    let denom = (p.len() + vocab.len()) as f64;
    let total: f64 = q.iter().map(|w| ((counts.get(w).copied().unwrap_or(0) + 1) as f64 / denom).log2()).sum();
    Some((-total / q.len() as f64).max(0.0))
}

fn cross_entropy_of(ctx: &Context) -> Option<f64> {
    let words: Vec<Vec<&str>> = ctx.sentences.iter().map(|s| s.words().map(|w| w.lower).collect()).collect();
    mean(&words.windows(2).filter_map(|w| pair_cross_entropy(&w[0], &w[1])).collect::<Vec<_>>())
}

pub(crate) fn emit(ctx: &Context) -> Emitted {
    let ce = cross_entropy_of(ctx);
    let Some(model) = ctx.bundle.embeddings.as_ref() else {
        let mut out: Emitted = [
            "lsa_adj_mean",
            "lsa_adj_std",
            "lsa_paragraph_mean",
            "lsa_paragraph_std",
            "lsa_all_mean",
            "lsa_all_std",
            "lsa_givenness_mean",
            "lsa_givenness_std",
            "lsa_span_mean",
            "lsa_span_std",
        ]
        .into_iter()
        .map(|id| (id, None))
        .collect();
        out.push(("cross_entropy", ce));
        return out;
    };
    let vectors: Vec<Vec<f64>> = ctx.sentences.iter().map(|s| vector_of(s, model).values).collect();
    let sims = similarities(ctx, &vectors, model.dim());
    let given = givenness(&vectors, model.dim());
    let spans = span(&vectors);
    vec![
        ("lsa_adj_mean", sims.adjacent.map(|m| m.mean)),
        ("lsa_adj_std", sims.adjacent.map(|m| m.sd)),
        ("lsa_paragraph_mean", sims.paragraphs.map(|m| m.mean)),
        ("lsa_paragraph_std", sims.paragraphs.map(|m| m.sd)),
        ("lsa_all_mean", sims.all_pairs.map(|m| m.mean)),
        ("lsa_all_std", sims.all_pairs.map(|m| m.sd)),
        ("lsa_givenness_mean", given.map(|m| m.mean)),
        ("lsa_givenness_std", given.map(|m| m.sd)),
        ("lsa_span_mean", spans.map(|m| m.mean)),
        ("lsa_span_std", spans.map(|m| m.sd)),
        ("cross_entropy", ce),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn cosine_examples() {
        assert_abs_diff_eq!(cosine(&[1.0, 0.0], &[1.0, 1.0]).unwrap(), 0.5f64.sqrt(), epsilon = 1e-12);
        assert_eq!(cosine(&[1.0, 0.0], &[0.0, 1.0]), Some(0.0));
        assert_eq!(cosine(&[0.0, 0.0], &[1.0, 1.0]), None);
    }

    #[test]
    fn span_examples() {
        let scores = span_scores(&[vec![1.0, 0.0], vec![1.0, 1.0]]);
        assert_abs_diff_eq!(scores[0], 0.5f64.sqrt(), epsilon = 1e-12);
        assert_eq!(span_scores(&[vec![1.0, 0.0], vec![0.0, 2.0]]), vec![0.0]);
        assert_eq!(span_scores(&[vec![1.0, 0.0], vec![3.0, 0.0]]), vec![1.0]);
    }

    #[test]
    fn cross_entropy_examples() {
        assert_abs_diff_eq!(pair_cross_entropy(&["a"], &["b"]).unwrap(), 3f64.log2(), epsilon = 1e-12);
        assert_eq!(pair_cross_entropy(&["w"], &["w"]), Some(0.0));
        assert_eq!(pair_cross_entropy(&["w"], &[]), None);
    }
}
