//! Age of acquisition, concreteness, familiarity and imageability over
//! content-word tokens covered by the norm table (lemma first, then surface).

use super::{mean, std_dev, Context, Emitted};
use crate::resources::{NormScores, ResourceBundle};
use crate::text::Document;

/// Band edges on the 1-7 scale: [1, 2.5), [2.5, 4), [4, 5.5), [5.5, 7].
type Summary = fn(&PsycholinguisticProfile) -> NormSummary;

pub const BAND_EDGES: [f64; 3] = [2.5, 4.0, 5.5];

pub fn band_index(score: f64) -> usize {
    BAND_EDGES.iter().take_while(|&&edge| score >= edge).count()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormSummary {
    pub mean: f64,
    pub sd: f64,
    pub bands: [f64; 4],
}

impl NormSummary {
    pub fn of(scores: &[f64]) -> Option<NormSummary> {
        let mut counts = [0usize; 4];
        for &s in scores {
            counts[band_index(s)] += 1;
        }
        let n = scores.len() as f64;
        Some(NormSummary {
            mean: mean(scores)?,
            sd: std_dev(scores)?,
            bands: counts.map(|c| c as f64 / n),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsycholinguisticProfile {
    pub aoa: NormSummary,
    pub concreteness: NormSummary,
    pub familiarity: NormSummary,
    pub imageability: NormSummary,
    /// Number of covered content-word tokens.
    pub covered: usize,
}

/// `None` without a norm table or when no content word is covered.
pub fn psycholinguistic_profile(doc: &Document, bundle: &ResourceBundle) -> Option<PsycholinguisticProfile> {
    compute(&Context::new(doc, bundle))
}

fn compute(ctx: &Context) -> Option<PsycholinguisticProfile> {
    let norms = ctx.bundle.norms.as_ref()?;
    let covered: Vec<NormScores> =
        ctx.words().filter(|w| w.is_content()).filter_map(|w| w.lookup_lemma_first(|f| norms.get(f).copied())).collect();
    let summary = |field: fn(&NormScores) -> f64| NormSummary::of(&covered.iter().map(field).collect::<Vec<_>>());
    Some(PsycholinguisticProfile {
        aoa: summary(|s| s.aoa)?,
        concreteness: summary(|s| s.concreteness)?,
        familiarity: summary(|s| s.familiarity)?,
        imageability: summary(|s| s.imageability)?,
        covered: covered.len(),
    })
}

pub(crate) fn emit(ctx: &Context) -> Emitted {
    let profile = compute(ctx);
    let mut out = Vec::with_capacity(24);
    let groups: [(&str, Summary); 4] = [
        ("idade_aquisicao", |p| p.aoa),
        ("concretude", |p| p.concreteness),
        ("familiaridade", |p| p.familiarity),
        ("imageabilidade", |p| p.imageability),
    ];
    for (prefix, get) in groups {
        let s = profile.as_ref().map(get);
        out.push((id(prefix, "mean"), s.map(|s| s.mean)));
        out.push((id(prefix, "std"), s.map(|s| s.sd)));
        for (band, suffix) in ["1_25_ratio", "25_4_ratio", "4_55_ratio", "55_7_ratio"].into_iter().enumerate() {
            out.push((id(prefix, suffix), s.map(|s| s.bands[band])));
        }
    }
    out
}

/// Resolves `prefix_suffix` to the registry's static id.
fn id(prefix: &str, suffix: &str) -> &'static str {
    let wanted = format!("{prefix}_{suffix}");
    super::CATALOG.iter().find(|d| d.id == wanted).map(|d| d.id).expect("psycholinguistic id registered")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bands() {
        assert_eq!(band_index(1.0), 0);
        assert_eq!(band_index(2.4999), 0);
        assert_eq!(band_index(2.5), 1);
        assert_eq!(band_index(4.0), 2);
        assert_eq!(band_index(5.5), 3);
        assert_eq!(band_index(7.0), 3);
    }

    #[test]
    fn two_word_summary() {
        let s = NormSummary::of(&[2.0, 6.0]).unwrap();
        assert_eq!(s.mean, 4.0);
        assert_eq!(s.bands, [0.5, 0.0, 0.0, 0.5]);
        assert!(NormSummary::of(&[]).is_none());
    }
}
