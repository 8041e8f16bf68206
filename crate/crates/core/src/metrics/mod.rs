//! Metric registry and the per-document pipeline.
//!
//! Every metric has a stable snake_case id, belongs to exactly one of the
//! fourteen categories and declares the capabilities it needs. Values are
//! `Option<f64>`; `None` is MISSING (undefined input, empty denominator or
//! absent resource) and is never replaced by zero.

mod catalog;
mod context;

pub mod connectives;
pub mod dependency;
pub mod descriptive;
pub mod diversity;
pub mod easability;
pub mod frequency;
pub mod lsa;
pub mod morphosyntax;
pub mod psycholinguistic;
pub mod readability;
pub mod referential;
pub mod semantic;
pub mod temporal;
pub mod trees;

use std::collections::HashMap;
use std::fmt;
use std::panic::{self, AssertUnwindSafe};

use crate::resources::{ResourceBundle, ResourceKind};
use crate::text::Document;

pub use catalog::CATALOG;
pub(crate) use context::{Context, WordRef};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Category {
    DescriptiveIndex,
    TextEasability,
    ReferentialCohesion,
    LsaSemanticCohesion,
    LexicalDiversity,
    Connectives,
    TemporalLexicon,
    SyntacticComplexity,
    SyntacticPatternDensity,
    SemanticWordInformation,
    MorphosyntacticWordInformation,
    WordFrequency,
    PsycholinguisticMeasures,
    ReadabilityFormulas,
}

impl Category {
    pub const ALL: [Category; 14] = [
        Category::DescriptiveIndex,
        Category::TextEasability,
        Category::ReferentialCohesion,
        Category::LsaSemanticCohesion,
        Category::LexicalDiversity,
        Category::Connectives,
        Category::TemporalLexicon,
        Category::SyntacticComplexity,
        Category::SyntacticPatternDensity,
        Category::SemanticWordInformation,
        Category::MorphosyntacticWordInformation,
        Category::WordFrequency,
        Category::PsycholinguisticMeasures,
        Category::ReadabilityFormulas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Category::DescriptiveIndex => "Descriptive Index",
            Category::TextEasability => "Text Easability Metrics",
            Category::ReferentialCohesion => "Referential Cohesion",
            Category::LsaSemanticCohesion => "LSA-Semantic Cohesion",
            Category::LexicalDiversity => "Lexical Diversity",
            Category::Connectives => "Connectives",
            Category::TemporalLexicon => "Temporal Lexicon",
            Category::SyntacticComplexity => "Syntactic Complexity",
            Category::SyntacticPatternDensity => "Syntactic Pattern Density",
            Category::SemanticWordInformation => "Semantic Word Information",
            Category::MorphosyntacticWordInformation => "Morphosyntactic Word Information",
            Category::WordFrequency => "Word Frequency",
            Category::PsycholinguisticMeasures => "Psycholinguistic Measures",
            Category::ReadabilityFormulas => "Readability Formulas",
        }
    }

    pub fn from_name(name: &str) -> Option<Category> {
        Category::ALL.into_iter().find(|c| c.name().eq_ignore_ascii_case(name))
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A capability a metric needs from the document or the bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Requirement {
    /// Real part-of-speech tags (not the degraded plaintext mode).
    Pos,
    /// Dependency heads and relations.
    Dep,
    /// A constituency tree on at least one sentence.
    Tree,
    Resource(ResourceKind),
}

impl fmt::Display for Requirement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Requirement::Pos => f.write_str("POS"),
            Requirement::Dep => f.write_str("DEP"),
            Requirement::Tree => f.write_str("TREE"),
            Requirement::Resource(kind) => write!(f, "RESOURCE({kind})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricDef {
    pub id: &'static str,
    pub category: Category,
    pub requires: &'static [Requirement],
    pub description: &'static str,
}

impl MetricDef {
    /// Requirements joined with `,`, or `-` when there are none.
    pub fn requirements_label(&self) -> String {
        if self.requires.is_empty() {
            "-".to_string()
        } else {
            self.requires.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
        }
    }
}

/// The registry, in its stable order.
pub fn list_metrics() -> &'static [MetricDef] {
    CATALOG
}

pub fn metric_def(id: &str) -> Option<&'static MetricDef> {
    CATALOG.iter().find(|d| d.id == id)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub metric: String,
    pub message: String,
}

/// Values for one document, aligned with [`list_metrics`].
#[derive(Debug, Clone, PartialEq)]
pub struct MetricVector {
    pub doc_id: String,
    pub values: Vec<Option<f64>>,
    pub diagnostics: Vec<Diagnostic>,
}

impl MetricVector {
    /// `None` if the id is unknown, `Some(None)` if the value is MISSING.
    pub fn get(&self, id: &str) -> Option<Option<f64>> {
        CATALOG.iter().position(|d| d.id == id).map(|i| self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static MetricDef, Option<f64>)> + '_ {
        CATALOG.iter().zip(self.values.iter().copied())
    }
}

/// Values emitted by one metric family.
pub(crate) type Emitted = Vec<(&'static str, Option<f64>)>;

type Family = fn(&Context) -> Emitted;

const FAMILIES: &[(&str, Family)] = &[
    ("descriptive", descriptive::emit),
    ("easability", easability::emit),
    ("referential", referential::emit),
    ("lsa", lsa::emit),
    ("diversity", diversity::emit),
    ("connectives", connectives::emit),
    ("temporal", temporal::emit),
    ("syntax", dependency::emit_complexity),
    ("trees", trees::emit),
    ("pattern_density", dependency::emit_pattern_density),
    ("semantic", semantic::emit),
    ("morphosyntax", morphosyntax::emit),
    ("frequency", frequency::emit),
    ("psycholinguistic", psycholinguistic::emit),
    ("readability", readability::emit),
];

struct Capabilities<'a> {
    pos: bool,
    dep: bool,
    tree: bool,
    bundle: &'a ResourceBundle,
}

impl Capabilities<'_> {
    fn satisfies(&self, r: Requirement) -> bool {
        match r {
            Requirement::Pos => self.pos,
            Requirement::Dep => self.dep,
            Requirement::Tree => self.tree,
            Requirement::Resource(kind) => self.bundle.has(kind),
        }
    }
}

/// Evaluates every registered metric. Never panics on a valid document:
/// a family that fails leaves its metrics MISSING with a diagnostic.
pub fn compute_all(doc: &Document, bundle: &ResourceBundle) -> MetricVector {
    let caps = Capabilities {
        pos: doc.annotation.pos,
        dep: doc.annotation.deps,
        tree: doc.sentences().any(|s| s.tree.is_some()),
        bundle,
    };
    let mut diagnostics = Vec::new();
    let mut produced: HashMap<&'static str, Option<f64>> = HashMap::new();
    match panic::catch_unwind(AssertUnwindSafe(|| Context::new(doc, bundle))) {
        Ok(ctx) => {
            for (name, family) in FAMILIES {
                match panic::catch_unwind(AssertUnwindSafe(|| family(&ctx))) {
                    Ok(values) => produced.extend(values),
                    Err(_) => diagnostics.push(Diagnostic {
                        metric: (*name).to_string(),
                        message: "metric family failed; its values are missing".into(),
                    }),
                }
            }
        }
        Err(_) => diagnostics.push(Diagnostic {
            metric: "*".into(),
            message: "document preprocessing failed; all values are missing".into(),
        }),
    }

    let values = CATALOG
        .iter()
        .map(|def| {
            if let Some(unmet) = def.requires.iter().find(|r| !caps.satisfies(**r)) {
                diagnostics.push(Diagnostic { metric: def.id.into(), message: format!("requires {unmet}") });
                return None;
            }
            match produced.get(def.id) {
                Some(Some(v)) if v.is_finite() => Some(*v),
                Some(Some(v)) => {
                    diagnostics.push(Diagnostic { metric: def.id.into(), message: format!("non-finite value {v}") });
                    None
                }
                Some(None) => None,
                None => None,
            }
        })
        .collect();
    MetricVector { doc_id: doc.id.clone(), values, diagnostics }
}

// Small numeric helpers shared by the metric families.

pub(crate) fn ratio_usize(num: usize, den: usize) -> Option<f64> {
    (den > 0).then(|| num as f64 / den as f64)
}

pub(crate) fn mean(values: &[f64]) -> Option<f64> {
    (!values.is_empty()).then(|| values.iter().sum::<f64>() / values.len() as f64)
}

/// Population standard deviation.
pub(crate) fn std_dev(values: &[f64]) -> Option<f64> {
    let m = mean(values)?;
    Some((values.iter().map(|v| (v - m).powi(2)).sum::<f64>() / values.len() as f64).sqrt())
}

pub(crate) fn min(values: &[f64]) -> Option<f64> {
    values.iter().copied().reduce(f64::min)
}

pub(crate) fn max(values: &[f64]) -> Option<f64> {
    values.iter().copied().reduce(f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_unique_and_snake_case() {
        let mut seen = HashSet::new();
        for def in CATALOG {
            assert!(seen.insert(def.id), "duplicate id {}", def.id);
            assert!(def.id.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_'), "{}", def.id);
            assert!(!def.description.is_empty(), "{}", def.id);
        }
    }

    #[test]
    fn every_category_populated() {
        for cat in Category::ALL {
            assert!(CATALOG.iter().any(|d| d.category == cat), "{cat} empty");
        }
    }

    #[test]
    fn catalog_grouped_by_category_order() {
        let cats: Vec<Category> = CATALOG.iter().map(|d| d.category).collect();
        assert!(cats.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn families_produce_only_registered_ids() {
        use crate::text::parse_conllu_str;
        let doc = parse_conllu_str("1\tcasa\tcasa\tNOUN\t_\t_\t0\troot\t_\t_\n", "d").unwrap();
        let bundle = ResourceBundle::default();
        let ctx = Context::new(&doc, &bundle);
        let registered: HashSet<&str> = CATALOG.iter().map(|d| d.id).collect();
        let mut emitted = HashSet::new();
        for (name, family) in FAMILIES {
            for (id, _) in family(&ctx) {
                assert!(registered.contains(id), "{name} emits unregistered {id}");
                assert!(emitted.insert(id), "{id} emitted twice");
            }
        }
        for id in registered {
            assert!(emitted.contains(id), "{id} is never emitted");
        }
    }

    #[test]
    fn helpers_handle_empty_input() {
        assert_eq!(mean(&[]), None);
        assert_eq!(std_dev(&[]), None);
        assert_eq!(ratio_usize(1, 0), None);
        assert_eq!(min(&[]), None);
    }

    #[test]
    fn population_sd_of_three_five_seven() {
        let sd = std_dev(&[3.0, 5.0, 7.0]).unwrap();
        assert!((sd - (8.0f64 / 3.0).sqrt()).abs() < 1e-12);
    }
}
