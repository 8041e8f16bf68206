use std::collections::HashSet;
use std::fmt::{self, Write as _};

use super::matrix::{format_value, FeatureMatrix};
use super::welch::{welch_t, WelchResult};
use super::StatsError;
use crate::metrics::{metric_def, Category};

pub const DEFAULT_ALPHA: f64 = 0.001;
pub const INSUFFICIENT: &str = "insufficient valid values";
pub const ABSENT_IN_A: &str = "column absent from corpus A";
pub const ABSENT_IN_B: &str = "column absent from corpus B";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    AGreater,
    BGreater,
    Equal,
}

impl Direction {
    fn of(r: &WelchResult) -> Direction {
        if r.mean_a > r.mean_b {
            Direction::AGreater
        } else if r.mean_b > r.mean_a {
            Direction::BGreater
        } else {
            Direction::Equal
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::AGreater => "A>B",
            Direction::BGreater => "B>A",
            Direction::Equal => "A=B",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonEntry {
    pub metric: String,
    /// `None` for columns that are not in the registry.
    pub category: Option<Category>,
    pub result: WelchResult,
    pub significant: bool,
    pub direction: Direction,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SkippedMetric {
    pub metric: String,
    pub category: Option<Category>,
    pub reason: &'static str,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub alpha: f64,
    /// Sorted by category, then id.
    pub entries: Vec<ComparisonEntry>,
    pub skipped: Vec<SkippedMetric>,
}

fn category_of(metric: &str) -> Option<Category> {
    metric_def(metric).map(|d| d.category)
}

type SortKey = (bool, Option<Category>, String);

fn sort_key(metric: &str, category: Option<Category>) -> SortKey {
    (category.is_none(), category, metric.to_string())
}

fn category_label(c: Option<Category>) -> &'static str {
    c.map_or("Unregistered", Category::name)
}

/// Valid values of a column, sorted so the result does not depend on row
/// order.
fn valid(column: Vec<Option<f64>>) -> Vec<f64> {
    let mut v: Vec<f64> = column.into_iter().flatten().filter(|x| x.is_finite()).collect();
    v.sort_by(f64::total_cmp);
    v
}

/// Welch's t-test per shared metric column. Columns with fewer than two
/// valid values on either side, or present in only one matrix, are skipped.
pub fn compare_corpora(a: &FeatureMatrix, b: &FeatureMatrix, alpha: f64) -> Result<ComparisonReport, StatsError> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(StatsError::InvalidAlpha(alpha));
    }
    let in_b: HashSet<&str> = b.metric_ids.iter().map(String::as_str).collect();
    let in_a: HashSet<&str> = a.metric_ids.iter().map(String::as_str).collect();
    if in_a.is_disjoint(&in_b) {
        return Err(StatsError::DisjointColumns);
    }

    let mut entries = Vec::new();
    let mut skipped = Vec::new();
    for metric in &a.metric_ids {
        let category = category_of(metric);
        if !in_b.contains(metric.as_str()) {
            skipped.push(SkippedMetric { metric: metric.clone(), category, reason: ABSENT_IN_B });
            continue;
        }
        let xs = valid(a.column(metric).unwrap_or_default());
        let ys = valid(b.column(metric).unwrap_or_default());
        match welch_t(&xs, &ys) {
            Ok(result) => entries.push(ComparisonEntry {
                metric: metric.clone(),
                category,
                significant: result.p < alpha,
                direction: Direction::of(&result),
                result,
            }),
            Err(_) => skipped.push(SkippedMetric { metric: metric.clone(), category, reason: INSUFFICIENT }),
        }
    }
    for metric in b.metric_ids.iter().filter(|m| !in_a.contains(m.as_str())) {
        skipped.push(SkippedMetric { metric: metric.clone(), category: category_of(metric), reason: ABSENT_IN_A });
    }
    entries.sort_by_cached_key(|e| sort_key(&e.metric, e.category));
    skipped.sort_by_cached_key(|s| sort_key(&s.metric, s.category));
    Ok(ComparisonReport { alpha, entries, skipped })
}

fn format_p(p: f64) -> String {
    format!("{p:.6e}")
}

impl ComparisonReport {
    pub fn significant(&self) -> impl Iterator<Item = &ComparisonEntry> {
        self.entries.iter().filter(|e| e.significant)
    }

    pub fn entry(&self, metric: &str) -> Option<&ComparisonEntry> {
        self.entries.iter().find(|e| e.metric == metric)
    }

    /// One row per metric, tested and skipped merged in report order.
    /// Skipped rows carry `NA` statistics and the reason in the direction
    /// column.
    pub fn to_tsv(&self) -> String {
        let mut rows: Vec<(SortKey, String)> = Vec::new();
        for e in &self.entries {
            let r = &e.result;
            let line = format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                e.metric,
                category_label(e.category),
                format_value(Some(r.mean_a)),
                format_value(Some(r.mean_b)),
                if r.t.is_infinite() { format!("{}", r.t) } else { format_value(Some(r.t)) },
                format_value(Some(r.df)),
                format_p(r.p),
                e.significant,
                e.direction
            );
            rows.push((sort_key(&e.metric, e.category), line));
        }
        for s in &self.skipped {
            let line = format!(
                "{}\t{}\tNA\tNA\tNA\tNA\tNA\tfalse\tskipped: {}",
                s.metric,
                category_label(s.category),
                s.reason
            );
            rows.push((sort_key(&s.metric, s.category), line));
        }
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out = String::from("metric\tcategory\tmean_a\tmean_b\tt\tdf\tp\tsignificant\tdirection\n");
        for (_, line) in rows {
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let significant: Vec<&ComparisonEntry> = self.significant().collect();
        let mut out = String::new();
        let _ = writeln!(
            out,
            "Welch's t-test, two-sided, alpha = {}: {} metrics tested, {} significant, {} skipped",
            self.alpha,
            self.entries.len(),
            significant.len(),
            self.skipped.len()
        );
        let mut current = None;
        for e in &significant {
            if current != Some(e.category) {
                current = Some(e.category);
                let _ = writeln!(out, "\n{}", category_label(e.category));
            }
            let r = &e.result;
            let _ = writeln!(
                out,
                "  {:<40} {}  mean_a={} mean_b={} t={:.3} df={:.1} p={}{}",
                e.metric,
                e.direction,
                format_value(Some(r.mean_a)),
                format_value(Some(r.mean_b)),
                r.t,
                r.df,
                format_p(r.p),
                if r.degenerate { " (zero variance)" } else { "" }
            );
        }
        if !self.skipped.is_empty() {
            let _ = writeln!(out, "\nSkipped");
            for s in &self.skipped {
                let _ = writeln!(out, "  {:<40} {}", s.metric, s.reason);
            }
        }
        out
    }
}
