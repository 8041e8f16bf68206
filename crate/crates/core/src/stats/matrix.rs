use std::collections::HashSet;
use std::fmt::Write as _;

use super::StatsError;
use crate::metrics::{compute_all, list_metrics, MetricVector};
use crate::resources::ResourceBundle;
use crate::text::Document;

#[derive(Debug, Clone, PartialEq)]
pub struct FeatureRow {
    pub doc_id: String,
    pub label: Option<String>,
    pub values: Vec<Option<f64>>,
}

/// Documents × metrics table. Every row has one value per metric id;
/// either all rows carry a label or none does.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureMatrix {
    pub metric_ids: Vec<String>,
    pub labelled: bool,
    pub rows: Vec<FeatureRow>,
}

/// Six decimals, `NA` for missing, and no negative zero.
pub fn format_value(v: Option<f64>) -> String {
    match v {
        Some(x) if x.is_finite() => {
            let s = format!("{x:.6}");
            if s == "-0.000000" {
                "0.000000".to_string()
            } else {
                s
            }
        }
        _ => "NA".to_string(),
    }
}

fn parse_value(cell: &str) -> Result<Option<f64>, String> {
    let cell = cell.trim();
    if cell.is_empty() || cell.eq_ignore_ascii_case("na") || cell.eq_ignore_ascii_case("nan") {
        return Ok(None);
    }
    cell.parse::<f64>().map(Some).map_err(|_| format!("not a number: {cell:?}"))
}

impl FeatureMatrix {
    /// Rows in input order; columns in registry order.
    pub fn from_vectors(vectors: &[MetricVector], labels: Option<&[String]>) -> Result<FeatureMatrix, StatsError> {
        if vectors.is_empty() {
            return Err(StatsError::EmptyCorpus);
        }
        if let Some(labels) = labels {
            if labels.len() != vectors.len() {
                return Err(StatsError::LabelCount { documents: vectors.len(), labels: labels.len() });
            }
        }
        let mut seen = HashSet::new();
        for v in vectors {
            if !seen.insert(v.doc_id.as_str()) {
                return Err(StatsError::DuplicateDocId(v.doc_id.clone()));
            }
        }
        let rows = vectors
            .iter()
            .enumerate()
            .map(|(i, v)| FeatureRow {
                doc_id: v.doc_id.clone(),
                label: labels.map(|l| l[i].clone()),
                values: v.values.clone(),
            })
            .collect();
        Ok(FeatureMatrix {
            metric_ids: list_metrics().iter().map(|d| d.id.to_string()).collect(),
            labelled: labels.is_some(),
            rows,
        })
    }

    pub fn column(&self, metric: &str) -> Option<Vec<Option<f64>>> {
        let i = self.metric_ids.iter().position(|m| m == metric)?;
        Some(self.rows.iter().map(|r| r.values[i]).collect())
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("doc_id");
        if self.labelled {
            out.push_str("\tlabel");
        }
        for id in &self.metric_ids {
            out.push('\t');
            out.push_str(id);
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.doc_id);
            if self.labelled {
                let _ = write!(out, "\t{}", row.label.as_deref().unwrap_or(""));
            }
            for v in &row.values {
                out.push('\t');
                out.push_str(&format_value(*v));
            }
            out.push('\n');
        }
        out
    }

    /// Reads a matrix written by [`FeatureMatrix::to_tsv`]. The first column
    /// is the document id whatever its header; a column headed `label` is
    /// taken as the label. `NA`, `nan` and empty cells are missing.
    pub fn from_tsv(text: &str) -> Result<FeatureMatrix, StatsError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(StatsError::Parse { line: 1, message: "empty input".into() })?;
        let columns: Vec<&str> = header.split('\t').map(str::trim).collect();
        if columns.len() < 2 {
            return Err(StatsError::Parse { line: 1, message: "expected a document id and at least one column".into() });
        }
        let label_col = columns.iter().skip(1).position(|c| *c == "label").map(|i| i + 1);
        let metric_cols: Vec<usize> = (1..columns.len()).filter(|i| Some(*i) != label_col).collect();
        let metric_ids: Vec<String> = metric_cols.iter().map(|&i| columns[i].to_string()).collect();
        let mut unique = HashSet::new();
        if let Some(dup) = metric_ids.iter().find(|m| !unique.insert(m.as_str())) {
            return Err(StatsError::Parse { line: 1, message: format!("duplicate column {dup:?}") });
        }

        let mut rows = Vec::new();
        let mut ids = HashSet::new();
        for (n, line) in lines {
            let cells: Vec<&str> = line.split('\t').collect();
            if cells.len() != columns.len() {
                return Err(StatsError::Parse {
                    line: n + 1,
                    message: format!("expected {} cells, found {}", columns.len(), cells.len()),
                });
            }
            let doc_id = cells[0].trim().to_string();
            if !ids.insert(doc_id.clone()) {
                return Err(StatsError::DuplicateDocId(doc_id));
            }
            let values = metric_cols
                .iter()
                .map(|&i| parse_value(cells[i]))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|message| StatsError::Parse { line: n + 1, message })?;
            rows.push(FeatureRow { doc_id, label: label_col.map(|i| cells[i].trim().to_string()), values });
        }
        Ok(FeatureMatrix { metric_ids, labelled: label_col.is_some(), rows })
    }
}

/// Computes every metric for each document and assembles the matrix.
pub fn export_features(
    corpus: &[Document],
    bundle: &ResourceBundle,
    labels: Option<&[String]>,
) -> Result<FeatureMatrix, StatsError> {
    let vectors: Vec<MetricVector> = corpus.iter().map(|d| compute_all(d, bundle)).collect();
    FeatureMatrix::from_vectors(&vectors, labels)
}
