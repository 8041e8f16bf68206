use std::collections::HashMap;
use std::path::Path;

use super::{normalize, read_to_string, ResourceError};

/// Word vectors in the plain-text `word2vec` layout: a `V d` header line,
/// then `word v1 ... vd` per line.
#[derive(Debug, Clone)]
pub struct EmbeddingModel {
    dim: usize,
    vectors: HashMap<String, Vec<f64>>,
}

impl EmbeddingModel {
    /// Panics if any vector length differs from `dim` or `dim < 2`.
    pub fn new(dim: usize, vectors: impl IntoIterator<Item = (String, Vec<f64>)>) -> Self {
        assert!(dim >= 2, "embedding dimension must be at least 2");
        let vectors: HashMap<String, Vec<f64>> = vectors.into_iter().map(|(w, v)| (normalize(&w), v)).collect();
        assert!(vectors.values().all(|v| v.len() == dim), "all vectors must have length {dim}");
        EmbeddingModel { dim, vectors }
    }

    pub fn load(path: &Path) -> Result<Self, ResourceError> {
        let text = read_to_string(path)?;
        let fmt_err = |line: usize, message: String| ResourceError::Format { path: path.to_path_buf(), line, message };
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or_else(|| ResourceError::Empty { path: path.to_path_buf() })?;
        let head: Vec<&str> = header.split_whitespace().collect();
        let (count, dim) = match head.as_slice() {
            [v, d] => (
                v.parse::<usize>().map_err(|_| fmt_err(1, format!("bad vocabulary size '{v}'")))?,
                d.parse::<usize>().map_err(|_| fmt_err(1, format!("bad dimension '{d}'")))?,
            ),
            _ => return Err(fmt_err(1, "expected header 'V d'".into())),
        };
        if dim < 2 {
            return Err(fmt_err(1, format!("dimension must be at least 2, got {dim}")));
        }
        let mut vectors = HashMap::with_capacity(count);
        for (i, raw) in lines {
            let line = i + 1;
            let mut parts = raw.split_whitespace();
            let word = normalize(parts.next().unwrap_or_default());
            let values: Vec<f64> = parts
                .map(|p| p.parse::<f64>().map_err(|_| fmt_err(line, format!("bad component '{p}'"))))
                .collect::<Result<_, _>>()?;
            if values.len() != dim {
                return Err(fmt_err(line, format!("vector has {} components, expected {dim}", values.len())));
            }
            if vectors.insert(word.clone(), values).is_some() {
                return Err(ResourceError::Duplicate { path: path.to_path_buf(), line, entry: word });
            }
        }
        if vectors.len() != count {
            return Err(fmt_err(1, format!("header announces {count} vectors, file has {}", vectors.len())));
        }
        if vectors.is_empty() {
            return Err(ResourceError::Empty { path: path.to_path_buf() });
        }
        Ok(EmbeddingModel { dim, vectors })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, word: &str) -> Option<&[f64]> {
        self.vectors.get(word).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Copy with every vector multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        EmbeddingModel {
            dim: self.dim,
            vectors: self.vectors.iter().map(|(w, v)| (w.clone(), v.iter().map(|x| x * factor).collect())).collect(),
        }
    }
}
