//! Collecting input files and turning them into documents.

use std::collections::{HashMap, HashSet};
use std::fs;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use nilcmetrix::text::{ingest_plaintext_str, parse_conllu_str};
use nilcmetrix::Document;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Conllu,
    Text,
}

impl InputFormat {
    fn accepts(self, path: &Path) -> bool {
        let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("").to_ascii_lowercase();
        match self {
            InputFormat::Conllu => ext == "conllu" || ext == "conll",
            InputFormat::Text => ext == "txt",
        }
    }
}

/// Expands directories (non-recursively, lexicographic order) and keeps
/// explicitly named files as given.
pub fn collect_files(inputs: &[PathBuf], format: InputFormat) -> Result<Vec<PathBuf>, CliError> {
    let mut files = Vec::new();
    for input in inputs {
        let meta = fs::metadata(input).map_err(|e| CliError::data(input, e))?;
        if meta.is_dir() {
            let entries = fs::read_dir(input).map_err(|e| CliError::data(input, e))?;
            let mut found = Vec::new();
            for entry in entries {
                let path = entry.map_err(|e| CliError::data(input, e))?.path();
                let hidden = path.file_name().and_then(|n| n.to_str()).is_some_and(|n| n.starts_with('.'));
                if path.is_file() && !hidden && format.accepts(&path) {
                    found.push(path);
                }
            }
            found.sort();
            files.extend(found);
        } else {
            files.push(input.clone());
        }
    }
    if files.is_empty() {
        return Err(CliError::Data {
            path: inputs.first().cloned().unwrap_or_default(),
            message: "no input documents found".into(),
        });
    }
    Ok(files)
}

fn file_stem(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "doc".into())
}

pub fn load_document(path: &Path, format: InputFormat) -> Result<Document, CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::data(path, e))?;
    let text = String::from_utf8(bytes).map_err(|_| CliError::data(path, "input is not valid UTF-8"))?;
    let id = file_stem(path);
    let doc = match format {
        InputFormat::Conllu => parse_conllu_str(&text, &id),
        InputFormat::Text => ingest_plaintext_str(&text, &id),
    };
    doc.map_err(|e| CliError::data(path, e))
}

/// Loads every document and rejects repeated ids.
pub fn load_corpus(files: &[PathBuf], format: InputFormat) -> Result<Vec<Document>, CliError> {
    let mut seen = HashSet::new();
    let mut docs = Vec::with_capacity(files.len());
    for path in files {
        let doc = load_document(path, format)?;
        if !seen.insert(doc.id.clone()) {
            return Err(CliError::data(path, format!("duplicate document id {:?}", doc.id)));
        }
        docs.push(doc);
    }
    Ok(docs)
}

/// Labels either as `doc_id<TAB>label` lines or one bare label per
/// document in input order.
pub fn read_labels(path: &Path, docs: &[Document]) -> Result<Vec<String>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::data(path, e))?;
    let lines: Vec<&str> = text.lines().map(|l| l.trim_end_matches('\r')).filter(|l| !l.trim().is_empty()).collect();
    if !lines.is_empty() && lines.iter().all(|l| l.contains('\t')) {
        let mut by_id = HashMap::new();
        for line in &lines {
            let (id, label) = line.split_once('\t').unwrap_or((line, ""));
            if by_id.insert(id.trim(), label.trim()).is_some() {
                return Err(CliError::data(path, format!("document {:?} labelled twice", id.trim())));
            }
        }
        docs.iter()
            .map(|d| {
                by_id
                    .get(d.id.as_str())
                    .map(|l| l.to_string())
                    .ok_or_else(|| CliError::data(path, format!("no label for document {:?}", d.id)))
            })
            .collect()
    } else if lines.len() == docs.len() {
        Ok(lines.iter().map(|l| l.trim().to_string()).collect())
    } else {
        Err(CliError::data(path, format!("{} labels for {} documents", lines.len(), docs.len())))
    }
}
