//! CoNLL-U ingestion.
//!
//! Supported markup beyond the ten token columns:
//! - `# newdoc id = X` (or `# doc_id = X`) names the document;
//! - `# newpar` opens a new paragraph (no markup: one paragraph);
//! - `# heading = yes` marks the enclosing paragraph as a heading;
//! - `# constituency = (S ...)` attaches a bracketed tree whose leaves are
//!   either every token or every non-punctuation token;
//! - other `# key = value` comments before the first sentence become metadata.
//!
//! Multiword-token ranges (`1-2`) and empty nodes (`1.1`) are skipped.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Read;

use super::model::{Annotation, Document, LeafMode, Paragraph, Pos, Sentence, Token, Tree};
use super::tree::parse_bracketed;
use super::TextError;

const RESERVED: [&str; 6] = ["sent_id", "text", "newpar", "heading", "constituency", "newdoc"];

pub fn parse_conllu<R: Read>(mut input: R) -> Result<Document, TextError> {
    let mut bytes = Vec::new();
    input.read_to_end(&mut bytes)?;
    let text = String::from_utf8(bytes).map_err(|_| TextError::Encoding)?;
    parse_conllu_str(&text, "doc")
}

/// Parses CoNLL-U text; `fallback_id` names the document when no
/// `# newdoc id` comment is present.
pub fn parse_conllu_str(text: &str, fallback_id: &str) -> Result<Document, TextError> {
    let mut parser = Parser::default();
    let mut last_line = 0;
    for (i, raw) in text.split('\n').enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() {
            parser.flush(line_no)?;
        } else if let Some(comment) = line.strip_prefix('#') {
            parser.comment(comment.trim());
        } else {
            parser.row(line, line_no)?;
        }
    }
    parser.flush(last_line)?;

    if parser.paragraphs.is_empty() {
        return Err(TextError::Empty);
    }
    let doc = Document {
        id: parser.id.unwrap_or_else(|| fallback_id.to_string()),
        paragraphs: parser.paragraphs,
        metadata: parser.metadata,
        annotation: Annotation { pos: parser.all_pos, deps: parser.all_heads },
    };
    doc.validate()?;
    Ok(doc)
}

struct RawRow {
    token: Token,
    head: Option<usize>,
    has_pos: bool,
}

struct Parser {
    id: Option<String>,
    metadata: BTreeMap<String, String>,
    paragraphs: Vec<Paragraph>,
    rows: Vec<RawRow>,
    pending_newpar: bool,
    pending_heading: bool,
    pending_tree: Option<String>,
    all_pos: bool,
    all_heads: bool,
}

impl Default for Parser {
    fn default() -> Self {
        Parser {
            id: None,
            metadata: BTreeMap::new(),
            paragraphs: Vec::new(),
            rows: Vec::new(),
            pending_newpar: false,
            pending_heading: false,
            pending_tree: None,
            all_pos: true,
            all_heads: true,
        }
    }
}

impl Parser {
    fn comment(&mut self, body: &str) {
        let (key, value) = match body.split_once('=') {
            Some((k, v)) => (k.trim(), Some(v.trim())),
            None => (body.trim(), None),
        };
        match (key, value) {
            ("newpar", _) | ("newpar id", _) => self.pending_newpar = true,
            ("heading", Some(v)) => self.pending_heading = matches!(v, "yes" | "true" | "1"),
            ("constituency", Some(v)) => self.pending_tree = Some(v.to_string()),
            ("newdoc id", Some(v)) | ("doc_id", Some(v)) => self.id = Some(v.to_string()),
            (k, Some(v)) if self.paragraphs.is_empty() && !RESERVED.contains(&k) => {
                self.metadata.insert(k.to_string(), v.to_string());
            }
            _ => {}
        }
    }

    fn row(&mut self, line: &str, line_no: usize) -> Result<(), TextError> {
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 10 {
            return Err(TextError::ColumnCount { line: line_no, found: cols.len() });
        }
        if cols[0].contains('-') || cols[0].contains('.') {
            return Ok(());
        }
        let malformed = |message: String| TextError::Malformed { line: line_no, message };
        let index: usize = cols[0].parse().map_err(|_| malformed(format!("bad token id '{}'", cols[0])))?;
        let (pos, has_pos) = match cols[3] {
            "_" => (Pos::X, false),
            tag => (Pos::from_tag(tag).ok_or_else(|| malformed(format!("unknown UPOS tag '{tag}'")))?, true),
        };
        let mut token = Token::new(index, cols[1], pos);
        if cols[2] != "_" {
            token.lemma = Some(cols[2].to_string());
        }
        if cols[5] != "_" {
            for feat in cols[5].split('|') {
                let (k, v) = feat.split_once('=').ok_or_else(|| malformed(format!("bad feature '{feat}'")))?;
                token.morph.insert(k.to_string(), v.to_string());
            }
        }
        let head = match cols[6] {
            "_" => None,
            h => Some(h.parse().map_err(|_| malformed(format!("bad head '{h}'")))?),
        };
        if cols[7] != "_" {
            token.deprel = cols[7].to_string();
        }
        self.rows.push(RawRow { token, head, has_pos });
        Ok(())
    }

    fn flush(&mut self, line_no: usize) -> Result<(), TextError> {
        if self.rows.is_empty() {
            return Ok(());
        }
        let rows = std::mem::take(&mut self.rows);
        let invalid = |message: String| TextError::Invalid { line: line_no, message };

        let with_head = rows.iter().filter(|r| r.head.is_some()).count();
        let headless = with_head == 0;
        if !headless && with_head != rows.len() {
            return Err(invalid("some tokens have a head and some do not".into()));
        }
        self.all_heads &= !headless;
        self.all_pos &= rows.iter().all(|r| r.has_pos);

        let tokens: Vec<Token> = rows
            .into_iter()
            .map(|r| {
                let mut t = r.token;
                match r.head {
                    Some(h) => t.head = h,
                    // Headless sentences get a flat placeholder structure; the
                    // document is flagged as lacking dependencies.
                    None => {
                        t.head = if t.index == 1 { 0 } else { 1 };
                        if t.deprel.is_empty() {
                            t.deprel = if t.index == 1 { "root".into() } else { "dep".into() };
                        }
                    }
                }
                t
            })
            .collect();

        let mut sentence = Sentence::new(tokens);
        if let Some(bracketed) = self.pending_tree.take() {
            sentence.tree = Some(attach_tree(&sentence, &bracketed).map_err(invalid)?);
        }
        sentence.validate().map_err(invalid)?;

        let start_new = self.pending_newpar || self.paragraphs.is_empty();
        if start_new {
            self.paragraphs.push(Paragraph { sentences: Vec::new(), is_heading: false });
        }
        let paragraph = self.paragraphs.last_mut().expect("paragraph pushed above");
        paragraph.sentences.push(sentence);
        paragraph.is_heading |= self.pending_heading;
        self.pending_newpar = false;
        self.pending_heading = false;
        Ok(())
    }
}

fn attach_tree(sentence: &Sentence, bracketed: &str) -> Result<Tree, String> {
    let mut root = parse_bracketed(bracketed).map_err(|e| e.to_string())?;
    let leaves = root.leaf_count();
    let all: Vec<usize> = sentence.tokens.iter().map(|t| t.index).collect();
    let words: Vec<usize> = sentence.words().map(|t| t.index).collect();
    let (mode, indices) = if leaves == all.len() {
        (LeafMode::AllTokens, all)
    } else if leaves == words.len() {
        (LeafMode::NonPunctuation, words)
    } else {
        return Err(format!(
            "constituency tree has {leaves} leaves for {} tokens ({} non-punctuation)",
            all.len(),
            words.len()
        ));
    };
    root.renumber_leaves(&mut indices.into_iter());
    Ok(Tree { root, mode })
}

/// Serializes a document back to CoNLL-U. XPOS, DEPS and MISC are written as `_`.
pub fn to_conllu(doc: &Document) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# newdoc id = {}", doc.id);
    for (k, v) in &doc.metadata {
        let _ = writeln!(out, "# {k} = {v}");
    }
    for p in &doc.paragraphs {
        for (i, s) in p.sentences.iter().enumerate() {
            if i == 0 {
                out.push_str("# newpar\n");
                if p.is_heading {
                    out.push_str("# heading = yes\n");
                }
            }
            if let Some(tree) = &s.tree {
                let _ = writeln!(out, "# constituency = {}", tree.root.to_bracketed());
            }
            for t in &s.tokens {
                let feats = if t.morph.is_empty() {
                    "_".to_string()
                } else {
                    t.morph.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join("|")
                };
                let upos = if doc.annotation.pos { t.pos.tag() } else { "_" };
                let head = if doc.annotation.deps { t.head.to_string() } else { "_".into() };
                let deprel = if doc.annotation.deps && !t.deprel.is_empty() { t.deprel.as_str() } else { "_" };
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t_\t{}\t{}\t{}\t_\t_",
                    t.index,
                    t.surface,
                    t.lemma.as_deref().unwrap_or("_"),
                    upos,
                    feats,
                    head,
                    deprel
                );
            }
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO: &str = "1\tO\to\tDET\t_\t_\t2\tdet\t_\t_\n2\tgato\tgato\tNOUN\t_\t_\t3\tnsubj\t_\t_\n3\tdorme\tdormir\tVERB\t_\tMood=Ind|Tense=Pres|VerbForm=Fin\t0\troot\t_\t_\n\n1\tEle\tele\tPRON\t_\tPerson=3\t2\tnsubj\t_\t_\n2\tcorre\tcorrer\tVERB\t_\t_\t0\troot\t_\t_\n";

    #[test]
    fn minimal_document() {
        let doc = parse_conllu_str("1\tcasa\tcasa\tNOUN\t_\t_\t0\troot\t_\t_\n", "d").unwrap();
        assert_eq!(doc.paragraphs.len(), 1);
        assert_eq!(doc.sentence_count(), 1);
        assert_eq!(doc.paragraphs[0].sentences[0].tokens.len(), 1);
        assert!(doc.annotation.pos && doc.annotation.deps);
    }

    #[test]
    fn nine_columns_names_line() {
        let err = parse_conllu_str("1\tcasa\tcasa\tNOUN\t_\t_\t0\troot\t_\n", "d").unwrap_err();
        assert!(matches!(err, TextError::ColumnCount { line: 1, found: 9 }));
        assert!(err.to_string().contains("line 1"));
    }

    #[test]
    fn sentences_without_newpar_share_a_paragraph() {
        let doc = parse_conllu_str(TWO, "d").unwrap();
        assert_eq!(doc.paragraphs.len(), 1);
        assert_eq!(doc.sentence_count(), TWO.split("\n\n").filter(|b| !b.trim().is_empty()).count());
    }

    #[test]
    fn newpar_and_heading() {
        let text = format!("# newdoc id = x1\n# genre = news\n# newpar\n# heading = yes\n{TWO}\n# newpar\n{TWO}");
        let doc = parse_conllu_str(&text, "d").unwrap();
        assert_eq!(doc.id, "x1");
        assert_eq!(doc.metadata.get("genre").map(String::as_str), Some("news"));
        assert_eq!(doc.paragraphs.len(), 2);
        assert!(doc.paragraphs[0].is_heading);
        assert!(!doc.paragraphs[1].is_heading);
        assert_eq!(doc.paragraphs[0].sentences.len(), 2);
    }

    #[test]
    fn skips_ranges_and_empty_nodes() {
        let text = "1-2\tdo\t_\t_\t_\t_\t_\t_\t_\t_\n1\tde\tde\tADP\t_\t_\t2\tcase\t_\t_\n1.1\tx\t_\t_\t_\t_\t_\t_\t_\t_\n2\to\to\tPRON\t_\t_\t0\troot\t_\t_\n";
        let doc = parse_conllu_str(text, "d").unwrap();
        assert_eq!(doc.paragraphs[0].sentences[0].tokens.len(), 2);
    }

    #[test]
    fn head_out_of_range() {
        let err = parse_conllu_str("1\tcasa\tcasa\tNOUN\t_\t_\t5\troot\t_\t_\n", "d").unwrap_err();
        assert!(matches!(err, TextError::Invalid { .. }));
    }

    #[test]
    fn two_roots_rejected() {
        let text = "1\ta\ta\tNOUN\t_\t_\t0\troot\t_\t_\n2\tb\tb\tNOUN\t_\t_\t0\troot\t_\t_\n";
        assert!(parse_conllu_str(text, "d").is_err());
    }

    #[test]
    fn empty_input() {
        assert!(matches!(parse_conllu_str("", "d"), Err(TextError::Empty)));
        assert!(matches!(parse_conllu_str("# just a comment\n\n", "d"), Err(TextError::Empty)));
        assert!(matches!(parse_conllu(&b""[..]), Err(TextError::Empty)));
    }

    #[test]
    fn missing_heads_and_tags_degrade_annotation() {
        let doc = parse_conllu_str("1\ta\t_\t_\t_\t_\t_\t_\t_\t_\n2\tb\t_\t_\t_\t_\t_\t_\t_\t_\n", "d").unwrap();
        assert!(!doc.annotation.pos);
        assert!(!doc.annotation.deps);
        assert_eq!(doc.paragraphs[0].sentences[0].root().unwrap().index, 1);
    }

    #[test]
    fn constituency_tree_over_words() {
        let text = "# constituency = (S (NP (DET o) (NOUN gato)) (VP (VERB dorme)))\n1\tO\to\tDET\t_\t_\t2\tdet\t_\t_\n2\tgato\tgato\tNOUN\t_\t_\t3\tnsubj\t_\t_\n3\tdorme\tdormir\tVERB\t_\t_\t0\troot\t_\t_\n4\t.\t.\tPUNCT\t_\t_\t3\tpunct\t_\t_\n";
        let doc = parse_conllu_str(text, "d").unwrap();
        let tree = doc.paragraphs[0].sentences[0].tree.as_ref().unwrap();
        assert_eq!(tree.mode, LeafMode::NonPunctuation);
        assert_eq!(tree.root.leaf_tokens(), vec![1, 2, 3]);

        let bad = text.replace("(VP (VERB dorme))", "(VP (VERB dorme) (X y) (X z))");
        assert!(parse_conllu_str(&bad, "d").is_err());
    }

    #[test]
    fn serialization_round_trip() {
        let text = format!("# newpar\n{TWO}\n# newpar\n# heading = yes\n1\tFim\tfim\tNOUN\t_\t_\t0\troot\t_\t_\n");
        let doc = parse_conllu_str(&text, "d").unwrap();
        let again = parse_conllu_str(&to_conllu(&doc), "other").unwrap();
        assert_eq!(doc, again);
    }
}
