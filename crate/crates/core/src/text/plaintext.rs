//! Degraded-mode ingestion of raw text.
//!
//! Paragraphs are separated by blank lines. Tokens are runs of
//! alphanumerics (internal hyphens and apostrophes kept) or single
//! punctuation characters. A sentence ends after a run of `. ! ? …` that
//! is followed by whitespace or the end of the paragraph. Word tokens are
//! tagged `X`, punctuation `PUNCT`; no dependency structure is available.

use std::collections::BTreeMap;
use std::io::Read;

use super::model::{Annotation, Document, Paragraph, Pos, Sentence, Token};
use super::TextError;

pub fn ingest_plaintext<R: Read>(mut input: R) -> Result<Document, TextError> {
    let mut bytes = Vec::new();
    input.read_to_end(&mut bytes)?;
    let text = String::from_utf8(bytes).map_err(|_| TextError::Encoding)?;
    ingest_plaintext_str(&text, "doc")
}

pub fn ingest_plaintext_str(text: &str, id: &str) -> Result<Document, TextError> {
    let text = text.replace("\r\n", "\n");
    let mut paragraphs = Vec::new();
    let mut block = String::new();
    for line in text.split('\n') {
        if line.trim().is_empty() {
            push_paragraph(&block, &mut paragraphs);
            block.clear();
        } else {
            block.push_str(line);
            block.push('\n');
        }
    }
    push_paragraph(&block, &mut paragraphs);
    if paragraphs.is_empty() {
        return Err(TextError::Empty);
    }
    Ok(Document {
        id: id.to_string(),
        paragraphs,
        metadata: BTreeMap::new(),
        annotation: Annotation { pos: false, deps: false },
    })
}

fn push_paragraph(block: &str, paragraphs: &mut Vec<Paragraph>) {
    let sentences = split_sentences(block);
    if !sentences.is_empty() {
        paragraphs.push(Paragraph { sentences, is_heading: false });
    }
}

fn is_terminal(c: char) -> bool {
    matches!(c, '.' | '!' | '?' | '…')
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric()
}

fn split_sentences(block: &str) -> Vec<Sentence> {
    let chars: Vec<char> = block.chars().collect();
    let mut sentences = Vec::new();
    let mut current: Vec<String> = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if is_word_char(c) {
            let start = i;
            i += 1;
            while i < chars.len() {
                let d = chars[i];
                let joiner = matches!(d, '-' | '\'' | '’')
                    && i + 1 < chars.len()
                    && is_word_char(chars[i + 1]);
                if is_word_char(d) || joiner {
                    i += 1;
                } else {
                    break;
                }
            }
            current.push(chars[start..i].iter().collect());
            continue;
        }
        current.push(c.to_string());
        i += 1;
        if is_terminal(c) {
            while i < chars.len() && is_terminal(chars[i]) {
                current.push(chars[i].to_string());
                i += 1;
            }
            if i >= chars.len() || chars[i].is_whitespace() {
                sentences.push(build_sentence(std::mem::take(&mut current)));
            }
        }
    }
    if !current.is_empty() {
        sentences.push(build_sentence(current));
    }
    sentences
}

fn build_sentence(forms: Vec<String>) -> Sentence {
    let tokens = forms
        .into_iter()
        .enumerate()
        .map(|(i, form)| {
            let pos = if form.chars().any(is_word_char) { Pos::X } else { Pos::Punct };
            let mut t = Token::new(i + 1, form, pos);
            t.head = if i == 0 { 0 } else { 1 };
            t.deprel = if i == 0 { "root".into() } else { "dep".into() };
            t
        })
        .collect();
    Sentence::new(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn forms(s: &Sentence) -> Vec<&str> {
        s.tokens.iter().map(|t| t.surface.as_str()).collect()
    }

    #[test]
    fn two_terminal_marks_two_sentences() {
        let doc = ingest_plaintext_str("Oi. Tchau.", "d").unwrap();
        assert_eq!(doc.paragraphs.len(), 1);
        assert_eq!(doc.sentence_count(), 2);
    }

    #[test]
    fn empty_is_error() {
        assert!(matches!(ingest_plaintext_str("", "d"), Err(TextError::Empty)));
        assert!(matches!(ingest_plaintext_str(" \n\n  ", "d"), Err(TextError::Empty)));
    }

    #[test]
    fn three_words_one_sentence() {
        let doc = ingest_plaintext_str("Um dois três", "d").unwrap();
        assert_eq!(doc.sentence_count(), 1);
        assert_eq!(doc.paragraphs[0].sentences[0].tokens.len(), 3);
        assert!(doc.paragraphs[0].sentences[0].tokens.iter().all(|t| t.pos == Pos::X));
    }

    #[test]
    fn punctuation_split_and_numbers_kept() {
        let doc = ingest_plaintext_str("Custa 3.5 reais, guarda-chuva incluso... Sério?! Sim\n\nNovo parágrafo", "d").unwrap();
        assert_eq!(doc.paragraphs.len(), 2);
        let s = &doc.paragraphs[0].sentences;
        assert_eq!(s.len(), 3);
        assert_eq!(forms(&s[0]), vec!["Custa", "3", ".", "5", "reais", ",", "guarda-chuva", "incluso", ".", ".", "."]);
        assert_eq!(forms(&s[1]), vec!["Sério", "?", "!"]);
        assert_eq!(s[0].tokens[2].pos, Pos::Punct);
        assert!(s.iter().all(|x| x.validate().is_ok()));
    }
}
