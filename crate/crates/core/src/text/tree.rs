use super::TextError;

/// A node of a constituency tree. Leaves carry the 1-based index of the
/// token they stand for and have no children.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstituencyNode {
    pub label: String,
    pub children: Vec<ConstituencyNode>,
    pub leaf_token: Option<usize>,
}

impl ConstituencyNode {
    pub fn leaf(label: impl Into<String>, token: usize) -> Self {
        ConstituencyNode { label: label.into(), children: Vec::new(), leaf_token: Some(token) }
    }

    pub fn node(label: impl Into<String>, children: Vec<ConstituencyNode>) -> Self {
        ConstituencyNode { label: label.into(), children, leaf_token: None }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn leaf_count(&self) -> usize {
        if self.is_leaf() {
            1
        } else {
            self.children.iter().map(ConstituencyNode::leaf_count).sum()
        }
    }

    /// Token indices of the leaves, left to right.
    pub fn leaf_tokens(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        if self.is_leaf() {
            if let Some(t) = self.leaf_token {
                out.push(t);
            }
        } else {
            for c in &self.children {
                c.collect_leaves(out);
            }
        }
    }

    /// Reassigns leaf token indices in left-to-right order from `indices`.
    pub(crate) fn renumber_leaves(&mut self, indices: &mut impl Iterator<Item = usize>) {
        if self.is_leaf() {
            self.leaf_token = indices.next();
        } else {
            for c in &mut self.children {
                c.renumber_leaves(indices);
            }
        }
    }

    pub fn to_bracketed(&self) -> String {
        if self.is_leaf() {
            self.label.clone()
        } else {
            let inner: Vec<String> = self.children.iter().map(ConstituencyNode::to_bracketed).collect();
            format!("({} {})", self.label, inner.join(" "))
        }
    }
}

/// Parses a Penn-style bracketed tree such as `(S (NP (DET o) (NOUN gato)) (VERB dorme))`.
/// Bare atoms are leaves, numbered 1.. in reading order.
pub fn parse_bracketed(text: &str) -> Result<ConstituencyNode, TextError> {
    let tokens = lex(text);
    let mut pos = 0;
    let mut next_leaf = 0;
    let node = parse_node(&tokens, &mut pos, &mut next_leaf)?;
    if pos != tokens.len() {
        return Err(TextError::Tree("trailing input after the tree".into()));
    }
    if node.is_leaf() {
        return Err(TextError::Tree("tree must start with '('".into()));
    }
    Ok(node)
}

#[derive(Debug, PartialEq)]
enum Lex<'a> {
    Open,
    Close,
    Atom(&'a str),
}

fn lex(text: &str) -> Vec<Lex<'_>> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, c) in text.char_indices() {
        if c == '(' || c == ')' || c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Lex::Atom(&text[s..i]));
            }
            match c {
                '(' => out.push(Lex::Open),
                ')' => out.push(Lex::Close),
                _ => {}
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Lex::Atom(&text[s..]));
    }
    out
}

fn parse_node(tokens: &[Lex<'_>], pos: &mut usize, next_leaf: &mut usize) -> Result<ConstituencyNode, TextError> {
    match tokens.get(*pos) {
        Some(Lex::Atom(a)) => {
            *pos += 1;
            *next_leaf += 1;
            Ok(ConstituencyNode::leaf(*a, *next_leaf))
        }
        Some(Lex::Open) => {
            *pos += 1;
            let label = match tokens.get(*pos) {
                Some(Lex::Atom(a)) => {
                    *pos += 1;
                    a.to_string()
                }
                _ => return Err(TextError::Tree("missing label after '('".into())),
            };
            let mut children = Vec::new();
            loop {
                match tokens.get(*pos) {
                    Some(Lex::Close) => {
                        *pos += 1;
                        break;
                    }
                    Some(_) => children.push(parse_node(tokens, pos, next_leaf)?),
                    None => return Err(TextError::Tree("unbalanced parentheses".into())),
                }
            }
            if children.is_empty() {
                return Err(TextError::Tree(format!("node '{label}' has no children")));
            }
            Ok(ConstituencyNode::node(label, children))
        }
        Some(Lex::Close) => Err(TextError::Tree("unexpected ')'".into())),
        None => Err(TextError::Tree("empty tree".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nested_tree() {
        let t = parse_bracketed("(S (NP (DET o) (NOUN gato)) (VP (VERB dorme)))").unwrap();
        assert_eq!(t.label, "S");
        assert_eq!(t.leaf_tokens(), vec![1, 2, 3]);
        assert_eq!(t.children[0].children[1].children[0].label, "gato");
        assert_eq!(t.to_bracketed(), "(S (NP (DET o) (NOUN gato)) (VP (VERB dorme)))");
    }

    #[test]
    fn rejects_unbalanced() {
        assert!(parse_bracketed("(S (NP a)").is_err());
        assert!(parse_bracketed("(S a))").is_err());
        assert!(parse_bracketed("a").is_err());
        assert!(parse_bracketed("(S)").is_err());
    }
}
