//! Dependency-based syntactic complexity and pattern density (UD-style
//! relations). A clause is approximated by a finite verb; a sentence has
//! at least one clause.

use super::{mean, min, max, ratio_usize, Context, Emitted};
use crate::text::{Document, Pos, Sentence, Token};

/// Relations that attach a subordinate clause.
const SUBORDINATE: [&str; 5] = ["ccomp", "xcomp", "advcl", "acl", "csubj"];
/// Relations that can head a non-finite clause.
const CLAUSAL: [&str; 8] = ["ccomp", "xcomp", "advcl", "acl", "csubj", "root", "conj", "parataxis"];
/// Relations collected into a noun phrase.
const NOMINAL_DEPENDENTS: [&str; 5] = ["det", "amod", "nmod", "nummod", "case"];

pub fn finite_verbs(s: &Sentence) -> usize {
    s.tokens.iter().filter(|t| t.is_finite_verb()).count()
}

/// Finite verbs, at least one.
pub fn clause_count(s: &Sentence) -> usize {
    finite_verbs(s).max(1)
}

struct Graph<'a> {
    sentence: &'a Sentence,
    children: Vec<Vec<usize>>,
}

impl<'a> Graph<'a> {
    fn new(sentence: &'a Sentence) -> Self {
        let mut children = vec![Vec::new(); sentence.tokens.len() + 1];
        for t in &sentence.tokens {
            if t.head < children.len() {
                children[t.head].push(t.index);
            }
        }
        Graph { sentence, children }
    }

    fn token(&self, index: usize) -> &'a Token {
        &self.sentence.tokens[index - 1]
    }

    fn dependents(&self, index: usize) -> impl Iterator<Item = &'a Token> + '_ {
        self.children[index].iter().map(move |&i| self.token(i))
    }

    /// Indices reachable from `index` through relations accepted by `follow`,
    /// `index` included. Cycles are cut.
    fn reach(&self, index: usize, follow: impl Fn(&Token) -> bool) -> Vec<usize> {
        let mut seen = vec![false; self.children.len()];
        let mut stack = vec![index];
        let mut out = Vec::new();
        while let Some(i) = stack.pop() {
            if std::mem::replace(&mut seen[i], true) {
                continue;
            }
            out.push(i);
            stack.extend(self.children[i].iter().copied().filter(|&c| follow(self.token(c))));
        }
        out
    }
}

/// Mean `|index - head|` over non-root words; `None` without arcs.
pub fn dependency_distance(s: &Sentence) -> Option<f64> {
    let arcs: Vec<f64> =
        s.tokens.iter().filter(|t| t.head != 0 && t.is_word()).map(|t| t.index.abs_diff(t.head) as f64).collect();
    mean(&arcs)
}

/// The root when it is a verb or auxiliary, otherwise the first finite verb
/// attached to the root.
pub fn main_verb(s: &Sentence) -> Option<&Token> {
    let root = s.root()?;
    if matches!(root.pos, Pos::Verb | Pos::Aux) {
        return Some(root);
    }
    s.dependents(root.index).find(|t| t.is_finite_verb())
}

pub fn words_before_main_verb(s: &Sentence) -> Option<usize> {
    let verb = main_verb(s)?;
    Some(s.tokens[..verb.index - 1].iter().filter(|t| t.is_word()).count())
}

pub fn adverbs_before_main_verb(s: &Sentence) -> Option<usize> {
    let verb = main_verb(s)?;
    Some(s.tokens[..verb.index - 1].iter().filter(|t| t.pos == Pos::Adv).count())
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClauseAnalysis {
    pub clause_count: usize,
    pub subordinate: usize,
    pub relative: usize,
    pub adverbial: usize,
    /// Clauses whose first token is a coordinating conjunction.
    pub coordinate_starts: usize,
    pub passive: usize,
    pub non_svo: usize,
    pub postponed_subject: usize,
    pub infinitive_clauses: usize,
    pub gerund_clauses: usize,
    pub participle_clauses: usize,
}

/// A clause predicate: a main verb, a copular predicate, or the root.
fn is_predicate(g: &Graph, t: &Token) -> bool {
    t.pos == Pos::Verb || t.head == 0 || g.dependents(t.index).any(|d| d.base_deprel() == "cop")
}

/// A non-finite verb heading a clause on its own (no finite auxiliary).
fn non_finite_form<'a>(g: &Graph, t: &'a Token) -> Option<&'a str> {
    if t.pos != Pos::Verb || !CLAUSAL.contains(&t.base_deprel()) {
        return None;
    }
    let periphrastic = g.dependents(t.index).any(|d| matches!(d.base_deprel(), "aux" | "cop") && d.is_finite_verb());
    if periphrastic {
        return None;
    }
    t.feature("VerbForm").filter(|f| matches!(*f, "Inf" | "Ger" | "Part"))
}

pub fn clause_analysis(s: &Sentence) -> ClauseAnalysis {
    let g = Graph::new(s);
    let mut a = ClauseAnalysis { clause_count: clause_count(s), ..ClauseAnalysis::default() };
    for t in &s.tokens {
        let rel = t.base_deprel();
        if SUBORDINATE.contains(&rel) {
            a.subordinate += 1;
        }
        if rel == "advcl" {
            a.adverbial += 1;
        }
        let relative_pronoun = || g.dependents(t.index).any(|d| d.pos == Pos::Pron && d.feature("PronType") == Some("Rel"));
        if t.deprel == "acl:relcl" || (rel == "acl" && relative_pronoun()) {
            a.relative += 1;
        }
        match non_finite_form(&g, t) {
            Some("Inf") => a.infinitive_clauses += 1,
            Some("Ger") => a.gerund_clauses += 1,
            Some("Part") => a.participle_clauses += 1,
            _ => {}
        }
        if !is_predicate(&g, t) {
            continue;
        }
        let deps: Vec<&Token> = g.dependents(t.index).collect();
        if deps.iter().any(|d| d.deprel == "aux:pass" || d.deprel == "nsubj:pass" || d.deprel == "csubj:pass") {
            a.passive += 1;
        }
        let subject = deps.iter().find(|d| d.base_deprel() == "nsubj");
        let object = deps.iter().find(|d| d.base_deprel() == "obj");
        let postponed = subject.is_some_and(|d| d.index > t.index);
        if postponed {
            a.postponed_subject += 1;
        }
        if postponed || object.is_some_and(|d| d.index < t.index) {
            a.non_svo += 1;
        }
        if t.pos == Pos::Verb || t.head == 0 {
            let first = g.reach(t.index, |_| true).into_iter().min().unwrap_or(t.index);
            if g.token(first).pos == Pos::Cconj {
                a.coordinate_starts += 1;
            }
        }
    }
    a
}

/// Word counts of the noun phrases of a sentence. Every noun, proper noun
/// or pronoun heads one; its determiners, adjectival, nominal and numeric
/// modifiers (with their prepositions) are collected recursively and the
/// phrase is the contiguous run of collected tokens around the head.
pub fn noun_phrases(s: &Sentence) -> Vec<usize> {
    let g = Graph::new(s);
    let mut sizes = Vec::new();
    for head in s.tokens.iter().filter(|t| matches!(t.pos, Pos::Noun | Pos::Propn | Pos::Pron)) {
        let mut member = vec![false; s.tokens.len() + 2];
        for i in g.reach(head.index, |d| NOMINAL_DEPENDENTS.contains(&d.base_deprel())) {
            member[i] = true;
        }
        // The head's own preposition belongs to the enclosing phrase.
        for d in g.dependents(head.index).filter(|d| d.base_deprel() == "case") {
            if d.index < head.index {
                for i in g.reach(d.index, |_| true) {
                    member[i] = false;
                }
            }
        }
        let mut lo = head.index;
        while lo > 1 && member[lo - 1] {
            lo -= 1;
        }
        let mut hi = head.index;
        while hi < s.tokens.len() && member[hi + 1] {
            hi += 1;
        }
        sizes.push((lo..=hi).filter(|&i| g.token(i).is_word()).count());
    }
    sizes
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PatternDensity {
    /// Gerund clauses over clauses.
    pub gerund_clause_ratio: Option<f64>,
    pub np_mean_words: Option<f64>,
    pub np_max_words: Option<f64>,
    pub np_min_words: Option<f64>,
}

pub fn pattern_density(doc: &Document) -> PatternDensity {
    let mut gerunds = 0;
    let mut clauses = 0;
    let mut sizes = Vec::new();
    for s in doc.sentences() {
        let a = clause_analysis(s);
        gerunds += a.gerund_clauses.min(a.clause_count);
        clauses += a.clause_count;
        sizes.extend(noun_phrases(s).into_iter().map(|n| n as f64));
    }
    PatternDensity {
        gerund_clause_ratio: ratio_usize(gerunds, clauses),
        np_mean_words: mean(&sizes),
        np_max_words: max(&sizes),
        np_min_words: min(&sizes),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SyntacticComplexity {
    pub dep_distance: Option<f64>,
    pub words_before_main_verb: Option<f64>,
    pub adverbs_before_main_verb: Option<f64>,
    /// Mean number of finite verbs per sentence (may be below one).
    pub clauses_per_sentence: Option<f64>,
    /// Shares of sentences with 1, 2, 3, 4, 5 and 6+ clauses.
    pub clause_distribution: [Option<f64>; 6],
    pub coordinate_per_clause: Option<f64>,
    pub subordinate: Option<f64>,
    pub relative: Option<f64>,
    pub adverbial: Option<f64>,
    pub passive: Option<f64>,
    pub non_svo: Option<f64>,
    pub postponed_subject: Option<f64>,
    pub infinitive: Option<f64>,
    pub participle: Option<f64>,
}

/// Clause proportions pool clamped per-sentence counts over the total
/// number of clauses.
pub fn syntactic_complexity(doc: &Document) -> SyntacticComplexity {
    let sentences: Vec<&Sentence> = doc.sentences().collect();
    let per = |f: fn(&Sentence) -> Option<f64>| mean(&sentences.iter().filter_map(|s| f(s)).collect::<Vec<_>>());
    let analyses: Vec<ClauseAnalysis> = sentences.iter().map(|s| clause_analysis(s)).collect();
    let clauses: usize = analyses.iter().map(|a| a.clause_count).sum();
    let share = |f: fn(&ClauseAnalysis) -> usize| {
        ratio_usize(analyses.iter().map(|a| f(a).min(a.clause_count)).sum(), clauses)
    };
    let mut distribution = [None; 6];
    for (k, slot) in distribution.iter_mut().enumerate() {
        let n = analyses.iter().filter(|a| a.clause_count.min(6) == k + 1).count();
        *slot = ratio_usize(n, analyses.len());
    }
    SyntacticComplexity {
        dep_distance: per(dependency_distance),
        words_before_main_verb: per(|s| words_before_main_verb(s).map(|n| n as f64)),
        adverbs_before_main_verb: per(|s| adverbs_before_main_verb(s).map(|n| n as f64)),
        clauses_per_sentence: per(|s| Some(finite_verbs(s) as f64)),
        clause_distribution: distribution,
        coordinate_per_clause: share(|a| a.coordinate_starts),
        subordinate: share(|a| a.subordinate),
        relative: share(|a| a.relative),
        adverbial: share(|a| a.adverbial),
        passive: share(|a| a.passive),
        non_svo: share(|a| a.non_svo),
        postponed_subject: share(|a| a.postponed_subject),
        infinitive: share(|a| a.infinitive_clauses),
        participle: share(|a| a.participle_clauses),
    }
}

pub(crate) fn emit_complexity(ctx: &Context) -> Emitted {
    let c = syntactic_complexity(ctx.doc);
    let d = c.clause_distribution;
    vec![
        ("dep_distance", c.dep_distance),
        ("words_before_main_verb", c.words_before_main_verb),
        ("adverbs_before_main_verb", c.adverbs_before_main_verb),
        ("clauses_per_sentence", c.clauses_per_sentence),
        ("sentences_with_one_clause", d[0]),
        ("sentences_with_two_clauses", d[1]),
        ("sentences_with_three_clauses", d[2]),
        ("sentences_with_four_clauses", d[3]),
        ("sentences_with_five_clauses", d[4]),
        ("sentences_with_six_or_more_clauses", d[5]),
        ("coordinate_conjunctions_per_clauses", c.coordinate_per_clause),
        ("subordinate_clauses", c.subordinate),
        ("relative_clauses", c.relative),
        ("adverbial_clauses", c.adverbial),
        ("passive_ratio", c.passive),
        ("non_svo_ratio", c.non_svo),
        ("postponed_subject_ratio", c.postponed_subject),
        ("infinitive_clauses", c.infinitive),
        ("participle_clauses", c.participle),
    ]
}

pub(crate) fn emit_pattern_density(ctx: &Context) -> Emitted {
    let p = pattern_density(ctx.doc);
    vec![
        ("gerund_clauses", p.gerund_clause_ratio),
        ("mean_noun_phrase", p.np_mean_words),
        ("max_noun_phrase", p.np_max_words),
        ("min_noun_phrase", p.np_min_words),
    ]
}
