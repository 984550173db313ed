//! Assigning language levels to sentences that ascribe truth to one another.
//!
//! A ground sentence sits at level 0. A sentence applying the truth
//! predicate to sentence `r` must sit strictly above `r`. Levels exist iff
//! the reference graph is acyclic; a cycle is exactly a sentence that
//! (directly or through others) talks about its own truth.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::prop::parse_prop;
use super::MetaError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SentenceKind {
    Ground,
    Semantic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub label: String,
    pub kind: SentenceKind,
    pub body: String,
}

/// Labeled sentences whose truth-predicate references have been resolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeveledCorpus {
    entries: Vec<CorpusEntry>,
    /// For each entry, the labels it applies `True` to, in order of first
    /// occurrence.
    refs: Vec<Vec<String>>,
}

impl LeveledCorpus {
    pub fn new(entries: Vec<CorpusEntry>) -> Result<Self, MetaError> {
        let mut index = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            if index.insert(e.label.as_str(), i).is_some() {
                return Err(MetaError::DuplicateName(e.label.clone()));
            }
        }
        let mut refs = Vec::with_capacity(entries.len());
        for e in &entries {
            let r = match e.kind {
                SentenceKind::Ground => {
                    if e.body.contains("True(") {
                        return Err(MetaError::Malformed(format!(
                            "ground sentence `{}` uses the truth predicate",
                            e.label
                        )));
                    }
                    Vec::new()
                }
                SentenceKind::Semantic => {
                    let body = parse_prop(&e.body).map_err(|err| {
                        MetaError::Malformed(format!("body of `{}`: {err}", e.label))
                    })?;
                    let r: Vec<String> = body
                        .atoms_in_order()
                        .iter()
                        .filter_map(|a| a.strip_prefix("True(")?.strip_suffix(')'))
                        .map(|l| l.trim().to_string())
                        .collect();
                    if let Some(missing) = r.iter().find(|l| !index.contains_key(l.as_str())) {
                        return Err(MetaError::UnresolvedReference {
                            label: e.label.clone(),
                            reference: missing.clone(),
                        });
                    }
                    r
                }
            };
            refs.push(r);
        }
        Ok(LeveledCorpus { entries, refs })
    }

    /// Reads a JSON list of `{label, kind, body}` objects.
    pub fn from_json(text: &str) -> Result<Self, MetaError> {
        let entries: Vec<CorpusEntry> =
            serde_json::from_str(text).map_err(|e| MetaError::Malformed(e.to_string()))?;
        LeveledCorpus::new(entries)
    }

    pub fn entries(&self) -> &[CorpusEntry] {
        &self.entries
    }

    /// Labels referenced by the entry with the given label.
    pub fn references(&self, label: &str) -> Option<&[String]> {
        let i = self.entries.iter().position(|e| e.label == label)?;
        Some(&self.refs[i])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stratification {
    /// Minimal level of every sentence.
    Levels(BTreeMap<String, usize>),
    /// A reference cycle, first label repeated at the end: `[S, S]`,
    /// `[15, 16, 15]`.
    Cycle(Vec<String>),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mark {
    Unvisited,
    OnStack,
    Done(usize),
}

/// Minimal levels by longest path over the reference graph, or the first
/// cycle found when visiting entries in corpus order.
pub fn stratify(c: &LeveledCorpus) -> Stratification {
    let index: HashMap<&str, usize> = c
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| (e.label.as_str(), i))
        .collect();
    let edges: Vec<Vec<usize>> = c
        .refs
        .iter()
        .map(|r| r.iter().map(|l| index[l.as_str()]).collect())
        .collect();

    let mut marks = vec![Mark::Unvisited; c.entries.len()];
    let mut stack = Vec::new();
    for root in 0..c.entries.len() {
        if let Err(cycle) = visit(root, &edges, &mut marks, &mut stack) {
            return Stratification::Cycle(
                cycle
                    .into_iter()
                    .map(|i| c.entries[i].label.clone())
                    .collect(),
            );
        }
    }
    Stratification::Levels(
        c.entries
            .iter()
            .zip(&marks)
            .map(|(e, m)| match m {
                Mark::Done(level) => (e.label.clone(), *level),
                _ => unreachable!("every node finished"),
            })
            .collect(),
    )
}

fn visit(
    node: usize,
    edges: &[Vec<usize>],
    marks: &mut [Mark],
    stack: &mut Vec<usize>,
) -> Result<usize, Vec<usize>> {
    match marks[node] {
        Mark::Done(level) => return Ok(level),
        Mark::OnStack => {
            let start = stack.iter().position(|&n| n == node).expect("on stack");
            let mut cycle = stack[start..].to_vec();
            cycle.push(node);
            return Err(cycle);
        }
        Mark::Unvisited => {}
    }
    marks[node] = Mark::OnStack;
    stack.push(node);
    let mut level = 0;
    for &next in &edges[node] {
        level = level.max(visit(next, edges, marks, stack)? + 1);
    }
    stack.pop();
    marks[node] = Mark::Done(level);
    Ok(level)
}
