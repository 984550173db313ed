//! Assertion networks in which some assertions talk about the truth of
//! others, and an exhaustive search for classically consistent valuations.
//!
//! Whether such a network is paradoxical depends on the facts (the ground
//! assertions), not only on the form of the semantic ones: the same two
//! claims can be paradoxical in one scenario and consistent in another.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Most semantic assertions a scenario may have (the search is 2^m).
pub const MAX_SEMANTIC_ASSERTIONS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pattern {
    /// Strictly more than half of the referenced assertions are false.
    MajorityFalse,
    /// Strictly more than half are true.
    MajorityTrue,
    AllTrue,
    AllFalse,
}

/// A claim about every assertion made by `speaker` on `topic`, the claiming
/// assertion included when it matches.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemanticClaim {
    pub pattern: Pattern,
    pub speaker: String,
    pub topic: String,
}

impl fmt::Display for SemanticClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match self.pattern {
            Pattern::MajorityFalse => "most are false",
            Pattern::MajorityTrue => "most are true",
            Pattern::AllTrue => "all are true",
            Pattern::AllFalse => "all are false",
        };
        write!(f, "of what {} says about {}, {p}", self.speaker, self.topic)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AssertionKind {
    Ground { value: bool },
    Semantic { claim: SemanticClaim },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assertion {
    pub id: String,
    pub speaker: String,
    pub topic: String,
    #[serde(flatten)]
    pub kind: AssertionKind,
}

impl Assertion {
    pub fn ground(
        id: impl Into<String>,
        speaker: impl Into<String>,
        topic: impl Into<String>,
        value: bool,
    ) -> Self {
        Assertion {
            id: id.into(),
            speaker: speaker.into(),
            topic: topic.into(),
            kind: AssertionKind::Ground { value },
        }
    }

    pub fn semantic(
        id: impl Into<String>,
        speaker: impl Into<String>,
        topic: impl Into<String>,
        pattern: Pattern,
        about_speaker: impl Into<String>,
        about_topic: impl Into<String>,
    ) -> Self {
        Assertion {
            id: id.into(),
            speaker: speaker.into(),
            topic: topic.into(),
            kind: AssertionKind::Semantic {
                claim: SemanticClaim {
                    pattern,
                    speaker: about_speaker.into(),
                    topic: about_topic.into(),
                },
            },
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParadoxError {
    #[error("assertion id `{0}` used twice")]
    DuplicateId(String),
    #[error("`{id}` makes a claim ({claim}) about no assertions at all")]
    EmptyReference { id: String, claim: SemanticClaim },
    #[error("{count} semantic assertions exceed the budget of {max}")]
    Budget { count: usize, max: usize },
    #[error("valuation has no value for `{0}`")]
    MissingValue(String),
    #[error("malformed scenario: {0}")]
    Malformed(String),
}

pub type Valuation = BTreeMap<String, bool>;

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Scenario {
    pub assertions: Vec<Assertion>,
}

impl Scenario {
    pub fn new(assertions: Vec<Assertion>) -> Result<Self, ParadoxError> {
        let mut seen = HashSet::new();
        for a in &assertions {
            if !seen.insert(a.id.as_str()) {
                return Err(ParadoxError::DuplicateId(a.id.clone()));
            }
        }
        Ok(Scenario { assertions })
    }

    /// Reads a JSON list of assertions, e.g.
    /// `{"id": "15", "speaker": "Jones", "topic": "Watergate", "kind": "semantic",
    ///   "claim": {"pattern": "majority_false", "speaker": "Nixon", "topic": "Watergate"}}`
    /// or `{"id": "n1", "speaker": "Nixon", "topic": "Watergate", "kind": "ground", "value": true}`.
    pub fn from_json(text: &str) -> Result<Self, ParadoxError> {
        let assertions: Vec<Assertion> =
            serde_json::from_str(text).map_err(|e| ParadoxError::Malformed(e.to_string()))?;
        Scenario::new(assertions)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario serializes")
    }

    /// Indices of the assertions `claim` is about.
    pub fn reference_set(&self, claim: &SemanticClaim) -> Vec<usize> {
        self.assertions
            .iter()
            .enumerate()
            .filter(|(_, a)| a.speaker == claim.speaker && a.topic == claim.topic)
            .map(|(i, _)| i)
            .collect()
    }

    fn semantic_indices(&self) -> Vec<usize> {
        self.assertions
            .iter()
            .enumerate()
            .filter(|(_, a)| matches!(a.kind, AssertionKind::Semantic { .. }))
            .map(|(i, _)| i)
            .collect()
    }
}

/// Truth of a claim given the values of every assertion (by index).
pub fn claim_holds(claim: &SemanticClaim, reference: &[usize], values: &[bool]) -> bool {
    let trues = reference.iter().filter(|&&i| values[i]).count();
    let falses = reference.len() - trues;
    match claim.pattern {
        Pattern::MajorityFalse => 2 * falses > reference.len(),
        Pattern::MajorityTrue => 2 * trues > reference.len(),
        Pattern::AllTrue => falses == 0,
        Pattern::AllFalse => trues == 0,
    }
}

/// Every valuation in which each semantic assertion is true exactly when
/// its claim holds, ground assertions keeping their fixed values. Sorted.
pub fn consistent_valuations(s: &Scenario) -> Result<Vec<Valuation>, ParadoxError> {
    let semantic = s.semantic_indices();
    if semantic.len() > MAX_SEMANTIC_ASSERTIONS {
        return Err(ParadoxError::Budget {
            count: semantic.len(),
            max: MAX_SEMANTIC_ASSERTIONS,
        });
    }
    let claims: Vec<(usize, &SemanticClaim, Vec<usize>)> = semantic
        .iter()
        .map(|&i| {
            let AssertionKind::Semantic { claim } = &s.assertions[i].kind else {
                unreachable!()
            };
            let reference = s.reference_set(claim);
            if reference.is_empty() {
                return Err(ParadoxError::EmptyReference {
                    id: s.assertions[i].id.clone(),
                    claim: claim.clone(),
                });
            }
            Ok((i, claim, reference))
        })
        .collect::<Result<_, _>>()?;

    let mut values: Vec<bool> = s
        .assertions
        .iter()
        .map(|a| matches!(a.kind, AssertionKind::Ground { value: true }))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << semantic.len() {
        for (bit, &i) in semantic.iter().enumerate() {
            values[i] = mask >> bit & 1 == 1;
        }
        if claims
            .iter()
            .all(|(i, claim, reference)| values[*i] == claim_holds(claim, reference, &values))
        {
            out.push(
                s.assertions
                    .iter()
                    .zip(&values)
                    .map(|(a, &v)| (a.id.clone(), v))
                    .collect::<Valuation>(),
            );
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplainRow {
    pub id: String,
    pub claim: SemanticClaim,
    pub reference: Vec<String>,
    pub true_count: usize,
    pub false_count: usize,
    /// Whether the claim holds under the valuation.
    pub verdict: bool,
    /// The value the valuation gives the assertion.
    pub assigned: bool,
}

impl ExplainRow {
    pub fn consistent(&self) -> bool {
        self.verdict == self.assigned
    }
}

impl fmt::Display for ExplainRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} [{}] true={} false={} claim={} assigned={} {}",
            self.id,
            self.claim,
            self.reference.join(","),
            self.true_count,
            self.false_count,
            self.verdict,
            self.assigned,
            if self.consistent() {
                "consistent"
            } else {
                "INCONSISTENT"
            }
        )
    }
}

/// Per semantic assertion: what it is about, the counts under `v`, and
/// whether `v` gives it the value its claim earns.
pub fn explain(s: &Scenario, v: &Valuation) -> Result<Vec<ExplainRow>, ParadoxError> {
    let values: Vec<bool> = s
        .assertions
        .iter()
        .map(|a| {
            v.get(&a.id)
                .copied()
                .ok_or_else(|| ParadoxError::MissingValue(a.id.clone()))
        })
        .collect::<Result<_, _>>()?;
    let mut rows = Vec::new();
    for (i, a) in s.assertions.iter().enumerate() {
        let AssertionKind::Semantic { claim } = &a.kind else {
            continue;
        };
        let reference = s.reference_set(claim);
        let true_count = reference.iter().filter(|&&j| values[j]).count();
        rows.push(ExplainRow {
            id: a.id.clone(),
            claim: claim.clone(),
            reference: reference
                .iter()
                .map(|&j| s.assertions[j].id.clone())
                .collect(),
            true_count,
            false_count: reference.len() - true_count,
            verdict: claim_holds(claim, &reference, &values),
            assigned: values[i],
        });
    }
    Ok(rows)
}

/// The Watergate network: Jones asserts only (15), "most of what Nixon says
/// about Watergate is false"; Nixon asserts (16), "everything Jones says
/// about Watergate is true", plus `k` true and `k` false ground assertions
/// (`n1..n2k`, the first `k` true). With `jones_extra_false`, Jones also
/// asserts one more false ground statement (`j1`).
pub fn watergate(k: usize, jones_extra_false: bool) -> Scenario {
    let mut assertions = vec![
        Assertion::semantic(
            "15",
            "Jones",
            "Watergate",
            Pattern::MajorityFalse,
            "Nixon",
            "Watergate",
        ),
        Assertion::semantic(
            "16",
            "Nixon",
            "Watergate",
            Pattern::AllTrue,
            "Jones",
            "Watergate",
        ),
    ];
    for i in 0..2 * k {
        assertions.push(Assertion::ground(
            format!("n{}", i + 1),
            "Nixon",
            "Watergate",
            i < k,
        ));
    }
    if jones_extra_false {
        assertions.push(Assertion::ground("j1", "Jones", "Watergate", false));
    }
    Scenario::new(assertions).expect("distinct ids")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_watergate_is_paradoxical() {
        assert!(consistent_valuations(&watergate(1, false))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn extra_false_jones_assertion_dissolves_it() {
        let s = watergate(1, true);
        let vals = consistent_valuations(&s).unwrap();
        assert_eq!(vals.len(), 1);
        assert!(vals[0]["15"]);
        assert!(!vals[0]["16"]);
        assert!(explain(&s, &vals[0])
            .unwrap()
            .iter()
            .all(ExplainRow::consistent));
    }

    #[test]
    fn ground_only_scenario() {
        let s = Scenario::new(vec![
            Assertion::ground("a", "X", "T", true),
            Assertion::ground("b", "X", "T", false),
        ])
        .unwrap();
        let vals = consistent_valuations(&s).unwrap();
        assert_eq!(
            vals,
            vec![Valuation::from([("a".into(), true), ("b".into(), false)])]
        );
    }

    #[test]
    fn all_true_candidate_is_inconsistent_in_base_scenario() {
        let s = watergate(1, false);
        let v: Valuation = [("15", true), ("16", true), ("n1", true), ("n2", false)]
            .into_iter()
            .map(|(k, b)| (k.to_string(), b))
            .collect();
        let rows = explain(&s, &v).unwrap();
        let fifteen = rows.iter().find(|r| r.id == "15").unwrap();
        // Nixon: 16 true, n1 true, n2 false -> 1 of 3 false, no majority
        assert_eq!((fifteen.true_count, fifteen.false_count), (2, 1));
        assert!(!fifteen.verdict);
        assert!(rows.iter().any(|r| !r.consistent()));
    }

    #[test]
    fn empty_scenario() {
        let s = Scenario::default();
        assert_eq!(explain(&s, &Valuation::new()).unwrap(), vec![]);
        assert_eq!(consistent_valuations(&s).unwrap(), vec![Valuation::new()]);
    }

    #[test]
    fn self_inclusion() {
        let s = Scenario::new(vec![Assertion::semantic(
            "L",
            "Epi",
            "Crete",
            Pattern::AllFalse,
            "Epi",
            "Crete",
        )])
        .unwrap();
        let AssertionKind::Semantic { claim } = &s.assertions[0].kind else {
            panic!()
        };
        assert_eq!(s.reference_set(claim), vec![0]);
        // "everything I say is false", said alone, is the liar
        assert!(consistent_valuations(&s).unwrap().is_empty());
        // (16) is among the assertions (15) is about
        let w = watergate(2, false);
        let AssertionKind::Semantic { claim } = &w.assertions[0].kind else {
            panic!()
        };
        assert!(w.reference_set(claim).contains(&1));
    }

    #[test]
    fn errors() {
        let s = Scenario::new(vec![Assertion::semantic(
            "x",
            "A",
            "T",
            Pattern::AllTrue,
            "B",
            "T",
        )])
        .unwrap();
        assert!(matches!(
            consistent_valuations(&s),
            Err(ParadoxError::EmptyReference { .. })
        ));
        assert!(matches!(
            Scenario::new(vec![
                Assertion::ground("a", "X", "T", true),
                Assertion::ground("a", "X", "T", true)
            ]),
            Err(ParadoxError::DuplicateId(_))
        ));
        let many: Vec<Assertion> = (0..21)
            .map(|i| Assertion::semantic(format!("s{i}"), "A", "T", Pattern::AllTrue, "A", "T"))
            .collect();
        assert!(matches!(
            consistent_valuations(&Scenario::new(many).unwrap()),
            Err(ParadoxError::Budget { count: 21, .. })
        ));
        assert!(matches!(
            explain(&watergate(1, false), &Valuation::new()),
            Err(ParadoxError::MissingValue(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let s = watergate(1, true);
        let text = s.to_json();
        assert!(text.contains("\"majority_false\""));
        assert_eq!(Scenario::from_json(&text).unwrap(), s);
    }
}
