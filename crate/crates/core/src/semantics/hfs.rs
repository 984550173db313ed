//! Hereditarily finite sets and the inclusion model of the class calculus.

use std::collections::BTreeSet;
use std::fmt;

use super::{Model, SemanticsError};

/// Largest rank [`build_class_model`] accepts (16 elements, 256 pairs).
pub const MAX_CLASS_MODEL_RANK: u32 = 3;

/// A hereditarily finite set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HfSet(BTreeSet<HfSet>);

impl HfSet {
    pub fn empty() -> Self {
        HfSet(BTreeSet::new())
    }

    pub fn is_subset(&self, other: &HfSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 0 for the empty set, otherwise one more than the largest member rank.
    pub fn rank(&self) -> u32 {
        self.0.iter().map(|m| m.rank() + 1).max().unwrap_or(0)
    }
}

impl FromIterator<HfSet> for HfSet {
    fn from_iter<I: IntoIterator<Item = HfSet>>(iter: I) -> Self {
        HfSet(iter.into_iter().collect())
    }
}

/// Canonical spelling: `{}` for the empty set, members separated by commas
/// without spaces, listed in canonical order.
impl fmt::Display for HfSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = canonical_order(self.0.iter().cloned())
            .iter()
            .map(ToString::to_string)
            .collect();
        write!(f, "{{{}}}", members.join(","))
    }
}

/// Sorts by rank, then cardinality, then spelling.
fn canonical_order(sets: impl IntoIterator<Item = HfSet>) -> Vec<HfSet> {
    let mut keyed: Vec<(u32, usize, String, HfSet)> = sets
        .into_iter()
        .map(|s| (s.rank(), s.len(), s.to_string(), s))
        .collect();
    keyed.sort();
    keyed.into_iter().map(|(.., s)| s).collect()
}

/// All hereditarily finite sets built in `levels` rounds of taking subsets,
/// starting from `{∅}`: level 0 is `{∅}`, level `r` is the power set of
/// level `r - 1`. Ordered by rank, then size, then spelling.
pub fn hereditarily_finite_sets(levels: u32) -> Vec<HfSet> {
    let mut current = vec![HfSet::empty()];
    for _ in 0..levels {
        let n = current.len();
        current = (0u64..1 << n)
            .map(|mask| {
                current
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, s)| s.clone())
                    .collect()
            })
            .collect();
    }
    canonical_order(current)
}

/// The intended model of the class calculus at a given rank: the
/// hereditarily finite sets of that rank or below, with `I` read as `⊆`.
pub fn build_class_model(rank: u32) -> Result<Model, SemanticsError> {
    if rank > MAX_CLASS_MODEL_RANK {
        return Err(SemanticsError::RankOutOfRange {
            rank,
            max: MAX_CLASS_MODEL_RANK,
        });
    }
    let sets = hereditarily_finite_sets(rank);
    let names: Vec<String> = sets.iter().map(ToString::to_string).collect();
    let mut inclusion = Vec::new();
    for (s, sn) in sets.iter().zip(&names) {
        for (t, tn) in sets.iter().zip(&names) {
            if s.is_subset(t) {
                inclusion.push(vec![sn.clone(), tn.clone()]);
            }
        }
    }
    Model::builder(names).predicate("I", 2, inclusion).build()
}
