//! Finite models, assignments, satisfaction and truth.

mod assignment;
mod eval;
mod hfs;
mod model;
pub mod presets;

pub use assignment::Assignment;
pub use eval::{
    evaluate, is_true, satisfies, satisfying_assignments, TruthVerdict, DEFAULT_ENUMERATION_CAP,
};
pub use hfs::{build_class_model, hereditarily_finite_sets, HfSet, MAX_CLASS_MODEL_RANK};
pub use model::{Model, ModelBuilder};

use thiserror::Error;

use crate::formula::FormulaError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("a model needs a non-empty domain")]
    EmptyDomain,
    #[error("element `{0}` listed twice in the domain")]
    DuplicateElement(String),
    #[error("`{element}` is not in the domain ({context})")]
    UnknownElement { element: String, context: String },
    #[error("tuple of length {found} in the extension of `{predicate}` (arity {expected})")]
    TupleArity {
        predicate: String,
        expected: usize,
        found: usize,
    },
    #[error("not a sentence: {0}")]
    NotASentence(String),
    #[error("enumerating {variables} variable(s) over {domain} element(s) exceeds the cap of {cap} bindings")]
    EnumerationCap {
        domain: usize,
        variables: usize,
        cap: u64,
    },
    #[error("class model rank {rank} out of range (0..={max})")]
    RankOutOfRange { rank: u32, max: u32 },
    #[error("malformed model: {0}")]
    Malformed(String),
    #[error(transparent)]
    Formula(#[from] FormulaError),
}
