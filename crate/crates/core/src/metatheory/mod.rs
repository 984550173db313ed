//! Truth definitions from the outside: T-schema instances and finite
//! definitions, the level hierarchy for truth ascriptions, and the liar.

mod liar;
mod prop;
mod stratify;
mod tschema;

pub use liar::{liar_report, DerivationStep, LiarReport, LIAR_IS_TRUE, QUOTED_IS_TRUE};
pub use prop::{
    countermodel, is_tautology, parse_prop, prop_entails, prop_satisfiable, PropError, PropFormula,
    Row, MAX_ATOMS,
};
pub use stratify::{stratify, CorpusEntry, LeveledCorpus, SentenceKind, Stratification};
pub use tschema::{
    definition_for_sentences, finite_truth_definition, quote, t_instance, verify_material_adequacy,
    AdequacyReport, AdequacyRow, FiniteTruthDefinition, Naming, TInstance,
};

use thiserror::Error;

use crate::godel::GodelError;
use crate::semantics::SemanticsError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetaError {
    #[error("not a sentence: {0}")]
    NotASentence(String),
    #[error("a truth definition needs at least one sentence")]
    EmptyDefinition,
    #[error("name `{0}` used twice")]
    DuplicateName(String),
    #[error("`{label}` refers to unknown sentence `{reference}`")]
    UnresolvedReference { label: String, reference: String },
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
    #[error(transparent)]
    Godel(#[from] GodelError),
    #[error(transparent)]
    Prop(#[from] PropError),
}
