//! Tarskian truth for finite first-order models.
//!
//! * [`formula`]: the object language, its parser and printer.
//! * [`semantics`]: finite models, assignments, satisfaction and truth.
//! * [`godel`]: prime-power coding of symbol strings.
//! * [`metatheory`]: T-schema instances, finite truth definitions, level
//!   stratification of truth ascriptions, and the liar derivation.
//! * [`paradox`]: assertion networks whose paradoxicality depends on facts.
//! * [`cli`]: the `tarski` command.

pub mod cli;
pub mod formula;
pub mod godel;
pub mod metatheory;
pub mod paradox;
pub mod semantics;
