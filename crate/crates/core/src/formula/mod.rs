//! The object language: syntax trees, the ASCII concrete syntax, and
//! structural queries.

mod lexer;
mod parser;
mod printer;
mod signature;
mod syntax;

pub use parser::{parse_formula, parse_formula_inferring};
pub use printer::render;
pub use signature::Signature;
pub use syntax::{Formula, Term, Variable, MAX_VARIABLE_INDEX};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("unexpected character `{found}` at offset {position}")]
    Lex { position: usize, found: char },
    #[error("bad variable index `x{digits}` at offset {position} (indices run from 1 to {MAX_VARIABLE_INDEX})")]
    VariableIndex { position: usize, digits: String },
    #[error("parse error at offset {position}: found {found}, expected one of {}", .expected.join(", "))]
    Parse {
        position: usize,
        found: String,
        expected: Vec<String>,
    },
    #[error("arity mismatch: `{predicate}` expects {expected} argument(s), got {found}")]
    ArityMismatch {
        predicate: String,
        expected: usize,
        found: usize,
    },
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("unknown constant `{0}`")]
    UnknownConstant(String),
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
}

/// Checks that every atom of `f` uses a declared predicate with its declared
/// arity and that every constant is declared.
pub fn check_against(f: &Formula, sig: &Signature) -> Result<(), FormulaError> {
    match f {
        Formula::Atom(pred, terms) => {
            let arity = sig
                .arity(pred)
                .ok_or_else(|| FormulaError::UnknownPredicate(pred.clone()))?;
            if arity != terms.len() {
                return Err(FormulaError::ArityMismatch {
                    predicate: pred.clone(),
                    expected: arity,
                    found: terms.len(),
                });
            }
            for t in terms {
                if let Term::Const(c) = t {
                    if !sig.has_constant(c) {
                        return Err(FormulaError::UnknownConstant(c.clone()));
                    }
                }
            }
            Ok(())
        }
        Formula::Not(a) | Formula::Forall(_, a) => check_against(a, sig),
        Formula::Or(a, b) => {
            check_against(a, sig)?;
            check_against(b, sig)
        }
    }
}
