use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::FormulaError;

/// A finite relational vocabulary: predicate symbols with their arities and
/// individual constants. No function symbols.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Signature {
    predicates: BTreeMap<String, usize>,
    #[serde(default)]
    constants: BTreeSet<String>,
}

#[derive(Deserialize)]
struct RawSignature {
    predicates: BTreeMap<String, usize>,
    #[serde(default)]
    constants: BTreeSet<String>,
}

impl Signature {
    pub fn new<P, C, S>(predicates: P, constants: C) -> Result<Self, FormulaError>
    where
        P: IntoIterator<Item = (S, usize)>,
        C: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut sig = Signature::default();
        for (name, arity) in predicates {
            sig.add_predicate(name, arity)?;
        }
        for name in constants {
            sig.add_constant(name)?;
        }
        Ok(sig)
    }

    /// The language of the calculus of classes: one binary predicate `I`
    /// (class inclusion) and no constants.
    pub fn class_calculus() -> Self {
        Signature::new([("I", 2)], Vec::<&str>::new()).expect("static signature")
    }

    pub fn add_predicate(
        &mut self,
        name: impl Into<String>,
        arity: usize,
    ) -> Result<(), FormulaError> {
        let name = name.into();
        check_identifier(&name)?;
        if arity == 0 {
            return Err(FormulaError::InvalidSignature(format!(
                "predicate `{name}` must have arity >= 1"
            )));
        }
        if self.constants.contains(&name) {
            return Err(FormulaError::InvalidSignature(format!(
                "`{name}` is declared both as a predicate and a constant"
            )));
        }
        match self.predicates.get(&name) {
            Some(&old) if old != arity => Err(FormulaError::InvalidSignature(format!(
                "predicate `{name}` declared with arities {old} and {arity}"
            ))),
            _ => {
                self.predicates.insert(name, arity);
                Ok(())
            }
        }
    }

    pub fn add_constant(&mut self, name: impl Into<String>) -> Result<(), FormulaError> {
        let name = name.into();
        check_identifier(&name)?;
        if self.predicates.contains_key(&name) {
            return Err(FormulaError::InvalidSignature(format!(
                "`{name}` is declared both as a predicate and a constant"
            )));
        }
        self.constants.insert(name);
        Ok(())
    }

    pub fn arity(&self, predicate: &str) -> Option<usize> {
        self.predicates.get(predicate).copied()
    }

    pub fn has_constant(&self, name: &str) -> bool {
        self.constants.contains(name)
    }

    pub fn predicates(&self) -> impl Iterator<Item = (&str, usize)> {
        self.predicates.iter().map(|(n, &a)| (n.as_str(), a))
    }

    pub fn constants(&self) -> impl Iterator<Item = &str> {
        self.constants.iter().map(String::as_str)
    }

    /// Reads a signature from its JSON form
    /// (`{"predicates": {"I": 2}, "constants": []}`), validating every name.
    pub fn from_json(text: &str) -> Result<Self, FormulaError> {
        let raw: RawSignature = serde_json::from_str(text)
            .map_err(|e| FormulaError::InvalidSignature(e.to_string()))?;
        Signature::new(raw.predicates, raw.constants)
    }
}

pub(crate) fn is_variable_spelling(name: &str) -> bool {
    name.len() > 1 && name.starts_with('x') && name[1..].bytes().all(|b| b.is_ascii_digit())
}

/// Identifiers are ASCII `[A-Za-z_][A-Za-z0-9_]*`, excluding the keywords and
/// anything spelled like a variable (`x` followed by digits).
pub(crate) fn check_identifier(name: &str) -> Result<(), FormulaError> {
    let mut chars = name.chars();
    let ok = match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {
            chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        }
        _ => false,
    };
    if !ok || name == "forall" || name == "exists" || is_variable_spelling(name) {
        return Err(FormulaError::InvalidSignature(format!(
            "`{name}` is not a usable predicate or constant name"
        )));
    }
    Ok(())
}
