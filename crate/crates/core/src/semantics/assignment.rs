use std::collections::BTreeMap;

use super::{Model, SemanticsError};
use crate::formula::Variable;

/// A total assignment of domain elements to the variables `x1, x2, ...`,
/// stored as finitely many explicit bindings plus one element for every
/// other index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    bindings: BTreeMap<Variable, String>,
    default: String,
}

impl Assignment {
    pub fn constant(default: impl Into<String>) -> Self {
        Assignment {
            bindings: BTreeMap::new(),
            default: default.into(),
        }
    }

    /// Binds `x1, x2, ...` to the given elements in order.
    pub fn from_prefix<I, S>(prefix: I, default: impl Into<String>) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut a = Assignment::constant(default);
        for (i, e) in prefix.into_iter().enumerate() {
            a.bind(Variable::new(i as u32 + 1), e);
        }
        a
    }

    pub fn bind(&mut self, var: Variable, element: impl Into<String>) -> &mut Self {
        self.bindings.insert(var, element.into());
        self
    }

    pub fn with(mut self, var: Variable, element: impl Into<String>) -> Self {
        self.bind(var, element);
        self
    }

    /// The element assigned to `x_k`.
    pub fn lookup(&self, var: Variable) -> &str {
        self.bindings.get(&var).unwrap_or(&self.default)
    }

    pub fn default_element(&self) -> &str {
        &self.default
    }

    pub fn bindings(&self) -> impl Iterator<Item = (Variable, &str)> {
        self.bindings.iter().map(|(v, e)| (*v, e.as_str()))
    }

    /// Resolves every element to its domain position.
    pub(crate) fn resolve(&self, m: &Model) -> Result<Env, SemanticsError> {
        let pos = |e: &str| {
            m.position(e).ok_or_else(|| SemanticsError::UnknownElement {
                element: e.to_string(),
                context: "assignment".to_string(),
            })
        };
        let default = pos(&self.default)?;
        let bindings = self
            .bindings
            .iter()
            .map(|(v, e)| Ok((*v, pos(e)?)))
            .collect::<Result<_, SemanticsError>>()?;
        Ok(Env { bindings, default })
    }
}

/// Index-level view of an [`Assignment`] used during evaluation.
#[derive(Debug, Clone)]
pub(crate) struct Env {
    bindings: BTreeMap<Variable, usize>,
    default: usize,
}

impl Env {
    pub(crate) fn new(default: usize) -> Self {
        Env {
            bindings: BTreeMap::new(),
            default,
        }
    }

    pub(crate) fn get(&self, var: Variable) -> usize {
        self.bindings.get(&var).copied().unwrap_or(self.default)
    }

    /// Rebinds `var`, returning the previous explicit binding.
    pub(crate) fn set(&mut self, var: Variable, element: usize) -> Option<usize> {
        self.bindings.insert(var, element)
    }

    pub(crate) fn restore(&mut self, var: Variable, previous: Option<usize>) {
        match previous {
            Some(e) => self.bindings.insert(var, e),
            None => self.bindings.remove(&var),
        };
    }
}
