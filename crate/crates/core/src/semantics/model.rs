use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::SemanticsError;
use crate::formula::Signature;

/// A finite structure: a non-empty ordered domain of opaque element names,
/// an extension for every predicate and a denotation for every constant.
///
/// Elements are stored by position; `domain()[i]` is element `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    signature: Signature,
    domain: Vec<String>,
    positions: HashMap<String, usize>,
    relations: BTreeMap<String, HashSet<Vec<usize>>>,
    constants: BTreeMap<String, usize>,
}

impl Model {
    pub fn builder<I, S>(domain: I) -> ModelBuilder
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        ModelBuilder {
            domain: domain.into_iter().map(Into::into).collect(),
            predicates: BTreeMap::new(),
            constants: BTreeMap::new(),
        }
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn position(&self, element: &str) -> Option<usize> {
        self.positions.get(element).copied()
    }

    pub(crate) fn holds(&self, predicate: &str, tuple: &[usize]) -> bool {
        self.relations
            .get(predicate)
            .is_some_and(|r| r.contains(tuple))
    }

    pub(crate) fn constant_position(&self, name: &str) -> Option<usize> {
        self.constants.get(name).copied()
    }

    /// The extension of a predicate as element-name tuples, sorted by domain
    /// order.
    pub fn extension(&self, predicate: &str) -> Option<Vec<Vec<&str>>> {
        let rel = self.relations.get(predicate)?;
        let mut tuples: Vec<&Vec<usize>> = rel.iter().collect();
        tuples.sort();
        Some(
            tuples
                .into_iter()
                .map(|t| t.iter().map(|&i| self.domain[i].as_str()).collect())
                .collect(),
        )
    }

    pub fn denotation(&self, constant: &str) -> Option<&str> {
        self.constants
            .get(constant)
            .map(|&i| self.domain[i].as_str())
    }

    pub fn from_json(text: &str) -> Result<Self, SemanticsError> {
        let file: ModelFile =
            serde_json::from_str(text).map_err(|e| SemanticsError::Malformed(e.to_string()))?;
        file.into_model()
    }

    pub fn to_json(&self) -> String {
        let mut predicates = BTreeMap::new();
        let mut arities = BTreeMap::new();
        for (name, arity) in self.signature.predicates() {
            let ext = self.extension(name).unwrap_or_default();
            if ext.is_empty() {
                arities.insert(name.to_string(), arity);
            }
            predicates.insert(
                name.to_string(),
                ext.into_iter()
                    .map(|t| t.into_iter().map(str::to_string).collect())
                    .collect(),
            );
        }
        let file = ModelFile {
            domain: self.domain.clone(),
            predicates,
            constants: self
                .constants
                .iter()
                .map(|(c, &i)| (c.clone(), self.domain[i].clone()))
                .collect(),
            arities,
        };
        serde_json::to_string_pretty(&file).expect("model serializes")
    }
}

/// On-disk form. `arities` is only needed for predicates whose extension is
/// empty, since the arity cannot be read off the tuples then.
#[derive(Serialize, Deserialize)]
struct ModelFile {
    domain: Vec<String>,
    #[serde(default)]
    predicates: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default)]
    constants: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    arities: BTreeMap<String, usize>,
}

impl ModelFile {
    fn into_model(self) -> Result<Model, SemanticsError> {
        let mut builder = Model::builder(self.domain);
        for (name, tuples) in self.predicates {
            let arity = match (tuples.first(), self.arities.get(&name)) {
                (_, Some(&a)) => a,
                (Some(t), None) => t.len(),
                (None, None) => {
                    return Err(SemanticsError::Malformed(format!(
                        "predicate `{name}` has an empty extension and no entry in `arities`"
                    )))
                }
            };
            builder = builder.predicate(name, arity, tuples);
        }
        for (name, element) in self.constants {
            builder = builder.constant(name, element);
        }
        builder.build()
    }
}

pub struct ModelBuilder {
    domain: Vec<String>,
    predicates: BTreeMap<String, (usize, Vec<Vec<String>>)>,
    constants: BTreeMap<String, String>,
}

impl ModelBuilder {
    pub fn predicate<I, T, S>(mut self, name: impl Into<String>, arity: usize, tuples: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let tuples = tuples
            .into_iter()
            .map(|t| t.into_iter().map(Into::into).collect())
            .collect();
        self.predicates.insert(name.into(), (arity, tuples));
        self
    }

    /// Shorthand for a unary predicate given by its members.
    pub fn property<I, S>(self, name: impl Into<String>, members: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let tuples: Vec<Vec<String>> = members.into_iter().map(|m| vec![m.into()]).collect();
        self.predicate(name, 1, tuples)
    }

    pub fn constant(mut self, name: impl Into<String>, element: impl Into<String>) -> Self {
        self.constants.insert(name.into(), element.into());
        self
    }

    pub fn build(self) -> Result<Model, SemanticsError> {
        if self.domain.is_empty() {
            return Err(SemanticsError::EmptyDomain);
        }
        let mut positions = HashMap::new();
        for (i, e) in self.domain.iter().enumerate() {
            if positions.insert(e.clone(), i).is_some() {
                return Err(SemanticsError::DuplicateElement(e.clone()));
            }
        }
        let lookup = |e: &str, context: &str| {
            positions
                .get(e)
                .copied()
                .ok_or_else(|| SemanticsError::UnknownElement {
                    element: e.to_string(),
                    context: context.to_string(),
                })
        };

        let mut signature = Signature::default();
        let mut relations = BTreeMap::new();
        for (name, (arity, tuples)) in self.predicates {
            signature.add_predicate(name.clone(), arity)?;
            let mut rel = HashSet::new();
            for t in tuples {
                if t.len() != arity {
                    return Err(SemanticsError::TupleArity {
                        predicate: name,
                        expected: arity,
                        found: t.len(),
                    });
                }
                let t: Vec<usize> = t
                    .iter()
                    .map(|e| lookup(e, &format!("extension of `{name}`")))
                    .collect::<Result<_, _>>()?;
                rel.insert(t);
            }
            relations.insert(name, rel);
        }
        let mut constants = BTreeMap::new();
        for (name, element) in self.constants {
            signature.add_constant(name.clone())?;
            let i = lookup(&element, &format!("denotation of `{name}`"))?;
            constants.insert(name, i);
        }
        Ok(Model {
            signature,
            domain: self.domain,
            positions,
            relations,
            constants,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_validates() {
        assert_eq!(
            Model::builder(Vec::<String>::new()).build(),
            Err(SemanticsError::EmptyDomain)
        );
        assert!(matches!(
            Model::builder(["a", "a"]).build(),
            Err(SemanticsError::DuplicateElement(_))
        ));
        assert!(matches!(
            Model::builder(["a"]).property("P", ["b"]).build(),
            Err(SemanticsError::UnknownElement { .. })
        ));
        assert!(matches!(
            Model::builder(["a"]).predicate("R", 2, [vec!["a"]]).build(),
            Err(SemanticsError::TupleArity { .. })
        ));
        assert!(matches!(
            Model::builder(["a"]).constant("c", "z").build(),
            Err(SemanticsError::UnknownElement { .. })
        ));
        assert!(Model::builder(["a"])
            .property("P", ["a"])
            .constant("P", "a")
            .build()
            .is_err());
    }

    #[test]
    fn json_round_trip() {
        let m = Model::builder(["a", "b"])
            .predicate("R", 2, [vec!["a", "b"], vec!["b", "b"]])
            .predicate("Empty", 3, Vec::<Vec<String>>::new())
            .constant("c", "b")
            .build()
            .unwrap();
        let back = Model::from_json(&m.to_json()).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.signature().arity("Empty"), Some(3));
    }

    #[test]
    fn json_needs_arity_for_empty_extension() {
        let err = Model::from_json(r#"{"domain": ["a"], "predicates": {"P": []}}"#).unwrap_err();
        assert!(matches!(err, SemanticsError::Malformed(_)));
        let m =
            Model::from_json(r#"{"domain": ["a"], "predicates": {"P": []}, "arities": {"P": 1}}"#)
                .unwrap();
        assert_eq!(m.extension("P"), Some(vec![]));
    }
}
