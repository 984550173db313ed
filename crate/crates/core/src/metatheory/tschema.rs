//! Instances of the T-schema, finite disjunctive truth definitions, and the
//! check that such a definition agrees with the model-theoretic truth
//! predicate on every sentence it covers.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

use super::MetaError;
use crate::formula::{render, Formula};
use crate::godel::{code_of_formula, decode, SymbolTable};
use crate::semantics::{is_true, Model};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Naming {
    /// The rendered sentence in single quotes.
    Quote,
    /// The decimal Gödel number of the rendered sentence.
    GodelNumeral,
}

/// `True(<name>) <-> <sentence>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TInstance {
    pub naming: Naming,
    pub name: String,
    pub sentence: Formula,
    pub display: String,
}

pub fn quote(text: &str) -> String {
    format!("'{text}'")
}

pub fn t_instance(
    s: &Formula,
    naming: Naming,
    table: &SymbolTable,
) -> Result<TInstance, MetaError> {
    if !s.is_sentence() {
        return Err(MetaError::NotASentence(render(s)));
    }
    let rendered = render(s);
    let name = match naming {
        Naming::Quote => quote(&rendered),
        Naming::GodelNumeral => code_of_formula(table, s)?.into_value().to_string(),
    };
    let display = format!("True({name}) <-> {rendered}");
    Ok(TInstance {
        naming,
        name,
        sentence: s.clone(),
        display,
    })
}

impl TInstance {
    /// The text the name side denotes: unquoted, or decoded from its number.
    pub fn named_text(&self, table: &SymbolTable) -> Result<String, MetaError> {
        match self.naming {
            Naming::Quote => self
                .name
                .strip_prefix('\'')
                .and_then(|s| s.strip_suffix('\''))
                .map(str::to_string)
                .ok_or_else(|| MetaError::Malformed(format!("{} is not a quotation", self.name))),
            Naming::GodelNumeral => {
                let n: BigUint = self.name.parse().map_err(|_| {
                    MetaError::Malformed(format!("{} is not a decimal numeral", self.name))
                })?;
                Ok(decode(table, &n)?.text)
            }
        }
    }
}

/// A truth definition for a language with finitely many sentences: `x` is
/// true iff it is one of the listed names and the corresponding sentence
/// holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTruthDefinition<S> {
    entries: Vec<(String, S)>,
}

pub fn finite_truth_definition<S>(
    pairs: Vec<(String, S)>,
) -> Result<FiniteTruthDefinition<S>, MetaError> {
    if pairs.is_empty() {
        return Err(MetaError::EmptyDefinition);
    }
    let mut seen = BTreeSet::new();
    for (name, _) in &pairs {
        if !seen.insert(name.as_str()) {
            return Err(MetaError::DuplicateName(name.clone()));
        }
    }
    Ok(FiniteTruthDefinition { entries: pairs })
}

/// One entry per sentence, each named by its quotation.
pub fn definition_for_sentences(
    sentences: Vec<Formula>,
) -> Result<FiniteTruthDefinition<Formula>, MetaError> {
    if let Some(open) = sentences.iter().find(|s| !s.is_sentence()) {
        return Err(MetaError::NotASentence(render(open)));
    }
    finite_truth_definition(
        sentences
            .into_iter()
            .map(|s| (quote(&render(&s)), s))
            .collect(),
    )
}

impl<S> FiniteTruthDefinition<S> {
    pub fn entries(&self) -> &[(String, S)] {
        &self.entries
    }

    /// Evaluates the right-hand side of the definition at `x = name`, with
    /// `holds` deciding each listed sentence.
    pub fn defines_as_true<E>(
        &self,
        name: &str,
        mut holds: impl FnMut(&S) -> Result<bool, E>,
    ) -> Result<bool, E> {
        for (n, s) in &self.entries {
            if n == name && holds(s)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

impl<S: fmt::Display> fmt::Display for FiniteTruthDefinition<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("forall x . True(x) <-> ")?;
        for (i, (name, sentence)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "(x = {name} & {sentence})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdequacyRow {
    pub name: String,
    /// What the definition says about the sentence.
    pub definitional: bool,
    /// Truth in the model.
    pub direct: bool,
}

impl AdequacyRow {
    pub fn agrees(&self) -> bool {
        self.definitional == self.direct
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdequacyReport {
    pub rows: Vec<AdequacyRow>,
}

impl AdequacyReport {
    pub fn disagreements(&self) -> Vec<&AdequacyRow> {
        self.rows.iter().filter(|r| !r.agrees()).collect()
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(AdequacyRow::agrees)
    }
}

/// For each listed sentence, compares the definition's verdict on its name
/// with its truth in `m`.
pub fn verify_material_adequacy(
    d: &FiniteTruthDefinition<Formula>,
    m: &Model,
) -> Result<AdequacyReport, MetaError> {
    let mut rows = Vec::with_capacity(d.entries.len());
    for (name, sentence) in &d.entries {
        let definitional = d.defines_as_true(name, |s| is_true(m, s))?;
        let direct = is_true(m, sentence)?;
        rows.push(AdequacyRow {
            name: name.clone(),
            definitional,
            direct,
        });
    }
    Ok(AdequacyReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_formula, Signature};
    use crate::semantics::{build_class_model, presets};

    #[test]
    fn quoted_instance() {
        let m = presets::philosophers();
        let s = parse_formula("Grego(aristoteles)", m.signature()).unwrap();
        let t = SymbolTable::default();
        let inst = t_instance(&s, Naming::Quote, &t).unwrap();
        assert_eq!(
            inst.display,
            "True('Grego(aristoteles)') <-> Grego(aristoteles)"
        );
        assert_eq!(inst.named_text(&t).unwrap(), "Grego(aristoteles)");
    }

    #[test]
    fn instance_for_inclusion_sentence() {
        let s = parse_formula(
            "forall x1 . forall x2 . I(x1,x2)",
            &Signature::class_calculus(),
        )
        .unwrap();
        let t = SymbolTable::default();
        let inst = t_instance(&s, Naming::Quote, &t).unwrap();
        assert_eq!(
            inst.display,
            "True('forall x1 . forall x2 . I(x1,x2)') <-> forall x1 . forall x2 . I(x1,x2)"
        );
        let g = t_instance(&s, Naming::GodelNumeral, &t).unwrap();
        assert!(g.name.bytes().all(|b| b.is_ascii_digit()));
        assert_eq!(g.named_text(&t).unwrap(), render(&s));
    }

    #[test]
    fn open_formula_rejected() {
        let f = parse_formula("I(x1,x2)", &Signature::class_calculus()).unwrap();
        assert!(matches!(
            t_instance(&f, Naming::Quote, &SymbolTable::default()),
            Err(MetaError::NotASentence(_))
        ));
    }

    #[test]
    fn two_sentence_language() {
        let d = finite_truth_definition(vec![
            (quote("a neve é branca"), "a neve é branca"),
            (quote("a grama é verde"), "a grama é verde"),
        ])
        .unwrap();
        assert_eq!(
            d.to_string(),
            "forall x . True(x) <-> (x = 'a neve é branca' & a neve é branca) | (x = 'a grama é verde' & a grama é verde)"
        );
    }

    #[test]
    fn definition_shapes() {
        let one = finite_truth_definition(vec![("'p'".to_string(), "p")]).unwrap();
        assert_eq!(one.to_string(), "forall x . True(x) <-> (x = 'p' & p)");
        assert!(!one.to_string().contains(" | "));
        let three = finite_truth_definition(vec![
            ("'c'".to_string(), "c"),
            ("'a'".to_string(), "a"),
            ("'b'".to_string(), "b"),
        ])
        .unwrap();
        assert_eq!(
            three.to_string(),
            "forall x . True(x) <-> (x = 'c' & c) | (x = 'a' & a) | (x = 'b' & b)"
        );
        assert_eq!(
            finite_truth_definition(vec![("'a'".to_string(), "a"), ("'a'".to_string(), "b")]),
            Err(MetaError::DuplicateName("'a'".into()))
        );
        assert_eq!(
            finite_truth_definition(Vec::<(String, &str)>::new()),
            Err(MetaError::EmptyDefinition)
        );
    }

    #[test]
    fn adequacy_on_philosophers() {
        let m = presets::philosophers();
        let p = |s| parse_formula(s, m.signature()).unwrap();
        let d = definition_for_sentences(vec![
            p("forall x1 . Filosofo(x1)"),
            p("forall x1 . Grego(x1)"),
        ])
        .unwrap();
        let report = verify_material_adequacy(&d, &m).unwrap();
        assert!(report.passed());
        assert!(report.disagreements().is_empty());
        let verdicts: Vec<(bool, bool)> = report
            .rows
            .iter()
            .map(|r| (r.definitional, r.direct))
            .collect();
        assert_eq!(verdicts, vec![(true, true), (false, false)]);
    }

    #[test]
    fn adequacy_on_class_model() {
        let m = build_class_model(1).unwrap();
        let s = parse_formula("forall x1 . forall x2 . I(x1,x2)", m.signature()).unwrap();
        let report =
            verify_material_adequacy(&definition_for_sentences(vec![s]).unwrap(), &m).unwrap();
        assert_eq!(
            report.rows,
            vec![AdequacyRow {
                name: "'forall x1 . forall x2 . I(x1,x2)'".into(),
                definitional: false,
                direct: false
            }]
        );
    }

    #[test]
    fn adequacy_signature_mismatch() {
        let m = build_class_model(1).unwrap();
        let s = parse_formula("Grego(aristoteles)", presets::philosophers().signature()).unwrap();
        let d = definition_for_sentences(vec![s]).unwrap();
        assert!(matches!(
            verify_material_adequacy(&d, &m),
            Err(MetaError::Semantics(_))
        ));
    }
}
