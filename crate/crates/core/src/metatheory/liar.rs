//! The liar argument, step by step, with each step checked by truth tables.
//!
//! `S` is the sentence "S is not true". Writing `V` for "S is true" and `Q`
//! for "'S is not true' is true":
//!
//! * (3) `Q <-> ~V`, the T-schema instance for S, assumed;
//! * (4) `V <-> ~V`, from (3) because `S` and `'S is not true'` name the
//!   same sentence, so `Q` may be replaced by `V`;
//! * (5) `V | ~V`, excluded middle;
//! * (6) `V & ~V`, from (4) and (5).

use super::prop::{prop_entails, PropError, PropFormula};

/// "S is true".
pub const LIAR_IS_TRUE: &str = "True(S)";
/// "'S is not true' is true".
pub const QUOTED_IS_TRUE: &str = "True('S is not true')";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationStep {
    pub number: u8,
    pub formula: PropFormula,
    pub premises: Vec<PropFormula>,
    pub justification: &'static str,
    /// The premises entail the formula.
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiarReport {
    pub steps: Vec<DerivationStep>,
    /// Whether (6) still follows once the T-schema instance (3), and with
    /// it (4), is dropped. Expected to be false.
    pub contradiction_without_t_instance: bool,
}

impl LiarReport {
    pub fn all_certified(&self) -> bool {
        self.steps.iter().all(|s| s.certified)
    }
}

pub fn liar_report() -> Result<LiarReport, PropError> {
    let v = PropFormula::atom(LIAR_IS_TRUE);
    let q = PropFormula::atom(QUOTED_IS_TRUE);
    let not_v = PropFormula::not(v.clone());

    let t_instance = PropFormula::iff(q.clone(), not_v.clone());
    let co_reference = PropFormula::iff(q, v.clone());
    let self_denial = t_instance.substitute(QUOTED_IS_TRUE, &v);
    let excluded_middle = PropFormula::or(v.clone(), not_v.clone());
    let contradiction = PropFormula::and(v, not_v);

    // (4) is a rewrite of (3); it is certified both as the rewrite and as an
    // entailment from (3) plus the co-reference biconditional.
    let rewrite_ok = self_denial
        == PropFormula::iff(
            PropFormula::atom(LIAR_IS_TRUE),
            PropFormula::not(PropFormula::atom(LIAR_IS_TRUE)),
        );

    let mut steps = Vec::with_capacity(4);
    let mut step = |number,
                    formula: PropFormula,
                    premises: Vec<PropFormula>,
                    justification,
                    extra: bool|
     -> Result<(), PropError> {
        let certified = extra && prop_entails(&premises, &formula)?;
        steps.push(DerivationStep {
            number,
            formula,
            premises,
            justification,
            certified,
        });
        Ok(())
    };
    step(
        3,
        t_instance.clone(),
        vec![t_instance.clone()],
        "T-schema instance for S (assumption)",
        true,
    )?;
    step(
        4,
        self_denial.clone(),
        vec![t_instance, co_reference.clone()],
        "replace the quotation by S, which names the same sentence",
        rewrite_ok,
    )?;
    step(5, excluded_middle.clone(), vec![], "excluded middle", true)?;
    step(
        6,
        contradiction.clone(),
        vec![self_denial, excluded_middle.clone()],
        "from (4) and (5), by cases",
        true,
    )?;

    let contradiction_without_t_instance =
        prop_entails(&[co_reference, excluded_middle], &contradiction)?;
    Ok(LiarReport {
        steps,
        contradiction_without_t_instance,
    })
}
