//! The satisfaction relation between assignments and formulas, and truth as
//! satisfaction by every assignment.

use std::collections::BTreeMap;

use super::assignment::Env;
use super::{Assignment, Model, SemanticsError};
use crate::formula::{check_against, Formula, Term, Variable};

/// Default bound on the number of candidate bindings
/// [`satisfying_assignments`] will enumerate.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// Outcome of evaluating a formula, with the element that decided the
/// outermost quantifier when there is one: a counterexample for a false
/// `forall`, a witness for a true `exists` (`~forall x . ~A`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthVerdict {
    pub value: bool,
    pub witness: Option<(Variable, String)>,
}

/// Whether `a` satisfies `f` in `m`.
///
/// * an atom holds when the tuple of its term values is in the predicate's
///   extension,
/// * `~A` holds when `A` does not,
/// * `A | B` holds when either side does,
/// * `forall x_k . A` holds when `A` is satisfied by every assignment that
///   differs from `a` at most at index `k`.
pub fn satisfies(m: &Model, a: &Assignment, f: &Formula) -> Result<bool, SemanticsError> {
    check_against(f, m.signature())?;
    let mut env = a.resolve(m)?;
    Ok(eval(m, &mut env, f))
}

pub fn evaluate(m: &Model, a: &Assignment, f: &Formula) -> Result<TruthVerdict, SemanticsError> {
    check_against(f, m.signature())?;
    let mut env = a.resolve(m)?;
    let value = eval(m, &mut env, f);
    let decider = match f {
        Formula::Forall(v, body) if !value => Some((*v, body.as_ref(), false)),
        Formula::Not(inner) if value => match inner.as_ref() {
            Formula::Forall(v, body) => Some((*v, body.as_ref(), false)),
            _ => None,
        },
        _ => None,
    };
    let witness = decider.and_then(|(v, body, wanted)| {
        (0..m.domain().len()).find_map(|d| {
            let prev = env.set(v, d);
            let hit = eval(m, &mut env, body) == wanted;
            env.restore(v, prev);
            hit.then(|| (v, m.domain()[d].clone()))
        })
    });
    Ok(TruthVerdict { value, witness })
}

/// Truth of a sentence: satisfaction by every assignment. Because a sentence
/// has no free variables every assignment gives the same answer, so one
/// assignment (everything mapped to the first element) is evaluated.
pub fn is_true(m: &Model, s: &Formula) -> Result<bool, SemanticsError> {
    if !s.is_sentence() {
        return Err(SemanticsError::NotASentence(s.to_string()));
    }
    let a = Assignment::constant(m.domain()[0].clone());
    satisfies(m, &a, s)
}

pub(crate) fn eval(m: &Model, env: &mut Env, f: &Formula) -> bool {
    match f {
        Formula::Atom(pred, terms) => {
            let tuple: Vec<usize> = terms
                .iter()
                .map(|t| match t {
                    Term::Var(v) => env.get(*v),
                    Term::Const(c) => m.constant_position(c).expect("checked against signature"),
                })
                .collect();
            m.holds(pred, &tuple)
        }
        Formula::Not(a) => !eval(m, env, a),
        Formula::Or(a, b) => eval(m, env, a) || eval(m, env, b),
        Formula::Forall(v, body) => {
            let prev = env.get(*v);
            let saved = env.set(*v, prev);
            let all = (0..m.domain().len()).all(|d| {
                env.set(*v, d);
                eval(m, env, body)
            });
            env.restore(*v, saved);
            all
        }
    }
}

/// Every binding of the free variables of `f` (in index order, elements in
/// domain order) under which `f` is satisfied. Values at other indices are
/// irrelevant.
pub fn satisfying_assignments(
    m: &Model,
    f: &Formula,
    cap: u64,
) -> Result<Vec<BTreeMap<Variable, String>>, SemanticsError> {
    check_against(f, m.signature())?;
    let free: Vec<Variable> = f.free_variables().into_iter().collect();
    let n = m.domain().len();
    let total = u32::try_from(free.len())
        .ok()
        .and_then(|k| (n as u64).checked_pow(k))
        .filter(|&t| t <= cap)
        .ok_or(SemanticsError::EnumerationCap {
            domain: n,
            variables: free.len(),
            cap,
        })?;

    let mut env = Env::new(0);
    let mut digits = vec![0usize; free.len()];
    let mut out = Vec::new();
    for _ in 0..total {
        for (v, &d) in free.iter().zip(&digits) {
            env.set(*v, d);
        }
        if eval(m, &mut env, f) {
            out.push(
                free.iter()
                    .zip(&digits)
                    .map(|(v, &d)| (*v, m.domain()[d].clone()))
                    .collect(),
            );
        }
        // odometer, last variable fastest
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < n {
                break;
            }
            *d = 0;
        }
    }
    Ok(out)
}
