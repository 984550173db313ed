//! Shared generators and a reference evaluator for the integration tests.
//!
//! The reference evaluator works on its own bit-table model representation
//! and copies the assignment at every quantifier, so it shares no code with
//! the library's evaluator.
#![allow(dead_code)]

use std::collections::HashMap;

use proptest::prelude::*;
use rand::Rng;
use tarski::formula::{Formula, Term, Variable};
use tarski::semantics::{Assignment, Model};

/// A model over `e0..e{size-1}` for the signature `{P: 1, R: 2, c}`.
#[derive(Debug, Clone)]
pub struct RawModel {
    pub size: usize,
    pub p: Vec<bool>,
    /// Row-major `size * size` table.
    pub r: Vec<bool>,
    pub c: usize,
}

pub fn element(i: usize) -> String {
    format!("e{i}")
}

impl RawModel {
    pub fn random(rng: &mut impl Rng, max_size: usize) -> Self {
        let size = rng.gen_range(1..=max_size);
        RawModel {
            size,
            p: (0..size).map(|_| rng.gen()).collect(),
            r: (0..size * size).map(|_| rng.gen()).collect(),
            c: rng.gen_range(0..size),
        }
    }

    pub fn to_model(&self) -> Model {
        let n = self.size;
        Model::builder((0..n).map(element))
            .property("P", (0..n).filter(|&i| self.p[i]).map(element))
            .predicate(
                "R",
                2,
                (0..n * n)
                    .filter(|&k| self.r[k])
                    .map(|k| vec![element(k / n), element(k % n)]),
            )
            .constant("c", element(self.c))
            .build()
            .expect("generated model is well formed")
    }

    fn term(&self, t: &Term, env: &HashMap<u32, usize>, default: usize) -> usize {
        match t {
            Term::Var(v) => *env.get(&v.index()).unwrap_or(&default),
            Term::Const(_) => self.c,
        }
    }

    /// Reference satisfaction. `env` maps variable indices to element
    /// positions; unmapped variables take `default`.
    pub fn oracle(&self, f: &Formula, env: &HashMap<u32, usize>, default: usize) -> bool {
        match f {
            Formula::Atom(p, ts) => match (p.as_str(), ts.as_slice()) {
                ("P", [a]) => self.p[self.term(a, env, default)],
                ("R", [a, b]) => {
                    self.r[self.term(a, env, default) * self.size + self.term(b, env, default)]
                }
                _ => panic!("atom outside the test signature: {p}"),
            },
            Formula::Not(a) => !self.oracle(a, env, default),
            Formula::Or(a, b) => self.oracle(a, env, default) || self.oracle(b, env, default),
            Formula::Forall(v, body) => (0..self.size).all(|d| {
                let mut inner = env.clone();
                inner.insert(v.index(), d);
                self.oracle(body, &inner, default)
            }),
        }
    }
}

/// The library assignment matching a reference environment.
pub fn assignment(env: &HashMap<u32, usize>, default: usize) -> Assignment {
    let mut a = Assignment::constant(element(default));
    for (&k, &d) in env {
        a.bind(Variable::new(k), element(d));
    }
    a
}

pub fn random_env(rng: &mut impl Rng, size: usize, max_var: u32) -> (HashMap<u32, usize>, usize) {
    let mut env = HashMap::new();
    for k in 1..=max_var {
        if rng.gen_bool(0.7) {
            env.insert(k, rng.gen_range(0..size));
        }
    }
    (env, rng.gen_range(0..size))
}

fn random_term(rng: &mut impl Rng, max_var: u32) -> Term {
    if rng.gen_bool(0.15) {
        Term::constant("c")
    } else {
        Term::var(rng.gen_range(1..=max_var))
    }
}

pub fn random_atom(rng: &mut impl Rng, max_var: u32) -> Formula {
    if rng.gen_bool(0.5) {
        Formula::atom("P", vec![random_term(rng, max_var)])
    } else {
        Formula::atom(
            "R",
            vec![random_term(rng, max_var), random_term(rng, max_var)],
        )
    }
}

/// A random formula of connective depth at most `depth`, using the
/// connectives and quantifiers of the surface language.
pub fn random_formula(rng: &mut impl Rng, depth: u32, max_var: u32) -> Formula {
    if depth == 0 || rng.gen_bool(0.2) {
        return random_atom(rng, max_var);
    }
    let d = depth - 1;
    let var = |rng: &mut _| Variable::new(Rng::gen_range(rng, 1..=max_var));
    match rng.gen_range(0..7) {
        0 => Formula::not(random_formula(rng, d, max_var)),
        1 => Formula::or(
            random_formula(rng, d, max_var),
            random_formula(rng, d, max_var),
        ),
        2 => Formula::and(
            random_formula(rng, d, max_var),
            random_formula(rng, d, max_var),
        ),
        3 => Formula::implies(
            random_formula(rng, d, max_var),
            random_formula(rng, d, max_var),
        ),
        4 => {
            let v = var(rng);
            Formula::forall(v, random_formula(rng, d, max_var))
        }
        5 => {
            let v = var(rng);
            Formula::exists(v, random_formula(rng, d, max_var))
        }
        _ => Formula::iff(random_atom(rng, max_var), random_formula(rng, d, max_var)),
    }
}

/// Binds every free variable with a randomly chosen quantifier.
pub fn close(rng: &mut impl Rng, f: Formula) -> Formula {
    f.free_variables().into_iter().rev().fold(f, |acc, v| {
        if rng.gen_bool(0.5) {
            Formula::forall(v, acc)
        } else {
            Formula::exists(v, acc)
        }
    })
}

/// A random sentence with quantifier depth at most `max_qdepth`.
pub fn random_sentence(rng: &mut impl Rng, max_qdepth: usize, max_var: u32) -> Formula {
    loop {
        let open = random_formula(rng, 4, max_var);
        let f = close(rng, open);
        if f.quantifier_depth() <= max_qdepth {
            return f;
        }
    }
}

// proptest strategies

pub fn arb_variable() -> impl Strategy<Value = Variable> {
    prop_oneof![
        4 => (1u32..=4).prop_map(Variable::new),
        1 => (1u32..=tarski::formula::MAX_VARIABLE_INDEX).prop_map(Variable::new),
    ]
}

pub fn arb_term() -> impl Strategy<Value = Term> {
    prop_oneof![
        4 => arb_variable().prop_map(Term::Var),
        1 => Just(Term::constant("c")),
    ]
}

pub fn arb_atom() -> impl Strategy<Value = Formula> {
    prop_oneof![
        arb_term().prop_map(|t| Formula::atom("P", vec![t])),
        (arb_term(), arb_term()).prop_map(|(a, b)| Formula::atom("R", vec![a, b])),
    ]
}

/// Core-syntax formulas with up to `depth` levels of nesting.
pub fn arb_formula(depth: u32) -> impl Strategy<Value = Formula> {
    arb_atom().prop_recursive(depth, 64, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (arb_variable(), inner).prop_map(|(v, b)| Formula::forall(v, b)),
        ]
    })
}

/// Formulas over `x1..x3` only, suited to exhaustive checks.
pub fn arb_small_formula(depth: u32) -> impl Strategy<Value = Formula> {
    let term = prop_oneof![4 => (1u32..=3).prop_map(Term::var), 1 => Just(Term::constant("c"))];
    let atom = prop_oneof![
        term.clone().prop_map(|t| Formula::atom("P", vec![t])),
        (term.clone(), term).prop_map(|(a, b)| Formula::atom("R", vec![a, b])),
    ];
    atom.prop_recursive(depth, 32, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            ((1u32..=3).prop_map(Variable::new), inner).prop_map(|(v, b)| Formula::forall(v, b)),
        ]
    })
}

pub fn arb_raw_model() -> impl Strategy<Value = RawModel> {
    (1usize..=3).prop_flat_map(|n| {
        (
            prop::collection::vec(any::<bool>(), n),
            prop::collection::vec(any::<bool>(), n * n),
            0..n,
        )
            .prop_map(move |(p, r, c)| RawModel { size: n, p, r, c })
    })
}

/// A model together with an environment over `x1..x3` for it.
pub fn arb_model_env() -> impl Strategy<Value = (RawModel, HashMap<u32, usize>, usize)> {
    arb_raw_model().prop_flat_map(|m| {
        let n = m.size;
        (
            Just(m),
            prop::collection::hash_map(1u32..=3, 0..n, 0..=3),
            0..n,
        )
    })
}
