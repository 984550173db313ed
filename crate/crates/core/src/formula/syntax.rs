use std::collections::BTreeSet;
use std::fmt;

/// Largest variable index accepted by the parser.
pub const MAX_VARIABLE_INDEX: u32 = 1_000_000;

/// The variable `x_k`, k >= 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable(u32);

impl Variable {
    /// Panics on index 0; use [`Variable::try_new`] for untrusted input.
    pub fn new(index: u32) -> Self {
        Self::try_new(index).expect("variable indices start at 1")
    }

    pub fn try_new(index: u32) -> Option<Self> {
        (index >= 1).then_some(Variable(index))
    }

    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(Variable),
    Const(String),
}

impl Term {
    pub fn var(index: u32) -> Self {
        Term::Var(Variable::new(index))
    }

    pub fn constant(name: impl Into<String>) -> Self {
        Term::Const(name.into())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => v.fmt(f),
            Term::Const(c) => f.write_str(c),
        }
    }
}

/// Object-language formula over the primitive connectives only.
///
/// The derived connectives are available as constructors ([`Formula::and`],
/// [`Formula::implies`], [`Formula::iff`], [`Formula::exists`]) which expand
/// into `Not`/`Or`/`Forall` immediately, so satisfaction only ever has to deal
/// with the four primitive cases.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String, Vec<Term>),
    Not(Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Forall(Variable, Box<Formula>),
}

impl Formula {
    pub fn atom(predicate: impl Into<String>, terms: Vec<Term>) -> Self {
        Formula::Atom(predicate.into(), terms)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(inner: Formula) -> Self {
        Formula::Not(Box::new(inner))
    }

    pub fn or(left: Formula, right: Formula) -> Self {
        Formula::Or(Box::new(left), Box::new(right))
    }

    pub fn forall(var: Variable, body: Formula) -> Self {
        Formula::Forall(var, Box::new(body))
    }

    /// `A & B` as `~(~A | ~B)`.
    pub fn and(left: Formula, right: Formula) -> Self {
        Formula::not(Formula::or(Formula::not(left), Formula::not(right)))
    }

    /// `A -> B` as `(~A | B)`.
    pub fn implies(left: Formula, right: Formula) -> Self {
        Formula::or(Formula::not(left), right)
    }

    /// `A <-> B` as `(A -> B) & (B -> A)`.
    pub fn iff(left: Formula, right: Formula) -> Self {
        let forward = Formula::implies(left.clone(), right.clone());
        let backward = Formula::implies(right, left);
        Formula::and(forward, backward)
    }

    /// `exists x . A` as `~forall x . ~A`.
    pub fn exists(var: Variable, body: Formula) -> Self {
        Formula::not(Formula::forall(var, Formula::not(body)))
    }

    pub fn free_variables(&self) -> BTreeSet<Variable> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<Variable>, out: &mut BTreeSet<Variable>) {
        match self {
            Formula::Atom(_, terms) => {
                for t in terms {
                    if let Term::Var(v) = t {
                        if !bound.contains(v) {
                            out.insert(*v);
                        }
                    }
                }
            }
            Formula::Not(a) => a.collect_free(bound, out),
            Formula::Or(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Forall(v, body) => {
                bound.push(*v);
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_sentence(&self) -> bool {
        self.free_variables().is_empty()
    }

    /// Every variable occurring anywhere, free or bound (binders included).
    pub fn variables(&self) -> BTreeSet<Variable> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| match f {
            Formula::Atom(_, terms) => out.extend(terms.iter().filter_map(|t| match t {
                Term::Var(v) => Some(*v),
                Term::Const(_) => None,
            })),
            Formula::Forall(v, _) => {
                out.insert(*v);
            }
            _ => {}
        });
        out
    }

    /// Subformulas in post-order, each with its path from the root. A path is
    /// the sequence of child positions taken: `Not` and `Forall` have the
    /// single child 0, `Or` has children 0 (left) and 1 (right).
    pub fn subformulas(&self) -> Vec<(Vec<usize>, &Formula)> {
        fn walk<'a>(
            f: &'a Formula,
            path: &mut Vec<usize>,
            out: &mut Vec<(Vec<usize>, &'a Formula)>,
        ) {
            match f {
                Formula::Atom(..) => {}
                Formula::Not(a) | Formula::Forall(_, a) => {
                    path.push(0);
                    walk(a, path, out);
                    path.pop();
                }
                Formula::Or(a, b) => {
                    path.push(0);
                    walk(a, path, out);
                    path.pop();
                    path.push(1);
                    walk(b, path, out);
                    path.pop();
                }
            }
            out.push((path.clone(), f));
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    /// Follows a path produced by [`Formula::subformulas`].
    pub fn at_path(&self, path: &[usize]) -> Option<&Formula> {
        let mut cur = self;
        for &step in path {
            cur = match (cur, step) {
                (Formula::Not(a), 0) | (Formula::Forall(_, a), 0) | (Formula::Or(a, _), 0) => a,
                (Formula::Or(_, b), 1) => b,
                _ => return None,
            };
        }
        Some(cur)
    }

    pub fn node_count(&self) -> usize {
        let mut n = 0;
        self.visit(&mut |_| n += 1);
        n
    }

    pub fn quantifier_depth(&self) -> usize {
        match self {
            Formula::Atom(..) => 0,
            Formula::Not(a) => a.quantifier_depth(),
            Formula::Or(a, b) => a.quantifier_depth().max(b.quantifier_depth()),
            Formula::Forall(_, a) => 1 + a.quantifier_depth(),
        }
    }

    fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Formula)) {
        f(self);
        match self {
            Formula::Atom(..) => {}
            Formula::Not(a) | Formula::Forall(_, a) => a.visit(f),
            Formula::Or(a, b) => {
                a.visit(f);
                b.visit(f);
            }
        }
    }
}
