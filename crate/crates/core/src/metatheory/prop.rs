//! Propositional formulas and a truth-table engine for satisfiability and
//! entailment.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// Most atoms a single truth-table query may range over.
pub const MAX_ATOMS: usize = 20;

pub type Row = BTreeMap<String, bool>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PropFormula {
    Atom(String),
    Not(Box<PropFormula>),
    Or(Box<PropFormula>, Box<PropFormula>),
    And(Box<PropFormula>, Box<PropFormula>),
    Implies(Box<PropFormula>, Box<PropFormula>),
    Iff(Box<PropFormula>, Box<PropFormula>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropError {
    #[error("{atoms} atoms exceed the truth-table budget of {max}")]
    AtomBudget { atoms: usize, max: usize },
    #[error("parse error at offset {position}: {message}")]
    Parse { position: usize, message: String },
}

impl PropFormula {
    pub fn atom(name: impl Into<String>) -> Self {
        PropFormula::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: PropFormula) -> Self {
        PropFormula::Not(Box::new(a))
    }

    pub fn or(a: PropFormula, b: PropFormula) -> Self {
        PropFormula::Or(Box::new(a), Box::new(b))
    }

    pub fn and(a: PropFormula, b: PropFormula) -> Self {
        PropFormula::And(Box::new(a), Box::new(b))
    }

    pub fn implies(a: PropFormula, b: PropFormula) -> Self {
        PropFormula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: PropFormula, b: PropFormula) -> Self {
        PropFormula::Iff(Box::new(a), Box::new(b))
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            PropFormula::Atom(a) => {
                out.insert(a.clone());
            }
            PropFormula::Not(a) => a.collect_atoms(out),
            PropFormula::Or(a, b)
            | PropFormula::And(a, b)
            | PropFormula::Implies(a, b)
            | PropFormula::Iff(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Atoms in order of first occurrence, left to right.
    pub fn atoms_in_order(&self) -> Vec<String> {
        fn walk(f: &PropFormula, out: &mut Vec<String>) {
            match f {
                PropFormula::Atom(a) => {
                    if !out.contains(a) {
                        out.push(a.clone());
                    }
                }
                PropFormula::Not(a) => walk(a, out),
                PropFormula::Or(a, b)
                | PropFormula::And(a, b)
                | PropFormula::Implies(a, b)
                | PropFormula::Iff(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    /// Value under a row; atoms missing from the row count as false.
    pub fn eval(&self, row: &Row) -> bool {
        match self {
            PropFormula::Atom(a) => row.get(a).copied().unwrap_or(false),
            PropFormula::Not(a) => !a.eval(row),
            PropFormula::Or(a, b) => a.eval(row) || b.eval(row),
            PropFormula::And(a, b) => a.eval(row) && b.eval(row),
            PropFormula::Implies(a, b) => !a.eval(row) || b.eval(row),
            PropFormula::Iff(a, b) => a.eval(row) == b.eval(row),
        }
    }

    /// Replaces every occurrence of atom `name` by `by`.
    pub fn substitute(&self, name: &str, by: &PropFormula) -> PropFormula {
        let sub = |f: &PropFormula| Box::new(f.substitute(name, by));
        match self {
            PropFormula::Atom(a) if a == name => by.clone(),
            PropFormula::Atom(_) => self.clone(),
            PropFormula::Not(a) => PropFormula::Not(sub(a)),
            PropFormula::Or(a, b) => PropFormula::Or(sub(a), sub(b)),
            PropFormula::And(a, b) => PropFormula::And(sub(a), sub(b)),
            PropFormula::Implies(a, b) => PropFormula::Implies(sub(a), sub(b)),
            PropFormula::Iff(a, b) => PropFormula::Iff(sub(a), sub(b)),
        }
    }
}

impl fmt::Display for PropFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropFormula::Atom(a) => f.write_str(a),
            PropFormula::Not(a) => write!(f, "~{a}"),
            PropFormula::Or(a, b) => write!(f, "({a} | {b})"),
            PropFormula::And(a, b) => write!(f, "({a} & {b})"),
            PropFormula::Implies(a, b) => write!(f, "({a} -> {b})"),
            PropFormula::Iff(a, b) => write!(f, "({a} <-> {b})"),
        }
    }
}

/// Calls `visit` on every row over `atoms` (false before true, first atom
/// most significant) until it returns `Some`.
fn search_rows<T>(
    atoms: &[String],
    mut visit: impl FnMut(&Row) -> Option<T>,
) -> Result<Option<T>, PropError> {
    if atoms.len() > MAX_ATOMS {
        return Err(PropError::AtomBudget {
            atoms: atoms.len(),
            max: MAX_ATOMS,
        });
    }
    let n = atoms.len();
    let mut row: Row = atoms.iter().map(|a| (a.clone(), false)).collect();
    for mask in 0u32..1 << n {
        for (i, a) in atoms.iter().enumerate() {
            *row.get_mut(a).unwrap() = mask >> (n - 1 - i) & 1 == 1;
        }
        if let Some(hit) = visit(&row) {
            return Ok(Some(hit));
        }
    }
    Ok(None)
}

/// A satisfying row, or `None` when the formula is unsatisfiable.
pub fn prop_satisfiable(f: &PropFormula) -> Result<Option<Row>, PropError> {
    let atoms: Vec<String> = f.atoms().into_iter().collect();
    search_rows(&atoms, |row| f.eval(row).then(|| row.clone()))
}

pub fn is_tautology(f: &PropFormula) -> Result<bool, PropError> {
    let atoms: Vec<String> = f.atoms().into_iter().collect();
    Ok(search_rows(&atoms, |row| (!f.eval(row)).then_some(()))?.is_none())
}

/// Whether every row satisfying all premises satisfies the conclusion.
pub fn prop_entails(premises: &[PropFormula], conclusion: &PropFormula) -> Result<bool, PropError> {
    Ok(countermodel(premises, conclusion)?.is_none())
}

/// A row making every premise true and the conclusion false, if any.
pub fn countermodel(
    premises: &[PropFormula],
    conclusion: &PropFormula,
) -> Result<Option<Row>, PropError> {
    let mut atoms = conclusion.atoms();
    for p in premises {
        atoms.extend(p.atoms());
    }
    let atoms: Vec<String> = atoms.into_iter().collect();
    search_rows(&atoms, |row| {
        (premises.iter().all(|p| p.eval(row)) && !conclusion.eval(row)).then(|| row.clone())
    })
}

/// Parses `~`, `&`, `|`, `->`, `<->` with the same precedence as object
/// formulas. An atom is an identifier optionally followed by one
/// parenthesized argument with no nested parentheses, e.g. `V`, `True(S)`,
/// `True('snow is white')`.
pub fn parse_prop(text: &str) -> Result<PropFormula, PropError> {
    let mut p = PropParser { text, pos: 0 };
    let f = p.iff()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error("expected a connective or end of input"));
    }
    Ok(f)
}

struct PropParser<'a> {
    text: &'a str,
    pos: usize,
}

impl PropParser<'_> {
    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn error(&self, message: &str) -> PropError {
        PropError::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn iff(&mut self) -> Result<PropFormula, PropError> {
        let mut lhs = self.implication()?;
        while self.eat("<->") {
            lhs = PropFormula::iff(lhs, self.implication()?);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<PropFormula, PropError> {
        let mut lhs = self.disjunction()?;
        while self.eat("->") {
            lhs = PropFormula::implies(lhs, self.disjunction()?);
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<PropFormula, PropError> {
        let mut lhs = self.conjunction()?;
        while self.eat("|") {
            lhs = PropFormula::or(lhs, self.conjunction()?);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<PropFormula, PropError> {
        let mut lhs = self.unary()?;
        while self.eat("&") {
            lhs = PropFormula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<PropFormula, PropError> {
        if self.eat("~") {
            return Ok(PropFormula::not(self.unary()?));
        }
        if self.eat("(") {
            let f = self.iff()?;
            if !self.eat(")") {
                return Err(self.error("expected `)`"));
            }
            return Ok(f);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<PropFormula, PropError> {
        self.skip_ws();
        let start = self.pos;
        let ident_len = self
            .rest()
            .find(|c: char| !(c.is_alphanumeric() || c == '_'))
            .unwrap_or(self.rest().len());
        if ident_len == 0 {
            return Err(self.error("expected `~`, `(` or an atom"));
        }
        self.pos += ident_len;
        if self.rest().starts_with('(') {
            let close = self.rest()[1..]
                .find(['(', ')'])
                .filter(|&i| self.rest()[1 + i..].starts_with(')'))
                .ok_or_else(|| self.error("unterminated atom argument"))?;
            self.pos += close + 2;
        }
        Ok(PropFormula::Atom(self.text[start..self.pos].to_string()))
    }
}
