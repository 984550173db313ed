//! Recursive-descent parser for the ASCII formula syntax.
//!
//! ```text
//! formula := iff
//! iff     := imp ("<->" imp)*
//! imp     := or ("->" or)*
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "~" unary | ("forall" | "exists") VAR "." formula | primary
//! primary := "(" formula ")" | IDENT "(" term ("," term)* ")"
//! term    := VAR | IDENT
//! ```
//!
//! A quantifier's scope extends as far right as possible. All binary
//! connectives associate to the left.

use std::collections::BTreeMap;

use super::lexer::{tokenize, Spanned, Token};
use super::signature::Signature;
use super::syntax::{Formula, Term, Variable};
use super::FormulaError;

/// How identifiers are resolved against a vocabulary.
enum Vocabulary<'s> {
    Fixed(&'s Signature),
    /// Infer predicates and constants from usage, requiring each predicate
    /// to be used with one arity throughout.
    Inferred(BTreeMap<String, usize>),
}

pub fn parse_formula(text: &str, sig: &Signature) -> Result<Formula, FormulaError> {
    Parser::new(text, Vocabulary::Fixed(sig))?.parse_all()
}

/// Parses without a declared signature, returning the formula together with
/// the smallest signature it is well-formed over.
pub fn parse_formula_inferring(text: &str) -> Result<(Formula, Signature), FormulaError> {
    let mut parser = Parser::new(text, Vocabulary::Inferred(BTreeMap::new()))?;
    let formula = parser.parse_all()?;
    let Vocabulary::Inferred(preds) = parser.vocab else {
        unreachable!()
    };
    let mut constants = Vec::new();
    collect_constants(&formula, &mut constants);
    let sig = Signature::new(preds, constants)?;
    Ok((formula, sig))
}

fn collect_constants(f: &Formula, out: &mut Vec<String>) {
    match f {
        Formula::Atom(_, terms) => out.extend(terms.iter().filter_map(|t| match t {
            Term::Const(c) => Some(c.clone()),
            Term::Var(_) => None,
        })),
        Formula::Not(a) | Formula::Forall(_, a) => collect_constants(a, out),
        Formula::Or(a, b) => {
            collect_constants(a, out);
            collect_constants(b, out);
        }
    }
}

struct Parser<'s> {
    tokens: Vec<Spanned>,
    pos: usize,
    end: usize,
    vocab: Vocabulary<'s>,
}

impl<'s> Parser<'s> {
    fn new(text: &str, vocab: Vocabulary<'s>) -> Result<Self, FormulaError> {
        Ok(Parser {
            tokens: tokenize(text)?,
            pos: 0,
            end: text.len(),
            vocab,
        })
    }

    fn parse_all(&mut self) -> Result<Formula, FormulaError> {
        let f = self.formula()?;
        if self.pos < self.tokens.len() {
            return Err(self.unexpected(&["`<->`", "`->`", "`|`", "`&`", "end of input"]));
        }
        Ok(f)
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn unexpected(&self, expected: &[&str]) -> FormulaError {
        FormulaError::Parse {
            position: self.position(),
            found: self
                .peek()
                .map_or_else(|| "end of input".to_string(), |t| t.to_string()),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn eat(&mut self, tok: &Token) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Token, shown: &str) -> Result<(), FormulaError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.unexpected(&[shown]))
        }
    }

    fn formula(&mut self) -> Result<Formula, FormulaError> {
        let mut lhs = self.implication()?;
        while self.eat(&Token::DoubleArrow) {
            let rhs = self.implication()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula, FormulaError> {
        let mut lhs = self.disjunction()?;
        while self.eat(&Token::Arrow) {
            let rhs = self.disjunction()?;
            lhs = Formula::implies(lhs, rhs);
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, FormulaError> {
        let mut lhs = self.conjunction()?;
        while self.eat(&Token::Pipe) {
            let rhs = self.conjunction()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, FormulaError> {
        let mut lhs = self.unary()?;
        while self.eat(&Token::Amp) {
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, FormulaError> {
        match self.peek() {
            Some(Token::Tilde) => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(Token::Forall) | Some(Token::Exists) => {
                let universal = self.peek() == Some(&Token::Forall);
                self.pos += 1;
                let var = match self.peek() {
                    Some(&Token::Var(k)) => Variable::new(k),
                    _ => return Err(self.unexpected(&["variable"])),
                };
                self.pos += 1;
                self.expect(Token::Dot, "`.`")?;
                let body = self.formula()?;
                Ok(if universal {
                    Formula::forall(var, body)
                } else {
                    Formula::exists(var, body)
                })
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let f = self.formula()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(f)
            }
            Some(Token::Ident(_)) => self.atom(),
            _ => Err(self.unexpected(&["`~`", "`forall`", "`exists`", "`(`", "predicate"])),
        }
    }

    fn atom(&mut self) -> Result<Formula, FormulaError> {
        let name = match self.peek() {
            Some(Token::Ident(name)) => name.clone(),
            _ => unreachable!("atom() called on a non-identifier"),
        };
        let declared = match &self.vocab {
            Vocabulary::Fixed(sig) => Some(
                sig.arity(&name)
                    .ok_or_else(|| FormulaError::UnknownPredicate(name.clone()))?,
            ),
            Vocabulary::Inferred(preds) => preds.get(&name).copied(),
        };
        self.pos += 1;
        self.expect(Token::LParen, "`(`")?;
        let mut terms = vec![self.term()?];
        while self.eat(&Token::Comma) {
            terms.push(self.term()?);
        }
        self.expect(Token::RParen, "`,` or `)`")?;
        match declared {
            Some(arity) if arity != terms.len() => {
                return Err(FormulaError::ArityMismatch {
                    predicate: name,
                    expected: arity,
                    found: terms.len(),
                })
            }
            Some(_) => {}
            None => {
                if let Vocabulary::Inferred(preds) = &mut self.vocab {
                    preds.insert(name.clone(), terms.len());
                }
            }
        }
        Ok(Formula::Atom(name, terms))
    }

    fn term(&mut self) -> Result<Term, FormulaError> {
        match self.peek() {
            Some(&Token::Var(k)) => {
                self.pos += 1;
                Ok(Term::Var(Variable::new(k)))
            }
            Some(Token::Ident(name)) => {
                let name = name.clone();
                match &self.vocab {
                    Vocabulary::Fixed(sig) if !sig.has_constant(&name) => {
                        return Err(FormulaError::UnknownConstant(name))
                    }
                    Vocabulary::Inferred(preds) if preds.contains_key(&name) => {
                        return Err(FormulaError::InvalidSignature(format!(
                            "`{name}` used both as a predicate and a constant"
                        )))
                    }
                    _ => {}
                }
                self.pos += 1;
                Ok(Term::Const(name))
            }
            _ => Err(self.unexpected(&["variable", "constant"])),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn philosophers() -> Signature {
        Signature::new([("Grego", 1), ("Mestre", 2), ("I", 2)], ["aristoteles"]).unwrap()
    }

    fn i(a: u32, b: u32) -> Formula {
        Formula::atom("I", vec![Term::var(a), Term::var(b)])
    }

    #[test]
    fn inclusion_sentence() {
        let f = parse_formula(
            "forall x1 . forall x2 . I(x1,x2)",
            &Signature::class_calculus(),
        )
        .unwrap();
        assert_eq!(
            f,
            Formula::forall(Variable::new(1), Formula::forall(Variable::new(2), i(1, 2)))
        );
    }

    #[test]
    fn single_atom() {
        assert_eq!(
            parse_formula("I(x1,x2)", &Signature::class_calculus()).unwrap(),
            i(1, 2)
        );
    }

    #[test]
    fn arity_mismatch() {
        assert_eq!(
            parse_formula("I(x1)", &Signature::class_calculus()),
            Err(FormulaError::ArityMismatch {
                predicate: "I".into(),
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn unknown_symbols() {
        let sig = philosophers();
        assert_eq!(
            parse_formula("Romano(x1)", &sig),
            Err(FormulaError::UnknownPredicate("Romano".into()))
        );
        assert_eq!(
            parse_formula("Grego(kant)", &sig),
            Err(FormulaError::UnknownConstant("kant".into()))
        );
        assert!(parse_formula("Grego(aristoteles)", &sig).is_ok());
    }

    #[test]
    fn parse_errors_report_position_and_expectations() {
        let sig = Signature::class_calculus();
        match parse_formula("forall x1 I(x1,x1)", &sig) {
            Err(FormulaError::Parse {
                position, expected, ..
            }) => {
                assert_eq!(position, 10);
                assert_eq!(expected, vec!["`.`"]);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_formula("(I(x1,x1)", &sig),
            Err(FormulaError::Parse { position: 9, .. })
        ));
        assert!(matches!(
            parse_formula("I(x1,x1) I(x1,x1)", &sig),
            Err(FormulaError::Parse { .. })
        ));
        assert!(matches!(
            parse_formula("", &sig),
            Err(FormulaError::Parse { position: 0, .. })
        ));
        assert!(matches!(
            parse_formula("forall I . I(x1,x1)", &sig),
            Err(FormulaError::Parse { .. })
        ));
    }

    #[test]
    fn precedence_and_associativity() {
        let sig = Signature::class_calculus();
        let (a, b, c) = (i(1, 1), i(2, 2), i(3, 3));
        let p = |s| parse_formula(s, &sig).unwrap();
        assert_eq!(
            p("I(x1,x1) | I(x2,x2) & I(x3,x3)"),
            Formula::or(a.clone(), Formula::and(b.clone(), c.clone()))
        );
        assert_eq!(
            p("I(x1,x1) -> I(x2,x2) -> I(x3,x3)"),
            Formula::implies(Formula::implies(a.clone(), b.clone()), c.clone())
        );
        assert_eq!(
            p("I(x1,x1) <-> I(x2,x2) | I(x3,x3)"),
            Formula::iff(a.clone(), Formula::or(b.clone(), c.clone()))
        );
        assert_eq!(
            p("~I(x1,x1) & I(x2,x2)"),
            Formula::and(Formula::not(a.clone()), b.clone())
        );
        assert_eq!(
            p("forall x1 . I(x1,x1) | I(x2,x2)"),
            Formula::forall(Variable::new(1), Formula::or(a.clone(), b.clone()))
        );
        assert_eq!(
            p("(forall x1 . I(x1,x1)) | I(x2,x2)"),
            Formula::or(Formula::forall(Variable::new(1), a.clone()), b.clone())
        );
        assert_eq!(
            p("exists x2 . I(x1,x2)"),
            Formula::not(Formula::forall(Variable::new(2), Formula::not(i(1, 2))))
        );
        assert_eq!(p("  ( ( I( x1 , x1 ) ) )  "), a);
    }

    #[test]
    fn inferred_vocabulary() {
        let (f, sig) =
            parse_formula_inferring("forall x1 . Grego(x1) | Mestre(socrates, x1)").unwrap();
        assert!(f.is_sentence());
        assert_eq!(sig.arity("Grego"), Some(1));
        assert_eq!(sig.arity("Mestre"), Some(2));
        assert!(sig.has_constant("socrates"));
        assert!(parse_formula_inferring("P(x1) | P(x1,x2)").is_err());
        assert!(parse_formula_inferring("P(x1) | Q(P)").is_err());
        assert!(parse_formula_inferring(")=(").is_err());
    }
}
