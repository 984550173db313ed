use std::fmt::{self, Write};

use super::syntax::Formula;

/// Canonical text of a formula; parsing it back yields the same tree.
pub fn render(f: &Formula) -> String {
    f.to_string()
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(pred, terms) => {
                f.write_str(pred)?;
                f.write_char('(')?;
                for (i, t) in terms.iter().enumerate() {
                    if i > 0 {
                        f.write_char(',')?;
                    }
                    write!(f, "{t}")?;
                }
                f.write_char(')')
            }
            Formula::Not(a) => write!(f, "~{a}"),
            Formula::Or(a, b) => {
                // a quantifier on the left would otherwise swallow `| b`
                if opens_scope(a) {
                    write!(f, "(({a}) | {b})")
                } else {
                    write!(f, "({a} | {b})")
                }
            }
            Formula::Forall(v, body) => write!(f, "forall {v} . {body}"),
        }
    }
}

fn opens_scope(f: &Formula) -> bool {
    match f {
        Formula::Forall(..) => true,
        Formula::Not(a) => opens_scope(a),
        _ => false,
    }
}
