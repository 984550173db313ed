use std::fmt;

use super::signature::is_variable_spelling;
use super::syntax::MAX_VARIABLE_INDEX;
use super::FormulaError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Token {
    Forall,
    Exists,
    Dot,
    Tilde,
    Pipe,
    Amp,
    Arrow,
    DoubleArrow,
    LParen,
    RParen,
    Comma,
    Var(u32),
    Ident(String),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Forall => f.write_str("`forall`"),
            Token::Exists => f.write_str("`exists`"),
            Token::Dot => f.write_str("`.`"),
            Token::Tilde => f.write_str("`~`"),
            Token::Pipe => f.write_str("`|`"),
            Token::Amp => f.write_str("`&`"),
            Token::Arrow => f.write_str("`->`"),
            Token::DoubleArrow => f.write_str("`<->`"),
            Token::LParen => f.write_str("`(`"),
            Token::RParen => f.write_str("`)`"),
            Token::Comma => f.write_str("`,`"),
            Token::Var(k) => write!(f, "variable `x{k}`"),
            Token::Ident(s) => write!(f, "identifier `{s}`"),
        }
    }
}

/// A token with the byte offset where it starts.
pub(crate) type Spanned = (usize, Token);

pub(crate) fn tokenize(text: &str) -> Result<Vec<Spanned>, FormulaError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let single = match c {
            '.' => Some(Token::Dot),
            '~' => Some(Token::Tilde),
            '|' => Some(Token::Pipe),
            '&' => Some(Token::Amp),
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            ',' => Some(Token::Comma),
            _ => None,
        };
        if let Some(tok) = single {
            chars.next();
            out.push((pos, tok));
            continue;
        }
        if text[pos..].starts_with("<->") {
            chars.nth(2);
            out.push((pos, Token::DoubleArrow));
            continue;
        }
        if text[pos..].starts_with("->") {
            chars.nth(1);
            out.push((pos, Token::Arrow));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut end = pos;
            while let Some(&(i, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    end = i + c.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            let word = &text[pos..end];
            let tok = match word {
                "forall" => Token::Forall,
                "exists" => Token::Exists,
                w if is_variable_spelling(w) => Token::Var(variable_index(&w[1..], pos)?),
                w => Token::Ident(w.to_string()),
            };
            out.push((pos, tok));
            continue;
        }
        return Err(FormulaError::Lex {
            position: pos,
            found: c,
        });
    }
    Ok(out)
}

fn variable_index(digits: &str, position: usize) -> Result<u32, FormulaError> {
    match digits.parse::<u32>() {
        Ok(k) if (1..=MAX_VARIABLE_INDEX).contains(&k) => Ok(k),
        _ => Err(FormulaError::VariableIndex {
            position,
            digits: digits.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens() {
        let toks: Vec<Token> = tokenize("forall x1 . ~(I(x1,x12) <-> P -> Q) & exists")
            .unwrap()
            .into_iter()
            .map(|(_, t)| t)
            .collect();
        assert_eq!(
            toks,
            vec![
                Token::Forall,
                Token::Var(1),
                Token::Dot,
                Token::Tilde,
                Token::LParen,
                Token::Ident("I".into()),
                Token::LParen,
                Token::Var(1),
                Token::Comma,
                Token::Var(12),
                Token::RParen,
                Token::DoubleArrow,
                Token::Ident("P".into()),
                Token::Arrow,
                Token::Ident("Q".into()),
                Token::RParen,
                Token::Amp,
                Token::Exists,
            ]
        );
    }

    #[test]
    fn lex_errors_carry_position() {
        assert_eq!(
            tokenize("I(x1, $)"),
            Err(FormulaError::Lex {
                position: 6,
                found: '$'
            })
        );
        assert!(matches!(
            tokenize("I(x0,x1)"),
            Err(FormulaError::VariableIndex { .. })
        ));
        assert!(matches!(
            tokenize("P(x1000001)"),
            Err(FormulaError::VariableIndex { .. })
        ));
        assert!(tokenize("P(x1000000)").is_ok());
        assert!(matches!(
            tokenize("P(x1) < Q"),
            Err(FormulaError::Lex { found: '<', .. })
        ));
    }
}
