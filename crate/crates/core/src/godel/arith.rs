//! Recognizer for the arithmetic formulas built from `0`, `s(...)`, `=`,
//! `~`, parentheses and the binary connectives.
//!
//! ```text
//! formula := unary (("|" | "&" | "->" | "<->") unary)*
//! unary   := "~" unary | "(" formula ")" | term "=" term
//! term    := "0" | "s" "(" term ")"
//! ```

pub fn is_arithmetic_formula(text: &str) -> bool {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut r = Recognizer {
        chars: &chars,
        pos: 0,
    };
    r.formula() && r.pos == chars.len()
}

struct Recognizer<'a> {
    chars: &'a [char],
    pos: usize,
}

impl Recognizer<'_> {
    fn eat(&mut self, s: &str) -> bool {
        let n = s.chars().count();
        if self.chars.len() >= self.pos + n
            && self.chars[self.pos..self.pos + n]
                .iter()
                .copied()
                .eq(s.chars())
        {
            self.pos += n;
            true
        } else {
            false
        }
    }

    fn formula(&mut self) -> bool {
        if !self.unary() {
            return false;
        }
        while self.eat("|") || self.eat("&") || self.eat("->") || self.eat("<->") {
            if !self.unary() {
                return false;
            }
        }
        true
    }

    fn unary(&mut self) -> bool {
        if self.eat("~") {
            return self.unary();
        }
        if self.eat("(") {
            return self.formula() && self.eat(")");
        }
        self.term() && self.eat("=") && self.term()
    }

    fn term(&mut self) -> bool {
        if self.eat("0") {
            return true;
        }
        self.eat("s") && self.eat("(") && self.term() && self.eat(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognizes_arithmetic() {
        assert!(is_arithmetic_formula("~(0=s(0))"));
        assert!(is_arithmetic_formula("s(s(0))=s(s(0))"));
        assert!(is_arithmetic_formula("(0=0 | ~0=s(0))"));
        assert!(is_arithmetic_formula("0 = 0"));
    }

    #[test]
    fn rejects_junk() {
        for s in [
            ")=(", "", "0", "s(0)", "~", "0=", "(0=0", "0=0)", "s0=0", "==", "0=0|",
        ] {
            assert!(!is_arithmetic_formula(s), "{s:?}");
        }
    }
}
