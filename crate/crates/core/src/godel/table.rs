use std::collections::BTreeMap;

use super::GodelError;

/// Codes that every table must carry unchanged.
pub const REQUIRED_CODES: [(char, u32); 6] =
    [('(', 1), (')', 3), ('~', 7), ('0', 8), ('=', 13), ('s', 24)];

const DEFAULT_TABLE: &str = include_str!("symbols.json");

/// A one-to-one assignment of positive integer codes to single characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolTable {
    codes: BTreeMap<char, u32>,
    symbols: BTreeMap<u32, char>,
}

impl SymbolTable {
    pub fn new(pairs: impl IntoIterator<Item = (char, u32)>) -> Result<Self, GodelError> {
        let mut codes = BTreeMap::new();
        let mut symbols = BTreeMap::new();
        for (c, code) in pairs {
            if code == 0 {
                return Err(GodelError::Table(format!(
                    "symbol {c:?} has code 0; codes start at 1"
                )));
            }
            if codes.insert(c, code).is_some() {
                return Err(GodelError::Table(format!("symbol {c:?} listed twice")));
            }
            if let Some(other) = symbols.insert(code, c) {
                return Err(GodelError::Table(format!(
                    "code {code} given to both {other:?} and {c:?}"
                )));
            }
        }
        for (c, code) in REQUIRED_CODES {
            if codes.get(&c) != Some(&code) {
                return Err(GodelError::Table(format!(
                    "symbol {c:?} must have code {code}"
                )));
            }
        }
        Ok(SymbolTable { codes, symbols })
    }

    /// Reads a JSON object mapping one-character strings to codes.
    pub fn from_json(text: &str) -> Result<Self, GodelError> {
        let raw: BTreeMap<String, u32> =
            serde_json::from_str(text).map_err(|e| GodelError::Table(e.to_string()))?;
        let mut pairs = Vec::with_capacity(raw.len());
        for (key, code) in raw {
            let mut chars = key.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => pairs.push((c, code)),
                _ => {
                    return Err(GodelError::Table(format!(
                        "key {key:?} is not a single character"
                    )))
                }
            }
        }
        SymbolTable::new(pairs)
    }

    pub fn code(&self, c: char) -> Option<u32> {
        self.codes.get(&c).copied()
    }

    pub fn symbol(&self, code: u32) -> Option<char> {
        self.symbols.get(&code).copied()
    }

    pub fn alphabet(&self) -> impl Iterator<Item = char> + '_ {
        self.codes.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }
}

impl Default for SymbolTable {
    /// The shipped table: the six fixed codes, then space, punctuation,
    /// digits, lowercase and uppercase ASCII letters on the next free codes.
    /// Covers everything [`crate::formula::render`] can print.
    fn default() -> Self {
        SymbolTable::from_json(DEFAULT_TABLE).expect("shipped symbol table is valid")
    }
}
