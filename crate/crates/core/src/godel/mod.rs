//! Arithmetization of syntax: strings of symbols as natural numbers via
//! prime-power exponents, and numerals built from `0` and `s`.

mod arith;
mod codec;
mod primes;
mod table;

pub use arith::is_arithmetic_formula;
pub use codec::{code_of_formula, decode, encode, is_well_formed, numeral, Decoded, GodelCode};
pub use primes::Primes;
pub use table::{SymbolTable, REQUIRED_CODES};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GodelError {
    #[error("symbol {symbol:?} at position {position} has no code")]
    UnknownSymbol { symbol: char, position: usize },
    #[error("not a code: {0}")]
    NotACode(String),
    #[error("exponent {code} at position {position} is not the code of any symbol")]
    UnknownCode { position: usize, code: u64 },
    #[error("bad symbol table: {0}")]
    Table(String),
}
