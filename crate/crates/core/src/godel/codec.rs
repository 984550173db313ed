use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::arith::is_arithmetic_formula;
use super::primes::Primes;
use super::{GodelError, SymbolTable};
use crate::formula::{parse_formula_inferring, render, Formula};

/// The code of a symbol string under a particular table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GodelCode<'t> {
    value: BigUint,
    table: &'t SymbolTable,
}

impl<'t> GodelCode<'t> {
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn into_value(self) -> BigUint {
        self.value
    }

    pub fn table(&self) -> &'t SymbolTable {
        self.table
    }

    /// Number of symbols in the coded string (the exponent of 2).
    pub fn length(&self) -> u64 {
        self.value.trailing_zeros().unwrap_or(0)
    }

    pub fn decode(&self) -> Result<Decoded, GodelError> {
        decode(self.table, &self.value)
    }
}

/// A decoded string, flagged with whether it is a well-formed formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub text: String,
    pub well_formed: bool,
}

/// `2^n · p_2^c_1 · p_3^c_2 ··· p_{n+1}^c_n` for a string of `n` symbols with
/// codes `c_1..c_n`, where `p_j` is the j-th prime. The empty string codes
/// to 1.
pub fn encode<'t>(table: &'t SymbolTable, text: &str) -> Result<GodelCode<'t>, GodelError> {
    let codes: Vec<u32> = text
        .chars()
        .enumerate()
        .map(|(position, symbol)| {
            table
                .code(symbol)
                .ok_or(GodelError::UnknownSymbol { symbol, position })
        })
        .collect::<Result<_, _>>()?;
    if codes.is_empty() {
        return Ok(GodelCode {
            value: BigUint::one(),
            table,
        });
    }
    let mut primes = Primes::new();
    let mut value = BigUint::one() << codes.len();
    for (i, &code) in codes.iter().enumerate() {
        value *= BigUint::from(primes.nth(i + 2)).pow(code);
    }
    Ok(GodelCode { value, table })
}

pub fn code_of_formula<'t>(
    table: &'t SymbolTable,
    f: &Formula,
) -> Result<GodelCode<'t>, GodelError> {
    encode(table, &render(f))
}

/// Recovers the string coded by `n`.
///
/// The exponent of 2 gives the length `L`; the primes 3, 5, ... up to the
/// (L+1)-th prime must each divide `n`, and nothing else may. Structural
/// failures are reported as [`GodelError::NotACode`]; a structurally valid
/// number carrying an exponent with no symbol in the table is
/// [`GodelError::UnknownCode`].
pub fn decode(table: &SymbolTable, n: &BigUint) -> Result<Decoded, GodelError> {
    if n.is_zero() {
        return Err(GodelError::NotACode("0 codes nothing".into()));
    }
    let length = n.trailing_zeros().unwrap_or(0);
    let mut rest = n >> length;
    let mut primes = Primes::new();
    let mut exponents = Vec::new();
    for position in 0..length {
        let p = primes.nth(position as usize + 2);
        let e = strip_factor(&mut rest, p);
        if e == 0 {
            return Err(GodelError::NotACode(format!(
                "length field says {length} symbol(s) but prime {p} (position {position}) is absent"
            )));
        }
        exponents.push(e);
    }
    if !rest.is_one() {
        let next = primes.nth(length as usize + 2);
        let reason = if (&rest % next).is_zero() {
            format!("length field says {length} symbol(s) but prime {next} also occurs")
        } else {
            format!("leftover factor {rest} after {length} symbol(s)")
        };
        return Err(GodelError::NotACode(reason));
    }
    let text = exponents
        .iter()
        .enumerate()
        .map(|(position, &e)| {
            u32::try_from(e)
                .ok()
                .and_then(|code| table.symbol(code))
                .ok_or(GodelError::UnknownCode { position, code: e })
        })
        .collect::<Result<String, _>>()?;
    let well_formed = is_well_formed(&text);
    Ok(Decoded { text, well_formed })
}

/// True for arithmetic formulas (`~(0=s(0))`) and for object-language
/// formulas over whatever vocabulary they use.
pub fn is_well_formed(text: &str) -> bool {
    is_arithmetic_formula(text) || parse_formula_inferring(text).is_ok()
}

/// Divides out every factor `p` from `n`, returning the multiplicity.
fn strip_factor(n: &mut BigUint, p: u64) -> u64 {
    // peel off the largest power of p fitting in a machine word at a time
    let mut chunk = p;
    let mut per_chunk = 1;
    while let Some(next) = chunk.checked_mul(p) {
        chunk = next;
        per_chunk += 1;
    }
    let mut e = 0;
    for (divisor, step) in [(chunk, per_chunk), (p, 1)] {
        let divisor = BigUint::from(divisor);
        loop {
            let (q, r) = n.div_rem(&divisor);
            if !r.is_zero() {
                break;
            }
            *n = q;
            e += step;
        }
    }
    e
}

/// The numeral naming `n`: `0` wrapped in `n` applications of `s`.
pub fn numeral(n: usize) -> String {
    let mut out = String::with_capacity(3 * n + 1);
    for _ in 0..n {
        out.push_str("s(");
    }
    out.push('0');
    out.extend(std::iter::repeat_n(')', n));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(factors: &[(u64, u32)]) -> BigUint {
        factors
            .iter()
            .fold(BigUint::one(), |acc, &(p, e)| acc * BigUint::from(p).pow(e))
    }

    #[test]
    fn arithmetic_example() {
        let t = SymbolTable::default();
        let code = encode(&t, "~(0=s(0))").unwrap();
        let expected = big(&[
            (2, 9),
            (3, 7),
            (5, 1),
            (7, 8),
            (11, 13),
            (13, 24),
            (17, 1),
            (19, 8),
            (23, 3),
            (29, 3),
        ]);
        assert_eq!(code.value(), &expected);
        assert_eq!(code.length(), 9);
        let back = code.decode().unwrap();
        assert_eq!(back.text, "~(0=s(0))");
        assert!(back.well_formed);
    }

    #[test]
    fn small_codes() {
        let t = SymbolTable::default();
        assert_eq!(encode(&t, "").unwrap().value(), &BigUint::one());
        assert_eq!(encode(&t, "0").unwrap().value(), &BigUint::from(13122u32));
        assert_eq!(
            encode(&t, "0$"),
            Err(GodelError::UnknownSymbol {
                symbol: '$',
                position: 1
            })
        );
    }

    #[test]
    fn junk_string() {
        let t = SymbolTable::default();
        let n = big(&[(2, 3), (3, 3), (5, 13), (7, 1)]);
        assert_eq!(n, BigUint::from(1_845_703_125_000u64));
        let d = decode(&t, &n).unwrap();
        assert_eq!(
            d,
            Decoded {
                text: ")=(".into(),
                well_formed: false
            }
        );
    }

    #[test]
    fn structural_failures() {
        let t = SymbolTable::default();
        // length 1 but two symbol primes
        assert!(matches!(
            decode(&t, &big(&[(2, 1), (3, 8), (5, 8)])),
            Err(GodelError::NotACode(_))
        ));
        // gap: 5 missing
        assert!(matches!(
            decode(&t, &big(&[(2, 2), (3, 8), (7, 8)])),
            Err(GodelError::NotACode(_))
        ));
        // leftover factor below the next prime
        assert!(matches!(
            decode(&t, &big(&[(2, 1), (3, 8), (3, 0), (7, 1)])),
            Err(GodelError::NotACode(_))
        ));
        // odd number > 1
        assert!(matches!(
            decode(&t, &BigUint::from(9u32)),
            Err(GodelError::NotACode(_))
        ));
        assert!(matches!(
            decode(&t, &BigUint::zero()),
            Err(GodelError::NotACode(_))
        ));
        // exponent 77 is not in the shipped table
        assert_eq!(
            decode(&t, &big(&[(2, 1), (3, 77)])),
            Err(GodelError::UnknownCode {
                position: 0,
                code: 77
            })
        );
        assert_eq!(decode(&t, &BigUint::one()).unwrap().text, "");
    }

    #[test]
    fn large_exponents_strip_exactly() {
        let mut n = big(&[(3, 200), (5, 1)]);
        assert_eq!(strip_factor(&mut n, 3), 200);
        assert_eq!(n, BigUint::from(5u32));
    }

    #[test]
    fn numerals() {
        assert_eq!(numeral(0), "0");
        assert_eq!(numeral(2), "s(s(0))");
        assert_eq!(numeral(5), "s(s(s(s(s(0)))))");
    }
}
