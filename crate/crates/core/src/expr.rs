//! Parser for the textual generator expressions accepted by the front ends.
//!
//! An expression is a sum of terms separated by standalone `+` or `-`
//! tokens. A term is a whitespace-separated product of factors: integers,
//! `q^k` or `v^k` literals (`k` an integer or a fraction such as `1/2`;
//! `v = q^(1/4)`, so `q^k` needs `4k` integral), and generator names of the
//! chosen algebra (`z1`, `z1*`, `u23`, or `E1`, `K2i`, ...).

use num_rational::Ratio;

use crate::ncpoly::{NCPoly, Word};
use crate::qalgebras::Presentation;
use crate::qcoeff::RatV;
use crate::uqsu3::{Gen, UqElement};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty expression")]
    Empty,
    #[error("unknown token `{0}`")]
    Token(String),
    #[error("exponent `{0}` is not a multiple of 1/4")]
    Exponent(String),
    #[error("dangling operator at the end of the expression")]
    Dangling,
}

/// Splits into (sign, factor tokens) per term.
fn terms(s: &str) -> Result<Vec<(i64, Vec<&str>)>, ParseError> {
    let mut out: Vec<(i64, Vec<&str>)> = Vec::new();
    let mut sign = 1;
    let mut cur: Vec<&str> = Vec::new();
    let mut pending = false;
    for tok in s.split_whitespace() {
        match tok {
            "+" | "-" => {
                if !cur.is_empty() {
                    out.push((sign, std::mem::take(&mut cur)));
                    sign = 1;
                }
                if tok == "-" {
                    sign = -sign;
                }
                pending = true;
            }
            _ => {
                cur.push(tok);
                pending = false;
            }
        }
    }
    if pending {
        return Err(ParseError::Dangling);
    }
    if !cur.is_empty() {
        out.push((sign, cur));
    }
    if out.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(out)
}

/// Parses an integer or a `q^k` / `v^k` literal.
fn scalar(tok: &str) -> Result<Option<RatV>, ParseError> {
    if let Ok(n) = tok.parse::<i64>() {
        return Ok(Some(RatV::from_int(n)));
    }
    let (base, exp) = match tok.split_once('^') {
        Some((b @ ("q" | "v"), e)) => (b, e),
        _ if tok == "q" || tok == "v" => (tok, "1"),
        _ => return Ok(None),
    };
    let k: Ratio<i64> = match exp.trim_start_matches('(').trim_end_matches(')').split_once('/') {
        Some((a, b)) => {
            let (a, b) = (a.parse::<i64>(), b.parse::<i64>());
            match (a, b) {
                (Ok(a), Ok(b)) if b != 0 => Ratio::new(a, b),
                _ => return Err(ParseError::Exponent(tok.into())),
            }
        }
        None => Ratio::from_integer(exp.trim_start_matches('(').trim_end_matches(')').parse().map_err(|_| ParseError::Exponent(tok.into()))?),
    };
    let quarters = if base == "q" { k * 4 } else { k };
    if !quarters.is_integer() {
        return Err(ParseError::Exponent(tok.into()));
    }
    Ok(Some(RatV::v_pow(quarters.to_integer() as i32)))
}

/// An element of the coordinate algebra `pres`, reduced to normal form.
pub fn parse_poly(pres: &Presentation, s: &str) -> Result<NCPoly<RatV>, ParseError> {
    let mut total = NCPoly::zero();
    for (sign, factors) in terms(s)? {
        let mut c = RatV::from_int(sign);
        let mut w = Vec::new();
        for f in factors {
            match scalar(f)? {
                Some(x) => c = &c * &x,
                None => w.push(pres.system().letter_index(f).map_err(|_| ParseError::Token(f.into()))?),
            }
        }
        total.add_term(Word::from_slice(&w), c);
    }
    Ok(pres.reduce(&total))
}

/// An element of U_q(su(3)).
pub fn parse_uq(s: &str) -> Result<UqElement, ParseError> {
    let mut total = UqElement::zero();
    for (sign, factors) in terms(s)? {
        let mut c = RatV::from_int(sign);
        let mut w = Vec::new();
        for f in factors {
            match scalar(f)? {
                Some(x) => c = &c * &x,
                None => w.push(Gen::parse(f).ok_or_else(|| ParseError::Token(f.into()))?),
            }
        }
        total.add_term(&w, c);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebras::{s5q, suq3, z_letter};

    #[test]
    fn parses_sums_and_literals() {
        let s5 = s5q();
        let x = parse_poly(s5, "z2 z1").unwrap();
        assert_eq!(s5.display(&x), "q^-1 z1 z2");
        let y = parse_poly(s5, "2 q^1/2 z1 - z1").unwrap();
        let want = NCPoly::<RatV>::letter(z_letter(1)).scale(&(&(&RatV::from_int(2) * &RatV::v_pow(2)) - &RatV::one()));
        assert_eq!(y, want);
        assert_eq!(parse_poly(s5, "z1 z1* + z2 z2* + z3 z3*").unwrap(), NCPoly::one());
        assert!(parse_poly(suq3(), "u11 u22 u33").is_ok());
        assert_eq!(parse_poly(s5, "z4"), Err(ParseError::Token("z4".into())));
        assert_eq!(parse_poly(s5, "q^1/3"), Err(ParseError::Exponent("q^1/3".into())));
        assert_eq!(parse_poly(s5, "z1 +"), Err(ParseError::Dangling));
        assert_eq!(parse_uq("E1 K2i").unwrap(), UqElement::word(&[Gen::E1, Gen::K2i]));
    }
}
