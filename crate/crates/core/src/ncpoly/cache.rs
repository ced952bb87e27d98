//! Deterministic text serialization of completed rewrite systems.
//!
//! Layout, one item per line:
//! ```text
//! cp2q-rewrite-cache 1
//! presentation <name>
//! letters <name> ...
//! order deglex
//! watermark <n>
//! rules <count>
//! <lhs letter indices, comma separated> => <term> ; <term> ; ...
//! ```
//! A term is `<word>:<numerator>/<denominator>` and a Laurent polynomial is
//! `<lowest exponent>[<c0>,<c1>,...]` with exact rational coefficients.

use std::fmt::Write as _;

use num_rational::BigRational;

use crate::qcoeff::{LaurentV, RatV};

use super::poly::{NCPoly, Word};
use super::rewrite::{RewriteError, RewriteRule, RewriteSystem};

pub const CACHE_VERSION: u32 = 1;

fn enc_word(w: &Word) -> String {
    w.letters().iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
}

fn enc_laurent(p: &LaurentV) -> String {
    let lo = if p.is_zero() { 0 } else { p.low_exp() };
    let cs: Vec<String> = if p.is_zero() {
        Vec::new()
    } else {
        (lo..=p.high_exp()).map(|e| p.coeff(e).to_string()).collect()
    };
    format!("{lo}[{}]", cs.join(","))
}

fn enc_ratv(c: &RatV) -> String {
    format!("{}/{}", enc_laurent(c.numer()), enc_laurent(c.denom()))
}

/// Canonical text for a completed system; byte-identical for equal systems.
pub fn save_cache(sys: &RewriteSystem) -> String {
    let mut s = String::new();
    writeln!(s, "cp2q-rewrite-cache {CACHE_VERSION}").unwrap();
    writeln!(s, "presentation {}", sys.name()).unwrap();
    writeln!(s, "letters {}", sys.names().join(" ")).unwrap();
    writeln!(s, "order deglex").unwrap();
    writeln!(s, "watermark {}", sys.watermark()).unwrap();
    let mut rules: Vec<&RewriteRule> = sys.rules().iter().collect();
    rules.sort_by(|a, b| a.lhs.cmp(&b.lhs));
    writeln!(s, "rules {}", rules.len()).unwrap();
    for r in rules {
        let terms: Vec<String> = r.rhs.terms().rev().map(|(w, c)| format!("{}:{}", enc_word(w), enc_ratv(c))).collect();
        writeln!(s, "{} => {}", enc_word(&r.lhs), terms.join(" ; ")).unwrap();
    }
    s
}

fn err(msg: impl Into<String>) -> RewriteError {
    RewriteError::Cache(msg.into())
}

fn dec_word(s: &str) -> Result<Word, RewriteError> {
    if s.is_empty() {
        return Ok(Word::empty());
    }
    let letters: Result<Vec<u8>, _> = s.split(',').map(|t| t.trim().parse::<u8>()).collect();
    Ok(Word::from_slice(&letters.map_err(|e| err(format!("bad word `{s}`: {e}")))?))
}

fn dec_laurent(s: &str) -> Result<LaurentV, RewriteError> {
    let open = s.find('[').ok_or_else(|| err(format!("bad polynomial `{s}`")))?;
    let lo: i32 = s[..open].parse().map_err(|_| err(format!("bad exponent in `{s}`")))?;
    let body = s[open + 1..].strip_suffix(']').ok_or_else(|| err(format!("bad polynomial `{s}`")))?;
    if body.is_empty() {
        return Ok(LaurentV::zero());
    }
    let mut terms = Vec::new();
    for (k, c) in body.split(',').enumerate() {
        let v: BigRational = c.parse().map_err(|_| err(format!("bad coefficient `{c}`")))?;
        terms.push((lo + k as i32, v));
    }
    Ok(LaurentV::from_terms(terms))
}

fn dec_ratv(s: &str) -> Result<RatV, RewriteError> {
    let (n, d) = s.split_once("]/").ok_or_else(|| err(format!("bad coefficient `{s}`")))?;
    let num = dec_laurent(&format!("{n}]"))?;
    let den = dec_laurent(d)?;
    RatV::checked_new(num, den).ok_or_else(|| err("zero denominator"))
}

/// Parses a cache produced by [`save_cache`]. The expected presentation name
/// and letter list must match.
pub fn load_cache(text: &str, name: &str, names: &[String]) -> Result<RewriteSystem, RewriteError> {
    let mut lines = text.lines();
    let mut next = |key: &str| -> Result<String, RewriteError> {
        let line = lines.next().ok_or_else(|| err("truncated header"))?;
        line.strip_prefix(key)
            .map(|v| v.trim().to_string())
            .ok_or_else(|| err(format!("expected `{key}`, found `{line}`")))
    };
    let version: u32 = next("cp2q-rewrite-cache")?.parse().map_err(|_| err("bad version"))?;
    if version != CACHE_VERSION {
        return Err(err(format!("unsupported cache version {version}")));
    }
    if next("presentation")? != name {
        return Err(err("presentation mismatch"));
    }
    if next("letters")? != names.join(" ") {
        return Err(err("alphabet mismatch"));
    }
    if next("order")? != "deglex" {
        return Err(err("unsupported order"));
    }
    let watermark: usize = next("watermark")?.parse().map_err(|_| err("bad watermark"))?;
    let count: usize = next("rules")?.parse().map_err(|_| err("bad rule count"))?;
    let mut rules = Vec::with_capacity(count);
    for line in lines.by_ref().take(count) {
        let (l, r) = line.split_once(" => ").ok_or_else(|| err(format!("bad rule `{line}`")))?;
        let lhs = dec_word(l)?;
        let mut rhs = NCPoly::zero();
        for t in r.split(" ; ").filter(|t| !t.is_empty()) {
            let (w, c) = t.split_once(':').ok_or_else(|| err(format!("bad term `{t}`")))?;
            rhs.add_term(dec_word(w)?, dec_ratv(c)?);
        }
        rules.push(RewriteRule { lhs, rhs });
    }
    if rules.len() != count {
        return Err(err("rule count mismatch"));
    }
    let mut sys = RewriteSystem::new(name, names.to_vec(), rules)?;
    sys.set_watermark(watermark);
    Ok(sys)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let names: Vec<String> = vec!["x".into(), "y".into()];
        let c = RatV::new(LaurentV::q_pow(1), &LaurentV::one() + &LaurentV::v_pow(2));
        let rhs = NCPoly::term(c, Word::from_slice(&[0, 1])).add(&NCPoly::constant(RatV::from_int(-3)));
        let r = RewriteRule { lhs: Word::from_slice(&[1, 0]), rhs };
        let sys = RewriteSystem::new("toy", names.clone(), vec![r]).unwrap();
        let text = save_cache(&sys);
        let back = load_cache(&text, "toy", &names).unwrap();
        assert_eq!(save_cache(&back), text);
        assert!(load_cache(&text, "other", &names).is_err());
    }
}
