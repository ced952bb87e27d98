use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::qcoeff::{Radical, RatV};

/// Index of a generator inside its alphabet. The index is also the
/// generator's precedence in the monomial order.
pub type Letter = u8;

/// A word over an alphabet, ordered degree-lexicographically: shorter words
/// are smaller, and words of equal length compare letter by letter from the
/// left.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub SmallVec<[Letter; 16]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_slice(s: &[Letter]) -> Self {
        Word(SmallVec::from_slice(s))
    }

    pub fn letter(l: Letter) -> Self {
        Word::from_slice(&[l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        Word(w)
    }

    /// Position of the first occurrence of `pat`, if any.
    pub fn find(&self, pat: &[Letter]) -> Option<usize> {
        if pat.is_empty() || pat.len() > self.len() {
            return None;
        }
        (0..=self.len() - pat.len()).find(|&i| &self.0[i..i + pat.len()] == pat)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// Coefficient ring for [`NCPoly`].
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, r: &RatV) -> Self;
    fn from_ratv(r: RatV) -> Self;
    fn eval_f64(&self, q0: f64) -> f64;
    fn to_radical(&self) -> Radical;
}

impl Coeff for RatV {
    fn zero() -> Self {
        RatV::zero()
    }
    fn one() -> Self {
        RatV::one()
    }
    fn is_zero(&self) -> bool {
        RatV::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self = &*self + other;
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &RatV) -> Self {
        self * r
    }
    fn from_ratv(r: RatV) -> Self {
        r
    }
    fn eval_f64(&self, q0: f64) -> f64 {
        RatV::eval_f64(self, q0)
    }
    fn to_radical(&self) -> Radical {
        Radical::from(self.clone())
    }
}

impl Coeff for Radical {
    fn zero() -> Self {
        Radical::zero()
    }
    fn one() -> Self {
        Radical::one()
    }
    fn is_zero(&self) -> bool {
        Radical::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        self.add_assign_ref(other);
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &RatV) -> Self {
        Radical::scale(self, r)
    }
    fn from_ratv(r: RatV) -> Self {
        Radical::from(r)
    }
    fn eval_f64(&self, q0: f64) -> f64 {
        Radical::eval_f64(self, q0)
    }
    fn to_radical(&self) -> Radical {
        self.clone()
    }
}

/// A finitely supported linear combination of words. Zero coefficients are
/// never stored; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NCPoly<C = RatV> {
    terms: BTreeMap<Word, C>,
}

impl<C: Coeff> Default for NCPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> NCPoly<C> {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::term(C::one(), Word::empty())
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, Word::empty())
    }

    pub fn term(c: C, w: Word) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(w: Word) -> Self {
        Self::term(C::one(), w)
    }

    pub fn letter(l: Letter) -> Self {
        Self::word(Word::letter(l))
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, C)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in it {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, C)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &Word) -> Option<&C> {
        self.terms.get(w)
    }

    /// Largest word and its coefficient.
    pub fn leading(&self) -> Option<(&Word, &C)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Word, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn neg(&self) -> Self {
        NCPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &RatV) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.scale(r))).collect() }
    }

    pub fn scale_coeff(&self, k: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), c.mul(k))))
    }

    /// Free (unreduced) product: concatenation of words.
    pub fn concat_mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1.mul(c2));
            }
        }
        out
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> D>(&self, f: F) -> NCPoly<D> {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    pub fn to_radical(&self) -> NCPoly<Radical> {
        self.map_coeffs(Coeff::to_radical)
    }

    /// Evaluates every coefficient at `q = q0`.
    pub fn eval_coeffs(&self, q0: f64) -> BTreeMap<Word, f64> {
        self.terms.iter().map(|(w, c)| (w.clone(), c.eval_f64(q0))).collect()
    }

    /// Renders with the given generator names; `1` stands for the empty word.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (w, c) in self.terms.iter().rev() {
            let word = if w.is_empty() {
                "1".to_string()
            } else {
                w.letters().iter().map(|&l| names[l as usize].as_str()).collect::<Vec<_>>().join(" ")
            };
            let cs = c.to_string();
            if cs == "1" {
                parts.push(word);
            } else if w.is_empty() {
                parts.push(if cs.contains(' ') { format!("({cs})") } else { cs });
            } else if cs.contains(' ') {
                parts.push(format!("({cs}) {word}"));
            } else {
                parts.push(format!("{cs} {word}"));
            }
        }
        parts.join(" + ")
    }
}

impl<C: Coeff> fmt::Debug for NCPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deglex_order() {
        let a = Word::from_slice(&[1, 0]);
        let b = Word::from_slice(&[0, 1]);
        let c = Word::from_slice(&[5]);
        assert!(a > b);
        assert!(c < b);
        assert!(Word::empty() < c);
        assert_eq!(a.find(&[0]), Some(1));
    }

    #[test]
    fn add_cancels() {
        let p = NCPoly::<RatV>::letter(0).add(&NCPoly::letter(1));
        let z = p.sub(&p);
        assert!(z.is_zero());
        let sq = p.concat_mul(&p);
        assert_eq!(sq.len(), 4);
        assert_eq!(sq.leading().unwrap().0, &Word::from_slice(&[1, 1]));
    }
}
