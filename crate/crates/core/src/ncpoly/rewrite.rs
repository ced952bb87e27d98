use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::qcoeff::RatV;

use super::poly::{Coeff, Letter, NCPoly, Word};

/// Integer weight pair attached to letters, e.g. `(z-degree, z*-degree)`.
pub type Weight = [i64; 2];

/// Oriented relation `lhs -> rhs`; every word of `rhs` is smaller than `lhs`.
#[derive(Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: NCPoly<RatV>,
}

impl fmt::Debug for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?}", self.lhs, self.rhs)
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum RewriteError {
    #[error("relation reduces to a nonzero constant: the presentation is inconsistent")]
    Inconsistent,
    #[error("rule {lhs} -> {rhs} is not compatible with the monomial order")]
    NotOrdered { lhs: String, rhs: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{0}` has no star image")]
    NoStarImage(String),
    #[error("cache: {0}")]
    Cache(String),
}

/// An oriented presentation of a finitely presented algebra under the
/// degree-lexicographic order induced by letter indices.
#[derive(Clone)]
pub struct RewriteSystem {
    name: String,
    names: Vec<String>,
    rules: Vec<RewriteRule>,
    /// `by_first[l]` lists rules whose lhs starts with `l`, shortest first.
    by_first: Vec<Vec<usize>>,
    star: Option<Vec<NCPoly<RatV>>>,
    watermark: usize,
    memo: LetterMemo,
}

type Expansion = Arc<Vec<(Word, RatV)>>;

/// Normal forms of `u * x` for normal words `u` and letters `x` whose
/// concatenation is reducible. Cleared whenever the rule set changes.
#[derive(Default)]
struct LetterMemo(Mutex<HashMap<(Word, Letter), Expansion>>);

/// Entries kept before the memo is flushed.
const MEMO_LIMIT: usize = 1 << 21;

impl Clone for LetterMemo {
    fn clone(&self) -> Self {
        LetterMemo::default()
    }
}

impl fmt::Debug for RewriteSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RewriteSystem")
            .field("name", &self.name)
            .field("rules", &self.rules.len())
            .field("watermark", &self.watermark)
            .finish()
    }
}

/// One overlap or inclusion ambiguity and its two reducts.
#[derive(Clone, Debug)]
pub struct Ambiguity {
    pub word: Word,
    pub rules: (usize, usize),
    pub difference: NCPoly<RatV>,
}

impl Ambiguity {
    pub fn resolved(&self) -> bool {
        self.difference.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct ConfluenceReport {
    pub degree_bound: usize,
    pub checked: usize,
    pub unresolved: Vec<Ambiguity>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.unresolved.is_empty()
    }
}

impl RewriteSystem {
    /// Builds a system from oriented rules; fails if a rule is not
    /// decreasing.
    pub fn new(name: &str, names: Vec<String>, rules: Vec<RewriteRule>) -> Result<Self, RewriteError> {
        let mut sys = RewriteSystem {
            name: name.to_string(),
            by_first: vec![Vec::new(); names.len()],
            names,
            rules: Vec::new(),
            star: None,
            watermark: 0,
            memo: LetterMemo::default(),
        };
        for r in rules {
            sys.check_rule(&r)?;
            sys.rules.push(r);
        }
        sys.reindex();
        Ok(sys)
    }

    /// Builds a system from relations `p = 0`, each oriented at its leading
    /// word.
    pub fn from_relations(name: &str, names: Vec<String>, relations: &[NCPoly<RatV>]) -> Result<Self, RewriteError> {
        let mut rules = Vec::new();
        for p in relations {
            if let Some(r) = orient(p)? {
                rules.push(r);
            }
        }
        Self::new(name, names, rules)
    }

    fn check_rule(&self, r: &RewriteRule) -> Result<(), RewriteError> {
        if let Some((w, _)) = r.rhs.leading() {
            if *w >= r.lhs {
                return Err(RewriteError::NotOrdered {
                    lhs: self.word_to_string(&r.lhs),
                    rhs: r.rhs.display_with(&self.names),
                });
            }
        }
        if r.lhs.is_empty() {
            return Err(RewriteError::Inconsistent);
        }
        Ok(())
    }

    fn reindex(&mut self) {
        self.by_first = vec![Vec::new(); self.names.len()];
        for (i, r) in self.rules.iter().enumerate() {
            self.by_first[r.lhs.letters()[0] as usize].push(i);
        }
        let rules = &self.rules;
        for v in &mut self.by_first {
            v.sort_by_key(|&i| (rules[i].lhs.len(), i));
        }
        self.memo = LetterMemo::default();
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn watermark(&self) -> usize {
        self.watermark
    }

    pub(crate) fn set_watermark(&mut self, w: usize) {
        self.watermark = w;
    }

    pub fn max_rule_degree(&self) -> usize {
        self.rules.iter().map(|r| r.lhs.len()).max().unwrap_or(0)
    }

    pub fn letter_index(&self, name: &str) -> Result<Letter, RewriteError> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| i as Letter)
            .ok_or_else(|| RewriteError::UnknownGenerator(name.to_string()))
    }

    pub fn word_to_string(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.letters().iter().map(|&l| self.names[l as usize].as_str()).collect::<Vec<_>>().join(" ")
    }

    /// Installs images of the generators under the involution.
    pub fn with_star(mut self, images: Vec<NCPoly<RatV>>) -> Self {
        assert_eq!(images.len(), self.names.len());
        self.star = Some(images);
        self
    }

    pub fn star_table(&self) -> Option<&[NCPoly<RatV>]> {
        self.star.as_deref()
    }

    /// Leftmost redex of `w`: position and rule index.
    pub fn find_redex(&self, w: &Word) -> Option<(usize, usize)> {
        let s = w.letters();
        for i in 0..s.len() {
            for &ri in &self.by_first[s[i] as usize] {
                let lhs = self.rules[ri].lhs.letters();
                if lhs.len() <= s.len() - i && &s[i..i + lhs.len()] == lhs {
                    return Some((i, ri));
                }
            }
        }
        None
    }

    /// True when some rule matches a suffix of `w`.
    fn has_suffix_redex(&self, w: &[Letter]) -> bool {
        let n = w.len();
        (0..n).any(|i| {
            self.by_first[w[i] as usize].iter().any(|&ri| {
                let lhs = self.rules[ri].lhs.letters();
                lhs.len() == n - i && &w[i..] == lhs
            })
        })
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.find_redex(w).is_none()
    }

    fn splice<C: Coeff>(&self, w: &Word, pos: usize, ri: usize, c: &C, into: &mut BTreeMap<Word, C>) {
        let r = &self.rules[ri];
        let s = w.letters();
        let (pre, post) = (&s[..pos], &s[pos + r.lhs.len()..]);
        for (rw, rc) in r.rhs.terms() {
            let mut nw = smallvec::SmallVec::with_capacity(pre.len() + rw.len() + post.len());
            nw.extend_from_slice(pre);
            nw.extend_from_slice(rw.letters());
            nw.extend_from_slice(post);
            let nc = c.scale(rc);
            add_into(into, Word(nw), nc);
        }
    }

    /// Reduces every word to normal form. Each word is rebuilt letter by
    /// letter from the empty word; appending a letter to a normal word can
    /// only create redexes ending at that letter, and those products are
    /// memoized.
    pub fn normal_form<C: Coeff>(&self, p: &NCPoly<C>) -> NCPoly<C> {
        let mut out: BTreeMap<Word, C> = BTreeMap::new();
        for (w, c) in p.terms() {
            let s = w.letters();
            let Some(k) = (1..=s.len()).find(|&k| self.suffix_redex(&s[..k]).is_some()) else {
                add_into(&mut out, w.clone(), c.clone());
                continue;
            };
            for (u, r) in self.fold_letters(vec![(Word::from_slice(&s[..k - 1]), RatV::one())], &s[k - 1..]) {
                add_into(&mut out, u, c.scale(&r));
            }
        }
        NCPoly::from_terms(out)
    }

    /// Normal form of `sum_i c_i u_i * tail` for normal words `u_i`.
    fn fold_letters(&self, start: Vec<(Word, RatV)>, tail: &[Letter]) -> Vec<(Word, RatV)> {
        let mut acc = start;
        for &x in tail {
            let mut next: BTreeMap<Word, RatV> = BTreeMap::new();
            for (u, a) in &acc {
                match self.append_letter(u, x) {
                    None => add_into(&mut next, u.concat(&Word::letter(x)), a.clone()),
                    Some(exp) => {
                        for (v, b) in exp.iter() {
                            add_into(&mut next, v.clone(), a * b);
                        }
                    }
                }
            }
            acc = next.into_iter().collect();
        }
        acc
    }

    /// Normal form of `u * x` for normal `u`; `None` when `u x` is itself
    /// normal.
    fn append_letter(&self, u: &Word, x: Letter) -> Option<Expansion> {
        let mut s: Vec<Letter> = u.letters().to_vec();
        s.push(x);
        let (pos, ri) = self.suffix_redex(&s)?;
        let key = (u.clone(), x);
        if let Some(e) = self.memo.0.lock().unwrap().get(&key) {
            return Some(e.clone());
        }
        let r = &self.rules[ri];
        let pre = Word::from_slice(&s[..pos]);
        let mut total: BTreeMap<Word, RatV> = BTreeMap::new();
        for (rw, rc) in r.rhs.terms() {
            for (v, b) in self.fold_letters(vec![(pre.clone(), rc.clone())], rw.letters()) {
                add_into(&mut total, v, b);
            }
        }
        let e: Expansion = Arc::new(total.into_iter().collect());
        let mut memo = self.memo.0.lock().unwrap();
        if memo.len() >= MEMO_LIMIT {
            memo.clear();
        }
        memo.insert(key, e.clone());
        Some(e)
    }

    /// A redex ending at the last letter, starting as far left as possible.
    fn suffix_redex(&self, w: &[Letter]) -> Option<(usize, usize)> {
        let n = w.len();
        (0..n).find_map(|i| {
            self.by_first[w[i] as usize]
                .iter()
                .find(|&&ri| {
                    let lhs = self.rules[ri].lhs.letters();
                    lhs.len() == n - i && &w[i..] == lhs
                })
                .map(|&ri| (i, ri))
        })
    }

    pub fn reduce_word(&self, w: &Word) -> NCPoly<RatV> {
        self.normal_form(&NCPoly::word(w.clone()))
    }

    /// Normal form of the product `p * r`.
    pub fn multiply<C: Coeff>(&self, p: &NCPoly<C>, r: &NCPoly<C>) -> NCPoly<C> {
        self.normal_form(&p.concat_mul(r))
    }

    /// Normal form of a product of several factors, reduced after each step.
    pub fn product<C: Coeff>(&self, factors: &[NCPoly<C>]) -> NCPoly<C> {
        let mut acc = NCPoly::one();
        for f in factors {
            acc = self.multiply(&acc, f);
        }
        acc
    }

    /// Involution: reverses words, maps generators through the star table
    /// and reduces. Coefficients are fixed because `q` is real.
    pub fn star<C: Coeff>(&self, p: &NCPoly<C>) -> Result<NCPoly<C>, RewriteError> {
        let table = self.star.as_ref().ok_or_else(|| RewriteError::NoStarImage(self.name.clone()))?;
        let mut total = NCPoly::zero();
        for (w, c) in p.terms() {
            let mut acc = NCPoly::<C>::constant(c.clone());
            for &l in w.letters().iter().rev() {
                let img = table[l as usize].map_coeffs(|x| C::from_ratv(x.clone()));
                acc = self.multiply(&acc, &img);
            }
            total.add_assign(&acc);
        }
        Ok(total)
    }

    /// All ambiguities with overlap word of length at most `degree_bound`.
    fn ambiguities(&self, degree_bound: usize) -> Vec<(Word, usize, usize, usize)> {
        let mut out = Vec::new();
        for (i, a) in self.rules.iter().enumerate() {
            let la = a.lhs.letters();
            for (j, b) in self.rules.iter().enumerate() {
                let lb = b.lhs.letters();
                // overlap: proper suffix of a equals proper prefix of b
                for k in 1..la.len().min(lb.len()) {
                    if la[la.len() - k..] == lb[..k] && la.len() + lb.len() - k <= degree_bound {
                        let mut w = la.to_vec();
                        w.extend_from_slice(&lb[k..]);
                        out.push((Word::from_slice(&w), i, j, la.len() - k));
                    }
                }
                // inclusion: b occurs inside a
                if i != j && lb.len() <= la.len() && la.len() <= degree_bound {
                    for pos in 0..=la.len() - lb.len() {
                        if la[pos..pos + lb.len()] == *lb {
                            out.push((a.lhs.clone(), i, j, pos));
                        }
                    }
                }
            }
        }
        out
    }

    /// S-polynomial of an ambiguity (rule `i` at 0, rule `j` at `pos_j`):
    /// difference of the two one-step reducts, both brought to normal form.
    fn s_poly(&self, word: &Word, i: usize, j: usize, pos_j: usize) -> NCPoly<RatV> {
        let one = RatV::one();
        let mut a = BTreeMap::new();
        self.splice(word, 0, i, &one, &mut a);
        let mut b = BTreeMap::new();
        self.splice(word, pos_j, j, &one, &mut b);
        let pa = self.normal_form(&NCPoly::from_terms(a));
        let pb = self.normal_form(&NCPoly::from_terms(b));
        pa.sub(&pb)
    }

    /// Checks every ambiguity up to `degree_bound`.
    pub fn check_local_confluence(&self, degree_bound: usize) -> ConfluenceReport {
        let amb = self.ambiguities(degree_bound);
        let mut unresolved = Vec::new();
        for (w, i, j, pos) in &amb {
            let d = self.s_poly(w, *i, *j, *pos);
            if !d.is_zero() {
                unresolved.push(Ambiguity { word: w.clone(), rules: (*i, *j), difference: d });
            }
        }
        ConfluenceReport { degree_bound, checked: amb.len(), unresolved }
    }

    /// Bounded completion: adds oriented consequences of unresolved
    /// ambiguities of length at most `degree_bound` until every such
    /// ambiguity resolves, keeping the rule set interreduced.
    pub fn complete(&self, degree_bound: usize) -> Result<RewriteSystem, RewriteError> {
        let mut sys = self.clone();
        sys.interreduce()?;
        let mut done: std::collections::HashSet<(Word, Word, Word, usize)> = Default::default();
        loop {
            let mut added = false;
            let mut amb = sys.ambiguities(degree_bound);
            amb.sort_by(|x, y| x.0.cmp(&y.0));
            for (w, i, j, pos) in amb {
                if i >= sys.rules.len() || j >= sys.rules.len() {
                    continue;
                }
                let key = (w.clone(), sys.rules[i].lhs.clone(), sys.rules[j].lhs.clone(), pos);
                if done.contains(&key) {
                    continue;
                }
                let d = sys.s_poly(&w, i, j, pos);
                if let Some(rule) = orient(&d)? {
                    sys.add_rule(rule)?;
                    added = true;
                    done.clear();
                    break;
                }
                done.insert(key);
            }
            if !added {
                break;
            }
        }
        sys.watermark = sys.watermark.max(degree_bound);
        Ok(sys)
    }

    /// Inserts a rule, removing rules whose lhs it divides (their relations
    /// are re-oriented) and renormalizing right-hand sides.
    fn add_rule(&mut self, rule: RewriteRule) -> Result<(), RewriteError> {
        let mut pending = vec![rule.lhs_minus_rhs()];
        while let Some(p) = pending.pop() {
            let p = self.normal_form(&p);
            let Some(r) = orient(&p)? else { continue };
            let (keep, evicted): (Vec<_>, Vec<_>) =
                std::mem::take(&mut self.rules).into_iter().partition(|x| x.lhs.find(r.lhs.letters()).is_none());
            self.rules = keep;
            pending.extend(evicted.into_iter().map(|x| x.lhs_minus_rhs()));
            self.rules.push(r);
            self.reindex();
        }
        self.normalize_rhs();
        Ok(())
    }

    fn interreduce(&mut self) -> Result<(), RewriteError> {
        let rules = std::mem::take(&mut self.rules);
        self.reindex();
        for r in rules {
            self.add_rule(r)?;
        }
        Ok(())
    }

    fn normalize_rhs(&mut self) {
        for i in 0..self.rules.len() {
            let rhs = self.normal_form(&self.rules[i].rhs);
            self.rules[i].rhs = rhs;
        }
        self.rules.sort_by(|a, b| a.lhs.cmp(&b.lhs));
        self.reindex();
    }

    /// All normal words of length at most `max_len` whose summed letter
    /// weight satisfies `accept`; `feasible` prunes prefixes by their
    /// partial weight and length.
    pub fn graded_basis<F, P, A>(&self, weight: F, max_len: usize, feasible: P, accept: A) -> Vec<Word>
    where
        F: Fn(Letter) -> Weight,
        P: Fn(&Weight, usize) -> bool,
        A: Fn(&Weight, usize) -> bool,
    {
        let mut out = Vec::new();
        let mut stack: Vec<Letter> = Vec::new();
        self.basis_dfs(&weight, max_len, &feasible, &accept, &mut stack, [0, 0], &mut out);
        out.sort();
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn basis_dfs<F, P, A>(&self, weight: &F, max_len: usize, feasible: &P, accept: &A, stack: &mut Vec<Letter>, w: Weight, out: &mut Vec<Word>)
    where
        F: Fn(Letter) -> Weight,
        P: Fn(&Weight, usize) -> bool,
        A: Fn(&Weight, usize) -> bool,
    {
        if accept(&w, stack.len()) {
            out.push(Word::from_slice(stack));
        }
        if stack.len() == max_len {
            return;
        }
        for l in 0..self.names.len() as Letter {
            let d = weight(l);
            let nw = [w[0] + d[0], w[1] + d[1]];
            if !feasible(&nw, stack.len() + 1) {
                continue;
            }
            stack.push(l);
            if !self.has_suffix_redex(stack) {
                self.basis_dfs(weight, max_len, feasible, accept, stack, nw, out);
            }
            stack.pop();
        }
    }
}

impl RewriteRule {
    fn lhs_minus_rhs(&self) -> NCPoly<RatV> {
        NCPoly::word(self.lhs.clone()).sub(&self.rhs)
    }
}

fn add_into<C: Coeff>(map: &mut BTreeMap<Word, C>, w: Word, c: C) {
    if c.is_zero() {
        return;
    }
    match map.entry(w) {
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

/// Orients `p = 0` as `lead -> -(p - lc*lead)/lc`; `None` for `p = 0`.
pub fn orient(p: &NCPoly<RatV>) -> Result<Option<RewriteRule>, RewriteError> {
    let Some((lw, lc)) = p.leading() else { return Ok(None) };
    if lw.is_empty() {
        return Err(RewriteError::Inconsistent);
    }
    let inv = lc.inv().expect("leading coefficient is nonzero");
    let minus_inv = -&inv;
    let lw = lw.clone();
    let rhs = NCPoly::from_terms(p.terms().filter(|(w, _)| **w != lw).map(|(w, c)| (w.clone(), c * &minus_inv)));
    Ok(Some(RewriteRule { lhs: lw, rhs }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: &[&str]) -> Vec<String> {
        n.iter().map(|s| s.to_string()).collect()
    }

    fn w(s: &[Letter]) -> Word {
        Word::from_slice(s)
    }

    #[test]
    fn commutative_toy() {
        // x = 0, y = 1; yx -> xy
        let r = RewriteRule { lhs: w(&[1, 0]), rhs: NCPoly::word(w(&[0, 1])) };
        let sys = RewriteSystem::new("toy", names(&["x", "y"]), vec![r]).unwrap();
        let rep = sys.check_local_confluence(6);
        assert!(rep.is_confluent());
        let nf = sys.reduce_word(&w(&[1, 1, 0, 1, 0]));
        assert_eq!(nf, NCPoly::word(w(&[0, 0, 1, 1, 1])));
    }

    #[test]
    fn broken_toy_diverges() {
        let r1 = RewriteRule { lhs: w(&[1, 0]), rhs: NCPoly::word(w(&[0, 1])) };
        let r2 = RewriteRule { lhs: w(&[1, 0]), rhs: NCPoly::term(RatV::from_int(2), w(&[0, 1])) };
        let sys = RewriteSystem::new("broken", names(&["x", "y"]), vec![r1, r2]).unwrap();
        let rep = sys.check_local_confluence(2);
        assert!(!rep.is_confluent());
    }

    #[test]
    fn rejects_increasing_rule() {
        let r = RewriteRule { lhs: w(&[0, 1]), rhs: NCPoly::word(w(&[1, 0])) };
        assert!(RewriteSystem::new("bad", names(&["x", "y"]), vec![r]).is_err());
    }

    #[test]
    fn completion_detects_collapse() {
        // yx = xy and yx = 2xy force xy = 0
        let rels = vec![
            NCPoly::word(w(&[1, 0])).sub(&NCPoly::word(w(&[0, 1]))),
            NCPoly::word(w(&[1, 0])).sub(&NCPoly::term(RatV::from_int(2), w(&[0, 1]))),
        ];
        let sys = RewriteSystem::from_relations("c", names(&["x", "y"]), &rels).unwrap().complete(4).unwrap();
        assert!(sys.reduce_word(&w(&[0, 1])).is_zero());
        assert!(sys.check_local_confluence(4).is_confluent());
    }

    #[test]
    fn graded_basis_free_commutative() {
        let r = RewriteRule { lhs: w(&[1, 0]), rhs: NCPoly::word(w(&[0, 1])) };
        let sys = RewriteSystem::new("toy", names(&["x", "y"]), vec![r]).unwrap();
        let b = sys.graded_basis(|_| [1, 0], 3, |_, _| true, |_, len| len == 3);
        assert_eq!(b.len(), 4);
    }
}
