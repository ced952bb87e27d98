//! The Haar state on filtered slices of A(S^5_q), the modular automorphism
//! `sigma(x) = K |> x <| K` with `K = (K1 K2)^-4`, and twisted Hochschild
//! cochains.

use std::collections::{BTreeMap, HashMap};
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use rand::Rng;

use crate::exactla::{kernel, to_dense, SparseMatrix};
use crate::ncpoly::{Coeff, NCPoly, Word};
use crate::qalgebras::actions::{act_left_s5, s5_left_k_exponents};
use crate::qalgebras::{act_left, act_right, bidegree, embed_s5, s5q, z_letter, zstar_letter};
use crate::qcoeff::RatV;
use crate::uqsu3::{Gen, UqElement};

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum HaarError {
    #[error("invariant functionals on the ({0},{0}) slice form a space of dimension {1}, not 1")]
    NotUnique(usize, usize),
    #[error("word `{0}` lies outside the ({1},{1}) slice")]
    OutOfSlice(String, usize),
    #[error("argument `{0}` escapes the cochain truncation")]
    Escapes(String),
    #[error("cochain of arity {expected} given {found} arguments")]
    Arity { expected: usize, found: usize },
}

/// `K = (K1 K2)^-4` as an element of U_q(su(3)).
pub fn modular_element() -> UqElement {
    UqElement::word(&[Gen::K1i, Gen::K1i, Gen::K1i, Gen::K1i, Gen::K2i, Gen::K2i, Gen::K2i, Gen::K2i])
}

/// `K |> x <| K` for `x` in A(SU_q(3)).
pub fn sigma_suq3<C: Coeff>(x: &NCPoly<C>) -> NCPoly<C> {
    let k = modular_element();
    act_right(&act_left(&k, x), &k)
}

/// Exponent of `v` in the combined left and right `K1 K2` eigenvalue of
/// each S^5_q letter. The right eigenvalues are read off the embedded
/// letters.
fn s5_kk_exponents() -> &'static [i32] {
    static T: OnceLock<Vec<i32>> = OnceLock::new();
    T.get_or_init(|| {
        let left = s5_left_k_exponents();
        (0..6u8)
            .map(|l| {
                let e = embed_s5(&NCPoly::<RatV>::letter(l));
                let img = act_right(&e, &UqElement::word(&[Gen::K1, Gen::K2]));
                let (w, c) = e.leading().unwrap();
                let ratio = img.coeff(w).expect("K acts diagonally") / c;
                assert!(ratio.is_monomial() && img == e.scale(&ratio), "K acts diagonally");
                left[l as usize][0] + left[l as usize][1] + ratio.numer().low_exp()
            })
            .collect()
    })
}

/// `sigma` eigenvalue exponent of a word: `sigma(w) = v^{-4 e} w`.
pub fn sigma_weight(w: &Word) -> i32 {
    let t = s5_kk_exponents();
    w.letters().iter().map(|&l| t[l as usize]).sum()
}

/// `sigma` on A(S^5_q), diagonal on monomials.
pub fn sigma<C: Coeff>(x: &NCPoly<C>) -> NCPoly<C> {
    let mut out = NCPoly::zero();
    for (w, c) in x.terms() {
        out.add_term(w.clone(), c.scale(&RatV::v_pow(-4 * sigma_weight(w))));
    }
    out
}

/// Normal S^5_q words of bidegree at most `(d, d)`.
pub fn slice_words(d: usize) -> Vec<Word> {
    let dd = d as i64;
    s5q().system().graded_basis(
        |l| if l < 3 { [1, 0] } else { [0, 1] },
        2 * d,
        |w, _| w[0] <= dd && w[1] <= dd,
        |_, _| true,
    )
}

/// Haar state values on the normal words of the `(d, d)` slice.
#[derive(Clone, Debug)]
pub struct HaarTable {
    pub d: usize,
    pub values: BTreeMap<Word, RatV>,
}

fn left_weight(w: &Word) -> [i32; 2] {
    let k = s5_left_k_exponents();
    w.letters().iter().fold([0, 0], |a, &l| [a[0] + k[l as usize][0], a[1] + k[l as usize][1]])
}

/// The slice words and the linear conditions a left-invariant functional
/// satisfies on them: vanishing on words of nonzero left weight and on the
/// left images of `E1, E2, F1, F2`. Columns follow the word order.
pub fn invariance_system(d: usize) -> (Vec<Word>, SparseMatrix) {
    let words = slice_words(d);
    let pos = |w: &Word| words.binary_search(w).ok();
    let mut rows: Vec<Vec<(usize, RatV)>> = Vec::new();
    for (i, w) in words.iter().enumerate() {
        if left_weight(w) != [0, 0] {
            rows.push(vec![(i, RatV::one())]);
        }
    }
    for w in &words {
        for g in [Gen::E1, Gen::E2, Gen::F1, Gen::F2] {
            let img = act_left_s5(&UqElement::gen(g), &NCPoly::<RatV>::word(w.clone()));
            if img.is_zero() {
                continue;
            }
            let row: Option<Vec<(usize, RatV)>> = img.terms().map(|(u, c)| pos(u).map(|j| (j, c.clone()))).collect();
            rows.push(row.expect("the left action preserves bidegree slices"));
        }
    }
    let mut m = SparseMatrix::zeros(rows.len(), words.len());
    for (i, r) in rows.iter().enumerate() {
        for (j, c) in r {
            m.set(i, *j, c.clone());
        }
    }
    (words, m)
}

impl HaarTable {
    /// Solves for the left-invariant normalized functional on the slice.
    pub fn solve(d: usize) -> Result<HaarTable, HaarError> {
        let (words, m) = invariance_system(d);
        let pos = |w: &Word| words.binary_search(w).ok();
        let ker = kernel(&m);
        if ker.dim() != 1 {
            return Err(HaarError::NotUnique(d, ker.dim()));
        }
        let v = to_dense(ker.basis().next().unwrap(), words.len());
        let one = &v[pos(&Word::empty()).unwrap()];
        if one.is_zero() {
            return Err(HaarError::NotUnique(d, 0));
        }
        let inv = one.inv().unwrap();
        let values = words.into_iter().zip(v).filter(|(_, x)| !x.is_zero()).map(|(w, x)| (w, &x * &inv)).collect();
        Ok(HaarTable { d, values })
    }

    /// `h(x)` for `x` in the slice (reduced first).
    pub fn eval<C: Coeff>(&self, x: &NCPoly<C>) -> Result<C, HaarError> {
        let x = s5q().reduce(x);
        let mut total = C::zero();
        for (w, c) in x.terms() {
            let (a, b) = bidegree(w);
            if a > self.d || b > self.d {
                return Err(HaarError::OutOfSlice(s5q().system().word_to_string(w), self.d));
            }
            if let Some(h) = self.values.get(w) {
                total.add_assign(&c.scale(h));
            }
        }
        Ok(total)
    }
}

/// The Haar table for slice `d`, solved once and cached.
pub fn haar_table(d: usize) -> Result<Arc<HaarTable>, HaarError> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<HaarTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&d) {
        return Ok(t.clone());
    }
    let t = Arc::new(HaarTable::solve(d)?);
    cache.lock().unwrap().insert(d, t.clone());
    Ok(t)
}

pub fn haar_state(x: &NCPoly<RatV>, d: usize) -> Result<RatV, HaarError> {
    haar_table(d)?.eval(x)
}

/// Smallest `d` whose slice contains every term of the reduced `x`.
pub fn slice_of(x: &NCPoly<RatV>) -> usize {
    s5q().reduce(x).terms().map(|(w, _)| {
        let (a, b) = bidegree(w);
        a.max(b)
    }).max().unwrap_or(0)
}

/// `h(xy) = h(sigma(y) x)`, both sides exact.
pub fn twisted_trace_check(x: &NCPoly<RatV>, y: &NCPoly<RatV>, d: usize) -> Result<bool, HaarError> {
    let s5 = s5q();
    let t = haar_table(d)?;
    Ok(t.eval(&s5.mul(x, y))? == t.eval(&s5.mul(&sigma(y), x))?)
}

/// Checks the twisted trace property on every pair of normal words whose
/// bidegrees sum to at most `(d, d)`. Returns the number of pairs and the
/// first failing pair, if any.
pub fn twisted_trace_exhaustive(d: usize) -> Result<(usize, Option<(Word, Word)>), HaarError> {
    let words = slice_words(d);
    let mut count = 0;
    for x in &words {
        let (a, b) = bidegree(x);
        for y in &words {
            let (c, e) = bidegree(y);
            if a + c > d || b + e > d {
                continue;
            }
            count += 1;
            if !twisted_trace_check(&NCPoly::word(x.clone()), &NCPoly::word(y.clone()), d)? {
                return Ok((count, Some((x.clone(), y.clone()))));
            }
        }
    }
    Ok((count, None))
}

/// `h(a a^*)` evaluated at `q0`, on the smallest slice containing `a a^*`.
pub fn positivity_probe(a: &NCPoly<RatV>, q0: f64) -> Result<f64, HaarError> {
    let s5 = s5q();
    let x = s5.mul(a, &s5.star(a));
    Ok(haar_state(&x, slice_of(&x))?.eval_f64(q0))
}

/// Random element of total degree at most `deg` with small integer
/// coefficients times powers of `q^(1/2)`.
pub fn random_element<R: Rng>(rng: &mut R, deg: usize, terms: usize) -> NCPoly<RatV> {
    let letters: Vec<u8> = (1..=3).map(z_letter).chain((1..=3).map(zstar_letter)).collect();
    let mut x = NCPoly::zero();
    for _ in 0..terms {
        let len = rng.gen_range(0..=deg);
        let w: Vec<u8> = (0..len).map(|_| letters[rng.gen_range(0..6)]).collect();
        let c = &RatV::from_int(rng.gen_range(-3..=3)) * &RatV::v_pow(2 * rng.gen_range(-2..=2));
        x.add_term(Word::from_slice(&w), c);
    }
    s5q().reduce(&x)
}

/// A multilinear functional on A(S^5_q)^{arity}, defined through its
/// values on tuples of normal words.
#[derive(Clone, Debug)]
pub enum Cochain {
    /// Pseudo-random integer values on tuples of total `sigma` weight 0 and
    /// bidegree at most `bound`, zero on other tuples. Such cochains are
    /// fixed by `lambda_sigma^{arity}`, i.e. twisted.
    RandomTwisted { arity: usize, bound: (usize, usize), seed: u64 },
    Table { arity: usize, values: BTreeMap<Vec<Word>, RatV> },
    B(Box<Cochain>),
    Lambda(Box<Cochain>),
}

pub fn b_sigma(phi: &Cochain) -> Cochain {
    Cochain::B(Box::new(phi.clone()))
}

pub fn lambda_sigma(phi: &Cochain) -> Cochain {
    Cochain::Lambda(Box::new(phi.clone()))
}

fn sign(i: usize) -> RatV {
    RatV::from_int(if i.is_multiple_of(2) { 1 } else { -1 })
}

impl Cochain {
    pub fn arity(&self) -> usize {
        match self {
            Cochain::RandomTwisted { arity, .. } | Cochain::Table { arity, .. } => *arity,
            Cochain::B(p) => p.arity() + 1,
            Cochain::Lambda(p) => p.arity(),
        }
    }

    fn eval_words(&self, args: &[Word]) -> Result<RatV, HaarError> {
        match self {
            Cochain::RandomTwisted { bound, seed, .. } => {
                for w in args {
                    let (a, b) = bidegree(w);
                    if a > bound.0 || b > bound.1 {
                        return Err(HaarError::Escapes(s5q().system().word_to_string(w)));
                    }
                }
                if args.iter().map(sigma_weight).sum::<i32>() != 0 {
                    return Ok(RatV::zero());
                }
                let mut h = std::collections::hash_map::DefaultHasher::new();
                seed.hash(&mut h);
                args.hash(&mut h);
                Ok(RatV::from_int((h.finish() % 7) as i64 - 3))
            }
            Cochain::Table { values, .. } => Ok(values.get(args).cloned().unwrap_or_else(RatV::zero)),
            _ => {
                let polys: Vec<NCPoly<RatV>> = args.iter().map(|w| NCPoly::word(w.clone())).collect();
                self.eval(&polys)
            }
        }
    }

    /// Multilinear evaluation on reduced polynomial arguments.
    pub fn eval(&self, args: &[NCPoly<RatV>]) -> Result<RatV, HaarError> {
        if args.len() != self.arity() {
            return Err(HaarError::Arity { expected: self.arity(), found: args.len() });
        }
        let s5 = s5q();
        match self {
            Cochain::B(phi) => {
                let n = args.len() - 2;
                let mut total = RatV::zero();
                for i in 0..=n {
                    let mut a: Vec<NCPoly<RatV>> = args[..i].to_vec();
                    a.push(s5.mul(&args[i], &args[i + 1]));
                    a.extend_from_slice(&args[i + 2..]);
                    total = &total + &(&sign(i) * &phi.eval(&a)?);
                }
                let mut a = vec![s5.mul(&sigma(&args[n + 1]), &args[0])];
                a.extend_from_slice(&args[1..=n]);
                Ok(&total + &(&sign(n + 1) * &phi.eval(&a)?))
            }
            Cochain::Lambda(phi) => {
                let n = args.len() - 1;
                let mut a = vec![sigma(&args[n])];
                a.extend_from_slice(&args[..n]);
                Ok(&sign(n) * &phi.eval(&a)?)
            }
            _ => {
                // expand multilinearly over the terms of each argument
                let mut total = RatV::zero();
                let mut stack: Vec<(Word, RatV)> = Vec::new();
                self.expand(args, 0, &RatV::one(), &mut stack, &mut total)?;
                Ok(total)
            }
        }
    }

    fn expand(&self, args: &[NCPoly<RatV>], i: usize, c: &RatV, stack: &mut Vec<(Word, RatV)>, total: &mut RatV) -> Result<(), HaarError> {
        if i == args.len() {
            let words: Vec<Word> = stack.iter().map(|(w, _)| w.clone()).collect();
            let v = self.eval_words(&words)?;
            *total = &*total + &(c * &v);
            return Ok(());
        }
        for (w, x) in args[i].terms() {
            stack.push((w.clone(), x.clone()));
            self.expand(args, i + 1, &(c * x), stack, total)?;
            stack.pop();
        }
        Ok(())
    }
}

/// Words `1, z_j, z_j^*`.
pub fn degree_one_words() -> Vec<Word> {
    let mut out = vec![Word::empty()];
    out.extend((1..=3).map(|j| Word::letter(z_letter(j))));
    out.extend((1..=3).map(|j| Word::letter(zstar_letter(j))));
    out
}

/// Evaluates `b_sigma(b_sigma phi)` on every tuple of `words`; returns the
/// first nonzero value's tuple, if any.
pub fn bb_vanishes(phi: &Cochain, words: &[Word]) -> Result<Option<Vec<Word>>, HaarError> {
    let bb = b_sigma(&b_sigma(phi));
    let k = bb.arity();
    let mut idx = vec![0usize; k];
    loop {
        let args: Vec<NCPoly<RatV>> = idx.iter().map(|&i| NCPoly::word(words[i].clone())).collect();
        if !bb.eval(&args)?.is_zero() {
            return Ok(Some(idx.iter().map(|&i| words[i].clone()).collect()));
        }
        let mut p = 0;
        loop {
            if p == k {
                return Ok(None);
            }
            idx[p] += 1;
            if idx[p] < words.len() {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn z(j: usize) -> NCPoly<RatV> {
        NCPoly::letter(z_letter(j))
    }

    fn zs(j: usize) -> NCPoly<RatV> {
        NCPoly::letter(zstar_letter(j))
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&NCPoly::<RatV>::one()), NCPoly::one());
        assert_eq!(sigma(&z(3)), z(3).scale(&RatV::q_pow(-4)));
        for j in 1..=3 {
            for x in [z(j), zs(j)] {
                assert_eq!(embed_s5(&sigma(&x)), sigma_suq3(&embed_s5(&x)));
            }
        }
    }

    #[test]
    fn haar_small_slice() {
        let t = haar_table(1).unwrap();
        assert_eq!(t.eval(&NCPoly::<RatV>::one()).unwrap(), RatV::one());
        let s5 = s5q();
        let mut sum = RatV::zero();
        for j in 1..=3 {
            assert!(t.eval(&z(j)).unwrap().is_zero());
            sum = &sum + &t.eval(&s5.mul(&z(j), &zs(j))).unwrap();
        }
        assert_eq!(sum, RatV::one());
        assert!(t.eval(&s5.mul(&z(1), &z(1))).is_err());
    }

    #[test]
    fn sigma_star_sigma_is_star_on_low_degree() {
        let s5 = s5q();
        for w in slice_words(2).into_iter().filter(|w| w.len() <= 2) {
            let x = NCPoly::<RatV>::word(w);
            assert_eq!(sigma(&s5.star(&sigma(&x))), s5.star(&x));
        }
    }

    #[test]
    fn cochain_instances() {
        let phi = Cochain::RandomTwisted { arity: 1, bound: (2, 2), seed: 7 };
        let b = b_sigma(&phi);
        let s5 = s5q();
        let (a0, a1) = (z(1), zs(1));
        let direct = &phi.eval(&[s5.mul(&a0, &a1)]).unwrap() - &phi.eval(&[s5.mul(&sigma(&a1), &a0)]).unwrap();
        assert_eq!(b.eval(&[a0.clone(), a1.clone()]).unwrap(), direct);
        assert_eq!(lambda_sigma(&phi).eval(std::slice::from_ref(&a0)).unwrap(), phi.eval(&[sigma(&a0)]).unwrap());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..5 {
            let x = random_element(&mut rng, 2, 3);
            assert!(positivity_probe(&x, 0.5).unwrap() >= -1e-12);
        }
    }
}
