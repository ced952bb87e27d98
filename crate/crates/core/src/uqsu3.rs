//! The quantized enveloping algebra U_q(su(3)) and its irreducible
//! representations V(n1, n2) in the orthonormal weight basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::qcoeff::{q_int, QError, Radical, RatV, SqrtFactor};

/// Generators of U_q(su(3)); `Ki` for `K_i^{-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Gen {
    E1,
    E2,
    F1,
    F2,
    K1,
    K1i,
    K2,
    K2i,
}

impl Gen {
    pub const ALL: [Gen; 8] = [Gen::E1, Gen::E2, Gen::F1, Gen::F2, Gen::K1, Gen::K1i, Gen::K2, Gen::K2i];

    pub fn index(self) -> usize {
        match self {
            Gen::E1 | Gen::F1 | Gen::K1 | Gen::K1i => 1,
            _ => 2,
        }
    }

    pub fn e(i: usize) -> Gen {
        if i == 1 { Gen::E1 } else { Gen::E2 }
    }

    pub fn f(i: usize) -> Gen {
        if i == 1 { Gen::F1 } else { Gen::F2 }
    }

    pub fn k(i: usize) -> Gen {
        if i == 1 { Gen::K1 } else { Gen::K2 }
    }

    pub fn k_inv(i: usize) -> Gen {
        if i == 1 { Gen::K1i } else { Gen::K2i }
    }

    pub fn is_k(self) -> bool {
        matches!(self, Gen::K1 | Gen::K1i | Gen::K2 | Gen::K2i)
    }

    /// `K_i <-> K_i^{-1}`; `None` for E and F.
    pub fn k_inverse(self) -> Option<Gen> {
        match self {
            Gen::K1 => Some(Gen::K1i),
            Gen::K1i => Some(Gen::K1),
            Gen::K2 => Some(Gen::K2i),
            Gen::K2i => Some(Gen::K2),
            _ => None,
        }
    }

    /// `E_i <-> F_i`, K fixed.
    pub fn swap_ef(self) -> Gen {
        match self {
            Gen::E1 => Gen::F1,
            Gen::F1 => Gen::E1,
            Gen::E2 => Gen::F2,
            Gen::F2 => Gen::E2,
            k => k,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::E1 => "E1",
            Gen::E2 => "E2",
            Gen::F1 => "F1",
            Gen::F2 => "F2",
            Gen::K1 => "K1",
            Gen::K1i => "K1i",
            Gen::K2 => "K2",
            Gen::K2i => "K2i",
        }
    }

    pub fn parse(s: &str) -> Option<Gen> {
        Gen::ALL.into_iter().find(|g| g.name() == s)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub type UqWord = Vec<Gen>;

/// Finite combination of generator words. Adjacent `K_i K_i^{-1}` pairs are
/// cancelled on construction.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UqElement {
    terms: BTreeMap<UqWord, RatV>,
}

fn cancel_k(w: &[Gen]) -> UqWord {
    let mut out: UqWord = Vec::with_capacity(w.len());
    for &g in w {
        if let (Some(&last), Some(inv)) = (out.last(), g.k_inverse()) {
            if last == inv {
                out.pop();
                continue;
            }
        }
        out.push(g);
    }
    out
}

impl UqElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(&[])
    }

    pub fn word(w: &[Gen]) -> Self {
        Self::term(RatV::one(), w)
    }

    pub fn gen(g: Gen) -> Self {
        Self::word(&[g])
    }

    pub fn term(c: RatV, w: &[Gen]) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn add_term(&mut self, w: &[Gen], c: RatV) {
        if c.is_zero() {
            return;
        }
        let w = cancel_k(w);
        let e = self.terms.entry(w.clone()).or_insert_with(RatV::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UqWord, &RatV)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &RatV) -> Self {
        let mut out = Self::zero();
        for (w, x) in &self.terms {
            out.add_term(w, x * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(&w, c1 * c2);
            }
        }
        out
    }

    /// `a b - q^{-1} b a`.
    pub fn q_commutator(a: &Self, b: &Self) -> Self {
        a.mul(b).add(&b.mul(a).scale(&-RatV::q_pow(-1)))
    }

    /// `x^n`.
    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Counit.
    pub fn counit(&self) -> RatV {
        self.terms.iter().filter(|(w, _)| w.iter().all(|g| g.is_k())).fold(RatV::zero(), |a, (_, c)| &a + c)
    }
}

impl fmt::Display for UqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let ws = if w.is_empty() { "1".to_string() } else { w.iter().map(|g| g.name()).collect::<Vec<_>>().join(" ") };
                if c.is_one() { ws } else { format!("({c}) {ws}") }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for UqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UqElement({self})")
    }
}

/// `theta(K_i) = K_i`, `theta(E_i) = F_i`, `theta(F_i) = E_i`, extended
/// anti-multiplicatively.
pub fn theta(h: &UqElement) -> UqElement {
    let mut out = UqElement::zero();
    for (w, c) in h.terms() {
        let r: UqWord = w.iter().rev().map(|g| g.swap_ef()).collect();
        out.add_term(&r, c.clone());
    }
    out
}

/// `K_i^* = K_i`, `E_i^* = F_i`; anti-multiplicative, and anti-linear only
/// through complex conjugation, which fixes the real field of coefficients.
pub fn star_uq(h: &UqElement) -> UqElement {
    theta(h)
}

/// Basis label `|n1, n2, j1, j2, m>` with `m2 = 2m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeightLabel {
    pub n1: i64,
    pub n2: i64,
    pub j1: i64,
    pub j2: i64,
    pub m2: i64,
}

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum RepError {
    #[error("invalid label {0:?}")]
    InvalidLabel(WeightLabel),
    #[error("negative highest weight ({0}, {1})")]
    NegativeWeight(i64, i64),
    #[error(transparent)]
    Coefficient(#[from] QError),
}

impl WeightLabel {
    pub fn new(n1: i64, n2: i64, j1: i64, j2: i64, m2: i64) -> Result<Self, RepError> {
        let l = WeightLabel { n1, n2, j1, j2, m2 };
        if l.is_valid() { Ok(l) } else { Err(RepError::InvalidLabel(l)) }
    }

    pub fn is_valid(&self) -> bool {
        let s = self.j1 + self.j2;
        self.n1 >= 0
            && self.n2 >= 0
            && (0..=self.n1).contains(&self.j1)
            && (0..=self.n2).contains(&self.j2)
            && self.m2.abs() <= s
            && (s - self.m2).rem_euclid(2) == 0
    }

    /// `(j1 + j2)/2 - m`, an integer for valid labels.
    pub fn lower_steps(&self) -> i64 {
        (self.j1 + self.j2 - self.m2) / 2
    }

    /// `(j1 + j2)/2 + m`.
    pub fn upper_steps(&self) -> i64 {
        (self.j1 + self.j2 + self.m2) / 2
    }

    /// Exponent of `v` in the `K_1` eigenvalue `q^m`.
    pub fn k1_exponent(&self) -> i32 {
        (2 * self.m2) as i32
    }

    /// Exponent of `v` in the `K_2` eigenvalue
    /// `q^{3/4 (j1-j2) + 1/2 (n2-n1-m)}`.
    pub fn k2_exponent(&self) -> i32 {
        (3 * (self.j1 - self.j2) + 2 * (self.n2 - self.n1) - self.m2) as i32
    }

    fn with(&self, j1: i64, j2: i64, m2: i64) -> WeightLabel {
        WeightLabel { j1, j2, m2, ..*self }
    }
}

impl fmt::Display for WeightLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{},{},{},{},{}/2>", self.n1, self.n2, self.j1, self.j2, self.m2)
    }
}

/// `(n1+1)(n2+1)(n1+n2+2)/2`.
pub fn dim_formula(n1: i64, n2: i64) -> i64 {
    (n1 + 1) * (n2 + 1) * (n1 + n2 + 2) / 2
}

/// All labels of V(n1, n2), ordered lexicographically by `(j1, j2, 2m)`.
pub fn rep_basis(n1: i64, n2: i64) -> Result<Vec<WeightLabel>, RepError> {
    if n1 < 0 || n2 < 0 {
        return Err(RepError::NegativeWeight(n1, n2));
    }
    let mut out = Vec::new();
    for j1 in 0..=n1 {
        for j2 in 0..=n2 {
            let s = j1 + j2;
            for m2 in (-s..=s).step_by(2) {
                out.push(WeightLabel { n1, n2, j1, j2, m2 });
            }
        }
    }
    Ok(out)
}

fn qi(n: i64) -> SqrtFactor {
    SqrtFactor::QInt { n, mult: 1 }
}

fn qi_inv(n: i64) -> SqrtFactor {
    SqrtFactor::QInt { n, mult: -1 }
}

/// `A_{j1,j2}` of V(n1, n2).
pub fn coeff_a(n1: i64, n2: i64, j1: i64, j2: i64) -> Result<Radical, QError> {
    Radical::sqrt_factored(&[qi(n1 - j1), qi(n2 + j1 + 2), qi(j1 + 1), qi_inv(j1 + j2 + 1), qi_inv(j1 + j2 + 2)])
}

/// `B_{j1,j2}` of V(n1, n2); `1` when `j1 + j2 = 0`.
pub fn coeff_b(n1: i64, n2: i64, j1: i64, j2: i64) -> Result<Radical, QError> {
    if j1 + j2 == 0 {
        return Ok(Radical::one());
    }
    Radical::sqrt_factored(&[qi(n1 + j2 + 1), qi(n2 - j2 + 1), qi(j2), qi_inv(j1 + j2), qi_inv(j1 + j2 + 1)])
}

/// Action of one generator on one basis vector. Targets outside the
/// representation contribute zero.
pub fn act_generator(g: Gen, label: &WeightLabel) -> Result<Vec<(WeightLabel, Radical)>, RepError> {
    if !label.is_valid() {
        return Err(RepError::InvalidLabel(*label));
    }
    let l = label;
    let mut out = Vec::new();
    let mut push = |t: WeightLabel, c: Radical| {
        if t.is_valid() && !c.is_zero() {
            out.push((t, c));
        }
    };
    match g {
        Gen::K1 => push(*l, RatV::v_pow(l.k1_exponent()).into()),
        Gen::K1i => push(*l, RatV::v_pow(-l.k1_exponent()).into()),
        Gen::K2 => push(*l, RatV::v_pow(l.k2_exponent()).into()),
        Gen::K2i => push(*l, RatV::v_pow(-l.k2_exponent()).into()),
        Gen::E1 => {
            let c = Radical::sqrt_factored(&[qi(l.lower_steps()), qi(l.upper_steps() + 1)])?;
            push(l.with(l.j1, l.j2, l.m2 + 2), c);
        }
        Gen::E2 => {
            let t1 = l.with(l.j1 + 1, l.j2, l.m2 - 1);
            if t1.is_valid() {
                let c = &Radical::sqrt_factored(&[qi(l.lower_steps() + 1)])? * &coeff_a(l.n1, l.n2, l.j1, l.j2)?;
                push(t1, c);
            }
            let t2 = l.with(l.j1, l.j2 - 1, l.m2 - 1);
            if t2.is_valid() {
                let c = &Radical::sqrt_factored(&[qi(l.upper_steps())])? * &coeff_b(l.n1, l.n2, l.j1, l.j2)?;
                push(t2, c);
            }
        }
        Gen::F1 | Gen::F2 => {
            // transpose of the E matrix: <t| F |l> = <l| E |t>
            let e = g.swap_ef();
            for t in candidate_sources(e, l) {
                for (img, c) in act_generator(e, &t)? {
                    if img == *l {
                        push(t, c);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Labels `t` for which `<l| e |t>` can be nonzero.
fn candidate_sources(e: Gen, l: &WeightLabel) -> Vec<WeightLabel> {
    let c = match e {
        Gen::E1 => vec![l.with(l.j1, l.j2, l.m2 - 2)],
        Gen::E2 => vec![l.with(l.j1 - 1, l.j2, l.m2 + 1), l.with(l.j1, l.j2 + 1, l.m2 + 1)],
        _ => unreachable!(),
    };
    c.into_iter().filter(WeightLabel::is_valid).collect()
}

/// Exact sparse operator on V(n1, n2); key `(target, source)` indices into
/// the basis from [`rep_basis`].
#[derive(Clone, PartialEq, Eq)]
pub struct RepMatrix {
    pub n1: i64,
    pub n2: i64,
    dim: usize,
    entries: BTreeMap<(usize, usize), Radical>,
}

impl fmt::Debug for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RepMatrix(V({},{}), {} entries)", self.n1, self.n2, self.entries.len())
    }
}

struct RepData {
    basis: Vec<WeightLabel>,
    index: HashMap<WeightLabel, usize>,
}

fn rep_data(n1: i64, n2: i64) -> Arc<RepData> {
    static CACHE: OnceLock<Mutex<HashMap<(i64, i64), Arc<RepData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut guard = cache.lock().unwrap();
    guard
        .entry((n1, n2))
        .or_insert_with(|| {
            let basis = rep_basis(n1, n2).expect("non-negative weights");
            let index = basis.iter().enumerate().map(|(i, l)| (*l, i)).collect();
            Arc::new(RepData { basis, index })
        })
        .clone()
}

/// Index of a label in the ordered basis of its representation.
pub fn label_index(l: &WeightLabel) -> Option<usize> {
    rep_data(l.n1, l.n2).index.get(l).copied()
}

impl RepMatrix {
    pub fn zero(n1: i64, n2: i64) -> Self {
        let dim = rep_data(n1, n2).basis.len();
        RepMatrix { n1, n2, dim, entries: BTreeMap::new() }
    }

    pub fn identity(n1: i64, n2: i64) -> Self {
        let mut m = Self::zero(n1, n2);
        for i in 0..m.dim {
            m.entries.insert((i, i), Radical::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> Vec<WeightLabel> {
        rep_data(self.n1, self.n2).basis.clone()
    }

    pub fn get(&self, target: usize, source: usize) -> Radical {
        self.entries.get(&(target, source)).cloned().unwrap_or_else(Radical::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Radical)> {
        self.entries.iter()
    }

    fn add_entry(&mut self, key: (usize, usize), c: Radical) {
        let e = self.entries.entry(key).or_insert_with(Radical::zero);
        e.add_assign_ref(&c);
        if e.is_zero() {
            self.entries.remove(&key);
        }
    }

    /// Matrix of one generator.
    pub fn generator(g: Gen, n1: i64, n2: i64) -> Result<Self, RepError> {
        static CACHE: OnceLock<Mutex<HashMap<(Gen, i64, i64), RepMatrix>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(m) = cache.lock().unwrap().get(&(g, n1, n2)) {
            return Ok(m.clone());
        }
        let data = rep_data(n1, n2);
        let mut m = Self::zero(n1, n2);
        for (s, l) in data.basis.iter().enumerate() {
            for (t, c) in act_generator(g, l)? {
                m.add_entry((data.index[&t], s), c);
            }
        }
        cache.lock().unwrap().insert((g, n1, n2), m.clone());
        Ok(m)
    }

    /// Matrix of a general element; words act right-to-left as operator
    /// products.
    pub fn element(h: &UqElement, n1: i64, n2: i64) -> Result<Self, RepError> {
        let mut total = Self::zero(n1, n2);
        for (w, c) in h.terms() {
            let mut m = Self::identity(n1, n2);
            for &g in w {
                m = m.mul(&Self::generator(g, n1, n2)?);
            }
            total = total.add(&m.scale(&Radical::from(c.clone())));
        }
        Ok(total)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!((self.n1, self.n2), (other.n1, other.n2));
        let mut by_row: BTreeMap<usize, Vec<(usize, &Radical)>> = BTreeMap::new();
        for (&(k, j), c) in &other.entries {
            by_row.entry(k).or_default().push((j, c));
        }
        let mut out = Self::zero(self.n1, self.n2);
        for (&(i, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    out.add_entry((i, j), a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.entries {
            out.add_entry(k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Radical::from(RatV::from_int(-1))))
    }

    pub fn scale(&self, c: &Radical) -> Self {
        let mut out = Self::zero(self.n1, self.n2);
        for (&k, x) in &self.entries {
            out.add_entry(k, x * c);
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.n1, self.n2);
        for (&(i, j), x) in &self.entries {
            out.entries.insert((j, i), x.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Some nonzero entry, as `(target, source, value)`.
    pub fn witness(&self) -> Option<(WeightLabel, WeightLabel, Radical)> {
        let basis = rep_data(self.n1, self.n2);
        self.entries.iter().next().map(|(&(i, j), c)| (basis.basis[i], basis.basis[j], c.clone()))
    }

    /// Column `source` as a sparse vector of labels.
    pub fn column(&self, source: usize) -> Vec<(WeightLabel, Radical)> {
        let basis = rep_data(self.n1, self.n2);
        self.entries.iter().filter(|((_, j), _)| *j == source).map(|(&(i, _), c)| (basis.basis[i], c.clone())).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub n1: i64,
    pub n2: i64,
    pub dim: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Checks every defining relation of U_q(su(3)) on V(n1, n2), exactly.
pub fn verify_relations(n1: i64, n2: i64) -> Result<RelationReport, RepError> {
    let g = |x: Gen| RepMatrix::generator(x, n1, n2);
    let s = |c: RatV| Radical::from(c);
    let q = RatV::q_pow(1);
    let mut checks = Vec::new();
    let mut check = |name: String, diff: RepMatrix| {
        let witness = diff.witness().map(|(t, src, c)| format!("<{t}| ... |{src}> = {c}"));
        checks.push(RelationCheck { name, pass: diff.is_zero(), witness });
    };
    let id = RepMatrix::identity(n1, n2);
    check("[K1,K2]=0".into(), g(Gen::K1)?.mul(&g(Gen::K2)?).sub(&g(Gen::K2)?.mul(&g(Gen::K1)?)));
    for i in 1..=2 {
        let (k, ki, e, f) = (g(Gen::k(i))?, g(Gen::k_inv(i))?, g(Gen::e(i))?, g(Gen::f(i))?);
        check(format!("K{i}K{i}^-1=1"), k.mul(&ki).sub(&id));
        check(format!("K{i}E{i}=qE{i}K{i}"), k.mul(&e).sub(&e.mul(&k).scale(&s(q.clone()))));
        check(format!("K{i}F{i}=q^-1F{i}K{i}"), k.mul(&f).sub(&f.mul(&k).scale(&s(RatV::q_pow(-1)))));
        let qmq = &q - &RatV::q_pow(-1);
        let rhs = k.mul(&k).sub(&ki.mul(&ki)).scale(&s(qmq.inv().unwrap()));
        check(format!("[E{i},F{i}]=(K{i}^2-K{i}^-2)/(q-q^-1)"), e.mul(&f).sub(&f.mul(&e)).sub(&rhs));
        check(format!("F{i}=transpose(E{i})"), f.sub(&e.transpose()));
        let j = 3 - i;
        let (ej, fj) = (g(Gen::e(j))?, g(Gen::f(j))?);
        let half = s(RatV::v_pow(-2));
        check(format!("K{i}E{j}=q^-1/2E{j}K{i}"), k.mul(&ej).sub(&ej.mul(&k).scale(&half)));
        check(format!("K{i}F{j}=q^1/2F{j}K{i}"), k.mul(&fj).sub(&fj.mul(&k).scale(&s(RatV::v_pow(2)))));
        check(format!("[E{i},F{j}]=0"), e.mul(&fj).sub(&fj.mul(&e)));
        let two = s(q_int(2));
        let serre = |a: &RepMatrix, b: &RepMatrix| a.mul(a).mul(b).add(&b.mul(a).mul(a)).sub(&a.mul(b).mul(a).scale(&two));
        check(format!("Serre E{i}^2E{j}"), serre(&e, &ej));
        check(format!("Serre F{i}^2F{j}"), serre(&f, &fj));
    }
    Ok(RelationReport { n1, n2, dim: id.dim(), checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_counts() {
        assert_eq!(rep_basis(0, 0).unwrap().len(), 1);
        assert_eq!(rep_basis(1, 0).unwrap().len(), 3);
        assert_eq!(rep_basis(1, 1).unwrap().len(), 8);
        for n1 in 0..5 {
            for n2 in 0..5 {
                assert_eq!(rep_basis(n1, n2).unwrap().len() as i64, dim_formula(n1, n2));
            }
        }
    }

    #[test]
    fn generator_examples() {
        let l = WeightLabel::new(1, 1, 1, 0, 1).unwrap();
        let k1 = act_generator(Gen::K1, &l).unwrap();
        assert_eq!(k1, vec![(l, Radical::from(RatV::v_pow(2)))]);
        // maximal m is killed by E1
        assert!(act_generator(Gen::E1, &l).unwrap().is_empty());
        // E2 |n,n,0,0,0> = sqrt([n][n+2]/[2]) |n,n,1,0,-1/2>
        for n in 1..4 {
            let l = WeightLabel::new(n, n, 0, 0, 0).unwrap();
            let img = act_generator(Gen::E2, &l).unwrap();
            let expected = Radical::sqrt_factored(&[qi(n), qi(n + 2), qi_inv(2)]).unwrap();
            assert_eq!(img, vec![(WeightLabel::new(n, n, 1, 0, -1).unwrap(), expected)]);
        }
        let l0 = WeightLabel::new(0, 0, 0, 0, 0).unwrap();
        assert!(act_generator(Gen::E2, &l0).unwrap().is_empty());
    }

    #[test]
    fn relations_small() {
        for (n1, n2) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            let r = verify_relations(n1, n2).unwrap();
            assert!(r.pass(), "{r:?}");
        }
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&UqElement::gen(Gen::E1)), UqElement::gen(Gen::F1));
        assert_eq!(theta(&UqElement::word(&[Gen::F2, Gen::F1])), UqElement::word(&[Gen::E1, Gen::E2]));
        assert_eq!(star_uq(&UqElement::gen(Gen::K2i)), UqElement::gen(Gen::K2i));
        assert_eq!(star_uq(&UqElement::word(&[Gen::E1, Gen::E2])), UqElement::word(&[Gen::F2, Gen::F1]));
        assert_eq!(UqElement::word(&[Gen::K1, Gen::E1, Gen::K2, Gen::K2i, Gen::F1]), UqElement::word(&[Gen::K1, Gen::E1, Gen::F1]));
    }
}
