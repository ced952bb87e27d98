//! Sums of square roots of positive rational functions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentV;
use super::qnum::q_int_laurent;
use super::{upoly, QError, RatV};

/// `sum_r m_r * sqrt(r)` over canonical square-free radicands `r`.
///
/// A canonical radicand is `s * v^e * P(v)` with `s` a square-free integer,
/// `e` in `{0, 1}` and `P` a primitive square-free integer polynomial with
/// positive leading coefficient and nonzero constant term. The radicand `1`
/// holds the rational part. Distinct canonical radicands are linearly
/// independent over `RatV`, so the value is zero iff the map is empty.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Radical {
    terms: BTreeMap<LaurentV, RatV>,
}

/// One factor of a radicand given in factored form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SqrtFactor {
    /// `[n]^mult`, `n >= 0`.
    QInt { n: i64, mult: i64 },
    /// `[n]!^mult`, `n >= 0`.
    QFactorial { n: i64, mult: i64 },
    /// A positive rational raised to `mult`.
    Rational { value: BigRational, mult: i64 },
}

impl Radical {
    pub fn zero() -> Self {
        Radical { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from(RatV::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct radicands.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LaurentV, &RatV)> {
        self.terms.iter()
    }

    /// The value as a rational function, when it has no irrational part.
    pub fn as_ratv(&self) -> Option<RatV> {
        match self.terms.len() {
            0 => Some(RatV::zero()),
            1 => {
                let (r, m) = self.terms.iter().next().unwrap();
                r.is_one().then(|| m.clone())
            }
            _ => None,
        }
    }

    /// `m * sqrt(radicand)` for an already canonical radicand.
    fn single(radicand: LaurentV, m: RatV) -> Self {
        let mut terms = BTreeMap::new();
        if !m.is_zero() {
            terms.insert(radicand, m);
        }
        Radical { terms }
    }

    /// Square root of a rational function that is positive on `0 < q < 1`.
    ///
    /// Positivity is the caller's obligation; it is checked at a sample
    /// point only.
    pub(crate) fn sqrt_positive(x: &RatV) -> Self {
        if x.is_zero() {
            return Self::zero();
        }
        debug_assert!(x.eval_f64(0.5) > 0.0, "radicand not positive at q = 1/2: {x}");
        // sqrt(n/d) = sqrt(n d) / d
        let (mult, radicand) = canonical_radicand(&(x.numer() * x.denom()));
        let m = &RatV::from(mult) / &RatV::from(x.denom().clone());
        Self::single(radicand, m)
    }

    /// Square root of a rational function that must be positive on
    /// `0 < q < 1`; positivity is sampled at a few points.
    pub fn sqrt_of(x: &RatV) -> Result<Self, QError> {
        if !x.is_zero() && [0.1, 0.5, 0.9].iter().any(|&q| x.eval_f64(q) <= 0.0) {
            return Err(QError::NonPositiveRadicand(x.to_string()));
        }
        Ok(Self::sqrt_positive(x))
    }

    /// Square root of a product of q-integers, q-factorials and positive
    /// rationals, each raised to an integer multiplicity.
    pub fn sqrt_factored(factors: &[SqrtFactor]) -> Result<Self, QError> {
        let mut acc = RatV::one();
        for f in factors {
            let (base, mult) = match f {
                SqrtFactor::QInt { n, mult } => {
                    if *n < 0 {
                        return Err(QError::NegativeArgument("sqrt_factored q-integer", *n));
                    }
                    (RatV::from(q_int_laurent(*n)), *mult)
                }
                SqrtFactor::QFactorial { n, mult } => (super::q_factorial(*n)?, *mult),
                SqrtFactor::Rational { value, mult } => {
                    if !value.is_positive() {
                        return Err(QError::NonPositiveRadicand(value.to_string()));
                    }
                    (RatV::from_rational(value.clone()), *mult)
                }
            };
            if base.is_zero() {
                if mult < 0 {
                    return Err(QError::DivisionByZero);
                }
                if mult > 0 {
                    return Ok(Self::zero());
                }
                continue;
            }
            acc = &acc * &base.pow(mult as i32);
        }
        Ok(Self::sqrt_positive(&acc))
    }

    pub fn scale(&self, c: &RatV) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Radical { terms: self.terms.iter().map(|(r, m)| (r.clone(), m * c)).collect() }
    }

    pub fn add_assign_ref(&mut self, other: &Radical) {
        for (r, m) in &other.terms {
            add_term(&mut self.terms, r.clone(), m.clone());
        }
    }

    /// Multiplicative inverse of a single-radicand value.
    pub fn inv(&self) -> Result<Self, QError> {
        match self.terms.len() {
            0 => Err(QError::DivisionByZero),
            1 => {
                let (r, m) = self.terms.iter().next().unwrap();
                // 1 / (m sqrt r) = sqrt(r) / (m r)
                let den = m * &RatV::from(r.clone());
                Ok(Self::single(r.clone(), den.inv().ok_or(QError::DivisionByZero)?))
            }
            _ => Err(QError::UnsupportedRadicalInverse),
        }
    }

    /// Floating-point value at `q = q0`.
    pub fn eval_f64(&self, q0: f64) -> f64 {
        self.terms
            .iter()
            .map(|(r, m)| {
                let rv = RatV::from(r.clone()).eval_f64(q0);
                assert!(rv >= 0.0, "negative radicand at q0 = {q0}");
                m.eval_f64(q0) * rv.sqrt()
            })
            .sum()
    }
}

fn add_term(map: &mut BTreeMap<LaurentV, RatV>, r: LaurentV, m: RatV) {
    if m.is_zero() {
        return;
    }
    match map.entry(r) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(m);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + &m;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Splits an integer into `(s, t)` with `n = s t^2` and `s` square-free.
fn squarefree_int(n: &BigInt) -> (BigInt, BigInt) {
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut rest = n.abs();
    let mut s = BigInt::one();
    let mut t = BigInt::one();
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(1_000_000u32);
    while &p * &p <= rest && p < limit {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        for _ in 0..e / 2 {
            t *= &p;
        }
        if e % 2 == 1 {
            s *= &p;
        }
        p += 1u32;
    }
    if rest > BigInt::one() {
        let r = rest.sqrt();
        if &r * &r == rest {
            t *= r;
        } else {
            s *= rest;
        }
    }
    (sign * s, t)
}

/// Writes `x = mult^2 * radicand` with `radicand` canonical.
fn canonical_radicand(x: &LaurentV) -> (LaurentV, LaurentV) {
    assert!(!x.is_zero());
    let lo = x.low_exp();
    let half = Integer::div_floor(&lo, &2);
    let odd = lo - 2 * half;
    let poly: Vec<BigRational> = x.dense().to_vec();
    let (lc, factors) = upoly::squarefree_decomposition(&poly);
    let mut mult_poly: Vec<BigRational> = vec![BigRational::one()];
    let mut rad_poly: Vec<BigRational> = vec![BigRational::one()];
    for (i, f) in factors.iter().enumerate() {
        let e = i + 1;
        for _ in 0..e / 2 {
            mult_poly = upoly::mul(&mult_poly, f);
        }
        if e % 2 == 1 {
            rad_poly = upoly::mul(&rad_poly, f);
        }
    }
    // Make the radicand polynomial primitive over the integers.
    let mut den_lcm = BigInt::one();
    for c in &rad_poly {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> =
        rad_poly.iter().map(|c| (c * BigRational::from_integer(den_lcm.clone())).to_integer()).collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    let prim: Vec<BigRational> = ints.iter().map(|c| BigRational::new(c.clone(), content.clone())).collect();
    // x = lc * (content/den_lcm) * prim * mult_poly^2 * v^lo
    let c = &lc * &BigRational::new(content, den_lcm);
    let ab = c.numer() * c.denom();
    let (s, t) = squarefree_int(&ab);
    let scalar = BigRational::new(t, c.denom().clone());
    let mult = LaurentV::from_dense(half, mult_poly).scale(&scalar);
    let radicand = LaurentV::from_dense(odd, prim).scale(&BigRational::from_integer(s));
    (mult, radicand)
}

impl From<RatV> for Radical {
    fn from(x: RatV) -> Self {
        Self::single(LaurentV::one(), x)
    }
}

impl<'a> Add<&'a Radical> for &'a Radical {
    type Output = Radical;
    fn add(self, rhs: &Radical) -> Radical {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Neg for &Radical {
    type Output = Radical;
    fn neg(self) -> Radical {
        Radical { terms: self.terms.iter().map(|(r, m)| (r.clone(), -m)).collect() }
    }
}

impl<'a> Sub<&'a Radical> for &'a Radical {
    type Output = Radical;
    fn sub(self, rhs: &Radical) -> Radical {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Radical> for &'a Radical {
    type Output = Radical;
    fn mul(self, rhs: &Radical) -> Radical {
        let mut terms = BTreeMap::new();
        for (r1, m1) in &self.terms {
            for (r2, m2) in &rhs.terms {
                let m = m1 * m2;
                if r1.is_one() {
                    add_term(&mut terms, r2.clone(), m);
                } else if r2.is_one() {
                    add_term(&mut terms, r1.clone(), m);
                } else if r1 == r2 {
                    add_term(&mut terms, LaurentV::one(), &m * &RatV::from(r1.clone()));
                } else {
                    let (extra, r) = canonical_radicand(&(r1 * r2));
                    add_term(&mut terms, r, &m * &RatV::from(extra));
                }
            }
        }
        Radical { terms }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Radical> for Radical {
            type Output = Radical;
            fn $m(self, rhs: Radical) -> Radical {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(r, m)| {
                let ms = m.to_string();
                let ms = if ms.contains(' ') && self.terms.len() > 1 { format!("({ms})") } else { ms };
                match (r.is_one(), ms.as_str()) {
                    (true, _) => ms,
                    (false, "1") => format!("sqrt({r})"),
                    (false, _) => format!("{}*sqrt({r})", if ms.contains(' ') { format!("({ms})") } else { ms.clone() }),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Radical({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcoeff::q_int;

    #[test]
    fn perfect_square() {
        let r = Radical::sqrt_factored(&[SqrtFactor::QInt { n: 2, mult: 2 }]).unwrap();
        assert_eq!(r.as_ratv(), Some(q_int(2)));
    }

    #[test]
    fn squarefree_radicand_kept() {
        let r = Radical::sqrt_factored(&[SqrtFactor::QInt { n: 1, mult: 1 }, SqrtFactor::QInt { n: 3, mult: 1 }])
            .unwrap();
        assert_eq!(r.len(), 1);
        let (rad, m) = r.terms().next().unwrap();
        // [3] = q^2 + 1 + q^-2 = v^-8 (v^16 + v^8 + 1)
        assert_eq!(rad, &LaurentV::from_terms(vec![(0, 1.into()), (8, 1.into()), (16, 1.into())].into_iter().map(|(e, c): (i32, i64)| (e, BigRational::from_integer(c.into())))));
        assert_eq!(m, &RatV::q_pow(-1));
        assert!((r.eval_f64(0.5) - (0.25f64 + 1.0 + 4.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn sqrt_times_sqrt() {
        let s = Radical::sqrt_factored(&[SqrtFactor::QInt { n: 2, mult: 1 }]).unwrap();
        assert_eq!((&s * &s).as_ratv(), Some(q_int(2)));
        assert!((s.eval_f64(0.5) - 2.5f64.sqrt()).abs() < 1e-12);
        assert!((&s - &s).is_zero());
        let inv = s.inv().unwrap();
        assert!((&s * &inv).as_ratv().unwrap().is_one());
    }

    #[test]
    fn rejects_non_positive_rationals() {
        let bad = SqrtFactor::Rational { value: BigRational::from_integer((-2).into()), mult: 1 };
        assert!(Radical::sqrt_factored(&[bad]).is_err());
    }

    #[test]
    fn integer_square_part() {
        let r = Radical::sqrt_factored(&[SqrtFactor::Rational { value: BigRational::new(18.into(), 1.into()), mult: 1 }])
            .unwrap();
        let (rad, m) = r.terms().next().unwrap();
        assert_eq!(rad, &LaurentV::from_int(2));
        assert_eq!(m, &RatV::from_int(3));
    }
}
