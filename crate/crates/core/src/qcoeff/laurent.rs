//! Laurent polynomials in `v = q^(1/4)` with rational coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A finitely supported sum `sum_k c_k v^k`.
///
/// Stored as integer coefficients over one positive common denominator,
/// densely from the lowest exponent `lo`. Both ends of `coeffs` are nonzero
/// and the denominator is coprime to the coefficient content, so the
/// representation is unique. The zero polynomial has no coefficients,
/// `lo = 0` and `den = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentV {
    lo: i32,
    coeffs: Vec<BigInt>,
    den: BigInt,
}

impl LaurentV {
    pub fn zero() -> Self {
        LaurentV { lo: 0, coeffs: Vec::new(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    /// `c * v^e`.
    pub fn monomial(c: BigRational, e: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let (n, d) = c.into_raw();
        Self::from_parts(e, vec![n], d)
    }

    /// `v^e`.
    pub fn v_pow(e: i32) -> Self {
        LaurentV { lo: e, coeffs: vec![BigInt::one()], den: BigInt::one() }
    }

    /// `q^k = v^(4k)`.
    pub fn q_pow(k: i32) -> Self {
        Self::v_pow(4 * k)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i32, BigRational)>>(terms: I) -> Self {
        let terms: Vec<(i32, BigRational)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    /// Builds from a dense coefficient vector starting at exponent `lo`.
    pub fn from_dense(lo: i32, coeffs: Vec<BigRational>) -> Self {
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Self::from_parts(lo, ints, den)
    }

    /// Canonicalizes integer coefficients over `den`.
    fn from_parts(lo: i32, coeffs: Vec<BigInt>, den: BigInt) -> Self {
        let mut p = LaurentV { lo, coeffs, den };
        p.trim();
        p.normalize_den();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.lo += lead_zeros as i32;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
            self.den = BigInt::one();
        }
    }

    fn normalize_den(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.coeffs {
                *c = -&*c;
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.coeffs {
            if g.is_one() {
                return;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.coeffs {
                *c /= &g;
            }
        }
    }

    fn ratio(&self, c: &BigInt) -> BigRational {
        if self.den.is_one() {
            BigRational::from_integer(c.clone())
        } else {
            BigRational::new(c.clone(), self.den.clone())
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one() && self.den.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_exp(&self) -> i32 {
        self.lo
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high_exp(&self) -> i32 {
        self.lo + self.coeffs.len() as i32 - 1
    }

    /// Number of stored coefficient slots; `high_exp - low_exp + 1`.
    pub fn span(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, e: i32) -> BigRational {
        let i = e - self.lo;
        if i < 0 || i as usize >= self.coeffs.len() {
            BigRational::zero()
        } else {
            self.ratio(&self.coeffs[i as usize])
        }
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.coeffs.last().map(|c| self.ratio(c)).unwrap_or_else(BigRational::zero)
    }

    pub fn trailing_coeff(&self) -> BigRational {
        self.coeffs.first().map(|c| self.ratio(c)).unwrap_or_else(BigRational::zero)
    }

    pub(crate) fn dense(&self) -> Vec<BigRational> {
        self.coeffs.iter().map(|c| self.ratio(c)).collect()
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, BigRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.lo + i as i32, self.ratio(c)))
    }

    pub fn shift(&self, e: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentV { lo: self.lo + e, coeffs: self.coeffs.clone(), den: self.den.clone() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        if c.is_integer() && self.den.is_one() {
            let k = c.numer();
            return LaurentV { lo: self.lo, coeffs: self.coeffs.iter().map(|x| x * k).collect(), den: BigInt::one() };
        }
        Self::from_parts(self.lo, self.coeffs.iter().map(|x| x * c.numer()).collect(), &self.den * c.denom())
    }

    /// Substitutes `v -> v^-1`.
    pub fn reflect(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentV { lo: -self.high_exp(), coeffs, den: self.den.clone() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact value at a rational point `v = x`.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc * pow_rational(x, self.lo) / BigRational::from_integer(self.den.clone())
    }

    /// Floating-point value at `v = x`.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + ratio_to_f64(&self.ratio(c));
        }
        acc * x.powi(self.lo)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// Differentiates with respect to `v`.
    pub fn derivative(&self) -> Self {
        let terms = self
            .terms()
            .filter(|(e, _)| *e != 0)
            .map(|(e, c)| (e - 1, c * BigRational::from_integer(BigInt::from(e))))
            .collect::<Vec<_>>();
        Self::from_terms(terms)
    }
}

pub(crate) fn pow_rational(x: &BigRational, e: i32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

pub(crate) fn ratio_to_f64(c: &BigRational) -> f64 {
    match (c.numer().to_f64(), c.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Scale both sides down before converting.
            let shift = c.numer().bits().max(c.denom().bits()).saturating_sub(900);
            let n = (c.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (c.denom() >> shift).to_f64().unwrap_or(1.0);
            n / d
        }
    }
}

impl Ord for LaurentV {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lo
            .cmp(&other.lo)
            .then_with(|| self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.den.cmp(&other.den))
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for LaurentV {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a LaurentV> for &'a LaurentV {
    type Output = LaurentV;
    fn add(self, rhs: &LaurentV) -> LaurentV {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(rhs.lo);
        let hi = self.high_exp().max(rhs.high_exp());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        let (den, fa, fb) = if self.den == rhs.den {
            (self.den.clone(), None, None)
        } else {
            let l = self.den.lcm(&rhs.den);
            let fa = &l / &self.den;
            let fb = &l / &rhs.den;
            (l, Some(fa), Some(fb))
        };
        for (i, c) in self.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(self.lo - lo) as usize + i];
            match &fa {
                None => *slot += c,
                Some(f) => *slot += c * f,
            }
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(rhs.lo - lo) as usize + i];
            match &fb {
                None => *slot += c,
                Some(f) => *slot += c * f,
            }
        }
        LaurentV::from_parts(lo, coeffs, den)
    }
}

impl<'a> Sub<&'a LaurentV> for &'a LaurentV {
    type Output = LaurentV;
    fn sub(self, rhs: &LaurentV) -> LaurentV {
        self + &(-rhs)
    }
}

impl Neg for &LaurentV {
    type Output = LaurentV;
    fn neg(self) -> LaurentV {
        LaurentV { lo: self.lo, coeffs: self.coeffs.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl<'a> Mul<&'a LaurentV> for &'a LaurentV {
    type Output = LaurentV;
    fn mul(self, rhs: &LaurentV) -> LaurentV {
        if self.is_zero() || rhs.is_zero() {
            return LaurentV::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        let den = if rhs.den.is_one() { self.den.clone() } else { &self.den * &rhs.den };
        LaurentV::from_parts(self.lo + rhs.lo, coeffs, den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentV> for LaurentV {
            type Output = LaurentV;
            fn $m(self, rhs: LaurentV) -> LaurentV {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentV {
    type Output = LaurentV;
    fn neg(self) -> LaurentV {
        -&self
    }
}

fn fmt_rational_abs(c: &BigRational) -> String {
    let a = c.abs();
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

fn fmt_power(e: i32) -> String {
    if e % 4 == 0 {
        match e / 4 {
            0 => String::new(),
            1 => "q".to_string(),
            k => format!("q^{k}"),
        }
    } else {
        format!("v^{e}")
    }
}

impl fmt::Display for LaurentV {
    /// Terms in decreasing exponent order; exponents that are multiples of
    /// four print as powers of `q`, the rest as powers of `v`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let p = fmt_power(e);
            let abs_one = c.abs().is_one();
            match (p.is_empty(), abs_one) {
                (true, _) => write!(f, "{}", fmt_rational_abs(&c))?,
                (false, true) => write!(f, "{p}")?,
                (false, false) => write!(f, "{}*{p}", fmt_rational_abs(&c))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentV({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn trims_and_formats() {
        let p = LaurentV::from_terms(vec![(4, r(1)), (-4, r(1)), (0, r(0))]);
        assert_eq!(p.to_string(), "q + q^-1");
        assert_eq!(p.low_exp(), -4);
        assert_eq!(p.span(), 9);
        let z = &p - &p;
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
        assert_eq!(LaurentV::v_pow(2).to_string(), "v^2");
        assert_eq!(LaurentV::from_int(-3).shift(-8).to_string(), "-3*q^-2");
    }

    #[test]
    fn multiplication_and_eval() {
        let a = LaurentV::from_terms(vec![(4, r(1)), (-4, r(1))]);
        let b = &a * &a;
        assert_eq!(b.to_string(), "q^2 + 2 + q^-2");
        let x = BigRational::new(1.into(), 2.into());
        // v = 1/2 means q = 1/16
        assert_eq!(a.eval_rational(&x), r(16) + BigRational::new(1.into(), 16.into()));
        assert!((a.eval_f64(0.5) - (16.0 + 1.0 / 16.0)).abs() < 1e-12);
        assert_eq!(a.reflect(), a);
        assert_eq!(LaurentV::v_pow(3).derivative(), LaurentV::v_pow(2).scale(&r(3)));
    }
}
