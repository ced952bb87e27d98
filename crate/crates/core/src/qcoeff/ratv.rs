//! Rational functions in `v`, kept in a canonical reduced form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentV;
use super::upoly;

/// `num / den` with `den` a monic polynomial in `v` with nonzero constant
/// term and no common factor with `num`.
///
/// The representation is unique, so structural equality is mathematical
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatV {
    num: LaurentV,
    den: LaurentV,
}

impl RatV {
    pub fn zero() -> Self {
        RatV { num: LaurentV::zero(), den: LaurentV::one() }
    }

    pub fn one() -> Self {
        RatV::from(LaurentV::one())
    }

    pub fn from_int(n: i64) -> Self {
        RatV::from(LaurentV::from_int(n))
    }

    pub fn from_rational(c: BigRational) -> Self {
        RatV::from(LaurentV::constant(c))
    }

    pub fn v_pow(e: i32) -> Self {
        RatV::from(LaurentV::v_pow(e))
    }

    pub fn q_pow(k: i32) -> Self {
        RatV::from(LaurentV::q_pow(k))
    }

    /// `num / den`; `None` when `den` is zero.
    pub fn checked_new(num: LaurentV, den: LaurentV) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        if den.is_monomial() {
            let c = den.leading_coeff().recip();
            return Some(RatV { num: num.scale(&c).shift(-den.low_exp()), den: LaurentV::one() });
        }
        let d_shift = den.low_exp();
        let n_shift = num.low_exp();
        let dp: Vec<BigRational> = den.dense().to_vec();
        let np: Vec<BigRational> = num.dense().to_vec();
        let g = upoly::gcd(&np, &dp);
        let (np, dp) = if upoly::degree(&g) > 0 {
            (upoly::div_exact(&np, &g), upoly::div_exact(&dp, &g))
        } else {
            (np, dp)
        };
        let lc = dp.last().unwrap().clone();
        let np: Vec<BigRational> = np.iter().map(|c| c / &lc).collect();
        let dp: Vec<BigRational> = dp.iter().map(|c| c / &lc).collect();
        let num = LaurentV::from_dense(n_shift - d_shift, np);
        let den = LaurentV::from_dense(0, dp);
        Some(RatV { num, den })
    }

    /// `num / den`; panics on a zero denominator.
    pub fn new(num: LaurentV, den: LaurentV) -> Self {
        Self::checked_new(num, den).expect("RatV with zero denominator")
    }

    pub fn numer(&self) -> &LaurentV {
        &self.num
    }

    pub fn denom(&self) -> &LaurentV {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// True when the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// True when the value is `c * v^k`.
    pub fn is_monomial(&self) -> bool {
        self.den.is_one() && self.num.is_monomial()
    }

    pub fn inv(&self) -> Option<Self> {
        Self::checked_new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut acc = RatV::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatV { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Degree span used as a size heuristic for pivoting.
    pub fn weight(&self) -> usize {
        self.num.span() + self.den.span()
    }

    /// Value at `q = q0`, i.e. `v = q0^(1/4)`.
    pub fn eval_f64(&self, q0: f64) -> f64 {
        let v = q0.powf(0.25);
        self.num.eval_f64(v) / self.den.eval_f64(v)
    }

    /// Substitutes `v -> v^-1`.
    pub fn reflect(&self) -> Self {
        RatV::new(self.num.reflect(), self.den.reflect())
    }
}

impl From<LaurentV> for RatV {
    fn from(num: LaurentV) -> Self {
        RatV { num, den: LaurentV::one() }
    }
}

impl<'a> Add<&'a RatV> for &'a RatV {
    type Output = RatV;
    fn add(self, rhs: &RatV) -> RatV {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatV::from(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return RatV::new(&self.num + &rhs.num, self.den.clone());
        }
        RatV::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a RatV> for &'a RatV {
    type Output = RatV;
    fn sub(self, rhs: &RatV) -> RatV {
        self + &(-rhs)
    }
}

impl Neg for &RatV {
    type Output = RatV;
    fn neg(self) -> RatV {
        RatV { num: -&self.num, den: self.den.clone() }
    }
}

impl<'a> Mul<&'a RatV> for &'a RatV {
    type Output = RatV;
    fn mul(self, rhs: &RatV) -> RatV {
        if self.is_zero() || rhs.is_zero() {
            return RatV::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatV::from(&self.num * &rhs.num);
        }
        if rhs.is_monomial() {
            return RatV { num: &self.num * &rhs.num, den: self.den.clone() };
        }
        if self.is_monomial() {
            return RatV { num: &self.num * &rhs.num, den: rhs.den.clone() };
        }
        RatV::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a RatV> for &'a RatV {
    type Output = RatV;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RatV) -> RatV {
        self * &rhs.inv().expect("division by zero RatV")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatV> for RatV {
            type Output = RatV;
            fn $m(self, rhs: RatV) -> RatV {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatV {
    type Output = RatV;
    fn neg(self) -> RatV {
        -&self
    }
}

impl fmt::Display for RatV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.terms().count() == 1 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatV({self})")
    }
}

impl Default for RatV {
    fn default() -> Self {
        RatV::zero()
    }
}

impl Zero for RatV {
    fn zero() -> Self {
        RatV::zero()
    }
    fn is_zero(&self) -> bool {
        RatV::is_zero(self)
    }
}

impl One for RatV {
    fn one() -> Self {
        RatV::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_reduction() {
        // (q^2 - q^-2) / (q - q^-1) = q + q^-1
        let num = &LaurentV::q_pow(2) - &LaurentV::q_pow(-2);
        let den = &LaurentV::q_pow(1) - &LaurentV::q_pow(-1);
        let r = RatV::new(num, den);
        assert!(r.is_laurent());
        assert_eq!(r.to_string(), "q + q^-1");
    }

    #[test]
    fn field_ops() {
        let a = RatV::new(LaurentV::one(), &LaurentV::q_pow(1) + &LaurentV::one());
        let b = RatV::new(LaurentV::q_pow(1), &LaurentV::q_pow(1) + &LaurentV::one());
        assert!((&a + &b).is_one());
        let c = &a * &a.inv().unwrap();
        assert!(c.is_one());
        assert_eq!(&(&a - &a), &RatV::zero());
        let two = RatV::from_int(2);
        assert_eq!(two.pow(-2), RatV::from_rational(BigRational::new(1.into(), 4.into())));
    }
}
