//! Exact coefficient arithmetic in `v = q^(1/4)`.
//!
//! Every power of `q` that shows up in the representation and action
//! formulas is a multiple of `1/4`, so all of them are integer powers of `v`.

mod laurent;
mod qnum;
mod radical;
mod ratv;
pub(crate) mod upoly;

pub use laurent::LaurentV;
pub use qnum::{q_binomial, q_factorial, q_int, q_trinomial};
pub use radical::{Radical, SqrtFactor};
pub use ratv::RatV;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QError {
    #[error("{0}: negative argument {1}")]
    NegativeArgument(&'static str, i64),
    #[error("{what} = {value} outside [{lo}, {hi}]")]
    OutOfRange { what: &'static str, value: i64, lo: i64, hi: i64 },
    #[error("radicand factor {0} is not positive")]
    NonPositiveRadicand(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("inverse of a sum of unlike radicals is not supported")]
    UnsupportedRadicalInverse,
    #[error("evaluation point q0 = {0} outside (0, 1)")]
    BadEvaluationPoint(f64),
}

/// A value that can be evaluated numerically.
pub trait Numeric {
    fn value_at(&self, q0: f64) -> f64;
}

impl Numeric for RatV {
    fn value_at(&self, q0: f64) -> f64 {
        self.eval_f64(q0)
    }
}

impl Numeric for Radical {
    fn value_at(&self, q0: f64) -> f64 {
        self.eval_f64(q0)
    }
}

/// Evaluates `x` at `q = q0`, `0 < q0 < 1`.
pub fn eval_numeric<T: Numeric>(x: &T, q0: f64) -> Result<f64, QError> {
    if !(q0 > 0.0 && q0 < 1.0) {
        return Err(QError::BadEvaluationPoint(q0));
    }
    let val = x.value_at(q0);
    if !val.is_finite() {
        return Err(QError::DivisionByZero);
    }
    Ok(val)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numeric_examples() {
        assert!((eval_numeric(&q_int(2), 0.5).unwrap() - 2.5).abs() < 1e-12);
        assert_eq!(eval_numeric(&q_int(0), 0.3).unwrap(), 0.0);
        let s = Radical::sqrt_factored(&[SqrtFactor::QInt { n: 2, mult: 1 }]).unwrap();
        assert!((eval_numeric(&s, 0.5).unwrap() - 1.5811388300841898).abs() < 1e-12);
        assert!(eval_numeric(&q_int(2), 1.5).is_err());
    }
}
