//! q-integers, q-factorials, q-binomials and the q-trinomial `[j,k,l]!`.

use super::{LaurentV, QError, RatV};

/// `[z] = (q^z - q^-z) / (q - q^-1)`.
pub fn q_int(z: i64) -> RatV {
    RatV::from(q_int_laurent(z))
}

pub(crate) fn q_int_laurent(z: i64) -> LaurentV {
    if z < 0 {
        return -q_int_laurent(-z);
    }
    // [n] = q^(n-1) + q^(n-3) + ... + q^(1-n)
    let n = z as i32;
    let terms = (0..n).map(|k| (4 * (n - 1 - 2 * k), 1.into()));
    LaurentV::from_terms(terms.map(|(e, c): (i32, i64)| (e, num_rational::BigRational::from_integer(c.into()))))
}

/// `[n]! = [1][2]...[n]`.
pub fn q_factorial(n: i64) -> Result<RatV, QError> {
    if n < 0 {
        return Err(QError::NegativeArgument("q_factorial", n));
    }
    let mut acc = LaurentV::one();
    for k in 1..=n {
        acc = &acc * &q_int_laurent(k);
    }
    Ok(RatV::from(acc))
}

/// Gaussian binomial `[n]! / ([m]! [n-m]!)`.
pub fn q_binomial(n: i64, m: i64) -> Result<RatV, QError> {
    if n < 0 {
        return Err(QError::NegativeArgument("q_binomial", n));
    }
    if m < 0 || m > n {
        return Err(QError::OutOfRange { what: "q_binomial lower index", value: m, lo: 0, hi: n });
    }
    let num = q_factorial(n)?;
    let den = &q_factorial(m)? * &q_factorial(n - m)?;
    Ok(&num / &den)
}

/// `[j,k,l]! = q^-(jk+kl+lj) [j+k+l]! / ([j]! [k]! [l]!)`.
pub fn q_trinomial(j: i64, k: i64, l: i64) -> Result<RatV, QError> {
    for x in [j, k, l] {
        if x < 0 {
            return Err(QError::NegativeArgument("q_trinomial", x));
        }
    }
    let e = -(j * k + k * l + l * j);
    let num = q_factorial(j + k + l)?;
    let den = &(&q_factorial(j)? * &q_factorial(k)?) * &q_factorial(l)?;
    Ok(&RatV::q_pow(e as i32) * &(&num / &den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qq(k: i32) -> RatV {
        RatV::q_pow(k)
    }

    #[test]
    fn q_int_examples() {
        assert!(q_int(0).is_zero());
        assert!(q_int(1).is_one());
        assert_eq!(q_int(2), &qq(1) + &qq(-1));
        assert_eq!(q_int(2).to_string(), "q + q^-1");
        assert_eq!(q_int(-3), -q_int(3));
    }

    #[test]
    fn factorial_examples() {
        assert!(q_factorial(0).unwrap().is_one());
        assert_eq!(q_factorial(2).unwrap(), &qq(1) + &qq(-1));
        let three = &(&qq(1) + &qq(-1)) * &(&(&qq(2) + &RatV::one()) + &qq(-2));
        assert_eq!(q_factorial(3).unwrap(), three);
        assert!(q_factorial(-1).is_err());
    }

    #[test]
    fn binomial_examples() {
        for n in 0..6 {
            assert!(q_binomial(n, 0).unwrap().is_one());
            for m in 0..=n {
                assert_eq!(q_binomial(n, m).unwrap(), q_binomial(n, n - m).unwrap());
            }
        }
        assert_eq!(q_binomial(2, 1).unwrap(), q_int(2));
        assert!(q_binomial(2, 3).is_err());
    }

    #[test]
    fn trinomial_examples() {
        assert!(q_trinomial(0, 0, 0).unwrap().is_one());
        assert!(q_trinomial(1, 0, 0).unwrap().is_one());
        assert_eq!(q_trinomial(1, 1, 0).unwrap(), &qq(-1) * &(&qq(1) + &qq(-1)));
        assert!(q_trinomial(-1, 0, 0).is_err());
    }
}
