//! Dense univariate polynomial helpers over the rationals.
//!
//! Polynomials are coefficient vectors in increasing degree order with no
//! trailing zeros; the empty vector is zero. These back the gcd, exact
//! division and square-free decomposition used by [`super::RatV`] and
//! [`super::Radical`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Poly = Vec<BigRational>;

pub fn trim(p: &mut Poly) {
    while matches!(p.last(), Some(c) if c.is_zero()) {
        p.pop();
    }
}

pub fn is_one(p: &[BigRational]) -> bool {
    p.len() == 1 && p[0].is_one()
}

pub fn degree(p: &[BigRational]) -> usize {
    p.len().saturating_sub(1)
}

pub fn monic(p: &[BigRational]) -> Poly {
    match p.last() {
        None => Vec::new(),
        Some(lc) => p.iter().map(|c| c / lc).collect(),
    }
}

pub fn mul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub fn sub(a: &[BigRational], b: &[BigRational]) -> Poly {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

pub fn derivative(p: &[BigRational]) -> Poly {
    let mut out: Poly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    trim(&mut out);
    out
}

/// Quotient and remainder of `a / b` over the rationals.
pub fn divrem(a: &[BigRational], b: &[BigRational]) -> (Poly, Poly) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem: Poly = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let db = b.len() - 1;
    let lc = b.last().unwrap().clone();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db && !rem.is_empty() {
        let shift = rem.len() - 1 - db;
        let f = rem.last().unwrap() / &lc;
        for (i, c) in b.iter().enumerate() {
            if !c.is_zero() {
                rem[shift + i] -= &f * c;
            }
        }
        quot[shift] = f;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Exact quotient; panics when `b` does not divide `a`.
pub fn div_exact(a: &[BigRational], b: &[BigRational]) -> Poly {
    let (q, r) = divrem(a, b);
    assert!(r.is_empty(), "inexact polynomial division");
    q
}

fn to_primitive_int(p: &[BigRational]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for c in p {
        l = l.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
    primitive(ints)
}

fn primitive(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while matches!(p.last(), Some(c) if c.is_zero()) {
        p.pop();
    }
    let mut g = BigInt::zero();
    for c in &p {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in p.iter_mut() {
            *c = &*c / &g;
        }
    }
    if matches!(p.last(), Some(c) if c.is_negative()) {
        for c in p.iter_mut() {
            *c = -&*c;
        }
    }
    p
}

fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lc = b.last().unwrap().clone();
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let f = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c = &*c * &lc;
        }
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &f * c;
        }
        r.pop();
        while matches!(r.last(), Some(c) if c.is_zero()) {
            r.pop();
        }
        // keep coefficients small
        r = primitive_keep_sign(r);
    }
    r
}

fn primitive_keep_sign(mut p: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for c in &p {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in p.iter_mut() {
            *c = &*c / &g;
        }
    }
    p
}

fn stride(p: &[BigRational]) -> usize {
    let mut g = 0usize;
    for (i, c) in p.iter().enumerate() {
        if !c.is_zero() {
            g = g.gcd(&i);
        }
    }
    g
}

fn compress(p: &[BigRational], s: usize) -> Poly {
    p.iter().step_by(s).cloned().collect()
}

fn expand(p: &[BigRational], s: usize) -> Poly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); (p.len() - 1) * s + 1];
    for (i, c) in p.iter().enumerate() {
        out[i * s] = c.clone();
    }
    out
}

/// Monic greatest common divisor over the rationals.
pub fn gcd(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() {
        return monic(b);
    }
    if b.is_empty() {
        return monic(a);
    }
    if a.len() == 1 || b.len() == 1 {
        return vec![BigRational::one()];
    }
    // Both polynomials in x^s: take the gcd in x^s.
    let s = stride(a).gcd(&stride(b));
    if s > 1 {
        return expand(&gcd(&compress(a, s), &compress(b, s)), s);
    }
    let mut x = to_primitive_int(a);
    let mut y = to_primitive_int(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = prem(&x, &y);
        x = y;
        y = primitive(r);
        if y.len() == 1 {
            return vec![BigRational::one()];
        }
    }
    let lc = x.last().unwrap().clone();
    x.into_iter().map(|c| BigRational::new(c, lc.clone())).collect()
}

/// Yun's square-free decomposition of a polynomial with nonzero constant
/// term: returns `(lc, factors)` with `p = lc * prod_i factors[i]^(i+1)`
/// and every factor monic.
pub fn squarefree_decomposition(p: &[BigRational]) -> (BigRational, Vec<Poly>) {
    assert!(!p.is_empty());
    let lc = p.last().unwrap().clone();
    let f = monic(p);
    if f.len() == 1 {
        return (lc, Vec::new());
    }
    let df = derivative(&f);
    let a0 = gcd(&f, &df);
    let mut b = div_exact(&f, &a0);
    let c = div_exact(&df, &a0);
    let mut d = sub(&c, &derivative(&b));
    let mut factors = Vec::new();
    while !(b.len() == 1) {
        let a = gcd(&b, &d);
        let nb = div_exact(&b, &a);
        let nc = div_exact(&d, &a);
        d = sub(&nc, &derivative(&nb));
        factors.push(a);
        b = nb;
    }
    while matches!(factors.last(), Some(f) if is_one(f)) {
        factors.pop();
    }
    (lc, factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        let mut v: Poly = cs.iter().map(|&c| BigRational::from_integer(c.into())).collect();
        trim(&mut v);
        v
    }

    #[test]
    fn gcd_of_products() {
        // (x+1)(x-2) and (x+1)(x+3)
        let a = mul(&p(&[1, 1]), &p(&[-2, 1]));
        let b = mul(&p(&[1, 1]), &p(&[3, 1]));
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
        assert_eq!(gcd(&p(&[1, 1]), &p(&[2, 1])), p(&[1]));
        // stride path: x^4 - 1 and x^2 - 1
        assert_eq!(gcd(&p(&[-1, 0, 0, 0, 1]), &p(&[-1, 0, 1])), p(&[-1, 0, 1]));
    }

    #[test]
    fn yun_decomposition() {
        // 3 (x+1) (x+2)^2 (x-1)^3
        let f1 = p(&[1, 1]);
        let f2 = p(&[2, 1]);
        let f3 = p(&[-1, 1]);
        let prod = mul(&mul(&mul(&f1, &mul(&f2, &f2)), &mul(&f3, &mul(&f3, &f3))), &p(&[3]));
        let (lc, fs) = squarefree_decomposition(&prod);
        assert_eq!(lc, BigRational::from_integer(3.into()));
        assert_eq!(fs, vec![f1, f2, f3]);
    }

    #[test]
    fn division() {
        let a = mul(&p(&[1, 2, 3]), &p(&[5, 0, 1]));
        assert_eq!(div_exact(&a, &p(&[5, 0, 1])), p(&[1, 2, 3]));
        let (_, r) = divrem(&p(&[1, 0, 1]), &p(&[1, 1]));
        assert_eq!(r, p(&[2]));
    }
}
