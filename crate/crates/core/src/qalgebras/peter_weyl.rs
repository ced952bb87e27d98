//! Peter-Weyl elements `t(n1,n2)^{l}_{j} = X_j |> ((u^1_1)^*)^{n1} (u^3_3)^{n2} <| (X_l)^*`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::ncpoly::NCPoly;
use crate::qcoeff::{q_binomial, q_factorial, QError, Radical, RatV, SqrtFactor};
use crate::uqsu3::{star_uq, theta, Gen, RepError, RepMatrix, UqElement, WeightLabel};

use super::{act_left, act_right, star_u, suq3, u_letter};

fn qf(n: i64, mult: i64) -> SqrtFactor {
    SqrtFactor::QFactorial { n, mult }
}

/// The normalization `N^{n1,n2}_{j1,j2,m}`.
pub fn n_coefficient(l: &WeightLabel) -> Result<Radical, QError> {
    let (n1, n2, j1, j2) = (l.n1, l.n2, l.j1, l.j2);
    Radical::sqrt_factored(&[
        SqrtFactor::QInt { n: j1 + j2 + 1, mult: 1 },
        qf(l.upper_steps(), 1),
        qf(n2 - j2, 1),
        qf(j1, 1),
        qf(n1 + j2 + 1, 1),
        qf(n2 + j1 + 1, 1),
        qf(l.lower_steps(), -1),
        qf(n1 - j1, -1),
        qf(j2, -1),
        qf(n1, -1),
        qf(n2, -1),
        qf(n1 + n2 + 1, -1),
    ])
}

/// `X^{n1,n2}_{j1,j2,m}` split as `(N, sum)` with the sum over `k` carrying
/// rational coefficients.
pub fn x_operator(l: &WeightLabel) -> Result<(Radical, UqElement), RepError> {
    if !l.is_valid() {
        return Err(RepError::InvalidLabel(*l));
    }
    let f1 = UqElement::gen(Gen::F1);
    let f2 = UqElement::gen(Gen::F2);
    let comm = UqElement::q_commutator(&f2, &f1);
    let mut sum = UqElement::zero();
    for k in 0..=l.n1 - l.j1 {
        let f1_exp = l.lower_steps() + k;
        assert!(f1_exp >= 0, "negative F1 exponent");
        let s = l.j1 + l.j2 + k + 1;
        let c = &(&RatV::q_pow(-(k * s) as i32) / &q_factorial(s)?) * &q_binomial(l.n1 - l.j1, k)?;
        let word = f1.pow(f1_exp as u32).mul(&comm.pow((l.n1 - l.j1 - k) as u32)).mul(&f2.pow((l.j2 + k) as u32));
        sum = sum.add(&word.scale(&c));
    }
    Ok((n_coefficient(l)?, sum))
}

/// `((u^1_1)^*)^{n1} (u^3_3)^{n2}`.
pub fn seed(n1: i64, n2: i64) -> NCPoly<RatV> {
    let su = suq3();
    let a = su.pow(&star_u(1, 1), n1 as usize);
    let b = su.pow(&NCPoly::letter(u_letter(3, 3)), n2 as usize);
    su.mul(&a, &b)
}

type PwKey = (WeightLabel, WeightLabel);

/// `t(n1,n2)^{upper}_{lower}`, reduced in A(SU_q(3)); cached by labels.
pub fn pw_element(lower: &WeightLabel, upper: &WeightLabel) -> Result<NCPoly<Radical>, RepError> {
    static CACHE: OnceLock<Mutex<HashMap<PwKey, NCPoly<Radical>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if (lower.n1, lower.n2) != (upper.n1, upper.n2) {
        return Err(RepError::InvalidLabel(*upper));
    }
    if let Some(t) = cache.lock().unwrap().get(&(*lower, *upper)) {
        return Ok(t.clone());
    }
    let (nl, xl) = x_operator(lower)?;
    let (nu, xu) = x_operator(upper)?;
    let s = seed(lower.n1, lower.n2);
    let t = act_right(&act_left(&xl, &s), &star_uq(&xu));
    let t = t.to_radical().scale_coeff(&(&nl * &nu));
    cache.lock().unwrap().insert((*lower, *upper), t.clone());
    Ok(t)
}

/// Result of comparing `t <| h` with `sum_l' <l'|theta(h)|l> t^{l'}_j` (or
/// the analogous left identity).
#[derive(Clone, Debug)]
pub struct EquivarianceResult {
    pub pass: bool,
    pub lhs: NCPoly<Radical>,
    pub rhs: NCPoly<Radical>,
}

/// Checks `t <| h = sum_{l'} <l'|theta(h)|l> t^{l'}_j` exactly.
pub fn q_equivariance_check(lower: &WeightLabel, upper: &WeightLabel, h: &UqElement) -> Result<EquivarianceResult, RepError> {
    let t = pw_element(lower, upper)?;
    let lhs = act_right(&t, h);
    let m = RepMatrix::element(&theta(h), upper.n1, upper.n2)?;
    let src = crate::uqsu3::label_index(upper).ok_or(RepError::InvalidLabel(*upper))?;
    let mut rhs = NCPoly::zero();
    for (l2, c) in m.column(src) {
        rhs.add_assign(&pw_element(lower, &l2)?.scale_coeff(&c));
    }
    Ok(EquivarianceResult { pass: lhs == rhs, lhs, rhs })
}

/// Checks `h |> t = sum_{j'} <j'|h|j> t^{l}_{j'}` exactly.
pub fn left_equivariance_check(lower: &WeightLabel, upper: &WeightLabel, h: &UqElement) -> Result<EquivarianceResult, RepError> {
    let t = pw_element(lower, upper)?;
    let lhs = act_left(h, &t);
    let m = RepMatrix::element(h, lower.n1, lower.n2)?;
    let src = crate::uqsu3::label_index(lower).ok_or(RepError::InvalidLabel(*lower))?;
    let mut rhs = NCPoly::zero();
    for (j2, c) in m.column(src) {
        rhs.add_assign(&pw_element(&j2, upper)?.scale_coeff(&c));
    }
    Ok(EquivarianceResult { pass: lhs == rhs, lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(n1: i64, n2: i64, j1: i64, j2: i64, m2: i64) -> WeightLabel {
        WeightLabel::new(n1, n2, j1, j2, m2).unwrap()
    }

    #[test]
    fn small_elements() {
        let o = lab(0, 0, 0, 0, 0);
        assert_eq!(pw_element(&o, &o).unwrap(), NCPoly::one());
        let z = lab(0, 1, 0, 0, 0);
        assert_eq!(pw_element(&z, &z).unwrap(), NCPoly::letter(u_letter(3, 3)));
    }
}
