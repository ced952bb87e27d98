//! The twist maps `phi_1`, `phi_2` between (0,1)-forms and line-bundle
//! sections, the twisted Leibniz rule and tensor products of connections.
//!
//! `sigma: L_N (x) Omega^(0,1) -> Omega^(0,1) (x) L_N` is realized as
//! `phi_1^-1 phi_2`; both sides of every identity are compared through
//! their `phi_1` images, i.e. multiplied out in A(SU_q(3))^2.

use std::collections::BTreeMap;

use crate::exactla::{kernel, subspace_equal, SparseMatrix, SparseVec, Subspace};
use crate::ncpoly::{Coeff, NCPoly, Word};
use crate::qalgebras::actions::suq3_k_exponents;
use crate::qalgebras::{act_right, is_in_cp2, is_in_ln, suq3, Side};
use crate::qcoeff::RatV;
use crate::uqsu3::{Gen, UqElement};

use super::frame::frame;
use super::{dbar_unchecked, is_antiholomorphic_form, FormPair, HoloError};

/// `phi_1((v_+, v_-) (x) xi) = q^{N/2} (v_+ xi, v_- xi)`.
pub fn twist_phi1<C: Coeff>(n: i64, form: &FormPair<C>, xi: &NCPoly<C>) -> Result<FormPair<C>, HoloError> {
    if !is_antiholomorphic_form(form) {
        return Err(HoloError::NotAForm);
    }
    if !is_in_ln(xi, n) {
        return Err(HoloError::NotInLn(n));
    }
    Ok(form.mul_right(xi).scale(&RatV::v_pow(2 * n as i32)))
}

/// `phi_2(xi (x) (v_+, v_-)) = q^{-N/2} (xi v_+, xi v_-)`.
pub fn twist_phi2<C: Coeff>(n: i64, xi: &NCPoly<C>, form: &FormPair<C>) -> Result<FormPair<C>, HoloError> {
    if !is_antiholomorphic_form(form) {
        return Err(HoloError::NotAForm);
    }
    if !is_in_ln(xi, n) {
        return Err(HoloError::NotInLn(n));
    }
    Ok(form.mul_left(xi).scale(&RatV::v_pow(-2 * n as i32)))
}

/// Normal A(SU_q(3)) words of length at most `k` with the given right
/// `K1`, `K2` exponents of `v`.
fn weight_words(k: usize, target: [i64; 2]) -> Vec<Word> {
    let kexp = suq3_k_exponents(Side::Right);
    suq3().system().graded_basis(|l| kexp[l as usize].map(i64::from), k, |_, _| true, |w, _| *w == target)
}

/// Kernel of a linear map given column by column as tuples of polynomials;
/// returns the kernel vectors as combinations of the columns.
fn column_kernel(images: &[Vec<NCPoly<RatV>>]) -> Vec<SparseVec> {
    let mut rows: BTreeMap<(usize, Word), usize> = BTreeMap::new();
    for img in images {
        for (b, p) in img.iter().enumerate() {
            for (w, _) in p.terms() {
                let next = rows.len();
                rows.entry((b, w.clone())).or_insert(next);
            }
        }
    }
    let mut m = SparseMatrix::zeros(rows.len(), images.len());
    for (j, img) in images.iter().enumerate() {
        for (b, p) in img.iter().enumerate() {
            for (w, c) in p.terms() {
                m.set(rows[&(b, w.clone())], j, c.clone());
            }
        }
    }
    kernel(&m).basis().cloned().collect()
}

fn g(x: Gen) -> UqElement {
    UqElement::gen(x)
}

/// Basis of the (0,1)-forms whose components are supported on normal
/// words of length at most `k`, found from the four defining conditions.
pub fn forms_slice(k: usize) -> Vec<FormPair> {
    let plus = weight_words(k, [2, 2]);
    let minus = weight_words(k, [-2, 4]);
    let mut cols: Vec<FormPair> = plus.iter().map(|w| FormPair::new(NCPoly::word(w.clone()), NCPoly::zero())).collect();
    cols.extend(minus.iter().map(|w| FormPair::new(NCPoly::zero(), NCPoly::word(w.clone()))));
    let images: Vec<Vec<NCPoly<RatV>>> = cols
        .iter()
        .map(|p| {
            let f1 = p.act(&g(Gen::F1));
            let e1 = p.act(&g(Gen::E1));
            vec![f1.v_plus, f1.v_minus.sub(&p.v_plus), e1.v_plus.sub(&p.v_minus), e1.v_minus]
        })
        .collect();
    combine(&cols, column_kernel(&images))
}

/// Basis of `L_N` elements supported on normal A(SU_q(3)) words of length
/// at most `k`.
pub fn ln_suq3_slice(n: i64, k: usize) -> Vec<NCPoly<RatV>> {
    let words = weight_words(k, [0, 2 * n]);
    let cols: Vec<NCPoly<RatV>> = words.iter().map(|w| NCPoly::word(w.clone())).collect();
    let images: Vec<Vec<NCPoly<RatV>>> = cols.iter().map(|x| vec![act_right(x, &g(Gen::E1)), act_right(x, &g(Gen::F1))]).collect();
    column_kernel(&images)
        .iter()
        .map(|v| {
            let mut x = NCPoly::zero();
            for (&j, c) in v {
                x.add_assign(&cols[j].scale(c));
            }
            x
        })
        .collect()
}

fn combine(cols: &[FormPair], ker: Vec<SparseVec>) -> Vec<FormPair> {
    ker.iter()
        .map(|v| {
            let mut p = FormPair::zero();
            for (&j, c) in v {
                p = p.add(&cols[j].scale(c));
            }
            p
        })
        .collect()
}

/// Spans of `phi_1` and `phi_2` images on the slice of length `d`.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ImageEquality {
    pub n: i64,
    pub d: usize,
    pub dim_phi1: usize,
    pub dim_phi2: usize,
    pub equal: bool,
}

/// `Im phi_1 = Im phi_2` on the slice filtered by A(SU_q(3)) word length:
/// `phi_1` ranges over `omega xi` and `phi_2` over `xi omega` with
/// `omega` a (0,1)-form of length `<= d - e` and `xi` in `L_N` of length
/// `<= e`.
pub fn image_equality(n: i64, d: usize) -> Result<ImageEquality, HoloError> {
    let su = suq3();
    let mut g1 = Vec::new();
    let mut g2 = Vec::new();
    for e in 0..=d {
        let xis = ln_suq3_slice(n, e);
        if xis.is_empty() {
            continue;
        }
        let forms = forms_slice(d - e);
        for xi in &xis {
            for w in &forms {
                g1.push(FormPair::new(su.mul(&w.v_plus, xi), su.mul(&w.v_minus, xi)));
                g2.push(FormPair::new(su.mul(xi, &w.v_plus), su.mul(xi, &w.v_minus)));
            }
        }
    }
    let n1 = g1.len();
    let all: Vec<FormPair> = g1.into_iter().chain(g2).collect();
    let (a, b) = common_spans(&all, n1)?;
    Ok(ImageEquality { n, d, dim_phi1: a.dim(), dim_phi2: b.dim(), equal: subspace_equal(&a, &b)? })
}

/// Spans of `pairs[..split]` and `pairs[split..]` in one shared coordinate
/// system.
fn common_spans(pairs: &[FormPair], split: usize) -> Result<(Subspace, Subspace), HoloError> {
    let mut index: BTreeMap<(usize, Word), usize> = BTreeMap::new();
    for p in pairs {
        for (b, x) in [&p.v_plus, &p.v_minus].into_iter().enumerate() {
            for (w, _) in x.terms() {
                let next = index.len();
                index.entry((b, w.clone())).or_insert(next);
            }
        }
    }
    let vec_of = |p: &FormPair| {
        let mut v = SparseVec::new();
        for (b, x) in [&p.v_plus, &p.v_minus].into_iter().enumerate() {
            for (w, c) in x.terms() {
                v.insert(index[&(b, w.clone())], c.clone());
            }
        }
        v
    };
    let a: Vec<SparseVec> = pairs[..split].iter().map(vec_of).collect();
    let b: Vec<SparseVec> = pairs[split..].iter().map(vec_of).collect();
    Ok((Subspace::span(index.len(), &a)?, Subspace::span(index.len(), &b)?))
}

/// `nabla_N(xi a) = (nabla_N xi) a + sigma(xi (x) dbar a)`, compared after
/// `phi_1`: `phi_1 nabla(xi a) = phi_1(nabla xi) a + phi_2(xi (x) dbar a)`.
pub fn twisted_leibniz_check<C: Coeff>(n: i64, xi: &NCPoly<C>, a: &NCPoly<C>) -> Result<bool, HoloError> {
    if !is_in_ln(xi, n) {
        return Err(HoloError::NotInLn(n));
    }
    if !is_in_cp2(a) {
        return Err(HoloError::NotInCp2);
    }
    let f = frame(n)?;
    let up = RatV::v_pow(2 * n as i32);
    let lhs = f.connection(&suq3().mul(xi, a)).scale(&up);
    let rhs = f.connection(xi).scale(&up).mul_right(a).add(&twist_phi2(n, xi, &dbar_unchecked(a))?);
    Ok(lhs == rhs)
}

/// `nabla_{N+M}(xi1 xi2) = nabla_N(xi1) xi2 + q^-N xi1 nabla_M(xi2)`, all
/// connections evaluated through their frames.
pub fn tensor_connection_check<C: Coeff>(n: i64, m: i64, xi1: &NCPoly<C>, xi2: &NCPoly<C>) -> Result<bool, HoloError> {
    if !is_in_ln(xi1, n) {
        return Err(HoloError::NotInLn(n));
    }
    if !is_in_ln(xi2, m) {
        return Err(HoloError::NotInLn(m));
    }
    let lhs = frame(n + m)?.connection(&suq3().mul(xi1, xi2));
    let first = frame(n)?.connection(xi1).mul_right(xi2);
    let second = frame(m)?.connection(xi2).mul_left(xi1).scale(&RatV::q_pow(-n as i32));
    Ok(lhs == first.add(&second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebras::{embed_s5, s5q, z_letter, zstar_letter};

    fn z(j: usize) -> NCPoly<RatV> {
        embed_s5(&NCPoly::letter(z_letter(j)))
    }

    fn p(j: usize, k: usize) -> NCPoly<RatV> {
        embed_s5(&s5q().mul(&NCPoly::letter(zstar_letter(j)), &NCPoly::letter(z_letter(k))))
    }

    #[test]
    fn phi_examples() {
        let d = dbar_unchecked(&p(3, 3));
        let x = twist_phi2(1, &z(3), &d).unwrap();
        assert!(!x.is_zero());
        assert!(twist_phi1(1, &FormPair::zero(), &z(3)).unwrap().is_zero());
        assert_eq!(twist_phi1(1, &d, &p(3, 3)), Err(HoloError::NotInLn(1)));
    }

    #[test]
    fn slices_contain_known_elements() {
        let l1 = ln_suq3_slice(1, 1);
        assert_eq!(l1.len(), 3);
        assert!(forms_slice(3).iter().all(is_antiholomorphic_form));
    }

    #[test]
    fn leibniz_and_tensor_examples() {
        assert!(twisted_leibniz_check(1, &z(3), &NCPoly::one()).unwrap());
        assert!(twisted_leibniz_check(1, &z(3), &p(3, 3)).unwrap());
        assert!(tensor_connection_check(0, 0, &NCPoly::<RatV>::one(), &NCPoly::one()).unwrap());
        assert!(tensor_connection_check(1, 1, &z(1), &z(2)).unwrap());
    }
}
