//! Holomorphic sections: kernels of `(<| F2F1; <| F2)` on filtered slices
//! of `L_N`, the closed-form sections and the homogeneous coordinate ring.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::Serialize;

use crate::exactla::{kernel, subspace_equal, Subspace};
use crate::ncpoly::{NCPoly, Word};
use crate::qalgebras::{embed_s5, ln_slice_basis, operator_matrix, pw_element, s5q, z_letter, z_monomial, Side};
use crate::qcoeff::{q_factorial, q_int, Radical, RatV, SqrtFactor};
use crate::report::Check;
use crate::uqsu3::WeightLabel;

use super::{f2, f2f1, HoloError};

/// Kernel of the stacked operator on the slice `{a - b = N, a + b <= D}`.
#[derive(Clone, Debug)]
pub struct SectionSpace {
    pub n: i64,
    pub d: usize,
    /// Normal A(S^5_q) words of the slice.
    pub basis: Vec<Word>,
    /// Kernel in the coordinates of `basis`.
    pub kernel: Subspace,
}

#[derive(Clone, Debug, Serialize)]
pub struct SectionCertificate {
    pub suite: String,
    #[serde(rename = "N")]
    pub n: i64,
    #[serde(rename = "D")]
    pub d: usize,
    pub dimension: usize,
    pub expected: usize,
    pub witness_basis: Vec<BTreeMap<String, String>>,
    pub pass: bool,
}

/// `(N+1)(N+2)/2` for `N >= 0`, else 0.
pub fn expected_h0_dim(n: i64) -> usize {
    if n < 0 {
        0
    } else {
        ((n + 1) * (n + 2) / 2) as usize
    }
}

impl SectionSpace {
    pub fn dim(&self) -> usize {
        self.kernel.dim()
    }

    /// The kernel basis as A(S^5_q) elements.
    pub fn sections(&self) -> Vec<NCPoly<RatV>> {
        self.kernel
            .basis()
            .map(|v| NCPoly::from_terms(v.iter().map(|(&i, c)| (self.basis[i].clone(), c.clone()))))
            .collect()
    }

    /// Coordinates of an A(S^5_q) element in `basis`; `None` if it leaves
    /// the slice.
    pub fn coordinates(&self, x: &NCPoly<RatV>) -> Option<Vec<RatV>> {
        let mut v = vec![RatV::zero(); self.basis.len()];
        for (w, c) in x.terms() {
            v[self.basis.binary_search(w).ok()?] = c.clone();
        }
        Some(v)
    }

    pub fn certificate(&self) -> SectionCertificate {
        let s5 = s5q();
        let witness_basis = self
            .kernel
            .basis()
            .map(|v| v.iter().map(|(&i, c)| (s5.system().word_to_string(&self.basis[i]), c.to_string())).collect())
            .collect();
        let expected = expected_h0_dim(self.n);
        SectionCertificate {
            suite: "h0".into(),
            n: self.n,
            d: self.d,
            dimension: self.dim(),
            expected,
            witness_basis,
            pass: self.dim() == expected,
        }
    }
}

/// Solves `xi <| F2F1 = 0`, `xi <| F2 = 0` on the filtered `L_N` slice.
/// The right action commutes with the left one, so the problem splits into
/// blocks of fixed left weight.
pub fn h0_solve(n: i64, d: usize) -> Result<SectionSpace, HoloError> {
    let basis = ln_slice_basis(n, d);
    let kexp = crate::qalgebras::actions::s5_left_k_exponents();
    let mut blocks: BTreeMap<[i32; 2], Vec<usize>> = BTreeMap::new();
    for (i, w) in basis.iter().enumerate() {
        let mut k = [0, 0];
        for &l in w.letters() {
            k[0] += kexp[l as usize][0];
            k[1] += kexp[l as usize][1];
        }
        blocks.entry(k).or_default().push(i);
    }
    let mut vectors = Vec::new();
    for idx in blocks.values() {
        let domain: Vec<NCPoly<RatV>> = idx.iter().map(|&i| embed_s5(&NCPoly::word(basis[i].clone()))).collect();
        let a = operator_matrix(&f2f1(), &domain, None, Side::Right).expect("no ambient restriction");
        let b = operator_matrix(&f2(), &domain, None, Side::Right).expect("no ambient restriction");
        let ker = kernel(&a.matrix.vstack(&b.matrix)?);
        for v in ker.basis() {
            vectors.push(v.iter().map(|(&j, c)| (idx[j], c.clone())).collect());
        }
    }
    let kernel = Subspace::span(basis.len(), &vectors)?;
    Ok(SectionSpace { n, d, basis, kernel })
}

/// `gamma_n`: `sqrt([n][n+N+2]/[2])` for `N >= 0` and
/// `sqrt([n-N][n+2]/[2])` for `N < 0`.
pub fn gamma(n: i64, big_n: i64) -> Result<Radical, HoloError> {
    let (a, b) = if big_n >= 0 { (n, n + big_n + 2) } else { (n - big_n, n + 2) };
    let x = &(&q_int(a) * &q_int(b)) / &q_int(2);
    Ok(Radical::sqrt_of(&x)?)
}

/// `4 alpha` for the closed-form section; always an integer.
pub fn closed_form_alpha_quarters(n: i64, j2: i64, m2: i64) -> Ratio<i64> {
    let j = Ratio::from_integer(j2);
    let m = Ratio::new(m2, 2);
    let r = j / 2 - m;
    let big = Ratio::from_integer(n);
    let alpha = -j * big / 2 - r * j / 2 + j * j / 2 + r * r / 2;
    alpha * 4
}

/// `t(0,N)^0_{(0,j2,m)} = [j2+1]! sqrt([N]!/([j2/2-m]! [j2/2+m]! [N-j2]!)) q^alpha
/// z1^{j2/2-m} z2^{j2/2+m} z3^{N-j2}` in A(S^5_q); `m2 = 2m`.
pub fn closed_form_section(n: i64, j2: i64, m2: i64) -> Result<NCPoly<Radical>, HoloError> {
    if !(0 <= j2 && j2 <= n) || (j2 - m2) % 2 != 0 || m2.abs() > j2 {
        return Err(HoloError::Label(format!("N = {n}, j2 = {j2}, 2m = {m2}")));
    }
    let (r, s) = ((j2 - m2) / 2, (j2 + m2) / 2);
    let a4 = closed_form_alpha_quarters(n, j2, m2);
    assert!(a4.is_integer(), "alpha must lie in Z/4");
    let root = Radical::sqrt_factored(&[
        SqrtFactor::QFactorial { n, mult: 1 },
        SqrtFactor::QFactorial { n: r, mult: -1 },
        SqrtFactor::QFactorial { n: s, mult: -1 },
        SqrtFactor::QFactorial { n: n - j2, mult: -1 },
    ])?;
    let c = root.scale(&(&q_factorial(j2 + 1)? * &RatV::v_pow(a4.to_integer() as i32)));
    let w = z_monomial([r as usize, s as usize, (n - j2) as usize], [0; 3]);
    Ok(s5q().reduce(&NCPoly::term(c, w)))
}

/// Lower label `(0, N; 0, j2, m)` and upper label `(0, N; 0, 0, 0)`.
pub fn pw_section(n: i64, j2: i64, m2: i64) -> Result<NCPoly<Radical>, HoloError> {
    let lower = WeightLabel::new(0, n, 0, j2, m2)?;
    let upper = WeightLabel::new(0, n, 0, 0, 0)?;
    Ok(pw_element(&lower, &upper)?)
}

/// All labels `(j2, 2m)` of `t(0,N)^0_j`.
pub fn section_labels(n: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for j2 in 0..=n {
        for m2 in (-j2..=j2).step_by(2) {
            out.push((j2, m2));
        }
    }
    out
}

fn s5(x: &NCPoly<RatV>) -> String {
    s5q().display(x)
}

fn as_rational_poly(x: &NCPoly<Radical>) -> Option<NCPoly<RatV>> {
    let mut out = NCPoly::zero();
    for (w, c) in x.terms() {
        out.add_term(w.clone(), c.as_ratv()?);
    }
    Some(out)
}

/// Every `k`-fold product of the given elements.
fn products(gens: &[NCPoly<RatV>], k: usize) -> Vec<NCPoly<RatV>> {
    let alg = s5q();
    let mut cur = vec![NCPoly::one()];
    for _ in 0..k {
        cur = cur.iter().flat_map(|p| gens.iter().map(move |g| alg.mul(p, g))).collect();
    }
    cur
}

/// The coordinate-ring checks up to degree `max_n`:
/// the relations among `H^0(L_1)`, the closed forms for `N = 1`, spanning
/// of `H^0(L_N)` by products of sections, dimension counts and agreement
/// of Peter-Weyl elements with the closed forms for `N <= min(max_n, 2)`.
pub fn ring_relations_check(max_n: i64) -> Result<Vec<Check>, HoloError> {
    let alg = s5q();
    let mut out = Vec::new();

    // (a) H^0(L_1) is spanned by z1, z2, z3 and they q-commute.
    let h1 = h0_solve(1, 3)?;
    let z: Vec<NCPoly<RatV>> = (1..=3).map(|j| NCPoly::letter(z_letter(j))).collect();
    let zspan = Subspace::span_dense(h1.basis.len(), &z.iter().map(|x| h1.coordinates(x).unwrap()).collect::<Vec<_>>())?;
    let eq = subspace_equal(&zspan, &h1.kernel)?;
    out.push(Check::new("H0(L1) = span{z1, z2, z3}", true, eq, eq));
    let q = RatV::q_pow(1);
    for i in 0..3 {
        for j in i + 1..3 {
            let rel = alg.mul(&z[i], &z[j]).sub(&alg.mul(&z[j], &z[i]).scale(&q));
            out.push(Check::vanishes(format!("z{}z{} - q z{}z{}", i + 1, j + 1, j + 1, i + 1), (!rel.is_zero()).then(|| s5(&rel))));
        }
    }

    // Closed forms for N = 1, against the stated values.
    let stated: [(i64, i64, RatV, usize); 3] = [
        (1, -1, q_int(2), 1),
        (1, 1, &RatV::q_pow(1) * &q_int(2), 2),
        (0, 0, RatV::one(), 3),
    ];
    for (j2, m2, c, k) in stated {
        let got = closed_form_section(1, j2, m2)?;
        let want = NCPoly::term(c.clone(), Word::letter(z_letter(k))).to_radical();
        out.push(Check::eq(format!("closed form (1, {j2}, {m2}/2)"), alg.display(&want), alg.display(&got)));
    }

    // Products of sections span H^0(L_N); dimensions match the monomial count.
    let degree_one: Vec<NCPoly<RatV>> =
        section_labels(1).iter().map(|&(j2, m2)| as_rational_poly(&closed_form_section(1, j2, m2).unwrap()).unwrap()).collect();
    for n in 0..=max_n {
        let h = h0_solve(n, n as usize + 2)?;
        out.push(Check::eq(format!("dim H0(L{n})"), expected_h0_dim(n), h.dim()));
        let prods: Option<Vec<Vec<RatV>>> = products(&degree_one, n as usize).iter().map(|p| h.coordinates(p)).collect();
        let spanned = match prods {
            Some(v) => subspace_equal(&Subspace::span_dense(h.basis.len(), &v)?, &h.kernel)?,
            None => false,
        };
        out.push(Check::new(format!("products of closed forms span H0(L{n})"), true, spanned, spanned));
    }

    // Peter-Weyl elements against the closed forms, and up to [j2+1]!.
    for n in 0..=max_n.min(2) {
        for (j2, m2) in section_labels(n) {
            let pw = pw_section(n, j2, m2)?;
            let cf = embed_s5(&closed_form_section(n, j2, m2)?);
            out.push(Check::eq(format!("pw = closed form ({n}, {j2}, {m2}/2)"), crate::qalgebras::suq3().display(&cf), crate::qalgebras::suq3().display(&pw)));
            let scaled = pw.scale(&q_factorial(j2 + 1)?);
            let ok = scaled == cf;
            out.push(Check::new(format!("[j2+1]! pw = closed form ({n}, {j2}, {m2}/2) [informational]"), true, ok, ok));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_instances() {
        let alg = s5q();
        let z = |k| NCPoly::<RatV>::letter(z_letter(k));
        assert_eq!(closed_form_section(1, 1, -1).unwrap(), z(1).scale(&q_int(2)).to_radical());
        assert_eq!(closed_form_section(1, 0, 0).unwrap(), z(3).to_radical());
        for n in 0..4 {
            assert_eq!(closed_form_section(n, 0, 0).unwrap(), alg.pow(&z(3), n as usize).to_radical());
        }
        for n in 0..5 {
            for (j2, m2) in section_labels(n) {
                assert!(closed_form_alpha_quarters(n, j2, m2).is_integer());
            }
        }
        assert!(closed_form_section(1, 2, 0).is_err());
    }

    #[test]
    fn gamma_vanishing() {
        for n in 0..=6 {
            assert_eq!(gamma(n, 2).unwrap().is_zero(), n == 0);
            assert!(!gamma(n, -2).unwrap().is_zero());
        }
    }

    #[test]
    fn small_section_spaces() {
        let h = h0_solve(1, 5).unwrap();
        assert_eq!(h.dim(), 3);
        let h = h0_solve(0, 4).unwrap();
        assert_eq!(h.dim(), 1);
        assert_eq!(h.sections(), vec![NCPoly::one()]);
        assert_eq!(h0_solve(-1, 5).unwrap().dim(), 0);
    }
}
