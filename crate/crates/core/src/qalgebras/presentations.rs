//! Generators, relations and star tables of A(SU_q(3)) and A(S^5_q).

use crate::ncpoly::{Letter, NCPoly, RewriteError, RewriteSystem, Word};
use crate::qcoeff::RatV;

pub const SUQ3: &str = "suq3";
pub const S5Q: &str = "s5q";

/// Letter order of A(SU_q(3)): off-diagonal entries first, then
/// `u11 < u22 < u33`, so that `u11 u22 u33` leads the determinant.
pub const SUQ3_ORDER: [(usize, usize); 9] = [(1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2), (1, 1), (2, 2), (3, 3)];

/// Letter of `u^i_j` (1-based indices).
pub fn u_letter(i: usize, j: usize) -> Letter {
    SUQ3_ORDER.iter().position(|&p| p == (i, j)).expect("index in 1..=3") as Letter
}

/// Row and column of an A(SU_q(3)) letter.
pub fn u_index(l: Letter) -> (usize, usize) {
    SUQ3_ORDER[l as usize]
}

pub fn suq3_names() -> Vec<String> {
    SUQ3_ORDER.iter().map(|(i, j)| format!("u{i}{j}")).collect()
}

/// S^5_q letters: `z1 z2 z3 z3* z2* z1*`.
pub fn z_letter(j: usize) -> Letter {
    (j - 1) as Letter
}

pub fn zstar_letter(j: usize) -> Letter {
    (6 - j) as Letter
}

/// `(j, starred)` for an S^5_q letter.
pub fn z_index(l: Letter) -> (usize, bool) {
    if l < 3 {
        (l as usize + 1, false)
    } else {
        (6 - l as usize, true)
    }
}

pub fn s5q_names() -> Vec<String> {
    vec!["z1".into(), "z2".into(), "z3".into(), "z3*".into(), "z2*".into(), "z1*".into()]
}

fn q() -> RatV {
    RatV::q_pow(1)
}

fn w2(a: Letter, b: Letter) -> Word {
    Word::from_slice(&[a, b])
}

fn mono(c: RatV, w: Word) -> NCPoly<RatV> {
    NCPoly::term(c, w)
}

/// Relations of A(SU_q(3)) as polynomials equal to zero.
pub fn suq3_relations() -> Vec<NCPoly<RatV>> {
    let u = u_letter;
    let mut rels = Vec::new();
    let one = RatV::one();
    let qm = &q() - &RatV::q_pow(-1);
    for i in 1..=3 {
        for j in i + 1..=3 {
            for k in 1..=3 {
                // same column and same row
                rels.push(mono(one.clone(), w2(u(i, k), u(j, k))).sub(&mono(q(), w2(u(j, k), u(i, k)))));
                rels.push(mono(one.clone(), w2(u(k, i), u(k, j))).sub(&mono(q(), w2(u(k, j), u(k, i)))));
            }
            for k in 1..=3 {
                for l in k + 1..=3 {
                    rels.push(mono(one.clone(), w2(u(i, l), u(j, k))).sub(&mono(one.clone(), w2(u(j, k), u(i, l)))));
                    let p = mono(one.clone(), w2(u(i, k), u(j, l)))
                        .sub(&mono(one.clone(), w2(u(j, l), u(i, k))))
                        .sub(&mono(qm.clone(), w2(u(i, l), u(j, k))));
                    rels.push(p);
                }
            }
        }
    }
    rels.push(determinant().sub(&NCPoly::one()));
    rels
}

/// `sum_sigma (-q)^{l(sigma)} u^1_{s1} u^2_{s2} u^3_{s3}` as a free polynomial.
pub fn determinant() -> NCPoly<RatV> {
    let perms: [([usize; 3], i32); 6] =
        [([1, 2, 3], 0), ([2, 1, 3], 1), ([1, 3, 2], 1), ([2, 3, 1], 2), ([3, 1, 2], 2), ([3, 2, 1], 3)];
    let mut det = NCPoly::zero();
    for (s, len) in perms {
        let c = &RatV::q_pow(len) * &RatV::from_int(if len % 2 == 0 { 1 } else { -1 });
        det.add_term(Word::from_slice(&[u_letter(1, s[0]), u_letter(2, s[1]), u_letter(3, s[2])]), c);
    }
    det
}

/// `(u^i_j)^* = (-q)^{j-i} (u^{k1}_{l1} u^{k2}_{l2} - q u^{k1}_{l2} u^{k2}_{l1})`.
pub fn suq3_star_image(i: usize, j: usize) -> NCPoly<RatV> {
    let ks: Vec<usize> = (1..=3).filter(|&x| x != i).collect();
    let ls: Vec<usize> = (1..=3).filter(|&x| x != j).collect();
    let e = j as i32 - i as i32;
    let pref = &RatV::q_pow(e) * &RatV::from_int(if e.rem_euclid(2) == 0 { 1 } else { -1 });
    let p = mono(RatV::one(), w2(u_letter(ks[0], ls[0]), u_letter(ks[1], ls[1])))
        .sub(&mono(q(), w2(u_letter(ks[0], ls[1]), u_letter(ks[1], ls[0]))));
    p.scale(&pref)
}

/// Relations of A(S^5_q) as polynomials equal to zero, with `[z3, z3]`
/// read as `[z3*, z3]`.
pub fn s5q_relations() -> Vec<NCPoly<RatV>> {
    let (z, zs) = (z_letter, zstar_letter);
    let one = RatV::one();
    let one_m_q2 = &one - &RatV::q_pow(2);
    let mut rels = Vec::new();
    for i in 1..=3 {
        for j in i + 1..=3 {
            rels.push(mono(one.clone(), w2(z(i), z(j))).sub(&mono(q(), w2(z(j), z(i)))));
            rels.push(mono(one.clone(), w2(zs(j), zs(i))).sub(&mono(q(), w2(zs(i), zs(j)))));
        }
    }
    for i in 1..=3 {
        for j in 1..=3 {
            if i != j {
                rels.push(mono(one.clone(), w2(zs(i), z(j))).sub(&mono(q(), w2(z(j), zs(i)))));
            }
        }
    }
    let zz = |j: usize| mono(one.clone(), w2(z(j), zs(j)));
    let comm = |j: usize| mono(one.clone(), w2(zs(j), z(j))).sub(&zz(j));
    rels.push(comm(1));
    rels.push(comm(2).sub(&zz(1).scale(&one_m_q2)));
    rels.push(comm(3).sub(&zz(1).add(&zz(2)).scale(&one_m_q2)));
    rels.push(zz(1).add(&zz(2)).add(&zz(3)).sub(&NCPoly::one()));
    rels
}

pub fn s5q_star_table() -> Vec<NCPoly<RatV>> {
    (0..6).map(|l| NCPoly::letter(5 - l)).collect()
}

pub fn suq3_star_table() -> Vec<NCPoly<RatV>> {
    SUQ3_ORDER.iter().map(|&(i, j)| suq3_star_image(i, j)).collect()
}

/// Raw (uncompleted) systems.
pub fn raw_system(name: &str) -> Result<RewriteSystem, RewriteError> {
    match name {
        SUQ3 => Ok(RewriteSystem::from_relations(SUQ3, suq3_names(), &suq3_relations())?.with_star(suq3_star_table())),
        S5Q => Ok(RewriteSystem::from_relations(S5Q, s5q_names(), &s5q_relations())?.with_star(s5q_star_table())),
        other => Err(RewriteError::UnknownGenerator(other.to_string())),
    }
}
