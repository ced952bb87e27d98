//! Left and right Hopf actions of U_q(su(3)) on the presented algebras.
//!
//! Generators act letter by letter through
//! `Delta(X) = X (x) K + K^-1 (x) X` for `X = E_i, F_i`, and `K_i` is
//! group-like. Words of U_q(su(3)) act generator by generator:
//! `a <| h1 h2 = (a <| h1) <| h2` and `h1 h2 |> a = h1 |> (h2 |> a)`.

use std::sync::OnceLock;

use crate::exactla::{solve, SparseMatrix};
use crate::ncpoly::{Coeff, Letter, NCPoly, Word};
use crate::qcoeff::RatV;
use crate::uqsu3::{Gen, UqElement};

use super::presentations::{u_index, u_letter};
use super::{embed_s5, s5q, suq3, Presentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn parse(s: &str) -> Option<Side> {
        match s {
            "left" => Some(Side::Left),
            "right" => Some(Side::Right),
            _ => None,
        }
    }
}

/// Per-letter action data: the `v`-exponent of each `K_i` eigenvalue and
/// the linear images under `E1, E2, F1, F2`.
struct LetterTable {
    k_exp: Vec<[i32; 2]>,
    /// `ef[g][l]`, `g` indexed E1, E2, F1, F2.
    ef: [Vec<Vec<(Letter, RatV)>>; 4],
}

fn ef_slot(g: Gen) -> usize {
    match g {
        Gen::E1 => 0,
        Gen::E2 => 1,
        Gen::F1 => 2,
        Gen::F2 => 3,
        _ => unreachable!("not an E or F generator"),
    }
}

fn delta(a: usize, b: usize) -> i32 {
    i32::from(a == b)
}

fn suq3_table(side: Side) -> LetterTable {
    let mut k_exp = Vec::new();
    let mut ef: [Vec<Vec<(Letter, RatV)>>; 4] = Default::default();
    for l in 0..9u8 {
        let (j, k) = u_index(l);
        // the index the action moves: row for the right action, column for the left
        let idx = if side == Side::Right { j } else { k };
        k_exp.push([1, 2].map(|i| 2 * (delta(i + 1, idx) - delta(i, idx))));
        for i in 1..=2usize {
            let (e_img, f_img) = match side {
                // u^j_k <| E_i = delta_{i+1,j} u^i_k, u^j_k <| F_i = delta_{i,j} u^{i+1}_k
                Side::Right => ((j == i + 1).then(|| u_letter(i, k)), (j == i).then(|| u_letter(i + 1, k))),
                // E_i |> u^j_k = delta_{i,k} u^j_{i+1}, F_i |> u^j_k = delta_{i+1,k} u^j_i
                Side::Left => ((k == i).then(|| u_letter(j, i + 1)), (k == i + 1).then(|| u_letter(j, i))),
            };
            ef[i - 1].push(e_img.map(|x| vec![(x, RatV::one())]).unwrap_or_default());
            ef[i + 1].push(f_img.map(|x| vec![(x, RatV::one())]).unwrap_or_default());
        }
    }
    LetterTable { k_exp, ef }
}

fn table(side: Side) -> &'static LetterTable {
    static R: OnceLock<LetterTable> = OnceLock::new();
    static L: OnceLock<LetterTable> = OnceLock::new();
    match side {
        Side::Right => R.get_or_init(|| suq3_table(Side::Right)),
        Side::Left => L.get_or_init(|| suq3_table(Side::Left)),
    }
}

/// The left action restricted to A(S^5_q), expressed on the z letters. Each
/// image is found in A(SU_q(3)) and written back as an exact linear
/// combination of embedded letters.
fn s5_left_table() -> &'static LetterTable {
    static T: OnceLock<LetterTable> = OnceLock::new();
    T.get_or_init(|| {
        let embedded: Vec<NCPoly<RatV>> = (0..6u8).map(|l| embed_s5(&NCPoly::letter(l))).collect();
        let mut words: Vec<Word> = embedded.iter().flat_map(|p| p.terms().map(|(w, _)| w.clone())).collect();
        words.sort();
        words.dedup();
        let pos = |w: &Word| words.binary_search(w).ok();
        let mut m = SparseMatrix::zeros(words.len(), 6);
        for (c, p) in embedded.iter().enumerate() {
            for (w, x) in p.terms() {
                m.set(pos(w).unwrap(), c, x.clone());
            }
        }
        let express = |t: &NCPoly<RatV>| -> Vec<(Letter, RatV)> {
            let mut rhs = vec![RatV::zero(); words.len()];
            for (w, x) in t.terms() {
                let i = pos(w).expect("left action leaves A(S^5_q)");
                rhs[i] = x.clone();
            }
            let sol = solve(&m, &rhs).unwrap().expect("left action leaves A(S^5_q)");
            sol.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(l, x)| (l as Letter, x)).collect()
        };
        let mut k_exp = Vec::new();
        let mut ef: [Vec<Vec<(Letter, RatV)>>; 4] = Default::default();
        for (l, e) in embedded.iter().enumerate() {
            let mut ks = [0i32; 2];
            for i in 1..=2 {
                let img = express(&apply_gen(table(Side::Left), suq3(), Gen::k(i), e));
                assert!(img.len() == 1 && img[0].0 as usize == l && img[0].1.is_monomial(), "K acts diagonally");
                ks[i - 1] = img[0].1.numer().low_exp();
            }
            k_exp.push(ks);
            for g in [Gen::E1, Gen::E2, Gen::F1, Gen::F2] {
                ef[ef_slot(g)].push(express(&apply_gen(table(Side::Left), suq3(), g, e)));
            }
        }
        LetterTable { k_exp, ef }
    })
}

fn k_sign(g: Gen) -> (usize, i32) {
    match g {
        Gen::K1 => (0, 1),
        Gen::K1i => (0, -1),
        Gen::K2 => (1, 1),
        Gen::K2i => (1, -1),
        _ => unreachable!(),
    }
}

/// One generator applied through the coproduct, then reduced.
fn apply_gen<C: Coeff>(t: &LetterTable, pres: &Presentation, g: Gen, p: &NCPoly<C>) -> NCPoly<C> {
    let mut out = NCPoly::zero();
    if g.is_k() {
        let (i, s) = k_sign(g);
        for (w, c) in p.terms() {
            let e: i32 = w.letters().iter().map(|&l| t.k_exp[l as usize][i]).sum();
            out.add_term(w.clone(), c.scale(&RatV::v_pow(s * e)));
        }
        return out;
    }
    let i = g.index() - 1;
    let images = &t.ef[ef_slot(g)];
    for (w, c) in p.terms() {
        let s = w.letters();
        // exponent of the K_i factors to the right of each position
        let total: i32 = s.iter().map(|&l| t.k_exp[l as usize][i]).sum();
        let mut before = 0;
        for (pos, &l) in s.iter().enumerate() {
            let here = t.k_exp[l as usize][i];
            let after = total - before - here;
            // prefix <| K^-1, suffix <| K
            let e = after - before;
            for (nl, x) in &images[l as usize] {
                let mut nw = s.to_vec();
                nw[pos] = *nl;
                out.add_term(Word::from_slice(&nw), c.scale(&(x * &RatV::v_pow(e))));
            }
            before += here;
        }
    }
    pres.reduce(&out)
}

fn apply_word<C: Coeff>(t: &LetterTable, pres: &Presentation, side: Side, h: &UqElement, a: &NCPoly<C>) -> NCPoly<C> {
    let mut total = NCPoly::zero();
    for (w, c) in h.terms() {
        let mut x = a.clone();
        let order: Box<dyn Iterator<Item = &Gen>> = match side {
            Side::Right => Box::new(w.iter()),
            Side::Left => Box::new(w.iter().rev()),
        };
        for &g in order {
            if x.is_zero() {
                break;
            }
            x = apply_gen(t, pres, g, &x);
        }
        total.add_assign(&x.scale(c));
    }
    total
}

/// `a <| h` for `a` in A(SU_q(3)).
pub fn act_right<C: Coeff>(a: &NCPoly<C>, h: &UqElement) -> NCPoly<C> {
    apply_word(table(Side::Right), suq3(), Side::Right, h, a)
}

/// `h |> a` for `a` in A(SU_q(3)).
pub fn act_left<C: Coeff>(h: &UqElement, a: &NCPoly<C>) -> NCPoly<C> {
    apply_word(table(Side::Left), suq3(), Side::Left, h, a)
}

/// `h |> x` computed inside A(S^5_q), which is stable under the left action.
pub fn act_left_s5<C: Coeff>(h: &UqElement, x: &NCPoly<C>) -> NCPoly<C> {
    apply_word(s5_left_table(), s5q(), Side::Left, h, x)
}

/// `x <| g` for a single generator, for callers that iterate themselves.
pub fn act_right_gen<C: Coeff>(a: &NCPoly<C>, g: Gen) -> NCPoly<C> {
    apply_gen(table(Side::Right), suq3(), g, a)
}

pub fn act_left_gen<C: Coeff>(g: Gen, a: &NCPoly<C>) -> NCPoly<C> {
    apply_gen(table(Side::Left), suq3(), g, a)
}

/// Exponents of `v` in the `K1`, `K2` eigenvalues of each A(SU_q(3)) letter.
pub fn suq3_k_exponents(side: Side) -> Vec<[i32; 2]> {
    table(side).k_exp.clone()
}

/// Exponents of `v` in the left `K1`, `K2` eigenvalues of each S^5_q letter.
pub fn s5_left_k_exponents() -> Vec<[i32; 2]> {
    s5_left_table().k_exp.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebras::presentations::{z_letter, zstar_letter};

    fn z(j: usize) -> NCPoly<RatV> {
        NCPoly::letter(u_letter(3, j))
    }

    #[test]
    fn right_action_examples() {
        for k in 1..=3 {
            assert_eq!(act_right(&z(k), &UqElement::gen(Gen::E2)), NCPoly::letter(u_letter(2, k)));
            assert!(act_right(&z(k), &UqElement::gen(Gen::F2)).is_zero());
            let w = act_right(&z(k), &UqElement::word(&[Gen::K1, Gen::K2, Gen::K2]));
            assert_eq!(w, z(k).scale(&RatV::q_pow(1)));
        }
        let u11 = NCPoly::<RatV>::letter(u_letter(1, 1));
        assert!(act_right(&u11, &UqElement::gen(Gen::E1)).is_zero());
    }

    #[test]
    fn s5_left_table_shape() {
        let t = s5_left_table();
        // E_i |> z_i = z_{i+1}
        assert_eq!(t.ef[0][z_letter(1) as usize], vec![(z_letter(2), RatV::one())]);
        // starred letters carry opposite left weights
        for j in 1..=3 {
            let a = t.k_exp[z_letter(j) as usize];
            let b = t.k_exp[zstar_letter(j) as usize];
            assert_eq!([a[0] + b[0], a[1] + b[1]], [0, 0]);
        }
    }
}
