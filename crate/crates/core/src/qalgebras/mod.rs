//! The presented algebras A(SU_q(3)) and A(S^5_q), their Hopf actions,
//! Peter-Weyl elements and the line-bundle subspaces.

pub mod actions;
pub mod membership;
pub mod operator;
pub mod peter_weyl;
pub mod presentations;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::ncpoly::{Coeff, NCPoly, RewriteError, RewriteSystem, Word};
use crate::qcoeff::RatV;

pub use actions::{act_left, act_right, Side};
pub use membership::{is_in_cp2, is_in_ln, is_in_s5, k1k2sq};
pub use operator::{operator_matrix, OperatorError};
pub use peter_weyl::{pw_element, q_equivariance_check, x_operator};
pub use presentations::{u_letter, z_letter, zstar_letter, S5Q, SUQ3};

/// Completion degree used for A(SU_q(3)) computations; every word handled
/// by the library must have length at most this.
pub const SUQ3_WATERMARK: usize = 16;
/// Completion degree used for A(S^5_q). The completed system has rules of
/// length at most 2, so it is confluent in every degree; the watermark only
/// bounds the length checks.
pub const S5Q_WATERMARK: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Alg {
    Suq3,
    S5q,
}

impl Alg {
    pub fn name(self) -> &'static str {
        match self {
            Alg::Suq3 => SUQ3,
            Alg::S5q => S5Q,
        }
    }

    pub fn parse(s: &str) -> Option<Alg> {
        match s {
            SUQ3 => Some(Alg::Suq3),
            S5Q => Some(Alg::S5q),
            _ => None,
        }
    }
}

/// A presented algebra: a completed rewrite system with its star table.
#[derive(Debug)]
pub struct Presentation {
    pub alg: Alg,
    sys: RewriteSystem,
}

static SUQ3_PRES: OnceLock<Presentation> = OnceLock::new();
static S5Q_PRES: OnceLock<Presentation> = OnceLock::new();

fn cell(alg: Alg) -> &'static OnceLock<Presentation> {
    match alg {
        Alg::Suq3 => &SUQ3_PRES,
        Alg::S5q => &S5Q_PRES,
    }
}

fn default_watermark(alg: Alg) -> usize {
    match alg {
        Alg::Suq3 => SUQ3_WATERMARK,
        Alg::S5q => S5Q_WATERMARK,
    }
}

/// The raw relations completed up to `degree`.
pub fn build_system(alg: Alg, degree: usize) -> Result<RewriteSystem, RewriteError> {
    let raw = presentations::raw_system(alg.name())?;
    let star = raw.star_table().expect("presentations carry star tables").to_vec();
    Ok(raw.complete(degree)?.with_star(star))
}

/// Installs a completed system (e.g. loaded from a cache file). Fails if the
/// presentation is already in use or the system does not reach the required
/// watermark.
pub fn install(alg: Alg, sys: RewriteSystem) -> Result<(), RewriteError> {
    if sys.watermark() < default_watermark(alg) {
        return Err(RewriteError::Cache(format!("watermark {} below required {}", sys.watermark(), default_watermark(alg))));
    }
    let star = presentations::raw_system(alg.name())?.star_table().unwrap().to_vec();
    cell(alg)
        .set(Presentation { alg, sys: sys.with_star(star) })
        .map_err(|_| RewriteError::Cache("presentation already initialized".into()))
}

impl Presentation {
    pub fn get(alg: Alg) -> &'static Presentation {
        cell(alg).get_or_init(|| Presentation {
            alg,
            sys: build_system(alg, default_watermark(alg)).expect("presentation completes"),
        })
    }

    pub fn system(&self) -> &RewriteSystem {
        &self.sys
    }

    fn check_degree<C: Coeff>(&self, p: &NCPoly<C>) {
        assert!(
            p.degree() <= self.sys.watermark(),
            "{} word of length {} exceeds completion watermark {}",
            self.alg.name(),
            p.degree(),
            self.sys.watermark()
        );
    }

    pub fn reduce<C: Coeff>(&self, p: &NCPoly<C>) -> NCPoly<C> {
        self.check_degree(p);
        self.sys.normal_form(p)
    }

    pub fn mul<C: Coeff>(&self, a: &NCPoly<C>, b: &NCPoly<C>) -> NCPoly<C> {
        self.reduce(&a.concat_mul(b))
    }

    pub fn product<C: Coeff>(&self, factors: &[NCPoly<C>]) -> NCPoly<C> {
        factors.iter().fold(NCPoly::one(), |acc, f| self.mul(&acc, f))
    }

    pub fn pow<C: Coeff>(&self, a: &NCPoly<C>, n: usize) -> NCPoly<C> {
        (0..n).fold(NCPoly::one(), |acc, _| self.mul(&acc, a))
    }

    pub fn star<C: Coeff>(&self, p: &NCPoly<C>) -> NCPoly<C> {
        self.check_degree(p);
        self.sys.star(p).expect("presentations carry star tables")
    }

    pub fn letter(&self, name: &str) -> Result<NCPoly<RatV>, RewriteError> {
        Ok(NCPoly::letter(self.sys.letter_index(name)?))
    }

    pub fn display<C: Coeff>(&self, p: &NCPoly<C>) -> String {
        p.display_with(self.sys.names())
    }
}

pub fn suq3() -> &'static Presentation {
    Presentation::get(Alg::Suq3)
}

pub fn s5q() -> &'static Presentation {
    Presentation::get(Alg::S5q)
}

/// `(u^i_j)^*` expanded into quantum minors and reduced.
pub fn star_u(i: usize, j: usize) -> NCPoly<RatV> {
    suq3().reduce(&presentations::suq3_star_image(i, j))
}

/// Images of the S^5_q letters in A(SU_q(3)).
fn embed_table() -> &'static [NCPoly<RatV>] {
    static T: OnceLock<Vec<NCPoly<RatV>>> = OnceLock::new();
    T.get_or_init(|| {
        (0..6u8)
            .map(|l| {
                let (j, starred) = presentations::z_index(l);
                if starred { star_u(3, j) } else { NCPoly::letter(u_letter(3, j)) }
            })
            .collect()
    })
}

/// Embedding of a single S^5_q word. Words are split at the first starred
/// letter; starred blocks are built by prefix recursion and memoized, since
/// filtered slices share most of them.
fn embed_word(w: &Word) -> NCPoly<RatV> {
    static MEMO: OnceLock<Mutex<HashMap<Word, NCPoly<RatV>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(p) = memo.lock().unwrap().get(w) {
        return p.clone();
    }
    let table = embed_table();
    let su = suq3();
    let s = w.letters();
    let p = match s.len() {
        0 => NCPoly::one(),
        1 => table[s[0] as usize].clone(),
        n => match s.iter().position(|&l| l >= 3) {
            Some(k) if k > 0 => su.mul(&embed_word(&Word::from_slice(&s[..k])), &embed_word(&Word::from_slice(&s[k..]))),
            _ => su.mul(&embed_word(&Word::from_slice(&s[..n - 1])), &table[s[n - 1] as usize]),
        },
    };
    memo.lock().unwrap().insert(w.clone(), p.clone());
    p
}

/// `z_j -> u^3_j`, `z_j^* -> (u^3_j)^*`, reduced in A(SU_q(3)).
pub fn embed_s5<C: Coeff>(x: &NCPoly<C>) -> NCPoly<C> {
    let mut total = NCPoly::zero();
    for (w, c) in x.terms() {
        total.add_assign(&embed_word(w).map_coeffs(|r| C::from_ratv(r.clone())).scale_coeff(c));
    }
    total
}

/// Monomial `z1^a z2^b z3^c (z3*)^f (z2*)^e (z1*)^d` given exponents
/// `[a, b, c]` and `[d, e, f]` (starred exponents indexed by `j`).
pub fn z_monomial(z: [usize; 3], zs: [usize; 3]) -> Word {
    let mut w = Vec::new();
    for j in 1..=3 {
        w.extend(std::iter::repeat_n(z_letter(j), z[j - 1]));
    }
    for j in (1..=3).rev() {
        w.extend(std::iter::repeat_n(zstar_letter(j), zs[j - 1]));
    }
    Word::from_slice(&w)
}

/// `(z-degree, z*-degree)` of an S^5_q word.
pub fn bidegree(w: &Word) -> (usize, usize) {
    let a = w.letters().iter().filter(|&&l| l < 3).count();
    (a, w.len() - a)
}

/// Normal S^5_q words of bidegree `(a, b)`.
pub fn s5_bidegree_basis(a: usize, b: usize) -> Vec<Word> {
    let sys = s5q().system();
    let (a, b) = (a as i64, b as i64);
    sys.graded_basis(|l| if l < 3 { [1, 0] } else { [0, 1] }, (a + b) as usize, |w, _| w[0] <= a && w[1] <= b, |w, _| *w == [a, b])
}

/// Normal S^5_q words with `a - b = n` and `a + b <= d`.
pub fn ln_slice_basis(n: i64, d: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for b in 0..=d {
        let a = b as i64 + n;
        if a < 0 || a as usize + b > d {
            continue;
        }
        out.extend(s5_bidegree_basis(a as usize, b));
    }
    out.sort();
    out
}
