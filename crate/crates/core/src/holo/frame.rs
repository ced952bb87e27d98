//! Frames `Psi_N` of the line bundles and the connections they induce.
//!
//! A component is stored as `psi_J = c_J m_J` with `c_J` a radical and
//! `m_J` a monomial element, so that every product `psi_J^* x psi_J` only
//! involves the rational weight `r_J = c_J^2`.
//!
//! For `N >= 0`, `psi_J^* = sqrt([j,k,l]!) z^J`. For `N < 0` the frame is
//! mirrored, `psi_J = c_J z^J`, and the weights `r_J` are solved exactly
//! from `Psi^dagger Psi = 1`: the literal weights `[j,k,l]!` do not
//! normalize it (already `sum_i z_i^* z_i != 1`).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::exactla::{solve, SparseMatrix};
use crate::ncpoly::{Coeff, NCPoly, Word};
use crate::qalgebras::{act_right, embed_s5, is_in_ln, s5q, suq3, z_monomial};
use crate::qcoeff::{q_trinomial, Radical, RatV};
use crate::report::Check;
use crate::uqsu3::{Gen, UqElement};

use super::{f2, f2f1, FormPair, HoloError, PairText};

#[derive(Clone, Debug)]
pub struct FrameComponent {
    /// `(j, k, l)` with `j + k + l = |N|`.
    pub index: [usize; 3],
    pub coeff: Radical,
    /// `coeff^2`.
    pub weight: RatV,
    pub monomial: NCPoly<RatV>,
    pub monomial_star: NCPoly<RatV>,
}

#[derive(Clone, Debug)]
pub struct Frame {
    pub n: i64,
    pub components: Vec<FrameComponent>,
}

fn indices(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for j in (0..=n).rev() {
        for k in (0..=n - j).rev() {
            out.push([j, k, n - j - k]);
        }
    }
    out
}

/// `z^J` and `(z^J)^*` in A(S^5_q).
fn s5_pair(ix: [usize; 3]) -> (NCPoly<RatV>, NCPoly<RatV>) {
    let s5 = s5q();
    let z = s5.reduce(&NCPoly::word(z_monomial(ix, [0; 3])));
    let zs = s5.star(&z);
    (z, zs)
}

/// Exact weights `r_J` with `sum_J r_J (z^J)^* z^J = 1`.
fn mirrored_weights(ix: &[[usize; 3]]) -> Result<Vec<RatV>, HoloError> {
    let s5 = s5q();
    let prods: Vec<NCPoly<RatV>> = ix
        .iter()
        .map(|&i| {
            let (z, zs) = s5_pair(i);
            s5.mul(&zs, &z)
        })
        .collect();
    let mut words: Vec<Word> = prods.iter().flat_map(|p| p.terms().map(|(w, _)| w.clone())).collect();
    words.push(Word::empty());
    words.sort();
    words.dedup();
    let mut m = SparseMatrix::zeros(words.len(), ix.len());
    for (c, p) in prods.iter().enumerate() {
        for (w, x) in p.terms() {
            m.set(words.binary_search(w).unwrap(), c, x.clone());
        }
    }
    let mut rhs = vec![RatV::zero(); words.len()];
    rhs[words.binary_search(&Word::empty()).unwrap()] = RatV::one();
    let n = -(ix[0].iter().sum::<usize>() as i64);
    if crate::exactla::rank(&m) != ix.len() {
        return Err(HoloError::Certification { n, what: "mirrored weights are not unique".into() });
    }
    solve(&m, &rhs)?.ok_or(HoloError::Certification { n, what: "no mirrored weights normalize the frame".into() })
}

fn build(n: i64) -> Result<Frame, HoloError> {
    let ix = indices(n.unsigned_abs() as usize);
    let weights = if n >= 0 {
        ix.iter().map(|i| q_trinomial(i[0] as i64, i[1] as i64, i[2] as i64)).collect::<Result<Vec<_>, _>>()?
    } else {
        mirrored_weights(&ix)?
    };
    let mut components = Vec::new();
    for (i, r) in ix.iter().zip(weights) {
        let coeff = Radical::sqrt_of(&r)?;
        if (&coeff * &coeff).as_ratv().as_ref() != Some(&r) {
            return Err(HoloError::Certification { n, what: format!("sqrt of {r}") });
        }
        let (z, zs) = s5_pair(*i);
        let (monomial, monomial_star) = if n >= 0 { (embed_s5(&zs), embed_s5(&z)) } else { (embed_s5(&z), embed_s5(&zs)) };
        components.push(FrameComponent { index: *i, coeff, weight: r, monomial, monomial_star });
    }
    let f = Frame { n, components };
    let g = f.gram();
    if g != NCPoly::one() {
        return Err(HoloError::Certification { n, what: format!("Psi^dagger Psi = {}", suq3().display(&g)) });
    }
    Ok(f)
}

/// The certified frame `Psi_N`; cached per `N`.
pub fn frame(n: i64) -> Result<Arc<Frame>, HoloError> {
    static CACHE: OnceLock<Mutex<HashMap<i64, Arc<Frame>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().unwrap().get(&n) {
        return Ok(f.clone());
    }
    let f = Arc::new(build(n)?);
    cache.lock().unwrap().insert(n, f.clone());
    Ok(f)
}

impl Frame {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn psi(&self, i: usize) -> NCPoly<Radical> {
        let c = &self.components[i];
        c.monomial.to_radical().scale_coeff(&c.coeff)
    }

    pub fn psi_dagger(&self, i: usize) -> NCPoly<Radical> {
        let c = &self.components[i];
        c.monomial_star.to_radical().scale_coeff(&c.coeff)
    }

    /// `Psi^dagger Psi = sum_J r_J m_J^* m_J`.
    pub fn gram(&self) -> NCPoly<RatV> {
        let su = suq3();
        let mut g = NCPoly::zero();
        for c in &self.components {
            g.add_assign(&su.mul(&c.monomial_star, &c.monomial).scale(&c.weight));
        }
        g
    }

    /// `Psi^dagger (Psi x <| h) = sum_J r_J m_J^* ((m_J x) <| h)`.
    pub fn sandwich<C: Coeff>(&self, x: &NCPoly<C>, h: &UqElement) -> NCPoly<C> {
        let su = suq3();
        let mut out = NCPoly::zero();
        for c in &self.components {
            let m = c.monomial.map_coeffs(|r| C::from_ratv(r.clone()));
            let ms = c.monomial_star.map_coeffs(|r| C::from_ratv(r.clone()));
            let inner = act_right(&su.mul(&m, x), h);
            out.add_assign(&su.mul(&ms, &inner).scale(&c.weight));
        }
        out
    }

    /// `q^-N Psi^dagger dbar(Psi xi)`.
    pub fn connection<C: Coeff>(&self, xi: &NCPoly<C>) -> FormPair<C> {
        let s = RatV::q_pow(-self.n as i32);
        FormPair::new(self.sandwich(xi, &f2f1()).scale(&s), self.sandwich(xi, &f2()).scale(&s))
    }
}

fn residual(p: &NCPoly<RatV>) -> Option<String> {
    (!p.is_zero()).then(|| suq3().display(p))
}

fn all_vanish<'a>(name: &str, items: impl Iterator<Item = ([usize; 3], NCPoly<RatV>)> + 'a) -> Check {
    for (ix, p) in items {
        if let Some(r) = residual(&p) {
            return Check::vanishes(name, Some(format!("J = {ix:?}: {r}")));
        }
    }
    Check::vanishes(name, None)
}

fn g(x: Gen) -> UqElement {
    UqElement::gen(x)
}

/// The frame identities, component-wise and exact. For `N >= 0`:
/// `Psi^dagger <| F2 = 0`, `Psi^dagger (Psi <| F2) = 0`,
/// `Psi^dagger (Psi <| F2F1) = 0`, `Psi <| F1 = 0`, `Psi <| K1 = Psi`,
/// `Psi <| K2 = q^{-N/2} Psi`. For `N < 0` the mirrored frame satisfies
/// `Psi^dagger <| E2 = 0` and `Psi <| E1 = 0` instead; the two sandwich
/// identities keep `F2` and `F2F1`.
pub fn verify_frame_identities(n: i64) -> Result<Vec<Check>, HoloError> {
    let f = frame(n)?;
    let su = suq3();
    let cs = &f.components;
    let mut out = vec![Check::eq("Psi^dagger Psi = 1", "1", su.display(&f.gram()))];
    let (g1, g2) = if n >= 0 { (Gen::F1, Gen::F2) } else { (Gen::E1, Gen::E2) };
    let (n1, n2) = (g1.name(), g2.name());
    out.push(all_vanish(&format!("Psi^dagger <| {n2}"), cs.iter().map(|c| (c.index, act_right(&c.monomial_star, &g(g2))))));
    let sandwich = |h: &UqElement| -> NCPoly<RatV> {
        let mut s = NCPoly::zero();
        for c in cs {
            s.add_assign(&su.mul(&c.monomial_star, &act_right(&c.monomial, h)).scale(&c.weight));
        }
        s
    };
    out.push(Check::vanishes("Psi^dagger (Psi <| F2)", residual(&sandwich(&f2()))));
    out.push(Check::vanishes("Psi^dagger (Psi <| F2F1)", residual(&sandwich(&f2f1()))));
    out.push(all_vanish(&format!("Psi <| {n1}"), cs.iter().map(|c| (c.index, act_right(&c.monomial, &g(g1))))));
    out.push(all_vanish("Psi <| K1 - Psi", cs.iter().map(|c| (c.index, act_right(&c.monomial, &g(Gen::K1)).sub(&c.monomial)))));
    let k2 = RatV::v_pow(-2 * n as i32);
    out.push(all_vanish(
        "Psi <| K2 - q^(-N/2) Psi",
        cs.iter().map(|c| (c.index, act_right(&c.monomial, &g(Gen::K2)).sub(&c.monomial.scale(&k2)))),
    ));
    Ok(out)
}

/// `Psi^dagger (P_N <| F2) = 0` and `Psi^dagger (P_N <| F2F1) = 0`,
/// `P_N = Psi Psi^dagger`; for `N < 0` with `E2`, `E2E1` in place of
/// `F2`, `F2F1`. Entry `J` equals `c_J` times
/// `sum_I r_I m_I^* ((m_I m_J^*) <| h)`, which is what is tested.
pub fn flatness_check(n: i64) -> Result<Vec<Check>, HoloError> {
    let f = frame(n)?;
    let mut out = Vec::new();
    let hs = if n >= 0 {
        [("Psi^dagger (P <| F2)", f2()), ("Psi^dagger (P <| F2F1)", f2f1())]
    } else {
        [("Psi^dagger (P <| E2)", g(Gen::E2)), ("Psi^dagger (P <| E2E1)", UqElement::word(&[Gen::E2, Gen::E1]))]
    };
    for (name, h) in hs {
        let entries = f.components.iter().map(|cj| (cj.index, f.sandwich(&cj.monomial_star, &h)));
        out.push(all_vanish(name, entries));
    }
    Ok(out)
}

/// Both evaluations of `nabla_N^dbar xi`.
#[derive(Clone, Debug)]
pub struct ConnectionResult<C: Coeff = RatV> {
    pub frame_form: FormPair<C>,
    pub closed_form: FormPair<C>,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConnectionText {
    pub frame_form: PairText,
    pub closed_form: PairText,
    pub agree: bool,
}

impl<C: Coeff> From<&ConnectionResult<C>> for ConnectionText {
    fn from(r: &ConnectionResult<C>) -> Self {
        ConnectionText { frame_form: (&r.frame_form).into(), closed_form: (&r.closed_form).into(), agree: r.agree }
    }
}

/// `q^-N Psi^dagger ((Psi xi) <| F2F1, (Psi xi) <| F2)` against
/// `q^{-N/2} (xi <| F2F1, xi <| F2)`.
pub fn connection_dbar<C: Coeff>(n: i64, xi: &NCPoly<C>) -> Result<ConnectionResult<C>, HoloError> {
    if !is_in_ln(xi, n) {
        return Err(HoloError::NotInLn(n));
    }
    let f = frame(n)?;
    let frame_form = f.connection(xi);
    let closed_form = super::dbar_unchecked(xi).scale(&RatV::v_pow(-2 * n as i32));
    let agree = frame_form == closed_form;
    Ok(ConnectionResult { frame_form, closed_form, agree })
}

/// Unnormalized check on the literal frame weights for `N < 0`:
/// `sum_J [j,k,l]! (z^J)^* z^J` in A(S^5_q).
pub fn literal_mirrored_gram(n: usize) -> Result<NCPoly<RatV>, HoloError> {
    let s5 = s5q();
    let mut g = NCPoly::zero();
    for i in indices(n) {
        let (z, zs) = s5_pair(i);
        g.add_assign(&s5.mul(&zs, &z).scale(&q_trinomial(i[0] as i64, i[1] as i64, i[2] as i64)?));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_frames() {
        let f0 = frame(0).unwrap();
        assert_eq!(f0.len(), 1);
        assert_eq!(f0.psi(0), NCPoly::one());
        let f1 = frame(1).unwrap();
        assert_eq!(f1.len(), 3);
        assert!(f1.components.iter().all(|c| c.coeff == Radical::one()));
        assert_eq!(frame(2).unwrap().len(), 6);
    }

    #[test]
    fn mirrored_frame_weights() {
        assert_ne!(literal_mirrored_gram(1).unwrap(), NCPoly::one());
        let f = frame(-1).unwrap();
        let w: Vec<RatV> = f.components.iter().map(|c| c.weight.clone()).collect();
        // indices (1,0,0), (0,1,0), (0,0,1)
        assert_eq!(w, vec![RatV::q_pow(4), RatV::q_pow(2), RatV::one()]);
    }

    #[test]
    fn identities_n1() {
        for c in verify_frame_identities(1).unwrap().into_iter().chain(flatness_check(1).unwrap()) {
            assert!(c.pass, "{c:?}");
        }
    }

    #[test]
    fn identities_mirrored() {
        for n in [-1, -2] {
            for c in verify_frame_identities(n).unwrap().into_iter().chain(flatness_check(n).unwrap()) {
                assert!(c.pass, "N = {n}: {c:?}");
            }
        }
    }
}
