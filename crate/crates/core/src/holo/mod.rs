//! Holomorphic structure on the quantum projective plane: the operators
//! `del` and `dbar`, (0,1)-forms, frames of the line bundles, their flat
//! connections, holomorphic sections and the bimodule twist.
//!
//! All algebra elements are taken in the A(SU_q(3)) presentation.

pub mod frame;
pub mod sections;
pub mod twist;

use serde::Serialize;

use crate::exactla::LaError;
use crate::ncpoly::{Coeff, NCPoly};
use crate::qalgebras::{act_right, is_in_cp2, suq3};
use crate::qcoeff::{QError, RatV};
use crate::uqsu3::{Gen, RepError, UqElement};

pub use frame::{connection_dbar, flatness_check, frame, verify_frame_identities, ConnectionResult, Frame, FrameComponent};
pub use sections::{closed_form_alpha_quarters, closed_form_section, gamma, h0_solve, ring_relations_check, SectionSpace};
pub use twist::{forms_slice, image_equality, tensor_connection_check, twist_phi1, twist_phi2, twisted_leibniz_check, ImageEquality};

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum HoloError {
    #[error("argument is not in A(CP^2_q)")]
    NotInCp2,
    #[error("argument is not in L_{0}")]
    NotInLn(i64),
    #[error("pair does not satisfy the (0,1)-form conditions")]
    NotAForm,
    #[error("frame for N = {n} failed certification: {what}")]
    Certification { n: i64, what: String },
    #[error("invalid section label: {0}")]
    Label(String),
    #[error("{0} disagrees with {1}")]
    Disagreement(String, String),
    #[error(transparent)]
    La(#[from] LaError),
    #[error(transparent)]
    Q(#[from] QError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// A pair `(v_+, v_-)` of A(SU_q(3)) elements.
#[derive(Clone, Debug, PartialEq)]
pub struct FormPair<C: Coeff = RatV> {
    pub v_plus: NCPoly<C>,
    pub v_minus: NCPoly<C>,
}

impl<C: Coeff> FormPair<C> {
    pub fn new(v_plus: NCPoly<C>, v_minus: NCPoly<C>) -> Self {
        FormPair { v_plus, v_minus }
    }

    pub fn zero() -> Self {
        FormPair::new(NCPoly::zero(), NCPoly::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.v_plus.is_zero() && self.v_minus.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        FormPair::new(self.v_plus.add(&o.v_plus), self.v_minus.add(&o.v_minus))
    }

    pub fn sub(&self, o: &Self) -> Self {
        FormPair::new(self.v_plus.sub(&o.v_plus), self.v_minus.sub(&o.v_minus))
    }

    pub fn scale(&self, c: &RatV) -> Self {
        FormPair::new(self.v_plus.scale(c), self.v_minus.scale(c))
    }

    /// `(v_+ a, v_- a)`.
    pub fn mul_right(&self, a: &NCPoly<C>) -> Self {
        let su = suq3();
        FormPair::new(su.mul(&self.v_plus, a), su.mul(&self.v_minus, a))
    }

    /// `(a v_+, a v_-)`.
    pub fn mul_left(&self, a: &NCPoly<C>) -> Self {
        let su = suq3();
        FormPair::new(su.mul(a, &self.v_plus), su.mul(a, &self.v_minus))
    }

    pub fn act(&self, h: &UqElement) -> Self {
        FormPair::new(act_right(&self.v_plus, h), act_right(&self.v_minus, h))
    }

    pub fn display(&self) -> String {
        let su = suq3();
        format!("({}, {})", su.display(&self.v_plus), su.display(&self.v_minus))
    }
}

/// Serializable rendering of a pair.
#[derive(Clone, Debug, Serialize)]
pub struct PairText {
    pub v_plus: String,
    pub v_minus: String,
}

impl<C: Coeff> From<&FormPair<C>> for PairText {
    fn from(p: &FormPair<C>) -> Self {
        let su = suq3();
        PairText { v_plus: su.display(&p.v_plus), v_minus: su.display(&p.v_minus) }
    }
}

pub(crate) fn f2f1() -> UqElement {
    UqElement::word(&[Gen::F2, Gen::F1])
}

pub(crate) fn f2() -> UqElement {
    UqElement::gen(Gen::F2)
}

/// `(a <| F2F1, a <| F2)` without a membership check.
pub(crate) fn dbar_unchecked<C: Coeff>(a: &NCPoly<C>) -> FormPair<C> {
    let a2 = act_right(a, &f2());
    FormPair::new(act_right(&a2, &UqElement::gen(Gen::F1)), a2)
}

/// `dbar a = (a <| F2F1, a <| F2)`.
pub fn dbar<C: Coeff>(a: &NCPoly<C>) -> Result<FormPair<C>, HoloError> {
    if !is_in_cp2(a) {
        return Err(HoloError::NotInCp2);
    }
    Ok(dbar_unchecked(a))
}

/// `del a = (a <| E2, a <| F2E1)`.
pub fn del<C: Coeff>(a: &NCPoly<C>) -> Result<FormPair<C>, HoloError> {
    if !is_in_cp2(a) {
        return Err(HoloError::NotInCp2);
    }
    let e2 = act_right(a, &UqElement::gen(Gen::E2));
    let f2e1 = act_right(a, &UqElement::word(&[Gen::F2, Gen::E1]));
    Ok(FormPair::new(e2, f2e1))
}

/// The four defining conditions of an antiholomorphic (0,1)-form.
pub fn is_antiholomorphic_form<C: Coeff>(p: &FormPair<C>) -> bool {
    let (vp, vm) = (&p.v_plus, &p.v_minus);
    let k = p.act(&crate::qalgebras::k1k2sq());
    if k != p.scale(&RatV::v_pow(6)) {
        return false;
    }
    let k1 = p.act(&UqElement::gen(Gen::K1));
    if k1 != FormPair::new(vp.scale(&RatV::v_pow(2)), vm.scale(&RatV::v_pow(-2))) {
        return false;
    }
    let f1 = p.act(&UqElement::gen(Gen::F1));
    if !f1.v_plus.is_zero() || f1.v_minus != *vp {
        return false;
    }
    let e1 = p.act(&UqElement::gen(Gen::E1));
    e1.v_plus == *vm && e1.v_minus.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebras::{embed_s5, s5q, z_letter, zstar_letter};

    fn p(j: usize, k: usize) -> NCPoly<RatV> {
        let s5 = s5q();
        embed_s5(&s5.mul(&NCPoly::letter(zstar_letter(j)), &NCPoly::letter(z_letter(k))))
    }

    #[test]
    fn dbar_examples() {
        assert!(dbar(&NCPoly::<RatV>::one()).unwrap().is_zero());
        assert!(dbar(&NCPoly::<RatV>::constant(RatV::q_pow(3))).unwrap().is_zero());
        let d = dbar(&p(3, 3)).unwrap();
        assert!(!d.is_zero());
        assert!(is_antiholomorphic_form(&d));
        assert!(is_antiholomorphic_form(&FormPair::<RatV>::zero()));
        let z1 = embed_s5(&NCPoly::<RatV>::letter(z_letter(1)));
        assert!(!is_antiholomorphic_form(&FormPair::new(z1.clone(), NCPoly::zero())));
        assert_eq!(dbar(&z1), Err(HoloError::NotInCp2));
    }
}
