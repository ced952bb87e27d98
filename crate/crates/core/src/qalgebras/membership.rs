//! Membership in A(S^5_q), A(CP^2_q) and the line bundles L_N, decided by
//! the defining right-invariance conditions.

use crate::ncpoly::{Coeff, NCPoly};
use crate::qcoeff::RatV;
use crate::uqsu3::{Gen, UqElement};

use super::act_right;

/// `K1 K2^2`.
pub fn k1k2sq() -> UqElement {
    UqElement::word(&[Gen::K1, Gen::K2, Gen::K2])
}

/// `a <| E1 = 0`, `a <| F1 = 0` and `a <| K1 = a`, for `a` in A(SU_q(3)).
pub fn is_in_s5<C: Coeff>(a: &NCPoly<C>) -> bool {
    act_right(a, &UqElement::gen(Gen::E1)).is_zero()
        && act_right(a, &UqElement::gen(Gen::F1)).is_zero()
        && act_right(a, &UqElement::gen(Gen::K1)) == *a
}

/// `a` in A(S^5_q) with `a <| K1 K2^2 = q^N a`.
pub fn is_in_ln<C: Coeff>(a: &NCPoly<C>, n: i64) -> bool {
    is_in_s5(a) && act_right(a, &k1k2sq()) == a.scale(&RatV::q_pow(n as i32))
}

pub fn is_in_cp2<C: Coeff>(a: &NCPoly<C>) -> bool {
    is_in_ln(a, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebras::{embed_s5, presentations::*, star_u};

    #[test]
    fn membership_examples() {
        let z1 = embed_s5(&NCPoly::<RatV>::letter(z_letter(1)));
        assert!(is_in_ln(&z1, 1));
        assert!(!is_in_ln(&z1, 0));
        let p = embed_s5(&NCPoly::<RatV>::word(crate::ncpoly::Word::from_slice(&[z_letter(2), zstar_letter(1)])));
        assert!(is_in_cp2(&p));
        assert!(is_in_ln(&star_u(3, 1), -1));
        let u11 = NCPoly::<RatV>::letter(u_letter(1, 1));
        assert!(!is_in_s5(&u11));
    }
}
