//! Property tests over randomized inputs. Random algebra elements are built
//! from a proptest-chosen seed.

use cp2q::exactla::{kernel, rank, subspace_equal, SparseMatrix, SparseVec, Subspace};
use cp2q::haar;
use cp2q::holo::{dbar, is_antiholomorphic_form, twisted_leibniz_check};
use cp2q::ncpoly::{Letter, NCPoly};
use cp2q::numeric;
use cp2q::qalgebras::{act_left, act_right, embed_s5, is_in_cp2, is_in_ln, ln_slice_basis, s5q, suq3};
use cp2q::qcoeff::{q_int, Radical, RatV, SqrtFactor};
use cp2q::suite::random_poly;
use cp2q::uqsu3::{Gen, UqElement};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ratv() -> impl Strategy<Value = RatV> {
    (-4i64..=4, -3i32..=3, -4i64..=4, 0i32..=2).prop_map(|(a, e, b, f)| {
        let num = &RatV::from_int(a) + &(&RatV::from_int(b) * &RatV::q_pow(e));
        let den = &RatV::one() + &RatV::q_pow(f + 1);
        &num / &den
    })
}

fn radical() -> impl Strategy<Value = Radical> {
    prop::collection::vec((1i64..=5, -1i64..=1, -2i64..=2), 1..=3).prop_map(|parts| {
        let mut acc = Radical::zero();
        for (n, mult, c) in parts {
            let root = Radical::sqrt_factored(&[SqrtFactor::QInt { n, mult }]).unwrap();
            acc.add_assign_ref(&root.scale(&RatV::from_int(c)));
        }
        acc
    })
}

fn suq3_letters() -> Vec<Letter> {
    (0..9).collect()
}

fn s5_letters() -> Vec<Letter> {
    (0..6).collect()
}

fn g(x: Gen) -> UqElement {
    UqElement::gen(x)
}

/// `(a, b)` pairs for the coproduct `Delta(h) = sum h1 (x) h2` of a
/// generator.
fn coproduct(x: Gen) -> Vec<(UqElement, UqElement)> {
    let i = x.index();
    match x {
        Gen::E1 | Gen::E2 | Gen::F1 | Gen::F2 => vec![(g(x), g(Gen::k(i))), (g(Gen::k_inv(i)), g(x))],
        _ => vec![(g(x), g(x))],
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratv_field_laws(a in ratv(), b in ratv(), c in ratv()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn radical_arithmetic(a in radical(), b in radical(), c in radical()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn radical_zero_test_matches_numeric(a in radical(), b in radical()) {
        let s = &a + &b;
        let d = &(&s * &s) - &(&(&(&a * &a) + &(&b * &b)) + &(&a * &b).scale(&RatV::from_int(2)));
        prop_assert!(d.is_zero());
        let e = &a - &b;
        for q0 in [1.0 / 3.0, 0.5, 2.0 / 3.0] {
            prop_assert!(d.eval_f64(q0).abs() < 1e-9);
            if e.is_zero() {
                prop_assert!(e.eval_f64(q0).abs() < 1e-9);
            }
        }
        if e.eval_f64(0.5).abs() > 1e-9 {
            prop_assert!(!e.is_zero());
        }
    }

    #[test]
    fn q_int_matches_float(n in -8i64..=8) {
        prop_assert!((q_int(n).eval_f64(0.5) - numeric::q_int(n, 0.5)).abs() < 1e-9);
    }

    #[test]
    fn subspace_equal_is_reflexive_and_symmetric(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut vecs = |k: usize| -> Vec<SparseVec> {
            (0..k)
                .map(|_| {
                    let mut v = SparseVec::new();
                    for j in 0..6 {
                        if r.gen_bool(0.5) {
                            v.insert(j, RatV::from_int(r.gen_range(1..=3)));
                        }
                    }
                    v
                })
                .collect()
        };
        let a = Subspace::span(6, &vecs(3)).unwrap();
        let b = Subspace::span(6, &vecs(3)).unwrap();
        prop_assert!(subspace_equal(&a, &a).unwrap());
        prop_assert_eq!(subspace_equal(&a, &b).unwrap(), subspace_equal(&b, &a).unwrap());
        prop_assert_eq!(subspace_equal(&a, &b).unwrap(), a.contains_subspace(&b) && b.contains_subspace(&a));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rank_plus_nullity(seed in any::<u64>(), rows in 1usize..=20, cols in 1usize..=20) {
        let mut r = rng(seed);
        let entries = [RatV::one(), RatV::from_int(-1), RatV::q_pow(1), RatV::q_pow(-1), &RatV::one() + &RatV::q_pow(2)];
        let mut m = SparseMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if r.gen_bool(0.2) {
                    m.set(i, j, entries[r.gen_range(0..entries.len())].clone());
                }
            }
        }
        prop_assert_eq!(rank(&m) + kernel(&m).dim(), cols);
    }

    #[test]
    fn reduction_is_idempotent_and_multiplicative(seed in any::<u64>()) {
        let mut r = rng(seed);
        for (pres, letters) in [(s5q(), s5_letters()), (suq3(), suq3_letters())] {
            let a = random_poly(&mut r, &letters, 5, 3);
            let b = random_poly(&mut r, &letters, 5, 3);
            let na = pres.reduce(&a);
            prop_assert_eq!(pres.reduce(&na), na.clone());
            prop_assert_eq!(pres.reduce(&a.concat_mul(&b)), pres.reduce(&na.concat_mul(&pres.reduce(&b))));
        }
    }

    #[test]
    fn star_is_an_involution(seed in any::<u64>()) {
        let mut r = rng(seed);
        for (pres, letters) in [(s5q(), s5_letters()), (suq3(), suq3_letters())] {
            let a = pres.reduce(&random_poly(&mut r, &letters, 3, 3));
            prop_assert_eq!(pres.star(&pres.star(&a)), a);
        }
    }

    #[test]
    fn module_algebra_law(seed in any::<u64>()) {
        let mut r = rng(seed);
        let su = suq3();
        let a = su.reduce(&random_poly(&mut r, &suq3_letters(), 3, 2));
        let b = su.reduce(&random_poly(&mut r, &suq3_letters(), 3, 2));
        for x in Gen::ALL {
            let lhs = act_right(&su.mul(&a, &b), &g(x));
            let mut rhs = NCPoly::zero();
            for (h1, h2) in coproduct(x) {
                rhs.add_assign(&su.mul(&act_right(&a, &h1), &act_right(&b, &h2)));
            }
            prop_assert_eq!(lhs, rhs, "generator {}", x);
        }
    }

    #[test]
    fn left_and_right_actions_commute(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = suq3().reduce(&random_poly(&mut r, &suq3_letters(), 3, 2));
        let h = g(Gen::ALL[r.gen_range(0..8)]);
        let k = g(Gen::ALL[r.gen_range(0..8)]);
        prop_assert_eq!(act_right(&act_left(&h, &a), &k), act_left(&h, &act_right(&a, &k)));
    }

    #[test]
    fn line_bundles_multiply_and_star(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (n, m) = (r.gen_range(-2i64..=2), r.gen_range(-2i64..=2));
        let pick = |r: &mut ChaCha8Rng, n: i64| {
            let words = ln_slice_basis(n, n.unsigned_abs() as usize + 2);
            embed_s5(&NCPoly::<RatV>::word(words[r.gen_range(0..words.len())].clone()))
        };
        let (x, y) = (pick(&mut r, n), pick(&mut r, m));
        prop_assert!(is_in_ln(&x, n));
        prop_assert!(is_in_ln(&suq3().star(&x), -n));
        prop_assert!(is_in_ln(&suq3().mul(&x, &y), n + m));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn dbar_of_cp2_is_a_form(seed in any::<u64>()) {
        let mut r = rng(seed);
        let words = ln_slice_basis(0, 4);
        let mut a = NCPoly::<RatV>::zero();
        for _ in 0..3 {
            a.add_assign(&embed_s5(&NCPoly::word(words[r.gen_range(0..words.len())].clone())).scale(&RatV::from_int(r.gen_range(1..=3))));
        }
        prop_assert!(is_in_cp2(&a));
        prop_assert!(is_antiholomorphic_form(&dbar(&a).unwrap()));
    }

    #[test]
    fn twisted_leibniz(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l1 = ln_slice_basis(1, 3);
        let cp2 = ln_slice_basis(0, 2);
        let xi = embed_s5(&NCPoly::<RatV>::word(l1[r.gen_range(0..l1.len())].clone()));
        let a = embed_s5(&NCPoly::<RatV>::word(cp2[r.gen_range(0..cp2.len())].clone()));
        prop_assert!(twisted_leibniz_check(1, &xi, &a).unwrap());
    }

    #[test]
    fn haar_is_linear_and_sigma_multiplicative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s5 = s5q();
        let x = haar::random_element(&mut r, 2, 3);
        let y = haar::random_element(&mut r, 2, 3);
        let (a, b) = (RatV::from_int(r.gen_range(-3..=3)), RatV::q_pow(r.gen_range(-2..=2)));
        let combo = x.scale(&a).add(&y.scale(&b));
        let h = |p: &NCPoly<RatV>| haar::haar_state(p, 2).unwrap();
        prop_assert_eq!(h(&combo), &(&a * &h(&x)) + &(&b * &h(&y)));
        prop_assert_eq!(h(&s5.mul(&x, &NCPoly::one())), h(&x));
        prop_assert_eq!(haar::sigma(&s5.mul(&x, &y)), s5.mul(&haar::sigma(&x), &haar::sigma(&y)));
    }
}
