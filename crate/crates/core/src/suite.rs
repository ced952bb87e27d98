//! The verification battery: one report per acceptance criterion.
//!
//! `Level::Full` runs every criterion at its stated size; `Level::Smoke`
//! shrinks slices and sample counts so the whole battery finishes quickly.

use std::time::Instant;

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactla::SparseMatrix;
use crate::haar;
use crate::holo::{self, sections::section_labels};
use crate::ncpoly::{Letter, NCPoly, Word};
use crate::numeric;
use crate::qalgebras::{self, build_system, embed_s5, ln_slice_basis, s5q, suq3, Alg};
use crate::qcoeff::RatV;
use crate::report::{Check, SuiteReport};
use crate::uqsu3::{self, Gen, RepMatrix, UqElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Level {
    Smoke,
    Full,
}

impl Level {
    pub fn parse(s: &str) -> Option<Level> {
        match s {
            "smoke" => Some(Level::Smoke),
            "full" => Some(Level::Full),
            _ => None,
        }
    }

    fn pick<T>(self, smoke: T, full: T) -> T {
        match self {
            Level::Smoke => smoke,
            Level::Full => full,
        }
    }
}

pub const CRITERIA: [(usize, &str); 13] = [
    (1, "representations"),
    (2, "dimension-formula"),
    (3, "presentation-consistency"),
    (4, "confluence"),
    (5, "peter-weyl-dimensions"),
    (6, "no-holomorphic-functions"),
    (7, "section-dimensions"),
    (8, "frame-identities"),
    (9, "connection-closed-form"),
    (10, "coordinate-ring"),
    (11, "twist-lemma"),
    (12, "haar"),
    (13, "numeric-consistency"),
];

const Q0: f64 = 0.5;
const NUMERIC_TOL: f64 = 1e-9;

/// Records an error as a failing check and returns `None`.
fn guard<T, E: std::fmt::Display>(r: &mut SuiteReport, name: &str, res: Result<T, E>) -> Option<T> {
    match res {
        Ok(x) => Some(x),
        Err(e) => {
            r.push(Check::new(name, "no error", format!("error: {e}"), false));
            None
        }
    }
}

/// Random combination of words in `letters` with small integer
/// coefficients times powers of `q^(1/2)`.
pub fn random_poly<R: Rng>(rng: &mut R, letters: &[Letter], max_deg: usize, terms: usize) -> NCPoly<RatV> {
    let mut x = NCPoly::zero();
    for _ in 0..terms {
        let len = rng.gen_range(0..=max_deg);
        let w: Vec<Letter> = (0..len).map(|_| letters[rng.gen_range(0..letters.len())]).collect();
        let c = &RatV::from_int(rng.gen_range(-3..=3)) * &RatV::v_pow(2 * rng.gen_range(-2..=2));
        x.add_term(Word::from_slice(&w), c);
    }
    x
}

fn random_uq<R: Rng>(rng: &mut R, max_len: usize, terms: usize) -> UqElement {
    let mut h = UqElement::zero();
    for _ in 0..terms {
        let len = rng.gen_range(0..=max_len);
        let w: Vec<Gen> = (0..len).map(|_| Gen::ALL[rng.gen_range(0..8)]).collect();
        h.add_term(&w, RatV::from_int(rng.gen_range(1..=3)));
    }
    h
}

/// Random combination of the given elements with small integer coefficients.
fn random_combination<R: Rng>(rng: &mut R, basis: &[NCPoly<RatV>], terms: usize) -> NCPoly<RatV> {
    let mut x = NCPoly::zero();
    for _ in 0..terms {
        let c = RatV::from_int(rng.gen_range(1..=3));
        x.add_assign(&basis[rng.gen_range(0..basis.len())].scale(&c));
    }
    x
}

fn embedded(words: &[Word]) -> Vec<NCPoly<RatV>> {
    words.iter().map(|w| embed_s5(&NCPoly::word(w.clone()))).collect()
}

pub fn representations(level: Level) -> SuiteReport {
    let max = level.pick(2, 4);
    let mut r = SuiteReport::new("representations").param("max_n1_plus_n2", max);
    for n1 in 0..=max {
        for n2 in 0..=max - n1 {
            let name = format!("V({n1},{n2})");
            if let Some(rep) = guard(&mut r, &name, uqsu3::verify_relations(n1, n2)) {
                for c in rep.checks {
                    let mut check = Check::new(format!("{name} {}", c.name), true, c.pass, c.pass);
                    check.witness = c.witness;
                    r.push(check);
                }
            }
        }
    }
    r
}

pub fn dimension_formula(_level: Level) -> SuiteReport {
    let mut r = SuiteReport::new("dimension-formula").param("max_n", 4);
    for n1 in 0..=4 {
        for n2 in 0..=4 {
            let got = uqsu3::rep_basis(n1, n2).map(|b| b.len() as i64);
            if let Some(got) = guard(&mut r, &format!("dim V({n1},{n2})"), got) {
                r.push(Check::eq(format!("dim V({n1},{n2})"), uqsu3::dim_formula(n1, n2), got));
            }
        }
    }
    r
}

pub fn presentation_consistency(_level: Level) -> SuiteReport {
    let mut r = SuiteReport::new("presentation-consistency");
    let (su, s5) = (suq3(), s5q());
    for (i, rel) in qalgebras::presentations::s5q_relations().iter().enumerate() {
        let img = embed_s5(rel);
        r.push(Check::vanishes(format!("S5q relation {} = {}", i + 1, s5.display(rel)), (!img.is_zero()).then(|| su.display(&img))));
    }
    for l in 0..6u8 {
        let x = NCPoly::<RatV>::letter(l);
        r.push(Check::eq(format!("star star {}", s5.display(&x)), s5.display(&x), s5.display(&s5.star(&s5.star(&x)))));
    }
    for i in 1..=3 {
        for j in 1..=3 {
            let x = NCPoly::<RatV>::letter(qalgebras::u_letter(i, j));
            r.push(Check::eq(format!("star star u{i}{j}"), su.display(&x), su.display(&su.star(&su.star(&x)))));
        }
    }
    r
}

pub fn confluence(level: Level) -> SuiteReport {
    let samples = level.pick(100, 1000);
    let mut r = SuiteReport::new("confluence").param("degree", 6).param("samples", samples);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for alg in [Alg::S5q, Alg::Suq3] {
        if let Some(sys) = guard(&mut r, &format!("{} completion", alg.name()), build_system(alg, 6)) {
            let rep = sys.check_local_confluence(6);
            let witness = rep.unresolved.first().map(|a| sys.word_to_string(&a.word));
            let mut c = Check::eq(format!("{} unresolved overlaps (of {})", alg.name(), rep.checked), 0, rep.unresolved.len());
            c.witness = witness;
            r.push(c);
        }
        let pres = qalgebras::Presentation::get(alg);
        let letters: Vec<Letter> = (0..pres.system().names().len() as Letter).collect();
        let mut bad = None;
        for _ in 0..samples {
            let a = random_poly(&mut rng, &letters, 5, 2);
            let b = random_poly(&mut rng, &letters, 5, 2);
            let lhs = pres.reduce(&a.concat_mul(&b));
            let rhs = pres.reduce(&pres.reduce(&a).concat_mul(&pres.reduce(&b)));
            if lhs != rhs && bad.is_none() {
                bad = Some(format!("a = {}, b = {}", pres.display(&a), pres.display(&b)));
            }
        }
        r.push(Check::vanishes(format!("{} reduce(ab) - reduce(reduce(a) reduce(b))", alg.name()), bad));
    }
    r
}

/// `sum_n dim V(n, n + N)` over `2n + N <= D`.
pub fn peter_weyl_count(n: i64, d: usize) -> i64 {
    (0..).take_while(|k| 2 * k + n <= d as i64).map(|k| uqsu3::dim_formula(k, k + n)).sum()
}

pub fn peter_weyl_dimensions(_level: Level) -> SuiteReport {
    let mut r = SuiteReport::new("peter-weyl-dimensions");
    r.push(Check::eq("L0 slice, D = 2", 9, ln_slice_basis(0, 2).len()));
    for n in 0..=2i64 {
        let d = n as usize + 6;
        r.push(Check::eq(format!("L{n} slice, D = {d}"), peter_weyl_count(n, d), ln_slice_basis(n, d).len()));
    }
    r
}

pub fn no_holomorphic_functions(level: Level) -> SuiteReport {
    let max = level.pick(2, 3);
    let mut r = SuiteReport::new("no-holomorphic-functions").param("max_bidegree", max);
    for a in 1..=max {
        let name = format!("kernel on CP2 slice ({a},{a})");
        if let Some(h) = guard(&mut r, &name, holo::h0_solve(0, 2 * a)) {
            r.push(Check::eq(name, 1, h.dim()));
        }
    }
    r
}

pub fn section_dimensions(level: Level) -> SuiteReport {
    let (pos, neg) = level.pick((2, 1), (4, 3));
    let mut r = SuiteReport::new("section-dimensions").param("max_N", pos).param("max_minus_N", neg);
    for n in 0..=pos {
        let d = n as usize + 6;
        let name = format!("dim H0(L{n}), D = {d}");
        if let Some(h) = guard(&mut r, &name, holo::h0_solve(n, d)) {
            r.push(Check::eq(name, (n + 1) * (n + 2) / 2, h.dim()));
        }
    }
    for n in 1..=neg {
        let d = n as usize + 6;
        let name = format!("dim H0(L-{n}), D = {d}");
        if let Some(h) = guard(&mut r, &name, holo::h0_solve(-n, d)) {
            r.push(Check::eq(name, 0, h.dim()));
        }
    }
    r
}

pub fn frame_identities(level: Level) -> SuiteReport {
    let (ids, flat) = level.pick((1, 1), (3, 2));
    let mut r = SuiteReport::new("frame-identities").param("max_N_identities", ids).param("max_N_flatness", flat);
    for n in 0..=ids {
        if let Some(cs) = guard(&mut r, &format!("N = {n} identities"), holo::verify_frame_identities(n)) {
            r.extend(cs.into_iter().map(|mut c| {
                c.name = format!("N = {n}: {}", c.name);
                c
            }));
        }
    }
    for n in 0..=flat {
        if let Some(cs) = guard(&mut r, &format!("N = {n} flatness"), holo::flatness_check(n)) {
            r.extend(cs.into_iter().map(|mut c| {
                c.name = format!("N = {n}: {}", c.name);
                c
            }));
        }
    }
    r
}

pub fn connection_closed_form(level: Level) -> SuiteReport {
    let ns: Vec<i64> = level.pick(vec![1], vec![1, 2]);
    let mut r = SuiteReport::new("connection-closed-form").param("N", &ns);
    for n in ns {
        let d = n as usize + level.pick(2, 4);
        let basis = ln_slice_basis(n, d);
        let mut agree = 0;
        let mut witness = None;
        for w in &basis {
            let xi: NCPoly<RatV> = embed_s5(&NCPoly::word(w.clone()));
            match holo::connection_dbar(n, &xi) {
                Ok(c) if c.agree => agree += 1,
                Ok(_) => witness = witness.or_else(|| Some(s5q().system().word_to_string(w))),
                Err(e) => witness = witness.or_else(|| Some(e.to_string())),
            }
        }
        let mut c = Check::eq(format!("N = {n}, D = {d}: basis elements in agreement"), basis.len(), agree);
        c.witness = witness;
        r.push(c);
    }
    r
}

pub fn coordinate_ring(level: Level) -> SuiteReport {
    let max = level.pick(1, 3);
    let mut r = SuiteReport::new("coordinate-ring").param("max_N", max);
    if let Some(cs) = guard(&mut r, "ring checks", holo::ring_relations_check(max)) {
        r.extend(cs);
    }
    r
}

pub fn twist_lemma(level: Level) -> SuiteReport {
    let (max_d, pairs) = level.pick((3, 10), (4, 50));
    let mut r = SuiteReport::new("twist-lemma").param("max_D", max_d).param("leibniz_pairs", pairs);
    for d in 1..=max_d {
        let name = format!("Im phi1 = Im phi2, N = 1, D = {d}");
        if let Some(e) = guard(&mut r, &name, holo::image_equality(1, d)) {
            r.push(Check::new(name, true, format!("{} (dims {}, {})", e.equal, e.dim_phi1, e.dim_phi2), e.equal));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let l1 = embedded(&ln_slice_basis(1, 3));
    let cp2 = embedded(&ln_slice_basis(0, 2));
    let mut ok = 0;
    let mut witness = None;
    for _ in 0..pairs {
        let xi = random_combination(&mut rng, &l1, 2);
        let a = random_combination(&mut rng, &cp2, 2);
        match holo::twisted_leibniz_check(1, &xi, &a) {
            Ok(true) => ok += 1,
            Ok(false) => witness = witness.or_else(|| Some(format!("xi = {}, a = {}", suq3().display(&xi), suq3().display(&a)))),
            Err(e) => witness = witness.or_else(|| Some(e.to_string())),
        }
    }
    let mut c = Check::eq("twisted Leibniz, random pairs", pairs, ok);
    c.witness = witness;
    r.push(c);
    for (n, m) in [(1i64, 1i64), (1, 2)] {
        let xs = embedded(&ln_slice_basis(n, n as usize));
        let ys = embedded(&ln_slice_basis(m, m as usize));
        let mut total = 0;
        let mut ok = 0;
        for x in &xs {
            for y in ys.iter().take(level.pick(2, ys.len())) {
                total += 1;
                if let Some(true) = guard(&mut r, &format!("tensor ({n},{m})"), holo::tensor_connection_check(n, m, x, y)) {
                    ok += 1;
                }
            }
        }
        r.push(Check::eq(format!("tensor connection (N, M) = ({n}, {m})"), total, ok));
    }
    r
}

pub fn haar_suite(level: Level) -> SuiteReport {
    let (probes, sigma_pairs, max_arity) = level.pick((20, 20, 2), (100, 100, 3));
    let mut r = SuiteReport::new("haar").param("probes", probes).param("q0", Q0).param("max_arity", max_arity);
    let s5 = s5q();
    let z = |j| NCPoly::<RatV>::letter(qalgebras::z_letter(j));
    let zs = |j| NCPoly::<RatV>::letter(qalgebras::zstar_letter(j));
    let Some(table) = guard(&mut r, "Haar state unique on (2,2)", haar::haar_table(2)) else {
        return r;
    };
    r.push(Check::new("Haar state unique on (2,2)", true, true, true));
    if let Some((count, bad)) = guard(&mut r, "twisted trace", haar::twisted_trace_exhaustive(2)) {
        let mut c = Check::new(format!("h(xy) = h(sigma(y) x), all {count} pairs"), true, bad.is_none(), bad.is_none());
        c.witness = bad.map(|(x, y)| format!("x = {}, y = {}", s5.system().word_to_string(&x), s5.system().word_to_string(&y)));
        r.push(c);
    }
    let mut sum = RatV::zero();
    for j in 1..=3 {
        sum = &sum + &table.eval(&s5.mul(&z(j), &zs(j))).unwrap_or_else(|_| RatV::zero());
    }
    r.push(Check::eq("sum h(z_i z_i*)", RatV::one(), sum));

    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut worst = f64::INFINITY;
    for _ in 0..probes {
        let a = haar::random_element(&mut rng, 2, 3);
        if let Some(v) = guard(&mut r, "positivity probe", haar::positivity_probe(&a, Q0)) {
            worst = worst.min(v);
        }
    }
    r.push(Check::new(format!("min h(aa*) over {probes} probes >= -1e-12"), ">= -1e-12", worst, worst >= -1e-12));

    for n in 0..max_arity {
        let phi = haar::Cochain::RandomTwisted { arity: n + 1, bound: (3, 3), seed: 100 + n as u64 };
        if let Some(bad) = guard(&mut r, &format!("b b, arity {}", n + 1), haar::bb_vanishes(&phi, &haar::degree_one_words())) {
            let bad = bad.map(|ws| ws.iter().map(|w| s5.system().word_to_string(w)).collect::<Vec<_>>().join(", "));
            r.push(Check::vanishes(format!("b_sigma b_sigma phi, phi of arity {}", n + 1), bad.map(|b| format!("({b})"))));
        }
    }

    let mut theta_bad = None;
    for _ in 0..sigma_pairs {
        let h = random_uq(&mut rng, 4, 2);
        let t = uqsu3::theta(&h);
        let same_rep = match (RepMatrix::element(&t, 1, 1), RepMatrix::element(&h, 1, 1)) {
            (Ok(a), Ok(b)) => a.sub(&b.transpose()).is_zero(),
            _ => false,
        };
        if (uqsu3::theta(&t) != h || !same_rep) && theta_bad.is_none() {
            theta_bad = Some(h.to_string());
        }
    }
    r.push(Check::vanishes("theta theta = id, theta = transpose on V(1,1)", theta_bad));

    let mut sigma_bad = None;
    let letters: Vec<Letter> = (0..6).collect();
    for _ in 0..sigma_pairs {
        let x = s5.reduce(&random_poly(&mut rng, &letters, 2, 2));
        let y = s5.reduce(&random_poly(&mut rng, &letters, 2, 2));
        let lhs = embed_s5(&haar::sigma(&s5.mul(&x, &y)));
        let rhs = suq3().mul(&haar::sigma_suq3(&embed_s5(&x)), &haar::sigma_suq3(&embed_s5(&y)));
        let direct = s5.mul(&haar::sigma(&x), &haar::sigma(&y)) == haar::sigma(&s5.mul(&x, &y));
        if (lhs != rhs || !direct) && sigma_bad.is_none() {
            sigma_bad = Some(format!("x = {}, y = {}", s5.display(&x), s5.display(&y)));
        }
    }
    r.push(Check::vanishes(format!("sigma(xy) - sigma(x) sigma(y), {sigma_pairs} pairs"), sigma_bad));
    r
}

fn close(r: &mut SuiteReport, name: String, exact: f64, float: f64) {
    let pass = (exact - float).abs() <= NUMERIC_TOL;
    r.push(Check::new(name, format!("{float:.15e}"), format!("{exact:.15e}"), pass));
}

pub fn numeric_consistency(level: Level) -> SuiteReport {
    let mut r = SuiteReport::new("numeric-consistency").param("q0", Q0).param("tolerance", NUMERIC_TOL);
    let q = Q0;
    for n in level.pick(-1..=1, -3..=3) {
        if let Some(f) = guard(&mut r, &format!("frame {n}"), holo::frame(n)) {
            for c in &f.components {
                let [j, k, l] = c.index.map(|x| x as i64);
                let float = if n >= 0 { numeric::q_trinomial(j, k, l, q) } else { numeric::mirrored_weight(j, k, l, q) };
                close(&mut r, format!("frame N = {n} weight {:?}", c.index), c.weight.eval_f64(q), float);
                close(&mut r, format!("frame N = {n} coefficient {:?}", c.index), c.coeff.eval_f64(q), float.sqrt());
            }
        }
    }
    for big_n in -2..=2 {
        for n in 0..=4 {
            if let Some(g) = guard(&mut r, "gamma", holo::gamma(n, big_n)) {
                close(&mut r, format!("gamma_{n}, N = {big_n}"), g.eval_f64(q), numeric::gamma(n, big_n, q));
            }
        }
    }
    for n in 0..=2 {
        for (j2, m2) in section_labels(n) {
            if let Some(x) = guard(&mut r, "closed form", holo::closed_form_section(n, j2, m2)) {
                let (_, c) = x.leading().expect("sections are nonzero");
                close(&mut r, format!("closed form coefficient ({n}, {j2}, {m2}/2)"), c.eval_f64(q), numeric::closed_form_coeff(n, j2, m2, q));
            }
        }
    }

    // Haar values against a floating-point nullspace of the same conditions.
    let d = 2;
    if let Some(table) = guard(&mut r, "Haar table", haar::haar_table(d)) {
        let (words, m) = haar::invariance_system(d);
        let dense = to_f64(&m, q);
        let one = words.binary_search(&Word::empty()).expect("slice contains 1");
        let (v, s0, s1) = numeric::nullspace_vector(&dense, one);
        r.push(Check::new("float nullspace is one-dimensional", "s0/s1 < 1e-9", format!("{:.3e}", s0 / s1), s0 / s1 < 1e-9));
        for (i, w) in words.iter().enumerate() {
            let exact = table.values.get(w).map_or(0.0, |x| x.eval_f64(q));
            close(&mut r, format!("h({})", s5q().system().word_to_string(w)), exact, v[i]);
        }
        for j in 1..=3 {
            let x = s5q().mul(&NCPoly::<RatV>::letter(qalgebras::z_letter(j)), &NCPoly::letter(qalgebras::zstar_letter(j)));
            if let Some(h) = guard(&mut r, "h(z z*)", table.eval(&x)) {
                close(&mut r, format!("h(z{j} z{j}*) closed form"), h.eval_f64(q), numeric::haar_zz_star(j, q));
            }
        }
        // positivity probes: contract the float coefficients of a a^* with the float state
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for i in 0..level.pick(5, 20) {
            let a = haar::random_element(&mut rng, 1, 3);
            let aa = s5q().mul(&a, &s5q().star(&a));
            let float: f64 = aa.eval_coeffs(q).iter().map(|(w, c)| c * words.binary_search(w).map_or(0.0, |k| v[k])).sum();
            if let Some(exact) = guard(&mut r, "positivity", haar::positivity_probe(&a, q)) {
                close(&mut r, format!("h(aa*) probe {i}"), exact, float);
            }
        }
    }
    r
}

fn to_f64(m: &SparseMatrix, q: f64) -> DMatrix<f64> {
    let mut out = DMatrix::zeros(m.nrows(), m.ncols());
    for i in 0..m.nrows() {
        for (&j, x) in m.row(i) {
            out[(i, j)] = x.eval_f64(q);
        }
    }
    out
}

/// Runs criterion `k` (1-based).
pub fn run_criterion(k: usize, level: Level) -> Option<SuiteReport> {
    let start = Instant::now();
    let mut r = match k {
        1 => representations(level),
        2 => dimension_formula(level),
        3 => presentation_consistency(level),
        4 => confluence(level),
        5 => peter_weyl_dimensions(level),
        6 => no_holomorphic_functions(level),
        7 => section_dimensions(level),
        8 => frame_identities(level),
        9 => connection_closed_form(level),
        10 => coordinate_ring(level),
        11 => twist_lemma(level),
        12 => haar_suite(level),
        13 => numeric_consistency(level),
        _ => return None,
    };
    r.wall_time_ms = start.elapsed().as_millis();
    Some(r)
}

/// Every criterion, combined into one report.
pub fn run_all(level: Level) -> (SuiteReport, Vec<SuiteReport>) {
    let start = Instant::now();
    let parts: Vec<SuiteReport> = CRITERIA.iter().filter_map(|&(k, _)| run_criterion(k, level)).collect();
    let mut all = SuiteReport::new("all").param("level", level);
    for p in &parts {
        all.absorb(p.clone());
    }
    all.wall_time_ms = start.elapsed().as_millis();
    (all, parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn peter_weyl_counts() {
        assert_eq!(peter_weyl_count(0, 2), 9);
        assert_eq!(peter_weyl_count(1, 1), 3);
    }

    #[test]
    fn cheap_criteria_pass_at_smoke_level() {
        for k in [2, 3, 5] {
            let r = run_criterion(k, Level::Smoke).unwrap();
            assert!(r.pass, "{}", r.to_tsv());
        }
    }
}
