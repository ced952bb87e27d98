//! Double-precision recomputations used to cross-check exact scalars.
//! Nothing here touches `RatV`: every value is rebuilt from closed forms in
//! `f64`, or from a floating-point nullspace.

use nalgebra::DMatrix;

/// Symmetric `[n]` at `q`.
pub fn q_int(n: i64, q: f64) -> f64 {
    (q.powi(n as i32) - q.powi(-n as i32)) / (q - 1.0 / q)
}

pub fn q_fact(n: i64, q: f64) -> f64 {
    (1..=n).map(|k| q_int(k, q)).product()
}

/// `q^-(jk+kl+lj) [j+k+l]! / ([j]! [k]! [l]!)`.
pub fn q_trinomial(j: i64, k: i64, l: i64, q: f64) -> f64 {
    q.powi(-(j * k + k * l + l * j) as i32) * q_fact(j + k + l, q) / (q_fact(j, q) * q_fact(k, q) * q_fact(l, q))
}

/// Non-symmetric `(1 - Q^n) / (1 - Q)` factorial.
fn gauss_fact(n: i64, big_q: f64) -> f64 {
    (1..=n).map(|k| (1.0 - big_q.powi(k as i32)) / (1.0 - big_q)).product()
}

/// Weight of `z^J` in the mirrored frame:
/// `Q^{2j+k-(jk+kl+lj)} [N]_Q! / ([j]_Q! [k]_Q! [l]_Q!)` with `Q = q^2`.
pub fn mirrored_weight(j: i64, k: i64, l: i64, q: f64) -> f64 {
    let big_q = q * q;
    let e = 2 * j + k - (j * k + k * l + l * j);
    big_q.powi(e as i32) * gauss_fact(j + k + l, big_q) / (gauss_fact(j, big_q) * gauss_fact(k, big_q) * gauss_fact(l, big_q))
}

pub fn gamma(n: i64, big_n: i64, q: f64) -> f64 {
    let (a, b) = if big_n >= 0 { (n, n + big_n + 2) } else { (n - big_n, n + 2) };
    (q_int(a, q) * q_int(b, q) / q_int(2, q)).sqrt()
}

/// Coefficient of the closed-form section `t(0,N)^0_{(0,j2,m)}`.
pub fn closed_form_coeff(n: i64, j2: i64, m2: i64, q: f64) -> f64 {
    let (r, s) = ((j2 - m2) / 2, (j2 + m2) / 2);
    let (jf, mf, nf) = (j2 as f64, m2 as f64 / 2.0, n as f64);
    let rr = jf / 2.0 - mf;
    let alpha = -jf * nf / 2.0 - rr * jf / 2.0 + jf * jf / 2.0 + rr * rr / 2.0;
    q_fact(j2 + 1, q) * (q_fact(n, q) / (q_fact(r, q) * q_fact(s, q) * q_fact(n - j2, q))).sqrt() * q.powf(alpha)
}

/// `h(z_i z_i^*) = q^{2(i-1)} / (1 + q^2 + q^4)`.
pub fn haar_zz_star(i: usize, q: f64) -> f64 {
    q.powi(2 * (i as i32 - 1)) / (1.0 + q * q + q.powi(4))
}

/// Unit-normalized vector spanning the numerical nullspace of `m`
/// (rows of `m` are conditions), rescaled so that entry `normalize_at`
/// is 1. Returns the vector and the two smallest singular values, whose
/// ratio certifies a one-dimensional nullspace.
pub fn nullspace_vector(m: &DMatrix<f64>, normalize_at: usize) -> (Vec<f64>, f64, f64) {
    // pad to at least as many rows as columns so every right singular vector is computed
    let (r, c) = m.shape();
    let mut a = DMatrix::zeros(r.max(c), c);
    a.view_mut((0, 0), (r, c)).copy_from(m);
    let svd = a.svd(false, true);
    let vt = svd.v_t.expect("requested V^T");
    let mut idx: Vec<usize> = (0..c).collect();
    idx.sort_by(|&i, &j| svd.singular_values[i].total_cmp(&svd.singular_values[j]));
    let v: Vec<f64> = vt.row(idx[0]).iter().copied().collect();
    let s0 = svd.singular_values[idx[0]];
    let s1 = if c > 1 { svd.singular_values[idx[1]] } else { f64::INFINITY };
    let scale = v[normalize_at];
    (v.iter().map(|x| x / scale).collect(), s0, s1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_limits() {
        let q = 1.0 + 1e-7;
        assert!((q_fact(4, q) - 24.0).abs() < 1e-4);
        assert!((q_trinomial(1, 1, 1, q) - 6.0).abs() < 1e-4);
        assert!((mirrored_weight(1, 1, 1, q) - 6.0).abs() < 1e-4);
        assert!((haar_zz_star(2, 1.0) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn nullspace_of_rank_one() {
        let m = DMatrix::from_row_slice(2, 3, &[1.0, -1.0, 0.0, 0.0, 1.0, -2.0]);
        let (v, s0, s1) = nullspace_vector(&m, 0);
        assert!(s0 < 1e-12 && s1 > 1e-3);
        assert!((v[1] - 1.0).abs() < 1e-12 && (v[2] - 0.5).abs() < 1e-12);
    }
}
