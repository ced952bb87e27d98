//! Matrices of actions on finite sets of algebra elements.

use crate::exactla::SparseMatrix;
use crate::ncpoly::{NCPoly, Word};
use crate::qcoeff::RatV;
use crate::uqsu3::UqElement;

use super::{act_left, act_right, suq3, Side};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum OperatorError {
    #[error("image of domain element {index} leaves the ambient space at word `{word}`")]
    Escapes { index: usize, word: String },
}

/// Matrix of `x -> x <| h` (or `h |> x`) with columns indexed by `domain`
/// and rows by the normal words `rows`.
#[derive(Clone, Debug)]
pub struct OperatorMatrix {
    pub matrix: SparseMatrix,
    pub rows: Vec<Word>,
}

/// With `ambient = Some(words)` every image must be supported on those
/// words; with `None` the row set is the union of the image supports.
pub fn operator_matrix(
    h: &UqElement,
    domain: &[NCPoly<RatV>],
    ambient: Option<&[Word]>,
    side: Side,
) -> Result<OperatorMatrix, OperatorError> {
    let images: Vec<NCPoly<RatV>> = domain
        .iter()
        .map(|x| match side {
            Side::Right => act_right(x, h),
            Side::Left => act_left(h, x),
        })
        .collect();
    let rows: Vec<Word> = match ambient {
        Some(a) => {
            let mut r = a.to_vec();
            r.sort();
            r.dedup();
            r
        }
        None => {
            let mut r: Vec<Word> = images.iter().flat_map(|p| p.terms().map(|(w, _)| w.clone())).collect();
            r.sort();
            r.dedup();
            r
        }
    };
    let mut m = SparseMatrix::zeros(rows.len(), domain.len());
    for (j, img) in images.iter().enumerate() {
        for (w, c) in img.terms() {
            let i = rows.binary_search(w).map_err(|_| OperatorError::Escapes { index: j, word: suq3().system().word_to_string(w) })?;
            m.set(i, j, c.clone());
        }
    }
    Ok(OperatorMatrix { matrix: m, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebras::{k1k2sq, presentations::u_letter};
    use crate::uqsu3::Gen;

    #[test]
    fn examples() {
        let zs: Vec<NCPoly<RatV>> = (1..=3).map(|k| NCPoly::letter(u_letter(3, k))).collect();
        let words: Vec<Word> = (1..=3).map(|k| Word::letter(u_letter(3, k))).collect();
        let m = operator_matrix(&k1k2sq(), &zs, Some(&words), Side::Right).unwrap();
        let mut expect = SparseMatrix::zeros(3, 3);
        for i in 0..3 {
            expect.set(i, i, RatV::q_pow(1));
        }
        assert_eq!(m.matrix, expect);
        let f2 = operator_matrix(&UqElement::gen(Gen::F2), &zs, Some(&words), Side::Right).unwrap();
        assert!(f2.matrix.is_zero());
        let e2 = operator_matrix(&UqElement::gen(Gen::E2), &zs, Some(&words), Side::Right);
        assert!(e2.is_err());
        let u1: Vec<NCPoly<RatV>> = (1..=3).map(|k| NCPoly::letter(u_letter(1, k))).collect();
        let e1 = operator_matrix(&UqElement::gen(Gen::E1), &u1, None, Side::Right).unwrap();
        assert!(e1.matrix.is_zero());
    }
}
