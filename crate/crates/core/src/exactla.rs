//! Exact sparse linear algebra over `RatV`.

use std::collections::BTreeMap;

use crate::qcoeff::RatV;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum LaError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index ({0}, {1}) out of bounds")]
    OutOfBounds(usize, usize),
}

pub type SparseVec = BTreeMap<usize, RatV>;

/// Row-major sparse matrix; zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, rows: vec![BTreeMap::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i].insert(i, RatV::one());
        }
        m
    }

    pub fn from_dense(rows: &[Vec<RatV>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), ncols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), ncols, "ragged dense matrix");
            for (j, x) in r.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    pub fn set(&mut self, i: usize, j: usize, x: RatV) {
        assert!(i < self.nrows && j < self.ncols, "index ({i}, {j}) out of bounds");
        if x.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, x);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, x: &RatV) {
        let cur = self.get(i, j);
        self.set(i, j, &cur + x);
    }

    pub fn get(&self, i: usize, j: usize) -> RatV {
        assert!(i < self.nrows && j < self.ncols, "index ({i}, {j}) out of bounds");
        self.rows[i].get(&j).cloned().unwrap_or_else(RatV::zero)
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.rows[i]
    }

    /// Appends the rows of `other` below `self`.
    pub fn vstack(&self, other: &SparseMatrix) -> Result<SparseMatrix, LaError> {
        if self.ncols != other.ncols {
            return Err(LaError::DimensionMismatch { expected: self.ncols, found: other.ncols });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(SparseMatrix { nrows: rows.len(), ncols: self.ncols, rows })
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut t = Self::zeros(self.ncols, self.nrows);
        for (i, r) in self.rows.iter().enumerate() {
            for (&j, x) in r {
                t.rows[j].insert(i, x.clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[RatV]) -> Result<Vec<RatV>, LaError> {
        if v.len() != self.ncols {
            return Err(LaError::DimensionMismatch { expected: self.ncols, found: v.len() });
        }
        Ok(self
            .rows
            .iter()
            .map(|r| r.iter().fold(RatV::zero(), |acc, (&j, x)| if v[j].is_zero() { acc } else { &acc + &(x * &v[j]) }))
            .collect())
    }

    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix, LaError> {
        if self.ncols != other.nrows {
            return Err(LaError::DimensionMismatch { expected: self.ncols, found: other.nrows });
        }
        let mut out = Self::zeros(self.nrows, other.ncols);
        for (i, r) in self.rows.iter().enumerate() {
            let mut acc = BTreeMap::new();
            for (&k, x) in r {
                for (&j, y) in &other.rows[k] {
                    axpy_entry(&mut acc, j, &(x * y));
                }
            }
            out.rows[i] = acc;
        }
        Ok(out)
    }
}

fn axpy_entry(v: &mut SparseVec, j: usize, x: &RatV) {
    if x.is_zero() {
        return;
    }
    let e = v.entry(j).or_insert_with(RatV::zero);
    *e = &*e + x;
    if e.is_zero() {
        v.remove(&j);
    }
}

/// `a += c * b`.
fn axpy(a: &mut SparseVec, c: &RatV, b: &SparseVec) {
    for (&j, x) in b {
        axpy_entry(a, j, &(c * x));
    }
}

/// Reduced row echelon form of a list of sparse rows. Returns the nonzero
/// rows, sorted by pivot column, each with pivot entry 1.
fn rref(mut rows: Vec<SparseVec>) -> Vec<(usize, SparseVec)> {
    rows.retain(|r| !r.is_empty());
    let mut done: Vec<(usize, SparseVec)> = Vec::new();
    while !rows.is_empty() {
        let col = rows.iter().filter_map(|r| r.keys().next().copied()).min().unwrap();
        // pivot: smallest-degree entry in this column
        let (pi, _) = rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.get(&col).map(|x| (i, x.weight())))
            .min_by_key(|&(i, w)| (w, i))
            .unwrap();
        let mut piv = rows.swap_remove(pi);
        let inv = piv[&col].inv().expect("pivot is nonzero");
        for x in piv.values_mut() {
            *x = &*x * &inv;
        }
        for r in rows.iter_mut() {
            if let Some(c) = r.get(&col).cloned() {
                axpy(r, &-c, &piv);
            }
        }
        rows.retain(|r| !r.is_empty());
        for (_, d) in done.iter_mut() {
            if let Some(c) = d.get(&col).cloned() {
                axpy(d, &-c, &piv);
            }
        }
        done.push((col, piv));
    }
    done.sort_by_key(|(c, _)| *c);
    done
}

/// A subspace of `RatV^n` stored as its reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// Echelon rows with strictly increasing pivot columns.
    basis: Vec<(usize, SparseVec)>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new() }
    }

    pub fn span(ambient: usize, vectors: &[SparseVec]) -> Result<Self, LaError> {
        for v in vectors {
            if let Some((&j, _)) = v.iter().next_back() {
                if j >= ambient {
                    return Err(LaError::DimensionMismatch { expected: ambient, found: j + 1 });
                }
            }
        }
        Ok(Subspace { ambient, basis: rref(vectors.to_vec()) })
    }

    pub fn span_dense(ambient: usize, vectors: &[Vec<RatV>]) -> Result<Self, LaError> {
        let sparse: Vec<SparseVec> = vectors.iter().map(|v| to_sparse(v)).collect();
        Self::span(ambient, &sparse)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> impl Iterator<Item = &SparseVec> {
        self.basis.iter().map(|(_, v)| v)
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|(c, _)| *c).collect()
    }

    pub fn basis_dense(&self) -> Vec<Vec<RatV>> {
        self.basis().map(|v| to_dense(v, self.ambient)).collect()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut r = v.clone();
        for (c, b) in &self.basis {
            if let Some(x) = r.get(c).cloned() {
                axpy(&mut r, &-x, b);
            }
        }
        r.is_empty()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && other.basis().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LaError> {
        if self.ambient != other.ambient {
            return Err(LaError::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        let vs: Vec<SparseVec> = self.basis().chain(other.basis()).cloned().collect();
        Self::span(self.ambient, &vs)
    }
}

pub fn to_sparse(v: &[RatV]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn to_dense(v: &SparseVec, n: usize) -> Vec<RatV> {
    let mut d = vec![RatV::zero(); n];
    for (&i, x) in v {
        d[i] = x.clone();
    }
    d
}

pub fn rank(m: &SparseMatrix) -> usize {
    rref(m.rows.clone()).len()
}

/// Exact null space of `m`.
pub fn kernel(m: &SparseMatrix) -> Subspace {
    let ech = rref(m.rows.clone());
    let pivots: BTreeMap<usize, &SparseVec> = ech.iter().map(|(c, r)| (*c, r)).collect();
    let mut vecs = Vec::new();
    for f in (0..m.ncols).filter(|c| !pivots.contains_key(c)) {
        let mut v = BTreeMap::new();
        v.insert(f, RatV::one());
        for (&c, r) in &pivots {
            if let Some(x) = r.get(&f) {
                v.insert(c, -x);
            }
        }
        vecs.push(v);
    }
    Subspace::span(m.ncols, &vecs).expect("kernel vectors fit the ambient space")
}

/// One solution of `m x = rhs`, or `None` when the system is inconsistent.
pub fn solve(m: &SparseMatrix, rhs: &[RatV]) -> Result<Option<Vec<RatV>>, LaError> {
    if rhs.len() != m.nrows {
        return Err(LaError::DimensionMismatch { expected: m.nrows, found: rhs.len() });
    }
    let aug_col = m.ncols;
    let rows: Vec<SparseVec> = m
        .rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            if !b.is_zero() {
                r.insert(aug_col, b.clone());
            }
            r
        })
        .collect();
    let ech = rref(rows);
    let mut x = vec![RatV::zero(); m.ncols];
    for (c, r) in &ech {
        if *c == aug_col {
            return Ok(None);
        }
        if let Some(b) = r.get(&aug_col) {
            x[*c] = b.clone();
        }
    }
    Ok(Some(x))
}

pub fn subspace_equal(a: &Subspace, b: &Subspace) -> Result<bool, LaError> {
    if a.ambient != b.ambient {
        return Err(LaError::DimensionMismatch { expected: a.ambient, found: b.ambient });
    }
    Ok(a.basis == b.basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcoeff::q_int;

    fn r(n: i64) -> RatV {
        RatV::from_int(n)
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&SparseMatrix::identity(3)).dim(), 0);
        assert_eq!(kernel(&SparseMatrix::zeros(2, 3)).dim(), 3);
        let m = SparseMatrix::from_dense(&[vec![q_int(1), -q_int(1)]]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis_dense()[0], vec![r(1), r(1)]);
    }

    #[test]
    fn rank_solve_equal() {
        assert_eq!(rank(&SparseMatrix::identity(4)), 4);
        let m = SparseMatrix::from_dense(&[vec![q_int(2)]]);
        assert_eq!(solve(&m, &[q_int(2)]).unwrap(), Some(vec![r(1)]));
        let a = Subspace::span_dense(2, &[vec![r(1), r(0)], vec![r(0), r(1)]]).unwrap();
        let b = Subspace::span_dense(2, &[vec![r(1), r(1)], vec![r(1), r(-1)]]).unwrap();
        assert!(subspace_equal(&a, &b).unwrap());
        let z = SparseMatrix::from_dense(&[vec![r(1), r(1)], vec![r(2), r(2)]]);
        assert_eq!(solve(&z, &[r(1), r(3)]).unwrap(), None);
    }
}
