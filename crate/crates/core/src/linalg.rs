//! Dense and sparse exact linear algebra over a [`Field`].

use std::collections::HashMap;

use crate::field::Field;

/// Row-major dense matrix of field elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> DenseMatrix<E> {
    pub fn new(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(rows * cols, data.len(), "matrix data has wrong length");
        Self { rows, cols, data }
    }

    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<E>>, cols: usize) -> Self {
        let n = rows.len();
        let data: Vec<E> = rows.into_iter().flatten().collect();
        Self::new(n, cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn data(&self) -> &[E] {
        &self.data
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if field.is_zero(b) {
                        continue;
                    }
                    let v = field.add(out.get(i, j), &field.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(field.zero(), |acc, (a, b)| field.add(&acc, &field.mul(a, b)))
            })
            .collect()
    }
}

/// Output of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<E> {
    pub reduced: DenseMatrix<E>,
    pub pivot_columns: Vec<usize>,
    pub rank: usize,
}

/// Reduced row-echelon form by Gauss–Jordan elimination.
pub fn rref<F: Field>(field: &F, m: &DenseMatrix<F::Elem>) -> Rref<F::Elem> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !field.is_zero(a.get(i, c))) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = field.inv(a.get(r, c)).unwrap();
        for j in c..cols {
            let v = field.mul(a.get(r, j), &inv);
            a.set(r, j, v);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = a.get(i, c).clone();
            if field.is_zero(&factor) {
                continue;
            }
            for j in c..cols {
                let mut v = a.get(i, j).clone();
                field.sub_mul_assign(&mut v, &factor, a.get(r, j));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref { reduced: a, rank: pivots.len(), pivot_columns: pivots }
}

pub fn rank<F: Field>(field: &F, m: &DenseMatrix<F::Elem>) -> usize {
    rref(field, m).rank
}

/// Basis of the right null space as the columns of the returned matrix.
///
/// One basis vector per free column, in increasing column order, with that
/// free variable set to 1 and the other free variables set to 0.
pub fn kernel_basis<F: Field>(field: &F, m: &DenseMatrix<F::Elem>) -> DenseMatrix<F::Elem> {
    let Rref { reduced, pivot_columns, .. } = rref(field, m);
    let cols = m.cols;
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_columns.contains(c)).collect();
    let mut out = DenseMatrix::zeros(field, cols, free.len());
    for (k, &f) in free.iter().enumerate() {
        out.set(f, k, field.one());
        for (row, &p) in pivot_columns.iter().enumerate() {
            let v = field.neg(reduced.get(row, f));
            out.set(p, k, v);
        }
    }
    out
}

/// Sparse vector: `(column, nonzero value)` pairs sorted by column.
pub type SparseVec<E> = Vec<(usize, E)>;

/// Incrementally built row-echelon basis of a subspace, sparse rows.
///
/// Each stored row is monic at its pivot (its smallest column).
#[derive(Clone, Debug)]
pub struct SparseEchelon<F: Field> {
    field: F,
    rows: Vec<SparseVec<F::Elem>>,
    pivot_of: HashMap<usize, usize>,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(field: F) -> Self {
        Self { field, rows: Vec::new(), pivot_of: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` until its leading column is not a pivot. Returns the
    /// residue (empty when `v` lies in the span).
    pub fn reduce(&self, mut v: SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let k = &self.field;
        loop {
            let Some((col, val)) = v.first() else {
                return v;
            };
            let Some(&ri) = self.pivot_of.get(col) else {
                return v;
            };
            let factor = val.clone();
            v = axpy(k, &v, &factor, &self.rows[ri]);
        }
    }

    pub fn contains(&self, v: SparseVec<F::Elem>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the basis if it is independent; returns whether it was.
    pub fn insert(&mut self, v: SparseVec<F::Elem>) -> bool {
        let mut r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let inv = self.field.inv(&r[0].1).unwrap();
        for (_, x) in r.iter_mut() {
            *x = self.field.mul(x, &inv);
        }
        self.pivot_of.insert(r[0].0, self.rows.len());
        self.rows.push(r);
        true
    }

    /// The unique reduced row-echelon basis of the span, sorted by pivot.
    pub fn into_rref_rows(self) -> Vec<SparseVec<F::Elem>> {
        let k = self.field;
        let mut rows = self.rows;
        rows.sort_by_key(|r| r[0].0);
        for i in (0..rows.len()).rev() {
            let pivot = rows[i][0].0;
            for j in 0..i {
                if let Ok(pos) = rows[j].binary_search_by_key(&pivot, |e| e.0) {
                    let factor = rows[j][pos].1.clone();
                    rows[j] = axpy(&k, &rows[j], &factor, &rows[i]);
                }
            }
        }
        rows
    }
}

/// `a - factor * b` for sparse vectors.
fn axpy<F: Field>(
    k: &F,
    a: &SparseVec<F::Elem>,
    factor: &F::Elem,
    b: &SparseVec<F::Elem>,
) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, k.neg(&k.mul(factor, &b[j].1))));
            j += 1;
        } else {
            let mut v = a[i].1.clone();
            k.sub_mul_assign(&mut v, factor, &b[j].1);
            if !k.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Converts a dense row into a sparse vector.
pub fn sparse_from_dense<F: Field>(field: &F, row: &[F::Elem]) -> SparseVec<F::Elem> {
    row.iter()
        .enumerate()
        .filter(|(_, v)| !field.is_zero(v))
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

/// Rank of a family of sparse vectors.
pub fn sparse_rank<F: Field>(field: &F, vecs: impl IntoIterator<Item = SparseVec<F::Elem>>) -> usize {
    let mut ech = SparseEchelon::new(field.clone());
    for v in vecs {
        ech.insert(v);
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn qm(rows: &[&[i64]]) -> DenseMatrix<BigRational> {
        let k = Rationals;
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        DenseMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| k.from_i64(x)).collect()).collect(),
            cols,
        )
    }

    #[test]
    fn rref_identity_zero_and_proportional() {
        let k = Rationals;
        let id = qm(&[&[1, 0], &[0, 1]]);
        let r = rref(&k, &id);
        assert_eq!(r.reduced, id);
        assert_eq!(r.pivot_columns, vec![0, 1]);
        assert_eq!(r.rank, 2);

        let z = qm(&[&[0, 0], &[0, 0]]);
        let r = rref(&k, &z);
        assert_eq!(r.reduced, z);
        assert!(r.pivot_columns.is_empty());
        assert_eq!(r.rank, 0);

        let p = qm(&[&[1, 2], &[2, 4]]);
        let r = rref(&k, &p);
        assert_eq!(r.reduced, qm(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.pivot_columns, vec![0]);
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn empty_matrix_has_rank_zero() {
        let k = Rationals;
        let m: DenseMatrix<BigRational> = DenseMatrix::new(0, 3, vec![]);
        assert_eq!(rref(&k, &m).rank, 0);
        assert_eq!(kernel_basis(&k, &m).cols(), 3);
    }

    #[test]
    fn kernel_examples() {
        let k = Rationals;
        assert_eq!(kernel_basis(&k, &qm(&[&[1, 0], &[0, 1]])).cols(), 0);
        assert_eq!(kernel_basis(&k, &qm(&[&[1, -1]])), qm(&[&[1], &[1]]));
        // hand solution of x + 2y = 0 with y = 1
        assert_eq!(kernel_basis(&k, &qm(&[&[1, 2], &[2, 4]])), qm(&[&[-2], &[1]]));
    }

    #[test]
    fn sparse_echelon_matches_dense_rref() {
        let k = PrimeField::new(7).unwrap();
        let rows = vec![vec![0u64, 3, 1, 4], vec![0, 6, 2, 1], vec![2, 0, 0, 5]];
        let dense = DenseMatrix::from_rows(rows.clone(), 4);
        let r = rref(&k, &dense);
        let mut ech = SparseEchelon::new(k);
        for row in &rows {
            ech.insert(sparse_from_dense(&k, row));
        }
        assert_eq!(ech.rank(), r.rank);
        let sparse_rows = ech.into_rref_rows();
        for (i, row) in sparse_rows.iter().enumerate() {
            assert_eq!(sparse_from_dense(&k, r.reduced.row(i)), *row);
        }
    }

    fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            (Just(r), Just(c), proptest::collection::vec(-3i64..4, r * c))
        })
    }

    proptest! {
        #[test]
        fn rref_idempotent_and_rank_nullity((r, c, data) in small_matrix()) {
            let k = Rationals;
            let m = DenseMatrix::new(r, c, data.iter().map(|&x| k.from_i64(x)).collect());
            let once = rref(&k, &m);
            let twice = rref(&k, &once.reduced);
            prop_assert_eq!(&twice.reduced, &once.reduced);
            let ker = kernel_basis(&k, &m);
            prop_assert_eq!(once.rank + ker.cols(), c);
            let prod = m.mul(&k, &ker);
            prop_assert!(prod.data().iter().all(|x| k.is_zero(x)));
        }

        #[test]
        fn row_scaling_leaves_rref_unchanged((r, c, data) in small_matrix(), row in 0usize..5, s in 1i64..5) {
            let k = Rationals;
            let m = DenseMatrix::new(r, c, data.iter().map(|&x| k.from_i64(x)).collect());
            let mut scaled = m.clone();
            let row = row % r;
            for j in 0..c {
                let v = k.mul(scaled.get(row, j), &k.from_i64(-s));
                scaled.set(row, j, v);
            }
            prop_assert_eq!(rref(&k, &m).reduced, rref(&k, &scaled).reduced);
        }
    }
}
