//! Dense exact matrices and row echelon forms.
//!
//! Pivoting always takes the leftmost column with a nonzero entry and the
//! first row holding it, so every result is deterministic.

use crate::field::{Field, Scalar};
use crate::sparse::SparseVector;
use std::collections::HashMap;
use std::hash::Hash;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Matrix {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix { field, rows: n, cols, data }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn add_to(&mut self, r: usize, c: usize, value: &Scalar) {
        let i = r * self.cols + c;
        self.data[i] = &self.data[i] + value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (c, x) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = m.get(lead, c).inv();
            m.scale_row(lead, &inv);
            for r in 0..m.rows {
                if r != lead && !m.get(r, c).is_zero() {
                    let factor = -m.get(r, c);
                    m.add_row_multiple(r, lead, &factor);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one vector per free column, in column order.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, free);
            }
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let i = r * self.cols + c;
            if !self.data[i].is_zero() {
                self.data[i] = &self.data[i] * factor;
            }
        }
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let s = &self.data[source * self.cols + c];
            if !s.is_zero() {
                let add = s * factor;
                let i = target * self.cols + c;
                self.data[i] = &self.data[i] + &add;
            }
        }
    }
}

/// A subspace of `field^n` held as reduced echelon rows.
#[derive(Clone, Debug)]
pub struct RowSpace {
    field: Field,
    dim: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn spanned_by(field: Field, dim: usize, vectors: &[Vec<Scalar>]) -> RowSpace {
        let m = Matrix::from_rows(field, dim, vectors.to_vec());
        let (r, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        RowSpace { field, dim, rows, pivots }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical representative of `v` modulo the space: all pivot
    /// coordinates are cleared.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let factor = -&out[p];
            for (o, x) in out.iter_mut().zip(row) {
                if !x.is_zero() {
                    *o = &*o + &(x * &factor);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn field(&self) -> Field {
        self.field
    }
}

/// An indexed coordinate system for keys of some type.
#[derive(Clone, Debug)]
pub struct Coordinates<K: Hash + Eq + Clone + Ord> {
    keys: Vec<K>,
    index: HashMap<K, usize>,
}

impl<K: Hash + Eq + Clone + Ord> Coordinates<K> {
    pub fn new(keys: Vec<K>) -> Self {
        let index = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        Coordinates { keys, index }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> &[K] {
        &self.keys
    }

    pub fn index_of(&self, key: &K) -> Option<usize> {
        self.index.get(key).copied()
    }

    /// Dense form of a sparse vector; panics on keys outside the system.
    pub fn dense(&self, v: &SparseVector<K>, field: Field) -> Vec<Scalar> {
        let mut out = vec![field.zero(); self.keys.len()];
        for (k, c) in v.iter() {
            let i = self.index_of(k).expect("key outside coordinate system");
            out[i] = c.clone();
        }
        out
    }

    pub fn sparse(&self, v: &[Scalar]) -> SparseVector<K> {
        SparseVector::from_terms(
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (self.keys[i].clone(), c.clone())),
        )
    }
}

/// Solves `sum_i x_i * vectors[i] = target`, returning one solution if any.
pub fn solve_combination(
    field: Field,
    vectors: &[Vec<Scalar>],
    target: &[Scalar],
) -> Option<Vec<Scalar>> {
    let n = target.len();
    let k = vectors.len();
    let mut m = Matrix::zeros(field, n, k + 1);
    for (j, v) in vectors.iter().enumerate() {
        for (i, x) in v.iter().enumerate() {
            m.set(i, j, x.clone());
        }
    }
    for (i, x) in target.iter().enumerate() {
        m.set(i, k, x.clone());
    }
    let (r, pivots) = m.rref();
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut x = vec![field.zero(); k];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r.get(i, k).clone();
    }
    Some(x)
}
