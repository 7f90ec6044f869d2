//! Sparse exact Gaussian elimination over the rationals.
//!
//! The annihilator system of an `m×m×m` tensor has `m³` rows, `3m²` columns,
//! and only `nnz(T)·3m` nonzero entries, so elimination on sorted sparse
//! rows is orders of magnitude cheaper than dense reduction.  Rows are kept
//! bucketed by leading column; a row whose leading column is past the pivot
//! column has a zero there and can be skipped entirely, which makes the
//! forward pass a single ascending sweep over the buckets.
//!
//! The output is the full reduced row echelon form — forward elimination,
//! pivot normalization, and back-substitution above the pivots — which is
//! unique for a given matrix.  Kernel bases and membership tests derived
//! from it are therefore canonical.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::matrix::Mat;
use super::modular::{rank_modular_with_primes, ModularRank};
use super::{Rational, Ring};

/// One sparse row: `(column, value)` pairs sorted by column, values nonzero.
pub type SparseRow = Vec<(usize, Rational)>;

/// Sparse matrix in row-major coordinate form.
#[derive(Clone, Debug, Default)]
pub struct SparseMat {
    rows: usize,
    cols: usize,
    data: Vec<SparseRow>,
}

impl SparseMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMat { rows, cols, data: alloc::vec![Vec::new(); rows] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Add `v` to entry `(r, c)` (entries may be pushed in any order and
    /// accumulate).
    pub fn push(&mut self, r: usize, c: usize, v: Rational) {
        debug_assert!(r < self.rows && c < self.cols);
        if Ring::is_zero(&v) {
            return;
        }
        let row = &mut self.data[r];
        match row.binary_search_by_key(&c, |e| e.0) {
            Ok(i) => {
                row[i].1 = row[i].1.add_ref(&v);
                if Ring::is_zero(&row[i].1) {
                    row.remove(i);
                }
            }
            Err(i) => row.insert(i, (c, v)),
        }
    }

    /// Number of stored nonzero entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    /// Row view (sorted by column).
    pub fn row(&self, r: usize) -> &SparseRow {
        &self.data[r]
    }

    /// Dense copy.
    pub fn to_dense(&self) -> Mat<Rational> {
        let mut m = Mat::zero(self.rows, self.cols);
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                m.set(r, *c, v.clone());
            }
        }
        m
    }

    /// The unique reduced row echelon form.
    pub fn rref(&self) -> Rref {
        // Bucket rows by leading column.  Only rows whose current leading
        // column equals the sweep column can have a nonzero there.
        let mut buckets: BTreeMap<usize, Vec<SparseRow>> = BTreeMap::new();
        for row in &self.data {
            if let Some(&(lead, _)) = row.first() {
                buckets.entry(lead).or_default().push(row.clone());
            }
        }
        let mut pivots: Vec<(usize, SparseRow)> = Vec::new();
        while let Some((&col, _)) = buckets.iter().next() {
            let mut candidates = buckets.remove(&col).unwrap();
            // Cheapest-row pivot: fewest nonzeros, then first encountered.
            let mut best = 0;
            for (i, row) in candidates.iter().enumerate() {
                if row.len() < candidates[best].len() {
                    best = i;
                }
            }
            let mut piv = candidates.remove(best);
            let inv = recip(&piv[0].1);
            scale_row(&mut piv, &inv);
            for mut row in candidates {
                let factor = row[0].1.clone();
                row = row_sub_scaled(&row, &piv, &factor);
                if let Some(&(lead, _)) = row.first() {
                    buckets.entry(lead).or_default().push(row);
                }
            }
            pivots.push((col, piv));
        }
        // Back-substitution: clear pivot columns above each pivot row.
        for i in (0..pivots.len()).rev() {
            let (c, prow) = pivots[i].clone();
            for j in 0..i {
                let coeff = pivots[j]
                    .1
                    .binary_search_by_key(&c, |e| e.0)
                    .ok()
                    .map(|idx| pivots[j].1[idx].1.clone());
                if let Some(f) = coeff {
                    pivots[j].1 = row_sub_scaled(&pivots[j].1, &prow, &f);
                }
            }
        }
        Rref {
            n_cols: self.cols,
            pivot_cols: pivots.iter().map(|(c, _)| *c).collect(),
            rows: pivots.into_iter().map(|(_, r)| r).collect(),
        }
    }

    /// Exact rank.
    pub fn rank_exact(&self) -> usize {
        self.rref().rank()
    }

    /// Probabilistic rank: maximum over ≥3 random ~62-bit prime fields.
    pub fn rank_modular(&self, seed: u64) -> ModularRank {
        rank_modular_with_primes(self, seed, 3)
    }
}

/// `row - factor·pivot`, merging sorted sparse rows.
fn row_sub_scaled(row: &SparseRow, pivot: &SparseRow, factor: &Rational) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        match (row.get(i), pivot.get(j)) {
            (Some(&(ca, ref va)), Some(&(cb, ref vb))) => {
                use core::cmp::Ordering::*;
                match ca.cmp(&cb) {
                    Less => {
                        out.push((ca, va.clone()));
                        i += 1;
                    }
                    Greater => {
                        out.push((cb, vb.mul_ref(factor).neg_ref()));
                        j += 1;
                    }
                    Equal => {
                        let v = va.sub_ref(&vb.mul_ref(factor));
                        if !Ring::is_zero(&v) {
                            out.push((ca, v));
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
            (Some(&(ca, ref va)), None) => {
                out.push((ca, va.clone()));
                i += 1;
            }
            (None, Some(&(cb, ref vb))) => {
                out.push((cb, vb.mul_ref(factor).neg_ref()));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn scale_row(row: &mut SparseRow, s: &Rational) {
    for (_, v) in row.iter_mut() {
        *v = v.mul_ref(s);
    }
}

fn recip(v: &Rational) -> Rational {
    <Rational as Ring>::one() / v
}

/// Reduced row echelon form: pivot rows sorted by pivot column, each row
/// normalized to a unit pivot and reduced against all other pivots.
#[derive(Clone, Debug)]
pub struct Rref {
    n_cols: usize,
    pivot_cols: Vec<usize>,
    rows: Vec<SparseRow>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    pub fn nullity(&self) -> usize {
        self.n_cols - self.rank()
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_cols
    }

    /// Columns without a pivot, ascending.
    pub fn free_cols(&self) -> Vec<usize> {
        let mut pivots = self.pivot_cols.iter().peekable();
        let mut free = Vec::with_capacity(self.nullity());
        for c in 0..self.n_cols {
            if pivots.peek() == Some(&&c) {
                pivots.next();
            } else {
                free.push(c);
            }
        }
        free
    }

    /// Canonical kernel basis, one sparse vector per free column (ascending):
    /// the vector for free column `f` has a 1 at `f`, the negated reduced
    /// coefficients at the pivot columns, and 0 at every other free column.
    pub fn nullspace_sparse(&self) -> Vec<SparseRow> {
        let free = self.free_cols();
        free.iter()
            .map(|&f| {
                let mut v: SparseRow = Vec::new();
                for (row, &p) in self.rows.iter().zip(&self.pivot_cols) {
                    if let Ok(idx) = row.binary_search_by_key(&f, |e| e.0) {
                        v.push((p, row[idx].1.neg_ref()));
                    }
                }
                v.push((f, Ring::one()));
                v.sort_by_key(|e| e.0);
                v
            })
            .collect()
    }

    /// Dense kernel basis as a `n_cols × nullity` matrix of columns.
    pub fn nullspace_dense(&self) -> Mat<Rational> {
        let basis = self.nullspace_sparse();
        let mut m = Mat::zero(self.n_cols, basis.len());
        for (j, v) in basis.iter().enumerate() {
            for (c, val) in v {
                m.set(*c, j, val.clone());
            }
        }
        m
    }

    /// Whether the dense vector `y` lies in the kernel of the original
    /// matrix, i.e. is orthogonal to every (row-space-spanning) RREF row.
    pub fn kernel_contains(&self, y: &[Rational]) -> bool {
        assert_eq!(y.len(), self.n_cols, "kernel_contains length");
        self.rows.iter().all(|row| {
            let mut acc: Rational = Ring::zero();
            for (c, v) in row {
                if !Ring::is_zero(&y[*c]) {
                    acc = acc.add_ref(&v.mul_ref(&y[*c]));
                }
            }
            Ring::is_zero(&acc)
        })
    }
}
