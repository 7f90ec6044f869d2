//! Dense matrices over any [`Ring`], with fraction-free determinants and the
//! rational-specific operations (rank, nullspace, inverse) delegated to the
//! sparse elimination engine.

use alloc::format;
use alloc::vec::Vec;

use super::sparse::SparseMat;
use super::{ArithError, ExactDivRing, Mode, Rational, Ring};

/// Immutable dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Mat<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: alloc::vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// `n × n` scalar matrix `c·Id`.
    pub fn scalar(n: usize, c: &T) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    /// Build from row slices; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        Mat { rows: nr, cols: nc, data: rows.iter().flat_map(|r| r.iter().cloned()).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    /// Row-major view of all entries.
    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn is_zero_mat(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add shape");
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c).add_ref(rhs.get(r, c)))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub shape");
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c).sub_ref(rhs.get(r, c)))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c).neg_ref())
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c).mul_ref(s))
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matmul shape");
        Self::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                let p = self.get(r, k).mul_ref(rhs.get(k, c));
                if !p.is_zero() {
                    acc = acc.add_ref(&p);
                }
            }
            acc
        })
    }

    /// Matrix–vector product.
    pub fn matvec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matvec shape");
        (0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for c in 0..self.cols {
                    acc = acc.add_ref(&self.get(r, c).mul_ref(&v[c]));
                }
                acc
            })
            .collect()
    }

    /// The commutator `self·rhs − rhs·self`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.matmul(rhs).sub(&rhs.matmul(self))
    }

    pub fn map<S: Ring>(&self, mut f: impl FnMut(&T) -> S) -> Mat<S> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| f(x)).collect() }
    }
}

impl<T: ExactDivRing> Mat<T> {
    /// Exact determinant by single-step Bareiss (fraction-free) elimination
    /// with row pivoting on the smallest [`ExactDivRing::pivot_weight`].
    /// Intermediate entries are minors of the input, so coefficient growth
    /// stays polynomial; every division the algorithm performs is exact.
    pub fn det(&self) -> Result<T, ArithError> {
        if !self.is_square() {
            return Err(ArithError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut m: Vec<Vec<T>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut sign_flip = false;
        let mut prev = T::one();
        for k in 0..n {
            let pivot_row = (k..n)
                .filter(|&r| !m[r][k].is_zero())
                .min_by_key(|&r| (m[r][k].pivot_weight(), r));
            let Some(p) = pivot_row else {
                return Ok(T::zero());
            };
            if p != k {
                m.swap(p, k);
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = m[k][k].mul_ref(&m[i][j]).sub_ref(&m[i][k].mul_ref(&m[k][j]));
                    m[i][j] = t.exact_div(&prev);
                }
                m[i][k] = T::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if sign_flip { d.neg_ref() } else { d })
    }
}

impl Mat<Rational> {
    /// Convert to the sparse representation (zero entries dropped).
    pub fn to_sparse(&self) -> SparseMat {
        let mut s = SparseMat::zero(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if !Ring::is_zero(v) {
                    s.push(r, c, v.clone());
                }
            }
        }
        s
    }

    /// Rank of the matrix.  `Mode::Exact` is a theorem; `Mode::Modular`
    /// computes rank over ≥3 random word-size prime fields seeded by `seed`
    /// and reports the maximum, which never exceeds the true rank.
    pub fn rank(&self, mode: Mode, seed: u64) -> usize {
        match mode {
            Mode::Exact => self.to_sparse().rref().rank(),
            Mode::Modular => self.to_sparse().rank_modular(seed).rank,
        }
    }

    /// Exact rank over the rationals.
    pub fn rank_exact(&self) -> usize {
        self.rank(Mode::Exact, 0)
    }

    /// A matrix whose columns form the canonical basis of
    /// `{x : self·x = 0}` (reduced column echelon with unit entries at the
    /// free columns); column count equals `cols − rank`.
    pub fn nullspace(&self) -> Mat<Rational> {
        self.to_sparse().rref().nullspace_dense()
    }

    /// Exact inverse via Gauss–Jordan on the augmented system, when the
    /// matrix is square and nonsingular.
    pub fn inverse(&self) -> Option<Mat<Rational>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                let mut row: Vec<Rational> = (0..n).map(|c| self.get(r, c).clone()).collect();
                row.extend((0..n).map(|c| {
                    if c == r {
                        Ring::one()
                    } else {
                        Ring::zero()
                    }
                }));
                row
            })
            .collect();
        for k in 0..n {
            let piv = (k..n).find(|&r| !Ring::is_zero(&a[r][k]))?;
            a.swap(piv, k);
            let inv_p = <Rational as Ring>::one().exact_div(&a[k][k].clone());
            for j in k..2 * n {
                a[k][j] = a[k][j].mul_ref(&inv_p);
            }
            for i in 0..n {
                if i != k && !Ring::is_zero(&a[i][k]) {
                    let f = a[i][k].clone();
                    for j in k..2 * n {
                        let t = a[k][j].mul_ref(&f);
                        a[i][j] = a[i][j].sub_ref(&t);
                    }
                }
            }
        }
        Some(Mat::from_fn(n, n, |r, c| a[r][n + c].clone()))
    }
}

impl<T: Ring + core::fmt::Display> core::fmt::Display for Mat<T> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for r in 0..self.rows {
            let row: Vec<alloc::string::String> =
                (0..self.cols).map(|c| format!("{}", self.get(r, c))).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
