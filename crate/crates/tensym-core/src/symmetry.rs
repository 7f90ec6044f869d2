//! The annihilator system and the symmetry Lie algebra `g_T`.
//!
//! A triple `L = (U, V, W) ∈ gl(A) × gl(B) × gl(C)` acts on `T` by the
//! Leibniz rule; `L` annihilates `T` exactly when, for every `(i, j, k)`,
//!
//! ```text
//! u^i_{i'} T^{i'jk} + v^j_{j'} T^{ij'k} + w^k_{k'} T^{ijk'} = 0 .
//! ```
//!
//! Stacking these equations gives an `abc × (a² + b² + c²)` integer matrix
//! whose kernel is `g̃_T`, the Lie algebra of the stabilizer of `[T]` under
//! `GL(A) × GL(B) × GL(C)`.  The scalar triples `(λ·Id, μ·Id, ν·Id)` with
//! `λ + μ + ν = 0` always annihilate `T`, so the symmetry dimension of the
//! projectivized orbit is `dim g_T = dim g̃_T − 2`.
//!
//! Everything is computed over ℚ: the reported dimension is exact, and the
//! returned basis is the canonical kernel basis of the unique reduced row
//! echelon form, each element re-verified to act as zero on `T`.

use alloc::vec::Vec;

use crate::exact_arith::{Mat, Mode, Rational, Ring, SparseMat};
use crate::tensor::{Tensor3, TensorError};

/// An element of `gl(A) × gl(B) × gl(C)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieTriple {
    pub u: Mat<Rational>,
    pub v: Mat<Rational>,
    pub w: Mat<Rational>,
}

impl LieTriple {
    pub fn zero(a: usize, b: usize, c: usize) -> Self {
        LieTriple { u: Mat::zero(a, a), v: Mat::zero(b, b), w: Mat::zero(c, c) }
    }

    /// The scalar triple `(λ·Id, μ·Id, ν·Id)`.
    pub fn scalars(
        dims: (usize, usize, usize),
        lambda: &Rational,
        mu: &Rational,
        nu: &Rational,
    ) -> Self {
        LieTriple {
            u: Mat::scalar(dims.0, lambda),
            v: Mat::scalar(dims.1, mu),
            w: Mat::scalar(dims.2, nu),
        }
    }

    /// Shape compatibility with a tensor of the given dims.
    pub fn matches_dims(&self, dims: (usize, usize, usize)) -> bool {
        self.u.rows() == dims.0
            && self.u.cols() == dims.0
            && self.v.rows() == dims.1
            && self.v.cols() == dims.1
            && self.w.rows() == dims.2
            && self.w.cols() == dims.2
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero_mat() && self.v.is_zero_mat() && self.w.is_zero_mat()
    }

    /// Flatten to the annihilator-system coordinate vector: all `u^i_{i'}`
    /// row-major, then all `v`, then all `w`.
    pub fn to_flat(&self) -> Vec<Rational> {
        let mut out =
            Vec::with_capacity(self.u.entries().len() + self.v.entries().len() + self.w.entries().len());
        out.extend_from_slice(self.u.entries());
        out.extend_from_slice(self.v.entries());
        out.extend_from_slice(self.w.entries());
        out
    }

    /// Inverse of [`LieTriple::to_flat`] for the given dims.
    pub fn from_flat(dims: (usize, usize, usize), coords: &[Rational]) -> Self {
        let (a, b, c) = dims;
        assert_eq!(coords.len(), a * a + b * b + c * c, "flat coordinate length");
        let u = Mat::from_fn(a, a, |r, col| coords[r * a + col].clone());
        let v = Mat::from_fn(b, b, |r, col| coords[a * a + r * b + col].clone());
        let w = Mat::from_fn(c, c, |r, col| coords[a * a + b * b + r * c + col].clone());
        LieTriple { u, v, w }
    }

    /// Componentwise commutator `([U₁,U₂], [V₁,V₂], [W₁,W₂])` — the Lie
    /// bracket of `gl(A) × gl(B) × gl(C)`.
    pub fn bracket(&self, other: &Self) -> Self {
        LieTriple {
            u: self.u.commutator(&other.u),
            v: self.v.commutator(&other.v),
            w: self.w.commutator(&other.w),
        }
    }

    /// Leibniz action on a tensor:
    /// `(L·T)^{ijk} = u^i_{i'}T^{i'jk} + v^j_{j'}T^{ij'k} + w^k_{k'}T^{ijk'}`.
    pub fn act(&self, t: &Tensor3) -> Result<Tensor3, TensorError> {
        if !self.matches_dims(t.dims()) {
            return Err(TensorError::ShapeMismatch {
                detail: alloc::format!(
                    "triple shapes ({},{},{}) do not match tensor dims {:?}",
                    self.u.rows(),
                    self.v.rows(),
                    self.w.rows(),
                    t.dims()
                ),
            });
        }
        let (a, b, c) = t.dims();
        let mut out = Tensor3::new(a, b, c);
        let mut add = |i: u32, j: u32, k: u32, v: Rational| {
            if !Ring::is_zero(&v) {
                let cur = out.get(i, j, k);
                out.set(i, j, k, cur.add_ref(&v));
            }
        };
        for (&(p, q, r), val) in t.entries() {
            for i in 0..a as u32 {
                let coeff = self.u.get(i as usize, p as usize - 1);
                if !Ring::is_zero(coeff) {
                    add(i + 1, q, r, coeff.mul_ref(val));
                }
            }
            for j in 0..b as u32 {
                let coeff = self.v.get(j as usize, q as usize - 1);
                if !Ring::is_zero(coeff) {
                    add(p, j + 1, r, coeff.mul_ref(val));
                }
            }
            for k in 0..c as u32 {
                let coeff = self.w.get(k as usize, r as usize - 1);
                if !Ring::is_zero(coeff) {
                    add(p, q, k + 1, coeff.mul_ref(val));
                }
            }
        }
        Ok(out)
    }
}

/// Exact symmetry data of a tensor.
#[derive(Clone, Debug)]
pub struct SymmetryReport {
    /// `dim g̃_T`: the nullity of the annihilator system.
    pub tilde_dim: usize,
    /// `dim g_T = tilde_dim − 2`.
    pub sym_dim: i64,
    /// Canonical kernel basis reshaped into triples (empty in modular mode,
    /// where only the dimension is computed).
    pub basis: Vec<LieTriple>,
    /// Whether the dimension is certified (`Exact`) or probabilistic
    /// (`Modular`, a max over random prime fields that can only
    /// overestimate the nullity).
    pub mode: Mode,
}

/// The annihilator system of Eq. `L·T = 0`: an `abc × (a² + b² + c²)`
/// sparse matrix.  Row `(i, j, k)` (index `((i−1)b + (j−1))c + (k−1)`)
/// holds the equation for coefficient `(i, j, k)`; columns are the flat
/// coordinates of [`LieTriple::to_flat`].
pub fn annihilator_system(t: &Tensor3) -> SparseMat {
    let (a, b, c) = t.dims();
    let mut m = SparseMat::zero(a * b * c, a * a + b * b + c * c);
    let row = |i: usize, j: usize, k: usize| (i * b + j) * c + k;
    for (&(p, q, r), val) in t.entries() {
        let (p, q, r) = (p as usize - 1, q as usize - 1, r as usize - 1);
        // u^i_{i'} T^{i'jk} with i' = p, j = q, k = r: every row (i, q, r)
        // picks up T^{pqr} in column u^i_p.
        for i in 0..a {
            m.push(row(i, q, r), i * a + p, val.clone());
        }
        for j in 0..b {
            m.push(row(p, j, r), a * a + j * b + q, val.clone());
        }
        for k in 0..c {
            m.push(row(p, q, k), a * a + b * b + k * c + r, val.clone());
        }
    }
    m
}

/// Compute `dim g_T` and, in exact mode, a canonical basis of `g̃_T`.
///
/// Exact mode does rational elimination on the sparse annihilator system;
/// the basis is the canonical kernel basis of the unique RREF and every
/// element is re-verified to annihilate `T`.  Modular mode only counts the
/// nullity over ≥3 random ~62-bit prime fields (seeded by `seed`), which
/// is fast and correct with overwhelming probability, but certifies only a
/// lower bound on the rank (hence an upper bound on `dim g_T`).
pub fn symmetry_report(t: &Tensor3, mode: Mode, seed: u64) -> SymmetryReport {
    let system = annihilator_system(t);
    match mode {
        Mode::Exact => {
            let rref = system.rref();
            let tilde_dim = rref.nullity();
            let dims = t.dims();
            let n_cols = dims.0 * dims.0 + dims.1 * dims.1 + dims.2 * dims.2;
            let basis: Vec<LieTriple> = rref
                .nullspace_sparse()
                .into_iter()
                .map(|sv| {
                    let mut flat: Vec<Rational> = alloc::vec![Ring::zero(); n_cols];
                    for (c, v) in sv {
                        flat[c] = v;
                    }
                    LieTriple::from_flat(dims, &flat)
                })
                .collect();
            for l in &basis {
                let image = l.act(t).expect("basis triple has matching shape");
                assert!(image.is_zero(), "kernel basis element fails to annihilate the tensor");
            }
            SymmetryReport {
                tilde_dim,
                sym_dim: tilde_dim as i64 - 2,
                basis,
                mode: Mode::Exact,
            }
        }
        Mode::Modular => {
            let rank = system.rank_modular(seed).rank;
            let tilde_dim = system.cols() - rank;
            SymmetryReport {
                tilde_dim,
                sym_dim: tilde_dim as i64 - 2,
                basis: Vec::new(),
                mode: Mode::Modular,
            }
        }
    }
}

/// Whether every sample annihilates `T` exactly *and* lies in the span of
/// the computed kernel basis — the check that a claimed parametric
/// presentation of `g̃_T` really lands inside it.
pub fn family_membership(t: &Tensor3, samples: &[LieTriple]) -> bool {
    let rref = annihilator_system(t).rref();
    samples.iter().all(|l| {
        if !l.matches_dims(t.dims()) {
            return false;
        }
        let annihilates = l.act(t).map(|img| img.is_zero()).unwrap_or(false);
        // The canonical basis spans ker(system), so membership in the span
        // is exactly membership in the kernel.
        annihilates && rref.kernel_contains(&l.to_flat())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;
    use crate::tensor::Tensor3;

    fn rank_one(m: usize) -> Tensor3 {
        Tensor3::from_entries((m, m, m), [(1, 1, 1, rat(1))]).unwrap()
    }

    #[test]
    fn zero_tensor_system_is_zero() {
        let t = Tensor3::new(2, 3, 4);
        let m = annihilator_system(&t);
        assert_eq!(m.rows(), 24);
        assert_eq!(m.cols(), 4 + 9 + 16);
        assert_eq!(m.nnz(), 0);
    }

    #[test]
    fn rank_one_system_rows_match_hand_count() {
        // For a₁⊗b₁⊗c₁ the only equations not identically zero are those
        // indexed (i,1,1), (1,j,1), (1,1,k).
        let t = rank_one(2);
        let m = annihilator_system(&t);
        let row = |i: usize, j: usize, k: usize| (i * 2 + j) * 2 + k;
        let mut expect = alloc::collections::BTreeSet::new();
        for x in 0..2 {
            expect.insert(row(x, 0, 0));
            expect.insert(row(0, x, 0));
            expect.insert(row(0, 0, x));
        }
        let nonzero: alloc::collections::BTreeSet<usize> =
            (0..m.rows()).filter(|&r| !m.row(r).is_empty()).collect();
        assert_eq!(nonzero, expect);
    }

    #[test]
    fn rank_one_symmetry_dimension() {
        // dim g̃ = 3m² − 3m + 2, so sym_dim = 3m² − 3m.
        let rep = symmetry_report(&rank_one(3), Mode::Exact, 0);
        assert_eq!(rep.sym_dim, 18);
        assert_eq!(rep.tilde_dim, 20);
        assert_eq!(rep.basis.len(), rep.tilde_dim);
    }

    #[test]
    fn modular_mode_matches_exact_on_small_example() {
        let t = rank_one(3);
        let exact = symmetry_report(&t, Mode::Exact, 0);
        let modular = symmetry_report(&t, Mode::Modular, 12345);
        assert_eq!(exact.sym_dim, modular.sym_dim);
        assert!(modular.basis.is_empty());
    }

    #[test]
    fn scalar_triples_annihilate() {
        let t = rank_one(3);
        let l1 = LieTriple::scalars((3, 3, 3), &rat(1), &rat(-1), &rat(0));
        let l2 = LieTriple::scalars((3, 3, 3), &rat(1), &rat(0), &rat(-1));
        assert!(l1.act(&t).unwrap().is_zero());
        assert!(l2.act(&t).unwrap().is_zero());
        let rref = annihilator_system(&t).rref();
        assert!(rref.kernel_contains(&l1.to_flat()));
        assert!(rref.kernel_contains(&l2.to_flat()));
    }

    #[test]
    fn identity_triple_acts_as_three() {
        let t = rank_one(2);
        let l = LieTriple::scalars((2, 2, 2), &rat(1), &rat(1), &rat(1));
        let image = l.act(&t).unwrap();
        assert_eq!(image.get(1, 1, 1), rat(3));
        assert_eq!(image.nnz(), 1);
    }

    #[test]
    fn bracket_of_equal_triples_vanishes() {
        let l = LieTriple {
            u: Mat::from_rows(&[alloc::vec![rat(1), rat(2)], alloc::vec![rat(3), rat(4)]]),
            v: Mat::identity(2),
            w: Mat::zero(2, 2),
        };
        assert!(l.bracket(&l).is_zero());
    }

    #[test]
    fn flat_roundtrip() {
        let dims = (2, 3, 2);
        let coords: Vec<Rational> = (0..(4 + 9 + 4)).map(|i| rat(i as i64 - 6)).collect();
        let l = LieTriple::from_flat(dims, &coords);
        assert_eq!(l.to_flat(), coords);
    }

    #[test]
    fn family_membership_rejects_non_annihilators() {
        let t = rank_one(3);
        let good = LieTriple::scalars((3, 3, 3), &rat(2), &rat(-1), &rat(-1));
        let bad = LieTriple::scalars((3, 3, 3), &rat(1), &rat(1), &rat(1));
        assert!(family_membership(&t, &[good.clone()]));
        assert!(!family_membership(&t, &[good, bad]));
    }
}
