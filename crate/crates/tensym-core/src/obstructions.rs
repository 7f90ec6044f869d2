//! Border-rank obstructions and exact ε-degenerations.
//!
//! **Commutator test.**  For a concise tensor `T ∈ ℂ^m ⊗ ℂ^m ⊗ ℂ^m` with an
//! invertible slice `T(α)`, minimal border rank `R̲(T) = m` forces the
//! normalized slices `N_i = T(α)⁻¹ T(αⁱ)` to commute pairwise (a direct
//! consequence of Strassen's equations: a limit of simultaneously
//! diagonalizable families is commuting).  A single nonzero commutator
//! `[N_i, N_j]` therefore certifies `R̲(T) ≥ m + 1`.  The commutator ranks
//! are reported as diagnostics, but the bound is deliberately capped at
//! `m + 1`.
//!
//! **Degenerations.**  A family `(X_ε, Y_ε, Z_ε)` of factor maps with
//! Laurent-polynomial entries acts on `T` exactly; when every entry of the
//! resulting tensor has only nonnegative powers of ε, the ε → 0 limit is a
//! degeneration of `T`, and symmetry dimensions can only grow in the limit.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::exact_arith::{ArithError, LaurentPoly, Mat, Rational, Ring};
use crate::tensor::{Factor, Tensor3, TensorError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObstructionError {
    /// The witness covector does not contract to an invertible matrix.
    NonInvertibleWitness,
    /// Factor map shapes do not match the tensor.
    ShapeMismatch { detail: String },
    /// A family matrix has identically zero determinant, so it is not
    /// invertible for generic ε.
    SingularFamily,
    /// Some coefficient still carries a negative power of ε; the family
    /// does not degenerate the tensor to a finite limit.
    NoLimit { index: (u32, u32, u32), exponent: i64 },
}

impl core::fmt::Display for ObstructionError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ObstructionError::NonInvertibleWitness => {
                write!(f, "witness covector does not contract to an invertible matrix")
            }
            ObstructionError::ShapeMismatch { detail } => write!(f, "shape mismatch: {detail}"),
            ObstructionError::SingularFamily => {
                write!(f, "family matrix is singular for generic ε")
            }
            ObstructionError::NoLimit { index, exponent } => write!(
                f,
                "no ε → 0 limit: entry {index:?} carries ε^{exponent}"
            ),
        }
    }
}

impl From<TensorError> for ObstructionError {
    fn from(e: TensorError) -> Self {
        match e {
            TensorError::NonInvertibleWitness => ObstructionError::NonInvertibleWitness,
            TensorError::ShapeMismatch { detail } | TensorError::BadEntry { detail } => {
                ObstructionError::ShapeMismatch { detail }
            }
            TensorError::IncompatibleWitnesses => ObstructionError::ShapeMismatch {
                detail: String::from("incompatible witnesses"),
            },
        }
    }
}

/// Outcome of the Strassen commutator test.
#[derive(Clone, Debug)]
pub struct BorderRankReport {
    pub m: usize,
    /// The witness covector α used to normalize the slices.
    pub witness: Vec<Rational>,
    /// Exact rank of each pairwise commutator `[N_i, N_j]`, `i < j`
    /// (1-based slice indices).
    pub commutator_ranks: BTreeMap<(u32, u32), usize>,
    /// Some commutator is nonzero.
    pub obstructed: bool,
    /// `m` when the test passes, `m + 1` when obstructed.
    pub bound: usize,
}

/// A triple of ε-parametrized factor maps, each invertible for generic ε.
#[derive(Clone, Debug)]
pub struct DegenerationFamily {
    x: Mat<LaurentPoly>,
    y: Mat<LaurentPoly>,
    z: Mat<LaurentPoly>,
}

impl DegenerationFamily {
    /// Validates that every matrix is square with a not-identically-zero
    /// determinant.
    pub fn new(
        x: Mat<LaurentPoly>,
        y: Mat<LaurentPoly>,
        z: Mat<LaurentPoly>,
    ) -> Result<Self, ObstructionError> {
        for m in [&x, &y, &z] {
            match m.det() {
                Ok(d) if !Ring::is_zero(&d) => {}
                Ok(_) => return Err(ObstructionError::SingularFamily),
                Err(ArithError::NonSquare { rows, cols }) => {
                    return Err(ObstructionError::ShapeMismatch {
                        detail: format!("family matrix is {rows}×{cols}, need square"),
                    })
                }
                Err(e) => {
                    return Err(ObstructionError::ShapeMismatch { detail: format!("{e}") })
                }
            }
        }
        Ok(DegenerationFamily { x, y, z })
    }

    pub fn x(&self) -> &Mat<LaurentPoly> {
        &self.x
    }

    pub fn y(&self) -> &Mat<LaurentPoly> {
        &self.y
    }

    pub fn z(&self) -> &Mat<LaurentPoly> {
        &self.z
    }

    /// The identity family on an `a × b × c` tensor.
    pub fn identity(a: usize, b: usize, c: usize) -> Self {
        DegenerationFamily {
            x: Mat::identity(a),
            y: Mat::identity(b),
            z: Mat::identity(c),
        }
    }

    /// Diagonal family from per-factor exponent lists:
    /// `X = diag(ε^{ex[0]}, …)`, etc.
    pub fn monomial_diagonal(ex: &[i64], ey: &[i64], ez: &[i64]) -> Self {
        let diag = |es: &[i64]| {
            let n = es.len();
            Mat::from_fn(n, n, |r, c| {
                if r == c {
                    LaurentPoly::monomial(es[r], Ring::one())
                } else {
                    Ring::zero()
                }
            })
        };
        DegenerationFamily { x: diag(ex), y: diag(ey), z: diag(ez) }
    }

    /// The binding degeneration in size `m`:
    /// `X = Y = diag(ε⁻¹, ε, …, ε)`, `Z = diag(ε², 1, …, 1)`.
    ///
    /// Applied to a tensor of the form `T_utriv + (terms in
    /// span⟨a₂..⟩ ⊗ span⟨b₂..⟩ ⊗ C)` it fixes the `T_utriv` terms and puts
    /// ε, ε², or ε⁴ on all others, so the ε → 0 limit is exactly `T_utriv`.
    pub fn binding(m: usize) -> Self {
        assert!(m >= 1);
        let mut ea = alloc::vec![1i64; m];
        ea[0] = -1;
        let mut ec = alloc::vec![0i64; m];
        ec[0] = 2;
        Self::monomial_diagonal(&ea, &ea, &ec)
    }

    /// The A-factor scaling degeneration `X = diag(1, ε, …, ε)`,
    /// `Y = Z = Id`: on a tensor normalized to `T^{1jk} = δ_{jk}` the limit
    /// is `T_0`.
    pub fn scale_a(m: usize) -> Self {
        assert!(m >= 1);
        let mut ea = alloc::vec![1i64; m];
        ea[0] = 0;
        let ez = alloc::vec![0i64; m];
        Self::monomial_diagonal(&ea, &ez, &ez)
    }
}

/// An order-3 tensor whose coefficients are Laurent polynomials in ε.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentTensor {
    dims: (usize, usize, usize),
    entries: BTreeMap<(u32, u32, u32), LaurentPoly>,
}

impl LaurentTensor {
    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(u32, u32, u32), &LaurentPoly)> {
        self.entries.iter()
    }

    pub fn get(&self, i: u32, j: u32, k: u32) -> LaurentPoly {
        self.entries.get(&(i, j, k)).cloned().unwrap_or_else(Ring::zero)
    }
}

/// `(X_ε, Y_ε, Z_ε) · T`, computed exactly in the Laurent ring.
pub fn apply_family(
    t: &Tensor3,
    fam: &DegenerationFamily,
) -> Result<LaurentTensor, ObstructionError> {
    let (a, b, c) = t.dims();
    for (mat, dim, name) in [(&fam.x, a, "X"), (&fam.y, b, "Y"), (&fam.z, c, "Z")] {
        if mat.rows() != dim || mat.cols() != dim {
            return Err(ObstructionError::ShapeMismatch {
                detail: format!(
                    "{name} is {}×{}, need {dim}×{dim}",
                    mat.rows(),
                    mat.cols()
                ),
            });
        }
    }
    let mut cur: BTreeMap<(u32, u32, u32), LaurentPoly> = t
        .entries()
        .map(|(&key, v)| (key, LaurentPoly::constant(v.clone())))
        .collect();
    for (axis, mat) in [(0usize, &fam.x), (1usize, &fam.y), (2usize, &fam.z)] {
        let n = match axis {
            0 => a,
            1 => b,
            _ => c,
        };
        let mut next: BTreeMap<(u32, u32, u32), LaurentPoly> = BTreeMap::new();
        for (&(i, j, k), v) in &cur {
            let old = match axis {
                0 => i,
                1 => j,
                _ => k,
            } as usize
                - 1;
            for new in 0..n {
                let coeff = mat.get(new, old);
                if Ring::is_zero(coeff) {
                    continue;
                }
                let key = match axis {
                    0 => (new as u32 + 1, j, k),
                    1 => (i, new as u32 + 1, k),
                    _ => (i, j, new as u32 + 1),
                };
                let add = v.mul_ref(coeff);
                match next.get_mut(&key) {
                    Some(slot) => {
                        *slot = slot.add_ref(&add);
                        if Ring::is_zero(slot) {
                            next.remove(&key);
                        }
                    }
                    None => {
                        next.insert(key, add);
                    }
                }
            }
        }
        cur = next;
    }
    Ok(LaurentTensor { dims: t.dims(), entries: cur })
}

/// The ε → 0 limit: constant terms, provided no entry carries a negative
/// power of ε.
pub fn limit(lt: &LaurentTensor) -> Result<Tensor3, ObstructionError> {
    let mut out = Tensor3::new(lt.dims.0, lt.dims.1, lt.dims.2);
    for (&(i, j, k), poly) in &lt.entries {
        match poly.limit() {
            Ok(v) => {
                if !Ring::is_zero(&v) {
                    out.set(i, j, k, v);
                }
            }
            Err(ArithError::NegativeExponent { exponent }) => {
                return Err(ObstructionError::NoLimit { index: (i, j, k), exponent })
            }
            Err(_) => unreachable!("limit only reports negative exponents"),
        }
    }
    Ok(out)
}

/// Strassen's commutator test at the witness α.
///
/// All slices `N_i = T(α)⁻¹ T(αⁱ)` are formed for the standard dual basis
/// covectors `αⁱ`, except that when α itself is supported exactly on one
/// index `i₀` the redundant slice `N_{i₀} ∝ Id` is skipped.  The report
/// carries every pairwise commutator rank; any nonzero rank raises the
/// border-rank bound from `m` to `m + 1`.
pub fn commutator_obstruction(
    t: &Tensor3,
    alpha: &[Rational],
) -> Result<BorderRankReport, ObstructionError> {
    let (a, b, c) = t.dims();
    if a != b || b != c {
        return Err(ObstructionError::ShapeMismatch {
            detail: format!("commutator test needs a cubic tensor, got {:?}", t.dims()),
        });
    }
    let m = a;
    let slice = t.contract(Factor::A, alpha)?;
    let inv = slice.inverse().ok_or(ObstructionError::NonInvertibleWitness)?;

    // Indices whose slice is not a trivial multiple of the identity by
    // construction: skip i₀ only when α is supported exactly on {i₀}.
    let support: Vec<usize> = alpha
        .iter()
        .enumerate()
        .filter(|(_, v)| !Ring::is_zero(*v))
        .map(|(i, _)| i)
        .collect();
    let skip = if support.len() == 1 { Some(support[0]) } else { None };

    let mut slices: Vec<(u32, Mat<Rational>)> = Vec::with_capacity(m);
    for i in 0..m {
        if Some(i) == skip {
            continue;
        }
        let mut e: Vec<Rational> = alloc::vec![Ring::zero(); m];
        e[i] = Ring::one();
        let n_i = inv.matmul(&t.contract(Factor::A, &e)?);
        slices.push((i as u32 + 1, n_i));
    }

    let mut commutator_ranks = BTreeMap::new();
    let mut obstructed = false;
    for (idx, (i, ni)) in slices.iter().enumerate() {
        for (j, nj) in slices.iter().skip(idx + 1) {
            let rank = ni.commutator(nj).rank_exact();
            if rank > 0 {
                obstructed = true;
            }
            commutator_ranks.insert((*i, *j), rank);
        }
    }
    Ok(BorderRankReport {
        m,
        witness: alpha.to_vec(),
        commutator_ranks,
        obstructed,
        bound: if obstructed { m + 1 } else { m },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;

    fn t0(m: usize) -> Tensor3 {
        Tensor3::from_entries((m, m, m), (1..=m as u32).map(|j| (1, j, j, rat(1)))).unwrap()
    }

    fn utriv(m: usize) -> Tensor3 {
        let mut t = t0(m);
        for rho in 2..=m as u32 {
            t.set(rho, 1, rho, rat(1));
        }
        t
    }

    #[test]
    fn identity_family_is_a_no_op() {
        let t = utriv(4);
        let fam = DegenerationFamily::identity(4, 4, 4);
        let lt = apply_family(&t, &fam).unwrap();
        assert_eq!(limit(&lt).unwrap(), t);
    }

    #[test]
    fn scaling_family_multiplies_by_epsilon() {
        let t = t0(3);
        let fam = DegenerationFamily::monomial_diagonal(&[1, 1, 1], &[0; 3], &[0; 3]);
        let lt = apply_family(&t, &fam).unwrap();
        for (_, poly) in lt.entries() {
            assert_eq!(poly.min_exp(), Some(1));
            assert_eq!(poly.max_exp(), Some(1));
        }
        // The ε → 0 limit exists and is the zero tensor.
        assert!(limit(&lt).unwrap().is_zero());
    }

    #[test]
    fn negative_exponent_blocks_the_limit() {
        let t = t0(3);
        let fam = DegenerationFamily::monomial_diagonal(&[-1, 0, 0], &[0; 3], &[0; 3]);
        let lt = apply_family(&t, &fam).unwrap();
        assert!(matches!(limit(&lt), Err(ObstructionError::NoLimit { exponent: -1, .. })));
    }

    #[test]
    fn scale_a_family_degenerates_normalized_tensor_to_t0() {
        let t = utriv(5);
        let fam = DegenerationFamily::scale_a(5);
        let lt = apply_family(&t, &fam).unwrap();
        assert_eq!(limit(&lt).unwrap(), t0(5));
    }

    #[test]
    fn singular_family_is_rejected() {
        let zero_mat: Mat<LaurentPoly> = Mat::zero(2, 2);
        assert!(matches!(
            DegenerationFamily::new(zero_mat, Mat::identity(2), Mat::identity(2)),
            Err(ObstructionError::SingularFamily)
        ));
    }

    #[test]
    fn t0_slices_commute() {
        // T_0 has T(α¹) = Id and all other A-slices zero.
        let t = t0(4);
        let alpha = [rat(1), rat(0), rat(0), rat(0)];
        let rep = commutator_obstruction(&t, &alpha).unwrap();
        assert!(!rep.obstructed);
        assert_eq!(rep.bound, 4);
        // α is supported exactly on {1}, so slice 1 is skipped: C(3,2) pairs.
        assert_eq!(rep.commutator_ranks.len(), 3);
        assert!(rep.commutator_ranks.values().all(|&r| r == 0));
    }

    #[test]
    fn non_invertible_witness_is_rejected() {
        let t = t0(3);
        let alpha = [rat(0), rat(1), rat(0)];
        assert_eq!(
            commutator_obstruction(&t, &alpha).unwrap_err(),
            ObstructionError::NonInvertibleWitness
        );
    }
}
