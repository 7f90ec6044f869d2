//! Order-3 tensors over the rationals: flattenings, contractions,
//! 1-genericity certificates, and the standard-position normalizations.
//!
//! A tensor `T ∈ A ⊗ B ⊗ C` is stored as its sparse coefficient list
//! `T^{ijk}` with 1-based indices.  The three flattenings are the induced
//! maps `T_A: A* → B ⊗ C` (and cyclic analogues); contracting against a
//! covector `α ∈ A*` yields the matrix `T(α) = Σ_i α_i T^{i··} ∈ B ⊗ C`.
//!
//! `T` is *1_A-generic* when some `T(α)` has maximal rank, *binding* when it
//! is 1_B- and 1_C-generic, and *1-generic* when all three hold.  Genericity
//! is certified by exhibiting an exact witness covector; its absence after
//! many random trials is reported with a Schwartz–Zippel failure bound.
//!
//! When `T(α)` is invertible a change of bases brings `T` to the standard
//! position `T^{1jk} = δ_{jk}`, and a second witness `β` with `T_B(β)`
//! invertible refines this to `T^{i1k} = δ_{ik}` as well — the coordinates
//! in which symmetry algebras and border-rank obstructions are read off.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Pow;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::exact_arith::{Mat, Rational, Ring};

/// One of the three tensor factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    A,
    B,
    C,
}

impl Factor {
    pub const ALL: [Factor; 3] = [Factor::A, Factor::B, Factor::C];

    pub fn name(self) -> &'static str {
        match self {
            Factor::A => "A",
            Factor::B => "B",
            Factor::C => "C",
        }
    }
}

impl core::fmt::Display for Factor {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// Errors from tensor construction and normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TensorError {
    /// An entry index is out of range, duplicated, or explicitly zero.
    BadEntry { detail: String },
    /// A covector or matrix has the wrong length/shape for the operation.
    ShapeMismatch { detail: String },
    /// The supplied witness covector does not contract to an invertible
    /// matrix (wrong shape or singular).
    NonInvertibleWitness,
    /// No basis change compatible with the first normalization achieves the
    /// second one; the witnesses are not in general position.
    IncompatibleWitnesses,
}

impl core::fmt::Display for TensorError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            TensorError::BadEntry { detail } => write!(f, "bad tensor entry: {detail}"),
            TensorError::ShapeMismatch { detail } => write!(f, "shape mismatch: {detail}"),
            TensorError::NonInvertibleWitness => {
                write!(f, "witness covector does not contract to an invertible matrix")
            }
            TensorError::IncompatibleWitnesses => {
                write!(f, "witness covectors are not in general position")
            }
        }
    }
}

/// Per-factor outcome of the 1-genericity test.
#[derive(Clone, Debug, PartialEq)]
pub enum FactorVerdict {
    /// A covector whose contraction was exactly verified to have maximal
    /// rank.
    CertifiedYes { witness: Vec<Rational> },
    /// No witness found; the probability that the tensor is nevertheless
    /// 1-generic in this factor is at most `failure_bound`.
    ProbablyNot { trials: u32, failure_bound: Rational },
}

impl FactorVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, FactorVerdict::CertifiedYes { .. })
    }

    pub fn witness(&self) -> Option<&[Rational]> {
        match self {
            FactorVerdict::CertifiedYes { witness } => Some(witness),
            FactorVerdict::ProbablyNot { .. } => None,
        }
    }
}

/// Conciseness, 1-genericity, and bindingness of a tensor, with exact
/// witnesses where the answer is YES.
#[derive(Clone, Debug, PartialEq)]
pub struct GenericityReport {
    /// Ranks of the three flattenings `T_A`, `T_B`, `T_C`.
    pub flattening_ranks: (usize, usize, usize),
    /// All three flattening ranks equal the corresponding dimensions.
    pub concise: bool,
    /// 1_A-, 1_B-, 1_C-genericity verdicts, in factor order.
    pub one_generic_flags: [FactorVerdict; 3],
    /// 1_B- and 1_C-generic.
    pub binding: bool,
    /// 1_A-, 1_B-, and 1_C-generic.
    pub one_generic: bool,
    /// Set on non-cubic tensors, where "maximal rank" of a contraction is
    /// read as the minimum of the two remaining dimensions.
    pub extended_convention: bool,
}

/// An invertible change of bases `(X, Y, Z)` acting on the three factors.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisTriple {
    pub x: Mat<Rational>,
    pub y: Mat<Rational>,
    pub z: Mat<Rational>,
}

impl BasisTriple {
    pub fn identity(a: usize, b: usize, c: usize) -> Self {
        BasisTriple { x: Mat::identity(a), y: Mat::identity(b), z: Mat::identity(c) }
    }
}

/// A sparse order-3 tensor with 1-based indices and nonzero stored entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    dims: (usize, usize, usize),
    entries: BTreeMap<(u32, u32, u32), Rational>,
}

impl Tensor3 {
    /// The zero tensor of shape `a × b × c`.
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        assert!(a > 0 && b > 0 && c > 0, "tensor dimensions must be positive");
        Tensor3 { dims: (a, b, c), entries: BTreeMap::new() }
    }

    /// Build from an explicit coordinate list, rejecting out-of-range
    /// indices, duplicates, and explicit zeros.
    pub fn from_entries(
        dims: (usize, usize, usize),
        entries: impl IntoIterator<Item = (u32, u32, u32, Rational)>,
    ) -> Result<Self, TensorError> {
        if dims.0 == 0 || dims.1 == 0 || dims.2 == 0 {
            return Err(TensorError::ShapeMismatch {
                detail: format!("dimensions must be positive, got {dims:?}"),
            });
        }
        let mut t = Tensor3 { dims, entries: BTreeMap::new() };
        for (i, j, k, v) in entries {
            if i == 0
                || j == 0
                || k == 0
                || i as usize > dims.0
                || j as usize > dims.1
                || k as usize > dims.2
            {
                return Err(TensorError::BadEntry {
                    detail: format!("index ({i},{j},{k}) outside 1..={:?}", dims),
                });
            }
            if Ring::is_zero(&v) {
                return Err(TensorError::BadEntry {
                    detail: format!("explicit zero value at ({i},{j},{k})"),
                });
            }
            if t.entries.insert((i, j, k), v).is_some() {
                return Err(TensorError::BadEntry {
                    detail: format!("duplicate entry at ({i},{j},{k})"),
                });
            }
        }
        Ok(t)
    }

    /// Dense builder: `f(i, j, k)` with 1-based indices; zeros are skipped.
    pub fn from_fn(
        a: usize,
        b: usize,
        c: usize,
        mut f: impl FnMut(u32, u32, u32) -> Rational,
    ) -> Self {
        let mut t = Tensor3::new(a, b, c);
        for i in 1..=a as u32 {
            for j in 1..=b as u32 {
                for k in 1..=c as u32 {
                    let v = f(i, j, k);
                    if !Ring::is_zero(&v) {
                        t.entries.insert((i, j, k), v);
                    }
                }
            }
        }
        t
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn is_cubic(&self) -> bool {
        self.dims.0 == self.dims.1 && self.dims.1 == self.dims.2
    }

    /// Set `T^{ijk}` (1-based), inserting, overwriting, or deleting when
    /// `v = 0`.  Panics on out-of-range indices.
    pub fn set(&mut self, i: u32, j: u32, k: u32, v: Rational) {
        assert!(
            i >= 1
                && j >= 1
                && k >= 1
                && i as usize <= self.dims.0
                && j as usize <= self.dims.1
                && k as usize <= self.dims.2,
            "index ({i},{j},{k}) outside tensor of shape {:?}",
            self.dims
        );
        if Ring::is_zero(&v) {
            self.entries.remove(&(i, j, k));
        } else {
            self.entries.insert((i, j, k), v);
        }
    }

    /// `T^{ijk}` (1-based); zero when absent.
    pub fn get(&self, i: u32, j: u32, k: u32) -> Rational {
        self.entries.get(&(i, j, k)).cloned().unwrap_or_else(Ring::zero)
    }

    /// Iterator over stored (nonzero) entries in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (&(u32, u32, u32), &Rational)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// The flattening `T_A: A* → B ⊗ C` as an `a × (b·c)` matrix whose row
    /// `i` is the row-major vectorization of the slice `T^{i··}` (and the
    /// cyclic analogues for B and C).
    pub fn flatten(&self, factor: Factor) -> Mat<Rational> {
        let (a, b, c) = self.dims;
        let (rows, cols) = match factor {
            Factor::A => (a, b * c),
            Factor::B => (b, a * c),
            Factor::C => (c, a * b),
        };
        let mut m: Mat<Rational> = Mat::zero(rows, cols);
        for (&(i, j, k), v) in &self.entries {
            let (i, j, k) = (i as usize - 1, j as usize - 1, k as usize - 1);
            let (r, col) = match factor {
                Factor::A => (i, j * c + k),
                Factor::B => (j, i * c + k),
                Factor::C => (k, i * b + j),
            };
            m.set(r, col, v.clone());
        }
        m
    }

    /// Contraction against a covector on the chosen factor:
    /// `T(α) ∈ B ⊗ C` is the `b × c` matrix `Σ_i α_i T^{i··}`, and
    /// analogously `T_B(β)` is `a × c`, `T_C(γ)` is `a × b`.
    pub fn contract(
        &self,
        factor: Factor,
        covector: &[Rational],
    ) -> Result<Mat<Rational>, TensorError> {
        let (a, b, c) = self.dims;
        let expect = match factor {
            Factor::A => a,
            Factor::B => b,
            Factor::C => c,
        };
        if covector.len() != expect {
            return Err(TensorError::ShapeMismatch {
                detail: format!(
                    "covector length {} does not match dim {} = {}",
                    covector.len(),
                    factor,
                    expect
                ),
            });
        }
        let (rows, cols) = match factor {
            Factor::A => (b, c),
            Factor::B => (a, c),
            Factor::C => (a, b),
        };
        let mut m: Mat<Rational> = Mat::zero(rows, cols);
        for (&(i, j, k), v) in &self.entries {
            let (i, j, k) = (i as usize - 1, j as usize - 1, k as usize - 1);
            let (w, r, col) = match factor {
                Factor::A => (&covector[i], j, k),
                Factor::B => (&covector[j], i, k),
                Factor::C => (&covector[k], i, j),
            };
            if !Ring::is_zero(w) {
                let acc = m.get(r, col).add_ref(&v.mul_ref(w));
                m.set(r, col, acc);
            }
        }
        Ok(m)
    }

    /// Apply an invertible triple: `((X,Y,Z)·T)^{ijk} =
    /// X^i_{i'} Y^j_{j'} Z^k_{k'} T^{i'j'k'}` (summation convention).
    ///
    /// Contractions transform as `T'(β) = Y · T(Xᵗ β) · Zᵗ`, so invertible
    /// triples preserve flattening ranks, genericity, and `dim g_T`.
    pub fn apply_triple(&self, g: &BasisTriple) -> Result<Tensor3, TensorError> {
        let (a, b, c) = self.dims;
        if g.x.rows() != a || g.x.cols() != a {
            return Err(TensorError::ShapeMismatch {
                detail: format!("X is {}×{}, need {a}×{a}", g.x.rows(), g.x.cols()),
            });
        }
        if g.y.rows() != b || g.y.cols() != b {
            return Err(TensorError::ShapeMismatch {
                detail: format!("Y is {}×{}, need {b}×{b}", g.y.rows(), g.y.cols()),
            });
        }
        if g.z.rows() != c || g.z.cols() != c {
            return Err(TensorError::ShapeMismatch {
                detail: format!("Z is {}×{}, need {c}×{c}", g.z.rows(), g.z.cols()),
            });
        }
        // One factor at a time keeps the work proportional to nnz·dim.
        let mut cur: BTreeMap<(u32, u32, u32), Rational> = self.entries.clone();
        for (axis, mat) in [(0usize, &g.x), (1usize, &g.y), (2usize, &g.z)] {
            let n = match axis {
                0 => a,
                1 => b,
                _ => c,
            };
            let mut next: BTreeMap<(u32, u32, u32), Rational> = BTreeMap::new();
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
        Ok(Tensor3 { dims: self.dims, entries: cur })
    }

    /// Full genericity report: exact flattening ranks, per-factor
    /// 1-genericity with `trials` random covectors (entries uniform in
    /// `[1, 2^30]`), exact verification of every witness.  Deterministic in
    /// `seed`; each factor draws from its own stream.
    pub fn genericity(&self, trials: u32, seed: u64) -> GenericityReport {
        assert!(trials >= 1, "genericity requires at least one trial");
        let (a, b, c) = self.dims;
        let ranks = (
            self.flatten(Factor::A).rank_exact(),
            self.flatten(Factor::B).rank_exact(),
            self.flatten(Factor::C).rank_exact(),
        );
        let concise = ranks == (a, b, c);

        let one_generic_flags: [FactorVerdict; 3] = if self.is_zero() {
            // Nothing to sample: every contraction of the zero tensor is 0.
            core::array::from_fn(|_| FactorVerdict::ProbablyNot {
                trials: 0,
                failure_bound: Ring::one(),
            })
        } else {
            core::array::from_fn(|fi| {
                let factor = Factor::ALL[fi];
                let dim = match factor {
                    Factor::A => a,
                    Factor::B => b,
                    Factor::C => c,
                };
                let target = match factor {
                    Factor::A => b.min(c),
                    Factor::B => a.min(c),
                    Factor::C => a.min(b),
                };
                let mut rng = ChaCha12Rng::seed_from_u64(seed);
                rng.set_stream(fi as u64);
                let mut verdict = None;
                for _ in 0..trials {
                    let alpha: Vec<Rational> = (0..dim)
                        .map(|_| {
                            Rational::from_integer(BigInt::from(
                                rng.gen_range(1u64..=(1u64 << 30)),
                            ))
                        })
                        .collect();
                    let slice = self.contract(factor, &alpha).expect("length matches dim");
                    if slice.rank_exact() == target {
                        verdict = Some(FactorVerdict::CertifiedYes { witness: alpha });
                        break;
                    }
                }
                verdict.unwrap_or_else(|| FactorVerdict::ProbablyNot {
                    trials,
                    failure_bound: schwartz_zippel_bound(a.max(b).max(c), trials),
                })
            })
        };

        let binding = one_generic_flags[1].is_yes() && one_generic_flags[2].is_yes();
        let one_generic = binding && one_generic_flags[0].is_yes();
        GenericityReport {
            flattening_ranks: ranks,
            concise,
            one_generic_flags,
            binding,
            one_generic,
            extended_convention: !self.is_cubic(),
        }
    }

    /// Change bases so the witness slice becomes the identity:
    /// the output satisfies `T'^{1jk} = δ_{jk}`, i.e. `T'(α¹) = Id`.
    ///
    /// The triple is `X` = any completion of `α` to a basis (as row 1),
    /// `Y = T(α)⁻¹`, `Z = Id`; then `T'(e₁) = Y · T(Xᵗe₁) · Zᵗ =
    /// T(α)⁻¹ T(α) = Id`.
    pub fn normalize_1a(
        &self,
        alpha: &[Rational],
    ) -> Result<(Tensor3, BasisTriple), TensorError> {
        let (a, b, c) = self.dims;
        if alpha.len() != a {
            return Err(TensorError::ShapeMismatch {
                detail: format!("witness length {} ≠ dim A = {a}", alpha.len()),
            });
        }
        let slice = self.contract(Factor::A, alpha)?;
        if b != c {
            return Err(TensorError::NonInvertibleWitness);
        }
        let y = slice.inverse().ok_or(TensorError::NonInvertibleWitness)?;
        let x = completion_matrix(alpha).ok_or(TensorError::NonInvertibleWitness)?;
        let g = BasisTriple { x, y, z: Mat::identity(c) };
        let out = self.apply_triple(&g)?;
        Ok((out, g))
    }

    /// Change bases so that both `T'^{1jk} = δ_{jk}` and `T'^{i1k} = δ_{ik}`
    /// hold — the standard position for a binding 1-generic tensor.
    ///
    /// First `normalize_1a(α)`; then, with `β₁` the image of `β` in the new
    /// B-coordinates and `N = T₁_B(β₁)` (whose first row is automatically
    /// `β₁ᵗ`), the triple `(X₂, Y₂, Z₂) = (Y₂ N⁻¹, completion(β₁), (Y₂ᵗ)⁻¹)`
    /// fixes the first normalization (row 1 of `X₂` is `e₁ᵗ` because
    /// `β₁ᵗ N⁻¹ = e₁ᵗ`) while achieving the second.
    pub fn normalize_binding(
        &self,
        alpha: &[Rational],
        beta: &[Rational],
    ) -> Result<(Tensor3, BasisTriple), TensorError> {
        let (a, b, c) = self.dims;
        if beta.len() != b {
            return Err(TensorError::ShapeMismatch {
                detail: format!("witness length {} ≠ dim B = {b}", beta.len()),
            });
        }
        let (t1, g1) = self.normalize_1a(alpha)?;
        // β in the post-normalization B-coordinates: T₁_B((Y₁ᵗ)⁻¹β) =
        // X₁ T_B(β) Z₁ᵗ, so invertibility of the slice is preserved.
        let y1_t_inv = g1
            .y
            .transpose()
            .inverse()
            .expect("Y₁ = T(α)⁻¹ is invertible by construction");
        let beta1 = y1_t_inv.matvec(beta);
        let n = t1.contract(Factor::B, &beta1)?;
        if a != c {
            return Err(TensorError::NonInvertibleWitness);
        }
        let n_inv = n.inverse().ok_or(TensorError::NonInvertibleWitness)?;
        let y2 = completion_matrix(&beta1).ok_or(TensorError::NonInvertibleWitness)?;
        let z2 = y2.transpose().inverse().expect("completion matrices are invertible");
        let x2 = y2.matmul(&n_inv);
        let g2 = BasisTriple { x: x2, y: y2, z: z2 };
        let out = t1.apply_triple(&g2)?;
        // Exact safety net: both δ patterns must now hold.
        if !has_delta_pattern(&out, Factor::A) {
            return Err(TensorError::IncompatibleWitnesses);
        }
        if !has_delta_pattern(&out, Factor::B) {
            return Err(TensorError::IncompatibleWitnesses);
        }
        let g = BasisTriple {
            x: g2.x.matmul(&g1.x),
            y: g2.y.matmul(&g1.y),
            z: g2.z.matmul(&g1.z),
        };
        Ok((out, g))
    }
}

/// Whether `T^{1jk} = δ_{jk}` (factor A) or `T^{i1k} = δ_{ik}` (factor B).
pub fn has_delta_pattern(t: &Tensor3, factor: Factor) -> bool {
    let (a, b, c) = t.dims();
    let e1: Vec<Rational> = {
        let dim = match factor {
            Factor::A => a,
            Factor::B => b,
            Factor::C => c,
        };
        let mut v: Vec<Rational> = alloc::vec![Ring::zero(); dim];
        v[0] = Ring::one();
        v
    };
    let slice = t.contract(factor, &e1).expect("unit covector has the right length");
    slice.is_square() && slice == Mat::identity(slice.rows())
}

/// Invertible matrix whose first row is `v` and whose remaining rows are the
/// standard basis vectors `e_ρ`, ρ ≠ p, where `p` is the first index with
/// `v_p ≠ 0`.  `None` when `v = 0`.
pub fn completion_matrix(v: &[Rational]) -> Option<Mat<Rational>> {
    let n = v.len();
    let p = v.iter().position(|x| !Ring::is_zero(x))?;
    let mut m = Mat::zero(n, n);
    for (c, val) in v.iter().enumerate() {
        m.set(0, c, val.clone());
    }
    let mut r = 1;
    for rho in 0..n {
        if rho != p {
            m.set(r, rho, Ring::one());
            r += 1;
        }
    }
    Some(m)
}

/// `(maxdim / 2^30)^trials`, the Schwartz–Zippel bound on the probability
/// that every random covector missed the maximal-rank locus.
fn schwartz_zippel_bound(maxdim: usize, trials: u32) -> Rational {
    let base = Rational::new(BigInt::from(maxdim as u64), BigInt::from(1u64 << 30));
    Pow::pow(base, trials as u64)
}
