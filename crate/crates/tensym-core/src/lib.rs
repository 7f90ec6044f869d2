//! Exact computation of symmetry Lie algebras of order-3 tensors.
//!
//! For a tensor `T ∈ A ⊗ B ⊗ C` with `dim A = a`, `dim B = b`, `dim C = c`,
//! the Lie algebra `g̃_T ⊂ gl(A) × gl(B) × gl(C)` of triples `(U, V, W)`
//! annihilating `T` under the Leibniz action
//!
//! ```text
//! ((U, V, W)·T)^{ijk} = U^i_{i'} T^{i'jk} + V^j_{j'} T^{ij'k} + W^k_{k'} T^{ijk'}
//! ```
//!
//! is the kernel of an explicit `abc × (a² + b² + c²)` integer linear system.
//! The symmetry group dimension is `dim g_T = dim g̃_T − 2`, the 2 accounting
//! for the scaling relations `(λ·Id, μ·Id, ν·Id)` with `λ + μ + ν = 0`.
//!
//! Everything here is computed over the rationals with exact arithmetic, so
//! every dimension reported is a theorem about the input tensor, not a
//! numerical estimate.  The crate covers:
//!
//! * [`exact_arith`] — arbitrary-precision rationals, Laurent polynomials in
//!   one parameter ε, dense and sparse exact linear algebra (rank, nullspace,
//!   determinant), and a probabilistic modular fast path;
//! * [`tensor`] — order-3 tensors, flattenings, contractions, 1-genericity
//!   certificates, and the normalizations `T(α) = Id`, `T_B(β) = Id` used to
//!   put binding tensors in standard position;
//! * [`symmetry`] — the annihilator system, `dim g_T`, canonical kernel
//!   bases, and Lie-algebraic checks (closure, membership of parametric
//!   families);
//! * [`bform`] — stabilizers `{X : X·B + B·Xᵗ = 0}` of full-rank bilinear
//!   forms and their classification by the profile `(e, ℓ, f)` of the
//!   symmetric/skew parts;
//! * [`obstructions`] — Strassen-equation commutator obstructions to minimal
//!   border rank, and exact degeneration limits along Laurent ε-families;
//! * [`zoo`] — constructors for the named tensors of the matrix-multiplication
//!   literature (Coppersmith–Winograd big and small, Strassen's tensor, the
//!   maximal-symmetry families, …) together with their closed-form symmetry
//!   dimensions and explicit parametric presentations of their algebras.
//!
//! The scalar type is [`exact_arith::Rational`]; all tensors in the zoo have
//! entries in `{−1, 0, 1}`, so rational arithmetic is exact end to end.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bform;
pub mod exact_arith;
pub mod obstructions;
pub mod symmetry;
pub mod tensor;
pub mod zoo;

pub use exact_arith::{LaurentPoly, Mat, Rational, SparseMat};
pub use symmetry::{LieTriple, SymmetryReport};
pub use tensor::{Factor, GenericityReport, Tensor3};
