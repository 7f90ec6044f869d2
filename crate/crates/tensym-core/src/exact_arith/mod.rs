//! Exact scalar arithmetic and exact linear algebra.
//!
//! Scalars are arbitrary-precision rationals ([`Rational`]) or Laurent
//! polynomials in one parameter ε over the rationals ([`LaurentPoly`]).
//! Matrices come in two flavors: a dense generic [`Mat`] over any
//! [`Ring`] (with a fraction-free Bareiss determinant over any
//! [`ExactDivRing`]) and a sparse rational [`SparseMat`] whose reduced row
//! echelon form drives every rank, nullspace, and kernel-membership
//! computation in the crate.
//!
//! The reduced row echelon form of a matrix is unique, so the canonical
//! kernel bases extracted from [`Rref`] are reproducible across runs and
//! platforms regardless of pivot-selection heuristics.
//!
//! A modular fast path ([`SparseMat::rank_modular`]) computes rank over
//! several random word-size prime fields.  Rank mod p never exceeds the
//! rational rank, so the maximum over primes is a certified lower bound and
//! equals the true rank with overwhelming probability; callers that assert
//! exact equalities always use the rational path.

mod laurent;
mod matrix;
mod modular;
mod sparse;

pub use laurent::LaurentPoly;
pub use matrix::Mat;
pub use modular::{rank_modular_with_primes, ModularRank};
pub use sparse::{Rref, SparseMat};

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for a `Rational` from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the `Rational` `n/d` (`d ≠ 0`).
pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Strict parse of the interchange syntax for exact rationals: `"p"` or
/// `"p/q"` with integer `p`, positive integer `q`, and no padding.  The
/// inverse of [`Rational`]'s `Display` (which prints lowest terms and
/// omits `/1`), but unreduced fractions such as `"2/4"` are accepted.
pub fn parse_rat_str(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den <= BigInt::from(0) {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Whether linear-algebra queries run exactly over the rationals or
/// probabilistically over random prime fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Modular,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exact => f.write_str("exact"),
            Mode::Modular => f.write_str("modular"),
        }
    }
}

/// Errors from scalar and matrix operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithError {
    /// `laurent_limit` was asked for the ε→0 limit of a Laurent polynomial
    /// with a pole at ε = 0.
    NegativeExponent { exponent: i64 },
    /// A determinant or inverse was requested of a non-square matrix.
    NonSquare { rows: usize, cols: usize },
    /// Operand shapes are incompatible.
    ShapeMismatch { detail: String },
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::NegativeExponent { exponent } => {
                write!(f, "limit does not exist: term with negative exponent {exponent}")
            }
            ArithError::NonSquare { rows, cols } => {
                write!(f, "matrix is not square: {rows}x{cols}")
            }
            ArithError::ShapeMismatch { detail } => write!(f, "shape mismatch: {detail}"),
        }
    }
}

/// Commutative ring scalar, by-reference operations.
///
/// Implemented by [`Rational`] and [`LaurentPoly`]; everything generic in the
/// crate (dense matrices, the Leibniz action, Bareiss elimination) is written
/// against this trait so tensors and matrices over ε-polynomials reuse the
/// rational code paths.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

/// Integral domain with exact division, as required by fraction-free
/// (Bareiss) elimination: every division performed by the algorithm is
/// guaranteed by its invariants to be exact, and implementations must panic
/// if handed a non-divisible pair (that would indicate a logic error, not
/// bad input).
pub trait ExactDivRing: Ring {
    /// `self / d`, which the caller guarantees to be exact.
    fn exact_div(&self, d: &Self) -> Self;
    /// Deterministic pivot-choice weight; smaller is preferred.  Used to
    /// bound coefficient growth (e.g. bit size for rationals, term count for
    /// polynomials).
    fn pivot_weight(&self) -> u64;
}

impl Ring for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl ExactDivRing for Rational {
    fn exact_div(&self, d: &Self) -> Self {
        assert!(!Ring::is_zero(d), "exact division by zero");
        self / d
    }
    fn pivot_weight(&self) -> u64 {
        (self.numer().bits() + self.denom().bits()) as u64
    }
}
