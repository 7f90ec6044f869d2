//! Shared proptest strategies for exact rational objects.
#![allow(dead_code)]

use proptest::prelude::*;
use tensym_core::exact_arith::{rat, rat_frac};
use tensym_core::symmetry::LieTriple;
use tensym_core::tensor::BasisTriple;
use tensym_core::{Mat, Rational, Tensor3};

/// Small rationals with denominators up to 4.
pub fn small_rat() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat_frac(n, d))
}

/// A dense `rows × cols` matrix of small rationals.
pub fn rat_mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat<Rational>> {
    prop::collection::vec(small_rat(), rows * cols)
        .prop_map(move |v| Mat::from_fn(rows, cols, |r, c| v[r * cols + c].clone()))
}

/// An invertible matrix, built as a product of unit-triangular factors
/// (determinant exactly 1, entries still small).
pub fn invertible_mat(n: usize) -> impl Strategy<Value = Mat<Rational>> {
    (
        prop::collection::vec(small_rat(), n * n),
        prop::collection::vec(small_rat(), n * n),
    )
        .prop_map(move |(lo, up)| {
            let l = Mat::from_fn(n, n, |r, c| {
                if r == c {
                    rat(1)
                } else if r > c {
                    lo[r * n + c].clone()
                } else {
                    rat(0)
                }
            });
            let u = Mat::from_fn(n, n, |r, c| {
                if r == c {
                    rat(1)
                } else if r < c {
                    up[r * n + c].clone()
                } else {
                    rat(0)
                }
            });
            l.matmul(&u)
        })
}

/// A dense tensor with small integer entries and dims in `1..=max_dim`.
pub fn small_tensor(max_dim: usize) -> impl Strategy<Value = Tensor3> {
    (1..=max_dim, 1..=max_dim, 1..=max_dim).prop_flat_map(|(a, b, c)| {
        prop::collection::vec(-3i64..=3, a * b * c).prop_map(move |vals| {
            Tensor3::from_fn(a, b, c, |i, j, k| {
                let idx = ((i as usize - 1) * b + (j as usize - 1)) * c + (k as usize - 1);
                rat(vals[idx])
            })
        })
    })
}

/// A tensor together with an invertible basis triple of matching shape.
pub fn tensor_and_triple(max_dim: usize) -> impl Strategy<Value = (Tensor3, BasisTriple)> {
    small_tensor(max_dim).prop_flat_map(|t| {
        let (a, b, c) = t.dims();
        (Just(t), invertible_mat(a), invertible_mat(b), invertible_mat(c))
            .prop_map(|(t, x, y, z)| (t, BasisTriple { x, y, z }))
    })
}

/// An arbitrary Lie-algebra triple for the given shape.
pub fn lie_triple(a: usize, b: usize, c: usize) -> impl Strategy<Value = LieTriple> {
    (rat_mat(a, a), rat_mat(b, b), rat_mat(c, c)).prop_map(|(u, v, w)| LieTriple { u, v, w })
}

/// A tensor together with an arbitrary (not necessarily annihilating)
/// Lie-algebra triple of matching shape.
pub fn tensor_and_lie(max_dim: usize) -> impl Strategy<Value = (Tensor3, LieTriple)> {
    small_tensor(max_dim).prop_flat_map(|t| {
        let (a, b, c) = t.dims();
        (Just(t), lie_triple(a, b, c)).prop_map(|(t, l)| (t, l))
    })
}

/// A tensor together with two independent Lie-algebra triples of its shape.
pub fn tensor_and_two_lies(max_dim: usize) -> impl Strategy<Value = (Tensor3, LieTriple, LieTriple)> {
    small_tensor(max_dim).prop_flat_map(|t| {
        let (a, b, c) = t.dims();
        (Just(t), lie_triple(a, b, c), lie_triple(a, b, c))
    })
}
