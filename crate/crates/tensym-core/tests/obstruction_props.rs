//! Laws of Laurent degeneration families and the commutator border-rank
//! test: identity families are lossless, nonnegative weights always have
//! limits, and symmetry dimension can only grow in the limit.

mod common;

use common::*;
use proptest::prelude::*;
use tensym_core::exact_arith::{rat, Mode};
use tensym_core::obstructions::{
    apply_family, commutator_obstruction, limit, DegenerationFamily,
};
use tensym_core::symmetry::symmetry_report;
use tensym_core::tensor::Tensor3;
use tensym_core::zoo::{construct, ZooName};

fn tensor_with_weights() -> impl Strategy<Value = (Tensor3, Vec<i64>, Vec<i64>, Vec<i64>)> {
    small_tensor(3).prop_flat_map(|t| {
        let (a, b, c) = t.dims();
        (
            Just(t),
            prop::collection::vec(0i64..=2, a),
            prop::collection::vec(0i64..=2, b),
            prop::collection::vec(0i64..=2, c),
        )
    })
}

proptest! {
    #[test]
    fn identity_families_are_lossless(t in small_tensor(3)) {
        let (a, b, c) = t.dims();
        let family = DegenerationFamily::identity(a, b, c);
        let curve = apply_family(&t, &family).unwrap();
        prop_assert_eq!(limit(&curve).unwrap(), t);
    }

    #[test]
    fn nonnegative_weights_always_have_limits((t, ex, ey, ez) in tensor_with_weights()) {
        let family = DegenerationFamily::monomial_diagonal(&ex, &ey, &ez);
        let curve = apply_family(&t, &family).unwrap();
        let lim = limit(&curve).unwrap();
        // An entry survives exactly when its total weight is zero.
        let (a, b, c) = t.dims();
        for i in 1..=a as u32 {
            for j in 1..=b as u32 {
                for k in 1..=c as u32 {
                    let w = ex[i as usize - 1] + ey[j as usize - 1] + ez[k as usize - 1];
                    let expected = if w == 0 { t.get(i, j, k) } else { rat(0) };
                    prop_assert_eq!(lim.get(i, j, k), expected);
                }
            }
        }
    }
}

/// Degenerating the unitrivalent tensor along the `a₁`-scaling curve lands
/// on `T₀`, and the symmetry dimension jumps up, never down.
#[test]
fn symmetry_dimension_is_semicontinuous_along_the_scaling_curve() {
    for m in 3..=7 {
        let source = construct(ZooName::Utriv, m).unwrap().tensor;
        let target = construct(ZooName::T0, m).unwrap().tensor;
        let family = DegenerationFamily::scale_a(m);
        let curve = apply_family(&source, &family).unwrap();
        let lim = limit(&curve).unwrap();
        assert_eq!(lim, target, "scale_a limit at m = {m}");
        let before = symmetry_report(&source, Mode::Exact, 0).sym_dim;
        let after = symmetry_report(&lim, Mode::Exact, 0).sym_dim;
        assert!(after >= before, "sym_dim dropped from {before} to {after} at m = {m}");
    }
}

/// The commutator report on the big Coppersmith–Winograd tensor: the
/// witness `e₁` excludes its own slice, every remaining pair commutes, and
/// the border-rank bound stays at `m`.
#[test]
fn cw_big_slices_commute_pairwise() {
    for q in 1..=4 {
        let m = q + 2;
        let t = construct(ZooName::CwBig, q).unwrap().tensor;
        let mut alpha = vec![rat(0); m];
        alpha[0] = rat(1);
        let report = commutator_obstruction(&t, &alpha).unwrap();
        assert_eq!(report.commutator_ranks.len(), (m - 1) * (m - 2) / 2);
        assert!(report.commutator_ranks.values().all(|&r| r == 0));
        assert!(!report.obstructed);
        assert_eq!(report.bound, m);
    }
}
