//! Invariance and feasibility laws for full-rank bilinear forms: the
//! profile is a congruence invariant, the skew part forces parity, and the
//! canonical generators reproduce their requested profiles.

mod common;

use common::*;
use proptest::prelude::*;
use tensym_core::bform::{
    canonical_with_profile, profile, random_with_profile, stabilizer, Subcase,
};
use tensym_core::exact_arith::rat;
use tensym_core::{Mat, Rational};

/// Candidate profile tuples (k, e, l, q, isotropic); many are infeasible
/// and are skipped inside the tests via the generator's own feasibility
/// check.
fn raw_profile() -> impl Strategy<Value = (usize, usize, usize, usize, bool)> {
    (2usize..=6).prop_flat_map(|k| {
        (Just(k), 0..=k, 0..=k, 0..=k, any::<bool>())
            .prop_map(|(k, e, l, q, iso)| (k, e, l, q, iso))
    })
}

fn invertible_form() -> impl Strategy<Value = Mat<Rational>> {
    (2usize..=5)
        .prop_flat_map(|k| rat_mat(k, k))
        .prop_filter("form must be invertible", |b| b.det().unwrap() != rat(0))
}

proptest! {
    #[test]
    fn the_skew_part_has_even_rank(b in invertible_form()) {
        let p = profile(&b).unwrap();
        // rank Λ = k − e is even, equivalently l + f ≡ 0 (mod 2).
        prop_assert_eq!((p.l + p.f) % 2, 0);
    }

    #[test]
    fn stabilizer_members_stabilize(b in invertible_form(), c0 in small_rat(), c1 in small_rat()) {
        let (dim, basis) = stabilizer(&b).unwrap();
        prop_assert_eq!(dim, basis.len());
        let k = b.rows();
        let mut x = Mat::zero(k, k);
        if let Some(first) = basis.first() {
            x = x.add(&first.scale(&c0));
        }
        if let Some(last) = basis.last() {
            x = x.add(&last.scale(&c1));
        }
        let residual = x.matmul(&b).add(&b.matmul(&x.transpose()));
        prop_assert!(residual.is_zero_mat());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn canonical_forms_reproduce_their_profile((k, e, l, q, iso) in raw_profile()) {
        if e + l > k {
            return Ok(());
        }
        let f = k - e - l;
        let sub = if iso { Subcase::Isotropic } else { Subcase::Default };
        let b = match canonical_with_profile(k, e, l, f, q, sub) {
            Ok(b) => b,
            Err(_) => return Ok(()), // infeasible tuple: nothing to check
        };
        let p = profile(&b).unwrap();
        prop_assert_eq!((p.e, p.l, p.f, p.q_restricted), (e, l, f, q));
    }

    #[test]
    fn profiles_are_congruence_invariants((k, e, l, q, iso) in raw_profile(), seed in 0u64..256) {
        if e + l > k {
            return Ok(());
        }
        let f = k - e - l;
        let sub = if iso { Subcase::Isotropic } else { Subcase::Default };
        let canonical = match canonical_with_profile(k, e, l, f, q, sub) {
            Ok(b) => b,
            Err(_) => return Ok(()),
        };
        let congruent = random_with_profile(k, e, l, f, q, sub, seed).unwrap();
        let p1 = profile(&canonical).unwrap();
        let p2 = profile(&congruent).unwrap();
        prop_assert_eq!((p1.e, p1.l, p1.f, p1.q_restricted), (p2.e, p2.l, p2.f, p2.q_restricted));
        prop_assert_eq!(p1.stab_dim, p2.stab_dim);
        prop_assert_eq!(p1.case_label, p2.case_label);
        prop_assert_eq!(p1.matches, p2.matches);
    }

    #[test]
    fn symmetric_forms_without_isotropic_part_obey_the_block_formula(
        (e, f0) in (0usize..=4, 0usize..=4),
        seed in 0u64..256,
    ) {
        // l = 0 forces f even; stabilizer = so(e) ⊕ sp(f).
        let f = 2 * (f0 / 2);
        let k = e + f;
        if k < 2 {
            return Ok(());
        }
        let b = match random_with_profile(k, e, 0, f, e, Subcase::Default, seed) {
            Ok(b) => b,
            Err(_) => return Ok(()),
        };
        let p = profile(&b).unwrap();
        let expected = (e * e - e) / 2 + f * (f + 1) / 2;
        prop_assert_eq!(p.stab_dim, expected);
    }
}
