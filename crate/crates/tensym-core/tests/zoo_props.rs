//! The zoo's central law: every closed-form dimension formula matches the
//! exact kernel computation, at every admissible size we can afford, and
//! every presented parametric family actually annihilates its tensor.

use proptest::prelude::*;
use tensym_core::exact_arith::Mode;
use tensym_core::symmetry::{family_membership, symmetry_report};
use tensym_core::zoo::{construct, expected_sym_dim, presentations, ZooName};

/// Valid (name, size) pairs small enough for exhaustive exact kernels.
fn any_zoo_choice() -> impl Strategy<Value = (ZooName, usize)> {
    prop_oneof![
        (1usize..=5).prop_map(|m| (ZooName::RankOne, m)),
        (1usize..=5).prop_map(|m| (ZooName::T0, m)),
        (2usize..=5).prop_map(|m| (ZooName::Utriv, m)),
        (1usize..=3).prop_map(|q| (ZooName::CwBig, q)),
        prop_oneof![Just(4usize), Just(6usize)].prop_map(|m| (ZooName::MaxEven, m)),
        prop_oneof![Just(5usize), Just(7usize)].prop_map(|m| (ZooName::MaxOddSkew, m)),
        prop_oneof![Just(3usize), Just(5usize), Just(7usize)]
            .prop_map(|m| (ZooName::MaxMinus1Odd, m)),
        (2usize..=4).prop_map(|q| (ZooName::Strassen, q)),
        (2usize..=4).prop_map(|q| (ZooName::CwSmall, q)),
        (3usize..=6).prop_map(|m| (ZooName::McISym, m)),
        Just((ZooName::Skew3, 3usize)),
    ]
}

/// Names carrying a parametric presentation, with sizes that keep the
/// samplers' block structure nondegenerate.
fn presented_choice() -> impl Strategy<Value = (ZooName, usize)> {
    prop_oneof![
        (2usize..=5).prop_map(|m| (ZooName::T0, m)),
        (2usize..=5).prop_map(|m| (ZooName::Utriv, m)),
        (1usize..=3).prop_map(|q| (ZooName::CwBig, q)),
        prop_oneof![Just(4usize), Just(6usize)].prop_map(|m| (ZooName::MaxEven, m)),
        prop_oneof![Just(5usize), Just(7usize)].prop_map(|m| (ZooName::MaxOddSkew, m)),
        prop_oneof![Just(3usize), Just(5usize), Just(7usize)]
            .prop_map(|m| (ZooName::MaxMinus1Odd, m)),
        (2usize..=4).prop_map(|q| (ZooName::Strassen, q)),
        (2usize..=4).prop_map(|q| (ZooName::CwSmall, q)),
        (3usize..=6).prop_map(|m| (ZooName::McISym, m)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn formulas_match_the_computed_dimension((name, size) in any_zoo_choice()) {
        let entry = construct(name, size).unwrap();
        let report = symmetry_report(&entry.tensor, Mode::Exact, 0);
        prop_assert_eq!(
            report.sym_dim,
            entry.expected_sym_dim as i64,
            "{} at size {}", name, size
        );
    }

    #[test]
    fn presented_families_annihilate((name, size) in presented_choice(), seed in 0u64..128) {
        let entry = construct(name, size).unwrap();
        let samples = presentations::samples(name, size, 2, seed).unwrap();
        prop_assert!(family_membership(&entry.tensor, &samples), "{} at size {}", name, size);
    }

    #[test]
    fn construct_and_expected_sym_dim_agree((name, size) in any_zoo_choice()) {
        let entry = construct(name, size).unwrap();
        let (dim, provenance) = expected_sym_dim(name, size).unwrap();
        prop_assert_eq!(entry.expected_sym_dim, dim);
        prop_assert_eq!(entry.provenance, provenance);
    }
}
