//! Ring laws for Laurent polynomials in the degeneration parameter ε,
//! plus the exact semantics of the ε → 0 limit.

use proptest::prelude::*;
use tensym_core::exact_arith::{rat_frac, ExactDivRing, Ring};
use tensym_core::LaurentPoly;

fn lpoly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -6i64..=6, 1i64..=3), 0..6).prop_map(|terms| {
        LaurentPoly::from_terms(terms.into_iter().map(|(e, n, d)| (e, rat_frac(n, d))))
    })
}

proptest! {
    #[test]
    fn addition_is_commutative(p in lpoly(), q in lpoly()) {
        prop_assert_eq!(p.add_ref(&q), q.add_ref(&p));
    }

    #[test]
    fn multiplication_is_commutative(p in lpoly(), q in lpoly()) {
        prop_assert_eq!(p.mul_ref(&q), q.mul_ref(&p));
    }

    #[test]
    fn multiplication_distributes_over_addition(p in lpoly(), q in lpoly(), r in lpoly()) {
        let lhs = p.mul_ref(&q.add_ref(&r));
        let rhs = p.mul_ref(&q).add_ref(&p.mul_ref(&r));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn subtraction_inverts_addition(p in lpoly(), q in lpoly()) {
        prop_assert_eq!(p.add_ref(&q).sub_ref(&q), p);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(p in lpoly(), q in lpoly()) {
        let eps = rat_frac(2, 3);
        prop_assert_eq!(p.add_ref(&q).eval(&eps), p.eval(&eps) + q.eval(&eps));
        prop_assert_eq!(p.mul_ref(&q).eval(&eps), p.eval(&eps) * q.eval(&eps));
    }

    #[test]
    fn limit_is_the_constant_coefficient_exactly_without_poles(p in lpoly()) {
        match p.min_exp() {
            Some(e) if e < 0 => prop_assert!(p.limit().is_err()),
            _ => prop_assert_eq!(p.limit().unwrap(), p.coeff(0)),
        }
    }

    #[test]
    fn exact_division_inverts_multiplication(p in lpoly(), q in lpoly()) {
        prop_assume!(!Ring::is_zero(&q));
        prop_assert_eq!(p.mul_ref(&q).exact_div(&q), p);
    }

    #[test]
    fn small_rationals_embed_as_constants(n in -6i64..=6, d in 1i64..=4) {
        let c = rat_frac(n, d);
        let p = LaurentPoly::constant(c.clone());
        prop_assert_eq!(p.limit().unwrap(), c.clone());
        prop_assert_eq!(p.eval(&rat_frac(5, 7)), c);
    }
}
