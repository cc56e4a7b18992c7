mod common;

use common::{lr_by_realization, q, ssyt_polynomial, to_rational};
use proptest::prelude::*;
use thom_core::partitions::partitions_up_to;
use thom_core::symfunc::{expand_in_schur, lr_product, realize_in_monomials, schur_in_elementary, Monomial};
use thom_core::{Family, Partition, Polynomial, Rational, SchurExpansion};

#[test]
fn schur_determinant_matches_tableaux() {
    for lambda in partitions_up_to(6) {
        let det = schur_in_elementary::<i64>(&lambda, &Family::C);
        let realized = realize_in_monomials(&det, &Family::C, 6).unwrap();
        assert_eq!(realized, ssyt_polynomial(&lambda, 6), "lambda = {lambda}");
    }
}

#[test]
fn tableau_counts_match_hook_content() {
    // s_(2,1)(1,1,1) = 8 and s_(2,2)(1,1,1) = 6
    let eval = |p: &[usize]| ssyt_polynomial(&Partition::new(p.to_vec()).unwrap(), 3).terms().values().sum::<i64>();
    assert_eq!(eval(&[2, 1]), 8);
    assert_eq!(eval(&[2, 2]), 6);
    assert_eq!(eval(&[1, 1, 1, 1]), 0);
}

#[test]
fn lr_matches_realized_products() {
    let shapes = partitions_up_to(8);
    for lambda in &shapes {
        for mu in &shapes {
            if lambda.weight() + mu.weight() > 8 {
                continue;
            }
            assert_eq!(lr_product::<i64>(lambda, mu), lr_by_realization(lambda, mu), "{lambda} * {mu}");
        }
    }
}

#[test]
fn expansion_round_trips_through_determinants() {
    let target: SchurExpansion<Rational> = [
        (Partition::new(vec![3, 1]).unwrap(), q(2)),
        (Partition::new(vec![2, 1, 1]).unwrap(), Rational::new((-1).into(), 3.into())),
        (Partition::new(vec![4]).unwrap(), q(5)),
    ]
    .into_iter()
    .collect();
    let poly = target.to_polynomial(&Family::C_TILDE);
    assert_eq!(expand_in_schur(&poly, &Family::C_TILDE).unwrap(), target);
    let product = to_rational(&lr_by_realization(&Partition::new(vec![2]).unwrap(), &Partition::new(vec![1, 1]).unwrap()));
    let poly = &schur_in_elementary::<Rational>(&Partition::new(vec![2]).unwrap(), &Family::C)
        * &schur_in_elementary::<Rational>(&Partition::new(vec![1, 1]).unwrap(), &Family::C);
    assert_eq!(expand_in_schur(&poly, &Family::C).unwrap(), product);
}

fn small_poly() -> impl Strategy<Value = Polynomial> {
    let family = prop_oneof![Just(Family::C), Just(Family::C_PRIME), Just(Family::T)];
    let factor = (family, 1u32..4, 1u32..3);
    let term = (prop::collection::vec(factor, 0..3), -4i64..=4);
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        Polynomial::from_terms(
            terms
                .into_iter()
                .map(|(factors, c)| (Monomial::from_factors(factors.into_iter().map(|(f, i, e)| (f.var(i), e))), q(c))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn polynomial_ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
    }

    #[test]
    fn polynomial_json_round_trip(a in small_poly()) {
        let text = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Polynomial>(&text).unwrap(), a);
    }

    #[test]
    fn schur_expansion_inverts_determinants(coeffs in prop::collection::vec(-5i64..=5, 7)) {
        let shapes = thom_core::partitions::partitions_of(5);
        let target: SchurExpansion<Rational> = shapes.iter().cloned().zip(coeffs.iter().map(|&c| q(c))).collect();
        let poly = target.to_polynomial(&Family::C);
        prop_assert_eq!(expand_in_schur(&poly, &Family::C).unwrap(), target);
    }
}
