mod common;

use common::{q, random_diff, random_jet};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thom_core::jets::{compose, contact_invariants_equal, invert_jet, left_right_act, local_algebra};
use thom_core::{JetMap, Matrix, Rational};

fn dims(rng: &mut ChaCha8Rng) -> (usize, usize, usize, usize) {
    (rng.gen_range(1..=3), rng.gen_range(1..=3), rng.gen_range(1..=3), rng.gen_range(1..=3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn composition_is_associative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (n, k, m, d) = dims(&mut rng);
        let p = rng.gen_range(1..=3);
        let a = random_jet(&mut rng, n, k, d, 0.4);
        let b = random_jet(&mut rng, k, m, d, 0.4);
        let c = random_jet(&mut rng, m, p, d, 0.4);
        let left = compose(&compose(&a, &b).unwrap(), &c).unwrap();
        let right = compose(&a, &compose(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn linear_part_is_functorial(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (n, k, m, d) = dims(&mut rng);
        let psi = random_jet(&mut rng, n, k, d, 0.5);
        let phi = random_jet(&mut rng, k, m, d, 0.5);
        let composed = compose(&psi, &phi).unwrap();
        prop_assert_eq!(composed.linear_part(), phi.linear_part().mul(&psi.linear_part()));
    }

    #[test]
    fn diffeomorphisms_form_a_group(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=3);
        let d = rng.gen_range(1..=3);
        let f = random_diff(&mut rng, n, d);
        let g = random_diff(&mut rng, n, d);
        let id = JetMap::identity(n, d);
        let inv = invert_jet(&f).unwrap();
        prop_assert_eq!(compose(&f, &inv).unwrap(), id.clone());
        prop_assert_eq!(compose(&inv, &f).unwrap(), id.clone());
        prop_assert_eq!(compose(&f, &id).unwrap(), f.clone());
        let fg = compose(&f, &g).unwrap();
        prop_assert!(fg.is_diff().unwrap());
        prop_assert_eq!(
            fg.linear_part().determinant(),
            f.linear_part().determinant() * g.linear_part().determinant()
        );
        // (g ∘ f)⁻¹ = f⁻¹ ∘ g⁻¹
        prop_assert_eq!(invert_jet(&fg).unwrap(), compose(&invert_jet(&g).unwrap(), &inv).unwrap());
    }

    #[test]
    fn left_right_action_law(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=2);
        let k = rng.gen_range(1..=2);
        let d = rng.gen_range(1..=3);
        let psi = random_jet(&mut rng, n, k, d, 0.5);
        let (n1, k1) = (random_diff(&mut rng, n, d), random_diff(&mut rng, k, d));
        let (n2, k2) = (random_diff(&mut rng, n, d), random_diff(&mut rng, k, d));
        let stepwise = left_right_act(&n2, &k2, &left_right_act(&n1, &k1, &psi).unwrap()).unwrap();
        let product = left_right_act(&compose(&n1, &n2).unwrap(), &compose(&k1, &k2).unwrap(), &psi).unwrap();
        prop_assert_eq!(stepwise, product);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn local_algebra_is_contact_invariant(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=2);
        let k = rng.gen_range(1..=2);
        let d = rng.gen_range(1..=3);
        // drop linear terms half the time so the algebra is usually nontrivial
        let mut psi = random_jet(&mut rng, n, k, d, 0.6);
        if rng.gen_bool(0.5) {
            let comps = psi.components().iter().map(|c| c.iter().filter(|(e, _)| e.iter().sum::<u32>() > 1).map(|(e, v)| (e.clone(), v.clone())).collect()).collect();
            psi = JetMap::new(n, k, d, comps).unwrap();
        }
        let acted = left_right_act(&random_diff(&mut rng, n, d), &random_diff(&mut rng, k, d), &psi).unwrap();
        prop_assert_eq!(local_algebra(&psi), local_algebra(&acted));
        prop_assert!(contact_invariants_equal(&psi, &acted).unwrap());
    }

    #[test]
    fn trivial_algebra_iff_full_rank_linear_part(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=3);
        let k = rng.gen_range(1..=3);
        let d = rng.gen_range(1..=3);
        let psi = random_jet(&mut rng, n, k, d, 0.3);
        let report = local_algebra(&psi);
        prop_assert_eq!(report.dimension == 0, psi.linear_part().rank() == n);
        prop_assert_eq!(report.hilbert.iter().sum::<usize>(), report.dimension);
        prop_assert!(report.nilpotency_index <= d + 1);
    }
}

#[test]
fn exhaustive_small_linear_parts() {
    // every 0/1 linear map C^n -> C^k for n, k <= 3
    for n in 1..=3 {
        for k in 1..=3 {
            for mask in 0u32..(1 << (n * k)) {
                let rows: Vec<Vec<Rational>> =
                    (0..k).map(|j| (0..n).map(|i| q(((mask >> (j * n + i)) & 1) as i64)).collect()).collect();
                let a = Matrix::from_rows(rows);
                let psi = JetMap::linear(&a, 2);
                assert_eq!(local_algebra(&psi).dimension == 0, a.rank() == n, "n={n} k={k} mask={mask}");
            }
        }
    }
}

#[test]
fn documented_local_algebras() {
    let morse = JetMap::from_terms(1, 1, 3, [(0, vec![2], q(1))]).unwrap();
    let r = local_algebra(&morse);
    assert_eq!((r.dimension, r.nilpotency_index), (1, 2));
    let submersion = JetMap::from_terms(1, 1, 3, [(0, vec![1], q(1))]).unwrap();
    assert_eq!(local_algebra(&submersion).dimension, 0);
    let cube = JetMap::from_terms(1, 1, 3, [(0, vec![3], q(1))]).unwrap();
    assert!(!contact_invariants_equal(&morse, &cube).unwrap());
}

#[test]
fn jet_json_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let psi = random_jet(&mut rng, 2, 3, 3, 0.5);
        let text = serde_json::to_string(&psi).unwrap();
        assert_eq!(serde_json::from_str::<JetMap<Rational>>(&text).unwrap(), psi);
    }
}
