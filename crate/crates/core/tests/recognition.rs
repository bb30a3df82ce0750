mod common;

use boxcube::interval::{dimension_graph, IntervalRepresentation, UnitIntervalRepresentation};
use boxcube::{find_interval_representation, find_unit_interval_representation, Rational};
use common::{all_graphs, arb_graph, brute_force_interval};
use proptest::prelude::*;

fn random_intervals() -> impl Strategy<Value = Vec<(i64, i64)>> {
    proptest::collection::vec((0i64..40, 0i64..12), 1..30)
        .prop_map(|v| v.into_iter().map(|(lo, len)| (lo, lo + len)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn witnesses_are_exact(g in arb_graph(14)) {
        if let Some(rep) = find_interval_representation::<Rational>(&g) {
            prop_assert_eq!(dimension_graph(&rep), g.clone());
        }
        if let Some(rep) = find_unit_interval_representation::<Rational>(&g) {
            prop_assert_eq!(dimension_graph(&rep), g.clone());
            prop_assert!(find_interval_representation::<Rational>(&g).is_some());
            prop_assert!(g.find_claw().is_none());
        }
    }

    // intersection graphs of arbitrary intervals must be accepted
    #[test]
    fn interval_graphs_are_recognized(bounds in random_intervals()) {
        let rep = IntervalRepresentation::<Rational>::from_bounds(
            bounds.iter().map(|&(a, b)| (Rational::from(a), Rational::from(b))),
        ).unwrap();
        let g = dimension_graph(&rep);
        let found = find_interval_representation::<Rational>(&g);
        prop_assert!(found.is_some());
        prop_assert_eq!(dimension_graph(&found.unwrap()), g);
    }

    #[test]
    fn unit_graphs_are_recognized(lefts in proptest::collection::vec((0i64..60, 1i64..4), 1..30)) {
        let rep = UnitIntervalRepresentation::<Rational>::new(
            lefts.iter().map(|&(a, d)| Rational::new(a, d)).collect(),
        );
        let g = dimension_graph(&rep);
        let found = find_unit_interval_representation::<Rational>(&g);
        prop_assert!(found.is_some());
        prop_assert_eq!(dimension_graph(&found.unwrap()), g);
    }
}

#[test]
fn claw_free_interval_graphs_are_unit() {
    for n in 1..=7 {
        for g in all_graphs(n) {
            let interval = find_interval_representation::<Rational>(&g).is_some();
            let unit = find_unit_interval_representation::<Rational>(&g).is_some();
            assert_eq!(unit, interval && g.find_claw().is_none(), "{g:?}");
        }
    }
}

#[test]
fn seven_vertex_sample_matches_brute_force() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
    for _ in 0..3000 {
        let p = rng.gen_range(0.3..0.9);
        let g = boxcube::families::random_graph(7, p, &mut rng);
        assert_eq!(
            find_interval_representation::<Rational>(&g).is_some(),
            brute_force_interval(&g, false)
        );
        assert_eq!(
            find_unit_interval_representation::<Rational>(&g).is_some(),
            brute_force_interval(&g, true)
        );
    }
}
