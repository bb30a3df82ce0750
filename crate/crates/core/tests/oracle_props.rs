mod common;

use boxcube::bounds::multipartite_ground_truth;
use boxcube::families::random_graph;
use boxcube::invariants::chromatic_number;
use boxcube::{
    adiga_upper_bound, ceil_log2, exact_boxicity, exact_cubicity, exact_independence_number,
    make_family, theorem_upper_bound, verify_representation, volume_lower_bound, Family, Graph,
    Rational,
};
use common::{arb_graph, cycle};
use proptest::prelude::*;

fn bx(g: &Graph) -> usize {
    let (b, rep) = exact_boxicity::<Rational>(g, 7).unwrap();
    assert!(verify_representation(&rep, g).unwrap().is_equal());
    b
}

fn cub(g: &Graph) -> usize {
    let (k, rep) = exact_cubicity::<Rational>(g, 7).unwrap();
    assert!(verify_representation(&rep, g).unwrap().is_equal());
    k
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn sandwich(g in arb_graph(7)) {
        let (b, k) = (bx(&g), cub(&g));
        let alpha = exact_independence_number(&g);
        prop_assert!(b <= k);
        prop_assert!(b.max(volume_lower_bound(&g)) <= k);
        prop_assert!(k <= adiga_upper_bound(alpha, b));
        prop_assert!(k <= theorem_upper_bound(chromatic_number(&g), alpha, b));
        prop_assert_eq!(b == 0, g.is_complete());
    }

    #[test]
    fn induced_subgraphs_do_not_grow(g in arb_graph(7), keep in any::<u8>()) {
        let vertices: Vec<usize> = (0..g.n()).filter(|&v| keep >> v & 1 == 1).collect();
        prop_assume!(!vertices.is_empty());
        let h = g.induced_subgraph(&vertices);
        prop_assert!(bx(&h) <= bx(&g));
        prop_assert!(cub(&h) <= cub(&g));
    }
}

#[test]
fn multipartite_closed_forms() {
    for parts in [
        vec![2, 2],
        vec![2, 3],
        vec![3, 3],
        vec![2, 4],
        vec![3, 4],
        vec![2, 2, 2],
        vec![2, 2, 3],
    ] {
        let g = make_family(&Family::CompleteMultipartite(parts.clone())).unwrap();
        assert_eq!(
            (bx(&g), cub(&g)),
            multipartite_ground_truth(&parts).unwrap(),
            "{parts:?}"
        );
    }
}

#[test]
fn cycles() {
    // interval only up to the triangle
    assert_eq!(bx(&cycle(3)), 0);
    for n in 4..=7 {
        assert_eq!(bx(&cycle(n)), 2, "C{n}");
    }
    assert_eq!(cub(&cycle(4)), 2);
}

#[test]
fn disconnected_graphs() {
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(5);
    for _ in 0..30 {
        let g = random_graph(7, 0.2, &mut rng);
        let k = cub(&g);
        assert!(volume_lower_bound(&g) <= k);
        assert!(k <= bx(&g) * ceil_log2(exact_independence_number(&g)) || g.is_complete());
    }
}
