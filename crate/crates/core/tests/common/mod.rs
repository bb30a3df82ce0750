#![allow(dead_code)]

use boxcube::Graph;

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let bits = n * n.saturating_sub(1) / 2;
    (0..1u64 << bits).map(move |mask| Graph::from_edge_mask(n, mask))
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = p.iter().rposition(|&x| x > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Tries every order of left endpoints. With left endpoints sorted, closed
/// intervals realize `g` iff whenever `a < b < c` and `a ~ c`, also `a ~ b`
/// (the interval of `a` reaches past the left end of `b`). For unit
/// intervals right endpoints are sorted the same way, which adds `b ~ c`.
pub fn brute_force_interval(g: &Graph, unit: bool) -> bool {
    let n = g.n();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        let ok = (0..n).all(|i| {
            (i + 1..n).all(|j| {
                (j + 1..n).all(|k| {
                    let (a, b, c) = (p[i], p[j], p[k]);
                    !g.has_edge(a, c) || (g.has_edge(a, b) && (!unit || g.has_edge(b, c)))
                })
            })
        });
        if ok {
            return true;
        }
        if !next_permutation(&mut p) {
            return false;
        }
    }
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// Graphs with up to `max_n` vertices, each pair an edge independently.
pub fn arb_graph(max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for v in 1..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        g.insert_edge(u, v);
                    }
                }
            }
            g
        })
    })
}
