//! Named graph families and seeded random generators.
//!
//! Vertex numbering is fixed:
//! - `Star(n)`: center 0, leaves `1..=n`.
//! - `CompleteMultipartite(sizes)`: parts numbered consecutively, part 0
//!   first.
//! - `PathStarGlue(n)`: the star on `n + 1` vertices as above; its leaf `n`
//!   is the first vertex of a path on `2n + 1` vertices that continues
//!   `n, n+1, ..., 3n`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Star(usize),
    CompleteMultipartite(Vec<usize>),
    PathStarGlue(usize),
    Complete(usize),
    Edgeless(usize),
}

pub fn make_family(family: &Family) -> Result<Graph> {
    match *family {
        Family::Star(n) => {
            if n == 0 {
                return Err(Error::Argument("star needs at least one leaf".into()));
            }
            Ok(Graph::from_edges(n + 1, (1..=n).map(|v| (0, v)))?)
        }
        Family::CompleteMultipartite(ref sizes) => complete_multipartite(sizes),
        Family::PathStarGlue(n) => {
            if n == 0 {
                return Err(Error::Argument("path-star glue needs n >= 1".into()));
            }
            let mut g = Graph::new(3 * n + 1);
            for v in 1..=n {
                g.insert_edge(0, v);
            }
            for v in n..3 * n {
                g.insert_edge(v, v + 1);
            }
            Ok(g)
        }
        Family::Complete(n) => Ok(Graph::complete(n)),
        Family::Edgeless(n) => Ok(Graph::new(n)),
    }
}

fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::Argument(format!(
            "part sizes must be positive, got {sizes:?}"
        )));
    }
    let part = part_labels(sizes);
    let mut g = Graph::new(part.len());
    for u in 0..part.len() {
        for v in u + 1..part.len() {
            if part[u] != part[v] {
                g.insert_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Part index of each vertex of `CompleteMultipartite(sizes)`.
pub fn part_labels(sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect()
}

/// G(n, p): each pair independently an edge with probability `p`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.insert_edge(u, v);
            }
        }
    }
    g
}

/// Random bipartite graph: each vertex picks a side uniformly, each cross
/// pair is an edge with probability `p`.
pub fn random_bipartite<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut g = Graph::new(n);
    for v in 1..n {
        for u in 0..v {
            if side[u] != side[v] && rng.gen_bool(p) {
                g.insert_edge(u, v);
            }
        }
    }
    g
}

/// Random co-bipartite graph: two cliques (sides picked uniformly) with
/// each cross pair an edge with probability `p`.
pub fn random_cobipartite<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut g = Graph::new(n);
    for v in 1..n {
        for u in 0..v {
            if side[u] == side[v] || rng.gen_bool(p) {
                g.insert_edge(u, v);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{chromatic_number, diameter, exact_independence_number};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn family_shapes() {
        let k44 = make_family(&Family::CompleteMultipartite(vec![4, 4])).unwrap();
        assert_eq!((k44.n(), k44.edge_count()), (8, 16));
        let star = make_family(&Family::Star(8)).unwrap();
        assert_eq!((star.n(), star.edge_count()), (9, 8));
        let glued = make_family(&Family::PathStarGlue(4)).unwrap();
        assert_eq!((glued.n(), glued.edge_count()), (13, 12));
        assert!(glued.is_connected());
    }

    #[test]
    fn family_errors() {
        assert!(make_family(&Family::CompleteMultipartite(vec![2, 0])).is_err());
        assert!(make_family(&Family::CompleteMultipartite(vec![])).is_err());
        assert!(make_family(&Family::PathStarGlue(0)).is_err());
        assert!(make_family(&Family::Star(0)).is_err());
    }

    #[test]
    fn closed_form_invariants() {
        for n in 1..=8 {
            let star = make_family(&Family::Star(n)).unwrap();
            assert_eq!(exact_independence_number(&star), n);
        }
        for sizes in [vec![2, 3], vec![1, 1, 1], vec![3, 3, 3], vec![1, 4, 2, 2]] {
            let p = sizes.len();
            let g = make_family(&Family::CompleteMultipartite(sizes)).unwrap();
            assert_eq!(chromatic_number(&g), p);
        }
        for n in 1..=6 {
            let g = make_family(&Family::PathStarGlue(n)).unwrap();
            assert_eq!(exact_independence_number(&g), 2 * n);
            // with a single leaf the star adds one edge, not two
            let expected = if n == 1 { 3 } else { 2 * n + 2 };
            assert_eq!(diameter(&g).value, expected);
        }
    }

    #[test]
    fn random_generators_respect_structure() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let b = random_bipartite(7, 0.6, &mut rng);
            assert!(b.two_coloring().is_some());
            let c = random_cobipartite(7, 0.4, &mut rng);
            assert!(c.complement().two_coloring().is_some());
            assert!(exact_independence_number(&c) <= 2);
        }
        let a = random_graph(10, 0.5, &mut ChaCha8Rng::seed_from_u64(9));
        let b = random_graph(10, 0.5, &mut ChaCha8Rng::seed_from_u64(9));
        assert_eq!(a, b);
    }
}
