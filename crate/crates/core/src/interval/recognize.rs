//! Interval and unit-interval recognition.
//!
//! A graph is interval iff its maximal cliques admit a linear order in which
//! the cliques containing any given vertex are consecutive. Non-chordal
//! graphs are rejected up front; chordal graphs have at most `n` maximal
//! cliques, read off a perfect elimination ordering, and the order search
//! is a depth-first search over (placed cliques, last clique) states with
//! failed states memoized.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::unit::realize_unit_intervals;
use super::{Dimension, IntervalRepresentation, UnitIntervalRepresentation};
use crate::graph::Graph;
use crate::scalar::Coord;

/// Maximum cardinality search; returns the visit order.
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for u in g.neighbors(v).ones() {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    order
}

/// Maximal cliques of a chordal graph, or `None` if `g` is not chordal.
fn chordal_maximal_cliques(g: &Graph) -> Option<Vec<FixedBitSet>> {
    let n = g.n();
    // the reverse of an MCS order is a perfect elimination ordering iff g
    // is chordal
    let mut peo = mcs_order(g);
    peo.reverse();
    let mut pos = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }

    let mut candidates = Vec::with_capacity(n);
    for &v in &peo {
        let mut later = FixedBitSet::with_capacity(n);
        for u in g.neighbors(v).ones() {
            if pos[u] > pos[v] {
                later.insert(u);
            }
        }
        // the earliest later neighbor must see all the others
        if let Some(w) = later.ones().min_by_key(|&u| pos[u]) {
            let mut rest = later.clone();
            rest.set(w, false);
            if !rest.is_subset(g.neighbors(w)) {
                return None;
            }
        }
        later.insert(v);
        candidates.push(later);
    }

    let mut cliques: Vec<FixedBitSet> = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(j, d)| j != i && c.is_subset(d) && (c != d || j < i));
        if !dominated {
            cliques.push(c.clone());
        }
    }
    cliques.sort_by_key(|c| c.minimum());
    Some(cliques)
}

struct ArrangementSearch<'a> {
    cliques: &'a [FixedBitSet],
    // cliques_of[v]: indices of cliques containing v
    cliques_of: Vec<FixedBitSet>,
    failed: HashSet<(FixedBitSet, usize)>,
}

impl ArrangementSearch<'_> {
    fn extend(
        &mut self,
        order: &mut Vec<usize>,
        placed: &mut FixedBitSet,
        seen: &FixedBitSet,
    ) -> bool {
        let m = self.cliques.len();
        if order.len() == m {
            return true;
        }
        let last = *order.last().expect("search starts from a placed clique");
        if self.failed.contains(&(placed.clone(), last)) {
            return false;
        }
        // vertices of `last` that the next clique drops are closed for good,
        // so all their cliques must already be placed
        for c in 0..m {
            if placed.contains(c) {
                continue;
            }
            let next = &self.cliques[c];
            let mut reopened = next.clone();
            reopened.intersect_with(seen);
            if !reopened.is_subset(&self.cliques[last]) {
                continue;
            }
            let mut closing = self.cliques[last].clone();
            closing.difference_with(next);
            if closing
                .ones()
                .any(|v| !self.cliques_of[v].is_subset(placed))
            {
                continue;
            }
            let mut seen_next = seen.clone();
            seen_next.union_with(next);
            placed.insert(c);
            order.push(c);
            if self.extend(order, placed, &seen_next) {
                return true;
            }
            order.pop();
            placed.set(c, false);
        }
        self.failed.insert((placed.clone(), last));
        false
    }
}

/// Maximal cliques of `g` in an order where each vertex's cliques are
/// consecutive (a clique path), or `None` if `g` is not an interval graph.
/// Disconnected graphs are fine: their components' paths are concatenated.
pub fn clique_path(g: &Graph) -> Option<Vec<FixedBitSet>> {
    if g.n() == 0 {
        return Some(Vec::new());
    }
    let cliques = chordal_maximal_cliques(g)?;
    let m = cliques.len();
    let mut search = ArrangementSearch {
        cliques: &cliques,
        cliques_of: (0..g.n())
            .map(|v| {
                let mut s = FixedBitSet::with_capacity(m);
                s.extend((0..m).filter(|&c| cliques[c].contains(v)));
                s
            })
            .collect(),
        failed: HashSet::new(),
    };
    for start in 0..m {
        let mut order = vec![start];
        let mut placed = FixedBitSet::with_capacity(m);
        placed.insert(start);
        if search.extend(&mut order, &mut placed, &cliques[start]) {
            return Some(order.into_iter().map(|c| cliques[c].clone()).collect());
        }
    }
    None
}

/// First and last clique-path position of each vertex.
pub(crate) fn clique_ranges(n: usize, path: &[FixedBitSet]) -> Vec<(usize, usize)> {
    let mut ranges = vec![(usize::MAX, 0); n];
    for (i, c) in path.iter().enumerate() {
        for v in c.ones() {
            let r = &mut ranges[v];
            r.0 = r.0.min(i);
            r.1 = i;
        }
    }
    ranges
}

/// An interval representation of `g` with integer endpoints, or `None` if
/// `g` is not an interval graph.
pub fn find_interval_representation<T: Coord>(g: &Graph) -> Option<IntervalRepresentation<T>> {
    let path = clique_path(g)?;
    let rep = IntervalRepresentation::from_bounds(
        clique_ranges(g.n(), &path)
            .into_iter()
            .map(|(a, b)| (T::from_index(a), T::from_index(b))),
    )
    .expect("clique ranges are ordered");
    debug_assert_eq!(&rep.graph(), g);
    Some(rep)
}

/// A unit-interval representation of `g`, or `None` if `g` is not a unit
/// interval graph (not interval, or interval with an induced claw).
pub fn find_unit_interval_representation<T: Coord>(
    g: &Graph,
) -> Option<UnitIntervalRepresentation<T>> {
    let path = clique_path(g)?;
    let rep = realize_unit_intervals(g, &path).ok()?;
    Some(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_family, Family};
    use crate::Rational;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn interval_examples() {
        let star = make_family(&Family::Star(5)).unwrap();
        let rep = find_interval_representation::<Rational>(&star).unwrap();
        assert_eq!(rep.graph(), star);
        assert!(find_interval_representation::<Rational>(&cycle(4)).is_none());
        let p5 = path(5);
        assert_eq!(
            find_interval_representation::<Rational>(&p5)
                .unwrap()
                .graph(),
            p5
        );
        assert!(find_interval_representation::<Rational>(&Graph::new(0)).is_some());
    }

    #[test]
    fn asteroidal_triple_is_rejected() {
        // chordal but not interval: subdivided claw
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert!(chordal_maximal_cliques(&g).is_some());
        assert!(find_interval_representation::<Rational>(&g).is_none());
    }

    #[test]
    fn unit_examples() {
        let claw = make_family(&Family::Star(3)).unwrap();
        assert!(find_interval_representation::<Rational>(&claw).is_some());
        assert!(find_unit_interval_representation::<Rational>(&claw).is_none());
        let k5 = Graph::complete(5);
        let rep = find_unit_interval_representation::<Rational>(&k5).unwrap();
        assert!(rep.lefts().iter().all(|l| *l == Rational::from_integer(0)));
        let p6 = path(6);
        assert_eq!(
            find_unit_interval_representation::<Rational>(&p6)
                .unwrap()
                .graph(),
            p6
        );
    }

    #[test]
    fn disconnected_interval_graph() {
        let g = Graph::from_edges(6, [(0, 1), (2, 3), (3, 4)]).unwrap();
        let rep = find_interval_representation::<Rational>(&g).unwrap();
        assert_eq!(rep.graph(), g);
        let u = find_unit_interval_representation::<Rational>(&g).unwrap();
        assert_eq!(u.graph(), g);
    }

    #[test]
    fn path_star_glue_is_interval() {
        let g = make_family(&Family::PathStarGlue(4)).unwrap();
        assert_eq!(
            find_interval_representation::<Rational>(&g)
                .unwrap()
                .graph(),
            g
        );
    }
}
