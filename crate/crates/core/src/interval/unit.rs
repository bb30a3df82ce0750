//! Unit-interval realization of claw-free interval graphs.
//!
//! Given a clique path, sorting vertices by (first clique, last clique)
//! gives a proper ordering unless some vertex's clique range strictly
//! contains another's, and such a containment always exhibits a claw. Left
//! endpoints along the proper ordering then solve the difference system
//!
//! ```text
//! x[j] - x[i] <= 1        for adjacent i < j
//! x[j] - x[i] >= 1 + eps  for non-adjacent i < j,   eps = 1 / (n + 1)
//! ```
//!
//! Because neighborhoods are contiguous in a proper ordering, only the
//! farthest left neighbor, the nearest left non-neighbor and monotonicity
//! need explicit constraints: `3n` of them. They are solved as shortest
//! paths with alternating forward and backward relaxation sweeps.

use fixedbitset::FixedBitSet;

use super::recognize::clique_ranges;
use super::{Dimension, IntervalRepresentation, UnitIntervalRepresentation};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Coord;

/// Maximal cliques of an interval representation, in left-to-right order.
pub(crate) fn sweep_clique_path<T: Coord>(rep: &IntervalRepresentation<T>) -> Vec<FixedBitSet> {
    let n = rep.n();
    // (coordinate, is_end, vertex); at equal coordinates starts come first
    let mut events: Vec<(&T, bool, usize)> = Vec::with_capacity(2 * n);
    for (v, iv) in rep.as_slice().iter().enumerate() {
        events.push((&iv.lo, false, v));
        events.push((&iv.hi, true, v));
    }
    events.sort_by(|a, b| {
        a.0.partial_cmp(b.0)
            .expect("coordinates are comparable")
            .then(a.1.cmp(&b.1))
            .then(a.2.cmp(&b.2))
    });

    let mut active = FixedBitSet::with_capacity(n);
    let mut path = Vec::new();
    let mut last_was_start = false;
    for (_, is_end, v) in events {
        if is_end {
            if last_was_start {
                path.push(active.clone());
            }
            active.set(v, false);
        } else {
            active.insert(v);
        }
        last_was_start = !is_end;
    }
    path
}

/// Vertices sorted by clique range, or the claw `[center, a, b, c]` that
/// prevents a proper ordering.
fn proper_ordering(n: usize, path: &[FixedBitSet]) -> Result<Vec<usize>> {
    let ranges = clique_ranges(n, path);
    for v in 0..n {
        for u in 0..n {
            let (fv, lv) = ranges[v];
            let (fu, lu) = ranges[u];
            if fv < fu && lu < lv {
                let mut left = path[fu - 1].clone();
                left.difference_with(&path[fu]);
                let mut right = path[lu + 1].clone();
                right.difference_with(&path[lu]);
                let a = left.minimum().expect("consecutive maximal cliques differ");
                let b = right.minimum().expect("consecutive maximal cliques differ");
                return Err(Error::Claw([v, u, a, b]));
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (ranges[v], v));
    Ok(order)
}

/// Unit intervals realizing `g`, given a clique path of `g`.
///
/// Errors with [`Error::Claw`] when `g` has an induced claw.
pub fn realize_unit_intervals<T: Coord>(
    g: &Graph,
    path: &[FixedBitSet],
) -> Result<UnitIntervalRepresentation<T>> {
    let n = g.n();
    let order = proper_ordering(n, path)?;
    if n == 0 {
        return Ok(UnitIntervalRepresentation::new(Vec::new()));
    }

    // first[j]: position of the farthest left neighbor of order[j] (j if none)
    let first: Vec<usize> = (0..n)
        .map(|j| {
            (0..j)
                .find(|&i| g.has_edge(order[i], order[j]))
                .unwrap_or(j)
        })
        .collect();

    let one = T::one();
    let gap = one.clone() + one.clone() / T::from_index(n + 1);
    let mut x = vec![T::zero(); n];
    let mut settled = false;
    for _ in 0..=n + 1 {
        let mut changed = false;
        for j in 1..n {
            let bound = x[first[j]].clone() + one.clone();
            if bound < x[j] {
                x[j] = bound;
                changed = true;
            }
        }
        for j in (1..n).rev() {
            if x[j] < x[j - 1] {
                x[j - 1] = x[j].clone();
                changed = true;
            }
            if first[j] > 0 {
                let bound = x[j].clone() - gap.clone();
                if bound < x[first[j] - 1] {
                    x[first[j] - 1] = bound;
                    changed = true;
                }
            }
        }
        if !changed {
            settled = true;
            break;
        }
    }
    if !settled {
        return Err(Error::Precondition(
            "unit interval constraints are infeasible for this ordering".into(),
        ));
    }

    let base = x[0].clone();
    let mut lefts = vec![T::zero(); n];
    for (j, &v) in order.iter().enumerate() {
        lefts[v] = x[j].clone() - base.clone();
    }
    let rep = UnitIntervalRepresentation::new(lefts);
    if &rep.graph() != g {
        return Err(Error::Precondition(
            "ordering is not proper; unit realization failed".into(),
        ));
    }
    Ok(rep)
}

/// Replaces one interval dimension whose graph is claw-free by unit
/// intervals with the same intersection graph.
pub fn unitize_claw_free_dimension<T: Coord>(
    rep: &IntervalRepresentation<T>,
) -> Result<UnitIntervalRepresentation<T>> {
    let g = rep.graph();
    let path = sweep_clique_path(rep);
    realize_unit_intervals(&g, &path)
}
