//! Closed-form cubicity bounds, ground truth for complete multipartite
//! graphs, and the tightness sweep over balanced complete k-partite graphs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{make_family, part_labels, Family};
use crate::graph::Graph;
use crate::interval::{BoxRepresentation, IntervalRepresentation};
use crate::invariants::{diameter, exact_independence_number};
use crate::pipeline::{
    construct_cube_representation, AlphaSource, BoxSource, ColoringSource, ConstructOptions,
};
use crate::scalar::{ceil_log2, Coord};
use crate::Rational;

/// `2⌈log χ⌉·b + χ·⌈log α⌉`.
pub fn theorem_upper_bound(chi: usize, alpha: usize, b: usize) -> usize {
    2 * ceil_log2(chi) * b + chi * ceil_log2(alpha)
}

/// `b·⌈log α⌉`.
pub fn adiga_upper_bound(alpha: usize, b: usize) -> usize {
    b * ceil_log2(alpha)
}

/// Smallest `k` with `base^k ≥ target`, by integer powering.
fn ceil_log_base(target: usize, base: usize) -> usize {
    if target <= 1 {
        return 0;
    }
    assert!(base >= 2, "no power of {base} reaches {target}");
    let mut k = 0;
    let mut power: u128 = 1;
    while power < target as u128 {
        power *= base as u128;
        k += 1;
    }
    k
}

/// Volume lower bound `⌈log_{d+1} α⌉` on cubicity; for disconnected graphs
/// the maximum over components.
pub fn volume_lower_bound(g: &Graph) -> usize {
    g.components()
        .iter()
        .map(|comp| {
            let h = g.induced_subgraph(comp);
            let alpha = exact_independence_number(&h);
            let d = diameter(&h).value;
            ceil_log_base(alpha, d + 1)
        })
        .max()
        .unwrap_or(0)
}

/// `(box, cub) = (p, Σ⌈log n_i⌉)` for the complete p-partite graph, `p ≥ 2`.
///
/// A part of size 1 is a universal vertex and does not raise the boxicity,
/// so `box` counts only the parts with at least two vertices.
pub fn multipartite_ground_truth(parts: &[usize]) -> Result<(usize, usize)> {
    if parts.len() < 2 {
        return Err(Error::Argument(
            "closed form needs at least two parts".into(),
        ));
    }
    if parts.contains(&0) {
        return Err(Error::Argument("part sizes must be positive".into()));
    }
    let boxicity = parts.iter().filter(|&&s| s >= 2).count();
    Ok((boxicity, parts.iter().map(|&s| ceil_log2(s)).sum()))
}

/// A `p`-dimensional box representation of the complete multipartite graph
/// with the given part sizes (all at least 2).
///
/// In dimension `i`, the `t`-th vertex of part `i` gets `[2t, 2t]` and all
/// other vertices get `[0, 2(|part i| - 1)]`.
pub fn optimal_box_representation_multipartite<T: Coord>(
    parts: &[usize],
) -> Result<BoxRepresentation<T>> {
    if parts.len() < 2 {
        return Err(Error::Argument("need at least two parts".into()));
    }
    if let Some(i) = parts.iter().position(|&s| s < 2) {
        return Err(Error::Argument(format!(
            "part {i} has size {}; boxicity drops below the part count, use the oracle",
            parts[i]
        )));
    }
    let label = part_labels(parts);
    let dims = (0..parts.len())
        .map(|i| {
            let span = T::from_index(2 * (parts[i] - 1));
            let mut rank = 0;
            IntervalRepresentation::from_bounds(label.iter().map(|&l| {
                if l == i {
                    let x = T::from_index(2 * rank);
                    rank += 1;
                    (x.clone(), x)
                } else {
                    (T::zero(), span.clone())
                }
            }))
            .expect("intervals are ordered")
        })
        .collect();
    BoxRepresentation::new(label.len(), dims)
}

pub const TIGHTNESS_CSV_HEADER: &str = "k,n,cub_closed_form,pipeline_dims,theorem_bound,ratio";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TightnessReport {
    pub k: usize,
    pub n: usize,
    pub cub_closed_form: usize,
    pub pipeline_dims: usize,
    pub theorem_bound: usize,
    pub ratio: f64,
    pub verified: bool,
}

impl TightnessReport {
    /// One row under [`TIGHTNESS_CSV_HEADER`]; the ratio has six decimals.
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{:.6}",
            self.k,
            self.n,
            self.cub_closed_form,
            self.pipeline_dims,
            self.theorem_bound,
            self.ratio
        )
    }
}

/// Runs the construction on the complete k-partite graph with `n / k`
/// vertices per part, using the optimal box representation, exact coloring
/// and `α = n / k`.
pub fn tightness_experiment(k: usize, n: usize) -> Result<TightnessReport> {
    if k < 2 {
        return Err(Error::Argument("k must be at least 2".into()));
    }
    if !n.is_multiple_of(k) {
        return Err(Error::Argument(format!(
            "n = {n} is not a multiple of k = {k}"
        )));
    }
    let part = n / k;
    if part < 2 {
        return Err(Error::Argument("parts need at least two vertices".into()));
    }
    let parts = vec![part; k];
    let g = make_family(&Family::CompleteMultipartite(parts.clone()))?;
    let (_, cub) = multipartite_ground_truth(&parts)?;
    let options = ConstructOptions::<Rational> {
        coloring: ColoringSource::Exact,
        box_rep: BoxSource::Given(optimal_box_representation_multipartite(&parts)?),
        alpha: AlphaSource::Given(part),
        ..Default::default()
    };
    let (_, report) = construct_cube_representation(&g, &options)?;
    Ok(TightnessReport {
        k,
        n,
        cub_closed_form: cub,
        pipeline_dims: report.total_dims,
        theorem_bound: report.theorem_bound,
        ratio: report.theorem_bound as f64 / cub as f64,
        verified: report.verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::verify_representation;

    #[test]
    fn theorem_bound_values() {
        for alpha in 1..20 {
            for b in 0..5 {
                assert_eq!(theorem_upper_bound(2, alpha, b), 2 * (b + ceil_log2(alpha)));
            }
        }
        assert_eq!(theorem_upper_bound(1, 1, 0), 0);
        assert_eq!(theorem_upper_bound(4, 8, 3), 24);
    }

    #[test]
    fn adiga_values() {
        for b in 0..5 {
            assert_eq!(adiga_upper_bound(2, b), b);
            assert_eq!(adiga_upper_bound(1, b), 0);
        }
        // tight on complete b-partite graphs with α = 2^b per part
        for b in 2..5 {
            let alpha = 1 << b;
            let (bx, cub) = multipartite_ground_truth(&vec![alpha; b]).unwrap();
            assert_eq!(adiga_upper_bound(alpha, bx), cub);
        }
    }

    #[test]
    fn volume_examples() {
        let star = make_family(&Family::Star(8)).unwrap();
        assert_eq!(volume_lower_bound(&star), 2);
        assert_eq!(volume_lower_bound(&Graph::complete(5)), 0);
        let glued = make_family(&Family::PathStarGlue(4)).unwrap();
        assert_eq!(volume_lower_bound(&glued), 1);
        // edgeless: every component is a single vertex
        assert_eq!(volume_lower_bound(&Graph::new(6)), 0);
        // two stars side by side: max of the parts
        let mut two = Graph::new(9);
        for v in 1..=4 {
            two.insert_edge(0, v);
        }
        for v in 6..=8 {
            two.insert_edge(5, v);
        }
        assert_eq!(volume_lower_bound(&two), 2);
    }

    #[test]
    fn integer_log() {
        assert_eq!(ceil_log_base(8, 3), 2);
        assert_eq!(ceil_log_base(9, 3), 2);
        assert_eq!(ceil_log_base(10, 3), 3);
        assert_eq!(ceil_log_base(1, 1), 0);
    }

    #[test]
    fn multipartite_closed_forms() {
        assert_eq!(multipartite_ground_truth(&[4, 4]).unwrap(), (2, 4));
        assert_eq!(multipartite_ground_truth(&[2, 2]).unwrap(), (2, 2));
        assert_eq!(multipartite_ground_truth(&[5, 5, 5]).unwrap(), (3, 9));
        assert!(multipartite_ground_truth(&[4]).is_err());
        // stars and universal vertices
        assert_eq!(multipartite_ground_truth(&[1, 8]).unwrap(), (1, 3));
        assert_eq!(multipartite_ground_truth(&[1, 1]).unwrap(), (0, 0));
        assert_eq!(multipartite_ground_truth(&[1, 2, 2]).unwrap(), (2, 2));
    }

    #[test]
    fn optimal_box_representations_verify() {
        for parts in [vec![2, 2], vec![4, 4], vec![3, 3, 3], vec![2, 5, 3]] {
            let g = make_family(&Family::CompleteMultipartite(parts.clone())).unwrap();
            let rep = optimal_box_representation_multipartite::<Rational>(&parts).unwrap();
            assert_eq!(rep.dimension_count(), parts.len());
            assert!(
                verify_representation(&rep, &g).unwrap().is_equal(),
                "{parts:?}"
            );
        }
        assert!(optimal_box_representation_multipartite::<Rational>(&[1, 3]).is_err());
        assert!(optimal_box_representation_multipartite::<Rational>(&[3]).is_err());
    }

    #[test]
    fn tightness_small() {
        let r = tightness_experiment(2, 8).unwrap();
        assert_eq!(
            (r.cub_closed_form, r.pipeline_dims, r.theorem_bound),
            (4, 8, 8)
        );
        assert_eq!(r.ratio, 2.0);
        assert!(r.verified);
        assert_eq!(r.csv_row(), "2,8,4,8,8,2.000000");
        assert!(tightness_experiment(3, 10).is_err());
        assert!(tightness_experiment(1, 10).is_err());
    }

    #[test]
    fn tightness_three_parts() {
        let r = tightness_experiment(3, 12).unwrap();
        // cub = 3·2, bound = 2·3·2 + 3·2
        assert_eq!((r.cub_closed_form, r.theorem_bound), (6, 18));
        assert_eq!(r.pipeline_dims, 18);
        assert!(r.verified);
    }
}
