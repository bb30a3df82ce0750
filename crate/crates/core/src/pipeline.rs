//! Constructive cube representation from a box representation and a proper
//! coloring.
//!
//! With `b` box dimensions and colors `0..χ`:
//!
//! 1. For each of the `⌈log χ⌉` bits, vertices whose color has that bit set
//!    form side A, the rest side B. Making both sides cliques gives a
//!    co-bipartite supergraph H.
//! 2. Every box dimension is split into two "ray-extended" dimensions whose
//!    intersection is exactly H on that axis; their graphs are co-bipartite
//!    and hence claw-free, so each becomes a unit-interval dimension.
//! 3. Each color class C with `|C| ≥ 2` contributes `⌈log |C|⌉` gadget
//!    dimensions separating its members by the bits of their rank in C.
//!
//! Every dimension contains all edges of the input. Non-edges inside a class
//! are broken by a gadget; non-edges across classes are broken in the U
//! dimensions of a bit where the two colors differ.
//!
//! Output order: U dimensions by bit, box dimension, then (first, second)
//! ray extension; then gadgets by class and bit.

use serde::{Deserialize, Serialize};

use crate::bounds::theorem_upper_bound;
use crate::error::{Error, Result};
use crate::graph::{Graph, ProperColoring};
use crate::interval::{
    unitize_claw_free_dimension, verify_representation, BoxRepresentation, CubeRepresentation,
    Interval, IntervalRepresentation, UnitIntervalRepresentation,
};
use crate::invariants::{exact_chromatic_coloring, exact_independence_number, greedy_coloring};
use crate::oracle::{known_boxicity, DEFAULT_ORACLE_LIMIT};
use crate::scalar::{ceil_log2, Coord};

/// A split of the vertex set into sides A and B.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    in_a: Vec<bool>,
}

impl Bipartition {
    /// `a_side` lists the A vertices; everything else in `0..n` is B.
    pub fn new(n: usize, a_side: &[usize]) -> Result<Self> {
        let mut in_a = vec![false; n];
        for &v in a_side {
            if v >= n || std::mem::replace(&mut in_a[v], true) {
                return Err(Error::Argument(format!(
                    "bad or repeated vertex {v} in side A"
                )));
            }
        }
        Ok(Bipartition { in_a })
    }

    pub fn from_sides(in_a: Vec<bool>) -> Self {
        Bipartition { in_a }
    }

    pub fn n(&self) -> usize {
        self.in_a.len()
    }

    #[inline]
    pub fn in_a(&self, v: usize) -> bool {
        self.in_a[v]
    }

    pub fn a_side(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.in_a[v]).collect()
    }

    pub fn b_side(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| !self.in_a[v]).collect()
    }

    #[inline]
    fn same_side(&self, u: usize, v: usize) -> bool {
        self.in_a[u] == self.in_a[v]
    }
}

/// One bipartition per bit of the color index, least significant bit first.
pub fn binary_bipartitions(coloring: &ProperColoring) -> Vec<Bipartition> {
    let bits = if coloring.chi_used() == 0 {
        0
    } else {
        ceil_log2(coloring.chi_used())
    };
    (0..bits)
        .map(|bit| {
            Bipartition::from_sides(
                coloring
                    .colors()
                    .iter()
                    .map(|&c| c >> bit & 1 == 1)
                    .collect(),
            )
        })
        .collect()
}

/// `g` plus all pairs inside A and all pairs inside B.
pub fn cobipartite_augment(g: &Graph, p: &Bipartition) -> Graph {
    assert_eq!(g.n(), p.n(), "bipartition does not match the graph");
    let mut h = g.clone();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if p.same_side(u, v) {
                h.insert_edge(u, v);
            }
        }
    }
    h
}

/// Splits each dimension of a verified box representation of `g` into two
/// dimensions whose intersection is `cobipartite_augment(g, p)` on that axis.
///
/// With the dimension's span `[m, M]`: the first copy extends A intervals to
/// `M + 1` and B intervals down to `m - 1`; the second does the opposite.
pub fn cobipartize_box_representation<T: Coord>(
    g: &Graph,
    rep: &BoxRepresentation<T>,
    p: &Bipartition,
) -> Result<Vec<IntervalRepresentation<T>>> {
    if p.n() != g.n() {
        return Err(Error::Argument(
            "bipartition does not match the graph".into(),
        ));
    }
    if rep.dimension_count() == 0 {
        return Err(Error::Argument(
            "box representation has no dimensions".into(),
        ));
    }
    if !verify_representation(rep, g)?.is_equal() {
        return Err(Error::Argument(
            "box representation does not represent the graph".into(),
        ));
    }
    let mut out = Vec::with_capacity(2 * rep.dimension_count());
    for dim in rep.dims() {
        let (m, mx) = dim.span().expect("non-empty dimension");
        let low = m - T::one();
        let high = mx + T::one();
        let extend = |a_up: bool| {
            let ivs = dim
                .as_slice()
                .iter()
                .enumerate()
                .map(|(v, iv)| {
                    if p.in_a(v) == a_up {
                        Interval {
                            lo: iv.lo.clone(),
                            hi: high.clone(),
                        }
                    } else {
                        Interval {
                            lo: low.clone(),
                            hi: iv.hi.clone(),
                        }
                    }
                })
                .collect();
            IntervalRepresentation::new(ivs).expect("extended intervals stay ordered")
        };
        out.push(extend(true));
        out.push(extend(false));
    }
    Ok(out)
}

/// Gadget dimensions per color class: class `i` gets `⌈log |C_i|⌉` of them.
///
/// Members of `C_i` are ranked `0..|C_i|` by vertex id. In gadget `j`
/// (bit `j`, least significant first) a member sits at `[0, 1]` if bit `j` of
/// its rank is set and at `[2, 3]` otherwise; every other vertex sits at
/// `[1, 2]`.
pub fn color_class_unit_graphs<T: Coord>(
    coloring: &ProperColoring,
) -> Vec<Vec<UnitIntervalRepresentation<T>>> {
    let n = coloring.n();
    coloring
        .classes()
        .iter()
        .map(|class| {
            let t = ceil_log2(class.len());
            (0..t)
                .map(|bit| {
                    let mut lefts = vec![T::one(); n];
                    for (rank, &u) in class.iter().enumerate() {
                        lefts[u] = if rank >> bit & 1 == 1 {
                            T::zero()
                        } else {
                            T::from_index(2)
                        };
                    }
                    UnitIntervalRepresentation::new(lefts)
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringSource {
    Exact,
    /// Largest degree first, ties by vertex id.
    Greedy,
    Given(ProperColoring),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoxSource<T> {
    /// Complete → 0, interval → 1, otherwise the exact oracle.
    Oracle,
    Given(BoxRepresentation<T>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphaSource {
    Exact,
    Given(usize),
}

#[derive(Clone, Debug)]
pub struct ConstructOptions<T> {
    pub coloring: ColoringSource,
    pub box_rep: BoxSource<T>,
    pub alpha: AlphaSource,
    pub oracle_limit: usize,
}

impl<T> Default for ConstructOptions<T> {
    fn default() -> Self {
        ConstructOptions {
            coloring: ColoringSource::Exact,
            box_rep: BoxSource::Oracle,
            alpha: AlphaSource::Exact,
            oracle_limit: DEFAULT_ORACLE_LIMIT,
        }
    }
}

/// Where the bound's parameters came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parameters {
    /// Exact χ, α and box computed here.
    Exact,
    /// Greedy coloring: `chi_used` stands in for χ.
    Heuristic,
    /// Some parameter was supplied by the caller.
    Supplied,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub b_used: usize,
    pub chi_used: usize,
    pub class_sizes: Vec<usize>,
    pub u_dims: usize,
    pub w_dims: usize,
    pub total_dims: usize,
    pub alpha: usize,
    pub theorem_bound: usize,
    pub parameters: Parameters,
    pub verified: bool,
}

impl ConstructionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Builds a cube representation of `g` and reports the dimension
/// accounting. The result is always checked against `g`; a failed check
/// shows up as `verified: false`, not as an error.
pub fn construct_cube_representation<T: Coord>(
    g: &Graph,
    options: &ConstructOptions<T>,
) -> Result<(CubeRepresentation<T>, ConstructionReport)> {
    let n = g.n();
    let mut parameters = Parameters::Exact;

    let coloring = match &options.coloring {
        ColoringSource::Exact => exact_chromatic_coloring(g),
        ColoringSource::Greedy => {
            parameters = Parameters::Heuristic;
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
            greedy_coloring(g, &order)?
        }
        ColoringSource::Given(c) => {
            if !c.is_proper_for(g) {
                return Err(Error::Argument(
                    "supplied coloring is not proper for the graph".into(),
                ));
            }
            parameters = Parameters::Supplied;
            c.clone()
        }
    };

    let box_rep = match &options.box_rep {
        BoxSource::Oracle => known_boxicity(g, options.oracle_limit)?.1,
        BoxSource::Given(rep) => {
            if !verify_representation(rep, g)?.is_equal() {
                return Err(Error::Argument(
                    "supplied box representation does not represent the graph".into(),
                ));
            }
            if parameters == Parameters::Exact {
                parameters = Parameters::Supplied;
            }
            rep.clone()
        }
    };

    let alpha = match options.alpha {
        AlphaSource::Exact => exact_independence_number(g),
        AlphaSource::Given(a) => {
            if parameters == Parameters::Exact {
                parameters = Parameters::Supplied;
            }
            a
        }
    };

    let b = box_rep.dimension_count();
    let chi = coloring.chi_used();
    let class_sizes: Vec<usize> = coloring.classes().iter().map(Vec::len).collect();

    let mut dims: Vec<UnitIntervalRepresentation<T>> = Vec::new();
    let (mut u_dims, mut w_dims) = (0, 0);
    if !g.is_complete() {
        if b == 0 {
            return Err(Error::Precondition(
                "zero box dimensions for a non-complete graph".into(),
            ));
        }
        for p in binary_bipartitions(&coloring) {
            for dim in cobipartize_box_representation(g, &box_rep, &p)? {
                dims.push(unitize_claw_free_dimension(&dim)?);
                u_dims += 1;
            }
        }
        for gadgets in color_class_unit_graphs(&coloring) {
            w_dims += gadgets.len();
            dims.extend(gadgets);
        }
    }

    let cube = CubeRepresentation::new(n, dims)?;
    let verified = verify_representation(&cube, g)?.is_equal();
    let report = ConstructionReport {
        b_used: b,
        chi_used: chi,
        class_sizes,
        u_dims,
        w_dims,
        total_dims: u_dims + w_dims,
        alpha,
        theorem_bound: if chi == 0 {
            0
        } else {
            theorem_upper_bound(chi, alpha.max(1), b)
        },
        parameters,
        verified,
    };
    Ok((cube, report))
}
