//! Interval, unit-interval, box and cube representations.
//!
//! All intervals are closed, so touching endpoints intersect. A box (cube)
//! representation is a list of interval (unit-interval) dimensions; its
//! graph is the edge-wise intersection of the dimension graphs, and zero
//! dimensions stand for the complete graph.

mod json;
mod recognize;
mod unit;

pub use json::{RepKind, RepresentationDoc};
pub use recognize::{clique_path, find_interval_representation, find_unit_interval_representation};
pub use unit::{realize_unit_intervals, unitize_claw_free_dimension};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Coord;

/// A closed interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Coord> Interval<T> {
    pub fn new(lo: T, hi: T) -> Result<Self> {
        if lo > hi {
            return Err(Error::Argument(format!("empty interval [{lo:?}, {hi:?}]")));
        }
        Ok(Interval { lo, hi })
    }

    #[inline]
    pub fn intersects(&self, other: &Interval<T>) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn len(&self) -> T {
        self.hi.clone() - self.lo.clone()
    }
}

/// One dimension: something that assigns a closed interval to each vertex.
pub trait Dimension<T: Coord> {
    fn n(&self) -> usize;

    fn interval(&self, v: usize) -> Interval<T>;

    fn intervals(&self) -> Vec<Interval<T>> {
        (0..self.n()).map(|v| self.interval(v)).collect()
    }

    /// Graph in which `u ~ v` iff their intervals share a point.
    fn graph(&self) -> Graph {
        dimension_graph(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalRepresentation<T> {
    intervals: Vec<Interval<T>>,
}

impl<T: Coord> IntervalRepresentation<T> {
    pub fn new(intervals: Vec<Interval<T>>) -> Result<Self> {
        if let Some(v) = intervals.iter().position(|iv| iv.lo > iv.hi) {
            return Err(Error::Argument(format!(
                "interval of vertex {v} has lo > hi"
            )));
        }
        Ok(IntervalRepresentation { intervals })
    }

    pub fn from_bounds<I: IntoIterator<Item = (T, T)>>(bounds: I) -> Result<Self> {
        Self::new(
            bounds
                .into_iter()
                .map(|(lo, hi)| Interval { lo, hi })
                .collect(),
        )
    }

    pub fn as_slice(&self) -> &[Interval<T>] {
        &self.intervals
    }

    /// Smallest left and largest right endpoint; `None` when empty.
    pub fn span(&self) -> Option<(T, T)> {
        let first = self.intervals.first()?;
        Some(
            self.intervals
                .iter()
                .fold((first.lo.clone(), first.hi.clone()), |(m, mx), iv| {
                    (T::min_of(m, iv.lo.clone()), T::max_of(mx, iv.hi.clone()))
                }),
        )
    }
}

impl<T: Coord> Dimension<T> for IntervalRepresentation<T> {
    fn n(&self) -> usize {
        self.intervals.len()
    }

    fn interval(&self, v: usize) -> Interval<T> {
        self.intervals[v].clone()
    }

    fn intervals(&self) -> Vec<Interval<T>> {
        self.intervals.clone()
    }
}

/// Unit intervals `[left, left + 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitIntervalRepresentation<T> {
    lefts: Vec<T>,
}

impl<T: Coord> UnitIntervalRepresentation<T> {
    pub fn new(lefts: Vec<T>) -> Self {
        UnitIntervalRepresentation { lefts }
    }

    pub fn lefts(&self) -> &[T] {
        &self.lefts
    }

    /// The same intervals, forgetting that they have unit length.
    pub fn to_interval_representation(&self) -> IntervalRepresentation<T> {
        IntervalRepresentation {
            intervals: self.intervals(),
        }
    }
}

impl<T: Coord> Dimension<T> for UnitIntervalRepresentation<T> {
    fn n(&self) -> usize {
        self.lefts.len()
    }

    fn interval(&self, v: usize) -> Interval<T> {
        let lo = self.lefts[v].clone();
        Interval {
            hi: lo.clone() + T::one(),
            lo,
        }
    }
}

/// Intersection graph of a single dimension.
pub fn dimension_graph<T: Coord, D: Dimension<T> + ?Sized>(dim: &D) -> Graph {
    let ivs = dim.intervals();
    let mut g = Graph::new(ivs.len());
    for (u, a) in ivs.iter().enumerate() {
        for (v, b) in ivs.iter().enumerate().skip(u + 1) {
            if a.intersects(b) {
                g.insert_edge(u, v);
            }
        }
    }
    g
}

/// Edge-wise intersection of the dimension graphs; with no dimensions this is
/// the complete graph on `n` vertices.
pub fn intersection_graph<T: Coord, D: Dimension<T>>(n: usize, dims: &[D]) -> Result<Graph> {
    if let Some(d) = dims.iter().find(|d| d.n() != n) {
        return Err(Error::Argument(format!(
            "dimension has {} vertices, expected {n}",
            d.n()
        )));
    }
    let all: Vec<Vec<Interval<T>>> = dims.iter().map(|d| d.intervals()).collect();
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if all.iter().all(|ivs| ivs[u].intersects(&ivs[v])) {
                g.insert_edge(u, v);
            }
        }
    }
    Ok(g)
}

macro_rules! multi_dimensional {
    ($name:ident, $dim:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, Debug, PartialEq, Eq, Hash)]
        pub struct $name<T> {
            n: usize,
            dims: Vec<$dim<T>>,
        }

        impl<T: Coord> $name<T> {
            /// Errors if some dimension does not have `n` vertices.
            pub fn new(n: usize, dims: Vec<$dim<T>>) -> Result<Self> {
                if let Some(i) = dims.iter().position(|d| d.n() != n) {
                    return Err(Error::Argument(format!(
                        "dimension {i} has {} vertices, expected {n}",
                        dims[i].n()
                    )));
                }
                Ok($name { n, dims })
            }

            pub fn n(&self) -> usize {
                self.n
            }

            pub fn dims(&self) -> &[$dim<T>] {
                &self.dims
            }

            pub fn dimension_count(&self) -> usize {
                self.dims.len()
            }

            pub fn into_dims(self) -> Vec<$dim<T>> {
                self.dims
            }

            pub fn graph(&self) -> Graph {
                intersection_graph(self.n, &self.dims)
                    .expect("vertex counts checked at construction")
            }

            /// Copy without dimension `i`.
            pub fn without_dimension(&self, i: usize) -> Self {
                let mut dims = self.dims.clone();
                dims.remove(i);
                $name { n: self.n, dims }
            }
        }

        impl<T: Coord> Representation for $name<T> {
            fn n(&self) -> usize {
                self.n
            }

            fn graph(&self) -> Graph {
                $name::graph(self)
            }
        }
    };
}

multi_dimensional!(
    BoxRepresentation,
    IntervalRepresentation,
    "Axis-parallel boxes, one interval dimension per axis."
);
multi_dimensional!(
    CubeRepresentation,
    UnitIntervalRepresentation,
    "Unit cubes, one unit-interval dimension per axis."
);

impl<T: Coord> CubeRepresentation<T> {
    pub fn to_box_representation(&self) -> BoxRepresentation<T> {
        BoxRepresentation {
            n: self.n,
            dims: self
                .dims
                .iter()
                .map(|d| d.to_interval_representation())
                .collect(),
        }
    }
}

/// Anything with a represented graph.
pub trait Representation {
    fn n(&self) -> usize;
    fn graph(&self) -> Graph;
}

/// Outcome of comparing a representation with a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    /// `missing`: edges of the graph the representation lacks; `extra`:
    /// edges of the representation the graph lacks.
    Mismatch {
        missing: Vec<(usize, usize)>,
        extra: Vec<(usize, usize)>,
    },
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal)
    }
}

/// Compares the represented graph with `g`; errors only on a vertex count
/// mismatch.
pub fn verify_representation<R: Representation + ?Sized>(rep: &R, g: &Graph) -> Result<Verdict> {
    if rep.n() != g.n() {
        return Err(Error::Argument(format!(
            "representation has {} vertices, graph has {}",
            rep.n(),
            g.n()
        )));
    }
    Ok(compare_graphs(&rep.graph(), g))
}

/// Symmetric difference of `actual` against `expected`.
pub fn compare_graphs(actual: &Graph, expected: &Graph) -> Verdict {
    let missing: Vec<_> = expected
        .edges()
        .filter(|&(u, v)| !actual.has_edge(u, v))
        .collect();
    let extra: Vec<_> = actual
        .edges()
        .filter(|&(u, v)| !expected.has_edge(u, v))
        .collect();
    if missing.is_empty() && extra.is_empty() {
        Verdict::Equal
    } else {
        Verdict::Mismatch { missing, extra }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn ivs(b: &[(i64, i64)]) -> IntervalRepresentation<Rational> {
        IntervalRepresentation::from_bounds(b.iter().map(|&(l, h)| (r(l), r(h)))).unwrap()
    }

    #[test]
    fn touching_endpoints_intersect() {
        let g = ivs(&[(0, 1), (1, 2), (2, 3)]).graph();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert!(ivs(&[(0, 1), (0, 1), (0, 1)]).graph().is_complete());
        assert_eq!(ivs(&[(0, 1), (5, 6)]).graph().edge_count(), 0);
    }

    #[test]
    fn rejects_reversed_interval() {
        assert!(IntervalRepresentation::from_bounds([(r(2), r(1))]).is_err());
        assert!(Interval::new(r(2), r(1)).is_err());
    }

    #[test]
    fn unit_dimension_graph() {
        let u = UnitIntervalRepresentation::new(vec![r(0), r(1), Rational::new(5, 2)]);
        assert_eq!(u.graph().edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let touching = UnitIntervalRepresentation::new(vec![r(0), r(1), r(2)]);
        assert_eq!(
            touching.graph().edges().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2)]
        );
    }

    #[test]
    fn two_dimensional_c4() {
        // K_{2,2} = C_4 with parts {0,1}, {2,3}
        let d1 = ivs(&[(0, 0), (1, 1), (0, 1), (0, 1)]);
        let d2 = ivs(&[(0, 1), (0, 1), (0, 0), (1, 1)]);
        let rep = BoxRepresentation::new(4, vec![d1.clone(), d2]).unwrap();
        let expected = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(rep.graph(), expected);
        assert!(verify_representation(&rep, &expected).unwrap().is_equal());

        let one = BoxRepresentation::new(4, vec![d1.clone()]).unwrap();
        assert_eq!(one.graph(), d1.graph());
        match verify_representation(&rep.without_dimension(1), &expected).unwrap() {
            Verdict::Mismatch { missing, extra } => {
                assert!(missing.is_empty());
                assert_eq!(extra, vec![(2, 3)]);
            }
            Verdict::Equal => panic!("dropped dimension should add edges"),
        }
    }

    #[test]
    fn zero_dimensions_is_complete() {
        let rep: CubeRepresentation<Rational> = CubeRepresentation::new(4, vec![]).unwrap();
        assert!(rep.graph().is_complete());
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let empty: CubeRepresentation<Rational> = CubeRepresentation::new(3, vec![]).unwrap();
        assert_eq!(
            verify_representation(&empty, &p3).unwrap(),
            Verdict::Mismatch {
                missing: vec![],
                extra: vec![(0, 2)]
            }
        );
    }

    #[test]
    fn mismatched_counts() {
        assert!(BoxRepresentation::new(3, vec![ivs(&[(0, 1)])]).is_err());
        assert!(intersection_graph(3, &[ivs(&[(0, 1)])]).is_err());
        let rep = BoxRepresentation::new(1, vec![ivs(&[(0, 1)])]).unwrap();
        assert!(verify_representation(&rep, &Graph::new(2)).is_err());
    }

    #[test]
    fn float_coordinates() {
        let d = IntervalRepresentation::from_bounds([(0.0, 0.5), (0.5, 1.0), (1.25, 2.0)]).unwrap();
        assert_eq!(d.graph().edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let u = UnitIntervalRepresentation::new(vec![0.0f32, 1.0, 2.5]);
        assert_eq!(u.graph().edge_count(), 1);
    }
}
