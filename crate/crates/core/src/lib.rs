//! Box and unit-cube intersection representations of finite graphs.
//!
//! The crate recognizes interval and unit interval graphs, computes exact
//! boxicity and cubicity for small graphs, and builds cube representations
//! of dimension at most `2⌈log χ⌉·box + χ·⌈log α⌉` from a box
//! representation and a proper coloring.
//!
//! Geometry is generic over the endpoint scalar ([`Coord`]); the aliases
//! below fix it to exact rationals, which is what the JSON schema and the
//! command-line tool use.

pub mod bounds;
pub mod error;
pub mod families;
pub mod graph;
pub mod interval;
pub mod invariants;
pub mod io;
pub mod oracle;
pub mod pipeline;
pub mod scalar;

pub use bounds::{
    adiga_upper_bound, multipartite_ground_truth, optimal_box_representation_multipartite,
    theorem_upper_bound, tightness_experiment, volume_lower_bound, TightnessReport,
    TIGHTNESS_CSV_HEADER,
};
pub use error::{Error, Result};
pub use families::{make_family, Family};
pub use graph::{Graph, ProperColoring};
pub use interval::{
    dimension_graph, find_interval_representation, find_unit_interval_representation,
    intersection_graph, unitize_claw_free_dimension, verify_representation, Dimension, Interval,
    RepKind, RepresentationDoc, Verdict,
};
pub use invariants::{
    diameter, exact_chromatic_coloring, exact_independence_number, greedy_coloring, Diameter,
};
pub use io::{parse_graph, write_graph, Format};
pub use oracle::{
    exact_boxicity, exact_cubicity, known_boxicity, known_cubicity, DEFAULT_ORACLE_LIMIT,
};
pub use pipeline::{
    binary_bipartitions, cobipartite_augment, cobipartize_box_representation,
    color_class_unit_graphs, construct_cube_representation, AlphaSource, Bipartition, BoxSource,
    ColoringSource, ConstructOptions, ConstructionReport, Parameters,
};
pub use scalar::{ceil_log2, Coord};

/// Exact endpoint type: a reduced fraction with positive denominator.
pub type Rational = num_rational::Ratio<i64>;

pub type IntervalRepresentation = interval::IntervalRepresentation<Rational>;
pub type UnitIntervalRepresentation = interval::UnitIntervalRepresentation<Rational>;
pub type BoxRepresentation = interval::BoxRepresentation<Rational>;
pub type CubeRepresentation = interval::CubeRepresentation<Rational>;

pub type IntervalRepresentationF64 = interval::IntervalRepresentation<f64>;
pub type UnitIntervalRepresentationF64 = interval::UnitIntervalRepresentation<f64>;
pub type BoxRepresentationF64 = interval::BoxRepresentation<f64>;
pub type CubeRepresentationF64 = interval::CubeRepresentation<f64>;
