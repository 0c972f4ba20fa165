//! Exact conversion of interval and box intersection representations into
//! unit-cube representations.
//!
//! An interval graph on `n` vertices always has a representation by axis-
//! parallel cubes of one shared side length in `⌈log₂ n⌉` dimensions, and a
//! `b`-dimensional box representation likewise converts into at most
//! `b·⌈log₂ n⌉` cube dimensions. This crate implements that conversion
//! constructively: it orders the vertices by interval left endpoints, pads
//! the graph to a power-of-two size, splits the positions into dyadic
//! blocks, and emits one equal-length interval family ("layer") per block
//! scale. Each layer's graph is an edge-superset of the input, and all the
//! layers together intersect to the input graph exactly.
//!
//! Everything is verified rather than trusted: arithmetic is exact 64-bit
//! rational arithmetic, each layer is checked against the input, and tiny
//! instances can be cross-examined by factorial- and exponential-time
//! searches ([`recognize`] and [`oracle`]) that know nothing about the
//! construction.
//!
//! The [`io`] module defines canonical JSON documents for every
//! representation so that pipelines built on top of the library (such as
//! the companion command-line tool) are reproducible byte for byte.

pub mod boxes;
pub mod cube;
pub mod error;
pub mod generate;
pub mod graph;
pub mod interval;
pub mod io;
pub mod oracle;
pub mod ordering;
pub mod rational;
pub mod recognize;

pub use boxes::{box_to_cube, BoxRepresentation};
pub use cube::{
    build_layer, ceil_log2, cube_construction, interval_to_cube, pad_to_power_of_two,
    verify_layers, CubeConstruction, CubeRepresentation, LayerPlan, LayerReport,
    LayeredPipeline, Side,
};
pub use error::{Error, Result};
pub use generate::{random_box_representation, random_interval_representation};
pub use graph::{edge_intersection, DiameterReport, Graph};
pub use interval::{Interval, IntervalRepresentation, UnitIntervalRepresentation};
pub use oracle::{
    boxicity_oracle, cubicity_oracle, OracleOutcome, OracleResult, DEFAULT_ORACLE_LIMIT,
};
pub use ordering::{
    check_ordering_property, left_endpoint_ordering, ordering_to_interval_rep, VertexOrdering,
};
pub use rational::{cmp_exact, integer, le_exact, rational, Rational};
pub use recognize::{
    recognize_interval_brute, recognize_unit_interval_brute, DEFAULT_BRUTE_LIMIT,
};
