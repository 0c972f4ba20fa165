//! The interval-to-cube construction.
//!
//! An interval representation on `n` vertices is converted into an
//! axis-parallel unit-cube representation in `ceil(log2 n)` dimensions (zero
//! for complete graphs). The pipeline:
//!
//! 1. order the vertices by left endpoint and pad the graph with isolated
//!    vertices until `n` is a power of two;
//! 2. for each dimension `i` in `1..=log2(n)`, split the position range into
//!    consecutive blocks of size `2^(i-1)` and alternate the blocks between a
//!    low side and a high side;
//! 3. give every vertex one interval of shared length `n` per dimension:
//!    high-side vertices sit at `n + position`, low-side vertices span
//!    `[t, n + t]` where `t` is the highest position among their high-side
//!    neighbors (or `[0, n]` with no such neighbor).
//!
//! Each layer's intersection graph is a superset of the input edges, low and
//! high vertices only meet when adjacent, and every non-edge is separated by
//! the first layer that puts its endpoints in different blocks; the layers'
//! edge intersection is therefore exactly the input graph. Reading one anchor
//! per layer gives each vertex an axis-parallel cube of side `n`.

use crate::error::{Error, Result};
use crate::graph::{edge_intersection, DiameterReport, Graph};
use crate::interval::{IntervalRepresentation, UnitIntervalRepresentation};
use crate::ordering::{check_ordering_property, left_endpoint_ordering, VertexOrdering};
use crate::rational::Rational;

/// Smallest `k` with `2^k >= n`; `ceil(log2 n)` for `n >= 1`.
pub fn ceil_log2(n: usize) -> usize {
    assert!(n >= 1, "ceil_log2 needs n >= 1");
    (usize::BITS - (n - 1).leading_zeros()) as usize
}

/// Appends isolated vertices (placed after every existing position) until
/// the vertex count is a power of two. Returns the padded graph, the padded
/// ordering, and the dimension count `k = ceil(log2 n)`.
pub fn pad_to_power_of_two(
    g: &Graph,
    f: &VertexOrdering,
) -> Result<(Graph, VertexOrdering, usize)> {
    let n = g.n();
    if n == 0 {
        return Err(Error::invalid("padding needs at least one vertex"));
    }
    if f.n() != n {
        return Err(Error::invalid(format!(
            "ordering on {} vertices does not fit a graph on {n}",
            f.n()
        )));
    }
    let k = ceil_log2(n);
    let padded_n = 1usize << k;
    let padded_graph = g.add_isolated(padded_n - n);
    let mut positions: Vec<usize> = (0..n).map(|v| f.position(v)).collect();
    positions.extend(n + 1..=padded_n);
    let padded_ordering =
        VertexOrdering::from_positions(positions).expect("padding preserves bijectivity");
    Ok((padded_graph, padded_ordering, k))
}

/// Which of the alternating block classes a vertex falls in within a layer.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    /// Odd-numbered blocks; intervals anchored near the origin.
    Low,
    /// Even-numbered blocks; intervals shifted to `n + position`.
    High,
}

/// The dyadic block structure of one layer: positions `1..=n` are cut into
/// consecutive blocks of `2^(index-1)` positions, and the blocks alternate
/// `Low, High, Low, High, ...`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LayerPlan {
    index: usize,
    block_size: usize,
    /// 1-based block number per vertex.
    block: Vec<usize>,
    side: Vec<Side>,
}

impl LayerPlan {
    /// Builds the plan for layer `index` over `f`. The vertex count must be
    /// a power of two and `index` must lie in `1..=log2(n)`.
    pub fn new(f: &VertexOrdering, index: usize) -> Result<Self> {
        let n = f.n();
        if n == 0 || !n.is_power_of_two() {
            return Err(Error::invalid(format!(
                "layer plans need a power-of-two vertex count, got {n}"
            )));
        }
        let k = ceil_log2(n);
        if index == 0 || index > k {
            return Err(Error::invalid(format!(
                "layer index {index} is outside 1..={k} for n = {n}"
            )));
        }
        let block_size = 1usize << (index - 1);
        let mut block = vec![0usize; n];
        let mut side = vec![Side::Low; n];
        for v in 0..n {
            let b = (f.position(v) + block_size - 1) / block_size;
            block[v] = b;
            side[v] = if b % 2 == 1 { Side::Low } else { Side::High };
        }
        Ok(LayerPlan { index, block_size, block, side })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    /// 1-based block number of vertex `v`.
    pub fn block(&self, v: usize) -> usize {
        self.block[v]
    }

    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn n(&self) -> usize {
        self.block.len()
    }
}

/// Integer anchors of one layer; shared interval length is `n`.
fn layer_anchor_values(g: &Graph, f: &VertexOrdering, plan: &LayerPlan) -> Vec<i64> {
    let n = g.n() as i64;
    (0..g.n())
        .map(|v| match plan.side(v) {
            Side::High => n + f.position(v) as i64,
            Side::Low => g
                .neighbors(v)
                .iter()
                .filter(|&&x| plan.side(x) == Side::High)
                .map(|&x| f.position(x) as i64)
                .max()
                .unwrap_or(0),
        })
        .collect()
}

/// Builds layer `index` of the construction for a padded, ordered graph.
///
/// Preconditions checked here: the vertex count is a power of two, `f`
/// matches `g` and satisfies the one-sided closure property, and `index`
/// lies in `1..=log2(n)`. The result is a unit-interval family of length
/// `n` whose graph contains every edge of `g`.
pub fn build_layer(
    g: &Graph,
    f: &VertexOrdering,
    index: usize,
) -> Result<UnitIntervalRepresentation> {
    if f.n() != g.n() {
        return Err(Error::invalid(format!(
            "ordering on {} vertices does not fit a graph on {}",
            f.n(),
            g.n()
        )));
    }
    let plan = LayerPlan::new(f, index)?;
    if !check_ordering_property(g, f) {
        return Err(Error::invalid(
            "ordering violates the closure property required by the layer construction",
        ));
    }
    let anchors = layer_anchor_values(g, f, &plan)
        .into_iter()
        .map(Rational::from_integer)
        .collect();
    UnitIntervalRepresentation::new(anchors, Rational::from_integer(g.n() as i64))
}

/// Axis-parallel cubes of one shared integer side length, stored as one
/// anchor per dimension; vertex `v` occupies the product of
/// `[anchor, anchor + side]` over its anchors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubeRepresentation {
    n: usize,
    dims: usize,
    side: i64,
    anchors: Vec<Vec<i64>>,
}

impl CubeRepresentation {
    /// Builds a cube family, validating shape and a positive side.
    pub fn new(dims: usize, side: i64, anchors: Vec<Vec<i64>>) -> Result<Self> {
        if side < 1 {
            return Err(Error::invalid(format!("cube side {side} must be positive")));
        }
        if let Some(bad) = anchors.iter().position(|a| a.len() != dims) {
            return Err(Error::invalid(format!(
                "vertex {bad} has {} anchors, expected {dims}",
                anchors[bad].len()
            )));
        }
        Ok(CubeRepresentation { n: anchors.len(), dims, side, anchors })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn side(&self) -> i64 {
        self.side
    }

    pub fn anchor(&self, v: usize) -> &[i64] {
        &self.anchors[v]
    }

    /// Whether the cubes of `u` and `v` share a point: their anchors must be
    /// within `side` of each other in every dimension. With zero dimensions
    /// every pair intersects.
    pub fn cubes_intersect(&self, u: usize, v: usize) -> bool {
        self.anchors[u]
            .iter()
            .zip(&self.anchors[v])
            .all(|(a, b)| (a - b).abs() <= self.side)
    }

    /// The graph realized by the cubes.
    pub fn intersection_graph(&self) -> Graph {
        Graph::from_pairwise(self.n, |u, v| self.cubes_intersect(u, v))
    }

    /// Dimension `p` as a unit-interval family of length `side`.
    pub fn dimension_layer(&self, p: usize) -> Result<UnitIntervalRepresentation> {
        if p >= self.dims {
            return Err(Error::invalid(format!(
                "dimension {p} is out of range for a {}-dimensional family",
                self.dims
            )));
        }
        let anchors = self.anchors.iter().map(|a| Rational::from_integer(a[p])).collect();
        UnitIntervalRepresentation::new(anchors, Rational::from_integer(self.side))
    }
}

/// Everything the conversion produced: the cube family plus, when the input
/// graph was not complete, the padded instance and its layers.
#[derive(Clone, Debug)]
pub struct CubeConstruction {
    pub cube: CubeRepresentation,
    pub pipeline: Option<LayeredPipeline>,
}

/// Intermediate artifacts of a non-degenerate conversion, all on the padded
/// vertex set.
#[derive(Clone, Debug)]
pub struct LayeredPipeline {
    pub padded_graph: Graph,
    pub padded_ordering: VertexOrdering,
    pub layers: Vec<UnitIntervalRepresentation>,
}

/// Converts an interval representation into a cube representation realizing
/// the same graph, keeping the intermediate layers for inspection.
///
/// Complete inputs (including `n <= 1`) short-circuit to zero dimensions.
/// Otherwise the result has exactly `ceil(log2 n)` dimensions and side
/// `2^ceil(log2 n)`.
pub fn cube_construction(rep: &IntervalRepresentation) -> CubeConstruction {
    let n = rep.n();
    if n == 0 {
        let cube = CubeRepresentation::new(0, 1, Vec::new()).expect("empty family");
        return CubeConstruction { cube, pipeline: None };
    }
    let g = rep.intersection_graph();
    let side = 1i64 << ceil_log2(n);
    if g.is_complete() {
        let cube = CubeRepresentation::new(0, side, vec![Vec::new(); n])
            .expect("zero-dimensional family");
        return CubeConstruction { cube, pipeline: None };
    }
    let f = left_endpoint_ordering(rep);
    let (padded_graph, padded_ordering, k) =
        pad_to_power_of_two(&g, &f).expect("n >= 1 and f matches g");
    debug_assert!(check_ordering_property(&padded_graph, &padded_ordering));
    let padded_n = padded_graph.n() as i64;
    let mut layer_values = Vec::with_capacity(k);
    for index in 1..=k {
        let plan = LayerPlan::new(&padded_ordering, index).expect("index in range");
        layer_values.push(layer_anchor_values(&padded_graph, &padded_ordering, &plan));
    }
    let anchors: Vec<Vec<i64>> =
        (0..n).map(|v| layer_values.iter().map(|layer| layer[v]).collect()).collect();
    let cube = CubeRepresentation::new(k, padded_n, anchors).expect("side = padded n >= 2");
    let layers = layer_values
        .into_iter()
        .map(|values| {
            let rationals = values.into_iter().map(Rational::from_integer).collect();
            UnitIntervalRepresentation::new(rationals, Rational::from_integer(padded_n))
                .expect("padded n is positive")
        })
        .collect();
    CubeConstruction {
        cube,
        pipeline: Some(LayeredPipeline { padded_graph, padded_ordering, layers }),
    }
}

/// Converts an interval representation into a cube representation of the
/// same graph. See [`cube_construction`] for the retained intermediates.
pub fn interval_to_cube(rep: &IntervalRepresentation) -> CubeRepresentation {
    cube_construction(rep).cube
}

/// Per-layer audit of a set of unit-interval layers against a graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LayerReport {
    /// Whether each layer's graph contains every edge of the input graph.
    pub superset_ok: Vec<bool>,
    /// Whether the layers' edge intersection equals the input graph exactly.
    pub intersection_ok: bool,
    /// Connectivity and per-component diameters of each layer's graph.
    pub layer_diameters: Vec<DiameterReport>,
}

impl LayerReport {
    pub fn all_ok(&self) -> bool {
        self.intersection_ok && self.superset_ok.iter().all(|&ok| ok)
    }
}

/// Audits `layers` against `g`: per-layer edge-superset checks, exact edge
/// intersection, and per-component layer diameters.
pub fn verify_layers(g: &Graph, layers: &[UnitIntervalRepresentation]) -> Result<LayerReport> {
    if layers.is_empty() {
        return Err(Error::invalid("layer audit needs at least one layer"));
    }
    if let Some(bad) = layers.iter().find(|layer| layer.n() != g.n()) {
        return Err(Error::invalid(format!(
            "layer on {} vertices does not match a graph on {}",
            bad.n(),
            g.n()
        )));
    }
    let layer_graphs: Vec<Graph> = layers.iter().map(|l| l.intersection_graph()).collect();
    let superset_ok = layer_graphs
        .iter()
        .map(|lg| g.edges().all(|(u, v)| lg.has_edge(u, v)))
        .collect();
    let intersection_ok = edge_intersection(&layer_graphs)? == *g;
    let layer_diameters = layer_graphs.iter().map(|lg| lg.diameter()).collect();
    Ok(LayerReport { superset_ok, intersection_ok, layer_diameters })
}
