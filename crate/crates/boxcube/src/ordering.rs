//! Vertex orderings and the umbrella closure property that characterizes
//! interval graphs.
//!
//! Sorting the vertices of an interval representation by left endpoint gives
//! an ordering `f` with a one-sided closure property: whenever
//! `f(u) < f(w) < f(v)` and `u` is adjacent to `v`, `u` is also adjacent to
//! `w` (an edge never skips over a vertex to the right of its left end).
//! Conversely, any ordering with this property turns back into an interval
//! representation by giving each vertex the interval from its own position
//! to its farthest right neighbor's position.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{Interval, IntervalRepresentation};
use crate::rational::{cmp_exact, Rational};

/// Bijection between vertices `0..n` and positions `1..=n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexOrdering {
    /// `pos[v]` is the 1-based position of vertex `v`.
    pos: Vec<usize>,
    /// `seq[p - 1]` is the vertex at position `p`.
    seq: Vec<usize>,
}

impl VertexOrdering {
    /// Builds an ordering from 1-based positions, validating bijectivity.
    pub fn from_positions(pos: Vec<usize>) -> Result<Self> {
        let n = pos.len();
        let mut seq = vec![usize::MAX; n];
        for (v, &p) in pos.iter().enumerate() {
            if p == 0 || p > n {
                return Err(Error::invalid(format!(
                    "position {p} of vertex {v} is outside 1..={n}"
                )));
            }
            if seq[p - 1] != usize::MAX {
                return Err(Error::invalid(format!(
                    "position {p} is assigned to both vertices {} and {v}",
                    seq[p - 1]
                )));
            }
            seq[p - 1] = v;
        }
        Ok(VertexOrdering { pos, seq })
    }

    /// Builds an ordering from the vertex sequence by position.
    pub fn from_sequence(seq: &[usize]) -> Result<Self> {
        let n = seq.len();
        let mut pos = vec![0usize; n];
        for (idx, &v) in seq.iter().enumerate() {
            if v >= n {
                return Err(Error::invalid(format!("vertex {v} is outside 0..{n}")));
            }
            if pos[v] != 0 {
                return Err(Error::invalid(format!("vertex {v} appears twice in the sequence")));
            }
            pos[v] = idx + 1;
        }
        Ok(VertexOrdering { pos, seq: seq.to_vec() })
    }

    /// The ordering that keeps vertex ids: vertex `v` at position `v + 1`.
    pub fn identity(n: usize) -> Self {
        VertexOrdering { pos: (1..=n).collect(), seq: (0..n).collect() }
    }

    pub fn n(&self) -> usize {
        self.pos.len()
    }

    /// 1-based position of vertex `v`.
    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    /// Vertex at 1-based position `p`.
    pub fn vertex_at(&self, p: usize) -> usize {
        self.seq[p - 1]
    }

    /// Vertices listed by ascending position.
    pub fn sequence(&self) -> &[usize] {
        &self.seq
    }
}

/// Orders vertices by ascending left endpoint, breaking ties by ascending
/// right endpoint and then by vertex id, so the result is deterministic.
pub fn left_endpoint_ordering(rep: &IntervalRepresentation) -> VertexOrdering {
    let mut seq: Vec<usize> = (0..rep.n()).collect();
    seq.sort_by(|&a, &b| {
        cmp_exact(rep.interval(a).lo(), rep.interval(b).lo())
            .then_with(|| cmp_exact(rep.interval(a).hi(), rep.interval(b).hi()))
            .then(a.cmp(&b))
    });
    VertexOrdering::from_sequence(&seq).expect("a sorted permutation is a valid sequence")
}

/// Tests the one-sided closure property of `f` on `g`: for every triple with
/// `f(u) < f(w) < f(v)` and `(u, v)` an edge, `(u, w)` must be an edge too.
///
/// Runs in O(n^2): for each vertex only the positions up to its farthest
/// right neighbor need checking.
///
/// # Panics
///
/// Panics when `f` does not order exactly the vertices of `g`.
pub fn check_ordering_property(g: &Graph, f: &VertexOrdering) -> bool {
    assert_eq!(g.n(), f.n(), "ordering and graph have different vertex counts");
    let n = g.n();
    let mut is_neighbor = vec![false; n + 1];
    for u in 0..n {
        let reach = g.neighbors(u).iter().map(|&v| f.position(v)).max().unwrap_or(0);
        if reach <= f.position(u) {
            continue;
        }
        for &v in g.neighbors(u) {
            is_neighbor[f.position(v)] = true;
        }
        let ok = (f.position(u) + 1..reach).all(|p| is_neighbor[p]);
        for &v in g.neighbors(u) {
            is_neighbor[f.position(v)] = false;
        }
        if !ok {
            return false;
        }
    }
    true
}

/// Tests the two-sided closure property: for every triple with
/// `f(u) < f(w) < f(v)` and `(u, v)` an edge, both `(u, w)` and `(w, v)`
/// must be edges. This is the ordering form of a unit-interval family.
pub(crate) fn check_two_sided_property(g: &Graph, f: &VertexOrdering) -> bool {
    if !check_ordering_property(g, f) {
        return false;
    }
    // Mirror direction: edges may not skip vertices to the left of their
    // right end either.
    let n = g.n();
    let mut is_neighbor = vec![false; n + 1];
    for v in 0..n {
        let reach_back = g.neighbors(v).iter().map(|&u| f.position(u)).min().unwrap_or(usize::MAX);
        if reach_back >= f.position(v) {
            continue;
        }
        for &u in g.neighbors(v) {
            is_neighbor[f.position(u)] = true;
        }
        let ok = (reach_back + 1..f.position(v)).all(|p| is_neighbor[p]);
        for &u in g.neighbors(v) {
            is_neighbor[f.position(u)] = false;
        }
        if !ok {
            return false;
        }
    }
    true
}

/// Rebuilds an interval representation from an ordering that satisfies the
/// closure property: vertex `u` receives `[f(u), m(u)]` where `m(u)` is the
/// largest position among `u` and its right neighbors. The intersection
/// graph of the result is `g` itself.
pub fn ordering_to_interval_rep(g: &Graph, f: &VertexOrdering) -> Result<IntervalRepresentation> {
    if g.n() != f.n() {
        return Err(Error::invalid(format!(
            "ordering on {} vertices does not fit a graph on {}",
            f.n(),
            g.n()
        )));
    }
    if !check_ordering_property(g, f) {
        return Err(Error::invalid(
            "ordering violates the closure property, so no interval family matches it",
        ));
    }
    let intervals = (0..g.n())
        .map(|u| {
            let own = f.position(u);
            let reach = g
                .neighbors(u)
                .iter()
                .map(|&v| f.position(v))
                .max()
                .unwrap_or(0)
                .max(own);
            Interval::new(
                Rational::from_integer(own as i64),
                Rational::from_integer(reach as i64),
            )
            .expect("own <= reach")
        })
        .collect();
    Ok(IntervalRepresentation::new(intervals))
}
