//! Brute-force recognizers for interval and unit-interval graphs.
//!
//! Both recognizers enumerate all vertex orderings and test a closure
//! property, so they are factorial-time and guarded by an explicit size
//! limit. They exist to cross-check the construction pipeline and to drive
//! the exact boxicity/cubicity search on tiny instances, not to classify
//! real inputs.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::UnitIntervalRepresentation;
use crate::ordering::{check_ordering_property, check_two_sided_property, VertexOrdering};
use crate::rational::Rational;

/// Default ceiling on `n` for the factorial-time recognizers.
pub const DEFAULT_BRUTE_LIMIT: usize = 8;

fn ensure_within(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::SizeLimit { n, limit });
    }
    Ok(())
}

/// Searches every vertex ordering of `g` for one with the one-sided closure
/// property; such an ordering exists exactly when `g` is an interval graph.
///
/// Deterministic: orderings are tried as vertex sequences in lexicographic
/// order and the first hit is returned.
pub fn recognize_interval_brute(g: &Graph, limit: usize) -> Result<Option<VertexOrdering>> {
    ensure_within(g.n(), limit)?;
    Ok(interval_ordering_unchecked(g))
}

/// Like [`recognize_interval_brute`] but reports only whether `g` admits an
/// ordering with the two-sided closure property, i.e. whether `g` is a
/// unit-interval graph.
pub fn recognize_unit_interval_brute(g: &Graph, limit: usize) -> Result<bool> {
    ensure_within(g.n(), limit)?;
    Ok(proper_ordering_unchecked(g).is_some())
}

pub(crate) fn interval_ordering_unchecked(g: &Graph) -> Option<VertexOrdering> {
    first_ordering(g, check_ordering_property)
}

pub(crate) fn proper_ordering_unchecked(g: &Graph) -> Option<VertexOrdering> {
    first_ordering(g, check_two_sided_property)
}

fn first_ordering(
    g: &Graph,
    accept: impl Fn(&Graph, &VertexOrdering) -> bool,
) -> Option<VertexOrdering> {
    let n = g.n();
    (0..n).permutations(n).find_map(|seq| {
        let f = VertexOrdering::from_sequence(&seq).expect("permutations are valid sequences");
        accept(g, &f).then_some(f)
    })
}

/// Builds a concrete unit-interval family realizing `g` from an ordering
/// with the two-sided closure property.
///
/// With the anchor order fixed by `f`, the requirements become difference
/// constraints on integer anchors: adjacent pairs may differ by at most the
/// shared length `L = n`, and non-adjacent pairs must differ by at least
/// `L + 1`. Shortest-path potentials solve such a system whenever it is
/// consistent, and `L = n` leaves enough slack that a valid two-sided
/// ordering always is (every simple constraint cycle mixes at most `n`
/// tightening steps).
pub(crate) fn unit_rep_from_two_sided_ordering(
    g: &Graph,
    f: &VertexOrdering,
) -> Option<UnitIntervalRepresentation> {
    let n = g.n();
    if n == 0 {
        return UnitIntervalRepresentation::new(Vec::new(), Rational::from_integer(1)).ok();
    }
    let length = n as i64;
    // Constraint x_to <= x_from + w over anchors indexed by position 0..n.
    let mut constraints: Vec<(usize, usize, i64)> = Vec::new();
    for p in 0..n {
        for q in (p + 1)..n {
            let u = f.vertex_at(p + 1);
            let v = f.vertex_at(q + 1);
            if g.has_edge(u, v) {
                constraints.push((p, q, length));
                constraints.push((q, p, length));
            } else {
                // Anchors follow position order, so the later one must sit
                // strictly more than `length` to the right.
                constraints.push((q, p, -(length + 1)));
            }
        }
    }
    // Bellman-Ford from a virtual source connected to every node with
    // weight 0 (hence the all-zero initialization).
    let mut dist = vec![0i64; n];
    for _ in 0..n {
        let mut changed = false;
        for &(from, to, w) in &constraints {
            if dist[from] + w < dist[to] {
                dist[to] = dist[from] + w;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if constraints.iter().any(|&(from, to, w)| dist[from] + w < dist[to]) {
        return None;
    }
    let base = *dist.iter().min().expect("n >= 1");
    let anchors = (0..n)
        .map(|v| Rational::from_integer(dist[f.position(v) - 1] - base))
        .collect();
    let rep = UnitIntervalRepresentation::new(anchors, Rational::from_integer(length))
        .expect("length n >= 1 is positive");
    debug_assert_eq!(rep.intersection_graph(), *g);
    Some(rep)
}
