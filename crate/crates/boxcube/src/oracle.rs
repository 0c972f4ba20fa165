//! Exact boxicity and cubicity search for tiny graphs.
//!
//! Both parameters ask for the fewest interval-like layers whose edge
//! intersection is exactly the input graph; every layer must contain all of
//! the input's edges, so the layers are recognizable supergraphs and each
//! one "kills" the non-edges it leaves out. That turns the search into exact
//! set cover over the non-edges: enumerate every supergraph on the same
//! vertex set, keep the ones the relevant recognizer accepts, and find the
//! smallest number of them whose kill sets cover all non-edges.
//!
//! The search is deterministic: candidate supergraphs are ordered by their
//! added-edge sets and the first minimum-size cover in that order wins, so
//! the witness is reproducible run to run.

use crate::error::{Error, Result};
use crate::graph::{edge_intersection, Graph};
use crate::interval::{IntervalRepresentation, UnitIntervalRepresentation};
use crate::ordering::ordering_to_interval_rep;
use crate::recognize::{
    interval_ordering_unchecked, proper_ordering_unchecked, unit_rep_from_two_sided_ordering,
};

/// Default ceiling on `n` for the exponential supergraph search.
pub const DEFAULT_ORACLE_LIMIT: usize = 6;

/// Exact value of a parameter together with a realizing witness: a list of
/// `value` representations whose graphs intersect to the input exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OracleResult<R> {
    pub value: usize,
    pub witness: Vec<R>,
}

/// Outcome of an exact parameter search capped at `max_b` layers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OracleOutcome<R> {
    /// The parameter value, witnessed and re-verified.
    Computed(OracleResult<R>),
    /// Every cover within the cap failed; the value is larger than `max_b`.
    Exceeded { max_b: usize },
}

impl<R> OracleOutcome<R> {
    /// The computed value, or `None` when the cap was exceeded.
    pub fn value(&self) -> Option<usize> {
        match self {
            OracleOutcome::Computed(result) => Some(result.value),
            OracleOutcome::Exceeded { .. } => None,
        }
    }
}

/// Smallest number of unit-interval supergraphs of `g` whose edge sets
/// intersect to exactly `E(g)`, i.e. the cubicity of `g`. Zero for complete
/// graphs. Capped at `max_b`; instances over `limit` vertices are refused.
pub fn cubicity_oracle(
    g: &Graph,
    max_b: usize,
    limit: usize,
) -> Result<OracleOutcome<UnitIntervalRepresentation>> {
    exact_parameter(
        g,
        max_b,
        limit,
        |h| proper_ordering_unchecked(h).is_some(),
        |h| {
            let f = proper_ordering_unchecked(h)
                .ok_or_else(|| Error::Internal("accepted supergraph lost its ordering".into()))?;
            unit_rep_from_two_sided_ordering(h, &f).ok_or_else(|| {
                Error::Internal("two-sided ordering admitted no unit family".into())
            })
        },
        |rep| rep.intersection_graph(),
    )
}

/// Smallest number of interval supergraphs of `g` whose edge sets intersect
/// to exactly `E(g)`, i.e. the boxicity of `g`. Zero for complete graphs.
/// Capped at `max_b`; instances over `limit` vertices are refused.
pub fn boxicity_oracle(
    g: &Graph,
    max_b: usize,
    limit: usize,
) -> Result<OracleOutcome<IntervalRepresentation>> {
    exact_parameter(
        g,
        max_b,
        limit,
        |h| interval_ordering_unchecked(h).is_some(),
        |h| {
            let f = interval_ordering_unchecked(h)
                .ok_or_else(|| Error::Internal("accepted supergraph lost its ordering".into()))?;
            ordering_to_interval_rep(h, &f)
        },
        |rep| rep.intersection_graph(),
    )
}

/// `g` plus the non-edges selected by `mask`.
fn apply_added_edges(g: &Graph, non_edges: &[(usize, usize)], mask: u64) -> Graph {
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend(
        non_edges
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, &e)| e),
    );
    Graph::from_edges(g.n(), &edges).expect("non-edges of g are valid edges")
}

fn exact_parameter<R>(
    g: &Graph,
    max_b: usize,
    limit: usize,
    recognize: impl Fn(&Graph) -> bool,
    realize: impl Fn(&Graph) -> Result<R>,
    realize_graph: impl Fn(&R) -> Graph,
) -> Result<OracleOutcome<R>> {
    if g.n() > limit {
        return Err(Error::SizeLimit { n: g.n(), limit });
    }
    if g.is_complete() {
        return Ok(OracleOutcome::Computed(OracleResult { value: 0, witness: Vec::new() }));
    }
    let non_edges = g.non_edges();
    let q = non_edges.len();
    if q > 63 {
        return Err(Error::invalid(format!(
            "{q} non-edges exceed the supergraph search width"
        )));
    }
    let full: u64 = (1u64 << q) - 1;

    // Every supergraph the recognizer accepts, ordered by added-edge mask;
    // the mask's complement is the set of non-edges the layer kills.
    let mut candidates: Vec<(u64, u64)> = Vec::new();
    for mask in 0..=full {
        if recognize(&apply_added_edges(g, &non_edges, mask)) {
            candidates.push((mask, !mask & full));
        }
    }
    // Unreachable non-edge bits would make every depth fail below; the
    // suffix masks let the search notice immediately.
    let mut suffix_or = vec![0u64; candidates.len() + 1];
    for i in (0..candidates.len()).rev() {
        suffix_or[i] = suffix_or[i + 1] | candidates[i].1;
    }

    let mut chosen: Vec<usize> = Vec::new();
    for depth in 1..=max_b.min(q) {
        if search(&candidates, &suffix_or, 0, full, depth, &mut chosen) {
            let witness: Vec<R> = chosen
                .iter()
                .map(|&i| realize(&apply_added_edges(g, &non_edges, candidates[i].0)))
                .collect::<Result<_>>()?;
            let layer_graphs: Vec<Graph> = witness.iter().map(&realize_graph).collect();
            if edge_intersection(&layer_graphs)? != *g {
                return Err(Error::Internal(
                    "witness layers do not intersect to the input graph".into(),
                ));
            }
            return Ok(OracleOutcome::Computed(OracleResult { value: depth, witness }));
        }
    }
    Ok(OracleOutcome::Exceeded { max_b })
}

/// Depth-limited exact cover: pick `remaining` candidates with indices
/// `>= from` (ascending, so the first hit is the lexicographically least
/// witness) that together cover `uncovered`. Every pick must kill at least
/// one still-uncovered non-edge; minimum covers always admit such an order.
fn search(
    candidates: &[(u64, u64)],
    suffix_or: &[u64],
    from: usize,
    uncovered: u64,
    remaining: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if uncovered == 0 {
        return remaining == 0;
    }
    if remaining == 0 || uncovered & suffix_or[from] != uncovered {
        return false;
    }
    for i in from..candidates.len() {
        let coverage = candidates[i].1;
        if coverage & uncovered == 0 {
            continue;
        }
        chosen.push(i);
        if search(candidates, suffix_or, i + 1, uncovered & !coverage, remaining - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}
