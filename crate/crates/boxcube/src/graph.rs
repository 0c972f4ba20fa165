//! Simple undirected graphs on vertex ids `0..n`, plus the edge-set algebra
//! used throughout the converters: a cube or box representation realizes a
//! graph exactly when the graph equals the intersection of its per-dimension
//! interval graphs, so intersecting edge sets over a common vertex set is the
//! central operation here.

use crate::error::{Error, Result};

/// Undirected graph with sorted adjacency lists.
///
/// Vertices are `0..n`. Equality is edge-set equality on the same vertex
/// count, which is what every verification step in this crate compares.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { n, adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list. Out-of-range endpoints and self
    /// loops are rejected; duplicate edges are collapsed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
            m += row.len();
        }
        Ok(Graph { n, adj, m: m / 2 })
    }

    /// Builds a graph by evaluating `adjacent(u, v)` for every pair `u < v`.
    ///
    /// Adjacency rows come out sorted without any extra sorting pass, which
    /// matters for the dense instances the converters are timed on.
    pub fn from_pairwise<F: FnMut(usize, usize) -> bool>(n: usize, mut adjacent: F) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if adjacent(u, v) {
                    adj[u].push(v);
                    adj[v].push(u);
                    m += 1;
                }
            }
        }
        Graph { n, adj, m }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].binary_search(&v).is_ok()
    }

    /// Neighbors of `u` in ascending order.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .skip_while(move |&v| v < u)
                .map(move |v| (u, v))
        })
    }

    /// All non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Star `K_{1, n-1}`: vertex 0 is the center. Requires `n >= 1`.
    pub fn star(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("a star needs at least its center vertex"));
        }
        let edges: Vec<_> = (1..n).map(|leaf| (0, leaf)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        Graph::from_pairwise(n, |_, _| true)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).expect("consecutive ids are always valid")
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges)
    }

    /// Whether every pair of distinct vertices is adjacent. Graphs on zero
    /// or one vertex count as complete.
    pub fn is_complete(&self) -> bool {
        self.n < 2 || self.m == self.n * (self.n - 1) / 2
    }

    /// A copy with `count` extra isolated vertices appended after the
    /// existing ids; all original edges are preserved.
    pub fn add_isolated(&self, count: usize) -> Self {
        let mut adj = self.adj.clone();
        adj.extend(std::iter::repeat_with(Vec::new).take(count));
        Graph { n: self.n + count, adj, m: self.m }
    }

    /// Connectivity and per-component diameters (components ordered by their
    /// smallest vertex). Distances between different components are infinite
    /// and are reported through the `connected` flag instead of a number.
    pub fn diameter(&self) -> DiameterReport {
        let mut component = vec![usize::MAX; self.n];
        let mut order = Vec::new();
        let mut components = 0usize;
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            if component[start] != usize::MAX {
                continue;
            }
            let id = components;
            components += 1;
            order.push(Vec::new());
            component[start] = id;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                order[id].push(u);
                for &v in &self.adj[u] {
                    if component[v] == usize::MAX {
                        component[v] = id;
                        queue.push_back(v);
                    }
                }
            }
        }
        let mut component_diameters = Vec::with_capacity(components);
        let mut dist = vec![usize::MAX; self.n];
        for members in &order {
            let mut diameter = 0;
            for &source in members {
                for &u in members {
                    dist[u] = usize::MAX;
                }
                dist[source] = 0;
                queue.push_back(source);
                while let Some(u) = queue.pop_front() {
                    diameter = diameter.max(dist[u]);
                    for &v in &self.adj[u] {
                        if dist[v] == usize::MAX {
                            dist[v] = dist[u] + 1;
                            queue.push_back(v);
                        }
                    }
                }
            }
            component_diameters.push(diameter);
        }
        DiameterReport { connected: components <= 1, component_diameters }
    }
}

/// Result of [`Graph::diameter`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiameterReport {
    /// True when the graph has at most one connected component.
    pub connected: bool,
    /// Diameters of the components, ordered by each component's smallest
    /// vertex id.
    pub component_diameters: Vec<usize>,
}

impl DiameterReport {
    /// Largest component diameter, or 0 for an empty graph.
    pub fn max_component_diameter(&self) -> usize {
        self.component_diameters.iter().copied().max().unwrap_or(0)
    }
}

/// Intersection of the edge sets of `graphs`, which must be non-empty and
/// share one vertex count.
pub fn edge_intersection(graphs: &[Graph]) -> Result<Graph> {
    let first = graphs
        .first()
        .ok_or_else(|| Error::invalid("edge intersection needs at least one graph"))?;
    let n = first.n();
    if let Some(g) = graphs.iter().find(|g| g.n() != n) {
        return Err(Error::invalid(format!(
            "edge intersection over mismatched vertex counts {} and {}",
            n,
            g.n()
        )));
    }
    let mut result = first.clone();
    for g in &graphs[1..] {
        let mut m = 0;
        for u in 0..n {
            result.adj[u].retain(|&v| g.has_edge(u, v));
            m += result.adj[u].len();
        }
        result.m = m / 2;
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_connects_center_to_every_leaf() {
        let g = Graph::star(5).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert!(Graph::star(1).unwrap().edges().next().is_none());
        assert_eq!(Graph::star(2).unwrap().edge_count(), 1);
        assert!(Graph::star(0).is_err());
    }

    #[test]
    fn complete_path_and_cycle_have_expected_edges() {
        assert_eq!(Graph::complete(4).edge_count(), 6);
        assert!(Graph::complete(4).is_complete());
        let p = Graph::path(3);
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let c = Graph::cycle(4).unwrap();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert!(Graph::cycle(2).is_err());
    }

    #[test]
    fn from_edges_rejects_bad_input_and_dedups() {
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn intersection_with_itself_and_with_complete_is_identity() {
        let g = Graph::path(5);
        assert_eq!(edge_intersection(&[g.clone(), g.clone()]).unwrap(), g);
        assert_eq!(edge_intersection(&[g.clone(), Graph::complete(5)]).unwrap(), g);
        assert!(edge_intersection(&[]).is_err());
        assert!(edge_intersection(&[Graph::path(3), Graph::path(4)]).is_err());
    }

    #[test]
    fn intersecting_two_dense_overlays_recovers_a_padded_path() {
        // Two overlays of the path a-b-c padded with an isolated vertex d
        // (ids 0..3): their common edges are exactly the path's.
        let first = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3)]).unwrap();
        let second = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let both = edge_intersection(&[first, second]).unwrap();
        assert_eq!(both, Graph::path(3).add_isolated(1));
    }

    #[test]
    fn isolated_vertices_extend_without_touching_edges() {
        let g = Graph::path(3).add_isolated(1);
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(3), 0);
    }

    #[test]
    fn diameter_of_a_path_counts_hops() {
        let report = Graph::path(4).diameter();
        assert!(report.connected);
        assert_eq!(report.component_diameters, vec![3]);
        assert_eq!(report.max_component_diameter(), 3);
    }

    #[test]
    fn diameter_flags_disconnection_per_component() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3)]).unwrap();
        let report = g.diameter();
        assert!(!report.connected);
        assert_eq!(report.component_diameters, vec![1, 1, 0]);
    }

    #[test]
    fn non_edges_complement_edges() {
        let g = Graph::cycle(4).unwrap();
        assert_eq!(g.non_edges(), vec![(0, 2), (1, 3)]);
        assert!(Graph::complete(3).non_edges().is_empty());
    }

    #[test]
    fn empty_and_tiny_graphs_are_complete() {
        assert!(Graph::new(0).is_complete());
        assert!(Graph::new(1).is_complete());
        assert!(!Graph::new(2).is_complete());
    }
}
