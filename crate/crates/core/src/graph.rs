//! Small undirected simple graphs stored as one neighbor bitset per vertex.
//!
//! Vertex indices are 0-based internally. Text formats (edge lists, CLI
//! output) use 1-based labels; the conversion happens at the boundary in
//! [`crate::codec`].

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count; a neighborhood always fits one `u64`.
pub const MAX_VERTICES: usize = 63;

/// A set of vertex indices packed into one machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    /// `{0, 1, .., n-1}`.
    pub fn first(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0, |acc, v| acc | (1u64 << v)))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An unordered pair of distinct vertices, normalized so that `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "loops are not edges");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn touches(self, set: VertexSet) -> bool {
        set.contains(self.u) || set.contains(self.v)
    }

    /// Both endpoints lie in `set`.
    pub fn within(self, set: VertexSet) -> bool {
        set.contains(self.u) && set.contains(self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.u + 1, self.v + 1)
    }
}

/// Undirected simple graph on `0..vertex_count`.
///
/// Values are immutable once built; every "mutation" below returns a fresh
/// graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                needed: n,
                limit: MAX_VERTICES,
            });
        }
        Ok(Graph { adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.adj[v] = VertexSet::first(n).0 & !(1u64 << v);
        }
        Ok(g)
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<Edge> = (1..n).map(|v| Edge::new(v - 1, v)).collect();
        Graph::with_vertices(n, &edges)
    }

    /// Cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut edges: Vec<Edge> = (1..n).map(|v| Edge::new(v - 1, v)).collect();
        edges.push(Edge::new(0, n - 1));
        Graph::with_vertices(n, &edges)
    }

    /// Builds a graph from an edge list; the vertex count is one more than
    /// the largest endpoint.
    pub fn from_edges(edges: &[Edge]) -> Result<Self> {
        let n = edges.iter().map(|e| e.v + 1).max().unwrap_or(0);
        Graph::with_vertices(n, edges)
    }

    /// Builds a graph with exactly `n` vertices from an edge list.
    pub fn with_vertices(n: usize, edges: &[Edge]) -> Result<Self> {
        if let Some(e) = edges.iter().find(|e| e.v >= MAX_VERTICES) {
            return Err(Error::Capacity {
                needed: e.v + 1,
                limit: MAX_VERTICES,
            });
        }
        let mut g = Graph::empty(n)?;
        for &e in edges {
            if e.v >= n {
                return Err(Error::Domain(format!(
                    "edge {e} leaves the vertex range 1..={n}"
                )));
            }
            if g.has_edge(e.u, e.v) {
                return Err(Error::DuplicateEdge(e));
            }
            g.adj[e.u] |= 1u64 << e.v;
            g.adj[e.v] |= 1u64 << e.u;
        }
        Ok(g)
    }

    /// Builds a graph straight from adjacency rows, checking the invariants.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        if rows.len() > MAX_VERTICES {
            return Err(Error::Capacity {
                needed: rows.len(),
                limit: MAX_VERTICES,
            });
        }
        let g = Graph { adj: rows };
        g.validate()?;
        Ok(g)
    }

    /// Checks symmetry, irreflexivity and the vertex range.
    pub fn validate(&self) -> Result<()> {
        let n = self.adj.len();
        let all = VertexSet::first(n).0;
        for (v, &row) in self.adj.iter().enumerate() {
            if row & !all != 0 {
                return Err(Error::Domain(format!(
                    "vertex {} has a neighbor out of range",
                    v + 1
                )));
            }
            if row >> v & 1 == 1 {
                return Err(Error::Domain(format!(
                    "vertex {} is adjacent to itself",
                    v + 1
                )));
            }
            for u in VertexSet(row) {
                if self.adj[u] >> v & 1 == 0 {
                    return Err(Error::Domain(format!(
                        "adjacency is not symmetric at {}{}",
                        v + 1,
                        u + 1
                    )));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::first(self.adj.len())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1u64 << v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges in lexicographic `(u, v)` order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, &row) in self.adj.iter().enumerate() {
            let above = row & !((2u64 << u) - 1);
            out.extend(VertexSet(above).iter().map(|v| Edge { u, v }));
        }
        out
    }

    /// `true` when `set` induces a complete subgraph.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| {
            set.difference(VertexSet::singleton(v))
                .is_subset(self.neighbors(v))
        })
    }

    /// Vertices with no neighbors.
    pub fn isolated(&self) -> VertexSet {
        self.adj
            .iter()
            .enumerate()
            .filter(|(_, &r)| r == 0)
            .map(|(v, _)| v)
            .collect()
    }

    /// First vertex whose degree exceeds `r`, if any.
    pub fn degree_violation(&self, r: usize) -> Option<usize> {
        (0..self.vertex_count()).find(|&v| self.degree(v) > r)
    }

    /// Copy with `e` added. Adding an existing edge is an error.
    pub fn with_edge(&self, e: Edge) -> Result<Self> {
        if e.v >= self.vertex_count() {
            return Err(Error::Domain(format!("edge {e} leaves the vertex range")));
        }
        if self.has_edge(e.u, e.v) {
            return Err(Error::DuplicateEdge(e));
        }
        let mut g = self.clone();
        g.adj[e.u] |= 1u64 << e.v;
        g.adj[e.v] |= 1u64 << e.u;
        Ok(g)
    }

    /// Copy with `e` removed (no-op when absent).
    pub fn without_edge(&self, e: Edge) -> Self {
        let mut g = self.clone();
        g.adj[e.u] &= !(1u64 << e.v);
        g.adj[e.v] &= !(1u64 << e.u);
        g
    }

    /// Copy with one extra isolated vertex.
    pub fn with_vertex(&self) -> Result<Self> {
        if self.vertex_count() >= MAX_VERTICES {
            return Err(Error::Capacity {
                needed: self.vertex_count() + 1,
                limit: MAX_VERTICES,
            });
        }
        let mut g = self.clone();
        g.adj.push(0);
        Ok(g)
    }

    /// Subgraph induced by `keep`, relabelled by rank within `keep`.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let keep = keep.intersection(self.vertices());
        let verts: Vec<usize> = keep.iter().collect();
        let mut rank = [0usize; 64];
        for (i, &v) in verts.iter().enumerate() {
            rank[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| {
                VertexSet(self.adj[v] & keep.0)
                    .iter()
                    .fold(0u64, |acc, u| acc | 1u64 << rank[u])
            })
            .collect();
        Graph { adj }
    }

    /// Removes isolated vertices, keeping the relative order of the rest.
    pub fn strip_isolated(&self) -> Graph {
        self.induced(self.vertices().difference(self.isolated()))
    }

    /// Applies a relabelling: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.vertex_count();
        assert_eq!(perm.len(), n);
        let mut adj = vec![0u64; n];
        for v in 0..n {
            adj[perm[v]] = self
                .neighbors(v)
                .iter()
                .fold(0, |acc, u| acc | 1u64 << perm[u]);
        }
        Graph { adj }
    }

    /// `N(K)`: common neighbors of every vertex of `k`, excluding `k`.
    pub fn common_neighborhood(&self, k: VertexSet) -> Result<VertexSet> {
        if k.is_empty() {
            return Err(Error::Domain("common neighborhood of the empty set".into()));
        }
        if !k.is_subset(self.vertices()) {
            return Err(Error::Domain(format!("{k:?} is not a vertex subset")));
        }
        let all = k.iter().fold(self.vertices().0, |acc, v| acc & self.adj[v]);
        Ok(VertexSet(all).difference(k))
    }

    /// Graph on `s` (relabelled by rank within `s`) whose edges are exactly
    /// the non-edges of `self` inside `s`.
    pub fn complement_within(&self, s: VertexSet) -> Result<Graph> {
        if !s.is_subset(self.vertices()) {
            return Err(Error::Domain(format!("{s:?} is not a vertex subset")));
        }
        let sub = self.induced(s);
        let k = s.len();
        let full = VertexSet::first(k).0;
        let adj = (0..k).map(|v| !sub.adj[v] & full & !(1u64 << v)).collect();
        Ok(Graph { adj })
    }

    /// Vertex-disjoint union; `other`'s vertices follow `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.vertex_count();
        let total = n + other.vertex_count();
        if total > MAX_VERTICES {
            return Err(Error::Capacity {
                needed: total,
                limit: MAX_VERTICES,
            });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << n));
        Ok(Graph { adj })
    }

    /// Connected components (isolated vertices are singleton parts), ordered
    /// by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = left.min() {
            let comp = self.reach(start, left);
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = frontier.iter().fold(0u64, |acc, v| acc | self.adj[v]);
            frontier = VertexSet(next).intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected after ignoring isolated vertices (the empty graph counts).
    pub fn is_connected(&self) -> bool {
        let active = self.vertices().difference(self.isolated());
        match active.min() {
            None => true,
            Some(v) => self.reach(v, active) == active,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, [", self.vertex_count())?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}-{}", e.u + 1, e.v + 1)?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
pub(crate) fn ext(pairs: &[(usize, usize)]) -> Graph {
    let edges: Vec<Edge> = pairs
        .iter()
        .map(|&(a, b)| Edge::new(a - 1, b - 1))
        .collect();
    Graph::from_edges(&edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(labels: &[usize]) -> VertexSet {
        labels.iter().map(|&v| v - 1).collect()
    }

    fn c5() -> Graph {
        ext(&[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    }

    #[test]
    fn from_edges_examples() {
        let g = Graph::from_edges(&[]).unwrap();
        assert_eq!(g.vertex_count(), 0);
        let k3 = ext(&[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(k3, Graph::complete(3).unwrap());
        let k4 = ext(&[(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(k4.max_degree(), 3);
        assert_eq!(k4, Graph::complete(4).unwrap());
    }

    #[test]
    fn from_edges_rejects_duplicates_and_overflow() {
        let e = Edge::new(0, 1);
        assert!(matches!(
            Graph::from_edges(&[e, Edge::new(1, 0)]),
            Err(Error::DuplicateEdge(_))
        ));
        assert!(matches!(
            Graph::from_edges(&[Edge::new(0, 63)]),
            Err(Error::Capacity { .. })
        ));
        assert!(Graph::from_edges(&[Edge::new(0, 62)]).is_ok());
    }

    #[test]
    fn common_neighborhood_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.common_neighborhood(vs(&[1])).unwrap(), vs(&[2, 3, 4]));
        assert_eq!(k4.common_neighborhood(vs(&[1, 2])).unwrap(), vs(&[3, 4]));
        assert_eq!(
            c5().common_neighborhood(vs(&[1, 2])).unwrap(),
            VertexSet::EMPTY
        );
        assert!(k4.common_neighborhood(VertexSet::EMPTY).is_err());
    }

    #[test]
    fn complement_within_examples() {
        let k4 = Graph::complete(4).unwrap();
        let r = k4.complement_within(vs(&[1, 2, 3])).unwrap();
        assert_eq!((r.vertex_count(), r.edge_count()), (3, 0));
        let r = c5().complement_within(vs(&[1, 2, 3])).unwrap();
        assert_eq!(r.edges(), vec![Edge::new(0, 2)]);
        let r = Graph::empty(3)
            .unwrap()
            .complement_within(vs(&[1, 2, 3]))
            .unwrap();
        assert_eq!(r, Graph::complete(3).unwrap());
    }

    #[test]
    fn disjoint_union_examples() {
        let k3 = Graph::complete(3).unwrap();
        let two = k3.disjoint_union(&k3).unwrap();
        assert_eq!((two.vertex_count(), two.edge_count()), (6, 6));
        assert_eq!(k3.disjoint_union(&Graph::empty(0).unwrap()).unwrap(), k3);
        let g = Graph::complete(4)
            .unwrap()
            .disjoint_union(&Graph::complete(2).unwrap())
            .unwrap();
        assert_eq!(g.edge_count(), 7);
        let big = Graph::empty(40).unwrap();
        assert!(matches!(
            big.disjoint_union(&big),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn components_examples() {
        let k3 = Graph::complete(3).unwrap();
        let sizes = |g: &Graph| g.components().iter().map(|c| c.len()).collect::<Vec<_>>();
        assert_eq!(sizes(&k3.disjoint_union(&k3).unwrap()), vec![3, 3]);
        assert_eq!(sizes(&c5()), vec![5]);
        let g = Graph::complete(4)
            .unwrap()
            .disjoint_union(&Graph::complete(2).unwrap())
            .unwrap();
        assert_eq!(sizes(&g), vec![4, 2]);
        assert_eq!(sizes(&Graph::empty(2).unwrap()), vec![1, 1]);
    }

    #[test]
    fn strip_isolated_and_induced() {
        let g = Graph::with_vertices(5, &[Edge::new(1, 3)]).unwrap();
        let s = g.strip_isolated();
        assert_eq!(s, Graph::complete(2).unwrap());
        assert!(g.is_connected());
        assert!(!Graph::path(2)
            .unwrap()
            .disjoint_union(&Graph::path(2).unwrap())
            .unwrap()
            .is_connected());
    }

    #[test]
    fn validate_catches_asymmetry() {
        assert!(Graph::from_rows(vec![0b10, 0]).is_err());
        assert!(Graph::from_rows(vec![0b1]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }
}
