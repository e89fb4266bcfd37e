//! Canonical labeling by partition refinement and backtracking.
//!
//! Each connected component is labelled separately: the search individualizes
//! vertices of the first smallest non-singleton cell, refines to an equitable
//! partition, and keeps the leaf whose relabelled adjacency rows are
//! lexicographically least. Automorphisms found at equal leaves prune
//! branches whose individualized prefix they fix.
//!
//! The certificate of a whole graph is the sorted concatenation of its
//! component certificates, so a disjoint union can be certified from its
//! parts without building it.

use std::fmt;

use crate::graph::{Edge, Graph, VertexSet};

/// Byte string identifying a graph up to isomorphism.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate(Vec<u8>);

impl Certificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Certificate of a disjoint union given its component certificates.
    pub fn from_components(mut parts: Vec<ComponentCert>) -> Certificate {
        parts.sort_unstable();
        let mut bytes = Vec::with_capacity(parts.iter().map(|p| p.0.len()).sum());
        for p in parts {
            bytes.extend_from_slice(&p.0);
        }
        Certificate(bytes)
    }

    /// Rebuilds the canonical representative this certificate encodes.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(0).expect("empty graph");
        let mut rest = &self.0[..];
        while let Some((&n, tail)) = rest.split_first() {
            let n = n as usize;
            let rows = tail[..8 * n]
                .chunks_exact(8)
                .map(|c| u64::from_le_bytes(c.try_into().unwrap()))
                .collect();
            let comp = Graph::from_rows(rows).expect("certificate rows are valid");
            g = g.disjoint_union(&comp).expect("certificate fits capacity");
            rest = &tail[8 * n..];
        }
        g
    }
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Certificate({})",
            crate::codec::to_graph6(&self.to_graph())
        )
    }
}

/// Certificate of a single connected component: vertex count followed by
/// the canonically relabelled adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ComponentCert(Vec<u8>);

impl ComponentCert {
    pub fn into_certificate(self) -> Certificate {
        Certificate(self.0)
    }
}

/// Canonical labeling of a graph treated as one piece (it need not be
/// connected, but the search is only efficient per component).
pub struct Labeling {
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    rows: Vec<u64>,
}

impl Labeling {
    /// `position[v]`: canonical position of vertex `v`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn certificate(&self) -> ComponentCert {
        let mut bytes = Vec::with_capacity(1 + 8 * self.rows.len());
        bytes.push(self.rows.len() as u8);
        for r in &self.rows {
            bytes.extend_from_slice(&r.to_le_bytes());
        }
        ComponentCert(bytes)
    }

    pub fn canonical_graph(&self) -> Graph {
        Graph::from_rows(self.rows.clone()).expect("relabelled rows are valid")
    }
}

/// Canonical form of `g`: equal certificates iff isomorphic graphs.
/// Isolated vertices count as one-vertex components.
pub fn canonical_form(g: &Graph) -> Certificate {
    let comps = g.components();
    if comps.len() == 1 {
        return labeling(g).certificate().into_certificate();
    }
    Certificate::from_components(
        comps
            .into_iter()
            .map(|c| labeling(&g.induced(c)).certificate())
            .collect(),
    )
}

/// Canonical form after dropping isolated vertices.
pub fn canonical_form_stripped(g: &Graph) -> Certificate {
    canonical_form(&g.strip_isolated())
}

/// Canonical relabelling of `g` as a single piece.
pub fn labeling(g: &Graph) -> Labeling {
    let n = g.vertex_count();
    if n == 0 {
        return Labeling {
            order: Vec::new(),
            rows: Vec::new(),
        };
    }
    let mut search = Search {
        g,
        best: None,
        generators: Vec::new(),
    };
    let cells = initial_partition(g);
    search.descend(cells, &mut Vec::new());
    let (rows, order) = search.best.expect("search reaches a leaf");
    Labeling { order, rows }
}

/// Edge of `g` mapped to canonical positions.
pub fn relabel_edge(pos: &[usize], e: Edge) -> Edge {
    Edge::new(pos[e.u], pos[e.v])
}

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    /// Automorphisms as vertex maps.
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Cells, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        if cells.len() == self.g.vertex_count() {
            self.leaf(&cells);
            return;
        }
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a non-singleton cell");
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &candidates {
            if self.same_orbit_as_explored(prefix, &explored, v) {
                continue;
            }
            let mut next = cells.clone();
            let rest: Vec<usize> = next[target].iter().copied().filter(|&w| w != v).collect();
            next[target] = vec![v];
            next.insert(target + 1, rest);
            prefix.push(v);
            self.descend(next, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    /// Is `v` in the orbit of an explored vertex under the automorphisms
    /// found so far that fix `prefix` pointwise?
    fn same_orbit_as_explored(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        if explored.is_empty() || self.generators.is_empty() {
            return false;
        }
        let n = self.g.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gen in &self.generators {
            if prefix.iter().any(|&p| gen[p] != p) {
                continue;
            }
            for (x, &y) in gen.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn leaf(&mut self, cells: &Cells) {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let n = order.len();
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let rows: Vec<u64> = order
            .iter()
            .map(|&v| {
                self.g
                    .neighbors(v)
                    .iter()
                    .fold(0u64, |acc, u| acc | 1u64 << pos[u])
            })
            .collect();
        match &self.best {
            None => self.best = Some((rows, order)),
            Some((best_rows, best_order)) => match rows.cmp(best_rows) {
                std::cmp::Ordering::Less => self.best = Some((rows, order)),
                std::cmp::Ordering::Equal => {
                    // order[i] ↦ best_order[i] preserves adjacency.
                    let mut gen = vec![0usize; n];
                    for i in 0..n {
                        gen[order[i]] = best_order[i];
                    }
                    if gen.iter().enumerate().any(|(x, &y)| x != y) {
                        self.generators.push(gen);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }
}

fn initial_partition(g: &Graph) -> Cells {
    let mut by_degree: Vec<(usize, usize)> =
        (0..g.vertex_count()).map(|v| (g.degree(v), v)).collect();
    by_degree.sort_unstable();
    let mut cells: Cells = Vec::new();
    let mut last = usize::MAX;
    for (d, v) in by_degree {
        if d != last {
            cells.push(Vec::new());
            last = d;
        }
        cells.last_mut().unwrap().push(v);
    }
    cells
}

/// Splits cells by neighbor counts into every cell until the ordered
/// partition is equitable. The split order depends only on the counts, so
/// refinement commutes with relabelling.
fn refine(g: &Graph, cells: &mut Cells) {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| c.iter().copied().collect()).collect();
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let nb = g.neighbors(v);
                    (
                        masks
                            .iter()
                            .map(|m| nb.intersection(*m).len() as u8)
                            .collect(),
                        v,
                    )
                })
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let done = next.len() == cells.len();
        *cells = next;
        if done {
            return;
        }
    }
}
