//! Brute-force reference implementations shared by the integration tests.
//! None of them use the canonical labeling, the catalog, or the clique
//! counter of the library.

#![allow(dead_code)]

use std::collections::HashMap;

use cliquebound::{Edge, Graph};

/// `counts[t]` = number of `t`-cliques, by scanning every vertex subset.
pub fn brute_profile(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count();
    assert!(n <= 20, "subset scan is exponential");
    let mut counts = vec![0u64; n + 1];
    for mask in 1u64..(1u64 << n) {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let clique = vs
            .iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)));
        if clique {
            counts[vs.len()] += 1;
        }
    }
    counts
}

pub fn brute_k(g: &Graph) -> u64 {
    brute_profile(g).iter().skip(2).sum()
}

pub fn brute_kt(g: &Graph, t: usize) -> u64 {
    brute_profile(g).get(t).copied().unwrap_or(0)
}

/// Fixed loss by scanning all vertex subsets for independent sets.
pub fn brute_fixed_loss(red: &Graph) -> u64 {
    let n = red.vertex_count();
    let mut total = 0;
    for mask in 1u64..(1u64 << n) {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let independent = vs
            .iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| !red.has_edge(a, b)));
        if independent {
            let d = vs.iter().map(|&v| red.degree(v)).min().unwrap();
            total += (1u64 << d) - 1;
        }
    }
    total
}

/// Isomorphism test by backtracking over degree-compatible vertex maps.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    let order: Vec<usize> = {
        let mut o: Vec<usize> = (0..n).collect();
        // Map high-degree vertices first.
        o.sort_by_key(|&v| std::cmp::Reverse(a.degree(v)));
        o
    };
    {
        let (mut x, mut y) = (da.clone(), db.clone());
        x.sort_unstable();
        y.sort_unstable();
        if x != y {
            return false;
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        order: &[usize],
        a: &Graph,
        b: &Graph,
        da: &[usize],
        db: &[usize],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for w in 0..b.vertex_count() {
            if used[w] || da[v] != db[w] {
                continue;
            }
            let consistent = order[..i]
                .iter()
                .all(|&u| a.has_edge(u, v) == b.has_edge(map[u], w));
            if consistent {
                map[v] = w;
                used[w] = true;
                if go(i + 1, order, a, b, da, db, map, used) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }
    go(0, &order, a, b, &da, &db, &mut map, &mut used)
}

/// Invariant used to bucket graphs before isomorphism tests.
fn invariant(g: &Graph) -> (usize, Vec<usize>, Vec<u64>) {
    let mut degs: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    degs.sort_unstable();
    (g.vertex_count(), degs, brute_profile(g))
}

/// Isomorphism classes kept in invariant buckets.
#[derive(Default)]
pub struct ClassSet {
    buckets: HashMap<(usize, Vec<usize>, Vec<u64>), Vec<Graph>>,
    order: Vec<Graph>,
}

impl ClassSet {
    /// Adds `g` unless an isomorphic graph is present; returns whether it
    /// was new.
    pub fn insert(&mut self, g: Graph) -> bool {
        let bucket = self.buckets.entry(invariant(&g)).or_default();
        if bucket.iter().any(|h| isomorphic(h, &g)) {
            return false;
        }
        bucket.push(g.clone());
        self.order.push(g);
        true
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.order
    }
}

/// Classes of `G(m, r)` (no isolated vertices) for `m = 1..=m_max`, built by
/// adding one edge in every possible way to every class of the previous
/// level: between two existing vertices, from an existing vertex to a new
/// one, or as a new `K_2` component.
pub fn closure_classes(m_max: usize, r: usize) -> Vec<ClassSet> {
    let mut levels = vec![ClassSet::default()];
    let mut first = ClassSet::default();
    if r >= 1 && m_max >= 1 {
        first.insert(Graph::complete(2).unwrap());
    }
    levels.push(first);
    for _ in 2..=m_max {
        let mut next = ClassSet::default();
        for g in levels.last().unwrap().graphs() {
            let n = g.vertex_count();
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) && g.degree(u) < r && g.degree(v) < r {
                        next.insert(g.with_edge(Edge::new(u, v)).unwrap());
                    }
                }
                if g.degree(u) < r {
                    next.insert(g.with_vertex().unwrap().with_edge(Edge::new(u, n)).unwrap());
                }
            }
            next.insert(g.disjoint_union(&Graph::complete(2).unwrap()).unwrap());
        }
        levels.push(next);
    }
    levels
}

/// Labeled graphs with `m` edges, `Δ ≤ r` and no isolated vertices, in
/// which labels appear in order: scanning the lexicographically sorted
/// edge list, each new vertex gets the next unused label. Breadth-first
/// labelings have this form, so every isomorphism class occurs.
pub fn for_each_ordered_labeling(m: usize, r: usize, mut f: impl FnMut(&Graph)) {
    fn go(
        m: usize,
        r: usize,
        edges: &mut Vec<Edge>,
        deg: &mut Vec<usize>,
        f: &mut impl FnMut(&Graph),
    ) {
        if edges.len() == m {
            f(&Graph::from_edges(edges).unwrap());
            return;
        }
        let used = deg.len();
        let last = edges.last().copied();
        for u in 0..=used.min(2 * m) {
            for v in u + 1..=used + 1 {
                if u == used && v != used + 1 {
                    continue;
                }
                if u < used && v > used {
                    continue;
                }
                if let Some(l) = last {
                    if (u, v) <= (l.u, l.v) {
                        continue;
                    }
                }
                let du = deg.get(u).copied().unwrap_or(0);
                let dv = deg.get(v).copied().unwrap_or(0);
                if du >= r || dv >= r {
                    continue;
                }
                let before = deg.len();
                while deg.len() <= v {
                    deg.push(0);
                }
                deg[u] += 1;
                deg[v] += 1;
                edges.push(Edge::new(u, v));
                go(m, r, edges, deg, f);
                edges.pop();
                deg[u] -= 1;
                deg[v] -= 1;
                deg.truncate(before);
            }
        }
    }
    go(m, r, &mut Vec::new(), &mut Vec::new(), &mut f);
}
