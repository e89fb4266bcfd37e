//! Isomorph-free enumeration of `G(m, r)` and the extremal search.
//!
//! Connected graphs are generated by canonical augmentation on edges: a
//! child is kept iff deleting its canonical edge (the removable edge whose
//! canonical positions are largest) gives back the parent's class. An edge
//! is removable when the graph stays connected once an endpoint left
//! isolated is dropped. Every graph without isolated vertices is then a
//! multiset of connected classes, which are combined in non-increasing
//! order so each class of `G(m, r)` appears once.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{labeling, relabel_edge, Certificate, ComponentCert};
use crate::cliques::{clique_profile, CliqueProfile};
use crate::codec::to_graph6;
use crate::colex::{extremal_family, g as g_value, gt};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, MAX_VERTICES};

/// Class-count estimate above which enumeration is refused without `force`.
pub const DESK_LIMIT: f64 = 1e8;

#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub m: usize,
    pub r: usize,
    /// Maximize `k_t` instead of `k`.
    pub t_filter: Option<usize>,
    pub threads: usize,
    pub connected_only: bool,
    /// Skip the desk-scale guardrail.
    pub force: bool,
}

impl SearchSpec {
    pub fn new(m: usize, r: usize) -> Self {
        SearchSpec {
            m,
            r,
            t_filter: None,
            threads: 1,
            connected_only: false,
            force: false,
        }
    }

    pub fn threads(mut self, n: usize) -> Self {
        self.threads = n.max(1);
        self
    }

    pub fn connected_only(mut self, yes: bool) -> Self {
        self.connected_only = yes;
        self
    }

    pub fn force(mut self, yes: bool) -> Self {
        self.force = yes;
        self
    }

    pub fn t_filter(mut self, t: Option<usize>) -> Self {
        self.t_filter = t;
        self
    }

    fn check(&self) -> Result<()> {
        if self.m == 0 || self.r == 0 {
            return Err(Error::Domain(format!(
                "need m ≥ 1 and r ≥ 1, got m={} r={}",
                self.m, self.r
            )));
        }
        if let Some(t) = self.t_filter {
            if t < 2 {
                return Err(Error::Domain(format!(
                    "clique size must be at least 2, got {t}"
                )));
            }
        }
        if 2 * self.m > MAX_VERTICES && self.r == 1 && !self.connected_only {
            // mK_2 needs 2m vertices.
            return Err(Error::Capacity {
                needed: 2 * self.m,
                limit: MAX_VERTICES,
            });
        }
        if !self.force {
            let estimate = estimate_classes(self.m, self.r);
            if estimate > DESK_LIMIT {
                return Err(Error::TooLarge {
                    m: self.m,
                    r: self.r,
                    estimate,
                    limit: DESK_LIMIT,
                });
            }
        }
        Ok(())
    }

    fn pool(&self) -> rayon::ThreadPool {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .expect("thread pool")
    }
}

/// Validates `spec`, including the desk-scale guardrail.
pub fn check_spec(spec: &SearchSpec) -> Result<()> {
    spec.check()
}

/// Graphs with `m` edges and no isolated vertices, all degrees allowed,
/// for `m = 1..=18`; used as an upper estimate when `r ≥ 3`.
const UNBOUNDED_CLASSES: [f64; 18] = [
    1.0,
    2.0,
    5.0,
    11.0,
    26.0,
    68.0,
    177.0,
    497.0,
    1476.0,
    4613.0,
    15216.0,
    52944.0,
    193367.0,
    740226.0,
    2960520.0,
    12334829.0,
    53394755.0,
    239544624.0,
];

/// Rough number of isomorphism classes in `G(m, r)`.
pub fn estimate_classes(m: usize, r: usize) -> f64 {
    match r {
        0 => 0.0,
        1 => 1.0,
        // Unions of paths and cycles: at most two connected classes per
        // edge count, so two-coloured partitions bound the count.
        2 => (std::f64::consts::PI * (4.0 * m as f64 / 3.0).sqrt()).exp(),
        _ if m == 0 => 1.0,
        _ if m <= UNBOUNDED_CLASSES.len() => UNBOUNDED_CLASSES[m - 1],
        _ => {
            UNBOUNDED_CLASSES[UNBOUNDED_CLASSES.len() - 1]
                * 4.5f64.powi((m - UNBOUNDED_CLASSES.len()) as i32)
        }
    }
}

/// A connected class with cached data.
#[derive(Clone, Debug)]
pub struct Entry {
    pub graph: Graph,
    pub cert: ComponentCert,
    pub profile: CliqueProfile,
}

impl Entry {
    fn new(graph: Graph) -> Self {
        let lab = labeling(&graph);
        let cert = lab.certificate();
        let graph = lab.canonical_graph();
        let profile = clique_profile(&graph);
        Entry {
            graph,
            cert,
            profile,
        }
    }
}

/// Connected graphs with at most `max_edges` edges and maximum degree at
/// most `r`, one per isomorphism class, grouped by edge count.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub r: usize,
    /// `levels[k]`: classes with exactly `k` edges (`levels[0]` is empty).
    levels: Vec<Vec<Entry>>,
}

impl Catalog {
    pub fn build(max_edges: usize, r: usize, threads: usize) -> Result<Catalog> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build()
            .expect("thread pool");
        pool.install(|| Catalog::build_here(max_edges, r))
    }

    fn build_here(max_edges: usize, r: usize) -> Result<Catalog> {
        let mut levels: Vec<Vec<Entry>> = vec![Vec::new()];
        if max_edges == 0 || r == 0 {
            return Ok(Catalog { r, levels });
        }
        levels.push(vec![Entry::new(Graph::complete(2)?)]);
        for _ in 1..max_edges {
            let prev = levels.last().unwrap();
            let next: Vec<Entry> = prev.par_iter().flat_map_iter(|p| children(p, r)).collect();
            levels.push(next);
        }
        Ok(Catalog { r, levels })
    }

    pub fn max_edges(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, k: usize) -> &[Entry] {
        self.levels.get(k).map(|v| &v[..]).unwrap_or(&[])
    }

    pub fn connected_count(&self, k: usize) -> usize {
        self.level(k).len()
    }

    /// Calls `f` with the parts of every multiset of connected classes whose
    /// edge counts sum to `m`; parts are `(edges, index)` in non-increasing
    /// order.
    pub fn for_each_multiset<F: FnMut(&[(usize, usize)])>(&self, m: usize, mut f: F) {
        assert!(m <= self.max_edges());
        let mut parts = Vec::new();
        self.multisets_below(m, (m, usize::MAX), &mut parts, &mut f);
    }

    /// Multisets whose first part is exactly `first`.
    fn for_each_multiset_from<F: FnMut(&[(usize, usize)])>(
        &self,
        m: usize,
        first: (usize, usize),
        mut f: F,
    ) {
        let mut parts = vec![first];
        self.multisets_below(m - first.0, first, &mut parts, &mut f);
    }

    fn multisets_below<F: FnMut(&[(usize, usize)])>(
        &self,
        remaining: usize,
        cap: (usize, usize),
        parts: &mut Vec<(usize, usize)>,
        f: &mut F,
    ) {
        if remaining == 0 {
            f(parts);
            return;
        }
        for k in (1..=remaining.min(cap.0)).rev() {
            let n = self.level(k).len();
            if n == 0 {
                continue;
            }
            let top = if k == cap.0 { cap.1.min(n - 1) } else { n - 1 };
            for idx in (0..=top).rev() {
                parts.push((k, idx));
                self.multisets_below(remaining - k, (k, idx), parts, f);
                parts.pop();
            }
        }
    }

    pub fn entry(&self, part: (usize, usize)) -> &Entry {
        &self.levels[part.0][part.1]
    }

    /// Disjoint union of the parts, in order.
    pub fn assemble(&self, parts: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(0)?;
        for &p in parts {
            g = g.disjoint_union(&self.entry(p).graph)?;
        }
        Ok(g)
    }

    pub fn certificate(&self, parts: &[(usize, usize)]) -> Certificate {
        Certificate::from_components(parts.iter().map(|&p| self.entry(p).cert.clone()).collect())
    }

    pub fn profile(&self, parts: &[(usize, usize)]) -> CliqueProfile {
        parts.iter().fold(CliqueProfile::default(), |acc, &p| {
            acc.add(&self.entry(p).profile)
        })
    }
}

/// Accepted children of a connected parent.
fn children(parent: &Entry, r: usize) -> Vec<Entry> {
    let g = &parent.graph;
    let n = g.vertex_count();
    let mut additions: Vec<(Graph, Edge)> = Vec::new();
    for u in 0..n {
        if g.degree(u) >= r {
            continue;
        }
        for v in u + 1..n {
            if g.degree(v) < r && !g.has_edge(u, v) {
                let e = Edge::new(u, v);
                additions.push((g.with_edge(e).expect("non-edge"), e));
            }
        }
        if n < MAX_VERTICES {
            let e = Edge::new(u, n);
            let grown = g
                .with_vertex()
                .expect("capacity checked")
                .with_edge(e)
                .expect("fresh vertex");
            additions.push((grown, e));
        }
    }

    let mut seen: HashSet<ComponentCert> = HashSet::new();
    let mut out = Vec::new();
    for (child, added) in additions {
        let lab = labeling(&child);
        let cert = lab.certificate();
        if seen.contains(&cert) {
            continue;
        }
        let pos = lab.positions();
        let deletion = canonical_deletion(&child, &pos);
        let accept = deletion == added || {
            let back = child.without_edge(deletion).strip_isolated();
            labeling(&back).certificate() == parent.cert
        };
        if accept {
            seen.insert(cert.clone());
            let graph = lab.canonical_graph();
            let profile = clique_profile(&graph);
            out.push(Entry {
                graph,
                cert,
                profile,
            });
        }
    }
    out
}

/// Removable edge with the largest canonical position `(max, min)`.
fn canonical_deletion(g: &Graph, pos: &[usize]) -> Edge {
    let mut best: Option<(Edge, Edge)> = None;
    for e in g.edges() {
        let ce = relabel_edge(pos, e);
        if best.is_some_and(|(b, _)| (ce.v, ce.u) <= (b.v, b.u)) {
            continue;
        }
        if is_removable(g, e) {
            best = Some((ce, e));
        }
    }
    best.expect("a connected graph with an edge has a removable edge")
        .1
}

fn is_removable(g: &Graph, e: Edge) -> bool {
    g.degree(e.u) == 1 || g.degree(e.v) == 1 || g.without_edge(e).is_connected()
}

/// Every graph of `G(m, r)` (or its connected members), one per
/// isomorphism class, isolated vertices excluded.
pub fn enumerate_graphs(spec: &SearchSpec) -> Result<Vec<Graph>> {
    spec.check()?;
    let catalog = Catalog::build(spec.m, spec.r, spec.threads)?;
    if spec.connected_only {
        return Ok(catalog
            .level(spec.m)
            .iter()
            .map(|e| e.graph.clone())
            .collect());
    }
    let mut out = Vec::new();
    let mut err = None;
    catalog.for_each_multiset(spec.m, |parts| match catalog.assemble(parts) {
        Ok(g) => out.push(g),
        Err(e) => err = Some(e),
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Result of an extremal search.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub m: usize,
    pub r: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    /// Maximum of `k` (or `k_t`) over the enumerated classes.
    pub f: u64,
    /// The same quantity for `aK_{r+1} ∪ C(b)`.
    pub g: u64,
    pub agrees: bool,
    pub connected_only: bool,
    pub graphs_enumerated: u64,
    /// Canonical graph6 of every maximizer, sorted by certificate.
    pub argmax: Vec<String>,
    /// Canonical graph6 of the predicted extremal graphs.
    pub extremal: Vec<String>,
    #[serde(skip)]
    pub argmax_certificates: Vec<Certificate>,
}

struct Partial {
    best: u64,
    argmax: Vec<Certificate>,
    count: u64,
}

impl Partial {
    fn empty() -> Self {
        Partial {
            best: 0,
            argmax: Vec::new(),
            count: 0,
        }
    }

    fn offer(&mut self, value: u64, cert: impl FnOnce() -> Certificate) {
        self.count += 1;
        if value > self.best || self.count == 1 {
            self.best = value;
            self.argmax.clear();
            self.argmax.push(cert());
        } else if value == self.best {
            self.argmax.push(cert());
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        if other.count == 0 {
            return self;
        }
        if self.count == 0 || other.best > self.best {
            return Partial {
                count: self.count + other.count,
                ..other
            };
        }
        if other.best == self.best {
            self.argmax.extend(other.argmax);
        }
        self.count += other.count;
        self
    }
}

fn graph6_of(cert: &Certificate) -> String {
    to_graph6(&cert.to_graph())
}

/// Maximizes `k` (or `k_t` when `t_filter` is set) over the class.
pub fn f_max(spec: &SearchSpec) -> Result<SearchReport> {
    spec.check()?;
    let catalog = Catalog::build(spec.m, spec.r, spec.threads)?;
    Ok(f_max_with(&catalog, spec))
}

/// As [`f_max`], reusing a catalog built for at least `spec.m` edges.
pub fn f_max_with(catalog: &Catalog, spec: &SearchSpec) -> SearchReport {
    assert_eq!(catalog.r, spec.r);
    let value = |p: &CliqueProfile| match spec.t_filter {
        Some(t) => p.get(t),
        None => p.total(),
    };
    let m = spec.m;
    let merged = if spec.connected_only {
        let mut part = Partial::empty();
        for e in catalog.level(m) {
            part.offer(value(&e.profile), || e.cert.clone().into_certificate());
        }
        part
    } else {
        let firsts: Vec<(usize, usize)> = (1..=m)
            .flat_map(|k| (0..catalog.level(k).len()).map(move |i| (k, i)))
            .collect();
        let run = || {
            firsts
                .par_iter()
                .map(|&first| {
                    let mut part = Partial::empty();
                    catalog.for_each_multiset_from(m, first, |parts| {
                        part.offer(value(&catalog.profile(parts)), || {
                            catalog.certificate(parts)
                        });
                    });
                    part
                })
                .collect::<Vec<_>>()
                .into_iter()
                .fold(Partial::empty(), Partial::merge)
        };
        spec.pool().install(run)
    };

    let mut argmax = merged.argmax;
    argmax.sort();
    argmax.dedup();
    let family = extremal_family(m, spec.r);
    let mut predicted: Vec<Certificate> = family.iter().map(|a| a.certificate()).collect();
    predicted.sort();
    let g = match spec.t_filter {
        Some(t) => gt(m, spec.r, t),
        None => g_value(m, spec.r),
    };
    let agrees = match (spec.t_filter, spec.connected_only) {
        (None, false) => merged.best == g && argmax == predicted,
        _ => merged.best <= g,
    };
    SearchReport {
        m,
        r: spec.r,
        t: spec.t_filter,
        f: merged.best,
        g,
        agrees,
        connected_only: spec.connected_only,
        graphs_enumerated: merged.count,
        argmax: argmax.iter().map(graph6_of).collect(),
        extremal: predicted.iter().map(graph6_of).collect(),
        argmax_certificates: argmax,
    }
}

/// `f(m, r) = g(m, r)` and the maximizers are exactly the predicted
/// extremal graphs.
pub fn verify_main_theorem(m: usize, r: usize, threads: usize) -> Result<SearchReport> {
    f_max(&SearchSpec::new(m, r).threads(threads))
}

/// `max k_t ≤ k_t(aK_{r+1} ∪ C(b))`.
pub fn verify_kt(m: usize, r: usize, t: usize, threads: usize) -> Result<SearchReport> {
    if t < 3 {
        return Err(Error::Domain(format!(
            "the k_t inequality is stated for t ≥ 3, got {t}"
        )));
    }
    f_max(&SearchSpec::new(m, r).threads(threads).t_filter(Some(t)))
}

/// Every graph on exactly `n` vertices (isolated vertices allowed), one per
/// isomorphism class, built vertex by vertex with certificate dedup.
pub fn all_graphs_on(n: usize) -> Vec<Graph> {
    let mut layer = vec![Graph::empty(0).expect("empty")];
    for size in 1..=n {
        let prev = size - 1;
        let mut seen: HashSet<Certificate> = HashSet::new();
        let mut next = Vec::new();
        for g in &layer {
            for mask in 0u64..(1u64 << prev) {
                let mut h = g.with_vertex().expect("small");
                for u in crate::graph::VertexSet(mask) {
                    h = h.with_edge(Edge::new(u, prev)).expect("fresh vertex");
                }
                if seen.insert(crate::canon::canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        layer = next;
    }
    layer
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::graph::ext;

    #[test]
    fn single_edge() {
        let gs = enumerate_graphs(&SearchSpec::new(1, 3)).unwrap();
        assert_eq!(gs, vec![Graph::complete(2).unwrap()]);
    }

    #[test]
    fn three_edges_degree_two() {
        let gs = enumerate_graphs(&SearchSpec::new(3, 2)).unwrap();
        let mut got: Vec<Certificate> = gs.iter().map(canonical_form).collect();
        got.sort();
        let mut want: Vec<Certificate> = [
            Graph::complete(3).unwrap(),
            Graph::path(4).unwrap(),
            ext(&[(1, 2), (2, 3), (4, 5)]),
            ext(&[(1, 2), (3, 4), (5, 6)]),
        ]
        .iter()
        .map(canonical_form)
        .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn unbounded_counts_match_table() {
        for m in 1..=7 {
            let n = enumerate_graphs(&SearchSpec::new(m, m)).unwrap().len();
            assert_eq!(n as f64, UNBOUNDED_CLASSES[m - 1], "m={m}");
        }
    }

    #[test]
    fn small_vertex_counts() {
        // Graphs on n vertices: 1, 2, 4, 11, 34.
        let counts: Vec<usize> = (1..=5).map(|n| all_graphs_on(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn f_examples() {
        let rep = f_max(&SearchSpec::new(6, 3)).unwrap();
        assert_eq!((rep.f, rep.g, rep.agrees), (11, 11, true));
        assert_eq!(
            rep.argmax_certificates,
            vec![canonical_form(&Graph::complete(4).unwrap())]
        );

        let rep = f_max(&SearchSpec::new(7, 3)).unwrap();
        assert_eq!((rep.f, rep.agrees), (12, true));
        assert_eq!(rep.argmax.len(), 1);

        let rep = f_max(&SearchSpec::new(10, 3)).unwrap();
        assert_eq!(rep.f, g_value(10, 3));
        assert_eq!(rep.argmax.len(), 2);
        assert!(rep.agrees);
    }

    #[test]
    fn kt_examples() {
        let rep = verify_kt(6, 3, 3, 1).unwrap();
        assert_eq!(rep.f, 4);
        assert!(rep.agrees);
        assert_eq!(
            rep.argmax_certificates,
            vec![canonical_form(&Graph::complete(4).unwrap())]
        );
        let rep = verify_kt(7, 3, 4, 1).unwrap();
        assert_eq!(rep.f, 1);
        for m in 1..=10 {
            let rep = verify_kt(m, 2, 3, 1).unwrap();
            assert_eq!(rep.f, (m / 3) as u64, "m={m}");
        }
        assert!(verify_kt(5, 3, 2, 1).is_err());
    }

    #[test]
    fn guardrail() {
        assert!(matches!(
            enumerate_graphs(&SearchSpec::new(30, 4)),
            Err(Error::TooLarge { .. })
        ));
        assert!(enumerate_graphs(&SearchSpec::new(0, 3)).is_err());
        assert!(estimate_classes(14, 3) < DESK_LIMIT);
    }

    #[test]
    fn connected_only_mode() {
        let gs = enumerate_graphs(&SearchSpec::new(4, 3).connected_only(true)).unwrap();
        // C_4, P_5, paw, K_{1,3}+edge (spider), star-with-tail... all connected 4-edge graphs with Δ ≤ 3.
        assert!(gs
            .iter()
            .all(|g| g.is_connected() && g.edge_count() == 4 && g.max_degree() <= 3));
        let all = enumerate_graphs(&SearchSpec::new(4, 4).connected_only(true)).unwrap();
        // Connected graphs with 4 edges: C_4, paw, P_5, fork, K_{1,4}.
        assert_eq!(all.len(), 5);
        assert_eq!(gs.len(), 4);
    }
}
