//! Executable checks of the inequalities behind the extremal theorem.
//!
//! Each check walks an instance source, evaluates the hypothesis exactly,
//! and either records the instance as checked (and any violation with a
//! witness) or as vacuous.

use rayon::prelude::*;
use serde::Serialize;

use crate::assembly::Assembly;
use crate::cliques::{clique_profile, for_each_clique, k_total, kt_per_edge};
use crate::clusters::{decompose_all, find_clusters, tight_edges, ClusterDecomposition};
use crate::codec::to_graph6;
use crate::colex::{extremal_family, g as g_value, kt_colex};
use crate::combin::{binom, choose2, pow2};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::moves::{
    colex_fold, degree_one_count, fixed_loss, flell_bound, fold, improve, maxfl_bound, partial_fold,
};
use crate::search::{all_graphs_on, Catalog};

/// Largest red-graph order for the exhaustive fixed-loss check.
pub const FIXED_LOSS_EXHAUSTIVE_MAX: usize = 7;

/// A graph together with its degree bound.
#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: Graph,
    pub r: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// graph6 of the offending graph (empty for purely numeric laws).
    pub graph: String,
    pub params: String,
    pub observed: String,
    pub required: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: &'static str,
    pub instances_checked: u64,
    pub vacuous: u64,
    pub violations: Vec<Violation>,
}

impl LawReport {
    fn new(law: &'static str) -> Self {
        LawReport {
            law,
            instances_checked: 0,
            vacuous: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn absorb(mut self, t: Tally) -> Self {
        self.instances_checked += t.checked;
        self.vacuous += t.vacuous;
        self.violations.extend(t.violations);
        self
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    vacuous: u64,
    violations: Vec<Violation>,
}

impl Tally {
    fn hit(&mut self, hypothesis: bool) -> bool {
        if hypothesis {
            self.checked += 1;
        } else {
            self.vacuous += 1;
        }
        hypothesis
    }

    fn fail(
        &mut self,
        g: &Graph,
        params: String,
        observed: impl ToString,
        required: impl ToString,
    ) {
        self.violations.push(Violation {
            graph: to_graph6(g),
            params,
            observed: observed.to_string(),
            required: required.to_string(),
        });
    }
}

/// Runs `f` on every item in parallel and merges the tallies in input order.
fn fold_items<T: Sync>(
    law: &'static str,
    items: &[T],
    f: impl Fn(&T, &mut Tally) + Sync,
) -> LawReport {
    let tallies: Vec<Tally> = items
        .par_iter()
        .map(|item| {
            let mut t = Tally::default();
            f(item, &mut t);
            t
        })
        .collect();
    tallies
        .into_iter()
        .fold(LawReport::new(law), LawReport::absorb)
}

fn labels(set: VertexSet) -> String {
    let v: Vec<String> = set.iter().map(|x| (x + 1).to_string()).collect();
    format!("{{{}}}", v.join(","))
}

fn cluster_params(inst: &Instance, cd: &ClusterDecomposition) -> String {
    format!(
        "r={} T={} e(R)={} e(B)={}",
        inst.r,
        labels(cd.cluster),
        cd.e_red(),
        cd.e_blue()
    )
}

/// `k(G_T) ≤ k(G)`.
fn unfoldable(g: &Graph, cd: &ClusterDecomposition) -> bool {
    fold(g, cd).delta_k <= 0
}

// ---------------------------------------------------------------------------
// Instance sources

/// Connected graphs of `G(m, r)` for every `r` in `rs` and `1 ≤ m ≤ m_max`.
pub fn connected_grid(rs: &[usize], m_max: usize, threads: usize) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for &r in rs {
        let cat = Catalog::build(m_max, r, threads)?;
        for m in 1..=m_max {
            out.extend(cat.level(m).iter().map(|e| Instance {
                graph: e.graph.clone(),
                r,
            }));
        }
    }
    Ok(out)
}

/// Every graph of `G(m, r)` for every `r` in `rs` and `1 ≤ m ≤ m_max`.
pub fn full_grid(rs: &[usize], m_max: usize, threads: usize) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for &r in rs {
        let cat = Catalog::build(m_max, r, threads)?;
        for m in 1..=m_max {
            let mut err = None;
            cat.for_each_multiset(m, |parts| match cat.assemble(parts) {
                Ok(graph) => out.push(Instance { graph, r }),
                Err(e) => err = Some(e),
            });
            if let Some(e) = err {
                return Err(e);
            }
        }
    }
    Ok(out)
}

/// One graph per isomorphism class on `1..=n_max` vertices.
pub fn small_graphs(n_max: usize) -> Vec<Graph> {
    (1..=n_max).flat_map(all_graphs_on).collect()
}

// ---------------------------------------------------------------------------
// Colex and counting laws

/// `k_t(G) ≤ k_t(C(e(G)))` for every `t ≥ 2`.
pub fn check_kruskal_katona(graphs: &[Graph]) -> LawReport {
    fold_items("kruskal_katona", graphs, |g, tally| {
        tally.hit(true);
        let p = clique_profile(g);
        let m = g.edge_count();
        for t in 2..=g.vertex_count().max(2) {
            let bound = kt_colex(m, t);
            if p.get(t) > bound {
                tally.fail(g, format!("t={t}"), p.get(t), format!("≤ {bound}"));
            }
        }
    })
}

/// Per cluster: cliques of size `t` containing a blue edge number at most
/// `C(e(B), t−1)`. With `t = None` every `2 ≤ t ≤ r+1` is checked.
pub fn check_blue_bound(instances: &[Instance], t: Option<usize>) -> LawReport {
    fold_items("blue_bound", instances, |inst, tally| {
        let g = &inst.graph;
        let clusters = decompose_all(g, inst.r);
        if clusters.is_empty() {
            tally.hit(false);
            return;
        }
        let sizes: Vec<usize> = match t {
            Some(t) => vec![t],
            None => (2..=inst.r + 1).collect(),
        };
        for cd in &clusters {
            tally.hit(true);
            let mut counts = vec![0u64; inst.r + 3];
            for_each_clique(g, |c| {
                let blue = cd
                    .blue_edges
                    .iter()
                    .any(|e| c.contains(e.u) && c.contains(e.v));
                if blue && c.len() < counts.len() {
                    counts[c.len()] += 1;
                }
            });
            for &t in &sizes {
                let have = counts.get(t).copied().unwrap_or(0);
                let bound = binom(cd.e_blue() as i64, t as i64 - 1);
                if have > bound {
                    tally.fail(
                        g,
                        format!("{} t={t}", cluster_params(inst, cd)),
                        have,
                        format!("≤ {bound}"),
                    );
                }
            }
        }
    })
}

/// `k_t(C(u)) + C(q, t−1) ≤ k_t(C(u+q))` whenever `C(q,2) ≤ u`.
pub fn check_numt(u_max: usize, t_max: usize) -> LawReport {
    let mut tally = Tally::default();
    for u in 0..=u_max {
        let mut q = 0;
        while choose2(q) <= u {
            for t in 2..=t_max {
                tally.hit(true);
                let lhs = kt_colex(u, t) + binom(q as i64, t as i64 - 1);
                let rhs = kt_colex(u + q, t);
                if lhs > rhs {
                    tally.violations.push(Violation {
                        graph: String::new(),
                        params: format!("u={u} q={q} t={t}"),
                        observed: lhs.to_string(),
                        required: format!("≤ {rhs}"),
                    });
                }
            }
            q += 1;
        }
    }
    LawReport::new("numt").absorb(tally)
}

// ---------------------------------------------------------------------------
// Local moves

/// Connected `G` and cluster with `e(B) < e(R) ≤ r`: the colex folding has
/// `m` edges, maximum degree at most `r`, and no fewer `K_t`'s for any `t`.
pub fn check_colex_fold(instances: &[Instance]) -> LawReport {
    fold_items("colex_fold", instances, |inst, tally| {
        let g = &inst.graph;
        if !g.is_connected() {
            return;
        }
        let before = clique_profile(g);
        for cd in decompose_all(g, inst.r) {
            if !tally.hit(cd.e_blue() < cd.e_red() && cd.e_red() <= inst.r) {
                continue;
            }
            let out = match colex_fold(g, &cd) {
                Ok(out) => out,
                Err(e) => {
                    tally.fail(g, cluster_params(inst, &cd), e, "a colex folding");
                    continue;
                }
            };
            let h = &out.result;
            if h.edge_count() != g.edge_count() || h.max_degree() > inst.r {
                tally.fail(
                    g,
                    cluster_params(inst, &cd),
                    format!("e={} Δ={}", h.edge_count(), h.max_degree()),
                    format!("e={} Δ≤{}", g.edge_count(), inst.r),
                );
            }
            let after = clique_profile(h);
            for t in 2..=before.clique_number().max(2) {
                if after.get(t) < before.get(t) {
                    tally.fail(
                        g,
                        format!("{} t={t}", cluster_params(inst, &cd)),
                        after.get(t),
                        format!("≥ {}", before.get(t)),
                    );
                }
            }
        }
    })
}

/// Calls `f` with every `k`-subset of `items`.
fn for_each_subset<T: Copy>(items: &[T], k: usize, f: &mut impl FnMut(&[T])) {
    fn go<T: Copy>(
        items: &[T],
        k: usize,
        start: usize,
        cur: &mut Vec<T>,
        f: &mut impl FnMut(&[T]),
    ) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    go(items, k, 0, &mut Vec::with_capacity(k), f);
}

/// Connected `G` and cluster with `2|T| ≥ r−1` and `1 ≤ e(B) < e(R)`: every
/// partial folding (blue edges swapped for any `e(B)` red edges) stays in
/// `G(m, r)` and strictly increases `k`.
pub fn check_partial_fold(instances: &[Instance]) -> LawReport {
    fold_items("partial_fold", instances, |inst, tally| {
        let g = &inst.graph;
        if !g.is_connected() {
            return;
        }
        let k = k_total(g);
        for cd in decompose_all(g, inst.r) {
            let hyp = 2 * cd.size() + 1 >= inst.r && cd.e_blue() >= 1 && cd.e_blue() < cd.e_red();
            if !tally.hit(hyp) {
                continue;
            }
            let mut base = g.clone();
            for e in &cd.blue_edges {
                base = base.without_edge(*e);
            }
            for_each_subset(&cd.red_edges, cd.e_blue(), &mut |chosen: &[Edge]| {
                let mut h = base.clone();
                for e in chosen {
                    h = h.with_edge(*e).expect("red edges are non-edges");
                }
                let kh = k_total(&h);
                if h.edge_count() != g.edge_count() || h.max_degree() > inst.r || kh <= k {
                    let added: Vec<String> = chosen.iter().map(|e| e.to_string()).collect();
                    tally.fail(
                        g,
                        format!("{} added={}", cluster_params(inst, &cd), added.join(",")),
                        format!("e={} Δ={} k={kh}", h.edge_count(), h.max_degree()),
                        format!("e={} Δ≤{} k>{k}", g.edge_count(), inst.r),
                    );
                }
            });
        }
    })
}

// ---------------------------------------------------------------------------
// Fixed loss

/// For every graph `R` on `s ≤ s_max` vertices: `fl(R) ≤ s(2^{s−1}−1)` with
/// equality exactly at `K_s`, and `fl(R)` at most the degree-one bound.
pub fn check_fixed_loss_bounds(s_max: usize) -> Result<LawReport> {
    if s_max > FIXED_LOSS_EXHAUSTIVE_MAX {
        return Err(Error::Capacity {
            needed: s_max,
            limit: FIXED_LOSS_EXHAUSTIVE_MAX,
        });
    }
    let graphs = small_graphs(s_max);
    Ok(fold_items("fixed_loss_bounds", &graphs, |red, tally| {
        tally.hit(true);
        let s = red.vertex_count();
        let fl = fixed_loss(red).expect("small red graph");
        let max = maxfl_bound(s);
        let complete = red.edge_count() == choose2(s);
        if fl > max || (fl == max) != complete {
            let want = if complete {
                format!("= {max}")
            } else {
                format!("< {max}")
            };
            tally.fail(red, format!("s={s}"), fl, want);
        }
        let ell = degree_one_count(red);
        let bound = flell_bound(s, ell);
        if fl as i64 > bound {
            tally.fail(red, format!("s={s} ell={ell}"), fl, format!("≤ {bound}"));
        }
    }))
}

// ---------------------------------------------------------------------------
// Unfoldable clusters and averaging

/// Per unfoldable cluster of a connected `G`: `fl(R_T) ≥ 2^r − 2^{|T|}` and
/// `2^{|T|} ≤ |S|`.
///
/// When `S` is empty (`G = K_{r+1}`) the logarithmic bound has no value;
/// such clusters only check the first inequality.
pub fn check_sbound(instances: &[Instance]) -> LawReport {
    fold_items("sbound", instances, |inst, tally| {
        let g = &inst.graph;
        if !g.is_connected() {
            return;
        }
        for cd in decompose_all(g, inst.r) {
            if !tally.hit(unfoldable(g, &cd)) {
                continue;
            }
            let fl = match fixed_loss(&cd.red) {
                Ok(fl) => fl as i64,
                Err(e) => {
                    tally.fail(g, cluster_params(inst, &cd), e, "a computable fixed loss");
                    continue;
                }
            };
            let need = pow2(inst.r as u32) as i64 - pow2(cd.size() as u32) as i64;
            if fl < need {
                tally.fail(
                    g,
                    cluster_params(inst, &cd),
                    format!("fl={fl}"),
                    format!("≥ {need}"),
                );
            }
            let s = cd.neighborhood.len();
            if s > 0 && pow2(cd.size() as u32) > s as u64 {
                tally.fail(
                    g,
                    cluster_params(inst, &cd),
                    format!("2^|T|={}", pow2(cd.size() as u32)),
                    format!("≤ |S|={s}"),
                );
            }
        }
    })
}

/// Per unfoldable cluster of a connected `G` with `r ≥ 3`, and each
/// `3 ≤ t ≤ r+1` (or just `t`): at least `2C(|T|,2)` edges meeting `T` have
/// `k_t(e) ≤ C(r−3, t−2)`.
///
/// Clusters with `S = ∅` (the graph is `K_{r+1}`) do not meet the
/// hypothesis: the argument needs `|T| ≤ r−1` and `|T| ≤ log₂|S|`, and the
/// bound fails there.
pub fn check_clusnum(instances: &[Instance], t: Option<usize>) -> LawReport {
    fold_items("clusnum", instances, |inst, tally| {
        let g = &inst.graph;
        if !g.is_connected() {
            return;
        }
        let r = inst.r;
        for cd in decompose_all(g, r) {
            if !tally.hit(r >= 3 && !cd.neighborhood.is_empty() && unfoldable(g, &cd)) {
                continue;
            }
            let sizes: Vec<usize> = match t {
                Some(t) => vec![t],
                None => (3..=r + 1).collect(),
            };
            for t in sizes {
                let per_edge = kt_per_edge(g, t);
                let cap = binom(r as i64 - 3, t as i64 - 2);
                let light = g
                    .edges()
                    .into_iter()
                    .filter(|e| {
                        e.touches(cd.cluster) && per_edge.get(e).copied().unwrap_or(0) <= cap
                    })
                    .count();
                let need = 2 * choose2(cd.size());
                if light < need {
                    tally.fail(
                        g,
                        format!("{} t={t}", cluster_params(inst, &cd)),
                        light,
                        format!("≥ {need}"),
                    );
                }
            }
        }
    })
}

/// Which form of the cluster alternative to the unfoldable case the
/// averaging check assumes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AveragingMode {
    /// `e(R) ≥ r−2` and `|T| ≤ r/2`.
    Loose,
    /// `e(R) ≥ r+1` and `|T| ≤ (r−2)/2`, as produced by the case split of
    /// the main argument.
    Strict,
}

/// Averaging argument over connected graphs:
///
/// * if every cluster has `|T| ≤ r/2`, fewer than half the edges are tight
///   (loose mode only);
/// * for `r ≥ 3` and `m > C(r+1,2)`, if every cluster is unfoldable or
///   satisfies the mode's alternative, then fewer than half the edges are
///   tight, `Σ_e k_t(e) ≤ m·C(r−2,t−2)` for all `t ≥ 4`, and `k(G) < g(m,r)`.
///
/// The second part is restricted to `m > C(r+1,2)`, the only range where
/// the main argument applies it: below that `C(m)` itself and `K_{r+1}`
/// satisfy the hypothesis while attaining `g(m,r)`.
pub fn check_averaging(instances: &[Instance], mode: AveragingMode) -> LawReport {
    let law = match mode {
        AveragingMode::Loose => "averaging",
        AveragingMode::Strict => "averaging_strict",
    };
    fold_items(law, instances, |inst, tally| {
        let g = &inst.graph;
        if !g.is_connected() {
            return;
        }
        let r = inst.r;
        let m = g.edge_count();
        let clusters = decompose_all(g, r);
        let tight = tight_edges(g, r).len();

        let small = mode == AveragingMode::Loose && clusters.iter().all(|cd| 2 * cd.size() <= r);
        let alternative = |cd: &ClusterDecomposition| match mode {
            AveragingMode::Loose => cd.e_red() + 2 >= r && 2 * cd.size() <= r,
            AveragingMode::Strict => cd.e_red() > r && 2 * cd.size() + 2 <= r,
        };
        let chain = r >= 3
            && m > choose2(r + 1)
            && clusters
                .iter()
                .all(|cd| unfoldable(g, cd) || alternative(cd));
        if !tally.hit(small || chain) {
            return;
        }
        if small && 2 * tight >= m {
            tally.fail(
                g,
                format!("r={r} clusters small"),
                format!("tight={tight}"),
                format!("< {m}/2"),
            );
        }
        if chain {
            if 2 * tight >= m {
                tally.fail(
                    g,
                    format!("r={r} averaging"),
                    format!("tight={tight}"),
                    format!("< {m}/2"),
                );
            }
            let p = clique_profile(g);
            for t in 4..=p.clique_number().max(3) {
                let sum = choose2(t) as u64 * p.get(t);
                let cap = m as u64 * binom(r as i64 - 2, t as i64 - 2);
                if sum > cap {
                    tally.fail(
                        g,
                        format!("r={r} t={t}"),
                        format!("Σk_t(e)={sum}"),
                        format!("≤ {cap}"),
                    );
                }
            }
            let k = p.total();
            let gv = g_value(m, r);
            if k >= gv {
                tally.fail(
                    g,
                    format!("r={r} m={m}"),
                    format!("k={k}"),
                    format!("< g={gv}"),
                );
            }
        }
    })
}

/// `g(m1+m2, r) ≥ g(m1, r) + g(m2, r)` for `1 ≤ m1 ≤ m2`, `m1+m2 ≤ m_max`,
/// `1 ≤ r ≤ r_max`, with equality exactly when the union of the two
/// extremal graphs is itself extremal.
pub fn check_disco(m_max: usize, r_max: usize) -> LawReport {
    let mut items = Vec::new();
    for r in 1..=r_max {
        for m1 in 1..=m_max / 2 {
            for m2 in m1..=m_max - m1 {
                items.push((r, m1, m2));
            }
        }
    }
    fold_items("disco", &items, |&(r, m1, m2), tally| {
        tally.hit(true);
        let (g1, g2, g12) = (g_value(m1, r), g_value(m2, r), g_value(m1 + m2, r));
        let params = format!("r={r} m1={m1} m2={m2}");
        if g12 < g1 + g2 {
            tally.violations.push(Violation {
                graph: String::new(),
                params,
                observed: g12.to_string(),
                required: format!("≥ {}", g1 + g2),
            });
            return;
        }
        let union: Assembly = extremal_family(m1, r)[0].join(&extremal_family(m2, r)[0]);
        let extremal = extremal_family(m1 + m2, r)
            .iter()
            .any(|a| a.certificate() == union.certificate());
        if (g12 == g1 + g2) != extremal {
            tally.violations.push(Violation {
                graph: String::new(),
                params,
                observed: format!("g={g12} sum={} union extremal={extremal}", g1 + g2),
                required: "equality exactly when the union is extremal".into(),
            });
        }
    })
}

// ---------------------------------------------------------------------------
// Structure and move bookkeeping

/// Cluster structure on every graph:
///
/// * degree-`r` vertices `x ≠ y` share a tight clique iff `N[x] = N[y]`,
///   and clusters are the resulting classes (disjoint, maximal, tight);
/// * every edge meets at most two clusters;
/// * an edge in no tight clique has `k_t(e) ≤ C(r−2,t−2)` for all `t`;
/// * no cluster has `r` vertices, and `r+1` vertices exactly when it is a
///   `K_{r+1}` component.
#[allow(clippy::needless_range_loop)]
pub fn check_cluster_structure(instances: &[Instance]) -> LawReport {
    fold_items("cluster_structure", instances, |inst, tally| {
        tally.hit(true);
        let g = &inst.graph;
        let r = inst.r;
        let n = g.vertex_count();

        // Tight cliques by direct enumeration.
        let mut tight: Vec<VertexSet> = Vec::new();
        let mut consider = |c: VertexSet| {
            let common = c
                .iter()
                .fold(g.vertices(), |acc, v| acc.intersection(g.neighbors(v)));
            if common.len() + c.len() == r + 1 {
                tight.push(c);
            }
        };
        (0..n).for_each(|v| consider(VertexSet::singleton(v)));
        for_each_clique(g, consider);
        let mut share = vec![0u64; n];
        for &c in &tight {
            for v in c {
                share[v] |= c.0;
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if g.degree(x) != r || g.degree(y) != r {
                    continue;
                }
                let together = share[x] >> y & 1 == 1;
                let same = g.closed_neighbors(x) == g.closed_neighbors(y);
                if together != same {
                    tally.fail(
                        g,
                        format!("r={r} x={} y={}", x + 1, y + 1),
                        format!("common tight clique={together}"),
                        format!("N[x]=N[y] is {same}"),
                    );
                }
            }
        }

        let clusters = find_clusters(g, r);
        let maximal: Vec<VertexSet> = tight
            .iter()
            .copied()
            .filter(|c| !tight.iter().any(|d| d != c && c.is_subset(*d)))
            .collect();
        let mut sorted_max = maximal.clone();
        sorted_max.sort_by_key(|c| c.0);
        let mut sorted_found = clusters.clone();
        sorted_found.sort_by_key(|c| c.0);
        if sorted_max != sorted_found {
            tally.fail(
                g,
                format!("r={r}"),
                format!("{} clusters found", clusters.len()),
                "the maximal tight cliques",
            );
        }
        let blocks: Vec<VertexSet> = g
            .components()
            .into_iter()
            .filter(|c| c.len() == r + 1 && g.is_clique(*c))
            .collect();
        for &c in &clusters {
            let block = blocks.contains(&c);
            if c.len() == r || (c.len() == r + 1) != block {
                tally.fail(
                    g,
                    format!("r={r} T={}", labels(c)),
                    format!("|T|={}", c.len()),
                    "|T| ≠ r, and |T| = r+1 only for a K_{r+1} component",
                );
            }
        }
        if blocks.iter().any(|b| !clusters.contains(b)) {
            tally.fail(
                g,
                format!("r={r}"),
                "K_{r+1} component without a cluster",
                "every K_{r+1} component is a cluster",
            );
        }
        let mut seen = VertexSet::EMPTY;
        for &c in &clusters {
            if !c.intersection(seen).is_empty() {
                tally.fail(
                    g,
                    format!("r={r} T={}", labels(c)),
                    "overlapping clusters",
                    "disjoint clusters",
                );
            }
            seen = seen.union(c);
        }

        let tight_edges: Vec<Edge> = g
            .edges()
            .into_iter()
            .filter(|e| tight.iter().any(|c| e.within(*c)))
            .collect();
        for e in g.edges() {
            let meets = clusters.iter().filter(|c| e.touches(**c)).count();
            if meets > 2 {
                tally.fail(
                    g,
                    format!("r={r} edge={e}"),
                    format!("{meets} clusters"),
                    "≤ 2",
                );
            }
        }
        let non_tight: Vec<Edge> = g
            .edges()
            .into_iter()
            .filter(|e| !tight_edges.contains(e))
            .collect();
        if non_tight.is_empty() {
            return;
        }
        for t in 2..=r + 1 {
            let per_edge = kt_per_edge(g, t);
            let cap = binom(r as i64 - 2, t as i64 - 2);
            for e in &non_tight {
                let have = per_edge.get(e).copied().unwrap_or(0);
                if have > cap {
                    tally.fail(g, format!("r={r} edge={e} t={t}"), have, format!("≤ {cap}"));
                }
            }
        }
    })
}

/// Edge and degree bookkeeping of the three moves on every cluster:
///
/// * folding has `m − e(B) + e(R)` edges, `Δ ≤ r`, `T ∪ S` complete, and
///   the padded graph has `m` edges when `e(B) ≥ e(R)`;
/// * colex folding (`e(B) < e(R)`) and partial folding (`e(B) ≤ e(R)`)
///   keep `m` edges and `Δ ≤ r`.
pub fn check_move_accounting(instances: &[Instance]) -> LawReport {
    fold_items("move_accounting", instances, |inst, tally| {
        let g = &inst.graph;
        let (m, r) = (g.edge_count(), inst.r);
        let clusters = decompose_all(g, r);
        if clusters.is_empty() {
            tally.hit(false);
            return;
        }
        for cd in clusters {
            tally.hit(true);
            let params = cluster_params(inst, &cd);
            let f = fold(g, &cd);
            let want = m + cd.e_red() - cd.e_blue();
            if f.result.edge_count() != want
                || f.result.max_degree() > r
                || !f.result.is_clique(cd.closed())
            {
                tally.fail(
                    g,
                    format!("{params} fold"),
                    format!("e={} Δ={}", f.result.edge_count(), f.result.max_degree()),
                    format!("e={want} Δ≤{r} T∪S complete"),
                );
            }
            if cd.e_blue() >= cd.e_red() {
                match f.padded() {
                    Ok(p) if p.edge_count() == m => {}
                    Ok(p) => tally.fail(g, format!("{params} fold padded"), p.edge_count(), m),
                    Err(e) => tally.fail(g, format!("{params} fold padded"), e, m),
                }
            }
            let mut same_size = |name: &str, out: Result<crate::moves::MoveOutcome>| match out {
                Ok(o) if o.result.edge_count() == m && o.result.max_degree() <= r => {}
                Ok(o) => tally.fail(
                    g,
                    format!("{params} {name}"),
                    format!("e={} Δ={}", o.result.edge_count(), o.result.max_degree()),
                    format!("e={m} Δ≤{r}"),
                ),
                Err(e) => tally.fail(g, format!("{params} {name}"), e, "a result"),
            };
            if cd.e_blue() < cd.e_red() {
                same_size("colex_fold", colex_fold(g, &cd));
            }
            if cd.e_blue() <= cd.e_red() {
                same_size("partial_fold", partial_fold(g, &cd));
            }
        }
    })
}

/// For connected `G` with `r ≥ 3` and `m > C(r+1,2)`: either a local move
/// applies, or every cluster is unfoldable or has `e(R) ≥ r+1` and
/// `|T| ≤ (r−2)/2`, and then `k(G) < g(m, r)`.
pub fn check_improve_completeness(instances: &[Instance]) -> LawReport {
    fold_items("improve_completeness", instances, |inst, tally| {
        let g = &inst.graph;
        let r = inst.r;
        if !tally.hit(g.is_connected() && r >= 3 && g.edge_count() > choose2(r + 1)) {
            return;
        }
        match improve(g, r) {
            Ok(Some(imp)) => {
                if imp.k_after < imp.k_before
                    || imp.graph.edge_count() != g.edge_count()
                    || imp.graph.max_degree() > r
                {
                    tally.fail(
                        g,
                        format!("r={r} move={}", imp.kind.name()),
                        format!(
                            "k {}→{} e={}",
                            imp.k_before,
                            imp.k_after,
                            imp.graph.edge_count()
                        ),
                        "k non-decreasing, same edge count, Δ ≤ r",
                    );
                }
            }
            Ok(None) => {
                let (k, gv) = (k_total(g), g_value(g.edge_count(), r));
                if k >= gv {
                    tally.fail(
                        g,
                        format!("r={r}"),
                        format!("no move, k={k}"),
                        format!("k < g={gv}"),
                    );
                }
                for cd in decompose_all(g, r) {
                    let heavy = cd.e_red() > r && 2 * cd.size() + 2 <= r;
                    if !unfoldable(g, &cd) && !heavy {
                        tally.fail(
                            g,
                            cluster_params(inst, &cd),
                            "no move applies",
                            "unfoldable or heavy-red cluster",
                        );
                    }
                }
            }
            Err(e) => tally.fail(g, format!("r={r}"), e, "a result"),
        }
    })
}

// ---------------------------------------------------------------------------
// Suite

/// Ranges for [`run_suite`].
#[derive(Clone, Debug)]
pub struct Grid {
    pub r_max: usize,
    pub m_max: usize,
    pub s_max: usize,
    pub u_max: usize,
    pub t_max: usize,
    pub disco_m_max: usize,
    pub disco_r_max: usize,
    pub threads: usize,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            r_max: 4,
            m_max: 12,
            s_max: 7,
            u_max: 40,
            t_max: 10,
            disco_m_max: 60,
            disco_r_max: 5,
            threads: 1,
        }
    }
}

/// Every law over `grid`, in a fixed order.
pub fn run_suite(grid: &Grid) -> Result<Vec<LawReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(grid.threads.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        let rs: Vec<usize> = (1..=grid.r_max).collect();
        let connected = connected_grid(&rs, grid.m_max, grid.threads)?;
        let mut kk_graphs: Vec<Graph> = small_graphs(grid.s_max);
        kk_graphs.extend(connected.iter().map(|i| i.graph.clone()));
        Ok(vec![
            check_kruskal_katona(&kk_graphs),
            check_blue_bound(&connected, None),
            check_numt(grid.u_max, grid.t_max),
            check_colex_fold(&connected),
            check_partial_fold(&connected),
            check_fixed_loss_bounds(grid.s_max)?,
            check_sbound(&connected),
            check_clusnum(&connected, None),
            check_averaging(&connected, AveragingMode::Loose),
            check_averaging(&connected, AveragingMode::Strict),
            check_disco(grid.disco_m_max, grid.disco_r_max),
            check_cluster_structure(&connected),
            check_move_accounting(&connected),
            check_improve_completeness(&connected),
        ])
    })
}
