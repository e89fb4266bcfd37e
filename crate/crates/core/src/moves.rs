//! Local moves at a cluster, the fixed loss of a red graph, and the
//! single-step improvement procedure built from them.

use serde::Serialize;

use crate::canon::canonical_form;
use crate::cliques::k_total;
use crate::clusters::{decompose_all, ClusterDecomposition};
use crate::codec::to_graph6;
use crate::colex::build_colex;
use crate::combin::{choose2, pow2};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MoveKind {
    Fold,
    ColexFold,
    PartialFold,
}

impl MoveKind {
    pub fn name(self) -> &'static str {
        match self {
            MoveKind::Fold => "FOLD",
            MoveKind::ColexFold => "COLEX_FOLD",
            MoveKind::PartialFold => "PARTIAL_FOLD",
        }
    }
}

#[derive(Clone, Debug)]
pub struct MoveOutcome {
    pub kind: MoveKind,
    pub result: Graph,
    /// `e(result) − e(input)`.
    pub delta_edges: i64,
    /// `k(result) − k(input)`.
    pub delta_k: i64,
    /// `K_2` components needed to bring `result` back to the input's edge
    /// count (fold only, when `e(B) ≥ e(R)`).
    pub padding_k2: usize,
}

impl MoveOutcome {
    fn new(kind: MoveKind, input: &Graph, result: Graph, padding_k2: usize) -> Self {
        let delta_edges = result.edge_count() as i64 - input.edge_count() as i64;
        let delta_k = k_total(&result) as i64 - k_total(input) as i64;
        MoveOutcome {
            kind,
            result,
            delta_edges,
            delta_k,
            padding_k2,
        }
    }

    /// `result` plus the padding `K_2`s.
    pub fn padded(&self) -> Result<Graph> {
        let mut g = self.result.clone();
        let k2 = Graph::complete(2)?;
        for _ in 0..self.padding_k2 {
            g = g.disjoint_union(&k2)?;
        }
        Ok(g)
    }

    pub fn report(&self) -> MoveReport {
        MoveReport {
            kind: self.kind.name(),
            delta_edges: self.delta_edges,
            delta_k: self.delta_k,
            padding_k2: self.padding_k2,
            result_graph6: to_graph6(&self.result),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MoveReport {
    pub kind: &'static str,
    pub delta_edges: i64,
    pub delta_k: i64,
    #[serde(rename = "padding_K2")]
    pub padding_k2: usize,
    pub result_graph6: String,
}

/// `G + C(S,2) − E(B)`: completes `T ∪ S` to `K_{r+1}` and drops the blue
/// edges.
pub fn fold(g: &Graph, cd: &ClusterDecomposition) -> MoveOutcome {
    let mut out = g.clone();
    for e in &cd.blue_edges {
        out = out.without_edge(*e);
    }
    for e in &cd.red_edges {
        out = out.with_edge(*e).expect("red edges are non-edges");
    }
    let padding = cd.e_blue().saturating_sub(cd.e_red());
    MoveOutcome::new(MoveKind::Fold, g, out, padding)
}

/// Deletes `T ∪ S` and appends `C(C(r+1,2) − e(R) + e(B))`. Isolated
/// vertices left behind are dropped.
pub fn colex_fold(g: &Graph, cd: &ClusterDecomposition) -> Result<MoveOutcome> {
    if cd.e_blue() >= cd.e_red() {
        return Err(Error::Precondition(format!(
            "colex folding needs e(B) < e(R), got e(B)={} e(R)={}",
            cd.e_blue(),
            cd.e_red()
        )));
    }
    let rest = g
        .induced(g.vertices().difference(cd.closed()))
        .strip_isolated();
    let budget = choose2(cd.r + 1) - cd.e_red() + cd.e_blue();
    let out = rest.disjoint_union(&build_colex(budget)?)?;
    Ok(MoveOutcome::new(MoveKind::ColexFold, g, out, 0))
}

/// Deletes the blue edges and adds the `e(B)` lexicographically least red
/// edges.
pub fn partial_fold(g: &Graph, cd: &ClusterDecomposition) -> Result<MoveOutcome> {
    if cd.e_blue() > cd.e_red() {
        return Err(Error::Precondition(format!(
            "partial folding needs e(B) ≤ e(R), got e(B)={} e(R)={}",
            cd.e_blue(),
            cd.e_red()
        )));
    }
    let mut out = g.clone();
    for e in &cd.blue_edges {
        out = out.without_edge(*e);
    }
    for e in cd.red_edges.iter().take(cd.e_blue()) {
        out = out.with_edge(*e).expect("red edges are non-edges");
    }
    Ok(MoveOutcome::new(MoveKind::PartialFold, g, out, 0))
}

/// Largest red graph `fixed_loss` accepts.
pub const FIXED_LOSS_MAX_VERTICES: usize = 20;

/// `fl(R) = Σ_{∅ ≠ I independent} (2^{δ_I} − 1)`, `δ_I` the least
/// `R`-degree in `I`.
pub fn fixed_loss(red: &Graph) -> Result<u64> {
    let n = red.vertex_count();
    if n > FIXED_LOSS_MAX_VERTICES {
        return Err(Error::Capacity {
            needed: n,
            limit: FIXED_LOSS_MAX_VERTICES,
        });
    }
    // Visit vertices in order; each independent set is reached once, with
    // the minimum degree carried along.
    fn go(red: &Graph, allowed: u64, min_deg: usize, total: &mut u64) {
        let mut rest = allowed;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = min_deg.min(red.degree(v));
            *total += (1u64 << d) - 1;
            go(red, rest & !red.neighbors(v).0, d, total);
        }
    }
    let mut total = 0;
    go(red, red.vertices().0, usize::MAX, &mut total);
    Ok(total)
}

/// `fl(K_s) = s(2^{s−1} − 1)`, the maximum over graphs on `s` vertices.
pub fn maxfl_bound(s: usize) -> u64 {
    assert!(s >= 1);
    s as u64 * (pow2(s as u32 - 1) - 1)
}

/// `⌊5·2^{s−2} + (s−ℓ−2)·2^{s−ℓ−1}⌋` for a red graph on `s` vertices with
/// `ℓ` vertices of degree one. The floor only matters at `s = 1`; since
/// fixed loss is an integer the comparison stays exact.
pub fn flell_bound(s: usize, ell: usize) -> i64 {
    assert!(s >= 1 && ell <= s);
    let (s, ell) = (s as i64, ell as i64);
    // Eight times the bound is an integer for every s ≥ 1, 0 ≤ ℓ ≤ s.
    let eight = 10 * (1i64 << s) + (s - ell - 2) * (1i64 << (s - ell + 2));
    eight.div_euclid(8)
}

/// Degree-one vertex count of `red`.
pub fn degree_one_count(red: &Graph) -> usize {
    (0..red.vertex_count())
        .filter(|&v| red.degree(v) == 1)
        .count()
}

/// Outcome of [`improve`].
#[derive(Clone, Debug)]
pub struct Improvement {
    pub kind: MoveKind,
    pub cluster: VertexSet,
    /// The new graph, already padded back to `m` edges.
    pub graph: Graph,
    pub k_before: u64,
    pub k_after: u64,
}

/// One local move that shows a connected `G ∈ G(m,r)` is not extremal, if
/// one applies. Moves are tried in the order fold, colex fold, partial
/// fold, each over clusters by least vertex:
///
/// * fold when `e(B) ≥ e(R)` and `k` strictly grows; the result is padded
///   with `e(B) − e(R)` copies of `K_2`;
/// * colex fold when `e(B) < e(R) ≤ r` and the result is not isomorphic to
///   `G` (its `k` never drops, and a different graph with the same `k`
///   cannot be extremal since it is disconnected or a colex graph that `G`
///   is not);
/// * partial fold when `1 ≤ e(B) < e(R)`, `|T| ≥ (r−1)/2` and `k` strictly
///   grows.
///
/// Returns `None` when no cluster admits a move.
pub fn improve(g: &Graph, r: usize) -> Result<Option<Improvement>> {
    if !g.is_connected() {
        return Err(Error::Domain("improve needs a connected graph".into()));
    }
    if let Some(v) = g.degree_violation(r) {
        return Err(Error::Domain(format!(
            "vertex {} has degree {} > r={r}",
            v + 1,
            g.degree(v)
        )));
    }
    let clusters = decompose_all(g, r);
    let k = k_total(g);
    let done = |kind, cd: &ClusterDecomposition, graph: Graph| {
        let k_after = k_total(&graph);
        Some(Improvement {
            kind,
            cluster: cd.cluster,
            graph,
            k_before: k,
            k_after,
        })
    };

    for cd in &clusters {
        if cd.e_blue() >= cd.e_red() {
            let out = fold(g, cd);
            if out.delta_k > 0 {
                return Ok(done(MoveKind::Fold, cd, out.padded()?));
            }
        }
    }
    let cert = canonical_form(g);
    for cd in &clusters {
        if cd.e_blue() < cd.e_red() && cd.e_red() <= r {
            let out = colex_fold(g, cd)?;
            if out.delta_k >= 0 && canonical_form(&out.result) != cert {
                return Ok(done(MoveKind::ColexFold, cd, out.result));
            }
        }
    }
    for cd in &clusters {
        if cd.e_blue() >= 1 && cd.e_blue() < cd.e_red() && 2 * cd.size() + 1 >= r {
            let out = partial_fold(g, cd)?;
            if out.delta_k > 0 {
                return Ok(done(MoveKind::PartialFold, cd, out.result));
            }
        }
    }
    Ok(None)
}
