//! Tight cliques, clusters, and the red/blue picture around a cluster.
//!
//! A clique `T` is tight when `|N(T)| = r + 1 − |T|`; a cluster is a maximal
//! tight clique. Every vertex of a tight clique has degree exactly `r`, and
//! two degree-`r` vertices share a tight clique iff their closed
//! neighborhoods agree, so clusters are the classes of degree-`r` vertices
//! under equal `N[v]`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cliques::k_total;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};

/// A cluster `T` with `S = N(T)`, red graph `R` (non-edges inside `S`) and
/// blue edges `B` (from `S` to vertices outside `T ∪ S`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterDecomposition {
    pub r: usize,
    pub cluster: VertexSet,
    pub neighborhood: VertexSet,
    /// Red graph on `S`, vertices relabelled by rank within `S`.
    pub red: Graph,
    /// Red edges in the labels of the host graph, lexicographic.
    pub red_edges: Vec<Edge>,
    /// Blue edges in the labels of the host graph, lexicographic.
    pub blue_edges: Vec<Edge>,
}

impl ClusterDecomposition {
    pub fn e_red(&self) -> usize {
        self.red_edges.len()
    }

    pub fn e_blue(&self) -> usize {
        self.blue_edges.len()
    }

    pub fn size(&self) -> usize {
        self.cluster.len()
    }

    /// `T ∪ S`.
    pub fn closed(&self) -> VertexSet {
        self.cluster.union(self.neighborhood)
    }

    pub fn blue_degree(&self, x: usize) -> usize {
        self.blue_edges
            .iter()
            .filter(|e| e.u == x || e.v == x)
            .count()
    }

    pub fn red_degree(&self, x: usize) -> usize {
        self.red_edges
            .iter()
            .filter(|e| e.u == x || e.v == x)
            .count()
    }

    /// Checks the structural invariants against the host graph.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let t = self.size();
        if self.neighborhood.len() + t != self.r + 1 {
            return Err(Error::Domain(format!(
                "cluster {:?} is not tight",
                self.cluster
            )));
        }
        for v in self.cluster {
            if g.degree(v) != self.r || g.closed_neighbors(v) != self.closed() {
                return Err(Error::Domain(format!(
                    "vertex {} breaks the cluster shape",
                    v + 1
                )));
            }
        }
        for x in self.neighborhood {
            if self.blue_degree(x) > self.red_degree(x) {
                return Err(Error::Domain(format!("vertex {} has d_B > d_R", x + 1)));
            }
        }
        if self.blue_edges.iter().any(|e| e.touches(self.cluster)) {
            return Err(Error::Domain("a blue edge touches the cluster".into()));
        }
        Ok(())
    }
}

/// `true` iff the clique `k` has exactly `r + 1 − |k|` common neighbors.
pub fn is_tight(g: &Graph, r: usize, k: VertexSet) -> Result<bool> {
    if !g.is_clique(k) {
        return Err(Error::Domain(format!("{k:?} is not a clique")));
    }
    let common = g.common_neighborhood(k)?;
    Ok(common.len() + k.len() == r + 1)
}

/// Clusters ordered by least vertex. Singletons count.
pub fn find_clusters(g: &Graph, r: usize) -> Vec<VertexSet> {
    let mut classes: BTreeMap<u64, VertexSet> = BTreeMap::new();
    for v in 0..g.vertex_count() {
        if g.degree(v) == r && r > 0 {
            classes
                .entry(g.closed_neighbors(v).0)
                .or_default()
                .insert(v);
        }
    }
    let mut out: Vec<VertexSet> = classes.into_values().collect();
    out.sort_by_key(|c| VertexSet::min(*c));
    out
}

pub fn analyze_cluster(g: &Graph, r: usize, cluster: VertexSet) -> Result<ClusterDecomposition> {
    if !find_clusters(g, r).contains(&cluster) {
        return Err(Error::Domain(format!(
            "{cluster:?} is not a cluster for r={r}"
        )));
    }
    let s = g.common_neighborhood(cluster)?;
    let closed = cluster.union(s);
    let red = g.complement_within(s)?;
    let mut red_edges = Vec::new();
    let members: Vec<usize> = s.iter().collect();
    for (i, &x) in members.iter().enumerate() {
        for &y in &members[i + 1..] {
            if !g.has_edge(x, y) {
                red_edges.push(Edge::new(x, y));
            }
        }
    }
    let outside = g.vertices().difference(closed);
    let mut blue_edges: Vec<Edge> = s
        .iter()
        .flat_map(|x| {
            g.neighbors(x)
                .intersection(outside)
                .iter()
                .map(move |y| Edge::new(x, y))
        })
        .collect();
    blue_edges.sort_unstable();
    Ok(ClusterDecomposition {
        r,
        cluster,
        neighborhood: s,
        red,
        red_edges,
        blue_edges,
    })
}

/// All clusters with their decompositions.
pub fn decompose_all(g: &Graph, r: usize) -> Vec<ClusterDecomposition> {
    find_clusters(g, r)
        .into_iter()
        .map(|t| analyze_cluster(g, r, t).expect("found clusters are clusters"))
        .collect()
}

/// Edges with exactly `r − 1` common neighbors.
pub fn tight_edges(g: &Graph, r: usize) -> Vec<Edge> {
    g.edges()
        .into_iter()
        .filter(|e| g.neighbors(e.u).intersection(g.neighbors(e.v)).len() + 1 == r)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClusterClass {
    Fold,
    ColexFold,
    PartialFold,
    Unfoldable,
    HeavyRed,
}

impl ClusterClass {
    pub fn name(self) -> &'static str {
        match self {
            ClusterClass::Fold => "FOLD",
            ClusterClass::ColexFold => "COLEX_FOLD",
            ClusterClass::PartialFold => "PARTIAL_FOLD",
            ClusterClass::Unfoldable => "UNFOLDABLE",
            ClusterClass::HeavyRed => "HEAVY_RED",
        }
    }
}

/// Which local move the cluster admits, in the order fold, colex fold,
/// partial fold; otherwise unfoldable or heavy-red.
pub fn classify(g: &Graph, cd: &ClusterDecomposition) -> ClusterClass {
    let (er, eb, r) = (cd.e_red(), cd.e_blue(), cd.r);
    let k = k_total(g);
    let folded = k_total(&crate::moves::fold(g, cd).result);
    if k < folded && eb >= er {
        ClusterClass::Fold
    } else if eb < er && er <= r {
        ClusterClass::ColexFold
    } else if eb < er && 2 * cd.size() + 1 >= r {
        ClusterClass::PartialFold
    } else if k >= folded {
        ClusterClass::Unfoldable
    } else {
        ClusterClass::HeavyRed
    }
}

pub fn classify_cluster(g: &Graph, r: usize, cluster: VertexSet) -> Result<ClusterClass> {
    if !g.is_connected() {
        return Err(Error::Domain(
            "classification needs a connected graph".into(),
        ));
    }
    Ok(classify(g, &analyze_cluster(g, r, cluster)?))
}

/// JSON cluster report.
#[derive(Debug, Serialize)]
pub struct ClusterReport {
    #[serde(rename = "T")]
    pub t: Vec<usize>,
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    pub red_edges: Vec<[usize; 2]>,
    pub blue_edges: Vec<[usize; 2]>,
    #[serde(rename = "e_R")]
    pub e_r: usize,
    #[serde(rename = "e_B")]
    pub e_b: usize,
    pub class: &'static str,
}

impl ClusterReport {
    /// 1-based labels.
    pub fn new(cd: &ClusterDecomposition, class: ClusterClass) -> Self {
        let labels = |s: VertexSet| s.iter().map(|v| v + 1).collect();
        let pairs = |es: &[Edge]| es.iter().map(|e| [e.u + 1, e.v + 1]).collect();
        ClusterReport {
            t: labels(cd.cluster),
            s: labels(cd.neighborhood),
            red_edges: pairs(&cd.red_edges),
            blue_edges: pairs(&cd.blue_edges),
            e_r: cd.e_red(),
            e_b: cd.e_blue(),
            class: class.name(),
        }
    }
}
