//! Exact clique counting.
//!
//! Every clique is reached exactly once by extending it only with
//! higher-numbered common neighbors, so one depth-first pass counts all
//! sizes at once.

use std::collections::BTreeMap;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::graph::{Edge, Graph, VertexSet};

/// `k_t(G)` for every `t ≥ 2`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct CliqueProfile {
    /// `counts[i]` is `k_{i+2}`; trailing zeros are trimmed.
    counts: Vec<u64>,
}

impl CliqueProfile {
    pub fn from_counts(counts: impl IntoIterator<Item = (usize, u64)>) -> Self {
        let mut p = CliqueProfile::default();
        for (t, c) in counts {
            assert!(t >= 2, "clique sizes start at 2");
            if p.counts.len() <= t - 2 {
                p.counts.resize(t - 1, 0);
            }
            p.counts[t - 2] = c;
        }
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.counts.last() == Some(&0) {
            self.counts.pop();
        }
    }

    /// `k_t`; zero for `t < 2` or beyond the largest clique.
    pub fn get(&self, t: usize) -> u64 {
        if t < 2 {
            return 0;
        }
        self.counts.get(t - 2).copied().unwrap_or(0)
    }

    /// Size of the largest clique (0 when there are no edges).
    pub fn clique_number(&self) -> usize {
        if self.counts.is_empty() {
            0
        } else {
            self.counts.len() + 1
        }
    }

    /// `k(G) = Σ_{t≥2} k_t(G)`.
    pub fn total(&self) -> u64 {
        self.counts
            .iter()
            .try_fold(0u64, |a, &c| a.checked_add(c))
            .expect("clique total overflows u64")
    }

    /// `(t, k_t)` pairs for `t = 2..=clique_number`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().enumerate().map(|(i, &c)| (i + 2, c))
    }

    /// Profile of a disjoint union.
    pub fn add(&self, other: &CliqueProfile) -> CliqueProfile {
        let len = self.counts.len().max(other.counts.len());
        let counts = (0..len)
            .map(|i| {
                let a = self.counts.get(i).copied().unwrap_or(0);
                let b = other.counts.get(i).copied().unwrap_or(0);
                a.checked_add(b).expect("clique count overflows u64")
            })
            .collect();
        CliqueProfile { counts }
    }

    pub fn scaled(&self, k: u64) -> CliqueProfile {
        let counts = self
            .counts
            .iter()
            .map(|&c| c.checked_mul(k).expect("clique count overflows u64"))
            .collect();
        let mut p = CliqueProfile { counts };
        p.trim();
        p
    }
}

impl std::fmt::Debug for CliqueProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_tuple("CliqueProfile").field(&self.counts).finish()
    }
}

/// Serializes as `{"k": {"2": n2, "3": n3, ..}, "total": n}`.
impl Serialize for CliqueProfile {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Sizes<'a>(&'a CliqueProfile);
        impl Serialize for Sizes<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.counts.len()))?;
                for (t, c) in self.0.iter() {
                    m.serialize_entry(&t.to_string(), &c)?;
                }
                m.end()
            }
        }
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("k", &Sizes(self))?;
        m.serialize_entry("total", &self.total())?;
        m.end()
    }
}

fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !((2u64 << v) - 1)
    }
}

fn extend(g: &Graph, size: usize, cand: u64, counts: &mut Vec<u64>) {
    let mut rest = cand;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let t = size + 1;
        if counts.len() <= t - 2 {
            counts.resize(t - 1, 0);
        }
        counts[t - 2] = counts[t - 2]
            .checked_add(1)
            .expect("clique count overflows u64");
        let next = cand & g.neighbors(u).0 & above(u);
        if next != 0 {
            extend(g, t, next, counts);
        }
    }
}

pub fn clique_profile(g: &Graph) -> CliqueProfile {
    let mut counts = Vec::new();
    for v in 0..g.vertex_count() {
        let cand = g.neighbors(v).0 & above(v);
        if cand != 0 {
            extend(g, 1, cand, &mut counts);
        }
    }
    let mut p = CliqueProfile { counts };
    p.trim();
    p
}

pub fn k_total(g: &Graph) -> u64 {
    clique_profile(g).total()
}

/// Number of `size`-cliques inside `within` (`size = 0` counts the empty
/// clique once).
pub fn count_cliques_in(g: &Graph, within: VertexSet, size: usize) -> u64 {
    fn go(g: &Graph, cand: u64, need: usize) -> u64 {
        if need == 0 {
            return 1;
        }
        if (cand.count_ones() as usize) < need {
            return 0;
        }
        let mut total = 0u64;
        let mut rest = cand;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            total += go(g, cand & g.neighbors(u).0 & above(u), need - 1);
        }
        total
    }
    go(g, within.0, size)
}

/// `k_t(e)` for every edge: the number of `t`-cliques containing `e`, i.e.
/// the `(t-2)`-cliques inside the common neighborhood of its endpoints.
pub fn kt_per_edge(g: &Graph, t: usize) -> BTreeMap<Edge, u64> {
    assert!(t >= 2, "clique sizes start at 2");
    g.edges()
        .into_iter()
        .map(|e| {
            let common = g.neighbors(e.u).intersection(g.neighbors(e.v));
            (e, count_cliques_in(g, common, t - 2))
        })
        .collect()
}

/// Calls `f` on every clique with at least two vertices.
pub fn for_each_clique<F: FnMut(VertexSet)>(g: &Graph, mut f: F) {
    fn go<F: FnMut(VertexSet)>(g: &Graph, clique: u64, cand: u64, f: &mut F) {
        let mut rest = cand;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let c = clique | 1u64 << u;
            f(VertexSet(c));
            go(g, c, cand & g.neighbors(u).0 & above(u), f);
        }
    }
    for v in 0..g.vertex_count() {
        go(g, 1u64 << v, g.neighbors(v).0 & above(v), &mut f);
    }
}
