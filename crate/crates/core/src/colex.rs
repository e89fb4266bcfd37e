//! Colex order on pairs, colex graphs, and the extremal constructions.
//!
//! Pairs are ordered by larger element, then smaller: `12, 13, 23, 14, ..`.
//! `C(m)` is the graph of the first `m` pairs; for `m = C(c,2) + d` with
//! `0 ≤ d < c` it is `K_c` plus one vertex joined to `d` clique vertices.

use serde::Serialize;

use crate::assembly::Assembly;
use crate::combin::{binom, choose2, pow2};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, MAX_VERTICES};

/// The `i`-th pair in colex order (1-based rank, 0-based vertices).
pub fn colex_unrank(i: usize) -> Edge {
    assert!(i >= 1, "colex ranks start at 1");
    // Larger vertex v (0-based) has ranks choose2(v)+1 ..= choose2(v+1).
    let mut v = 1;
    while choose2(v + 1) < i {
        v += 1;
    }
    Edge::new(i - choose2(v) - 1, v)
}

/// Edges of `C(m)` in colex order.
pub fn colex_edges(m: usize) -> Vec<Edge> {
    (1..=m).map(colex_unrank).collect()
}

pub fn build_colex(m: usize) -> Result<Graph> {
    if m > choose2(MAX_VERTICES) {
        return Err(Error::Capacity {
            needed: m,
            limit: choose2(MAX_VERTICES),
        });
    }
    Graph::from_edges(&colex_edges(m))
}

/// `m = a·C(r+1,2) + b`, `b = C(c,2) + d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub m: usize,
    pub r: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

/// `(c, d)` with `b = C(c,2) + d`, `0 ≤ d < c`; `(0, 0)` for `b = 0`.
pub fn split_colex(b: usize) -> (usize, usize) {
    if b == 0 {
        return (0, 0);
    }
    let mut c = 2;
    while choose2(c + 1) <= b {
        c += 1;
    }
    (c, b - choose2(c))
}

pub fn decompose(m: usize, r: usize) -> Decomposition {
    assert!(r >= 1, "degree bound must be positive");
    let block = choose2(r + 1);
    let (a, b) = (m / block, m % block);
    let (c, d) = split_colex(b);
    Decomposition { m, r, a, b, c, d }
}

/// `k(C(b)) = 2^c − c + 2^d − 2`.
pub fn k_colex(b: usize) -> u64 {
    let (c, d) = split_colex(b);
    pow2(c as u32) + pow2(d as u32) - c as u64 - 2
}

/// `k_t(C(u)) = C(c,t) + C(d,t−1)`.
pub fn kt_colex(u: usize, t: usize) -> u64 {
    assert!(t >= 2, "clique sizes start at 2");
    let (c, d) = split_colex(u);
    binom(c as i64, t as i64) + binom(d as i64, t as i64 - 1)
}

/// `k(K_{r+1}) = 2^{r+1} − r − 2`.
pub fn k_block(r: usize) -> u64 {
    pow2(r as u32 + 1) - r as u64 - 2
}

/// `g(m, r) = a(2^{r+1} − r − 2) + k(C(b))`.
pub fn g(m: usize, r: usize) -> u64 {
    let dec = decompose(m, r);
    (dec.a as u64)
        .checked_mul(k_block(r))
        .and_then(|x| x.checked_add(k_colex(dec.b)))
        .expect("g overflows u64")
}

/// `k_t(aK_{r+1} ∪ C(b))`.
pub fn gt(m: usize, r: usize, t: usize) -> u64 {
    let dec = decompose(m, r);
    dec.a as u64 * binom(r as i64 + 1, t as i64) + kt_colex(dec.b, t)
}

/// The extremal graphs for `(m, r)`: `aK_{r+1} ∪ C(b)`, and additionally
/// `aK_{r+1} ∪ K_c ∪ K_2` when `d = 1`. Blocks come first, then the colex
/// part.
pub fn extremal_family(m: usize, r: usize) -> Vec<Assembly> {
    let dec = decompose(m, r);
    let block = Graph::complete(r + 1).expect("degree bound within capacity");
    let base = Assembly::new().push(block, dec.a);
    let mut out = Vec::new();
    let colex = if dec.b > 0 {
        base.clone()
            .push(build_colex(dec.b).expect("b < C(r+1,2)"), 1)
    } else {
        base.clone()
    };
    out.push(colex);
    if dec.d == 1 {
        let alt = base
            .push(Graph::complete(dec.c).expect("c ≤ r"), 1)
            .push(Graph::complete(2).expect("K_2"), 1);
        out.push(alt);
    }
    out
}
