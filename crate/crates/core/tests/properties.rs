//! Randomized properties of the graph primitives, the canonical form and the
//! clique counter, checked against the brute-force helpers.

mod common;

use std::collections::HashMap;

use cliquebound::colex::kt_colex;
use cliquebound::{canonical_form, clique_profile, Edge, Graph, VertexSet};
use common::{brute_kt, brute_profile, isomorphic};
use proptest::prelude::*;

fn graph_on(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i] {
                edges.push(Edge::new(u, v));
            }
            i += 1;
        }
    }
    Graph::with_vertices(n, &edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| graph_on(n, &bits))
    })
}

fn arb_graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_form_ignores_labels((g, perm) in arb_graph_and_perm(8)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn profile_matches_subset_scan(g in arb_graph(9)) {
        let p = clique_profile(&g);
        let brute = brute_profile(&g);
        for (t, &c) in brute.iter().enumerate().skip(2) {
            prop_assert_eq!(p.get(t), c, "t={}", t);
        }
    }

    #[test]
    fn adding_an_edge_never_lowers_kt(g in arb_graph(8), pick in any::<usize>()) {
        let n = g.vertex_count();
        let missing: Vec<Edge> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v)))
            .filter(|e| !g.has_edge(e.u, e.v))
            .collect();
        prop_assume!(!missing.is_empty());
        let h = g.with_edge(missing[pick % missing.len()]).unwrap();
        for t in 2..=n {
            prop_assert!(brute_kt(&h, t) >= brute_kt(&g, t), "t={}", t);
        }
    }

    #[test]
    fn complement_within_partitions_pairs(g in arb_graph(9), mask in any::<u64>()) {
        let n = g.vertex_count();
        let s = VertexSet(mask & ((1u64 << n) - 1));
        let red = g.complement_within(s).unwrap();
        let inside: Vec<usize> = s.iter().collect();
        prop_assert_eq!(red.vertex_count(), inside.len());
        for (i, &a) in inside.iter().enumerate() {
            for (j, &b) in inside.iter().enumerate().skip(i + 1) {
                prop_assert_ne!(red.has_edge(i, j), g.has_edge(a, b));
            }
        }
    }

    #[test]
    fn components_partition_and_disconnect(g in arb_graph(9)) {
        let comps = g.components();
        let mut seen = VertexSet::EMPTY;
        for &c in &comps {
            prop_assert!(seen.intersection(c).is_empty());
            seen = seen.union(c);
            prop_assert!(g.induced(c).is_connected());
        }
        prop_assert_eq!(seen, g.vertices());
        for e in g.edges() {
            prop_assert!(comps.iter().any(|&c| e.within(c)));
        }
    }

    #[test]
    fn union_profile_is_sum(a in arb_graph(6), b in arb_graph(6)) {
        let u = a.disjoint_union(&b).unwrap();
        prop_assert_eq!(clique_profile(&u), clique_profile(&a).add(&clique_profile(&b)));
    }

    #[test]
    fn kruskal_katona_bound(g in arb_graph(8)) {
        let m = g.edge_count();
        for t in 3..=g.vertex_count() {
            prop_assert!(brute_kt(&g, t) <= kt_colex(m, t), "m={} t={}", m, t);
        }
    }
}

/// Every labeled graph on up to five vertices, grouped by certificate, must
/// give exactly the isomorphism classes found by backtracking.
#[test]
fn certificates_separate_small_classes() {
    let expected = [1usize, 2, 4, 11, 34];
    for n in 1..=5 {
        let pairs = n * (n - 1) / 2;
        let mut by_cert: HashMap<_, Vec<Graph>> = HashMap::new();
        for mask in 0u32..(1u32 << pairs) {
            let bits: Vec<bool> = (0..pairs).map(|i| mask >> i & 1 == 1).collect();
            let g = graph_on(n, &bits);
            by_cert.entry(canonical_form(&g)).or_default().push(g);
        }
        assert_eq!(by_cert.len(), expected[n - 1], "n={n}");
        let reps: Vec<&Graph> = by_cert.values().map(|v| &v[0]).collect();
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(!isomorphic(a, b), "n={n}: split class");
            }
        }
        for class in by_cert.values() {
            assert!(
                class.iter().all(|g| isomorphic(g, &class[0])),
                "n={n}: merged classes"
            );
        }
    }
}
