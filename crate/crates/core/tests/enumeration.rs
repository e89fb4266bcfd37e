mod common;

use std::collections::HashSet;

use cliquebound::canon::canonical_form;
use cliquebound::search::{enumerate_graphs, f_max_with, Catalog, SearchSpec};
use cliquebound::Certificate;

use common::{closure_classes, for_each_ordered_labeling};

fn labeled_classes(m: usize, r: usize) -> HashSet<Certificate> {
    let mut out = HashSet::new();
    for_each_ordered_labeling(m, r, |g| {
        assert_eq!(g.edge_count(), m);
        assert!(g.max_degree() <= r);
        assert!(g.isolated().is_empty());
        out.insert(canonical_form(g));
    });
    out
}

#[test]
fn class_counts_match_labeled_oracle() {
    for r in 1..=4 {
        for m in 1..=9 {
            let ours: HashSet<Certificate> = enumerate_graphs(&SearchSpec::new(m, r))
                .unwrap()
                .iter()
                .map(canonical_form)
                .collect();
            assert_eq!(ours, labeled_classes(m, r), "m={m} r={r}");
        }
    }
}

#[test]
fn class_counts_match_closure_oracle_at_eight_edges() {
    let oracle = closure_classes(8, 3);
    let ours = enumerate_graphs(&SearchSpec::new(8, 3)).unwrap();
    assert_eq!(ours.len(), oracle[8].len());
}

#[test]
fn connected_only_is_the_connected_part() {
    for r in 2..=4 {
        for m in 1..=8 {
            let all = enumerate_graphs(&SearchSpec::new(m, r)).unwrap();
            let connected = enumerate_graphs(&SearchSpec::new(m, r).connected_only(true)).unwrap();
            let want: HashSet<Certificate> = all
                .iter()
                .filter(|g| g.is_connected())
                .map(canonical_form)
                .collect();
            let got: HashSet<Certificate> = connected.iter().map(canonical_form).collect();
            assert_eq!(got, want, "m={m} r={r}");
            assert_eq!(got.len(), connected.len());
        }
    }
}

#[test]
fn f_is_monotone_in_r() {
    let catalogs: Vec<Catalog> = (1..=4).map(|r| Catalog::build(12, r, 2).unwrap()).collect();
    for m in 1..=12 {
        let fs: Vec<u64> = catalogs
            .iter()
            .enumerate()
            .map(|(i, c)| f_max_with(c, &SearchSpec::new(m, i + 1)).f)
            .collect();
        assert!(fs.windows(2).all(|w| w[0] <= w[1]), "m={m}: {fs:?}");
    }
}

#[test]
fn thread_count_does_not_change_results() {
    let cat1 = Catalog::build(11, 4, 1).unwrap();
    let cat8 = Catalog::build(11, 4, 8).unwrap();
    for m in 1..=11 {
        let a = f_max_with(&cat1, &SearchSpec::new(m, 4).threads(1));
        let b = f_max_with(&cat8, &SearchSpec::new(m, 4).threads(8));
        assert_eq!(a.argmax, b.argmax);
        assert_eq!((a.f, a.graphs_enumerated), (b.f, b.graphs_enumerated));
        assert_eq!(cat1.level(m).len(), cat8.level(m).len());
    }
}
