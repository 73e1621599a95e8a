mod common;

use std::collections::BTreeSet;

use bnb_core::corpus::{
    build_family, canonical_level_sequence, emit_edge_list, emit_graph6, enumerate_trees,
    parse_edge_list, parse_graph6, FamilySpec,
};
use common::{canonical_string, family, fixture, prufer_oracle_count};
use proptest::prelude::*;

#[test]
fn counts_match_prufer_oracle() {
    let expected = [0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
    for (n, &count) in expected.iter().enumerate() {
        let oracle = prufer_oracle_count(n);
        assert_eq!(oracle, count, "oracle at n={n}");
        assert_eq!(enumerate_trees(n).count(), oracle, "enumeration at n={n}");
    }
}

#[test]
fn enumerated_trees_are_valid_and_distinct() {
    for n in 1..=10 {
        let mut seen = BTreeSet::new();
        for t in enumerate_trees(n) {
            assert_eq!(t.order(), n);
            assert_eq!(t.edges().len(), n - 1);
            assert!(t.to_forest().is_connected());
            assert!(seen.insert(canonical_string(&t)), "duplicate at n={n}");
        }
    }
}

#[test]
fn graph6_round_trip() {
    for n in 1..=8 {
        for t in enumerate_trees(n) {
            let g6 = emit_graph6(&t).unwrap();
            let back = parse_graph6(&g6).unwrap();
            assert_eq!(back.edges(), t.edges(), "{g6}");
        }
    }
}

#[test]
fn edge_list_round_trip() {
    for t in [
        family("dspider:2,2/5/2,2"),
        fixture("construction26.edges"),
        fixture("equal18.edges"),
    ] {
        let back = parse_edge_list(&emit_edge_list(&t)).unwrap();
        assert_eq!(back.edges(), t.edges());
    }
}

#[test]
fn fixture_orders() {
    assert_eq!(family("dspider:2,2/5/2,2").order(), 14);
    assert_eq!(fixture("construction26.edges").order(), 26);
    assert_eq!(fixture("equal18.edges").order(), 18);
}

fn small_legs() -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(1usize..5, 1..5)
}

proptest! {
    #[test]
    fn spider_order(legs in proptest::collection::vec(1usize..6, 3..7)) {
        let spec = FamilySpec::Spider(legs.clone());
        let t = build_family(&spec).unwrap();
        prop_assert_eq!(t.order(), 1 + legs.iter().sum::<usize>());
        prop_assert_eq!(spec.order(), t.order());
    }

    #[test]
    fn double_spider_order(legs1 in small_legs(), bridge in 1usize..7, legs2 in small_legs()) {
        let spec = FamilySpec::DoubleSpider { legs1: legs1.clone(), bridge, legs2: legs2.clone() };
        let t = build_family(&spec).unwrap();
        let expected = 2 + legs1.iter().sum::<usize>() + legs2.iter().sum::<usize>() + bridge - 1;
        prop_assert_eq!(t.order(), expected);
        prop_assert_eq!(t.dist(0, 1) as usize, bridge);
    }

    #[test]
    fn family_spec_text_round_trips(legs1 in small_legs(), bridge in 1usize..7, legs2 in small_legs()) {
        let spec = FamilySpec::DoubleSpider { legs1, bridge, legs2 };
        let back: FamilySpec = spec.to_string().parse().unwrap();
        prop_assert_eq!(back, spec);
    }

    #[test]
    fn canonical_form_ignores_labels(t in common::arb_tree(1, 12), seed in any::<u64>()) {
        let n = t.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let edges: Vec<_> = t.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let relabelled = bnb_core::Tree::new(n, &edges).unwrap();
        prop_assert_eq!(canonical_level_sequence(&t), canonical_level_sequence(&relabelled));
    }
}
