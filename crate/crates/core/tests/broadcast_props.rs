mod common;

use bnb_core::{Broadcast, Hops, Tree};
use common::{arb_tree, arb_tree_and_strengths, bn_by_definition, hearing_by_definition};
use proptest::prelude::*;

/// Edge sets each broadcaster covers, computed from distances.
fn covered_sets(t: &Tree, f: &[Hops]) -> Vec<Vec<(usize, usize)>> {
    (0..t.order())
        .filter(|&v| f[v] > 0)
        .map(|v| {
            t.edges()
                .iter()
                .copied()
                .filter(|&(a, b)| {
                    let (da, db) = (t.dist(v, a), t.dist(v, b));
                    da <= f[v] && db <= f[v] && !(da == f[v] && db == f[v])
                })
                .collect()
        })
        .collect()
}

/// No single-vertex increment keeps the broadcast bn-independent.
fn maximal_by_increments(t: &Tree, f: &[Hops]) -> bool {
    (0..t.order()).all(|v| {
        if f[v] == t.ecc(v) {
            return true;
        }
        let mut g = f.to_vec();
        g[v] += 1;
        !bn_by_definition(t, &g)
    })
}

fn independent_subset(t: &Tree, mask: u64) -> Vec<usize> {
    let mut set: Vec<usize> = Vec::new();
    for v in 0..t.order() {
        if mask >> v & 1 == 1 && set.iter().all(|&u| !t.has_edge(u, v)) {
            set.push(v);
        }
    }
    set
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn bn_check_matches_definition((t, f) in arb_tree_and_strengths(1, 10)) {
        let b = Broadcast::new(&t, f.clone()).unwrap();
        prop_assert_eq!(b.is_bn_independent(), bn_by_definition(&t, &f));
        prop_assert_eq!(b.is_hearing_independent(), hearing_by_definition(&t, &f));
        if let Some(v) = b.bn_violation() {
            prop_assert!(f[v.first] > 0 && f[v.second] > 0);
            prop_assert!(b.hears(v.vertex, v.first) && b.hears(v.vertex, v.second));
        }
    }

    #[test]
    fn coverage_disjoint_iff_bn((t, f) in arb_tree_and_strengths(2, 10)) {
        let sets = covered_sets(&t, &f);
        let mut count = std::collections::BTreeMap::new();
        for e in sets.iter().flatten() {
            *count.entry(*e).or_insert(0) += 1;
        }
        let disjoint = count.values().all(|&c| c == 1);
        prop_assert_eq!(disjoint, bn_by_definition(&t, &f));
        let b = Broadcast::new(&t, f.clone()).unwrap();
        for (v, set) in (0..t.order()).filter(|&v| f[v] > 0).zip(&sets) {
            prop_assert_eq!(&b.covered_by(v), set);
        }
    }

    #[test]
    fn maximality_matches_increment_oracle((t, f) in arb_tree_and_strengths(2, 9)) {
        let b = Broadcast::new(&t, f.clone()).unwrap();
        if b.is_bn_independent() {
            prop_assert_eq!(b.is_maximal_bn().unwrap(), maximal_by_increments(&t, &f));
        }
    }

    #[test]
    fn greedy_extension_is_maximal((t, f) in arb_tree_and_strengths(2, 9)) {
        // Drop broadcasters until independent, then raise greedily.
        let mut g = f.clone();
        for v in 0..t.order() {
            if !bn_by_definition(&t, &g) {
                g[v] = 0;
            }
        }
        prop_assume!(bn_by_definition(&t, &g));
        let mut changed = true;
        while changed {
            changed = false;
            for v in 0..t.order() {
                if g[v] < t.ecc(v) {
                    g[v] += 1;
                    if bn_by_definition(&t, &g) {
                        changed = true;
                    } else {
                        g[v] -= 1;
                    }
                }
            }
        }
        let b = Broadcast::new(&t, g).unwrap();
        prop_assert!(b.is_maximal_bn().unwrap());
        prop_assert!(b.is_dominating());
    }

    #[test]
    fn indicator_of_independent_set(t in arb_tree(1, 12), mask in any::<u64>()) {
        let set = independent_subset(&t, mask);
        let b = Broadcast::indicator(&t, &set).unwrap();
        prop_assert!(b.is_bn_independent());
        prop_assert!(b.is_hearing_independent());
        prop_assert_eq!(b.weight() as usize, set.len());
    }

    #[test]
    fn unit_strengths_reduce_to_set_independence(t in arb_tree(2, 12), mask in any::<u64>()) {
        let set: Vec<usize> = (0..t.order()).filter(|&v| mask >> v & 1 == 1).collect();
        let independent = set.iter().all(|&u| set.iter().all(|&v| !t.has_edge(u, v)));
        let b = Broadcast::indicator(&t, &set).unwrap();
        prop_assert_eq!(b.is_bn_independent(), independent);
        prop_assert_eq!(b.is_hearing_independent(), independent);
    }

    #[test]
    fn violations_persist_under_growth(
        (t, f) in arb_tree_and_strengths(2, 10),
        bumps in proptest::collection::vec(0u32..4, 10),
    ) {
        let b = Broadcast::new(&t, f.clone()).unwrap();
        if let Some(v) = b.bn_violation() {
            let g: Vec<Hops> = (0..t.order())
                .map(|u| (f[u] + bumps[u]).min(t.ecc(u)))
                .collect();
            let grown = Broadcast::new(&t, g.clone()).unwrap();
            prop_assert!(!grown.is_bn_independent());
            let pair = [v.first, v.second];
            let overlap = (0..t.order()).any(|u| {
                pair.iter().all(|&p| grown.hears(u, p))
                    && !pair.iter().all(|&p| t.dist(u, p) == g[p])
            });
            prop_assert!(overlap);
        }
    }

    #[test]
    fn independence_is_downward_closed(
        (t, f) in arb_tree_and_strengths(2, 10),
        cuts in proptest::collection::vec(0u32..4, 10),
    ) {
        if bn_by_definition(&t, &f) {
            let g: Vec<Hops> = (0..t.order()).map(|u| f[u].saturating_sub(cuts[u])).collect();
            prop_assert!(Broadcast::new(&t, g).unwrap().is_bn_independent());
        }
    }

    #[test]
    fn analyze_is_pure((t, f) in arb_tree_and_strengths(1, 10)) {
        let b = Broadcast::new(&t, f).unwrap();
        let first = b.analyze();
        prop_assert_eq!(&first, &b.analyze());
        prop_assert_eq!(first.undominated.is_empty(), b.is_dominating());
    }

    #[test]
    fn private_boundary_by_reduction((t, f) in arb_tree_and_strengths(1, 9)) {
        let b = Broadcast::new(&t, f.clone()).unwrap();
        for v in b.broadcasters() {
            let mut g = f.clone();
            g[v] -= 1;
            let reduced = Broadcast::new(&t, g).unwrap();
            let expected: Vec<usize> = (0..t.order())
                .filter(|&u| b.is_dominated(u) && !reduced.is_dominated(u))
                .collect();
            prop_assert_eq!(b.private_boundary(v), expected);
        }
    }

    #[test]
    fn text_round_trip((t, f) in arb_tree_and_strengths(1, 10)) {
        let b = Broadcast::new(&t, f).unwrap();
        let back = Broadcast::parse(&t, &b.to_text()).unwrap();
        prop_assert_eq!(back.strengths(), b.strengths());
    }
}
