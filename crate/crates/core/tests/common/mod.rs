#![allow(dead_code)]

use bnb_core::{Hops, Tree};
use proptest::prelude::*;

pub mod oracle;
pub use oracle::*;

/// Random labelled trees on `lo..=hi` vertices.
pub fn arb_tree(lo: usize, hi: usize) -> impl Strategy<Value = Tree> {
    (lo.max(2)..=hi).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n - 2).prop_map(move |seq| from_prufer(n, &seq))
    })
}

/// A tree together with an arbitrary broadcast on it.
pub fn arb_tree_and_strengths(lo: usize, hi: usize) -> impl Strategy<Value = (Tree, Vec<Hops>)> {
    arb_tree(lo, hi).prop_flat_map(|t| {
        let caps: Vec<_> = (0..t.order()).map(|v| (0..=t.ecc(v)).boxed()).collect();
        (Just(t), caps)
    })
}

/// Calls `visit` on every broadcast of `t`.
pub fn for_each_broadcast(t: &Tree, mut visit: impl FnMut(&[Hops])) {
    let n = t.order();
    let mut f = vec![0; n];
    loop {
        visit(&f);
        let mut v = 0;
        while v < n && f[v] == t.ecc(v) {
            f[v] = 0;
            v += 1;
        }
        if v == n {
            return;
        }
        f[v] += 1;
    }
}

/// Brute-force α_bn and α_h over all broadcasts.
pub fn brute_alphas(t: &Tree) -> (Hops, Hops) {
    let (mut bn, mut h) = (0, 0);
    for_each_broadcast(t, |f| {
        let w: Hops = f.iter().sum();
        if w > bn && bn_by_definition(t, f) {
            bn = w;
        }
        if w > h && hearing_by_definition(t, f) {
            h = w;
        }
    });
    (bn, h)
}

/// Brute-force independence number.
pub fn brute_alpha(t: &Tree) -> usize {
    let n = t.order();
    (0u32..1 << n)
        .filter(|&s| {
            t.edges()
                .iter()
                .all(|&(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0)
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

pub fn fixture(name: &str) -> Tree {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/");
    let text = std::fs::read_to_string(format!("{path}{name}")).unwrap();
    bnb_core::corpus::parse_edge_list(&text).unwrap()
}

pub fn family(spec: &str) -> Tree {
    bnb_core::corpus::build_family(&spec.parse().unwrap()).unwrap()
}
