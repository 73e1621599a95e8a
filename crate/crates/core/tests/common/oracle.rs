//! Independent oracles shared by the core tests and the acceptance suite.
#![allow(dead_code)]

use std::collections::BTreeSet;

use bnb_core::{Hops, Tree};

/// Standard Prüfer decoding with a linear scan for the smallest leaf.
pub fn from_prufer(n: usize, seq: &[usize]) -> Tree {
    assert_eq!(seq.len() + 2, n.max(2));
    if n == 1 {
        return Tree::new(1, &[]).unwrap();
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Tree::new(n, &edges).unwrap()
}

/// AHU encoding of `t` rooted at `root`.
fn ahu(t: &Tree, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| ahu(t, u, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Isomorphism invariant: the smallest AHU string over every root.
pub fn canonical_string(t: &Tree) -> String {
    (0..t.order()).map(|r| ahu(t, r, usize::MAX)).min().unwrap()
}

/// bn-independence straight from the definition: every vertex hearing two
/// broadcasters lies on both boundaries.
pub fn bn_by_definition(t: &Tree, f: &[Hops]) -> bool {
    let n = t.order();
    let hears = |u: usize, v: usize| f[v] > 0 && t.dist(u, v) <= f[v];
    let on_boundary = |u: usize, v: usize| f[v] > 0 && t.dist(u, v) == f[v];
    for a in 0..n {
        for b in a + 1..n {
            if f[a] == 0 || f[b] == 0 {
                continue;
            }
            for u in 0..n {
                if hears(u, a) && hears(u, b) && !(on_boundary(u, a) && on_boundary(u, b)) {
                    return false;
                }
            }
        }
    }
    true
}

/// No broadcaster hears another.
pub fn hearing_by_definition(t: &Tree, f: &[Hops]) -> bool {
    let n = t.order();
    (0..n).all(|u| f[u] == 0 || (0..n).all(|v| v == u || f[v] == 0 || t.dist(u, v) > f[v]))
}

fn partitions(
    total: usize,
    max_part: usize,
    parts_left: usize,
    out: &mut Vec<Vec<usize>>,
    acc: &mut Vec<usize>,
) {
    if total == 0 {
        out.push(acc.clone());
        return;
    }
    if parts_left == 0 {
        return;
    }
    for p in (1..=max_part.min(total)).rev() {
        acc.push(p);
        partitions(total - p, p, parts_left - 1, out, acc);
        acc.pop();
    }
}

fn next_permutation(s: &mut [usize]) -> bool {
    let Some(i) = (1..s.len()).rev().find(|&i| s[i - 1] < s[i]) else {
        return false;
    };
    let j = (i..s.len()).rev().find(|&j| s[j] > s[i - 1]).unwrap();
    s.swap(i - 1, j);
    s[i..].reverse();
    true
}

/// Non-isomorphic trees of order `n` via Prüfer sequences. Relabelling by
/// decreasing degree makes label multiplicities nonincreasing, so those
/// sequences reach every isomorphism class.
pub fn prufer_oracle_count(n: usize) -> usize {
    if n <= 2 {
        return usize::from(n > 0);
    }
    let mut parts = Vec::new();
    partitions(n - 2, n - 2, n, &mut parts, &mut Vec::new());
    let mut seen = BTreeSet::new();
    for part in parts {
        let mut seq: Vec<usize> = part
            .iter()
            .enumerate()
            .flat_map(|(label, &k)| std::iter::repeat_n(label, k))
            .collect();
        loop {
            seen.insert(canonical_string(&from_prufer(n, &seq)));
            if !next_permutation(&mut seq) {
                break;
            }
        }
    }
    seen.len()
}
