//! Non-isomorphic free trees of a given order.
//!
//! Rooted trees are generated as canonical level sequences with the
//! Beyer-Hedetniemi successor rule, and a rooted tree is kept exactly when
//! its sequence equals the canonical form of the underlying free tree: the
//! lexicographically smallest canonical level sequence over its centroid
//! rootings. Each isomorphism class therefore appears once, in the
//! (descending) order the successor rule produces.

use crate::tree::Tree;

/// Canonical level sequence of `t` rooted at `root`: preorder depths with
/// sibling subtrees arranged in decreasing lexicographic order.
pub fn rooted_level_sequence(t: &Tree, root: usize) -> Vec<usize> {
    fn encode(t: &Tree, v: usize, parent: usize, depth: usize) -> Vec<usize> {
        let mut kids: Vec<Vec<usize>> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| encode(t, w, v, depth + 1))
            .collect();
        kids.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = vec![depth];
        for k in kids {
            out.extend(k);
        }
        out
    }
    encode(t, root, usize::MAX, 0)
}

/// One or two centroid vertices, ascending.
pub fn centroids(t: &Tree) -> Vec<usize> {
    let n = t.order();
    // Subtree sizes under an arbitrary rooting at 0, in BFS order.
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![0];
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &w in t.neighbors(v) {
            if w != parent[v] {
                parent[w] = v;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().rev().take(n - 1) {
        size[parent[v]] += size[v];
    }
    let heaviest = |v: usize| {
        t.neighbors(v)
            .iter()
            .map(|&w| if w == parent[v] { n - size[v] } else { size[w] })
            .max()
            .unwrap_or(0)
    };
    let best = (0..n).map(heaviest).min().unwrap();
    (0..n).filter(|&v| heaviest(v) == best).collect()
}

/// Isomorphism invariant: equal for two trees exactly when they are
/// isomorphic.
pub fn canonical_level_sequence(t: &Tree) -> Vec<usize> {
    centroids(t)
        .into_iter()
        .map(|c| rooted_level_sequence(t, c))
        .min()
        .unwrap()
}

pub fn tree_from_level_sequence(levels: &[usize]) -> Tree {
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    // stack[d] = most recent vertex at depth d
    let mut stack: Vec<usize> = Vec::new();
    for (v, &d) in levels.iter().enumerate() {
        stack.truncate(d);
        if let Some(&p) = stack.last() {
            edges.push((p, v));
        }
        stack.push(v);
    }
    Tree::new(levels.len(), &edges).expect("level sequence describes a tree")
}

/// Iterator over canonical rooted level sequences of order `n`, from the path
/// `0,1,...,n-1` down to the star `0,1,...,1`.
#[derive(Debug, Clone)]
pub struct RootedTrees {
    current: Option<Vec<usize>>,
}

impl RootedTrees {
    pub fn new(n: usize) -> RootedTrees {
        RootedTrees {
            current: (n > 0).then(|| (0..n).collect()),
        }
    }
}

impl Iterator for RootedTrees {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        // Successor: p = last position with level > 1, q = last position
        // before p one level up; then copy the block [q, p) periodically.
        if let Some(p) = cur.iter().rposition(|&l| l > 1) {
            let q = cur[..p]
                .iter()
                .rposition(|&l| l == cur[p] - 1)
                .expect("a deeper vertex has an ancestor");
            let mut next = cur.clone();
            for i in p..next.len() {
                next[i] = next[i - (p - q)];
            }
            self.current = Some(next);
        }
        Some(cur)
    }
}

/// Stream of pairwise non-isomorphic trees of order `n` (none for `n = 0`).
pub fn enumerate_trees(n: usize) -> impl Iterator<Item = Tree> {
    RootedTrees::new(n).filter_map(|levels| {
        let t = tree_from_level_sequence(&levels);
        (canonical_level_sequence(&t) == levels).then_some(t)
    })
}
