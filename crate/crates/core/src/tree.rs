//! Simple undirected trees and forests on dense vertex labels `0..n`.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

/// Hop distance between vertices; also the unit of broadcast strength.
pub type Hops = u32;

fn check_edges(n: usize, edges: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
    let mut seen = HashSet::with_capacity(edges.len());
    let mut out = Vec::with_capacity(edges.len());
    for &(u, v) in edges {
        for w in [u, v] {
            if w >= n {
                return Err(Error::BadVertexIndex { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::NotAForest(format!("self-loop at {u}")));
        }
        let e = (u.min(v), u.max(v));
        if !seen.insert(e) {
            return Err(Error::NotAForest(format!("repeated edge {} {}", e.0, e.1)));
        }
        out.push(e);
    }
    out.sort_unstable();
    Ok(out)
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

/// An acyclic simple graph. Components are computed at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forest {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    component: Vec<usize>,
    component_count: usize,
}

impl Forest {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Forest> {
        let edges = check_edges(n, edges)?;
        let mut sets = DisjointSets::new(n);
        for &(u, v) in &edges {
            if !sets.union(u, v) {
                return Err(Error::NotAForest(format!("edge {u} {v} closes a cycle")));
            }
        }
        let adj = adjacency(n, &edges);
        // Components are numbered by their lowest vertex.
        let mut component = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if component[start] != usize::MAX {
                continue;
            }
            component[start] = count;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if component[w] == usize::MAX {
                        component[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        Ok(Forest {
            n,
            edges,
            adj,
            component,
            component_count: count,
        })
    }

    pub fn empty() -> Forest {
        Forest {
            n: 0,
            edges: Vec::new(),
            adj: Vec::new(),
            component: Vec::new(),
            component_count: 0,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component[v]
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    /// Vertex lists of each component, each sorted, ordered by lowest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.component_count];
        for v in 0..self.n {
            out[self.component[v]].push(v);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_count == 1
    }

    pub fn into_tree(self) -> Result<Tree> {
        Tree::new(self.n, &self.edges)
    }
}

/// A tree on vertices `0..n` with `n >= 1`.
///
/// All-pairs distances and eccentricities are computed once at construction,
/// which is O(n^2) in time and memory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    dist: Vec<Hops>,
    ecc: Vec<Hops>,
}

impl Tree {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Tree> {
        if n == 0 {
            return Err(Error::NotATree("a tree needs at least one vertex".into()));
        }
        let edges = check_edges(n, edges).map_err(|e| match e {
            Error::NotAForest(msg) => Error::NotATree(msg),
            other => other,
        })?;
        if edges.len() != n - 1 {
            return Err(Error::NotATree(format!(
                "{} edges on {} vertices (expected {})",
                edges.len(),
                n,
                n - 1
            )));
        }
        let mut sets = DisjointSets::new(n);
        for &(u, v) in &edges {
            if !sets.union(u, v) {
                return Err(Error::NotATree(format!("edge {u} {v} closes a cycle")));
            }
        }
        let adj = adjacency(n, &edges);
        let mut dist = vec![Hops::MAX; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if row[w] == Hops::MAX {
                        row[w] = row[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        let ecc = (0..n)
            .map(|v| *dist[v * n..(v + 1) * n].iter().max().unwrap())
            .collect();
        Ok(Tree {
            n,
            edges,
            adj,
            dist,
            ecc,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.adj[v].len() == 1
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::BadVertexIndex {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Hops> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.dist(u, v))
    }

    pub fn eccentricity(&self, v: usize) -> Result<Hops> {
        self.check(v)?;
        Ok(self.ecc[v])
    }

    /// Unchecked distance; panics on out-of-range vertices.
    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> Hops {
        self.dist[u * self.n + v]
    }

    /// Distances from `u` to every vertex.
    #[inline]
    pub fn dist_row(&self, u: usize) -> &[Hops] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    #[inline]
    pub fn ecc(&self, v: usize) -> Hops {
        self.ecc[v]
    }

    pub fn eccentricities(&self) -> &[Hops] {
        &self.ecc
    }

    pub fn diameter(&self) -> Hops {
        self.ecc.iter().copied().max().unwrap_or(0)
    }

    /// The unique `u`-`v` path, both ends included.
    pub fn path(&self, u: usize, v: usize) -> Vec<usize> {
        let mut out = vec![u];
        let mut cur = u;
        while cur != v {
            let d = self.dist(cur, v);
            cur = *self.adj[cur]
                .iter()
                .find(|&&w| self.dist(w, v) + 1 == d)
                .expect("distance matrix is consistent");
            out.push(cur);
        }
        out
    }

    pub fn to_forest(&self) -> Forest {
        Forest::new(self.n, &self.edges).expect("a tree is a forest")
    }

    /// Subgraph induced by `vertices`, relabelled in increasing order of the
    /// original labels.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Mapped<Forest>> {
        let mut original: Vec<usize> = vertices.to_vec();
        for &v in &original {
            self.check(v)?;
        }
        original.sort_unstable();
        original.dedup();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in original.iter().enumerate() {
            local[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]))
            .collect();
        let graph = Forest::new(original.len(), &edges)?;
        Ok(Mapped { graph, original })
    }
}

/// A graph derived from a tree together with the original label of each of
/// its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mapped<G> {
    pub graph: G,
    /// `original[i]` is the host vertex that local vertex `i` stands for.
    pub original: Vec<usize>,
}

impl<G> Mapped<G> {
    pub fn original(&self, local: usize) -> usize {
        self.original[local]
    }

    pub fn local(&self, host_vertex: usize) -> Option<usize> {
        self.original.iter().position(|&v| v == host_vertex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Tree {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Tree::new(n, &edges).unwrap()
    }

    #[test]
    fn small_paths() {
        let p2 = Tree::new(2, &[(0, 1)]).unwrap();
        assert_eq!(p2.diameter(), 1);
        let p3 = Tree::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(p3.neighbors(1), &[0, 2]);
    }

    #[test]
    fn rejects_cycle() {
        let err = Tree::new(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap_err();
        assert!(matches!(err, Error::NotATree(_)));
    }

    #[test]
    fn rejects_disconnected_and_bad_counts() {
        assert!(matches!(
            Tree::new(4, &[(0, 1), (2, 3)]),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(
            Tree::new(3, &[(0, 1), (1, 2), (0, 2)]),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(Tree::new(0, &[]), Err(Error::NotATree(_))));
        assert!(matches!(
            Tree::new(2, &[(0, 2)]),
            Err(Error::BadVertexIndex { vertex: 2, n: 2 })
        ));
        assert!(matches!(Tree::new(2, &[(1, 1)]), Err(Error::NotATree(_))));
        assert!(matches!(
            Tree::new(3, &[(0, 1), (1, 0)]),
            Err(Error::NotATree(_))
        ));
    }

    #[test]
    fn distances_and_eccentricities() {
        let p4 = path(4);
        assert_eq!(p4.distance(0, 3).unwrap(), 3);
        assert_eq!(p4.eccentricity(0).unwrap(), 3);
        assert_eq!(p4.eccentricity(1).unwrap(), 2);
        assert_eq!(p4.diameter(), 3);
        for v in 0..4 {
            assert_eq!(p4.distance(v, v).unwrap(), 0);
        }
        assert!(matches!(
            p4.distance(0, 4),
            Err(Error::BadVertexIndex { .. })
        ));

        let star = Tree::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.eccentricity(0).unwrap(), 1);
        assert_eq!(star.diameter(), 2);

        // Sp(2,2,2): head 0, legs 1-2, 3-4, 5-6.
        let sp = Tree::new(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(sp.eccentricity(0).unwrap(), 2);
        assert_eq!(sp.diameter(), 4);
    }

    #[test]
    fn path_between_vertices() {
        let p5 = path(5);
        assert_eq!(p5.path(4, 1), vec![4, 3, 2, 1]);
        assert_eq!(p5.path(2, 2), vec![2]);
    }

    #[test]
    fn induced_subgraphs() {
        let p4 = path(4);
        let empty = p4.induced_subgraph(&[]).unwrap();
        assert_eq!(empty.graph.order(), 0);
        let all = p4.induced_subgraph(&[3, 2, 1, 0]).unwrap();
        assert_eq!(all.graph.edges(), p4.edges());
        let split = p4.induced_subgraph(&[0, 3]).unwrap();
        assert_eq!(split.graph.component_count(), 2);
        assert_eq!(split.original, vec![0, 3]);
        assert_eq!(split.local(3), Some(1));
        assert!(p4.induced_subgraph(&[9]).is_err());
    }

    #[test]
    fn forest_components() {
        let f = Forest::new(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(f.component_count(), 3);
        assert_eq!(f.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(Forest::new(3, &[(0, 1), (1, 2), (2, 0)]).is_err());
        assert_eq!(Forest::empty().component_count(), 0);
    }
}
