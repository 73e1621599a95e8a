//! Structural decomposition of a tree around its branch vertices.
//!
//! A *branch vertex* has degree at least 3. An *endpath* runs from a vertex
//! to a leaf with every internal vertex of degree 2; the leaves reachable from
//! a branch vertex `b` along endpaths form its leaf set `L(b)`. Degree-2
//! vertices on some endpath are *external* (`w_ext`), the rest *internal*
//! (`w_int`). Branch vertices with at most one leaf form `R(T)`.
//!
//! For a path every degree-2 vertex lies on an endpath from either end, so
//! `w_ext` is all of `W(T)` and `R(T)`, `w_int` and the interior are empty.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tree::{Forest, Hops, Mapped, Tree};

/// Leaf-distance statistics of a branch vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BranchStats {
    /// Largest distance to a leaf in its leaf set, 0 when the set is empty.
    pub max: Hops,
    pub sum: Hops,
    /// `sum - max`.
    pub loss: Hops,
}

/// Which classical shapes a tree has. The labels overlap: a star is both a
/// spider and a caterpillar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ShapeSet {
    pub path: bool,
    pub spider: bool,
    pub caterpillar: bool,
}

impl ShapeSet {
    pub fn is_other(&self) -> bool {
        !(self.path || self.spider || self.caterpillar)
    }

    pub fn labels(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.path {
            out.push("Path");
        }
        if self.spider {
            out.push("Spider");
        }
        if self.caterpillar {
            out.push("Caterpillar");
        }
        if out.is_empty() {
            out.push("Other");
        }
        out
    }
}

/// Cached decomposition of a tree. Vertex sets are sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeProfile {
    pub n: usize,
    pub leaves: Vec<usize>,
    pub stems: Vec<usize>,
    pub branch: Vec<usize>,
    pub w_ext: Vec<usize>,
    pub w_int: Vec<usize>,
    pub leaf_sets: BTreeMap<usize, Vec<usize>>,
    pub b0: Vec<usize>,
    pub b1: Vec<usize>,
    pub b2plus: Vec<usize>,
    /// `b0 ∪ b1`.
    pub r_set: Vec<usize>,
    pub loss_table: BTreeMap<usize, BranchStats>,
    pub interior: Mapped<Forest>,
    pub shape: ShapeSet,
}

impl TreeProfile {
    pub fn new(t: &Tree) -> TreeProfile {
        let n = t.order();
        let leaves: Vec<usize> = (0..n).filter(|&v| t.is_leaf(v)).collect();
        let mut stems: Vec<usize> = leaves.iter().map(|&l| t.neighbors(l)[0]).collect();
        stems.sort_unstable();
        stems.dedup();
        let branch: Vec<usize> = (0..n).filter(|&v| t.degree(v) >= 3).collect();

        let mut on_endpath = vec![false; n];
        let mut leaf_sets: BTreeMap<usize, Vec<usize>> =
            branch.iter().map(|&b| (b, Vec::new())).collect();
        for &l in &leaves {
            let walk = endpath_from_leaf(t, l);
            for &w in &walk.interior {
                on_endpath[w] = true;
            }
            if t.degree(walk.end) >= 3 {
                leaf_sets.get_mut(&walk.end).unwrap().push(l);
            }
        }
        for set in leaf_sets.values_mut() {
            set.sort_unstable();
        }

        let (w_ext, w_int): (Vec<usize>, Vec<usize>) = (0..n)
            .filter(|&v| t.degree(v) == 2)
            .partition(|&v| on_endpath[v]);

        let by_size = |pred: fn(usize) -> bool| -> Vec<usize> {
            branch
                .iter()
                .copied()
                .filter(|b| pred(leaf_sets[b].len()))
                .collect()
        };
        let b0 = by_size(|k| k == 0);
        let b1 = by_size(|k| k == 1);
        let b2plus = by_size(|k| k >= 2);
        let r_set = by_size(|k| k <= 1);

        let loss_table = leaf_sets
            .iter()
            .map(|(&b, ls)| {
                let max = ls.iter().map(|&l| t.dist(b, l)).max().unwrap_or(0);
                let sum = ls.iter().map(|&l| t.dist(b, l)).sum();
                (
                    b,
                    BranchStats {
                        max,
                        sum,
                        loss: sum - max,
                    },
                )
            })
            .collect();

        let mut interior_vertices: Vec<usize> =
            b0.iter().chain(&b1).chain(&w_int).copied().collect();
        interior_vertices.sort_unstable();
        let interior = t
            .induced_subgraph(&interior_vertices)
            .expect("interior vertices are in range");

        TreeProfile {
            n,
            leaves,
            stems,
            shape: shape_of(t, branch.len()),
            branch,
            w_ext,
            w_int,
            leaf_sets,
            b0,
            b1,
            b2plus,
            r_set,
            loss_table,
            interior,
        }
    }

    /// `b(T)`.
    pub fn branch_count(&self) -> usize {
        self.branch.len()
    }

    /// `ρ(T)`.
    pub fn rho(&self) -> usize {
        self.r_set.len()
    }

    pub fn leaf_set(&self, b: usize) -> Option<&[usize]> {
        self.leaf_sets.get(&b).map(Vec::as_slice)
    }

    pub fn stats(&self, b: usize) -> Option<BranchStats> {
        self.loss_table.get(&b).copied()
    }

    /// Vertex class of every vertex, for display.
    pub fn class_of(&self, v: usize) -> VertexClass {
        let has = |set: &[usize]| set.binary_search(&v).is_ok();
        if has(&self.leaves) {
            VertexClass::Leaf
        } else if has(&self.b0) {
            VertexClass::B0
        } else if has(&self.b1) {
            VertexClass::B1
        } else if has(&self.b2plus) {
            VertexClass::B2Plus
        } else if has(&self.w_int) {
            VertexClass::WInt
        } else if has(&self.w_ext) {
            VertexClass::WExt
        } else {
            VertexClass::Isolated
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VertexClass {
    Leaf,
    WExt,
    WInt,
    B0,
    B1,
    B2Plus,
    /// The single vertex of `K_1`.
    Isolated,
}

pub fn profile(t: &Tree) -> TreeProfile {
    TreeProfile::new(t)
}

struct Walk {
    /// Degree-2 vertices passed through, in order.
    interior: Vec<usize>,
    end: usize,
}

/// Follows the path leaving `from` through `first`, passing degree-2
/// vertices, and stops at the first vertex of another degree.
fn walk_through_degree_two(t: &Tree, from: usize, first: usize) -> Walk {
    let (mut prev, mut cur) = (from, first);
    let mut interior = Vec::new();
    while t.degree(cur) == 2 {
        interior.push(cur);
        let nbrs = t.neighbors(cur);
        let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
        prev = cur;
        cur = next;
    }
    Walk { interior, end: cur }
}

fn endpath_from_leaf(t: &Tree, leaf: usize) -> Walk {
    walk_through_degree_two(t, leaf, t.neighbors(leaf)[0])
}

/// Tree on `L(T) ∪ B(T)` obtained by suppressing every degree-2 vertex.
pub fn branch_leaf_representation(t: &Tree) -> Result<Mapped<Tree>> {
    let keep: Vec<usize> = (0..t.order()).filter(|&v| t.degree(v) != 2).collect();
    if !(0..t.order()).any(|v| t.degree(v) >= 3) {
        return Err(Error::DegeneratePath);
    }
    suppressed(t, keep)
}

fn suppressed(t: &Tree, keep: Vec<usize>) -> Result<Mapped<Tree>> {
    let mut local = vec![usize::MAX; t.order()];
    for (i, &v) in keep.iter().enumerate() {
        local[v] = i;
    }
    let mut edges = Vec::new();
    for &x in &keep {
        for &w in t.neighbors(x) {
            let end = walk_through_degree_two(t, x, w).end;
            if x < end {
                edges.push((local[x], local[end]));
            }
        }
    }
    let graph = Tree::new(keep.len(), &edges)?;
    Ok(Mapped {
        graph,
        original: keep,
    })
}

/// `B(T)`: the branch-leaf representation with its leaves deleted. Two branch
/// vertices are adjacent when the path between them meets no other branch
/// vertex.
pub fn branch_representation(t: &Tree) -> Result<Mapped<Forest>> {
    let bl = branch_leaf_representation(t).map_err(|_| Error::NoBranchVertices)?;
    let branch: Vec<usize> = (0..bl.graph.order())
        .filter(|&i| !bl.graph.is_leaf(i))
        .collect();
    let inner = bl.graph.induced_subgraph(&branch)?;
    let original = inner.original.iter().map(|&i| bl.original[i]).collect();
    Ok(Mapped {
        graph: inner.graph,
        original,
    })
}

pub fn leaf_set(t: &Tree, b: usize) -> Result<Vec<usize>> {
    if b >= t.order() {
        return Err(Error::BadVertexIndex {
            vertex: b,
            n: t.order(),
        });
    }
    if t.degree(b) < 3 {
        return Err(Error::NotBranchVertex(b));
    }
    let mut out: Vec<usize> = t
        .neighbors(b)
        .iter()
        .map(|&w| walk_through_degree_two(t, b, w).end)
        .filter(|&end| t.is_leaf(end))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// `Int(T)`, the forest induced by `B_0 ∪ B_1 ∪ W_int`.
pub fn interior_subgraph(t: &Tree) -> Mapped<Forest> {
    TreeProfile::new(t).interior
}

/// `T_b`: union of the `b`-`l` paths over `l ∈ L(b)`. This is `K_1` when `b`
/// has no leaves.
pub fn subtree_at_branch(t: &Tree, b: usize) -> Result<Mapped<Tree>> {
    let leaves = leaf_set(t, b)?;
    let mut vertices = vec![b];
    for l in leaves {
        vertices.extend(t.path(b, l).into_iter().skip(1));
    }
    let sub = t.induced_subgraph(&vertices)?;
    Ok(Mapped {
        graph: sub.graph.into_tree()?,
        original: sub.original,
    })
}

pub fn classify_shape(t: &Tree) -> ShapeSet {
    let b = (0..t.order()).filter(|&v| t.degree(v) >= 3).count();
    shape_of(t, b)
}

fn shape_of(t: &Tree, branch_count: usize) -> ShapeSet {
    // Removing the leaves leaves a subtree; it is a path when no remaining
    // vertex keeps more than two non-leaf neighbours.
    let caterpillar = (0..t.order())
        .filter(|&v| !t.is_leaf(v))
        .all(|v| t.neighbors(v).iter().filter(|&&w| !t.is_leaf(w)).count() <= 2);
    ShapeSet {
        path: branch_count == 0,
        spider: branch_count == 1,
        caterpillar,
    }
}
