//! Broadcasts on a tree and the predicates defined on them.
//!
//! A broadcast assigns every vertex a strength `f(v) <= e(v)`. Vertex `u`
//! hears broadcaster `v` when `f(v) > 0` and `d(u, v) <= f(v)`. A broadcast
//! is *bn-independent* when any two broadcast neighbourhoods meet only in
//! vertices lying on both boundaries, and *hearing independent* when no
//! broadcaster hears another.

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::tree::{Forest, Hops, Tree};

/// Strength assignment bound to its host tree.
#[derive(Clone, PartialEq, Eq)]
pub struct Broadcast<'t> {
    tree: &'t Tree,
    strengths: Vec<Hops>,
}

impl fmt::Debug for Broadcast<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Broadcast({})", self.to_text())
    }
}

/// Serialized as the full per-vertex strength array.
impl Serialize for Broadcast<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.strengths.len()))?;
        for x in &self.strengths {
            seq.serialize_element(x)?;
        }
        seq.end()
    }
}

/// Two broadcasters whose neighbourhoods overlap off their boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Violation {
    pub first: usize,
    pub second: usize,
    /// A vertex hearing both that is interior to at least one of the balls.
    pub vertex: usize,
    /// An edge covered by both broadcasters.
    pub edge: Option<(usize, usize)>,
}

/// Sets attached to one broadcasting vertex. All sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct BroadcasterSets {
    pub vertex: usize,
    pub strength: Hops,
    pub neighbourhood: Vec<usize>,
    pub boundary: Vec<usize>,
    pub private_neighbourhood: Vec<usize>,
    pub private_boundary: Vec<usize>,
    pub covered_edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct BroadcastAnalysis {
    pub v_plus: Vec<usize>,
    pub v_one: Vec<usize>,
    pub v_plusplus: Vec<usize>,
    pub broadcasters: Vec<BroadcasterSets>,
    /// `U_f`: vertices that hear nothing.
    pub undominated: Vec<usize>,
    /// Every edge of the host with the broadcasters covering it.
    pub covered: Vec<((usize, usize), Vec<usize>)>,
    /// `U_f^E`: edges covered by no broadcaster.
    pub uncovered_edges: Vec<(usize, usize)>,
}

impl BroadcastAnalysis {
    pub fn sets_of(&self, v: usize) -> Option<&BroadcasterSets> {
        self.broadcasters.iter().find(|b| b.vertex == v)
    }
}

impl<'t> Broadcast<'t> {
    pub fn new(tree: &'t Tree, strengths: Vec<Hops>) -> Result<Broadcast<'t>> {
        if strengths.len() != tree.order() {
            return Err(Error::HostMismatch {
                expected: tree.order(),
                got: strengths.len(),
            });
        }
        for (v, &s) in strengths.iter().enumerate() {
            if s > tree.ecc(v) {
                return Err(Error::StrengthExceedsEccentricity {
                    vertex: v,
                    strength: s,
                    eccentricity: tree.ecc(v),
                });
            }
        }
        Ok(Broadcast { tree, strengths })
    }

    pub fn from_signed(tree: &'t Tree, strengths: &[i64]) -> Result<Broadcast<'t>> {
        let mut out = Vec::with_capacity(strengths.len());
        for (v, &s) in strengths.iter().enumerate() {
            if s < 0 {
                return Err(Error::NegativeStrength {
                    vertex: v,
                    strength: s,
                });
            }
            out.push(Hops::try_from(s).unwrap_or(Hops::MAX));
        }
        Broadcast::new(tree, out)
    }

    pub fn zero(tree: &'t Tree) -> Broadcast<'t> {
        Broadcast {
            tree,
            strengths: vec![0; tree.order()],
        }
    }

    /// Characteristic function of a vertex set.
    pub fn indicator(tree: &'t Tree, set: &[usize]) -> Result<Broadcast<'t>> {
        let mut strengths = vec![0; tree.order()];
        for &v in set {
            if v >= tree.order() {
                return Err(Error::BadVertexIndex {
                    vertex: v,
                    n: tree.order(),
                });
            }
            strengths[v] = 1;
        }
        Broadcast::new(tree, strengths)
    }

    pub fn tree(&self) -> &'t Tree {
        self.tree
    }

    pub fn strengths(&self) -> &[Hops] {
        &self.strengths
    }

    pub fn into_strengths(self) -> Vec<Hops> {
        self.strengths
    }

    pub fn strength(&self, v: usize) -> Hops {
        self.strengths[v]
    }

    /// `σ(f)`.
    pub fn weight(&self) -> Hops {
        self.strengths.iter().sum()
    }

    /// `V_f^+`.
    pub fn broadcasters(&self) -> Vec<usize> {
        (0..self.strengths.len())
            .filter(|&v| self.strengths[v] > 0)
            .collect()
    }

    pub fn hears(&self, u: usize, v: usize) -> bool {
        hears(self.tree, &self.strengths, u, v)
    }

    /// Overdominated: heard strictly inside the ball.
    pub fn overdominates(&self, v: usize, u: usize) -> bool {
        self.strengths[v] > 0 && self.tree.dist(u, v) < self.strengths[v]
    }

    /// `N_f(v)`; empty when `v` does not broadcast.
    pub fn neighbourhood(&self, v: usize) -> Vec<usize> {
        if self.strengths[v] == 0 {
            return Vec::new();
        }
        let row = self.tree.dist_row(v);
        (0..row.len())
            .filter(|&u| row[u] <= self.strengths[v])
            .collect()
    }

    /// `B_f(v)`; empty when `v` does not broadcast.
    pub fn boundary(&self, v: usize) -> Vec<usize> {
        if self.strengths[v] == 0 {
            return Vec::new();
        }
        let row = self.tree.dist_row(v);
        (0..row.len())
            .filter(|&u| row[u] == self.strengths[v])
            .collect()
    }

    pub fn is_dominated(&self, u: usize) -> bool {
        is_dominated(self.tree, &self.strengths, u)
    }

    /// `U_f`.
    pub fn undominated(&self) -> Vec<usize> {
        (0..self.strengths.len())
            .filter(|&u| !self.is_dominated(u))
            .collect()
    }

    pub fn is_dominating(&self) -> bool {
        (0..self.strengths.len()).all(|u| self.is_dominated(u))
    }

    /// `PN_f(v)`: vertices of `N_f(v)` hearing no other broadcaster.
    pub fn private_neighbourhood(&self, v: usize) -> Vec<usize> {
        self.neighbourhood(v)
            .into_iter()
            .filter(|&u| (0..self.strengths.len()).all(|w| w == v || !self.hears(u, w)))
            .collect()
    }

    /// `PB_f(v)`: vertices of `N_f(v)` left undominated once `f(v)` drops by
    /// one, evaluated literally on the reduced broadcast.
    pub fn private_boundary(&self, v: usize) -> Vec<usize> {
        let neighbourhood = self.neighbourhood(v);
        if neighbourhood.is_empty() {
            return neighbourhood;
        }
        let mut reduced = self.strengths.clone();
        reduced[v] -= 1;
        neighbourhood
            .into_iter()
            .filter(|&u| !is_dominated(self.tree, &reduced, u))
            .collect()
    }

    /// Edges `xy` with `x, y ∈ N_f(v)`, not both on `B_f(v)`.
    pub fn covered_by(&self, v: usize) -> Vec<(usize, usize)> {
        covered_edges(self.tree, &self.strengths, v)
    }

    pub fn analyze(&self) -> BroadcastAnalysis {
        let v_plus = self.broadcasters();
        let (v_one, v_plusplus) = v_plus
            .iter()
            .partition::<Vec<usize>, _>(|&&v| self.strengths[v] == 1);
        let broadcasters: Vec<BroadcasterSets> = v_plus
            .iter()
            .map(|&v| BroadcasterSets {
                vertex: v,
                strength: self.strengths[v],
                neighbourhood: self.neighbourhood(v),
                boundary: self.boundary(v),
                private_neighbourhood: self.private_neighbourhood(v),
                private_boundary: self.private_boundary(v),
                covered_edges: self.covered_by(v),
            })
            .collect();
        let covered: Vec<((usize, usize), Vec<usize>)> = self
            .tree
            .edges()
            .iter()
            .map(|&e| {
                let by = broadcasters
                    .iter()
                    .filter(|b| b.covered_edges.binary_search(&e).is_ok())
                    .map(|b| b.vertex)
                    .collect();
                (e, by)
            })
            .collect();
        let uncovered_edges = covered
            .iter()
            .filter(|(_, by)| by.is_empty())
            .map(|(e, _)| *e)
            .collect();
        BroadcastAnalysis {
            v_plus,
            v_one,
            v_plusplus,
            broadcasters,
            undominated: self.undominated(),
            covered,
            uncovered_edges,
        }
    }

    /// `None` when bn-independent, otherwise a violating pair.
    ///
    /// The verdict comes from the neighbourhood/boundary definition; debug
    /// builds also check it against the edge formulation (no edge covered
    /// twice).
    pub fn bn_violation(&self) -> Option<Violation> {
        let found = overlap_violation(self.tree, &self.strengths);
        let violation = found.map(|(first, second, vertex)| Violation {
            first,
            second,
            vertex,
            edge: shared_covered_edge(self.tree, &self.strengths, first, second),
        });
        debug_assert_eq!(
            violation.is_some(),
            self.tree.order() >= 2 && doubly_covered_edge(self.tree, &self.strengths).is_some(),
            "definition and edge-coverage verdicts disagree on {self:?}"
        );
        violation
    }

    pub fn is_bn_independent(&self) -> bool {
        self.bn_violation().is_none()
    }

    /// A broadcaster pair `(u, v)` where `u` hears `v`.
    pub fn hearing_violation(&self) -> Option<(usize, usize)> {
        let plus = self.broadcasters();
        for &u in &plus {
            for &v in &plus {
                if u != v && self.hears(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    pub fn is_hearing_independent(&self) -> bool {
        self.hearing_violation().is_none()
    }

    /// Maximal bn-independence: no bn-independent `g > f` exists.
    ///
    /// Decided by the private-boundary criterion (dominating, and either a
    /// single broadcaster or `B_f(v) - PB_f(v)` nonempty for every
    /// broadcaster). With two or more broadcasters debug builds also check the
    /// uncovered-edge criterion.
    pub fn is_maximal_bn(&self) -> Result<bool> {
        if !self.is_bn_independent() {
            return Err(Error::NotBnIndependent);
        }
        let verdict = self.maximal_by_private_boundaries();
        if cfg!(debug_assertions) {
            if let Some(other) = self.maximal_by_uncovered_edges() {
                assert_eq!(verdict, other, "maximality criteria disagree on {self:?}");
            }
        }
        Ok(verdict)
    }

    pub fn maximal_by_private_boundaries(&self) -> bool {
        if !self.is_dominating() {
            return false;
        }
        let plus = self.broadcasters();
        plus.len() == 1
            || plus.iter().all(|&v| {
                let private = self.private_boundary(v);
                self.boundary(v)
                    .iter()
                    .any(|u| private.binary_search(u).is_err())
            })
    }

    /// Every component of the host minus its uncovered edges holds at least
    /// two broadcasters. Only meaningful with two or more broadcasters;
    /// `None` otherwise.
    pub fn maximal_by_uncovered_edges(&self) -> Option<bool> {
        let plus = self.broadcasters();
        if plus.len() < 2 {
            return None;
        }
        let n = self.tree.order();
        let covered: Vec<(usize, usize)> = self
            .tree
            .edges()
            .iter()
            .copied()
            .filter(|&(x, y)| {
                plus.iter()
                    .any(|&v| covers(self.tree, &self.strengths, v, x, y))
            })
            .collect();
        let rest = Forest::new(n, &covered).expect("subgraph of a tree");
        let mut per_component = vec![0usize; rest.component_count()];
        for &v in &plus {
            per_component[rest.component_of(v)] += 1;
        }
        Some(per_component.iter().all(|&c| c >= 2))
    }

    /// `v:f(v)` pairs separated by spaces, zero strengths omitted.
    pub fn to_text(&self) -> String {
        self.strengths
            .iter()
            .enumerate()
            .filter(|(_, &s)| s > 0)
            .map(|(v, s)| format!("{v}:{s}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Inverse of [`Broadcast::to_text`]. Pairs may be separated by
    /// whitespace or commas; `#` starts a comment.
    pub fn parse(tree: &'t Tree, text: &str) -> Result<Broadcast<'t>> {
        let mut strengths = vec![0i64; tree.order()];
        let mut seen = BTreeSet::new();
        for (i, raw) in text.lines().enumerate() {
            let err = |message: String| Error::Parse {
                line: i + 1,
                message,
            };
            let line = raw.split('#').next().unwrap_or("");
            for token in line.split(|c: char| c.is_whitespace() || c == ',') {
                if token.is_empty() {
                    continue;
                }
                let (v, s) = token
                    .split_once(':')
                    .ok_or_else(|| err(format!("expected v:f, got {token:?}")))?;
                let v: usize = v
                    .parse()
                    .map_err(|_| err(format!("bad vertex in {token:?}")))?;
                let s: i64 = s
                    .parse()
                    .map_err(|_| err(format!("bad strength in {token:?}")))?;
                if v >= tree.order() {
                    return Err(Error::BadVertexIndex {
                        vertex: v,
                        n: tree.order(),
                    });
                }
                if !seen.insert(v) {
                    return Err(err(format!("vertex {v} assigned twice")));
                }
                strengths[v] = s;
            }
        }
        Broadcast::from_signed(tree, &strengths)
    }
}

fn hears(t: &Tree, f: &[Hops], u: usize, v: usize) -> bool {
    f[v] > 0 && t.dist(u, v) <= f[v]
}

fn is_dominated(t: &Tree, f: &[Hops], u: usize) -> bool {
    let row = t.dist_row(u);
    f.iter().zip(row).any(|(&s, &d)| s > 0 && d <= s)
}

fn covers(t: &Tree, f: &[Hops], v: usize, x: usize, y: usize) -> bool {
    let s = f[v];
    let (dx, dy) = (t.dist(v, x), t.dist(v, y));
    s > 0 && dx <= s && dy <= s && !(dx == s && dy == s)
}

fn covered_edges(t: &Tree, f: &[Hops], v: usize) -> Vec<(usize, usize)> {
    t.edges()
        .iter()
        .copied()
        .filter(|&(x, y)| covers(t, f, v, x, y))
        .collect()
}

/// First pair `(u, v)`, `u < v`, with a vertex `w` in both neighbourhoods
/// that is not on both boundaries.
pub(crate) fn overlap_violation(t: &Tree, f: &[Hops]) -> Option<(usize, usize, usize)> {
    let plus: Vec<usize> = (0..f.len()).filter(|&v| f[v] > 0).collect();
    for (i, &u) in plus.iter().enumerate() {
        let ru = t.dist_row(u);
        for &v in &plus[i + 1..] {
            let rv = t.dist_row(v);
            for w in 0..f.len() {
                if ru[w] <= f[u] && rv[w] <= f[v] && !(ru[w] == f[u] && rv[w] == f[v]) {
                    return Some((u, v, w));
                }
            }
        }
    }
    None
}

fn shared_covered_edge(t: &Tree, f: &[Hops], u: usize, v: usize) -> Option<(usize, usize)> {
    t.edges()
        .iter()
        .copied()
        .find(|&(x, y)| covers(t, f, u, x, y) && covers(t, f, v, x, y))
}

fn doubly_covered_edge(t: &Tree, f: &[Hops]) -> Option<(usize, usize)> {
    let plus: Vec<usize> = (0..f.len()).filter(|&v| f[v] > 0).collect();
    t.edges()
        .iter()
        .copied()
        .find(|&(x, y)| plus.iter().filter(|&&v| covers(t, f, v, x, y)).count() >= 2)
}

/// Definition-level bn-independence test on a raw strength vector, with no
/// eccentricity validation.
pub fn strengths_bn_independent(t: &Tree, f: &[Hops]) -> bool {
    overlap_violation(t, f).is_none()
}

/// Hearing independence on a raw strength vector.
pub fn strengths_hearing_independent(t: &Tree, f: &[Hops]) -> bool {
    let plus: Vec<usize> = (0..f.len()).filter(|&v| f[v] > 0).collect();
    plus.iter()
        .all(|&u| plus.iter().all(|&v| u == v || !hears(t, f, u, v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{build_family, FamilySpec};

    fn path(n: usize) -> Tree {
        build_family(&FamilySpec::Path(n)).unwrap()
    }

    fn star(k: usize) -> Tree {
        build_family(&FamilySpec::Spider(vec![1; k])).unwrap()
    }

    #[test]
    fn construction_checks_eccentricity() {
        let p3 = path(3);
        let f = Broadcast::new(&p3, vec![2, 0, 0]).unwrap();
        assert_eq!(f.weight(), 2);
        assert!(matches!(
            Broadcast::new(&p3, vec![3, 0, 0]),
            Err(Error::StrengthExceedsEccentricity {
                vertex: 0,
                strength: 3,
                eccentricity: 2
            })
        ));
        assert!(matches!(
            Broadcast::from_signed(&p3, &[0, -1, 0]),
            Err(Error::NegativeStrength { vertex: 1, .. })
        ));
        assert!(matches!(
            Broadcast::new(&p3, vec![0, 0]),
            Err(Error::HostMismatch { .. })
        ));
    }

    #[test]
    fn leaf_indicator_on_star() {
        let s = star(3);
        let f = Broadcast::indicator(&s, &[1, 2, 3]).unwrap();
        assert_eq!(f.weight(), 3);
        assert!(f.is_bn_independent());
        assert!(f.is_hearing_independent());
    }

    #[test]
    fn analysis_of_p5_ends() {
        let p5 = path(5);
        let f = Broadcast::new(&p5, vec![2, 0, 0, 0, 2]).unwrap();
        let a = f.analyze();
        assert_eq!(a.v_plus, vec![0, 4]);
        assert!(a.v_one.is_empty());
        assert_eq!(a.v_plusplus, vec![0, 4]);
        let s0 = a.sets_of(0).unwrap();
        assert_eq!(s0.neighbourhood, vec![0, 1, 2]);
        assert_eq!(s0.boundary, vec![2]);
        assert_eq!(s0.covered_edges, vec![(0, 1), (1, 2)]);
        let s4 = a.sets_of(4).unwrap();
        assert_eq!(s4.neighbourhood, vec![2, 3, 4]);
        assert_eq!(s4.boundary, vec![2]);
        assert!(a.undominated.is_empty());
        assert!(a.uncovered_edges.is_empty());
        // 2 hears both, so it is private to neither.
        assert_eq!(s0.private_neighbourhood, vec![0, 1]);
        assert!(s0.private_boundary.is_empty());
    }

    #[test]
    fn private_boundary_of_centre() {
        let p3 = path(3);
        let f = Broadcast::new(&p3, vec![0, 1, 0]).unwrap();
        assert_eq!(f.private_boundary(1), vec![0, 1, 2]);
        assert_eq!(f.private_neighbourhood(1), f.neighbourhood(1));
    }

    #[test]
    fn private_boundary_matches_shortcut_for_strong_broadcasters() {
        let p5 = path(5);
        let f = Broadcast::new(&p5, vec![2, 0, 0, 0, 2]).unwrap();
        for v in [0, 4] {
            let shortcut: Vec<usize> = f
                .boundary(v)
                .into_iter()
                .filter(|u| f.private_neighbourhood(v).contains(u))
                .collect();
            assert_eq!(f.private_boundary(v), shortcut);
        }
    }

    #[test]
    fn domination() {
        let p4 = path(4);
        assert!(Broadcast::new(&p4, vec![3, 0, 0, 0])
            .unwrap()
            .is_dominating());
        let f = Broadcast::new(&p4, vec![1, 0, 0, 0]).unwrap();
        assert!(!f.is_dominating());
        assert_eq!(f.undominated(), vec![2, 3]);
        assert!(!Broadcast::zero(&path(2)).is_dominating());
    }

    #[test]
    fn bn_independence_with_certificate() {
        let p5 = path(5);
        assert!(Broadcast::new(&p5, vec![2, 0, 0, 0, 2])
            .unwrap()
            .is_bn_independent());

        let p4 = path(4);
        let f = Broadcast::new(&p4, vec![2, 0, 0, 2]).unwrap();
        let v = f.bn_violation().unwrap();
        assert_eq!((v.first, v.second), (0, 3));
        assert_eq!(v.edge, Some((1, 2)));
        let a = f.analyze();
        assert_eq!(a.covered[1], ((1, 2), vec![0, 3]));
    }

    #[test]
    fn hearing_independence() {
        assert!(Broadcast::new(&path(5), vec![2, 0, 0, 0, 2])
            .unwrap()
            .is_hearing_independent());
        assert!(Broadcast::new(&path(4), vec![2, 0, 0, 2])
            .unwrap()
            .is_hearing_independent());
        let t = path(4);
        let f = Broadcast::new(&t, vec![3, 0, 0, 1]).unwrap();
        assert_eq!(f.hearing_violation(), Some((3, 0)));
        assert!(Broadcast::new(&path(4), vec![0, 0, 0, 3])
            .unwrap()
            .is_hearing_independent());
    }

    #[test]
    fn maximality() {
        let p3 = path(3);
        assert!(Broadcast::new(&p3, vec![0, 1, 0])
            .unwrap()
            .is_maximal_bn()
            .unwrap());
        assert!(Broadcast::new(&p3, vec![2, 0, 0])
            .unwrap()
            .is_maximal_bn()
            .unwrap());
        let p6 = path(6);
        assert!(!Broadcast::new(&p6, vec![1, 0, 0, 0, 0, 1])
            .unwrap()
            .is_maximal_bn()
            .unwrap());
        assert!(matches!(
            Broadcast::new(&path(4), vec![2, 0, 0, 2])
                .unwrap()
                .is_maximal_bn(),
            Err(Error::NotBnIndependent)
        ));
        // P_5 ends with strength 2 meet on the middle boundary: maximal.
        let t = path(5);
        let f = Broadcast::new(&t, vec![2, 0, 0, 0, 2]).unwrap();
        assert!(f.is_maximal_bn().unwrap());
        assert_eq!(f.maximal_by_uncovered_edges(), Some(true));
    }

    #[test]
    fn text_form() {
        let p5 = path(5);
        let f = Broadcast::parse(&p5, "0:2 4:2").unwrap();
        assert_eq!(f.strengths(), &[2, 0, 0, 0, 2]);
        assert_eq!(f.to_text(), "0:2 4:2");
        assert_eq!(Broadcast::parse(&p5, "0:2,\n4:2 # ends").unwrap(), f);
        assert!(matches!(
            Broadcast::parse(&p5, "0:1 0:1"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Broadcast::parse(&p5, "7:1"),
            Err(Error::BadVertexIndex { .. })
        ));
        assert!(matches!(
            Broadcast::parse(&p5, "1:-1"),
            Err(Error::NegativeStrength { .. })
        ));
        assert!(matches!(
            Broadcast::parse(&p5, "1"),
            Err(Error::Parse { .. })
        ));
        assert_eq!(Broadcast::parse(&p5, "").unwrap().weight(), 0);
    }
}
