//! Structural checks over the complete set of maximum bn-independent
//! broadcasts of a small tree.

use serde::Serialize;

use crate::profile::profile;
use crate::tree::{Hops, Tree};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OptimaReport {
    pub optima: usize,
    /// Optima in which some leaf hears a non-leaf broadcaster. Expected 0.
    pub leaf_hearing_violations: usize,
    /// First offending optimum, if any.
    pub leaf_hearing_example: Option<Vec<Hops>>,
    /// Optima whose non-leaf strengths are all at most 1.
    pub unit_nonleaf_optima: usize,
    /// Among those: optima in which a leaf overdominates some branch vertex
    /// by exactly 2.
    pub overdominate_by_two: usize,
    /// Fewest branch vertices overdominated by leaves over the unit non-leaf
    /// optima.
    pub min_overdominated_branch: Option<usize>,
    /// Unit non-leaf optima attaining that minimum, and how many of them
    /// have a leaf overdominating a branch vertex by exactly 2.
    pub minimal_family: usize,
    pub minimal_family_overdominate_by_two: usize,
}

impl OptimaReport {
    pub fn leaf_hearing_holds(&self) -> bool {
        self.leaf_hearing_violations == 0
    }

    pub fn has_unit_nonleaf_optimum(&self) -> bool {
        self.unit_nonleaf_optima > 0
    }
}

/// Evaluates `all_optima` (every maximum bn-independent broadcast of `t`):
/// whether any leaf hears a non-leaf broadcaster, whether some optimum uses
/// strength at most 1 off the leaves, and, among those, how often a leaf
/// overdominates a branch vertex by exactly 2.
pub fn optimal_broadcast_properties(t: &Tree, all_optima: &[Vec<Hops>]) -> OptimaReport {
    let p = profile(t);
    let is_leaf = |v: usize| t.is_leaf(v);

    let mut report = OptimaReport {
        optima: all_optima.len(),
        leaf_hearing_violations: 0,
        leaf_hearing_example: None,
        unit_nonleaf_optima: 0,
        overdominate_by_two: 0,
        min_overdominated_branch: None,
        minimal_family: 0,
        minimal_family_overdominate_by_two: 0,
    };
    let mut family: Vec<(usize, bool)> = Vec::new();

    for f in all_optima {
        let leaf_hears_nonleaf = p
            .leaves
            .iter()
            .any(|&l| (0..t.order()).any(|v| !is_leaf(v) && f[v] > 0 && t.dist(l, v) <= f[v]));
        if leaf_hears_nonleaf {
            report.leaf_hearing_violations += 1;
            report.leaf_hearing_example.get_or_insert_with(|| f.clone());
        }

        if (0..t.order()).all(|v| is_leaf(v) || f[v] <= 1) {
            report.unit_nonleaf_optima += 1;
            let mut overdominated = 0;
            let mut by_two = false;
            for &b in &p.branch {
                let from_leaves: Vec<Hops> = p
                    .leaves
                    .iter()
                    .filter(|&&l| f[l] > t.dist(l, b))
                    .map(|&l| f[l] - t.dist(l, b))
                    .collect();
                if !from_leaves.is_empty() {
                    overdominated += 1;
                }
                by_two |= from_leaves.contains(&2);
            }
            report.overdominate_by_two += usize::from(by_two);
            family.push((overdominated, by_two));
        }
    }

    if let Some(min) = family.iter().map(|&(k, _)| k).min() {
        report.min_overdominated_branch = Some(min);
        let minimal: Vec<_> = family.iter().filter(|&&(k, _)| k == min).collect();
        report.minimal_family = minimal.len();
        report.minimal_family_overdominate_by_two = minimal.iter().filter(|(_, b)| *b).count();
    }
    report
}
