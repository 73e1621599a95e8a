//! Lower bound with its witness broadcast, upper bounds, and the closed
//! formulas for paths, spiders, trees with two branch vertices and
//! caterpillars.

use serde::Serialize;

use super::independence::{alpha_forest, is_independent_in};
use crate::broadcast::Broadcast;
use crate::error::{Error, Result};
use crate::profile::{profile, TreeProfile};
use crate::tree::{Hops, Tree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Formula {
    /// `n - 1` for paths and generalized spiders.
    PathSpider,
    /// `n - 1 - min{⌈d(b1,b2)/2⌉, loss(b1), loss(b2)}` when `B(T) = {b1, b2}`.
    TwoBranch,
    /// `n - b(T) + ρ(T)` for caterpillars without internal degree-2
    /// vertices whose `R(T)` is independent.
    Caterpillar,
    /// `n - b(T) + ρ(T)` for any tree with branch vertices, no internal
    /// degree-2 vertices and `R(T)` independent.
    RIndependent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FormulaValue {
    pub formula: Formula,
    pub value: Hops,
}

fn hops(x: usize) -> Hops {
    Hops::try_from(x).expect("tree order fits in u32")
}

fn require_branch(p: &TreeProfile) -> Result<()> {
    if p.branch.is_empty() {
        Err(Error::NoBranchVertices)
    } else {
        Ok(())
    }
}

/// The constructive lower bound `n - b(T) - |W_int(T)| + α(Int(T))`.
///
/// With `X` a maximum independent set of `Int(T)` and `Y = B_1(T) - X`:
/// leaves of `b ∈ B_{≥2} ∪ Y` broadcast exactly to `b`; the single leaf of
/// `b ∈ X ∩ B_1` broadcasts one step past `b`; vertices of `X` in
/// `B_0 ∪ W_int` broadcast with strength 1; everything else is silent.
pub fn lower_bound_witness(t: &Tree) -> Result<(Hops, Broadcast<'_>)> {
    lower_bound_witness_with(t, &profile(t))
}

pub(crate) fn lower_bound_witness_with<'t>(
    t: &'t Tree,
    p: &TreeProfile,
) -> Result<(Hops, Broadcast<'t>)> {
    require_branch(p)?;
    let (alpha, local) = alpha_forest(&p.interior.graph);
    let x: Vec<usize> = local.iter().map(|&i| p.interior.original(i)).collect();
    let in_x = |v: usize| x.contains(&v);

    let mut f = vec![0 as Hops; t.order()];
    for &b in p.b2plus.iter().chain(p.b1.iter().filter(|&&b| !in_x(b))) {
        for &l in &p.leaf_sets[&b] {
            f[l] = t.dist(b, l);
        }
    }
    for &b in p.b1.iter().filter(|&&b| in_x(b)) {
        let l = p.leaf_sets[&b][0];
        f[l] = t.dist(b, l) + 1;
    }
    for &v in p.b0.iter().chain(&p.w_int).filter(|&&v| in_x(v)) {
        f[v] = 1;
    }

    let value = hops(p.n - p.branch.len() - p.w_int.len() + alpha);
    let witness = Broadcast::new(t, f)?;
    debug_assert_eq!(witness.weight(), value);
    Ok((value, witness))
}

/// `n - b(T) + ρ(T)`.
pub fn upper_bound(t: &Tree) -> Result<Hops> {
    upper_bound_with(&profile(t))
}

pub(crate) fn upper_bound_with(p: &TreeProfile) -> Result<Hops> {
    require_branch(p)?;
    Ok(hops(p.n - p.branch_count() + p.rho()))
}

/// `α(T[R(T)])`.
pub(crate) fn alpha_of_r(t: &Tree, p: &TreeProfile) -> usize {
    let sub = t.induced_subgraph(&p.r_set).expect("R(T) is in range");
    alpha_forest(&sub.graph).0
}

/// `n - b(T) + α(T[R(T)])`, the strengthened upper bound asked about as an
/// open question; reported, never assumed.
pub fn conjectured_upper(t: &Tree) -> Result<Hops> {
    conjectured_upper_with(t, &profile(t))
}

pub(crate) fn conjectured_upper_with(t: &Tree, p: &TreeProfile) -> Result<Hops> {
    require_branch(p)?;
    Ok(hops(p.n - p.branch_count() + alpha_of_r(t, p)))
}

pub fn formula_path_spider(t: &Tree) -> Result<Hops> {
    formula_path_spider_with(&profile(t))
}

pub(crate) fn formula_path_spider_with(p: &TreeProfile) -> Result<Hops> {
    if p.shape.path || p.shape.spider {
        Ok(hops(p.n - 1))
    } else {
        Err(Error::ShapeMismatch("neither a path nor a spider".into()))
    }
}

pub fn formula_two_branch(t: &Tree) -> Result<Hops> {
    formula_two_branch_with(t, &profile(t))
}

pub(crate) fn formula_two_branch_with(t: &Tree, p: &TreeProfile) -> Result<Hops> {
    let [b1, b2] = p.branch[..] else {
        return Err(Error::ShapeMismatch(format!(
            "needs exactly two branch vertices, found {}",
            p.branch.len()
        )));
    };
    let half = t.dist(b1, b2).div_ceil(2);
    let worst = half.min(p.loss_table[&b1].loss).min(p.loss_table[&b2].loss);
    Ok(hops(p.n - 1) - worst)
}

fn r_independent(t: &Tree, p: &TreeProfile) -> bool {
    let sub = t.induced_subgraph(&p.r_set).expect("R(T) is in range");
    is_independent_in(&sub.graph, &(0..sub.graph.order()).collect::<Vec<_>>())
}

pub fn formula_caterpillar(t: &Tree) -> Result<Hops> {
    formula_caterpillar_with(t, &profile(t))
}

pub(crate) fn formula_caterpillar_with(t: &Tree, p: &TreeProfile) -> Result<Hops> {
    if !p.shape.caterpillar {
        return Err(Error::ShapeMismatch("not a caterpillar".into()));
    }
    formula_r_independent_with(t, p)
}

pub fn formula_r_independent(t: &Tree) -> Result<Hops> {
    formula_r_independent_with(t, &profile(t))
}

pub(crate) fn formula_r_independent_with(t: &Tree, p: &TreeProfile) -> Result<Hops> {
    if p.branch.is_empty() {
        return Err(Error::ShapeMismatch("no branch vertices".into()));
    }
    if !p.w_int.is_empty() {
        return Err(Error::ShapeMismatch(
            "internal degree-2 vertices present".into(),
        ));
    }
    if !r_independent(t, p) {
        return Err(Error::ShapeMismatch("R(T) is not independent".into()));
    }
    Ok(hops(p.n - p.branch_count() + p.rho()))
}

/// First applicable formula by precedence: path/spider, two branch
/// vertices, caterpillar, then the general independent-`R(T)` case.
pub(crate) fn applicable_formula(t: &Tree, p: &TreeProfile) -> Option<FormulaValue> {
    let candidates: [(Formula, Result<Hops>); 4] = [
        (Formula::PathSpider, formula_path_spider_with(p)),
        (Formula::TwoBranch, formula_two_branch_with(t, p)),
        (Formula::Caterpillar, formula_caterpillar_with(t, p)),
        (Formula::RIndependent, formula_r_independent_with(t, p)),
    ];
    candidates
        .into_iter()
        .find_map(|(formula, r)| r.ok().map(|value| FormulaValue { formula, value }))
}
