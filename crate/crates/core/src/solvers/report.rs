use serde::Serialize;

use super::bounds::{
    alpha_of_r, applicable_formula, conjectured_upper_with, lower_bound_witness_with,
    upper_bound_with, FormulaValue,
};
use super::independence::alpha_forest;
use super::{alpha_bn_enum, alpha_bn_exact, alpha_bn_restricted, SearchMode, SolveLimits};
use crate::broadcast::Broadcast;
use crate::error::{Error, Result};
use crate::profile::{profile, ShapeSet};
use crate::tree::{Hops, Tree};

/// Everything known about `α_bn` of one tree.
///
/// Bound fields are `None` for paths. `exact` is present only when an exact
/// solver ran to completion; when it ran out of budget `budget_exceeded` is
/// set and `best_found` carries the incumbent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport<'t> {
    pub n: usize,
    pub b_t: usize,
    pub rho: usize,
    pub w_int_size: usize,
    pub alpha_int: usize,
    pub alpha_r: usize,
    pub shape: ShapeSet,
    pub lower: Option<Hops>,
    pub upper: Option<Hops>,
    pub conjectured: Option<Hops>,
    pub formula: Option<FormulaValue>,
    pub exact: Option<Hops>,
    pub exact_solver: Option<SearchMode>,
    pub search_nodes: Option<u64>,
    pub budget_exceeded: bool,
    pub best_found: Option<Hops>,
    /// `exact <= conjectured`, when both are known.
    pub conjecture_holds: Option<bool>,
    pub witness_lower: Option<Broadcast<'t>>,
    pub witness_exact: Option<Broadcast<'t>>,
}

/// Fills in bounds and formulas, and runs the exact solver selected by
/// `limits.mode` when `limits` is given.
///
/// Any disagreement between proven statements and computed values (bounds
/// out of order, a formula differing from the exact value, an invalid
/// witness) is returned as [`Error::Inconsistent`]: it means the
/// implementation is wrong.
pub fn compute<'t>(t: &'t Tree, limits: Option<&SolveLimits>) -> Result<BoundsReport<'t>> {
    let p = profile(t);
    let alpha_int = alpha_forest(&p.interior.graph).0;
    let mut report = BoundsReport {
        n: p.n,
        b_t: p.branch_count(),
        rho: p.rho(),
        w_int_size: p.w_int.len(),
        alpha_int,
        alpha_r: alpha_of_r(t, &p),
        shape: p.shape,
        lower: None,
        upper: None,
        conjectured: None,
        formula: applicable_formula(t, &p),
        exact: None,
        exact_solver: None,
        search_nodes: None,
        budget_exceeded: false,
        best_found: None,
        conjecture_holds: None,
        witness_lower: None,
        witness_exact: None,
    };

    if !p.branch.is_empty() {
        let (lower, witness) = lower_bound_witness_with(t, &p)?;
        if let Some(v) = witness.bn_violation() {
            return Err(Error::Inconsistent(format!(
                "lower-bound witness {witness:?} is not bn-independent: {v:?}"
            )));
        }
        if witness.weight() != lower {
            return Err(Error::Inconsistent(format!(
                "lower-bound witness weighs {} instead of {lower}",
                witness.weight()
            )));
        }
        report.lower = Some(lower);
        report.upper = Some(upper_bound_with(&p)?);
        report.conjectured = Some(conjectured_upper_with(t, &p)?);
        report.witness_lower = Some(witness);
    }

    if let Some(limits) = limits {
        let solved = match limits.mode {
            SearchMode::PureEnum => alpha_bn_enum(t, limits),
            SearchMode::Pruned => alpha_bn_exact(t, limits),
            SearchMode::Restricted => alpha_bn_restricted(t, limits),
        };
        report.exact_solver = Some(limits.mode);
        match solved {
            Ok(opt) => {
                report.search_nodes = Some(opt.nodes);
                report.exact = Some(opt.weight);
                report.best_found = Some(opt.weight);
                report.witness_exact = Some(opt.broadcast(t));
            }
            Err(Error::BudgetExceeded {
                nodes, best_weight, ..
            }) => {
                report.search_nodes = Some(nodes);
                report.budget_exceeded = true;
                report.best_found = Some(best_weight);
            }
            Err(e) => return Err(e),
        }
    }

    check_consistency(&report)?;
    report.conjecture_holds = report
        .exact
        .zip(report.conjectured)
        .map(|(exact, conj)| exact <= conj);
    Ok(report)
}

fn check_consistency(r: &BoundsReport<'_>) -> Result<()> {
    let fail = |msg: String| Err(Error::Inconsistent(msg));
    if let (Some(lower), Some(upper)) = (r.lower, r.upper) {
        if lower > upper {
            return fail(format!("lower bound {lower} exceeds upper bound {upper}"));
        }
    }
    if let Some(best) = r.best_found {
        if let Some(upper) = r.upper {
            if best > upper {
                return fail(format!("found weight {best} above upper bound {upper}"));
            }
        }
        if best > r.n.saturating_sub(1) as Hops {
            return fail(format!("found weight {best} above n - 1"));
        }
    }
    if let Some(exact) = r.exact {
        if let Some(lower) = r.lower {
            if exact < lower {
                return fail(format!("exact value {exact} below lower bound {lower}"));
            }
        }
        if let Some(f) = r.formula {
            if f.value != exact {
                return fail(format!(
                    "{:?} formula gives {} but the exact value is {exact}",
                    f.formula, f.value
                ));
            }
        }
        if let Some(w) = &r.witness_exact {
            if w.weight() != exact || !w.is_bn_independent() {
                return fail(format!("exact witness {w:?} does not certify {exact}"));
            }
        }
    }
    Ok(())
}
