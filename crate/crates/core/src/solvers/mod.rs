//! Exact solvers, bounds, closed formulas and the dispatching front end.
//!
//! Two exact routes to `α_bn` exist and share no search code:
//! [`alpha_bn_enum`] walks the full strength product and filters with the
//! definition-level predicate; [`alpha_bn_exact`] is a depth-first search over
//! edge-coverage masks with pruning. [`alpha_bn_restricted`] runs the second
//! search with non-leaf strengths limited to `{0, 1}`.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::broadcast::Broadcast;
use crate::error::{Error, Result};
use crate::tree::{Hops, Tree};

mod bounds;
mod enumeration;
mod hearing;
mod independence;
mod optima;
mod report;
mod search;

pub use bounds::{
    conjectured_upper, formula_caterpillar, formula_path_spider, formula_r_independent,
    formula_two_branch, lower_bound_witness, upper_bound, Formula, FormulaValue,
};
pub use enumeration::{alpha_bn_enum, alpha_bn_enum_all, AllOptima, DEFAULT_OPTIMA_CAP};
pub use hearing::alpha_h_exact;
pub use independence::{alpha_forest, is_independent_in};
pub use optima::{optimal_broadcast_properties, OptimaReport};
pub use report::{compute, BoundsReport};
pub use search::{
    alpha_bn_exact, alpha_bn_restricted, alpha_bn_search, PruneRules, MAX_SEARCH_ORDER,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    /// Full product enumeration with a validity filter only.
    PureEnum,
    /// Depth-first search with pruning.
    Pruned,
    /// Pruned search over broadcasts whose non-leaf strengths are at most 1.
    Restricted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveLimits {
    pub max_nodes: u64,
    pub time_budget: Duration,
    pub mode: SearchMode,
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits {
            max_nodes: 50_000_000_000,
            time_budget: Duration::from_secs(3600),
            mode: SearchMode::Pruned,
        }
    }
}

impl SolveLimits {
    pub fn new(max_nodes: u64, time_budget: Duration, mode: SearchMode) -> Result<SolveLimits> {
        if max_nodes == 0 || time_budget.is_zero() {
            return Err(Error::BadSpec("solver budgets must be positive".into()));
        }
        Ok(SolveLimits {
            max_nodes,
            time_budget,
            mode,
        })
    }

    pub fn with_mode(self, mode: SearchMode) -> SolveLimits {
        SolveLimits { mode, ..self }
    }
}

/// A maximum-weight broadcast found by an exact solver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Optimum {
    pub weight: Hops,
    pub strengths: Vec<Hops>,
    /// Search nodes (or enumerated broadcasts) visited.
    pub nodes: u64,
}

impl Optimum {
    pub fn broadcast<'t>(&self, t: &'t Tree) -> Broadcast<'t> {
        Broadcast::new(t, self.strengths.clone()).expect("solver output respects eccentricities")
    }
}

/// Node and wall-clock budget shared by the searches.
pub(crate) struct Budget {
    max_nodes: u64,
    deadline: Instant,
    pub(crate) nodes: u64,
}

impl Budget {
    pub(crate) fn new(limits: &SolveLimits) -> Budget {
        Budget {
            max_nodes: limits.max_nodes,
            deadline: Instant::now() + limits.time_budget,
            nodes: 0,
        }
    }

    /// Counts a node; false once either budget is spent.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return false;
        }
        self.nodes & 0x3ff != 0 || Instant::now() < self.deadline
    }

    pub(crate) fn exceeded(&self, best_weight: Hops, best_strengths: Vec<Hops>) -> Error {
        Error::BudgetExceeded {
            nodes: self.nodes,
            best_weight,
            best_strengths,
        }
    }
}
