//! Exhaustive oracle: every strength vector with `0 <= f(v) <= e(v)`, kept
//! when the definition-level bn-independence predicate accepts it. No
//! pruning of any kind; practical up to about seven vertices.

use super::{Budget, Optimum, SolveLimits};
use crate::broadcast::strengths_bn_independent;
use crate::error::Result;
use crate::tree::{Hops, Tree};

pub const DEFAULT_OPTIMA_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllOptima {
    /// First optimum in odometer order.
    pub optimum: Optimum,
    /// Every maximum-weight bn-independent broadcast, up to the cap.
    pub optima: Vec<Vec<Hops>>,
    pub cap_hit: bool,
}

pub fn alpha_bn_enum(t: &Tree, limits: &SolveLimits) -> Result<Optimum> {
    Ok(alpha_bn_enum_all(t, limits, 0)?.optimum)
}

/// Like [`alpha_bn_enum`] but also collects up to `cap` optimal broadcasts.
pub fn alpha_bn_enum_all(t: &Tree, limits: &SolveLimits, cap: usize) -> Result<AllOptima> {
    let n = t.order();
    let mut budget = Budget::new(limits);
    let mut f = vec![0 as Hops; n];
    let mut best_weight = 0;
    let mut best = f.clone();
    let mut optima: Vec<Vec<Hops>> = Vec::new();
    let mut cap_hit = false;

    loop {
        if !budget.tick() {
            return Err(budget.exceeded(best_weight, best));
        }
        let weight: Hops = f.iter().sum();
        if weight >= best_weight && strengths_bn_independent(t, &f) {
            if weight > best_weight {
                best_weight = weight;
                best.clone_from(&f);
                optima.clear();
                cap_hit = false;
            }
            if optima.len() < cap {
                optima.push(f.clone());
            } else if cap > 0 {
                cap_hit = true;
            }
        }
        // Odometer step, least significant digit first.
        let mut v = 0;
        while v < n && f[v] == t.ecc(v) {
            f[v] = 0;
            v += 1;
        }
        if v == n {
            break;
        }
        f[v] += 1;
    }

    Ok(AllOptima {
        optimum: Optimum {
            weight: best_weight,
            strengths: best,
            nodes: budget.nodes,
        },
        optima,
        cap_hit,
    })
}
