//! Depth-first branch-and-bound for `α_bn` on trees.
//!
//! On a tree, broadcaster `v` with strength `s` covers exactly the edges of
//! its radius-`s` ball, and `f` is bn-independent iff these edge sets are
//! pairwise disjoint. Each edge is identified with its endpoint farther from
//! vertex 0, so a ball is a bitmask and feasibility is a single AND.
//!
//! Rules, each toggleable through [`PruneRules`]:
//! - partial independence: a new ball must miss every ball already placed;
//! - edge budget: total covered edges never exceed `n - 1`;
//! - completion bound: the current weight plus the best each unassigned
//!   vertex could still add (capped by the free edges) must beat the
//!   incumbent. A broadcaster's strength never exceeds its covered edge
//!   count, so free edges bound the remaining weight.

use std::collections::VecDeque;

use super::{Budget, Optimum, SolveLimits};
use crate::broadcast::strengths_bn_independent;
use crate::error::{Error, Result};
use crate::tree::{Hops, Tree};

/// Largest order the mask representation handles.
pub const MAX_SEARCH_ORDER: usize = 129;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PruneRules {
    pub partial_independence: bool,
    pub edge_budget: bool,
    pub completion_bound: bool,
}

impl PruneRules {
    pub const ALL: PruneRules = PruneRules {
        partial_independence: true,
        edge_budget: true,
        completion_bound: true,
    };
    pub const NONE: PruneRules = PruneRules {
        partial_independence: false,
        edge_budget: false,
        completion_bound: false,
    };
}

pub fn alpha_bn_exact(t: &Tree, limits: &SolveLimits) -> Result<Optimum> {
    alpha_bn_search(t, limits, false, PruneRules::ALL)
}

/// Search limited to broadcasts in which only leaves may exceed strength 1.
/// Some maximum bn-independent broadcast always has this form, so the value
/// equals `α_bn`.
pub fn alpha_bn_restricted(t: &Tree, limits: &SolveLimits) -> Result<Optimum> {
    alpha_bn_search(t, limits, true, PruneRules::ALL)
}

pub fn alpha_bn_search(
    t: &Tree,
    limits: &SolveLimits,
    restricted: bool,
    rules: PruneRules,
) -> Result<Optimum> {
    let n = t.order();
    if n > MAX_SEARCH_ORDER {
        return Err(Error::TooLarge {
            n,
            max: MAX_SEARCH_ORDER,
        });
    }
    let mut search = Search::new(t, limits, restricted, rules);
    match search.run(0, 0, 0, 0) {
        Ok(()) => Ok(Optimum {
            weight: search.best_weight,
            strengths: search.best,
            nodes: search.budget.nodes,
        }),
        Err(Exhausted) => Err(search.budget.exceeded(search.best_weight, search.best)),
    }
}

struct Exhausted;

struct Search<'a> {
    tree: &'a Tree,
    rules: PruneRules,
    edge_count: u32,
    /// Vertices by descending eccentricity, ties by label.
    order: Vec<usize>,
    /// `cap[i]`: largest admissible strength of `order[i]`.
    cap: Vec<Hops>,
    /// `balls[i][s]`: edge mask of the radius-`s` ball around `order[i]`.
    balls: Vec<Vec<u128>>,
    current: Vec<Hops>,
    best: Vec<Hops>,
    best_weight: Hops,
    budget: Budget,
}

impl<'a> Search<'a> {
    fn new(t: &'a Tree, limits: &SolveLimits, restricted: bool, rules: PruneRules) -> Search<'a> {
        let n = t.order();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(t.ecc(v)), v));

        // Parent pointers from a BFS at 0; edge id of child c is c - 1.
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::from([0]);
        let mut seen = vec![false; n];
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &w in t.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }

        let cap: Vec<Hops> = order
            .iter()
            .map(|&v| {
                if restricted && !t.is_leaf(v) {
                    t.ecc(v).min(1)
                } else {
                    t.ecc(v)
                }
            })
            .collect();
        let balls = order
            .iter()
            .zip(&cap)
            .map(|(&v, &c)| {
                let row = t.dist_row(v);
                (0..=c)
                    .map(|s| {
                        (1..n)
                            .filter(|&ch| row[ch] <= s && row[parent[ch]] <= s)
                            .fold(0u128, |m, ch| m | 1 << (ch - 1))
                    })
                    .collect()
            })
            .collect();

        Search {
            tree: t,
            rules,
            edge_count: (n - 1) as u32,
            order,
            cap,
            balls,
            current: vec![0; n],
            best: vec![0; n],
            best_weight: 0,
            budget: Budget::new(limits),
        }
    }

    /// Largest strength for `order[i]` whose ball misses `used`.
    fn max_feasible(&self, i: usize, used: u128) -> Hops {
        let balls = &self.balls[i];
        let mut s = 0;
        while (s as usize) + 1 < balls.len() && balls[s as usize + 1] & used == 0 {
            s += 1;
        }
        s
    }

    fn completion_bound(&self, i: usize, used: u128, covered: u32) -> Hops {
        if self.rules.partial_independence {
            let free = self.edge_count - used.count_ones();
            let mut sum = 0;
            for j in i..self.order.len() {
                sum += self.max_feasible(j, used);
                if sum >= free {
                    return free;
                }
            }
            sum
        } else {
            let sum: Hops = self.cap[i..].iter().sum();
            if self.rules.edge_budget {
                sum.min(self.edge_count.saturating_sub(covered))
            } else {
                sum
            }
        }
    }

    fn run(&mut self, i: usize, used: u128, covered: u32, weight: Hops) -> Result<(), Exhausted> {
        if !self.budget.tick() {
            return Err(Exhausted);
        }
        if i == self.order.len() {
            if weight > self.best_weight
                && (self.rules.partial_independence
                    || strengths_bn_independent(self.tree, &self.current))
            {
                debug_assert!(
                    strengths_bn_independent(self.tree, &self.current),
                    "search accepted a broadcast with overlapping coverage: {:?}",
                    self.current
                );
                self.best_weight = weight;
                self.best.clone_from(&self.current);
            }
            return Ok(());
        }
        if self.rules.completion_bound
            && weight + self.completion_bound(i, used, covered) <= self.best_weight
        {
            return Ok(());
        }

        let v = self.order[i];
        let top = if self.rules.partial_independence {
            self.max_feasible(i, used)
        } else {
            self.cap[i]
        };
        for s in (1..=top).rev() {
            let ball = self.balls[i][s as usize];
            let size = ball.count_ones();
            if self.rules.edge_budget && covered + size > self.edge_count {
                continue;
            }
            self.current[v] = s;
            self.run(i + 1, used | ball, covered + size, weight + s)?;
            self.current[v] = 0;
        }
        self.run(i + 1, used, covered, weight)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::build_family;

    fn solve(spec: &str) -> Hops {
        let t = build_family(&spec.parse().unwrap()).unwrap();
        let opt = alpha_bn_exact(&t, &SolveLimits::default()).unwrap();
        assert!(strengths_bn_independent(&t, &opt.strengths));
        assert_eq!(opt.strengths.iter().sum::<Hops>(), opt.weight);
        opt.weight
    }

    #[test]
    fn spiders_and_paths() {
        assert_eq!(solve("path:2"), 1);
        assert_eq!(solve("path:5"), 4);
        assert_eq!(solve("spider:2,2,2"), 6);
        assert_eq!(solve("spider:2,2,2,2"), 8);
        assert_eq!(solve("spider:3,4,5"), 12);
    }

    #[test]
    fn double_spider_d14() {
        assert_eq!(solve("dspider:2,2/5/2,2"), 11);
    }

    #[test]
    fn restricted_matches_on_d14() {
        let t = build_family(&"dspider:2,2/5/2,2".parse().unwrap()).unwrap();
        let opt = alpha_bn_restricted(&t, &SolveLimits::default()).unwrap();
        assert_eq!(opt.weight, 11);
        for v in 0..t.order() {
            if !t.is_leaf(v) {
                assert!(opt.strengths[v] <= 1);
            }
        }
    }

    #[test]
    fn every_rule_combination_agrees() {
        let t = build_family(&"spider:1,2,2".parse().unwrap()).unwrap();
        let limits = SolveLimits::default();
        for bits in 0..8u8 {
            let rules = PruneRules {
                partial_independence: bits & 1 != 0,
                edge_budget: bits & 2 != 0,
                completion_bound: bits & 4 != 0,
            };
            let opt = alpha_bn_search(&t, &limits, false, rules).unwrap();
            assert_eq!(opt.weight, 5, "{rules:?}");
        }
    }

    #[test]
    fn k1_has_value_zero() {
        let t = Tree::new(1, &[]).unwrap();
        assert_eq!(
            alpha_bn_exact(&t, &SolveLimits::default()).unwrap().weight,
            0
        );
    }

    #[test]
    fn budget_exceeded_reports_incumbent() {
        let t = build_family(&"dspider:2,2/5/2,2".parse().unwrap()).unwrap();
        let limits = SolveLimits {
            max_nodes: 50,
            ..SolveLimits::default()
        };
        match alpha_bn_exact(&t, &limits) {
            Err(Error::BudgetExceeded {
                best_weight,
                best_strengths,
                ..
            }) => {
                assert_eq!(best_strengths.iter().sum::<Hops>(), best_weight);
                assert!(strengths_bn_independent(&t, &best_strengths));
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
