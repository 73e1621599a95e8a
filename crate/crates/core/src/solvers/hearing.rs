use super::{Budget, Optimum, SolveLimits};
use crate::broadcast::strengths_hearing_independent;
use crate::error::Result;
use crate::tree::{Hops, Tree};

/// `α_h`: maximum weight of a broadcast in which no broadcaster hears another.
///
/// Vertices are assigned in descending eccentricity order. A new broadcaster
/// must lie outside every placed ball, and its strength stays below its
/// distance to each placed broadcaster.
pub fn alpha_h_exact(t: &Tree, limits: &SolveLimits) -> Result<Optimum> {
    let n = t.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(t.ecc(v)), v));
    let mut search = HearingSearch {
        tree: t,
        order,
        placed: Vec::new(),
        current: vec![0; n],
        best: vec![0; n],
        best_weight: 0,
        budget: Budget::new(limits),
    };
    match search.run(0, 0) {
        Some(()) => Ok(Optimum {
            weight: search.best_weight,
            strengths: search.best,
            nodes: search.budget.nodes,
        }),
        None => Err(search.budget.exceeded(search.best_weight, search.best)),
    }
}

struct HearingSearch<'a> {
    tree: &'a Tree,
    order: Vec<usize>,
    placed: Vec<usize>,
    current: Vec<Hops>,
    best: Vec<Hops>,
    best_weight: Hops,
    budget: Budget,
}

impl HearingSearch<'_> {
    fn max_feasible(&self, v: usize) -> Hops {
        let mut cap = self.tree.ecc(v);
        for &u in &self.placed {
            let d = self.tree.dist(u, v);
            if d <= self.current[u] {
                return 0;
            }
            cap = cap.min(d - 1);
        }
        cap
    }

    fn run(&mut self, i: usize, weight: Hops) -> Option<()> {
        if !self.budget.tick() {
            return None;
        }
        if i == self.order.len() {
            if weight > self.best_weight {
                debug_assert!(strengths_hearing_independent(self.tree, &self.current));
                self.best_weight = weight;
                self.best.clone_from(&self.current);
            }
            return Some(());
        }
        let bound: Hops = self.order[i..].iter().map(|&v| self.max_feasible(v)).sum();
        if weight + bound <= self.best_weight {
            return Some(());
        }
        let v = self.order[i];
        for s in (1..=self.max_feasible(v)).rev() {
            self.current[v] = s;
            self.placed.push(v);
            self.run(i + 1, weight + s)?;
            self.placed.pop();
            self.current[v] = 0;
        }
        self.run(i + 1, weight)
    }
}
