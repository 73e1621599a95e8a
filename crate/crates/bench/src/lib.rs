//! Benchmark workloads shared by the criterion targets.

use bnb_core::corpus::{build_family, enumerate_trees};
use bnb_core::Tree;

/// Named single trees spanning the shapes the solvers see in practice.
pub fn single_trees() -> Vec<(&'static str, Tree)> {
    [
        ("spider_2x4", "spider:2,2,2,2"),
        ("d14", "dspider:2,2/5/2,2"),
        ("dspider_19", "dspider:3,3/6/3,3"),
        ("caterpillar_15", "cat:leafcounts=2,1,2,1,2;spacing=0,1,0,1"),
        ("path_20", "path:20"),
    ]
    .into_iter()
    .map(|(name, spec)| (name, build_family(&spec.parse().unwrap()).unwrap()))
    .collect()
}

/// Every tree of order `n`.
pub fn corpus(n: usize) -> Vec<Tree> {
    enumerate_trees(n).collect()
}
