//! Tree corpora: exhaustive enumeration, parametric families and the text
//! formats trees are read from and written to.

mod edgelist;
mod enumerate;
mod family;
mod graph6;

pub use edgelist::{emit_edge_list, parse_edge_list};
pub use enumerate::{
    canonical_level_sequence, centroids, enumerate_trees, rooted_level_sequence,
    tree_from_level_sequence, RootedTrees,
};
pub use family::{build_family, FamilySpec};
pub use graph6::{emit_graph6, parse_graph6};
