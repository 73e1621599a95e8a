//! Boundary independent broadcasts on trees.
//!
//! - [`tree`]: validated trees and forests with cached distances.
//! - [`profile`]: branch vertices, leaf sets, internal degree-2 vertices,
//!   the interior forest and the other structural decompositions.
//! - [`broadcast`]: broadcasts and their predicates (domination,
//!   bn-independence, hearing independence, maximality).
//! - [`solvers`]: exact values of `α_bn` and `α_h`, the independence number
//!   of forests, lower/upper bounds with witnesses and closed formulas.
//! - [`corpus`]: non-isomorphic tree enumeration, parametric families and
//!   the edge-list and graph6 formats.

pub mod broadcast;
pub mod corpus;
pub mod error;
pub mod profile;
pub mod solvers;
pub mod tree;

pub use broadcast::{Broadcast, BroadcastAnalysis, Violation};
pub use error::{Error, Result};
pub use profile::{profile, ShapeSet, TreeProfile};
pub use solvers::{BoundsReport, SearchMode, SolveLimits};
pub use tree::{Forest, Hops, Mapped, Tree};
