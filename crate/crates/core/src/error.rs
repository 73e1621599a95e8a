use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {n}")]
    BadVertexIndex { vertex: usize, n: usize },
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("not a forest: {0}")]
    NotAForest(String),
    #[error("branch-leaf representation is undefined for paths")]
    DegeneratePath,
    #[error("tree has no branch vertices")]
    NoBranchVertices,
    #[error("vertex {0} is not a branch vertex")]
    NotBranchVertex(usize),
    #[error("strength {strength} at vertex {vertex} exceeds eccentricity {eccentricity}")]
    StrengthExceedsEccentricity {
        vertex: usize,
        strength: u32,
        eccentricity: u32,
    },
    #[error("negative strength {strength} at vertex {vertex}")]
    NegativeStrength { vertex: usize, strength: i64 },
    #[error("broadcast has {got} strengths but the host tree has {expected} vertices")]
    HostMismatch { expected: usize, got: usize },
    #[error("broadcast is not bn-independent")]
    NotBnIndependent,
    #[error("search budget exceeded after {nodes} nodes (best weight found: {best_weight})")]
    BudgetExceeded {
        nodes: u64,
        best_weight: u32,
        best_strengths: Vec<u32>,
    },
    #[error("tree of order {n} exceeds the solver limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("bad family spec: {0}")]
    BadSpec(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph6 long form (n >= 63) is not supported")]
    UnsupportedLongForm,
}
