use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(usize),
    #[error("rank mismatch: A_{0} vs A_{1}")]
    RankMismatch(usize, usize),
    #[error("not a permutation of 1..={expected}: {found:?}")]
    NotAPermutation { expected: usize, found: Vec<usize> },
    #[error("generator index {index} out of range for A_{rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("malformed root ({lo},{hi}) for A_{rank}")]
    MalformedRoot { lo: usize, hi: usize, rank: usize },
    #[error("word is not reduced")]
    NotReduced,
    #[error("root set is not the inversion set of any permutation")]
    InvalidInversionSet,
    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed Coxeter matrix: {0}")]
    MalformedMatrix(String),
    #[error("root generation exceeded the cap of {0} roots")]
    CapExceeded(usize),

    #[error("generator {0} already belongs to the base set")]
    AlphaInBase(usize),
    #[error("invalid groupoid morphism: {0}")]
    InvalidMorphism(String),
    #[error("rank {rank} exceeds the exhaustive-search bound {bound}")]
    BoundExceeded { rank: usize, bound: usize },

    #[error("direction {direction} out of range for a {dim}-cube")]
    InvalidDirection { direction: usize, dim: usize },
    #[error("generator sets are not orthogonal")]
    NotOrthogonal,
    #[error("invalid choice sequence: {0}")]
    InvalidChoices(String),
    #[error("invalid cube: {0}")]
    InvalidCube(String),
    #[error("unknown reorientation move {0:?}")]
    InvalidMove(String),

    #[error("malformed based rectangle ({lo},{base},{hi}) for A_{rank}")]
    MalformedRectangle { lo: usize, base: usize, hi: usize, rank: usize },
    #[error("inversion set is not a based rectangle")]
    NotARectangle,
    #[error("invalid rectangle partition: {0}")]
    InvalidPartition(String),
    #[error("generator interval [{a},{c}] is not a compatible subtriangle")]
    IncompatibleSubtriangle { a: usize, c: usize },
    #[error("tree has {found} leaves, expected {expected}")]
    LeafCountMismatch { expected: usize, found: usize },
}
