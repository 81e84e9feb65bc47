use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("bracket is not antisymmetric at ({i}, {j})")]
    NotAntisymmetric { i: usize, j: usize },

    #[error("Jacobi identity fails at ({i}, {j}, {k})")]
    JacobiFailure { i: usize, j: usize, k: usize },

    #[error("sigma is not an involution")]
    NotInvolution,

    #[error("sigma is not a Lie algebra automorphism")]
    NotAutomorphism,

    #[error("invalid symmetric triple: {0}")]
    InvalidTriple(String),

    #[error("subspace is not a subalgebra")]
    NotSubalgebra,

    #[error("unknown Cartan type {0:?}")]
    UnknownType(String),

    #[error("Cartan matrix is not of finite type: {0}")]
    NotFiniteType(String),

    #[error("rank {rank} exceeds the cap {cap}")]
    RankTooLarge { rank: usize, cap: usize },

    #[error("node {node} is not admissible for {ty}")]
    NotAdmissible { ty: String, node: usize },

    #[error("lambda must be nonzero")]
    ZeroLambda,

    #[error("unknown catalog family {0:?}")]
    UnknownFamily(String),

    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: String, reason: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
