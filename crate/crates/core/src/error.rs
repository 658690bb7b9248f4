use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^32")]
    InvalidModulus(u64),
    #[error("mixed moduli {0} and {1}")]
    ModulusMismatch(u64, u64),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("dimension mismatch: source has dimension {source_dim}, target {target_dim}")]
    DimensionMismatch { source_dim: usize, target_dim: usize },

    #[error("algebra is not a cyclic Nakayama algebra")]
    NotCyclicNakayama,
    #[error("no complete set of orthogonal idempotents available")]
    IdempotentDiscoveryFailed,
    #[error("vertex {vertex} out of range 1..={count}")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("map is not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("radical could not be certified from the trace form")]
    RadicalUndetermined,

    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("algebra carries no vertex grading")]
    NotGraded,
    #[error("not a module: {0}")]
    NotAModule(String),
    #[error("isomorphism test inconclusive")]
    Inconclusive,

    #[error("not a complex: {0}")]
    NotAComplex(String),
    #[error("not a chain map: {0}")]
    NotAChainMap(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("resolution depth {available} is insufficient, need {needed}")]
    InsufficientDepth { needed: usize, available: usize },
    #[error("could not lift a map over a projective in degree {0}")]
    LiftingFailed(usize),
    #[error("complex has non-projective terms")]
    NotProjectiveTerms,

    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("maximal overorder has rows of different types")]
    MixedTypes,
    #[error("ramification data is not basic (all block sizes must be 1)")]
    NotBasic,
    #[error("no primitive {r}-th root of unity in F_{p}")]
    NoRootOfUnity { r: usize, p: u64 },
    #[error("simple correspondence is not a bijection")]
    NotBijective,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
