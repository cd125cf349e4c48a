use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The declared relation violates antisymmetry, i.e. contains a cycle.
    #[error("relation is not antisymmetric: `{0}` and `{1}` are comparable both ways")]
    Cycle(String, String),
    /// A relation or query mentions a label that was never declared.
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    /// A label occurs twice in the element list.
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    /// The construction would exceed the configured element cap.
    #[error("poset would have {requested} elements, cap is {cap}")]
    SizeLimit { requested: usize, cap: usize },
    /// A grading-dependent operation was invoked on an ungraded poset.
    #[error("poset is not graded")]
    NotGraded,
    /// The declared grading violates the graded-poset conditions.
    #[error("grading violation: {0}")]
    BadGrading(String),
    /// A path orientation has the wrong number of edge directions.
    #[error("orientation has {got} directions, path on {n} vertices needs {want}")]
    BadLength { n: usize, got: usize, want: usize },
    /// An operation restricted to path quivers got something else.
    #[error("quiver is not an orientation of a path: {0}")]
    NotAPath(String),
    /// A quiver failed structural validation.
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    /// A numeric argument is outside its documented domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// The modulus of a prime field is not prime.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// Two subspaces of different ambient spaces were combined.
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    /// Malformed serialized input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
