use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("elements belong to different algebras")]
    ParentMismatch,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },

    #[error("basis is not homogeneous for the {0}")]
    NonHomogeneous(String),

    #[error("grading is not compatible with multiplication: {0}")]
    IncompatibleGrading(String),

    #[error("antipode is not invertible")]
    SingularAntipode,

    #[error("matrix is singular")]
    Singular,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("axioms violated: {0}")]
    Axioms(String),

    #[error("no rational normalization: {0}")]
    NoRationalNormalization(String),

    #[error("witness search is not exhaustive: {0}")]
    NotExhaustive(String),

    #[error("{0} is not a scalar")]
    NotScalar(String),

    #[error("unknown builder {0:?}")]
    UnknownBuilder(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
