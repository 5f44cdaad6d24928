use thiserror::Error;

/// Errors produced by the library.
///
/// Variants split into two families: rejected inputs (bad arguments, failed
/// preconditions) and [`Error::Invariant`], which means a computed identity
/// that must hold did not. Front-ends map the first family to "invalid input"
/// and the second to "internal failure".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements from different fields: d = {0} and d = {1}")]
    FieldMismatch(i64, i64),
    #[error("invalid quadratic field parameter d = {0}: must be squarefree and not 0 or 1")]
    InvalidField(i64),
    #[error("argument `{0}` must be nonzero")]
    ZeroArgument(&'static str),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("cannot factor {value}: a cofactor exceeds the trial-division ceiling {ceiling}")]
    FactorizationLimit { value: String, ceiling: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("Hermitian matrix is degenerate")]
    Degenerate,
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("point is not semistable: {0}")]
    NotSemistable(String),
    #[error("matrix does not preserve the trivector up to scalar")]
    NotInGroup,
    #[error("cocycle condition violated")]
    CocycleViolated,
    #[error("determinant must be {expected}, found {found}")]
    WrongDeterminant { expected: String, found: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid isotropic witness: {0}")]
    InvalidWitness(String),
    #[error("no isotropic witness supplied and the form is not already normalized")]
    MissingWitness,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for errors caused by the caller's input rather than by a failed
    /// internal identity.
    pub fn is_invalid_input(&self) -> bool {
        !matches!(self, Error::Invariant(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
