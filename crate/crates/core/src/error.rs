use thiserror::Error;

/// Errors raised by the algebra and intersection-theory engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("variable `{0}` has no image under the substitution")]
    UnboundVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("unlucky draw: independent random draws disagree ({0})")]
    UnluckyDraw(String),
    #[error("ideal is not zero-dimensional (dimension {0})")]
    PositiveDimensional(i64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("generators have unequal degrees {0:?}")]
    UnequalDegrees(Vec<u32>),
    #[error("not a proper closed subscheme: {0}")]
    NotProper(String),
    #[error("generator not in the ideal of X: {0}")]
    NotInIdeal(String),
    #[error("containment of the cone in the obstruction bundle is not verified: {0}")]
    UnattestedTwists(String),
    #[error("inconsistent ranks: {0}")]
    Rank(String),
    #[error("degenerate family: {0}")]
    DegenerateFamily(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
