use thiserror::Error;

/// Errors raised while building fields, models, sequences or running checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {0} exceeds the supported cap of 2^16")]
    FieldTooLarge(u128),
    #[error("digit {digit} out of range for base {base}")]
    DigitOutOfRange { digit: u64, base: u64 },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("zero element has no inverse")]
    ZeroInverse,
    #[error("element does not belong to this residue field")]
    ResidueMismatch,
    #[error("invalid bijection table: {0}")]
    InvalidBijection(String),
    #[error("polynomial {0} is not irreducible")]
    NotIrreducible(String),
    #[error("polynomial {0} must be monic")]
    NotMonic(String),
    #[error("degree {degree} exceeds the cap of {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("residue field of order {q}^{e} is too large")]
    ResidueFieldTooLarge { q: u32, e: usize },
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("point ({x0}, {y0}) is not on the curve")]
    NotOnCurve { x0: u32, y0: u32 },
    #[error("point with y0 = 0 is not supported")]
    RamifiedPoint,
    #[error("only {available} places available, {requested} requested")]
    NotEnoughPlaces { requested: usize, available: usize },
    #[error("duplicate place {0}")]
    DuplicatePlace(String),
    #[error("place kind does not match the model")]
    PlaceModelMismatch,
    #[error("expected a value of at least {min}, got {got}")]
    TooSmall { min: i64, got: i64 },
    #[error("precision {precision} out of range (1..={max})")]
    PrecisionOutOfRange { precision: usize, max: usize },
    #[error("power series error: {0}")]
    Series(String),
    #[error("bases must be pairwise coprime, got {0} and {1}")]
    NotCoprime(u64, u64),
    #[error("base must be at least 2, got {0}")]
    BadBase(u64),
    #[error("expected {expected} points, got {got}")]
    WrongCardinality { expected: u128, got: usize },
    #[error("point {index} has insufficient precision: need {needed} digits")]
    InsufficientPrecision { index: usize, needed: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("enumeration of {0} elements exceeds the cap")]
    EnumerationCap(u128),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
