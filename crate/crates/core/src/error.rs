use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("composite characteristic {0}")]
    CompositeCharacteristic(u64),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("negative exponent")]
    NegativeExponent,
    #[error("exponent {0} is too large")]
    ExponentTooLarge(u64),
    #[error("exponent vectors of different length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("invalid variable permutation: {0}")]
    InvalidPermutation(String),
    #[error("colon by the zero polynomial")]
    ZeroDivisor,
    #[error("the zero ideal is not allowed")]
    ZeroIdeal,
    #[error("{0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("enumeration requires finite field")]
    InfiniteField,
    #[error("bound exceeded: no witness up to degree {0}")]
    BoundExceeded(u32),
    #[error("no primes available")]
    NoPrimes,
    #[error("no regular linear form found after trying {0} forms")]
    NoRegularLinearForm(u64),
    #[error("dimension {0} > 1 unsupported")]
    UnsupportedDimension(usize),
    #[error("zero vector is not a projective point")]
    ZeroPoint,
    #[error("duplicate point {0}")]
    DuplicatePoint(String),
    #[error("point has {found} coordinates, expected {expected}")]
    PointLength { expected: usize, found: usize },
    #[error("r = {r} out of range 1..={k}")]
    RankOutOfRange { r: usize, k: usize },
    #[error("enumeration of about {estimate} candidates exceeds budget {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },
    #[error("hypothesis not established: {0}")]
    Hypothesis(String),
}
