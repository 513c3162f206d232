use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// All operations are total on their documented domain; these variants
/// describe inputs that fall outside it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} must be nonzero")]
    Zero(&'static str),
    #[error("doubled coordinates {0:?} do not share a parity")]
    ParityMismatch([i64; 4]),
    #[error("{0} is not a pure quaternion")]
    NotPure(String),
    #[error("{0} does not have integer coefficients")]
    NotLipschitz(String),
    #[error("{0} is not primitive")]
    NotPrimitive(String),
    #[error("{p} does not divide the norm of {alpha}")]
    NoDivisor { alpha: String, p: i64 },
    #[error("{p} divides {alpha}")]
    PDividesAlpha { alpha: String, p: i64 },
    #[error("{0} is not prime")]
    NotPrime(i64),
    #[error("{0} is not squarefree")]
    NotSquarefree(i64),
    #[error("columns do not form an icube: {0}")]
    NotIcube(String),
    #[error("not a twin pair: {0}")]
    NotTwins(String),
    #[error("twin pair of norm {0} has non-integer length")]
    NotExtendable(i64),
    #[error("{0} does not have integer length")]
    NonIntegerLength(String),
    #[error("enumeration of norm {norm} in dimension {dim} exceeds the budget of {limit}")]
    BudgetExceeded { norm: i64, dim: usize, limit: i64 },
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("index {index} out of range 0..{len}")]
    InvalidIndex { index: usize, len: usize },
    #[error("quadruple is not in normal form: {0}")]
    NotNormalForm(String),
    #[error("gcd condition violated: {0}")]
    GcdCondition(String),
    #[error("{0} must be positive")]
    NotPositive(&'static str),
    #[error("{0} must be odd")]
    NotOdd(&'static str),
    #[error("cannot parse {kind} from {input:?}")]
    Parse { kind: &'static str, input: String },
    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
