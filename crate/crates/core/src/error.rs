use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u32),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("unsupported field order {0}")]
    UnsupportedOrder(u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("ambient space too large: q^n = {q}^{n}")]
    SpaceTooLarge { q: u32, n: usize },
    #[error("dimension {d} out of range for n = {n}")]
    DimensionOutOfRange { d: usize, n: usize },
    #[error("normal vector must be nonzero")]
    ZeroNormal,
    #[error("point has {got} coordinates, expected {expected}")]
    WrongArity { expected: usize, got: usize },
    #[error("element code {0} out of range for the field")]
    ElementOutOfRange(u64),

    #[error("invalid function: {0}")]
    InvalidFunction(String),
    #[error("function is not scalar compatible; its zero set is not a cone")]
    NotScalarCompatible,

    #[error("point set contains the origin")]
    OriginInSet,
    #[error("normal vectors define the same hyperplane")]
    SameHyperplane,

    #[error("code has no nonzero codewords")]
    EmptyCode,
    #[error("work estimate {required} exceeds budget {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
