use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different rings")]
    IncompatibleRing,

    #[error("multidegree of the zero polynomial is undefined")]
    UndefinedDegree,

    #[error("series with zero constant term is not a unit")]
    NonUnit,

    #[error("truncation orders differ: {0} vs {1}")]
    TruncationMismatch(usize, usize),

    #[error("generator is not homogeneous for the grading: {generator}")]
    Inhomogeneous { generator: String },

    #[error("grading error: {0}")]
    Grading(String),

    #[error("the ideal is the unit ideal; its variety is empty")]
    EmptyVariety,

    #[error("groebner budget exhausted after {pairs} S-pairs")]
    ResourceExhausted { pairs: usize },

    #[error("jet ring of order {available} is too small, order {needed} is required")]
    RingTooSmall { needed: usize, available: usize },

    #[error("not a chain: V_{index} is not contained in V_{prev}", prev = .index - 1)]
    NotAChain { index: usize },

    #[error("oracle limited to {limit} variables, got {vars}")]
    OracleScale { vars: usize, limit: usize },

    #[error("point {0:?} lies outside the support of the fan")]
    OutsideSupport(Vec<i64>),

    #[error("fan is not a refinement: {0}")]
    NotARefinement(String),

    #[error("invalid fan: {0}")]
    InvalidFan(String),

    #[error("fan is not smooth: cone {0} does not extend to a lattice basis")]
    NotSmooth(usize),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("truncation cannot certify the contact profile; increase m")]
    InsufficientTruncation,

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}
