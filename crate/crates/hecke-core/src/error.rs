use thiserror::Error;

/// Errors from element-level group arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("family mismatch: cannot combine {0} element with {1} element")]
    FamilyMismatch(&'static str, &'static str),
    #[error("matrix determinant is not 1")]
    NotUnimodular,
    #[error("matrix entry denominator contains a prime outside the declared set")]
    DenominatorOutsideS,
}

/// Errors from ball construction and coset queries.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CosetError {
    #[error("ball budget exhausted: completed radius {completed_radius}, {cosets} cosets stored")]
    BallBudget { completed_radius: u32, cosets: usize },
    #[error("coset outside table: needs radius at least {needed} (table radius {radius})")]
    OutOfRange { radius: u32, needed: u32 },
    #[error("coset id {0} not present in table")]
    UnknownCoset(u32),
    #[error("orbit enumeration budget of {0} exhausted")]
    OrbitBudget(usize),
    #[error("internal consistency: {0}")]
    Internal(String),
}

/// Errors from finite-level completion operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LevelError {
    #[error("carrier mismatch: lower level is not contained in higher level")]
    CarrierMismatch,
    #[error("level {lo} exceeds level {hi}")]
    LevelOrder { lo: u32, hi: u32 },
    #[error("probed element is not in the subgroup")]
    NotInSubgroup,
    #[error(transparent)]
    Coset(#[from] CosetError),
}

/// Errors from kernel matrices and transfers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum KernelError {
    #[error("kernel matrix is not symmetric at ({0},{1})")]
    NotSymmetric(usize, usize),
    #[error("kernel matrix has nonzero diagonal at {0}")]
    NonzeroDiagonal(usize),
    #[error("kernel points do not form the ball of radius {expected_radius} of the table")]
    PointsNotABall { expected_radius: u32 },
    #[error("matrix is {rows}x{cols}, expected square of size {points}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        points: usize,
    },
    #[error("kernel is not of conditionally negative type")]
    NotCnd,
    #[error("base index {0} out of range")]
    BadBase(usize),
    #[error(transparent)]
    Coset(#[from] CosetError),
}

/// Errors from parsing configuration, words and serialized tables.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed word token `{0}`")]
    BadToken(String),
    #[error("malformed number `{0}`")]
    BadNumber(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error("csv: line {line}: {msg}")]
    Csv { line: usize, msg: String },
    #[error("json: {0}")]
    Json(String),
}
