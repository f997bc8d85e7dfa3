use thiserror::Error;

/// Errors raised by the reconstruction library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty sexagesimal literal")]
    EmptyInput,
    #[error("invalid sexagesimal token `{0}`")]
    InvalidToken(String),
    #[error("sexagesimal digit {0} exceeds 59")]
    DigitOutOfRange(u32),
    #[error("more than one fraction mark in `{0}`")]
    MultipleFractionMarks(String),
    #[error("unbalanced brackets in `{0}`")]
    UnbalancedBrackets(String),
    #[error("leading zero digit in integer part of `{0}`")]
    LeadingZero(String),
    #[error("zero has no regular factorization")]
    Zero,
    #[error("{0} is not a regular number")]
    NotRegular(String),
    #[error("{0} is regular; its reciprocal has a finite expansion")]
    AlreadyRegular(u64),
    #[error("{0} has no finite sexagesimal expansion")]
    NonTerminating(String),
    #[error("denominator must be non-zero")]
    ZeroDenominator,
    #[error("arithmetic overflow")]
    Overflow,
    #[error("invalid generating pair ({p}, {q}): need p > q >= 1")]
    InvalidPair { p: u64, q: u64 },
    #[error("ratio {0} is not admissible (need 1 < r < 1 + sqrt 2)")]
    Inadmissible(String),
    #[error("ratio {0} must exceed 1")]
    RatioNotAboveOne(String),
    #[error("{0} is not a valid argument for the odd-number triple (need odd m >= 3)")]
    InvalidOddGenerator(u64),
    #[error("ratios are not strictly descending at position {0}")]
    Unsorted(usize),
    #[error("gap analysis needs at least two rows, got {0}")]
    TooFewRows(usize),
    #[error("empty interval: lower bound {lo} is not below upper bound {hi}")]
    EmptyInterval { lo: String, hi: String },
    #[error("invalid procedure parameters: {0}")]
    InvalidProcedure(String),
    #[error("golden file: {0}")]
    Golden(String),
    #[error("error model does not apply: {0}")]
    ModelMismatch(String),
    #[error("factor elimination diverged: {0}")]
    StrategyDiverged(String),
    #[error("degenerate problem: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
