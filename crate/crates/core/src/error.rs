use thiserror::Error;

/// Errors from the polynomial and ideal layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("{0} variables requested, at most 24 are supported")]
    TooManyVariables(usize),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("Groebner basis computation exceeded its budget of {0} reductions")]
    BudgetExceeded(u64),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("division is not exact")]
    NotExact,
    #[error("determinant of size {0} exceeds the supported limit")]
    TooLarge(usize),
    #[error("{0}")]
    Invalid(String),
}

/// Errors from tableau combinatorics.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("cannot parse tableau `{0}`")]
    Parse(String),
    #[error("not a semistandard tableau: {0}")]
    NotSemistandard(String),
    #[error("entry {entry} exceeds m = {m}")]
    EntryTooLarge { entry: u32, m: usize },
    #[error("tableaux have different m ({0} vs {1})")]
    RankMismatch(usize, usize),
    #[error("Lusztig datum has length {got}, expected {expected}")]
    DatumLength { got: usize, expected: usize },
    #[error("{0}")]
    Invalid(String),
}

/// Errors from the fusion pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FusionError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    /// A computed invariant disagrees with what the theory predicts.
    #[error("theory violation: {0}")]
    TheoryViolation(String),
}

impl FusionError {
    pub fn is_budget(&self) -> bool {
        matches!(self, FusionError::Algebra(AlgebraError::BudgetExceeded(_)))
    }
}
