use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars belong to different fields")]
    FieldMismatch,
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("monomial arity {found} does not match ring arity {expected}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("effort budget exceeded after {steps} reduction steps")]
    BudgetExceeded { steps: u64 },
    #[error("wall-clock deadline exceeded")]
    DeadlineExceeded,
    #[error("unit ideal")]
    UnitIdeal,
    #[error("generator is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("quotient is not Artinian up to degree {0}")]
    NotArtinian(usize),
    #[error("ideal is not contained in the reference ideal")]
    NotContained,
    #[error("variable sets overlap: {0}")]
    OverlappingVariables(String),
    #[error("lattice enumeration budget exceeded ({0} points)")]
    EnumerationBudget(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Errors that mean "ran out of effort" rather than "wrong answer".
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. } | Error::DeadlineExceeded | Error::EnumerationBudget(_)
        )
    }
}
