use thiserror::Error;

use crate::algebra::Elem;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Structural problem with a table, map or subset (bad index, wrong length, ...).
    #[error("invalid structure: {0}")]
    Structure(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("point {0} is outside the carrier")]
    InvalidPoint(Elem),

    #[error("carrier of size {size} exceeds the limit of {limit}")]
    SizeLimit { size: usize, limit: usize },

    #[error("subset is not a deductive system")]
    NotDeductiveSystem,

    /// `x -> y` and `x ~> y` disagree on membership in the subset.
    #[error("deductive system is not normal (witness x={x}, y={y})")]
    NotNormal { x: Elem, y: Elem },

    #[error("map #{index} is not a measure")]
    NotAMeasure { index: usize },

    #[error("map is not a state-morphism")]
    NotStateMorphism,

    #[error("algebra is not linearly ordered")]
    NotLinear,

    #[error("not a pseudo-hoop")]
    NotAHoop,

    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },

    /// A quotient operation or lifted map depends on the choice of block representative.
    #[error("not well defined on the quotient: {0}")]
    WellDefinedness(String),

    /// A property that is a theorem about these structures failed on concrete input.
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
}
