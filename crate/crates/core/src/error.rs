use thiserror::Error;

use crate::root_data::WeightTriple;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parity violation: r = {r} is not congruent to k1 + k2 = {} mod 2", .k1 + .k2)]
    ParityViolation { k1: i64, k2: i64, r: i64 },
    #[error("coordinate {value} exceeds the supported bound {bound}")]
    OutOfRange { value: i64, bound: i64 },
    #[error("weight {0} is not dominant (need k1 >= k2 >= 0)")]
    NotDominant(WeightTriple),
    #[error("parabolic index {0} is not 0 (Siegel) or 1 (Klingen)")]
    BadParabolicIndex(i64),
    #[error("group cohomology degree {0} outside [0, 1]")]
    DegreeOutOfRange(i64),
    #[error("invalid stratum (g = {g}, c = {c}): need c >= 1, and c >= 3 when g = 0")]
    InvalidStratum { g: i64, c: i64 },
    #[error("entries come from more than one stratum")]
    MixedStrata,
    #[error("empty list of Siegel strata")]
    EmptyStrata,
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("exact division failed: {0}")]
    DivisionFailure(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ParityViolation { .. } => "ParityViolation",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::NotDominant(_) => "NotDominant",
            Error::BadParabolicIndex(_) => "BadParabolicIndex",
            Error::DegreeOutOfRange(_) => "DegreeOutOfRange",
            Error::InvalidStratum { .. } => "InvalidStratum",
            Error::MixedStrata => "MixedStrata",
            Error::EmptyStrata => "EmptyStrata",
            Error::PreconditionViolation(_) => "PreconditionViolation",
            Error::DivisionFailure(_) => "DivisionFailure",
            Error::Overflow(_) => "Overflow",
            Error::InvariantViolation(_) => "InvariantViolation",
        }
    }
}
