use thiserror::Error;

use crate::exactpoly::RootednessReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial has a negative coefficient at degree {degree}")]
    NegativeCoefficient { degree: usize },

    #[error("polynomial must have a positive leading coefficient")]
    NonPositiveLeadingCoefficient,

    #[error("polynomial is not real-rooted ({} of {} roots real)", .0.real_root_count, .0.degree)]
    NotRealRooted(Box<RootednessReport>),

    #[error("invalid board: {0}")]
    InvalidBoard(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("permutation contains 312 at positions {0:?}")]
    Contains312((usize, usize, usize)),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("invalid content: {0}")]
    InvalidContent(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("{what} has {size} elements, above the limit of {limit}")]
    GuardExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },
}
