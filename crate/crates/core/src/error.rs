//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by exact-arithmetic operations.
///
/// Mathematical *failures* (an identity that does not hold, spectra that
/// differ) are reported as data, never as errors; errors indicate misuse of
/// an operation or an input outside its contract.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two values live on lattices of different rank.
    RankMismatch { expected: usize, found: usize },
    /// The averaging group does not contain the Weyl group of the root system.
    GroupTooSmall { weyl: String, averaging: String },
    /// A weight that must be sorted non-increasingly is not.
    NotSorted,
    /// A weight coordinate that must be non-negative is negative.
    NegativeCoordinate,
    /// A weight is not dominant for the group acting on it.
    NotDominant,
    /// A formal character is not invariant under the required Weyl group.
    NotInvariant,
    /// Encoding requires an integral weight but a half-integral one was found.
    NotIntegral,
    /// Decomposition found a negative or fractional multiplicity, meaning the
    /// input is not a genuine character under the current conventions.
    NotCharacter(String),
    /// A matrix operation needed a square matrix.
    NotSquare,
    /// The antisymmetry constraint on a factorization weight is violated.
    ConstraintViolated,
    /// A value belongs to a different group than required.
    GroupMismatch,
    /// Two spectra with different cutoffs cannot be compared.
    CutoffMismatch,
    /// A parameter that must be positive is not.
    NotPositive,
    /// A product-metric spectrum was requested for a non-semisimple group.
    NotSemisimple,
    /// An embedding matrix has the wrong shape or does not kill the center
    /// relations of the target group.
    BadEmbedding(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RankMismatch { expected, found } => {
                write!(f, "rank mismatch: expected {expected}, found {found}")
            }
            Error::GroupTooSmall { weyl, averaging } => {
                write!(
                    f,
                    "averaging group {averaging} does not contain Weyl group {weyl}"
                )
            }
            Error::NotSorted => write!(f, "weight coordinates must be non-increasing"),
            Error::NegativeCoordinate => write!(f, "weight coordinate must be non-negative"),
            Error::NotDominant => write!(f, "weight is not dominant"),
            Error::NotInvariant => write!(f, "character is not invariant under the Weyl group"),
            Error::NotIntegral => write!(f, "weight must be integral"),
            Error::NotCharacter(why) => {
                write!(f, "not a character under current conventions: {why}")
            }
            Error::NotSquare => write!(f, "matrix must be square"),
            Error::ConstraintViolated => write!(f, "antisymmetry constraint violated"),
            Error::GroupMismatch => write!(f, "value belongs to a different group"),
            Error::CutoffMismatch => write!(f, "spectra have different cutoffs"),
            Error::NotPositive => write!(f, "parameter must be positive"),
            Error::NotSemisimple => {
                write!(f, "product-metric spectra require a semisimple group")
            }
            Error::BadEmbedding(why) => write!(f, "invalid embedding: {why}"),
        }
    }
}

impl core::error::Error for Error {}
