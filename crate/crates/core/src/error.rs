use thiserror::Error;

use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("ground size {0} is outside 1..=16")]
    InvalidGroundSize(usize),
    #[error("mask {bits:#b} has bits beyond a ground set of size {n}")]
    SubsetOutOfRange { bits: u32, n: usize },
    #[error("point {point} is outside a ground set of size {n}")]
    PointOutOfRange { point: usize, n: usize },
    #[error("the open family does not contain the empty set")]
    MissingEmpty,
    #[error("the open family does not contain the whole ground set")]
    MissingFull,
    #[error("the open family is not closed under union: {0} ∪ {1} is missing")]
    NotClosedUnderUnion(Subset, Subset),
    #[error("the open family is not closed under intersection: {0} ∩ {1} is missing")]
    NotClosedUnderIntersection(Subset, Subset),
    #[error("ground size {n} exceeds the bound {max} for this operation")]
    GroundTooLarge { n: usize, max: usize },
}

impl SpaceError {
    /// Stable variant name used in diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            SpaceError::InvalidGroundSize(_) => "InvalidGroundSize",
            SpaceError::SubsetOutOfRange { .. } => "SubsetOutOfRange",
            SpaceError::PointOutOfRange { .. } => "PointOutOfRange",
            SpaceError::MissingEmpty => "MissingEmpty",
            SpaceError::MissingFull => "MissingFull",
            SpaceError::NotClosedUnderUnion(..) => "NotClosedUnderUnion",
            SpaceError::NotClosedUnderIntersection(..) => "NotClosedUnderIntersection",
            SpaceError::GroundTooLarge { .. } => "GroundTooLarge",
        }
    }
}

/// Raised by operations that require non-void arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ArgumentError {
    #[error("argument must be a non-void set")]
    EmptyArgument,
}
