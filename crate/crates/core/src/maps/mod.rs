//! Functions between digital images and the decision procedures on them.
//!
//! The production checks use the cheap pointwise forms: continuity looks
//! at adjacent pairs, shyness at point preimages and preimages of
//! adjacent pairs. The [`oracle`] module holds the subset-quantified
//! definitions, which are exponential and only meant for small images.

mod function;
mod multi;
pub mod oracle;

pub use function::{compose, DigitalFunction, MapClassification, NotShy};
pub use multi::{MultiFunction, NotConnectivityPreserving};

use thiserror::Error;

use crate::topology::{ImageError, Point};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("no value assigned to domain point {0}")]
    MissingAssignment(Point),
    #[error("point {0} is assigned more than once")]
    DuplicateAssignment(Point),
    #[error("assignment for {0}, which is not a domain point")]
    UnknownDomainPoint(Point),
    #[error("value {0} is not a codomain point")]
    ValueOutsideCodomain(Point),
    #[error("empty value set at {0}")]
    EmptyValue(Point),
    #[error("expected {expected} values, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("codomain index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("codomain of the inner map differs from the domain of the outer map")]
    ImageMismatch,
    #[error("map is not surjective: {0} has an empty preimage")]
    NotSurjective(Point),
    #[error("map is not continuous: {0} and {1} are adjacent but their values are not")]
    NotContinuous(Point, Point),
    #[error("oracle limited to images of at most {limit} points, got {points}")]
    OracleLimit { points: usize, limit: usize },
    #[error(transparent)]
    Image(#[from] ImageError),
}
