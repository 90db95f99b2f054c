//! Exhaustive map enumeration and theorem audits.
//!
//! Every audit walks all maps of some kind between small images, checks a
//! claimed property on each, and returns a [`VerificationReport`]. The
//! reports are deterministic: counterexamples appear in enumeration order
//! no matter how the work was split across threads.

mod articulation;
pub mod corpus;
mod enumerate;
mod report;
mod suites;

pub use articulation::find_articulation_points;
pub use enumerate::{
    candidate_count, enumerate_maps, EnumerationSpec, MapEnumerator, MapFilter, DEFAULT_ENUMERATION_BOUND,
};
pub use report::{Counterexample, MapRecord, VerificationReport};
pub use suites::*;

use thiserror::Error;

use crate::constructions::ConstructionError;
use crate::maps::MapError;
use crate::topology::ImageError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{candidates} candidate maps exceed the enumeration bound {bound}")]
    BoundExceeded { candidates: u128, bound: u128 },
    #[error("image is not connected")]
    Disconnected,
    #[error("{0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Image(#[from] ImageError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}
