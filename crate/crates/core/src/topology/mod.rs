//! Points, adjacency relations, digital images and connectivity.

mod adjacency;
mod image;
mod point;

pub use adjacency::{cu_adjacent, Adjacency, EdgeSet};
pub use image::{ConnectedSubsets, DigitalImage};
pub use point::{Point, PointSet};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ImageError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("c_{u} adjacency is undefined in dimension {dim}")]
    CuOutOfRange { u: usize, dim: usize },
    #[error("normal product dimensions {left_dim} + {right_dim} do not add up to {dim}")]
    ProductDimensions { left_dim: usize, right_dim: usize, dim: usize },
    #[error("edge joins {0} to itself")]
    SelfLoop(Point),
    #[error("edge endpoint {0} is not a point of the image")]
    EdgeOutsideImage(Point),
    #[error("duplicate point {0}")]
    DuplicatePoint(Point),
    #[error("point {0} is not in the image")]
    NotInImage(Point),
    #[error("images must have dimension at least 1")]
    ZeroDimension,
}
