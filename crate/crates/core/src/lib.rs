//! Finite digital images and the maps between them.
//!
//! [`topology`] holds points, adjacencies and connectivity; [`maps`] decides
//! continuity, shyness and related properties of functions between images;
//! [`constructions`] builds intervals, cycles, trees, products and wedges;
//! [`verification`] enumerates maps exhaustively and audits the known
//! theorems about shy maps against brute-force oracles.

pub mod constructions;
pub mod maps;
pub mod topology;
pub mod verification;

pub use maps::{DigitalFunction, MapClassification, MultiFunction};
pub use topology::{Adjacency, DigitalImage, Point, PointSet};
