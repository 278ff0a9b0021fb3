//! Enumeration and classification of closed knight's paths.
//!
//! A closed knight's path of length `k` is a cycle of `k` distinct board
//! cells, each one knight move from the next. This crate constructs every
//! such cycle up to translation, rotation and reflection, counts those that
//! do not cross themselves, groups inequivalent cycles that visit the same
//! cells, and reads, writes and renders cycle listings.

pub mod board;
pub mod cycle;
pub mod enumeration;
pub mod geometry;

pub use board::{BoardSpec, CellIndex, Coord, DihedralElem};
pub use cycle::{
    are_equivalent, canonical_cell_set, canonicalize, is_minimal, validate_cycle, CanonicalKey,
    CellSetKey, CycleError, CycleSeq,
};
pub use enumeration::{
    enumerate, enumerate_dfs, enumerate_mitm, Algorithm, CycleSink, EnumerationError,
    EnumerationOptions, EnumerationSummary,
};
pub use geometry::is_simple;
pub mod listing;
pub mod render;
pub mod twins;
pub mod verify;
