//! Predicted Betti tables.

pub mod predict;
pub mod table;

pub use predict::*;
pub use table::{euler_hilbert, BettiTable, DegreeSet};
