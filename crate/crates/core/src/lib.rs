//! Minimal bigraded free resolutions of fat almost complete intersections
//! in P1 x P1.
//!
//! [`betti`] predicts the Betti table of a scheme from its block parameters.
//! [`kernel`] recomputes everything from scratch with exact linear algebra
//! over a prime field, and [`verify`] compares the two.

pub mod betti;
pub mod error;
pub mod kernel;
pub mod scheme;
pub mod verify;

pub use betti::{euler_hilbert, BettiTable, DegreeSet};
pub use error::{Error, Result};
pub use scheme::{
    alpha_tuple, build_grid, classify, gamma_tuple, normalize, reduce_step, AciParams, BaseCaseTag,
    BiDegree, FatPointGrid, NormalizationRecord,
};
pub use verify::{verify_instance, InstanceReport};
