//! Exact linear algebra over `Z/p` that recomputes what the predictor claims.

pub mod field;
pub mod hilbert;
pub mod ideal;
pub mod lines;
pub mod matrix;
pub mod poly;
pub mod powers;
pub mod resolution;

pub use field::{FieldConfig, PrimeField};
pub use hilbert::{hilbert_dim_symbolic, hilbert_dim_with, HilbertRoute};
pub use ideal::{power_piece, DegreePiece, GeneralIdeal, IdealSlices, ProductIdeal, SymbolicIdeal};
pub use lines::{realize, GeneratorFamily, LineArrangement};
pub use matrix::{Echelon, Matrix};
pub use poly::BiPoly;
pub use powers::{
    check_power_equality, check_power_equality_grid, check_power_equality_with,
    check_splitting_identity, split_factor, PowerCount, PowerReport, PowerRow, SplittingReport,
    SplittingRow,
};
pub use resolution::{min_generators, minimal_generators, syzygy_betti};
