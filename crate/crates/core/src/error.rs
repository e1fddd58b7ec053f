use thiserror::Error;

use crate::scheme::BiDegree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{name} must be at least 1 (got {value})")]
    ZeroWidth { name: &'static str, value: u32 },

    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("prime {p} is unusable: need {needed} < p < 65536 for distinct line scalars")]
    FieldTooSmall { p: u32, needed: u32 },

    #[error("box {bound} is too small: nonzero {what} at {at}")]
    BoxTooSmall {
        bound: BiDegree,
        what: &'static str,
        at: BiDegree,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("module of generators is not free over k[x0,x1] at {0}; higher syzygies present")]
    NotFree(BiDegree),

    #[error("Euler characteristic disagrees with the Hilbert function at {0}")]
    EulerMismatch(BiDegree),
}

pub type Result<T> = std::result::Result<T, Error>;
