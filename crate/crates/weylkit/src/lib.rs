//! weylkit — exact-arithmetic toolkit for Weyl modules of simple,
//! simply-connected algebraic groups in positive characteristic.
//!
//! The pipeline: fix a root system and a prime p, build the Chevalley
//! structure constants, act with divided powers of root vectors on a highest
//! weight vector over Q, extract the minimal admissible integer lattice, and
//! reduce mod p. The resulting module Δ(λ) carries per-weight bases, exact
//! generator action matrices, and contravariant Gram matrices, from which one
//! computes maximal vectors, Hom spaces between Weyl modules, submodules and
//! quotients, socle series, simple characters, decomposition numbers, linkage
//! blocks, and extension certificates.
//!
//! See the `examples/` directory for one runnable example per capability and
//! the `weylkit` binary for the command-line surface.

pub mod character;
pub mod chevalley;
pub mod linalg;
pub mod rootsys;

pub use character::Character;
pub use chevalley::ChevalleyConstants;
pub use linalg::{FpMatrix, IntMatrix};
pub use rootsys::{RootSystem, Weight};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unknown root system type {0}")]
    UnknownType(String),
    #[error(transparent)]
    Linalg(#[from] linalg::LinalgError),
    #[error("weight {0} is not a weight of the module")]
    WeightNotInModule(String),
    #[error("lattice integrality violated at weight {0} (internal straightening bug)")]
    LatticeIntegralityViolation(String),
    #[error("given spanning data is not a submodule")]
    NotASubmodule,
    #[error("maximal-vector space too large for exhaustive enumeration ({0} candidates)")]
    EnumerationTooLarge(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
