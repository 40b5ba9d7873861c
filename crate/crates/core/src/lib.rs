//! Exact classification engine for N=1 SVOA candidates whose even part is a
//! simply connected WZW algebra.
//!
//! The crate is organized around the pipeline it implements:
//!
//! - [`lie`] — root systems, weight lattices, centres, and small-rank
//!   canonicalization, all over exact rationals.
//! - [`weyl`] — finite-dimensional representation calculus: Weyl dimensions,
//!   Freudenthal weight multiplicities, tensor decomposition, restriction
//!   along declared embeddings, Dynkin indices.
//! - [`anyon`] — conformal dimensions of abelian anyons, the quadratic form
//!   on the centre, simple-current-extension admissibility, Sugawara central
//!   charges, and affine graded dimensions.
//! - [`classify`] — the enumeration pipeline: candidate algebras with a
//!   spin-3/2 abelian anyon, Ramond-sector constancy rejection, the summary
//!   table, and inclusion-chart verification.
//! - [`invariants`] — invariant-dimension counts for symmetric groups and
//!   sign-flip wreath groups acting on cubic tensors.
//! - [`tau`] — floating-point search for strong maxima of the cubic form on a
//!   constrained sphere and the superconformal tensor identity check.
//!
//! All conformal dimensions, central charges and inner products are exact
//! `Rational64` values; floating point appears only in [`tau`].

pub mod anyon;
pub mod classify;
pub mod invariants;
pub mod lie;
pub mod tau;
pub mod weyl;

use thiserror::Error;

/// Errors shared across the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for series {series}")]
    InvalidRank { series: lie::SimpleSeries, rank: usize },
    #[error("weights belong to different root systems")]
    MismatchedRootSystems,
    #[error("weight is not dominant: {0:?}")]
    NonDominant(Vec<i64>),
    #[error("weight is not integrable at level {level}: {labels:?}")]
    NonIntegrable { labels: Vec<i64>, level: u32 },
    #[error("dimension {dim} exceeds cap {cap}")]
    CapExceeded { dim: u128, cap: u128 },
    #[error("trivial centre element has no associated current weight")]
    TrivialCurrent,
    #[error("series {0} has trivial centre")]
    TrivialCenter(lie::SimpleSeries),
    #[error("current subgroup is not closed under fusion")]
    NotClosed,
    #[error("depth {depth} exceeds affine recursion cap {cap}")]
    DepthCap { depth: usize, cap: usize },
    #[error("embedding `{name}` is inconsistent: {reason}")]
    BadEmbedding { name: String, reason: String },
    #[error("restriction left a non-decomposable residue (wrong embedding?)")]
    BadResidue,
    #[error("candidate needs at least two simple factors")]
    NotSemisimple,
    #[error("supplied direction is not a constrained maximum (gradient residual {0})")]
    NotAMaximum(f64),
    #[error("data file error: {0}")]
    Data(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use lie::{CanonicalForm, CenterCharge, FactorName, RootSystem, SimpleSeries, Weight};
