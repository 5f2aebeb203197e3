//! Desk-scale numerical laboratory for noncommutative Calderon-Zygmund
//! analysis.
//!
//! The crate works with matrix-valued functions on dyadic grids over
//! `[0,1)^d` (or affine windows thereof) and provides:
//!
//! * spectral norms, distribution functions and weak-L1 quasi-norms for
//!   operator-valued functions ([`space`]),
//! * atomic martingale filtrations, conditional expectations and
//!   regularity/growth verifiers ([`filtration`]),
//! * the Cuculescu projection sequence at a fixed height and its defining
//!   properties ([`cuculescu`]),
//! * the regular and nonregular Calderon-Zygmund decompositions, the
//!   vanishing identities and the dilated stopping projection zeta ([`cz`]),
//! * discretized singular integral operators, kernel-regularity functionals
//!   and weak-(1,1) sweep harnesses ([`kernels`], [`hormander`], [`czop`]),
//! * finite group models with orthogonal cocycles, Herz-Schur and Fourier
//!   multipliers, and the transference machinery between them ([`group`],
//!   [`symbols`], [`schur`], [`transference`]),
//! * a seeded suite runner with JSON/CSV/SVG reporting ([`suite`]).
//!
//! Per-cell work (eigendecompositions, quadrature, trials) is data-parallel
//! via rayon when the `parallel` feature is enabled (default); aggregation
//! order is always fixed by cell index so results do not depend on the
//! scheduler.

pub mod config;
pub mod cuculescu;
pub mod cz;
pub mod czop;
pub mod exec;
pub mod filtration;
pub mod generate;
pub mod group;
pub mod hormander;
pub mod kernels;
pub mod linalg;
pub mod quad;
pub mod report;
pub mod schur;
pub mod serialize;
pub mod space;
pub mod suite;
pub mod svg;
pub mod symbols;
pub mod tol;
pub mod transference;

pub use space::{GridDomain, OpValuedFunction, ProjectionMatrix, SpectralDistribution};

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("cell {cell}: matrix is not Hermitian (defect {defect:.3e})")]
    NotHermitian { cell: usize, defect: f64 },
    #[error("cell {cell}: matrix is not positive semidefinite (min eigenvalue {min_eig:.3e})")]
    NotPsd { cell: usize, min_eig: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("atom {atom} is missing ball geometry")]
    MissingGeometry { atom: String },
    #[error("filtration construction failed at atom {atom}: {reason}")]
    ConstructionFailure { atom: String, reason: String },
    #[error("quadrature failed: {0}")]
    Quadrature(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
