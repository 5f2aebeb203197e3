//! Centralized numerical tolerances.
//!
//! Every threshold used by the verifiers lives here so that reports can
//! reference a single source of truth. Scales are relative unless the name
//! says otherwise.

/// Relative Hermiticity tolerance: inputs whose anti-Hermitian part exceeds
/// this (relative to `1 + ||A||`) are rejected; below it they are
/// symmetrized and the defect is logged.
pub const TAU_HERM: f64 = 1e-8;

/// Spectral-cutoff tie width: eigenvalues within `TAU_SPEC * (1 + ||A||)` of
/// a cutoff are assigned to the `<=` side. Keeping boundary eigenvalues
/// under the projection is what makes `q_j E_j(f) q_j <= lambda q_j`
/// non-strict.
pub const TAU_SPEC: f64 = 1e-10;

/// Idempotency tolerance for projection matrices.
pub const TAU_PROJ: f64 = 1e-10;

/// Reconstruction tolerance for the CZ decompositions, relative to
/// `||f||_1`.
pub const TAU_REC: f64 = 1e-10;

/// PSD clipping floor: input cells with min eigenvalue in
/// `[-TAU_PSD_CLIP, 0)` are clipped to PSD with the defect logged; anything
/// more negative is an error.
pub const TAU_PSD_CLIP: f64 = 1e-10;

/// Generic identity tolerance for algebraic checks that should hold to
/// rounding (vanishing identities, mean-zero defects, commutators).
pub const TAU_IDENTITY: f64 = 1e-10;

/// Tolerance for the exact group-side identities (intertwining, singular
/// value invariance), which involve only phases and products.
pub const TAU_EXACT: f64 = 1e-12;

/// Rank cutoff for the lattice join of projections, relative to the largest
/// singular value of the stacked bases.
pub const TAU_RANK: f64 = 1e-8;

/// Default relative tolerance for adaptive quadrature of corona integrals.
pub const QUAD_REL_TOL: f64 = 1e-6;

/// Slack accepted by the polynomial-growth verifier.
pub const TAU_GROWTH: f64 = 1e-9;

/// Slack factor for empirical-consistency comparisons between two measured
/// suprema (transference checks).
pub const TAU_EMP: f64 = 1e-9;
