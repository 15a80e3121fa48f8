//! Central tolerance policy.
//!
//! Exact (finite-sum) paths are compared at 1e-9 relative, closed forms at
//! 1e-12 relative, and Monte Carlo estimates at three standard errors.
//! Everything below is derived from that policy; checks and tests must use
//! these constants instead of local magic numbers.

/// Relative tolerance for identities between two exact finite-sum paths
/// (determinant vs. measure volume, Cauchy vs. projected determinant).
pub const REL_EXACT: f64 = 1e-9;

/// Relative tolerance for closed-form evaluations (balls, scaling laws).
pub const REL_CLOSED_FORM: f64 = 1e-12;

/// Unit-norm slack accepted when validating a [`crate::bodies::Direction`].
pub const UNIT_NORM: f64 = 1e-12;

/// Two unit normals are the same facet direction when their dot product
/// exceeds this value.
pub const DIRECTION_MATCH_DOT: f64 = 1.0 - 1e-10;

/// Facet volumes below this (in the body's natural units) are treated as
/// numerically degenerate and dropped.
pub const MIN_FACET_VOLUME: f64 = 1e-12;

/// Minkowski balance: |sum a_i u_i| <= BALANCE_REL * sum a_i.
pub const BALANCE_REL: f64 = 1e-9;

/// Facet-body offsets must match the support of the vertex set to this
/// relative tolerance.
pub const SUPPORT_CONSISTENCY_REL: f64 = 1e-9;

/// Singular values below RANK_REL * sigma_max count as zero for rank checks.
pub const RANK_REL: f64 = 1e-10;

/// Generators whose projection is shorter than this fraction of their length
/// are dropped when projecting a zonotope to a hyperplane.
pub const PROJECTED_GENERATOR_REL: f64 = 1e-12;

/// Absolute slack for halfspace membership tests.
pub const MEMBERSHIP_ABS: f64 = 1e-12;

/// Pairwise-dot bound certifying an orthonormal frame.
pub const FRAME_ORTHO: f64 = 1e-12;

/// Default step floor for sphere-minimizer refinement.
pub const SHRINK_TOL: f64 = 1e-7;

/// Verdict tolerance when every quantity in a check comes from closed forms.
pub const CHECK_TOL_CLOSED_FORM: f64 = 1e-7;

/// Verdict tolerance when a heuristic sphere minimum enters one side.
pub const CHECK_TOL_HEURISTIC: f64 = 1e-5;

/// Relative gap below which the ball equality case must close.
pub const BALL_EQUALITY_GAP: f64 = 1e-12;
