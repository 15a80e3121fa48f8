//! Exact and Monte Carlo calculus for origin-symmetric convex bodies.
//!
//! The crate computes support functions, discrete surface area measures,
//! volumes, mixed volumes, and hyperplane shadows for three body families
//! (zonotopes, balls, and facet-described polytopes), and uses them to
//! verify a suite of sharp projection inequalities: shadow-wise separation,
//! volume difference, the hyperplane bound, and the surface-area hyperplane
//! bound with its equality case at the Euclidean ball.
//!
//! Design rules observed throughout:
//!
//! * every nontrivial quantity has two independent computation routes, and
//!   the test suites compare them at stated tolerances;
//! * all Monte Carlo paths are counter-addressed by `(seed, index)` and all
//!   parallel reductions consume results in index order, so outputs are
//!   reproducible bit-for-bit regardless of thread count — with the
//!   `parallel` feature (default) the inner loops run on rayon, without it
//!   they run sequentially, with identical results;
//! * tolerances live in [`tol`] and nowhere else.

pub mod bodies;
pub mod calculus;
pub mod error;
pub mod exec;
pub mod inequalities;
mod linalg;
pub mod oracle;
pub mod sampling;
pub mod shadows;
pub mod tol;

pub use error::{Error, Result};
