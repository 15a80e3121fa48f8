//! Hyperplane projections, projection bodies, and minimization of even
//! functionals over the unit sphere.
//!
//! Shadow volumes are computed two independent ways: the Cauchy formula
//! `(1/2) sum_i a_i |<xi, u_i>|` on the discrete surface measure, and the
//! determinant volume of the explicitly projected zonotope. The two must
//! agree to `tol::REL_EXACT` for every direction.

use serde::{Deserialize, Serialize};

use crate::bodies::{Body, Direction, FacetMeasure, Zonotope, DEFAULT_GENERATOR_CAP};
use crate::calculus;
use crate::error::{Error, Result};
use crate::exec::{self, KahanSum};
use crate::inequalities::unit_ball_volume;
use crate::linalg;
use crate::sampling;
use crate::tol;

/// Orthonormal basis of the hyperplane perpendicular to `xi`.
///
/// Uses the Householder reflection that swaps `xi` with a signed coordinate
/// axis, with the axis and sign pinned by the largest-coordinate rule, so
/// the frame is reproducible bit-for-bit for a given direction. Together
/// with `xi` the returned n-1 vectors form an orthonormal frame with
/// pairwise dots below 1e-12.
pub fn orthobasis(xi: &Direction) -> Vec<Vec<f64>> {
    let n = xi.dim();
    let coords = xi.coords();
    let pivot = linalg::argmax_abs(coords);
    let sign = if coords[pivot] >= 0.0 { 1.0 } else { -1.0 };

    // w = xi + sign * e_pivot never cancels: |w|^2 = 2 (1 + |xi_pivot|).
    let mut w: Vec<f64> = coords.to_vec();
    w[pivot] += sign;
    let wn2 = 2.0 * (1.0 + coords[pivot] * sign);

    let mut basis = Vec::with_capacity(n - 1);
    for i in 0..n {
        if i == pivot {
            continue;
        }
        let mut b: Vec<f64> = w.iter().map(|&wj| -2.0 * w[i] * wj / wn2).collect();
        b[i] += 1.0;
        basis.push(b);
    }
    basis
}

/// Orthogonal projection of a zonotope to `xi` perp, expressed in the
/// `orthobasis(xi)` coordinates: generator `v_j` maps to
/// `(<v_j, b_1>, ..., <v_j, b_(n-1)>)`. Generators that project to nothing
/// (parallel to `xi`) are dropped.
pub fn project_zonotope(z: &Zonotope, xi: &Direction) -> Result<Zonotope> {
    if xi.dim() != z.dim() {
        return Err(Error::dim(z.dim(), xi.dim()));
    }
    let basis = orthobasis(xi);
    let mut generators = Vec::with_capacity(z.generator_count());
    for v in z.generators() {
        let w: Vec<f64> = basis.iter().map(|b| linalg::dot(v, b)).collect();
        let original = linalg::norm(v);
        if linalg::norm(&w) > tol::PROJECTED_GENERATOR_REL * original {
            generators.push(w);
        }
    }
    Zonotope::with_cap(z.dim() - 1, generators, z.cap())
}

/// Cauchy projection formula on a discrete measure:
/// `|K | xi^perp| = (1/2) sum_i a_i |<xi, u_i>|`.
///
/// Panics if the measure and direction dimensions disagree; the body-level
/// [`projection_volume`] reports that case as an error.
pub fn cauchy_projection_volume(measure: &FacetMeasure, xi: &Direction) -> f64 {
    assert_eq!(measure.dim(), xi.dim(), "measure/direction dimension mismatch");
    let mut acc = KahanSum::new();
    for atom in measure.atoms() {
        acc.add(atom.area * xi.dot(atom.normal.coords()).abs());
    }
    0.5 * acc.value()
}

/// Volume of the shadow of a body on the hyperplane perpendicular to `xi`.
pub fn projection_volume(body: &Body, xi: &Direction) -> Result<f64> {
    if xi.dim() != body.dim() {
        return Err(Error::dim(body.dim(), xi.dim()));
    }
    match body {
        Body::Ball(b) => {
            Ok(b.radius().powi(b.dim() as i32 - 1) * unit_ball_volume(b.dim() - 1)?)
        }
        _ => Ok(cauchy_projection_volume(&body.surface_measure()?, xi)),
    }
}

/// The projection body: the convex body whose support at `xi` equals the
/// shadow volume of the input at `xi`.
///
/// For a body with canonical measure atoms `(±u_k, a_k)` this is the
/// zonotope with generators `a_k u_k`, whose support
/// `sum_k a_k |<xi, u_k>|` reproduces the Cauchy formula exactly. The ball
/// maps to the ball of radius `r^(n-1) |B^(n-1)|`.
pub fn projection_body(body: &Body) -> Result<Body> {
    match body {
        Body::Ball(b) => {
            let radius = b.radius().powi(b.dim() as i32 - 1) * unit_ball_volume(b.dim() - 1)?;
            Ok(Body::Ball(crate::bodies::Ball::new(b.dim(), radius)?))
        }
        _ => {
            let measure = body.surface_measure()?;
            let generators: Vec<Vec<f64>> = measure
                .canonical_pairs()
                .map(|atom| atom.normal.coords().iter().map(|c| c * atom.area).collect())
                .collect();
            // One generator per antipodal pair; dense measures may carry
            // more pairs than the enumeration cap allows, which is fine for
            // support queries.
            let cap = generators.len().max(DEFAULT_GENERATOR_CAP);
            Ok(Body::Zonotope(Zonotope::with_cap(body.dim(), generators, cap)?))
        }
    }
}

/// Surface area (perimeter when n = 3) of the shadow of a zonotope.
/// Undefined for n = 2, where the shadow is a segment.
pub fn projection_surface_area(z: &Zonotope, xi: &Direction) -> Result<f64> {
    if z.dim() < 3 {
        return Err(Error::UnsupportedDimension(z.dim(), 3));
    }
    calculus::surface_area(&Body::Zonotope(project_zonotope(z, xi)?))
}

// ---------------------------------------------------------------------------
// Sphere minimization
// ---------------------------------------------------------------------------

/// Configuration for [`min_over_sphere`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SphereMinConfig {
    /// Size of the deterministic low-discrepancy coarse sample.
    pub coarse_samples: usize,
    /// How many of the best coarse candidates get local refinement.
    pub restarts: usize,
    /// Refinement stops when the tangent step shrinks below this.
    pub shrink_tol: f64,
}

impl SphereMinConfig {
    /// Defaults: 2^13 coarse points for n <= 4, doubled per extra dimension
    /// (capped at 2^17), 8 refined candidates, 1e-7 step floor.
    pub fn for_dim(dim: usize) -> Self {
        let base: usize = 1 << 13;
        let coarse_samples = if dim <= 4 { base } else { (base << (dim - 4).min(4)).min(1 << 17) };
        Self { coarse_samples, restarts: 8, shrink_tol: tol::SHRINK_TOL }
    }

    fn validate(&self) -> Result<()> {
        if self.coarse_samples == 0 || self.restarts == 0 {
            return Err(Error::InvalidParameter(
                "sphere minimizer needs positive sample and restart counts".into(),
            ));
        }
        if !(self.shrink_tol.is_finite() && self.shrink_tol > 0.0) {
            return Err(Error::InvalidParameter("shrink_tol must be positive".into()));
        }
        Ok(())
    }
}

/// Outcome of a sphere minimization.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SphereMinResult {
    pub argmin: Direction,
    pub value: f64,
    pub evaluations: usize,
    pub refinement_radius: f64,
}

/// Heuristic global minimizer for even continuous functions on the sphere.
///
/// A deterministic low-discrepancy coarse scan (plus all signed coordinate
/// axes) seeds multi-start derivative-free refinement: tangent steps with
/// projection back to the sphere and geometric step shrinking. The
/// objectives minimized here are piecewise smooth with minima that often sit
/// on nonsmooth rays, which is why no gradients are used. The result is
/// deterministic regardless of the parallel schedule: coarse candidates are
/// ranked by value with index as tie-break.
pub fn min_over_sphere<F>(f: F, dim: usize, cfg: &SphereMinConfig) -> Result<SphereMinResult>
where
    F: Fn(&Direction) -> f64 + Sync,
{
    if dim < 2 {
        return Err(Error::UnsupportedDimension(dim, 2));
    }
    cfg.validate()?;

    let mut candidates = sampling::low_discrepancy_directions(dim, cfg.coarse_samples);
    for k in 0..dim {
        let axis = Direction::axis(dim, k);
        candidates.push(axis.antipode());
        candidates.push(axis);
    }

    let values = exec::map_indexed(candidates.len(), |i| f(&candidates[i]));
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFiniteEvaluation);
    }
    let mut evaluations = values.len();

    let mut order: Vec<usize> = (0..candidates.len()).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap().then(a.cmp(&b)));

    let mut best: Option<(f64, Direction, f64)> = None;
    for &idx in order.iter().take(cfg.restarts) {
        let (value, argmin, radius, used) =
            refine(&f, candidates[idx].clone(), values[idx], cfg.shrink_tol)?;
        evaluations += used;
        let better = match &best {
            None => true,
            Some((bv, _, _)) => value < *bv,
        };
        if better {
            best = Some((value, argmin, radius));
        }
    }

    let (value, argmin, refinement_radius) = best.expect("restarts >= 1");
    Ok(SphereMinResult { argmin, value, evaluations, refinement_radius })
}

const REFINE_INITIAL_STEP: f64 = 0.2;
const REFINE_MAX_EVALS: usize = 40_000;

fn refine<F>(
    f: &F,
    start: Direction,
    start_value: f64,
    shrink_tol: f64,
) -> Result<(f64, Direction, f64, usize)>
where
    F: Fn(&Direction) -> f64 + Sync,
{
    let mut x = start;
    let mut fx = start_value;
    let mut step = REFINE_INITIAL_STEP;
    let mut evals = 0;

    while step >= shrink_tol && evals < REFINE_MAX_EVALS {
        let basis = orthobasis(&x);
        let mut improved: Option<(f64, Direction)> = None;
        for b in &basis {
            for sign in [1.0, -1.0] {
                let moved: Vec<f64> = x
                    .coords()
                    .iter()
                    .zip(b)
                    .map(|(xi, bi)| xi + sign * step * bi)
                    .collect();
                let candidate = Direction::normalized(moved)
                    .map_err(|_| Error::NonFiniteEvaluation)?;
                let fc = f(&candidate);
                evals += 1;
                if !fc.is_finite() {
                    return Err(Error::NonFiniteEvaluation);
                }
                if fc < improved.as_ref().map_or(fx, |(v, _)| *v) {
                    improved = Some((fc, candidate));
                }
            }
        }
        match improved {
            Some((fv, xv)) => {
                fx = fv;
                x = xv;
            }
            None => step *= 0.5,
        }
    }
    Ok((fx, x, step, evals))
}
