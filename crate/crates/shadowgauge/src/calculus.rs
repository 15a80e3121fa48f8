//! Exact volume, surface area, and mixed-volume computations.
//!
//! Every quantity here has two independent routes somewhere in the crate:
//! zonotope volume via subset determinants is cross-checked against the
//! measure-based pyramid formula, surface area against the Monte Carlo
//! Cauchy estimator, and projections against projected-generator
//! determinants. The suites treat any disagreement beyond `tol::REL_EXACT`
//! as a defect.

use serde::{Deserialize, Serialize};

use crate::bodies::{index_subsets, Body, Direction, FacetMeasure, Zonotope};
use crate::error::{Error, Result};
use crate::exec::{self, KahanSum};
use crate::inequalities::unit_ball_volume;
use crate::linalg;
use crate::sampling;
use crate::shadows;

/// How a volume value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VolumeMethod {
    Determinant,
    Pyramid,
    ClosedForm,
    MonteCarlo,
}

/// A volume together with its provenance; `stderr` is present exactly for
/// Monte Carlo values.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VolumeResult {
    pub value: f64,
    pub method: VolumeMethod,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stderr: Option<f64>,
}

/// A Monte Carlo estimate with its standard error.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct McEstimate {
    pub estimate: f64,
    pub stderr: f64,
}

/// Exact volume of a body.
///
/// Balls use the closed form `r^n pi^(n/2) / Gamma(n/2 + 1)`; zonotopes the
/// determinant formula `2^n sum_(|J|=n) |det v_J|`; facet bodies the pyramid
/// formula `(1/n) sum h_i a_i`.
pub fn volume(body: &Body) -> Result<VolumeResult> {
    match body {
        Body::Ball(b) => Ok(VolumeResult {
            value: unit_ball_volume(b.dim())? * b.radius().powi(b.dim() as i32),
            method: VolumeMethod::ClosedForm,
            stderr: None,
        }),
        Body::Zonotope(z) => Ok(VolumeResult {
            value: zonotope_volume(z)?,
            method: VolumeMethod::Determinant,
            stderr: None,
        }),
        Body::Facet(f) => Ok(VolumeResult {
            value: f.pyramid_volume(),
            method: VolumeMethod::Pyramid,
            stderr: None,
        }),
    }
}

fn zonotope_volume(z: &Zonotope) -> Result<f64> {
    if !z.is_full_rank() {
        return Err(Error::Degenerate(format!(
            "zonotope generators span rank {} < {}; volume is zero",
            z.rank(),
            z.dim()
        )));
    }
    let n = z.dim();
    let subsets = index_subsets(z.generator_count(), n);
    let dets = exec::map_indexed(subsets.len(), |s| {
        let cols: Vec<&[f64]> = subsets[s].iter().map(|&j| z.generators()[j].as_slice()).collect();
        linalg::det_of_columns(&cols).abs()
    });
    Ok((2.0f64).powi(n as i32) * exec::kahan_sum(&dets))
}

/// `(1/n) sum_i support_at(u_i) a_i` over the atoms of a measure — the exact
/// discrete volume form. For a zonotope's own measure and support this must
/// agree with the determinant route to `tol::REL_EXACT`.
pub fn volume_from_measure(
    measure: &FacetMeasure,
    support_at: impl Fn(&Direction) -> f64,
) -> f64 {
    let mut acc = KahanSum::new();
    for atom in measure.atoms() {
        acc.add(support_at(&atom.normal) * atom.area);
    }
    acc.value() / measure.dim() as f64
}

/// Surface area: total measure mass for polytopes, `n |B^n| r^(n-1)` for
/// balls.
pub fn surface_area(body: &Body) -> Result<f64> {
    match body {
        Body::Ball(b) => Ok(b.dim() as f64
            * unit_ball_volume(b.dim())?
            * b.radius().powi(b.dim() as i32 - 1)),
        _ => Ok(body.surface_measure()?.total_mass()),
    }
}

/// Monte Carlo surface area via the Cauchy projection formula:
/// `S = (1/|B^(n-1)|) * integral over the sphere of the shadow volume`,
/// estimated from uniform random directions. Unbiased; the returned stderr
/// is the sample standard error of the estimator.
pub fn cauchy_surface_area(body: &Body, n_samples: usize, seed: u64) -> Result<McEstimate> {
    if n_samples < 1000 {
        return Err(Error::InvalidParameter(format!(
            "cauchy_surface_area needs at least 1000 samples, got {n_samples}"
        )));
    }
    let n = body.dim();
    // Integral over the whole sphere = sphere area * sample mean, and the
    // sphere area is n |B^n|.
    let factor = n as f64 * unit_ball_volume(n)? / unit_ball_volume(n - 1)?;

    let shadow: Box<dyn Fn(&Direction) -> f64 + Sync> = match body {
        Body::Ball(b) => {
            let constant = b.radius().powi(n as i32 - 1) * unit_ball_volume(n - 1)?;
            Box::new(move |_| constant)
        }
        _ => {
            let measure = body.surface_measure()?;
            Box::new(move |xi| shadows::cauchy_projection_volume(&measure, xi))
        }
    };

    let values = exec::map_indexed(n_samples, |i| {
        let xi = Direction::from_unit_unchecked(sampling::unit_direction(n, seed, i as u64));
        shadow(&xi)
    });
    let mean = exec::kahan_sum(&values) / n_samples as f64;
    let mut var_acc = KahanSum::new();
    for v in &values {
        var_acc.add((v - mean) * (v - mean));
    }
    let variance = var_acc.value() / (n_samples as f64 - 1.0).max(1.0);
    Ok(McEstimate {
        estimate: factor * mean,
        stderr: factor * (variance / n_samples as f64).sqrt(),
    })
}

/// First mixed volume `V_1(K, L) = (1/n) sum_i h_L(u_i) a_i` over the surface
/// measure of `K`. `K` must carry a discrete measure (zonotope or facet
/// body); `L` may be any body.
pub fn mixed_volume_v1(k: &Body, l: &Body) -> Result<f64> {
    if k.dim() != l.dim() {
        return Err(Error::dim(k.dim(), l.dim()));
    }
    if matches!(k, Body::Ball(_)) {
        return Err(Error::UnsupportedMeasure(
            "mixed_volume_v1 needs a discrete measure for K; the ball is not supported".into(),
        ));
    }
    let measure = k.surface_measure()?;
    let mut acc = KahanSum::new();
    for atom in measure.atoms() {
        acc.add(l.support(atom.normal.coords())? * atom.area);
    }
    Ok(acc.value() / k.dim() as f64)
}

/// `V_1(K, L) - |K|^((n-1)/n) |L|^(1/n)`; nonnegative up to 1e-9 relative by
/// the first Minkowski inequality, zero exactly for homothets.
pub fn minkowski_first_gap(k: &Body, l: &Body) -> Result<f64> {
    let n = k.dim() as f64;
    let v1 = mixed_volume_v1(k, l)?;
    let vol_k = volume(k)?.value;
    let vol_l = volume(l)?.value;
    Ok(v1 - vol_k.powf((n - 1.0) / n) * vol_l.powf(1.0 / n))
}

/// Minkowski sum of two zonotopes: generator concatenation. The support
/// function of the sum is exactly the sum of the support functions.
pub fn zonotope_sum(z1: &Zonotope, z2: &Zonotope) -> Result<Zonotope> {
    if z1.dim() != z2.dim() {
        return Err(Error::dim(z1.dim(), z2.dim()));
    }
    let cap = z1.cap().max(z2.cap());
    let mut generators = z1.generators().to_vec();
    generators.extend_from_slice(z2.generators());
    Zonotope::with_cap(z1.dim(), generators, cap)
}

/// Exact area of the outer parallel body `P + eps B` of a planar zonotope:
/// `area + perimeter * eps + pi * eps^2` (the two-dimensional Steiner
/// polynomial). The difference quotient `(steiner_2d(P, eps) - area)/eps`
/// therefore converges to the perimeter with remainder exactly `pi * eps`,
/// which is the surface-area limit realized at the dimension where
/// projections of three-dimensional bodies live.
pub fn steiner_2d(p: &Zonotope, eps: f64) -> Result<f64> {
    if p.dim() != 2 {
        return Err(Error::dim(2, p.dim()));
    }
    if !(eps.is_finite() && eps >= 0.0) {
        return Err(Error::InvalidParameter(format!("eps {eps} must be a nonnegative real")));
    }
    let body = Body::Zonotope(p.clone());
    let area = volume(&body)?.value;
    let perimeter = surface_area(&body)?;
    Ok(area + perimeter * eps + std::f64::consts::PI * eps * eps)
}
