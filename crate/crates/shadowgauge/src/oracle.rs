//! Independent brute-force verification paths: exact halfspace membership
//! and Monte Carlo volume by rejection sampling.
//!
//! Nothing here shares a formula with the determinant or measure routes, so
//! agreement between the two is evidence rather than tautology.

use serde::{Deserialize, Serialize};

use crate::bodies::{Direction, Zonotope};
use crate::calculus::McEstimate;
use crate::error::{Error, Result};
use crate::exec;
use crate::sampling;
use crate::tol;

/// One symmetric halfspace pair: `|<x, normal>| <= offset`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Halfspace {
    pub normal: Direction,
    pub offset: f64,
}

/// Complete facet description of an origin-symmetric polytope as an
/// intersection of symmetric slabs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HRep {
    dim: usize,
    halfspaces: Vec<Halfspace>,
}

impl HRep {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    /// Membership test with 1e-12 absolute slack.
    pub fn contains(&self, x: &[f64]) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::dim(self.dim, x.len()));
        }
        Ok(self
            .halfspaces
            .iter()
            .all(|h| h.normal.dot(x).abs() <= h.offset + tol::MEMBERSHIP_ABS))
    }
}

/// Facet H-representation of a zonotope: one slab per antipodal pair of
/// surface-measure normals, with offset equal to the support there. The
/// intersection of the slabs is exactly the zonotope.
pub fn zonotope_facets(z: &Zonotope) -> Result<HRep> {
    let measure = z.surface_measure()?;
    let mut halfspaces = Vec::new();
    for atom in measure.canonical_pairs() {
        let offset = z.support(atom.normal.coords())?;
        halfspaces.push(Halfspace { normal: atom.normal.clone(), offset });
    }
    if halfspaces.is_empty() {
        return Err(Error::Degenerate("no facets found".into()));
    }
    Ok(HRep { dim: z.dim(), halfspaces })
}

/// Monte Carlo volume by rejection sampling in the support bounding box
/// `prod_k [-h_Z(e_k), h_Z(e_k)]`. Unbiased, with binomial standard error;
/// deterministic for a fixed seed regardless of thread count.
pub fn mc_volume(z: &Zonotope, n_samples: usize, seed: u64) -> Result<McEstimate> {
    if n_samples < 10_000 {
        return Err(Error::InvalidParameter(format!(
            "mc_volume needs at least 10^4 samples, got {n_samples}"
        )));
    }
    let hrep = zonotope_facets(z)?;
    let mut half_widths = Vec::with_capacity(z.dim());
    for k in 0..z.dim() {
        let mut axis = vec![0.0; z.dim()];
        axis[k] = 1.0;
        half_widths.push(z.support(&axis)?);
    }
    let box_volume: f64 = half_widths.iter().map(|h| 2.0 * h).product();

    let hits: Vec<u64> = exec::map_indexed(n_samples, |i| {
        let x = sampling::box_point(&half_widths, seed, i as u64);
        u64::from(hrep.contains(&x).expect("sample dimension matches"))
    });
    let hit_count: u64 = hits.iter().sum();
    let p = hit_count as f64 / n_samples as f64;
    Ok(McEstimate {
        estimate: box_volume * p,
        stderr: box_volume * (p * (1.0 - p) / n_samples as f64).sqrt(),
    })
}
