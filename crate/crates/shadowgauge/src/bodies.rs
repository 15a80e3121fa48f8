//! Body representations and their exact boundary data.
//!
//! Three families of origin-symmetric convex bodies are supported:
//!
//! * [`Zonotope`] — a finite Minkowski sum of centered segments. These are
//!   exactly the polytopal projection bodies, and the main body class.
//! * [`Ball`] — the Euclidean ball, handled by closed forms throughout.
//! * [`FacetBody`] — an explicit symmetric vertex set together with its
//!   discrete surface area measure and per-facet support offsets; used for
//!   non-zonotopal test bodies such as the cross-polytope.
//!
//! The discrete surface area measure ([`FacetMeasure`]) assigns each facet
//! normal the (n-1)-volume of its facet; it is the polytopal stand-in for a
//! curvature function and the input to every projection formula here.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{self, KahanSum};
use crate::linalg;
use crate::tol;

/// Default bound on zonotope generator counts, keeping the C(m, n-1) and
/// C(m, n) subset enumerations tractable. Exceeding a cap is an explicit
/// error, never a silent truncation.
pub const DEFAULT_GENERATOR_CAP: usize = 20;

// ---------------------------------------------------------------------------
// Direction
// ---------------------------------------------------------------------------

/// A unit vector in n-space, n >= 2.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Direction {
    coords: Vec<f64>,
}

impl Direction {
    /// Wraps coordinates that must already be unit length within 1e-12.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::UnsupportedDimension(coords.len(), 2));
        }
        if coords.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter("direction has non-finite coordinates".into()));
        }
        let norm = linalg::norm(&coords);
        if (norm - 1.0).abs() > tol::UNIT_NORM {
            return Err(Error::InvalidParameter(format!(
                "direction norm {norm} deviates from 1 by more than {}",
                tol::UNIT_NORM
            )));
        }
        Ok(Self { coords })
    }

    /// Normalizes an arbitrary nonzero vector into a direction.
    pub fn normalized(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::UnsupportedDimension(coords.len(), 2));
        }
        let norm = linalg::norm(&coords);
        if !norm.is_finite() || norm < 1e-300 {
            return Err(Error::InvalidParameter("cannot normalize a zero direction".into()));
        }
        Ok(Self { coords: coords.iter().map(|x| x / norm).collect() })
    }

    /// The signed coordinate axis e_k.
    pub fn axis(dim: usize, k: usize) -> Self {
        assert!(dim >= 2 && k < dim);
        let mut coords = vec![0.0; dim];
        coords[k] = 1.0;
        Self { coords }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn dot(&self, other: &[f64]) -> f64 {
        linalg::dot(&self.coords, other)
    }

    pub fn antipode(&self) -> Self {
        Self { coords: self.coords.iter().map(|x| -x).collect() }
    }

    /// Flips sign so the largest-magnitude coordinate is positive.
    pub fn canonicalize_sign(&mut self) {
        linalg::canonicalize_sign(&mut self.coords);
    }

    /// True when this is the canonical representative of its antipodal pair.
    pub fn has_canonical_sign(&self) -> bool {
        linalg::has_canonical_sign(&self.coords)
    }

    pub(crate) fn from_unit_unchecked(coords: Vec<f64>) -> Self {
        debug_assert!((linalg::norm(&coords) - 1.0).abs() <= 1e-9);
        Self { coords }
    }
}

impl<'de> Deserialize<'de> for Direction {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let coords = Vec::<f64>::deserialize(deserializer)?;
        Direction::new(coords).map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// FacetMeasure
// ---------------------------------------------------------------------------

/// One atom of a discrete surface area measure: a facet normal together with
/// the (n-1)-volume of that facet.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MeasureAtom {
    pub normal: Direction,
    pub area: f64,
}

/// A discrete, origin-symmetric surface area measure.
///
/// Invariants (validated on construction): atoms come in antipodal pairs of
/// equal weight, no two atoms share a direction, and the measure is
/// Minkowski-balanced: `sum a_i u_i = 0` within 1e-9 of the total mass.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FacetMeasure {
    dim: usize,
    atoms: Vec<MeasureAtom>,
}

impl FacetMeasure {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn atoms(&self) -> &[MeasureAtom] {
        &self.atoms
    }

    /// Total mass, i.e. the surface area of the underlying body.
    pub fn total_mass(&self) -> f64 {
        let mut acc = KahanSum::new();
        for atom in &self.atoms {
            acc.add(atom.area);
        }
        acc.value()
    }

    /// One atom per antipodal pair, identified by canonical sign.
    pub fn canonical_pairs(&self) -> impl Iterator<Item = &MeasureAtom> {
        self.atoms.iter().filter(|a| a.normal.has_canonical_sign())
    }
}

/// Normalizes, merges, prunes, and validates a raw atom list into a
/// [`FacetMeasure`].
///
/// Normals are scaled to unit length; atoms whose directions agree (dot
/// above `1 - 1e-10`) are merged by summing their volumes; volumes below
/// 1e-12 are dropped; finally origin symmetry and Minkowski balance are
/// checked.
pub fn canonicalize_measure(dim: usize, raw_atoms: &[(Vec<f64>, f64)]) -> Result<FacetMeasure> {
    let tagged: Vec<(Vec<f64>, f64, ())> =
        raw_atoms.iter().map(|(u, a)| (u.clone(), *a, ())).collect();
    let atoms = canonicalize_atoms(dim, tagged, |_, _| Ok(()))?;
    build_measure(dim, atoms.into_iter().map(|(d, a, ())| (d, a)).collect())
}

/// Shared canonicalization over atoms with an arbitrary payload (facet
/// bodies carry a support offset along with each atom).
fn canonicalize_atoms<T>(
    dim: usize,
    raw: Vec<(Vec<f64>, f64, T)>,
    merge_payload: impl Fn(&T, &T) -> Result<T>,
) -> Result<Vec<(Direction, f64, T)>> {
    let mut atoms: Vec<(Direction, f64, T)> = Vec::with_capacity(raw.len());
    for (u, a, payload) in raw {
        if u.len() != dim {
            return Err(Error::dim(dim, u.len()));
        }
        if !a.is_finite() || a < 0.0 {
            return Err(Error::InconsistentMeasure(format!("atom volume {a} is not a nonnegative real")));
        }
        if a == 0.0 {
            continue;
        }
        let dir = Direction::normalized(u)
            .map_err(|_| Error::InconsistentMeasure("atom normal is zero or non-finite".into()))?;
        atoms.push((dir, a, payload));
    }

    // Lexicographic order groups coinciding directions adjacently and fixes
    // a deterministic output order.
    atoms.sort_by(|x, y| x.0.coords().partial_cmp(y.0.coords()).unwrap());

    // A merge group keeps the area-weighted direction sum; the merged atom
    // points along that average. Taking any single member instead would
    // leave an O(area * angle) hole in the Minkowski balance whenever two
    // close-but-distinct normals merge.
    struct Group<T> {
        weighted_dir: Vec<f64>,
        rep: Vec<f64>,
        area: f64,
        payload: T,
    }
    let mut groups: Vec<Group<T>> = Vec::with_capacity(atoms.len());
    for (dir, area, payload) in atoms {
        match groups.last_mut() {
            Some(g) if linalg::dot(&g.rep, dir.coords()) > tol::DIRECTION_MATCH_DOT => {
                for (w, &c) in g.weighted_dir.iter_mut().zip(dir.coords()) {
                    *w += area * c;
                }
                g.area += area;
                let n = linalg::norm(&g.weighted_dir);
                g.rep = g.weighted_dir.iter().map(|w| w / n).collect();
                g.payload = merge_payload(&g.payload, &payload)?;
            }
            _ => groups.push(Group {
                weighted_dir: dir.coords().iter().map(|c| c * area).collect(),
                rep: dir.coords().to_vec(),
                area,
                payload,
            }),
        }
    }

    let mut merged: Vec<(Direction, f64, T)> = Vec::with_capacity(groups.len());
    for g in groups {
        if g.area >= tol::MIN_FACET_VOLUME {
            merged.push((Direction::from_unit_unchecked(g.rep), g.area, g.payload));
        }
    }
    if merged.is_empty() {
        return Err(Error::InconsistentMeasure("measure has no atoms above the volume floor".into()));
    }
    Ok(merged)
}

fn build_measure(dim: usize, atoms: Vec<(Direction, f64)>) -> Result<FacetMeasure> {
    let total: f64 = atoms.iter().map(|(_, a)| *a).sum();

    // Origin symmetry: every atom needs an antipodal partner of equal
    // weight. In lexicographic order the partner of atom i sits at the
    // mirrored index, so try that first and fall back to a scan.
    let p = atoms.len();
    for (i, (dir, area)) in atoms.iter().enumerate() {
        let matches = |j: usize| {
            let (other, other_area) = &atoms[j];
            dir.dot(other.coords()) < -tol::DIRECTION_MATCH_DOT
                && (area - other_area).abs() <= tol::BALANCE_REL * total
        };
        let mirrored = p - 1 - i;
        if !(matches(mirrored) || (0..p).any(matches)) {
            return Err(Error::InconsistentMeasure(format!(
                "atom {:?} (volume {area}) has no antipodal partner",
                dir.coords()
            )));
        }
    }

    // Minkowski balance.
    let mut resultant = vec![KahanSum::new(); dim];
    for (dir, area) in &atoms {
        for (acc, &c) in resultant.iter_mut().zip(dir.coords()) {
            acc.add(area * c);
        }
    }
    let imbalance = linalg::norm(&resultant.iter().map(|k| k.value()).collect::<Vec<_>>());
    if imbalance > tol::BALANCE_REL * total {
        return Err(Error::InconsistentMeasure(format!(
            "measure resultant {imbalance:.3e} exceeds balance tolerance"
        )));
    }

    Ok(FacetMeasure {
        dim,
        atoms: atoms.into_iter().map(|(normal, area)| MeasureAtom { normal, area }).collect(),
    })
}

// ---------------------------------------------------------------------------
// Zonotope
// ---------------------------------------------------------------------------

/// The Minkowski sum of centered segments `sum_j [-v_j, v_j]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Zonotope {
    dim: usize,
    generators: Vec<Vec<f64>>,
    #[serde(skip, default = "default_cap")]
    cap: usize,
}

fn default_cap() -> usize {
    DEFAULT_GENERATOR_CAP
}

impl Zonotope {
    pub fn new(dim: usize, generators: Vec<Vec<f64>>) -> Result<Self> {
        Self::with_cap(dim, generators, DEFAULT_GENERATOR_CAP)
    }

    /// Builds a zonotope under an explicit generator cap. Projection bodies
    /// of dense measures legitimately carry more segments than the default
    /// enumeration cap; support-function queries stay cheap regardless.
    pub fn with_cap(dim: usize, generators: Vec<Vec<f64>>, cap: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::UnsupportedDimension(0, 1));
        }
        if generators.len() > cap {
            return Err(Error::GeneratorCapExceeded { count: generators.len(), cap });
        }
        for g in &generators {
            if g.len() != dim {
                return Err(Error::dim(dim, g.len()));
            }
            if g.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidParameter("generator has non-finite coordinates".into()));
            }
        }
        Ok(Self { dim, generators, cap })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<f64>] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// The homothet t * Z, t > 0.
    pub fn scaled(&self, t: f64) -> Result<Self> {
        if !(t.is_finite() && t > 0.0) {
            return Err(Error::InvalidParameter(format!("scale factor {t} must be positive")));
        }
        let generators = self
            .generators
            .iter()
            .map(|g| g.iter().map(|x| x * t).collect())
            .collect();
        Self::with_cap(self.dim, generators, self.cap)
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.generators, self.dim, tol::RANK_REL)
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.dim
    }

    /// sigma_min / sigma_max of the generator matrix; 0 for rank-deficient
    /// or empty zonotopes. Used to reject ill-conditioned random fixtures.
    pub fn min_singular_ratio(&self) -> f64 {
        let sv = linalg::singular_values(&self.generators, self.dim);
        match (sv.first(), sv.get(self.dim - 1)) {
            (Some(&s0), Some(&sn)) if s0 > 0.0 => sn / s0,
            _ => 0.0,
        }
    }

    /// h_Z(x) = sum_j |<v_j, x>|.
    pub fn support(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dim {
            return Err(Error::dim(self.dim, x.len()));
        }
        let mut acc = KahanSum::new();
        for g in &self.generators {
            acc.add(linalg::dot(g, x).abs());
        }
        Ok(acc.value())
    }

    /// Enumerates all (n-1)-generator subsets of rank n-1; each contributes
    /// an antipodal pair of atoms with unit normal orthogonal to the subset
    /// and facet volume `2^(n-1) * sqrt(det Gram)`. Coinciding normals from
    /// non-generic subsets merge by volume.
    pub fn surface_measure(&self) -> Result<FacetMeasure> {
        if self.dim < 2 {
            return Err(Error::UnsupportedDimension(self.dim, 2));
        }
        if !self.is_full_rank() {
            return Err(Error::Degenerate(format!(
                "zonotope generators span rank {} < {}",
                self.rank(),
                self.dim
            )));
        }
        let n = self.dim;
        let subsets = index_subsets(self.generators.len(), n - 1);
        let scale = (2.0f64).powi(n as i32 - 1);
        let contributions = exec::map_indexed(subsets.len(), |s| {
            let subset = &subsets[s];
            let rows: Vec<&[f64]> = subset.iter().map(|&j| self.generators[j].as_slice()).collect();
            let cross = linalg::cross_product(&rows, n);
            let len = linalg::norm(&cross);
            let size_product: f64 = rows.iter().map(|r| linalg::norm(r)).product();
            if len <= 1e-12 * size_product || size_product == 0.0 {
                return None;
            }
            let mut unit: Vec<f64> = cross.iter().map(|c| c / len).collect();
            linalg::canonicalize_sign(&mut unit);
            Some((unit, scale * len))
        });

        let mut raw = Vec::with_capacity(2 * contributions.len());
        for (unit, area) in contributions.into_iter().flatten() {
            raw.push((unit.iter().map(|x| -x).collect(), area));
            raw.push((unit, area));
        }
        canonicalize_measure(n, &raw)
    }
}

/// All k-element index subsets of 0..m in lexicographic order.
pub(crate) fn index_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..m).combinations(k).collect()
}

// ---------------------------------------------------------------------------
// Ball
// ---------------------------------------------------------------------------

/// The Euclidean ball of a given radius, centered at the origin.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Ball {
    dim: usize,
    radius: f64,
}

impl Ball {
    pub fn new(dim: usize, radius: f64) -> Result<Self> {
        if dim < 2 {
            return Err(Error::UnsupportedDimension(dim, 2));
        }
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidParameter(format!("ball radius {radius} must be positive")));
        }
        Ok(Self { dim, radius })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn support(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dim {
            return Err(Error::dim(self.dim, x.len()));
        }
        Ok(self.radius * linalg::norm(x))
    }
}

// ---------------------------------------------------------------------------
// FacetBody
// ---------------------------------------------------------------------------

/// An origin-symmetric polytope described by its vertices and its surface
/// area measure, with one stored support offset per atom.
#[derive(Debug, Clone)]
pub struct FacetBody {
    dim: usize,
    vertices: Vec<Vec<f64>>,
    measure: FacetMeasure,
    offsets: Vec<f64>,
}

impl FacetBody {
    /// Validates and assembles a facet body from raw `(normal, volume,
    /// offset)` triples. Duplicate directions merge their volumes but must
    /// agree on the offset.
    pub fn from_raw_atoms(
        dim: usize,
        vertices: Vec<Vec<f64>>,
        atoms: Vec<(Vec<f64>, f64, f64)>,
    ) -> Result<Self> {
        if dim < 2 {
            return Err(Error::UnsupportedDimension(dim, 2));
        }
        for v in &vertices {
            if v.len() != dim {
                return Err(Error::dim(dim, v.len()));
            }
        }
        let tagged: Vec<(Vec<f64>, f64, f64)> = atoms;
        let canonical = canonicalize_atoms(dim, tagged, |h1, h2| {
            if (h1 - h2).abs() > tol::SUPPORT_CONSISTENCY_REL * h1.abs().max(*h2) {
                return Err(Error::InconsistentMeasure(format!(
                    "merged atoms disagree on support offset: {h1} vs {h2}"
                )));
            }
            Ok(*h1)
        })?;
        let offsets: Vec<f64> = canonical.iter().map(|(_, _, h)| *h).collect();
        let measure = build_measure(dim, canonical.into_iter().map(|(d, a, _)| (d, a)).collect())?;

        let body = Self { dim, vertices, measure, offsets };
        body.validate()?;
        Ok(body)
    }

    fn validate(&self) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::InvalidParameter("facet body needs vertices".into()));
        }
        let scale = self
            .vertices
            .iter()
            .map(|v| linalg::norm(v))
            .fold(0.0f64, f64::max)
            .max(f64::MIN_POSITIVE);

        // Vertex set symmetry: v in set => -v in set.
        for v in &self.vertices {
            let has_mirror = self.vertices.iter().any(|w| {
                v.iter().zip(w).all(|(a, b)| (a + b).abs() <= 1e-9 * scale)
            });
            if !has_mirror {
                return Err(Error::InvalidParameter(format!(
                    "vertex {v:?} has no antipodal partner"
                )));
            }
        }

        // Stored offsets must equal the support of the vertex set at each
        // atom normal.
        for (atom, &h) in self.measure.atoms().iter().zip(&self.offsets) {
            let support = self.support(atom.normal.coords())?;
            if (support - h).abs() > tol::SUPPORT_CONSISTENCY_REL * h.abs().max(support.abs()) {
                return Err(Error::InconsistentMeasure(format!(
                    "offset {h} disagrees with vertex support {support} at {:?}",
                    atom.normal.coords()
                )));
            }
        }

        if self.pyramid_volume() <= 0.0 {
            return Err(Error::Degenerate("facet body has nonpositive pyramid volume".into()));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<f64>] {
        &self.vertices
    }

    pub fn measure(&self) -> &FacetMeasure {
        &self.measure
    }

    pub fn offsets(&self) -> &[f64] {
        &self.offsets
    }

    /// h(x) = max over vertices of <v, x>.
    pub fn support(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dim {
            return Err(Error::dim(self.dim, x.len()));
        }
        Ok(self
            .vertices
            .iter()
            .map(|v| linalg::dot(v, x))
            .fold(f64::NEG_INFINITY, f64::max))
    }

    /// (1/n) sum_i h_i a_i — the exact discrete volume of the body.
    pub fn pyramid_volume(&self) -> f64 {
        let mut acc = KahanSum::new();
        for (atom, &h) in self.measure.atoms().iter().zip(&self.offsets) {
            acc.add(h * atom.area);
        }
        acc.value() / self.dim as f64
    }

    pub fn scaled(&self, t: f64) -> Result<Self> {
        if !(t.is_finite() && t > 0.0) {
            return Err(Error::InvalidParameter(format!("scale factor {t} must be positive")));
        }
        let area_scale = t.powi(self.dim as i32 - 1);
        let atoms = self
            .measure
            .atoms()
            .iter()
            .zip(&self.offsets)
            .map(|(atom, &h)| (atom.normal.coords().to_vec(), atom.area * area_scale, h * t))
            .collect();
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|x| x * t).collect())
            .collect();
        Self::from_raw_atoms(self.dim, vertices, atoms)
    }
}

/// The scaled cross-polytope `s * conv(±e_1, ..., ±e_n)`: 2^n facets with
/// normals `(±1, ..., ±1)/sqrt(n)`, offsets `s/sqrt(n)`, and facet volumes
/// `s^(n-1) * sqrt(n)/(n-1)!`.
pub fn make_cross_polytope(dim: usize, scale: f64) -> Result<FacetBody> {
    if dim < 2 {
        return Err(Error::UnsupportedDimension(dim, 2));
    }
    if !(scale.is_finite() && scale > 0.0) {
        return Err(Error::InvalidParameter(format!("cross-polytope scale {scale} must be positive")));
    }
    let root_n = (dim as f64).sqrt();
    let factorial: f64 = (2..dim as u64).map(|k| k as f64).product();
    let facet_volume = scale.powi(dim as i32 - 1) * root_n / factorial;
    let offset = scale / root_n;

    let mut vertices = Vec::with_capacity(2 * dim);
    for k in 0..dim {
        for sign in [1.0, -1.0] {
            let mut v = vec![0.0; dim];
            v[k] = sign * scale;
            vertices.push(v);
        }
    }

    let mut atoms = Vec::with_capacity(1 << dim);
    for mask in 0u64..(1u64 << dim) {
        let normal: Vec<f64> = (0..dim)
            .map(|k| if mask >> k & 1 == 1 { -1.0 } else { 1.0 } / root_n)
            .collect();
        atoms.push((normal, facet_volume, offset));
    }
    FacetBody::from_raw_atoms(dim, vertices, atoms)
}

// ---------------------------------------------------------------------------
// Body
// ---------------------------------------------------------------------------

/// Tagged union over the supported body families.
#[derive(Debug, Clone)]
pub enum Body {
    Zonotope(Zonotope),
    Ball(Ball),
    Facet(FacetBody),
}

impl Body {
    pub fn dim(&self) -> usize {
        match self {
            Body::Zonotope(z) => z.dim(),
            Body::Ball(b) => b.dim(),
            Body::Facet(f) => f.dim(),
        }
    }

    /// Support function h(x) = max over the body of <x, .>; even and
    /// positively homogeneous of degree one.
    pub fn support(&self, x: &[f64]) -> Result<f64> {
        match self {
            Body::Zonotope(z) => z.support(x),
            Body::Ball(b) => b.support(x),
            Body::Facet(f) => f.support(x),
        }
    }

    /// Discrete surface area measure. Balls carry a continuous measure and
    /// are rejected.
    pub fn surface_measure(&self) -> Result<FacetMeasure> {
        match self {
            Body::Zonotope(z) => z.surface_measure(),
            Body::Ball(_) => Err(Error::UnsupportedMeasure(
                "the ball's surface area measure is continuous, not atomic".into(),
            )),
            Body::Facet(f) => Ok(f.measure().clone()),
        }
    }

    /// The homothet t * K, t > 0.
    pub fn scaled(&self, t: f64) -> Result<Body> {
        Ok(match self {
            Body::Zonotope(z) => Body::Zonotope(z.scaled(t)?),
            Body::Ball(b) => Body::Ball(Ball::new(b.dim(), b.radius() * t)?),
            Body::Facet(f) => Body::Facet(f.scaled(t)?),
        })
    }
}

// ---------------------------------------------------------------------------
// JSON descriptors
// ---------------------------------------------------------------------------

/// Serialized body descriptor; the on-disk JSON interchange format.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum BodySpec {
    Zonotope { dim: usize, generators: Vec<Vec<f64>> },
    Ball { dim: usize, radius: f64 },
    CrossPolytope { dim: usize, scale: f64 },
    FacetBody { dim: usize, vertices: Vec<Vec<f64>>, atoms: Vec<AtomSpec> },
}

/// One serialized measure atom: unit normal `u`, facet volume `a`, support
/// offset `h`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AtomSpec {
    pub u: Vec<f64>,
    pub a: f64,
    pub h: f64,
}

impl BodySpec {
    pub fn into_body(&self) -> Result<Body> {
        match self {
            BodySpec::Zonotope { dim, generators } => {
                Ok(Body::Zonotope(Zonotope::new(*dim, generators.clone())?))
            }
            BodySpec::Ball { dim, radius } => Ok(Body::Ball(Ball::new(*dim, *radius)?)),
            BodySpec::CrossPolytope { dim, scale } => {
                Ok(Body::Facet(make_cross_polytope(*dim, *scale)?))
            }
            BodySpec::FacetBody { dim, vertices, atoms } => {
                let raw = atoms.iter().map(|a| (a.u.clone(), a.a, a.h)).collect();
                Ok(Body::Facet(FacetBody::from_raw_atoms(*dim, vertices.clone(), raw)?))
            }
        }
    }

    pub fn from_body(body: &Body) -> BodySpec {
        match body {
            Body::Zonotope(z) => BodySpec::Zonotope {
                dim: z.dim(),
                generators: z.generators().to_vec(),
            },
            Body::Ball(b) => BodySpec::Ball { dim: b.dim(), radius: b.radius() },
            Body::Facet(f) => BodySpec::FacetBody {
                dim: f.dim(),
                vertices: f.vertices().to_vec(),
                atoms: f
                    .measure()
                    .atoms()
                    .iter()
                    .zip(f.offsets())
                    .map(|(atom, &h)| AtomSpec {
                        u: atom.normal.coords().to_vec(),
                        a: atom.area,
                        h,
                    })
                    .collect(),
            },
        }
    }
}

// ---------------------------------------------------------------------------
