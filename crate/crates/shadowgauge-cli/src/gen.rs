//! Seeded body generation: random well-conditioned zonotopes plus the
//! standard fixture family (cube, box, cross-polytope, ball).

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};

use shadowgauge::bodies::{BodySpec, Zonotope, DEFAULT_GENERATOR_CAP};
use shadowgauge::sampling;

/// Smallest accepted sigma_min/sigma_max for random generator matrices;
/// near-degenerate fixtures stress tolerances without testing the math.
pub const CONDITION_FLOOR: f64 = 0.05;

#[derive(Debug, Clone)]
pub struct GenConfig {
    pub dim: usize,
    pub bodies: usize,
    pub generators: usize,
    pub seed: u64,
}

impl GenConfig {
    pub fn validate(&self) -> anyhow::Result<()> {
        if self.dim < 2 {
            bail!("--dim must be at least 2, got {}", self.dim);
        }
        if self.bodies < 1 {
            bail!("--bodies must be at least 1, got {}", self.bodies);
        }
        if self.generators < self.dim {
            bail!(
                "--generators must be at least the dimension ({}), got {}",
                self.dim,
                self.generators
            );
        }
        if self.generators > DEFAULT_GENERATOR_CAP {
            bail!(
                "--generators {} exceeds the generator cap {}",
                self.generators,
                DEFAULT_GENERATOR_CAP
            );
        }
        Ok(())
    }
}

/// Deterministic random zonotope: generator directions uniform on the
/// sphere, lengths uniform on the shell [0.5, 1.5], resampled until the
/// generator matrix clears [`CONDITION_FLOOR`].
pub fn random_zonotope(dim: usize, generators: usize, seed: u64, body_index: u64) -> Zonotope {
    for attempt in 0u64..256 {
        let gens: Vec<Vec<f64>> = (0..generators as u64)
            .map(|j| {
                let index = (body_index << 20) | (attempt << 8) | j;
                sampling::shell_vector(dim, seed, index, 0.5, 1.5)
            })
            .collect();
        let z = Zonotope::new(dim, gens).expect("generated coordinates are finite");
        if z.min_singular_ratio() >= CONDITION_FLOOR {
            return z;
        }
    }
    unreachable!("256 attempts at a well-conditioned zonotope failed");
}

/// The four fixtures accompanying every generated suite, in output order.
pub fn fixture_specs(dim: usize) -> Vec<(String, BodySpec)> {
    let axis = |k: usize, len: f64| {
        let mut v = vec![0.0; dim];
        v[k] = len;
        v
    };
    let cube = BodySpec::Zonotope {
        dim,
        generators: (0..dim).map(|k| axis(k, 1.0)).collect(),
    };
    // Anisotropic box: unit slab in all axes but the last, which is doubled.
    let mut box_gens: Vec<Vec<f64>> = (0..dim - 1).map(|k| axis(k, 1.0)).collect();
    box_gens.push(axis(dim - 1, 2.0));
    let boxy = BodySpec::Zonotope { dim, generators: box_gens };
    vec![
        ("cube".to_string(), cube),
        ("box".to_string(), boxy),
        ("cross_polytope".to_string(), BodySpec::CrossPolytope { dim, scale: 1.0 }),
        ("ball".to_string(), BodySpec::Ball { dim, radius: 1.0 }),
    ]
}

/// Writes the suite to `out`: `bodies` random zonotopes plus the fixtures.
/// Returns the file paths in creation order. Same config and seed produce
/// byte-identical files.
pub fn run(cfg: &GenConfig, out: &Path) -> anyhow::Result<Vec<PathBuf>> {
    cfg.validate()?;
    fs::create_dir_all(out)
        .with_context(|| format!("cannot create output directory {}", out.display()))?;

    let mut written = Vec::new();
    for b in 0..cfg.bodies {
        let z = random_zonotope(cfg.dim, cfg.generators, cfg.seed, b as u64);
        let spec = BodySpec::from_body(&shadowgauge::bodies::Body::Zonotope(z));
        written.push(write_spec(out, &format!("zonotope_{b:02}"), &spec)?);
    }
    for (name, spec) in fixture_specs(cfg.dim) {
        written.push(write_spec(out, &name, &spec)?);
    }
    Ok(written)
}

fn write_spec(dir: &Path, name: &str, spec: &BodySpec) -> anyhow::Result<PathBuf> {
    let path = dir.join(format!("{name}.json"));
    let mut payload = serde_json::to_string_pretty(spec)?;
    payload.push('\n');
    fs::write(&path, payload)
        .with_context(|| format!("cannot write body file {}", path.display()))?;
    Ok(path)
}
