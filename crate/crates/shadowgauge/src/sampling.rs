//! Deterministic, counter-addressed random and quasi-random sampling.
//!
//! Every random quantity in the crate is drawn from a ChaCha stream keyed by
//! `(seed, index)`: sample `index` always sees the same generator state no
//! matter which thread evaluates it or in which order. That makes all Monte
//! Carlo paths reproducible for a fixed seed and independent of the parallel
//! schedule.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::bodies::Direction;

/// RNG for sample `index` of the stream family identified by `seed`.
pub fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform random unit vector, addressed by `(seed, index)`.
pub fn unit_direction(dim: usize, seed: u64, index: u64) -> Vec<f64> {
    let mut rng = stream_rng(seed, index);
    loop {
        let v: Vec<f64> = (0..dim).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
        let n = crate::linalg::norm(&v);
        if n > 1e-12 {
            return v.iter().map(|x| x / n).collect();
        }
    }
}

/// Uniform random point in the symmetric box `prod_k [-half_widths[k], half_widths[k]]`.
pub fn box_point(half_widths: &[f64], seed: u64, index: u64) -> Vec<f64> {
    let mut rng = stream_rng(seed, index);
    half_widths
        .iter()
        .map(|&h| rng.random_range(-h..=h))
        .collect()
}

/// Random vector on the shell `lo <= |v| <= hi`: uniform direction, uniform
/// length. Addressed by `(seed, index)` like every other sampler here.
pub fn shell_vector(dim: usize, seed: u64, index: u64, lo: f64, hi: f64) -> Vec<f64> {
    assert!(0.0 < lo && lo <= hi);
    let mut rng = stream_rng(seed, index);
    let dir = loop {
        let v: Vec<f64> = (0..dim).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
        let n = crate::linalg::norm(&v);
        if n > 1e-12 {
            break v.into_iter().map(|x| x / n).collect::<Vec<f64>>();
        }
    };
    let radius = rng.random_range(lo..hi);
    dir.into_iter().map(|x| x * radius).collect()
}

/// Deterministic low-discrepancy sample of the unit sphere.
///
/// A Kronecker sequence on the unit cube (generalized golden-ratio
/// increments) is pushed through the Box-Muller map and normalized; each
/// point is then sign-flipped to the hemisphere whose largest coordinate is
/// positive, since all objectives minimized over the sphere here are even.
pub fn low_discrepancy_directions(dim: usize, count: usize) -> Vec<Direction> {
    assert!(dim >= 2, "sphere sampling needs dim >= 2");
    let pairs = dim.div_ceil(2);
    let cube_dim = 2 * pairs;
    let alphas = kronecker_alphas(cube_dim);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let mut coords = Vec::with_capacity(dim);
        for p in 0..pairs {
            let u1 = frac(0.5 + (i as f64 + 1.0) * alphas[2 * p]).max(1e-12);
            let u2 = frac(0.5 + (i as f64 + 1.0) * alphas[2 * p + 1]);
            let r = (-2.0 * u1.ln()).sqrt();
            let theta = std::f64::consts::TAU * u2;
            coords.push(r * theta.cos());
            if coords.len() < dim {
                coords.push(r * theta.sin());
            }
        }
        match Direction::normalized(coords) {
            Ok(mut d) => {
                d.canonicalize_sign();
                out.push(d);
            }
            // A zero vector from the map is astronomically unlikely; fall
            // back to an axis so the sample count stays exact.
            Err(_) => out.push(Direction::axis(dim, i % dim)),
        }
    }
    out
}

fn frac(x: f64) -> f64 {
    x - x.floor()
}

/// Increments of the d-dimensional Kronecker sequence: inverse powers of the
/// positive root of x^(d+1) = x + 1.
fn kronecker_alphas(d: usize) -> Vec<f64> {
    let mut phi = 1.5f64;
    for _ in 0..64 {
        phi = (1.0 + phi).powf(1.0 / (d as f64 + 1.0));
    }
    (1..=d).map(|j| frac(phi.powi(-(j as i32)))).collect()
}
