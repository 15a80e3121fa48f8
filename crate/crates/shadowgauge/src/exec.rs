//! Execution helpers for the data-parallel inner loops.
//!
//! Every hot loop in this crate (Monte Carlo sampling, coarse sphere scans,
//! subset-determinant enumeration) maps an index range to values and then
//! reduces the results *in index order*. [`map_indexed`] distributes the map
//! over rayon when the `parallel` feature is enabled and otherwise runs the
//! sequential fallback; because the output vector is index-ordered either
//! way, results are bit-identical across thread counts and feature choices.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Jobs below this size run sequentially even with `parallel` enabled;
/// pool dispatch costs more than it saves there.
pub const PARALLEL_CUTOFF: usize = 4096;

/// Evaluates `f` at each index in `0..len`, returning results in index order.
pub fn map_indexed<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if len >= PARALLEL_CUTOFF {
        return (0..len).into_par_iter().with_min_len(64).map(f).collect();
    }
    map_indexed_seq(len, f)
}

/// Single-threaded variant of [`map_indexed`]; this is the fallback body used
/// when the `parallel` feature is off, kept public so benchmarks can compare
/// both paths in one build.
pub fn map_indexed_seq<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..len).map(f).collect()
}

/// Neumaier-compensated accumulator for long sums of positive and mixed terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Compensated sum of a slice, in slice order.
pub fn kahan_sum(values: &[f64]) -> f64 {
    let mut acc = KahanSum::new();
    for &v in values {
        acc.add(v);
    }
    acc.value()
}
