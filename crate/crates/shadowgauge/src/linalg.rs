//! Small dense linear-algebra helpers shared across modules.

use nalgebra::DMatrix;

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Determinant of the square matrix whose columns are the given vectors.
pub(crate) fn det_of_columns(columns: &[&[f64]]) -> f64 {
    let n = columns.len();
    debug_assert!(columns.iter().all(|c| c.len() == n));
    match n {
        0 => 1.0,
        1 => columns[0][0],
        2 => columns[0][0] * columns[1][1] - columns[1][0] * columns[0][1],
        3 => {
            let (a, b, c) = (columns[0], columns[1], columns[2]);
            a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1])
                + c[0] * (a[1] * b[2] - a[2] * b[1])
        }
        _ => DMatrix::from_fn(n, n, |r, c| columns[c][r]).determinant(),
    }
}

/// Generalized cross product of `dim - 1` vectors in `dim` coordinates.
///
/// The result is orthogonal to every input and its norm equals the
/// (dim-1)-volume of the parallelepiped they span (the square root of the
/// Gram determinant).
pub(crate) fn cross_product(rows: &[&[f64]], dim: usize) -> Vec<f64> {
    debug_assert_eq!(rows.len() + 1, dim);
    let mut out = vec![0.0; dim];
    if dim == 2 {
        out[0] = rows[0][1];
        out[1] = -rows[0][0];
        return out;
    }
    let mut minor = vec![vec![0.0; dim - 1]; dim - 1];
    for skip in 0..dim {
        for (r, row) in rows.iter().enumerate() {
            let mut k = 0;
            for (c, &v) in row.iter().enumerate() {
                if c != skip {
                    minor[r][k] = v;
                    k += 1;
                }
            }
        }
        let refs: Vec<&[f64]> = minor.iter().map(|r| r.as_slice()).collect();
        // det_of_columns is transpose-invariant, so row slices work directly.
        let d = det_of_columns(&refs);
        out[skip] = if skip % 2 == 0 { d } else { -d };
    }
    out
}

/// Singular values of the dim x m matrix with the given columns, descending.
pub(crate) fn singular_values(columns: &[Vec<f64>], dim: usize) -> Vec<f64> {
    if columns.is_empty() {
        return Vec::new();
    }
    let mat = DMatrix::from_fn(dim, columns.len(), |r, c| columns[c][r]);
    let mut sv: Vec<f64> = mat.singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    sv
}

pub(crate) fn rank(columns: &[Vec<f64>], dim: usize, rel_tol: f64) -> usize {
    let sv = singular_values(columns, dim);
    match sv.first() {
        None => 0,
        Some(&s0) if s0 == 0.0 => 0,
        Some(&s0) => sv.iter().filter(|&&s| s > rel_tol * s0).count(),
    }
}

/// Index of the largest-magnitude coordinate (lowest index wins ties).
pub(crate) fn argmax_abs(v: &[f64]) -> usize {
    let mut best = 0;
    for (i, &x) in v.iter().enumerate() {
        if x.abs() > v[best].abs() {
            best = i;
        }
    }
    best
}

/// Flips the sign of `v` in place so its largest-magnitude coordinate is
/// positive. Fixes a deterministic representative for each antipodal pair.
pub(crate) fn canonicalize_sign(v: &mut [f64]) {
    if v[argmax_abs(v)] < 0.0 {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
}

/// True when the largest-magnitude coordinate is nonnegative, i.e. the vector
/// already carries the canonical sign.
pub(crate) fn has_canonical_sign(v: &[f64]) -> bool {
    v[argmax_abs(v)] >= 0.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_product_norm_is_gram_volume() {
        let rows: Vec<Vec<f64>> = vec![vec![1.0, 0.0, 2.0], vec![0.0, 3.0, 1.0]];
        let refs: Vec<&[f64]> = rows.iter().map(|r| r.as_slice()).collect();
        let c = cross_product(&refs, 3);
        for r in &rows {
            assert!(dot(&c, r).abs() < 1e-12);
        }
        // Gram determinant of the two rows.
        let g11 = dot(&rows[0], &rows[0]);
        let g12 = dot(&rows[0], &rows[1]);
        let g22 = dot(&rows[1], &rows[1]);
        let gram = g11 * g22 - g12 * g12;
        assert!((norm(&c) - gram.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn cross_product_2d_rotates() {
        let rows: Vec<&[f64]> = vec![&[3.0, 4.0]];
        let c = cross_product(&rows, 2);
        assert_eq!(c, vec![4.0, -3.0]);
    }

    #[test]
    fn rank_detects_degeneracy() {
        let cols = vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![1.0, 1.0, 0.0]];
        assert_eq!(rank(&cols, 3, 1e-10), 2);
    }
}
