//! Property-based invariants for the geometry kernels.
//!
//! Each block mirrors a contract stated in the module docs: exactness of
//! dual-route identities at 1e-9 relative, closed-form scaling laws at
//! 1e-12 relative, symmetry/equivariance under rotations, and verdict
//! stability of the inequality checks under rescaling.

use nalgebra::DMatrix;
use proptest::prelude::*;

use shadowgauge::bodies::{
    canonicalize_measure, make_cross_polytope, Body, Direction, FacetMeasure, Zonotope,
};
use shadowgauge::calculus;
use shadowgauge::inequalities::{self, CheckConfig, Verdict};
use shadowgauge::oracle;
use shadowgauge::shadows::{self, SphereMinConfig};
use shadowgauge::tol;

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

// ---------------------------------------------------------------------------
// Strategies
// ---------------------------------------------------------------------------

fn coordinate() -> impl Strategy<Value = f64> {
    (-1.0f64..1.0).prop_filter("finite", |x| x.is_finite())
}

/// Full-rank, reasonably conditioned random zonotope in the given dimension.
fn zonotope(dim: usize) -> impl Strategy<Value = Zonotope> {
    let gens = prop::collection::vec(prop::collection::vec(coordinate(), dim), dim..=8);
    gens.prop_filter_map("needs full rank and fair conditioning", move |g| {
        let z = Zonotope::new(dim, g).ok()?;
        (z.min_singular_ratio() > 0.05).then_some(z)
    })
}

fn any_zonotope() -> impl Strategy<Value = Zonotope> {
    (2usize..=4).prop_flat_map(zonotope)
}

fn direction(dim: usize) -> impl Strategy<Value = Direction> {
    prop::collection::vec(coordinate(), dim).prop_filter_map("nonzero", |v| {
        (norm(&v) > 0.1).then(|| Direction::normalized(v).unwrap())
    })
}

/// Random orthogonal matrix via the QR factorization of a random matrix.
fn rotation(dim: usize) -> impl Strategy<Value = DMatrix<f64>> {
    prop::collection::vec(coordinate(), dim * dim).prop_map(move |entries| {
        let m = DMatrix::from_vec(dim, dim, entries) + DMatrix::identity(dim, dim) * 0.01;
        m.qr().q()
    })
}

fn rotate(u: &DMatrix<f64>, v: &[f64]) -> Vec<f64> {
    (0..u.nrows())
        .map(|r| (0..u.ncols()).map(|c| u[(r, c)] * v[c]).sum())
        .collect()
}

fn rotated_zonotope(u: &DMatrix<f64>, z: &Zonotope) -> Zonotope {
    let gens = z.generators().iter().map(|g| rotate(u, g)).collect();
    Zonotope::new(z.dim(), gens).unwrap()
}

// ---------------------------------------------------------------------------
// Support function
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn support_is_even((z, x) in any_zonotope().prop_flat_map(|z| {
        let dim = z.dim();
        (Just(z), prop::collection::vec(coordinate(), dim))
    })) {
        let body = Body::Zonotope(z);
        let neg: Vec<f64> = x.iter().map(|v| -v).collect();
        let a = body.support(&x).unwrap();
        let b = body.support(&neg).unwrap();
        prop_assert!((a - b).abs() <= tol::REL_CLOSED_FORM * a.abs().max(1.0));
    }

    #[test]
    fn support_is_positively_homogeneous(
        (z, x) in any_zonotope().prop_flat_map(|z| {
            let dim = z.dim();
            (Just(z), prop::collection::vec(coordinate(), dim))
        }),
        t in 0.1f64..4.0,
    ) {
        let body = Body::Zonotope(z);
        let scaled: Vec<f64> = x.iter().map(|v| v * t).collect();
        let lhs = body.support(&scaled).unwrap();
        let rhs = t * body.support(&x).unwrap();
        prop_assert!((lhs - rhs).abs() <= tol::REL_CLOSED_FORM * rhs.abs().max(1e-12));
    }

    #[test]
    fn support_is_midpoint_convex(
        (z, x, y) in any_zonotope().prop_flat_map(|z| {
            let dim = z.dim();
            (
                Just(z),
                prop::collection::vec(coordinate(), dim),
                prop::collection::vec(coordinate(), dim),
            )
        }),
    ) {
        let body = Body::Zonotope(z);
        let mid: Vec<f64> = x.iter().zip(&y).map(|(a, b)| 0.5 * (a + b)).collect();
        let hm = body.support(&mid).unwrap();
        let avg = 0.5 * (body.support(&x).unwrap() + body.support(&y).unwrap());
        prop_assert!(hm <= avg + 1e-12 * avg.abs().max(1.0));
    }

    #[test]
    fn facet_body_support_is_even(x in prop::collection::vec(coordinate(), 3)) {
        let body = Body::Facet(make_cross_polytope(3, 1.0).unwrap());
        let neg: Vec<f64> = x.iter().map(|v| -v).collect();
        prop_assert_eq!(body.support(&x).unwrap(), body.support(&neg).unwrap());
    }
}

// ---------------------------------------------------------------------------
// Surface area measures
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn measures_balance_and_stay_bounded(z in any_zonotope()) {
        let measure = z.surface_measure().unwrap();
        let dim = z.dim();
        let mut resultant = vec![0.0; dim];
        let mut mass = 0.0;
        for atom in measure.atoms() {
            for (acc, c) in resultant.iter_mut().zip(atom.normal.coords()) {
                *acc += atom.area * c;
            }
            mass += atom.area;
        }
        prop_assert!(norm(&resultant) <= tol::BALANCE_REL * mass);

        let m = z.generator_count();
        let bound = 2 * binomial(m, dim - 1);
        prop_assert!(measure.atoms().len() <= bound);
    }

    #[test]
    fn measure_rotation_equivariance((z, u) in (2usize..=4).prop_flat_map(|d| (zonotope(d), rotation(d)))) {
        let original = z.surface_measure().unwrap();
        let rotated = rotated_zonotope(&u, &z).surface_measure().unwrap();
        prop_assert_eq!(original.atoms().len(), rotated.atoms().len());
        for atom in original.atoms() {
            let image = rotate(&u, atom.normal.coords());
            // Find the matching atom in the rotated measure.
            let best = rotated
                .atoms()
                .iter()
                .map(|other| (dot(&image, other.normal.coords()), other.area))
                .max_by(|a, b| a.0.partial_cmp(&b.0).unwrap())
                .unwrap();
            prop_assert!(best.0 > tol::DIRECTION_MATCH_DOT);
            prop_assert!((best.1 - atom.area).abs() <= tol::REL_EXACT * atom.area.max(1e-9));
        }
    }

    #[test]
    fn canonicalization_is_order_independent(z in any_zonotope(), seed in 0u64..1000) {
        let measure = z.surface_measure().unwrap();
        let raw: Vec<(Vec<f64>, f64)> = measure
            .atoms()
            .iter()
            .map(|a| (a.normal.coords().to_vec(), a.area))
            .collect();
        let mut shuffled = raw.clone();
        let n = shuffled.len();
        for i in (1..n).rev() {
            let j = ((seed.wrapping_mul(6364136223846793005).wrapping_add(i as u64)) % (i as u64 + 1)) as usize;
            shuffled.swap(i, j);
        }
        // Same atoms in any order canonicalize to bitwise-identical output.
        let a = canonicalize_measure(z.dim(), &raw).unwrap();
        let b = canonicalize_measure(z.dim(), &shuffled).unwrap();
        prop_assert_eq!(a.atoms().len(), b.atoms().len());
        for (x, y) in a.atoms().iter().zip(b.atoms()) {
            prop_assert_eq!(x.normal.coords(), y.normal.coords());
            prop_assert_eq!(x.area, y.area);
        }
    }
}

fn binomial(m: usize, k: usize) -> usize {
    if k > m {
        return 0;
    }
    let mut result = 1usize;
    for i in 0..k.min(m - k) {
        result = result * (m - i) / (i + 1);
    }
    result
}

// ---------------------------------------------------------------------------
// Volume, surface area, mixed volumes
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn determinant_and_measure_volumes_agree(z in any_zonotope()) {
        let body = Body::Zonotope(z);
        let det = calculus::volume(&body).unwrap().value;
        let measure = body.surface_measure().unwrap();
        let via_measure =
            calculus::volume_from_measure(&measure, |u| body.support(u.coords()).unwrap());
        prop_assert!(
            (det - via_measure).abs() <= tol::REL_EXACT * det,
            "det {det} vs measure {via_measure}"
        );
    }

    #[test]
    fn volume_and_surface_scaling_laws(z in any_zonotope(), t in 0.2f64..3.0) {
        let n = z.dim() as i32;
        let body = Body::Zonotope(z);
        let scaled = body.scaled(t).unwrap();
        let v = calculus::volume(&body).unwrap().value;
        let vt = calculus::volume(&scaled).unwrap().value;
        prop_assert!((vt - t.powi(n) * v).abs() <= 1e-12 * vt.max(1e-12));
        let s = calculus::surface_area(&body).unwrap();
        let st = calculus::surface_area(&scaled).unwrap();
        prop_assert!((st - t.powi(n - 1) * s).abs() <= 1e-12 * st.max(1e-12));
    }

    #[test]
    fn mixed_volume_diagonal_and_scaling(
        (k, l) in (2usize..=4).prop_flat_map(|d| (zonotope(d), zonotope(d))),
        t in 0.2f64..2.5,
        s in 0.2f64..2.5,
    ) {
        let n = k.dim() as i32;
        let bk = Body::Zonotope(k);
        let bl = Body::Zonotope(l);
        // V1(K, K) = |K|
        let diag = calculus::mixed_volume_v1(&bk, &bk).unwrap();
        let vol = calculus::volume(&bk).unwrap().value;
        prop_assert!((diag - vol).abs() <= 1e-12 * vol);
        // V1(tK, sL) = t^(n-1) s V1(K, L)
        let v1 = calculus::mixed_volume_v1(&bk, &bl).unwrap();
        let v1_scaled = calculus::mixed_volume_v1(
            &bk.scaled(t).unwrap(),
            &bl.scaled(s).unwrap(),
        )
        .unwrap();
        let expected = t.powi(n - 1) * s * v1;
        prop_assert!((v1_scaled - expected).abs() <= 1e-12 * expected.max(1e-12));
    }

    #[test]
    fn minkowski_first_inequality(
        (k, l) in (2usize..=4).prop_flat_map(|d| (zonotope(d), zonotope(d))),
    ) {
        let bk = Body::Zonotope(k);
        let bl = Body::Zonotope(l);
        let v1 = calculus::mixed_volume_v1(&bk, &bl).unwrap();
        let gap = calculus::minkowski_first_gap(&bk, &bl).unwrap();
        prop_assert!(gap >= -tol::REL_EXACT * v1, "gap {gap} vs V1 {v1}");
    }

    #[test]
    fn minkowski_equality_for_homothets(z in any_zonotope(), t in 0.2f64..3.0) {
        let k = Body::Zonotope(z);
        let l = k.scaled(t).unwrap();
        let v1 = calculus::mixed_volume_v1(&k, &l).unwrap();
        let gap = calculus::minkowski_first_gap(&k, &l).unwrap();
        prop_assert!(gap.abs() <= 1e-12 * v1);
    }

    #[test]
    fn scalar_rotation_invariance((z, u) in (2usize..=4).prop_flat_map(|d| (zonotope(d), rotation(d)))) {
        let body = Body::Zonotope(z.clone());
        let rotated = Body::Zonotope(rotated_zonotope(&u, &z));
        let v = calculus::volume(&body).unwrap().value;
        let vr = calculus::volume(&rotated).unwrap().value;
        prop_assert!((v - vr).abs() <= tol::REL_EXACT * v);
        let s = calculus::surface_area(&body).unwrap();
        let sr = calculus::surface_area(&rotated).unwrap();
        prop_assert!((s - sr).abs() <= tol::REL_EXACT * s);
    }

    #[test]
    fn steiner_quotient_remainder_is_pi_eps(z in zonotope(2)) {
        let body = Body::Zonotope(z.clone());
        let area = calculus::volume(&body).unwrap().value;
        let perimeter = calculus::surface_area(&body).unwrap();
        for eps in [1e-2, 1e-3, 1e-4] {
            let quotient = (calculus::steiner_2d(&z, eps).unwrap() - area) / eps;
            let remainder = quotient - perimeter;
            prop_assert!(
                (remainder - std::f64::consts::PI * eps).abs() <= 1e-10,
                "eps {eps}: remainder {remainder}"
            );
        }
    }
}

// ---------------------------------------------------------------------------
// Projections
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cauchy_matches_projected_determinant(
        (z, xi) in (2usize..=4).prop_flat_map(|d| (zonotope(d), direction(d))),
    ) {
        let body = Body::Zonotope(z.clone());
        let cauchy = shadows::projection_volume(&body, &xi).unwrap();
        let projected = shadows::project_zonotope(&z, &xi).unwrap();
        let det = if z.dim() == 2 {
            // 1-dimensional shadow: length = 2 sum |w_j|
            2.0 * projected.generators().iter().map(|g| norm(g)).sum::<f64>()
        } else {
            calculus::volume(&Body::Zonotope(projected)).unwrap().value
        };
        prop_assert!(
            (cauchy - det).abs() <= tol::REL_EXACT * det.max(1e-12),
            "cauchy {cauchy} vs determinant {det}"
        );
    }

    #[test]
    fn projection_body_support_identity(
        (z, xi) in (2usize..=4).prop_flat_map(|d| (zonotope(d), direction(d))),
    ) {
        let body = Body::Zonotope(z);
        let pi_body = shadows::projection_body(&body).unwrap();
        let s = pi_body.support(xi.coords()).unwrap();
        let p = shadows::projection_volume(&body, &xi).unwrap();
        prop_assert!((s - p).abs() <= tol::REL_CLOSED_FORM * p.max(1e-12));
    }

    #[test]
    fn projection_volume_homogeneity(
        (z, xi) in (2usize..=4).prop_flat_map(|d| (zonotope(d), direction(d))),
        t in 0.2f64..3.0,
    ) {
        let n = z.dim() as i32;
        let body = Body::Zonotope(z);
        let p = shadows::projection_volume(&body, &xi).unwrap();
        let pt = shadows::projection_volume(&body.scaled(t).unwrap(), &xi).unwrap();
        prop_assert!((pt - t.powi(n - 1) * p).abs() <= 1e-12 * pt.max(1e-12));
    }

    #[test]
    fn projection_rotation_equivariance(
        (z, xi, u) in (2usize..=4).prop_flat_map(|d| (zonotope(d), direction(d), rotation(d))),
    ) {
        let p = shadows::projection_volume(&Body::Zonotope(z.clone()), &xi).unwrap();
        let rotated = rotated_zonotope(&u, &z);
        let rotated_xi = Direction::normalized(rotate(&u, xi.coords())).unwrap();
        let pr = shadows::projection_volume(&Body::Zonotope(rotated), &rotated_xi).unwrap();
        prop_assert!((p - pr).abs() <= tol::REL_EXACT * p.max(1e-12));
    }

    #[test]
    fn minkowski_sums_of_projection_bodies_stay_projection_bodies(
        (z1, z2, xi) in (2usize..=3).prop_flat_map(|d| (zonotope(d), zonotope(d), direction(d))),
    ) {
        // Pi is additive in the surface measure, so the Minkowski sum of two
        // projection bodies is again a projection body: its support is the
        // sum of the two shadow functions.
        let pi1 = shadows::projection_body(&Body::Zonotope(z1.clone())).unwrap();
        let pi2 = shadows::projection_body(&Body::Zonotope(z2.clone())).unwrap();
        let (Body::Zonotope(pz1), Body::Zonotope(pz2)) = (&pi1, &pi2) else {
            panic!("projection bodies of zonotopes are zonotopes");
        };
        // Projection bodies can carry more segments than the enumeration
        // cap; the sum only needs support evaluations, so lift the cap.
        let dim = pz1.dim();
        let mut combined = pz1.generators().to_vec();
        combined.extend_from_slice(pz2.generators());
        let cap = combined.len();
        let sum = Zonotope::with_cap(dim, combined, cap).unwrap();
        let support = sum.support(xi.coords()).unwrap();
        let shadows_sum = shadows::projection_volume(&Body::Zonotope(z1), &xi).unwrap()
            + shadows::projection_volume(&Body::Zonotope(z2), &xi).unwrap();
        prop_assert!(
            (support - shadows_sum).abs() <= tol::REL_CLOSED_FORM * support.max(1e-12)
        );
    }

    #[test]
    fn shadow_perimeter_is_continuous_along_great_circles(
        z in zonotope(3),
        phase in 0.0f64..std::f64::consts::TAU,
    ) {
        // Lipschitz bound in the angle metric: 4 sum_j |v_j|.
        let lip = 4.0 * z.generators().iter().map(|g| norm(g)).sum::<f64>();
        let steps = 64;
        let delta = 0.01;
        let mut previous = None;
        for i in 0..steps {
            let theta = phase + delta * i as f64;
            let xi = Direction::normalized(vec![theta.cos(), theta.sin() * 0.8, theta.sin() * 0.6])
                .unwrap();
            let s = shadows::projection_surface_area(&z, &xi).unwrap();
            if let Some(prev) = previous {
                let jump: f64 = s - prev;
                prop_assert!(
                    jump.abs() <= lip * delta * 1.05 + 1e-9,
                    "jump {jump} exceeds Lipschitz bound {lip} * {delta}"
                );
            }
            previous = Some(s);
        }
    }
}

// ---------------------------------------------------------------------------
// Inequality checks
// ---------------------------------------------------------------------------

fn quick_cfg(dim: usize) -> CheckConfig {
    let mut cfg = CheckConfig::for_dim(dim);
    cfg.sphere = SphereMinConfig { coarse_samples: 512, restarts: 4, shrink_tol: 1e-7 };
    cfg
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn homothety_family_passes_separation(z in zonotope(3), r in 0.15f64..0.95) {
        let k = Body::Zonotope(z.scaled(r).unwrap());
        let cfg = quick_cfg(3);
        let sep = inequalities::separation_check(&k, &z, &cfg).unwrap();
        prop_assert_eq!(sep.verdict, Verdict::Passed);
        let diff = inequalities::volume_difference_check(&k, &z, &cfg).unwrap();
        prop_assert_eq!(diff.verdict, Verdict::Passed);
    }

    #[test]
    fn check_verdicts_are_scale_invariant(z in zonotope(3), t in 0.3f64..3.0) {
        let cfg = quick_cfg(3);
        let k = Body::Zonotope(z.scaled(0.6).unwrap());
        let l_scaled = z.scaled(t).unwrap();
        let k_scaled = k.scaled(t).unwrap();

        let a = inequalities::separation_check(&k, &z, &cfg).unwrap();
        let b = inequalities::separation_check(&k_scaled, &l_scaled, &cfg).unwrap();
        prop_assert_eq!(a.verdict, b.verdict);
        prop_assert!((a.relative_gap() - b.relative_gap()).abs() <= tol::REL_EXACT);

        let h1 = inequalities::hyperplane_check(&Body::Zonotope(z.clone()), &cfg).unwrap();
        let h2 = inequalities::hyperplane_check(&Body::Zonotope(l_scaled.clone()), &cfg).unwrap();
        prop_assert_eq!(h1.verdict, h2.verdict);
        prop_assert!((h1.relative_gap() - h2.relative_gap()).abs() <= tol::REL_EXACT);

        let s1 = inequalities::surface_hyperplane_check(&Body::Zonotope(z.clone()), &cfg).unwrap();
        let s2 = inequalities::surface_hyperplane_check(&Body::Zonotope(l_scaled), &cfg).unwrap();
        prop_assert_eq!(s1.verdict, s2.verdict);
        prop_assert!((s1.relative_gap() - s2.relative_gap()).abs() <= tol::REL_EXACT);
    }

    #[test]
    fn separation_margin_is_positive_and_continuous_in_r(z in zonotope(3)) {
        let cfg = quick_cfg(3);
        let body = Body::Zonotope(z.clone());
        let vol_term = calculus::volume(&body).unwrap().value.powf(2.0 / 3.0);
        let grid = [0.3, 0.5, 0.7, 0.9];
        let mut margins = Vec::new();
        for r in grid {
            let k = body.scaled(r).unwrap();
            let report = inequalities::separation_check(&k, &z, &cfg).unwrap();
            prop_assert_eq!(report.verdict, Verdict::Passed);
            let margin = report.gap;
            prop_assert!(margin > 0.0, "margin {margin} at r = {r}");
            margins.push(margin);
        }
        for (i, pair) in grid.windows(2).enumerate() {
            let step = pair[1].powi(2) - pair[0].powi(2);
            let delta = (margins[i + 1] - margins[i]).abs();
            prop_assert!(
                delta <= step * vol_term * (1.0 + 1e-6) + 1e-9,
                "margin jump {delta} over r-step {step}"
            );
        }
    }
}

// ---------------------------------------------------------------------------
// Oracle
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn hrep_membership_brackets_the_boundary(
        (z, coeffs, w) in (2usize..=4).prop_flat_map(|d| {
            (
                zonotope(d),
                prop::collection::vec(-1.0f64..1.0, 8),
                direction(d),
            )
        }),
    ) {
        let hrep = oracle::zonotope_facets(&z).unwrap();
        // Interior point by construction: sum t_j v_j with |t_j| <= 1.
        let mut inside = vec![0.0; z.dim()];
        for (g, t) in z.generators().iter().zip(&coeffs) {
            for (acc, c) in inside.iter_mut().zip(g) {
                *acc += t * c;
            }
        }
        prop_assert!(hrep.contains(&inside).unwrap());

        // The support point in direction w, scaled by 2, exits the body.
        let mut vertex = vec![0.0; z.dim()];
        for g in z.generators() {
            let sign = if dot(g, w.coords()) >= 0.0 { 1.0 } else { -1.0 };
            for (acc, c) in vertex.iter_mut().zip(g) {
                *acc += sign * c;
            }
        }
        prop_assume!(norm(&vertex) > 1e-6);
        let outside: Vec<f64> = vertex.iter().map(|x| 2.0 * x).collect();
        prop_assert!(!hrep.contains(&outside).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn mc_volume_brackets_the_determinant_volume(z in any_zonotope(), seed in 0u64..1 << 20) {
        let exact = calculus::volume(&Body::Zonotope(z.clone())).unwrap().value;
        let est = oracle::mc_volume(&z, 50_000, seed).unwrap();
        // 5 sigma keeps the property sound while leaving honest randomness room.
        prop_assert!(
            (est.estimate - exact).abs() <= 5.0 * est.stderr.max(1e-12 * exact),
            "estimate {} stderr {} exact {exact}",
            est.estimate,
            est.stderr
        );
    }

    #[test]
    fn cauchy_surface_area_brackets_the_exact_value(z in any_zonotope(), seed in 0u64..1 << 20) {
        let body = Body::Zonotope(z);
        let exact = calculus::surface_area(&body).unwrap();
        let est = calculus::cauchy_surface_area(&body, 20_000, seed).unwrap();
        prop_assert!(
            (est.estimate - exact).abs() <= 5.0 * est.stderr.max(1e-12 * exact),
            "estimate {} stderr {} exact {exact}",
            est.estimate,
            est.stderr
        );
    }
}

// ---------------------------------------------------------------------------
// Serde
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn measure_roundtrips_through_json(z in any_zonotope()) {
        let measure = z.surface_measure().unwrap();
        let json = serde_json::to_string(&measure).unwrap();
        let back: FacetMeasure = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.atoms().len(), measure.atoms().len());
        for (a, b) in back.atoms().iter().zip(measure.atoms()) {
            prop_assert_eq!(a.area, b.area);
            prop_assert_eq!(a.normal.coords(), b.normal.coords());
        }
    }
}
