//! Check orchestration for `verify`: which checks run on which bodies, how
//! degeneracy maps to not-applicable rows, and the optional oracle rows.

use shadowgauge::bodies::{make_cross_polytope, Body, Zonotope};
use shadowgauge::calculus;
use shadowgauge::inequalities::{
    self, ball_equality_gap, CheckConfig, CheckName, CheckReport, ToleranceInfo, Verdict,
};
use shadowgauge::oracle;
use shadowgauge::shadows::SphereMinConfig;
use shadowgauge::tol;

use crate::report::ReportRow;

/// Options shared by the whole verify run.
#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub coarse_samples: Option<usize>,
    pub restarts: Option<usize>,
    pub tol_rel: Option<f64>,
    pub with_oracle: bool,
    /// Seed for the oracle's Monte Carlo rows.
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { coarse_samples: None, restarts: None, tol_rel: None, with_oracle: false, seed: 0 }
    }
}

/// Homothety ratios used for the separation pairs of each zonotope.
pub const HOMOTHETY_RATIOS: [f64; 2] = [0.5, 0.9];

const ORACLE_VOLUME_SAMPLES: usize = 200_000;
const ORACLE_SURFACE_SAMPLES: usize = 100_000;

fn check_config(dim: usize, opts: &SuiteOptions) -> CheckConfig {
    let mut cfg = CheckConfig::for_dim(dim);
    if let Some(c) = opts.coarse_samples {
        cfg.sphere.coarse_samples = c;
    }
    if let Some(r) = opts.restarts {
        cfg.sphere.restarts = r;
    }
    cfg.tol_rel = opts.tol_rel;
    cfg
}

/// Runs every applicable check for the named bodies, in input order.
pub fn run_suite(bodies: &[(String, Body)], opts: &SuiteOptions) -> anyhow::Result<Vec<ReportRow>> {
    let mut rows = Vec::new();
    for (name, body) in bodies {
        match body {
            Body::Zonotope(z) => run_zonotope_checks(name, z, bodies, opts, &mut rows)?,
            Body::Ball(_) => run_ball_checks(name, body, opts, &mut rows)?,
            // Facet bodies participate as K in the separation pairs of each
            // zonotope; they have no standalone check.
            Body::Facet(_) => {}
        }
        if opts.with_oracle {
            run_oracle_rows(name, body, opts, &mut rows)?;
        }
    }
    Ok(rows)
}

fn run_zonotope_checks(
    name: &str,
    z: &Zonotope,
    bodies: &[(String, Body)],
    opts: &SuiteOptions,
    rows: &mut Vec<ReportRow>,
) -> anyhow::Result<()> {
    let cfg = check_config(z.dim(), opts);
    if !z.is_full_rank() {
        rows.push(ReportRow::new(
            name,
            None,
            degenerate_report(
                CheckName::Hyperplane,
                format!("zonotope is rank-deficient (rank {} < {})", z.rank(), z.dim()),
                &cfg,
            ),
        ));
        return Ok(());
    }

    let body = Body::Zonotope(z.clone());
    rows.push(ReportRow::new(name, None, inequalities::hyperplane_check(&body, &cfg)?));
    if z.dim() >= 3 {
        rows.push(ReportRow::new(
            name,
            None,
            inequalities::surface_hyperplane_check(&body, &cfg)?,
        ));
    }

    // Separation pairs: the homothety family, the cross-polytope, and any
    // facet bodies supplied in the input set.
    let mut pairs: Vec<(String, Body)> = HOMOTHETY_RATIOS
        .iter()
        .map(|&r| (format!("{name} scaled by {r}"), body.scaled(r).expect("r > 0")))
        .collect();
    pairs.push((
        format!("cross_polytope dim {}", z.dim()),
        Body::Facet(make_cross_polytope(z.dim(), 1.0).expect("dim >= 2")),
    ));
    for (other_name, other) in bodies {
        if let Body::Facet(f) = other {
            if f.dim() == z.dim() {
                pairs.push((other_name.clone(), other.clone()));
            }
        }
    }

    for (pair_name, k) in &pairs {
        rows.push(ReportRow::new(
            name,
            Some(pair_name.clone()),
            inequalities::separation_check(k, z, &cfg)?,
        ));
        rows.push(ReportRow::new(
            name,
            Some(pair_name.clone()),
            inequalities::volume_difference_check(k, z, &cfg)?,
        ));
    }
    Ok(())
}

fn run_ball_checks(
    name: &str,
    body: &Body,
    opts: &SuiteOptions,
    rows: &mut Vec<ReportRow>,
) -> anyhow::Result<()> {
    let cfg = check_config(body.dim(), opts);
    rows.push(ReportRow::new(name, None, inequalities::hyperplane_check(body, &cfg)?));
    if body.dim() >= 3 {
        rows.push(ReportRow::new(
            name,
            None,
            inequalities::surface_hyperplane_check(body, &cfg)?,
        ));
        rows.push(ReportRow::new(name, None, ball_equality_report(body.dim(), &cfg)?));
    }
    Ok(())
}

/// Sharpness witness: the surface hyperplane inequality's two sides at the
/// unit ball, from closed forms. Passes when the relative gap vanishes.
fn ball_equality_report(n: usize, cfg: &CheckConfig) -> anyhow::Result<CheckReport> {
    let vn = inequalities::unit_ball_volume(n)?;
    let lhs = n as f64 * vn;
    let gap = ball_equality_gap(n)?;
    let rhs = lhs * (1.0 - gap);
    let tolerances = ToleranceInfo {
        tol_rel: tol::BALL_EQUALITY_GAP,
        tol_abs: None,
        coarse_samples: cfg.sphere.coarse_samples,
        restarts: cfg.sphere.restarts,
        refined: false,
    };
    let passed = gap.abs() <= tol::BALL_EQUALITY_GAP;
    Ok(CheckReport {
        name: CheckName::BallEquality,
        lhs,
        rhs,
        gap: lhs - rhs,
        epsilon_star: None,
        witness_xi: None,
        passed,
        verdict: if passed { Verdict::Passed } else { Verdict::Failed },
        reason: None,
        tolerances,
    })
}

fn degenerate_report(name: CheckName, reason: String, cfg: &CheckConfig) -> CheckReport {
    CheckReport {
        name,
        lhs: 0.0,
        rhs: 0.0,
        gap: 0.0,
        epsilon_star: None,
        witness_xi: None,
        passed: false,
        verdict: Verdict::NotApplicable,
        reason: Some(reason),
        tolerances: ToleranceInfo {
            tol_rel: tol::CHECK_TOL_HEURISTIC,
            tol_abs: None,
            coarse_samples: cfg.sphere.coarse_samples,
            restarts: cfg.sphere.restarts,
            refined: false,
        },
    }
}

fn run_oracle_rows(
    name: &str,
    body: &Body,
    opts: &SuiteOptions,
    rows: &mut Vec<ReportRow>,
) -> anyhow::Result<()> {
    let cfg = check_config(body.dim(), opts);
    if let Body::Zonotope(z) = body {
        if z.is_full_rank() {
            let exact = calculus::volume(body)?.value;
            let est = oracle::mc_volume(z, ORACLE_VOLUME_SAMPLES, opts.seed)?;
            rows.push(ReportRow::new(
                name,
                None,
                oracle_report(CheckName::OracleVolume, exact, est.estimate, est.stderr, &cfg),
            ));
        }
    }
    match body {
        Body::Zonotope(z) if !z.is_full_rank() => {}
        _ => {
            let exact = calculus::surface_area(body)?;
            let est = calculus::cauchy_surface_area(body, ORACLE_SURFACE_SAMPLES, opts.seed)?;
            rows.push(ReportRow::new(
                name,
                None,
                oracle_report(CheckName::OracleSurfaceArea, exact, est.estimate, est.stderr, &cfg),
            ));
        }
    }
    Ok(())
}

/// Oracle agreement row: exact value vs Monte Carlo estimate, passing
/// within three standard errors.
fn oracle_report(
    name: CheckName,
    exact: f64,
    estimate: f64,
    stderr: f64,
    cfg: &CheckConfig,
) -> CheckReport {
    let band = 3.0 * stderr + tol::REL_CLOSED_FORM * exact.abs();
    let passed = (exact - estimate).abs() <= band;
    CheckReport {
        name,
        lhs: exact,
        rhs: estimate,
        gap: exact - estimate,
        epsilon_star: None,
        witness_xi: None,
        passed,
        verdict: if passed { Verdict::Passed } else { Verdict::Failed },
        reason: None,
        tolerances: ToleranceInfo {
            tol_rel: 0.0,
            tol_abs: Some(band),
            coarse_samples: cfg.sphere.coarse_samples,
            restarts: cfg.sphere.restarts,
            refined: false,
        },
    }
}

/// Suite-level sphere configuration echo for the report header.
pub fn effective_sphere_config(dim: usize, opts: &SuiteOptions) -> SphereMinConfig {
    check_config(dim, opts).sphere
}
