use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Evaluator, IdentityId, IdentityPoint, Shape};
use crate::algebra::Rational;
use crate::families::{BaseKind, Classical};

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointOutcome {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointResult {
    pub point: IdentityPoint,
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
    pub pass: bool,
    pub category: PointOutcome,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ReportSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errored: usize,
}

/// Outcome of checking one identity over a grid. Points are sorted by
/// their field order, independent of evaluation order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub identity: IdentityId,
    pub points: Vec<PointResult>,
    pub summary: ReportSummary,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0 && self.summary.errored == 0
    }
}

const LAMBDAS: [(i64, i64); 4] = [(2, 1), (1, 2), (-2, 1), (3, 1)];
const DEGREES: [u32; 3] = [1, 2, 3];
const POWER_SUM_CD: [u32; 3] = [1, 2, 3];
const SHIFTED_CD: [u32; 3] = [1, 3, 5];

fn bases_for(id: IdentityId) -> Vec<BaseKind> {
    let graded = |f: fn(u32) -> BaseKind| DEGREES.iter().map(|&s| f(s)).collect::<Vec<_>>();
    match id.base_constraint() {
        super::BaseConstraint::Kind("gould_hopper") => graded(BaseKind::GouldHopper),
        super::BaseConstraint::Kind("laguerre") => graded(BaseKind::Laguerre),
        super::BaseConstraint::Kind(_) => graded(BaseKind::TruncExp),
        super::BaseConstraint::Any => {
            let mut all = vec![BaseKind::Unit, BaseKind::Exp];
            all.extend(graded(BaseKind::GouldHopper));
            all.extend(graded(BaseKind::Laguerre));
            all.extend(graded(BaseKind::TruncExp));
            all
        }
    }
}

/// `(c, d)` pairs checked for a shape. The Euler and Genocchi table rows
/// carry the alternating sums `M_l(c-1; lambda)`, whose generating
/// function depends on the parity of `c`; their power-sum shape holds for
/// `c = d (mod 2)` and the default grid keeps only those pairs.
fn cd_pairs(id: IdentityId, shape: Shape) -> Vec<(u32, u32)> {
    let values: &[u32] = match shape {
        Shape::PowerSum => &POWER_SUM_CD,
        Shape::Shifted => &SHIFTED_CD,
    };
    let parity_bound = shape == Shape::PowerSum
        && matches!(
            id.table_family(),
            Some(Classical::Euler) | Some(Classical::Genocchi)
        );
    let mut out = Vec::new();
    for &c in values {
        for &d in values {
            if parity_bound && c % 2 != d % 2 {
                continue;
            }
            out.push((c, d));
        }
    }
    out
}

/// The compiled-in grid for `id`.
///
/// `m in 1..=3`, `n in 0..=8`, `lambda in {2, 1/2, -2, 3}` (1 for the
/// classical table), `(mu, nu) in {0,1}^2` where the identity leaves them
/// free, every admissible base with degree 1..=3, and the sample point
/// `x = 1/2, y = 1/3, X = 1/5, Y = 2/7`.
pub fn default_grid(id: IdentityId) -> Vec<IdentityPoint> {
    let lambdas: Vec<Rational> = if id.is_classical_table() {
        vec![Rational::one()]
    } else {
        LAMBDAS.iter().map(|&(p, q)| Rational::frac(p, q)).collect()
    };
    let mu_nu: Vec<(i32, u32)> = if id.is_table() {
        // fixed by the row; normalize() fills them in
        vec![(0, 0)]
    } else {
        vec![(0, 0), (0, 1), (1, 0), (1, 1)]
    };
    let mut grid = Vec::new();
    for shape in id.shapes() {
        for (c, d) in cd_pairs(id, shape) {
            for base in bases_for(id) {
                for lambda in &lambdas {
                    for &(mu, nu) in &mu_nu {
                        for m in 1..=3 {
                            for n in 0..=8 {
                                let pt = IdentityPoint {
                                    shape,
                                    n,
                                    m,
                                    c,
                                    d,
                                    lambda: lambda.clone(),
                                    mu,
                                    nu,
                                    base,
                                    x: Rational::frac(1, 2),
                                    y: Rational::frac(1, 3),
                                    big_x: Rational::frac(1, 5),
                                    big_y: Rational::frac(2, 7),
                                };
                                grid.push(id.normalize(&pt).unwrap_or(pt));
                            }
                        }
                    }
                }
            }
        }
    }
    grid.sort();
    grid.dedup();
    grid
}

fn evaluate(eval: &Evaluator, id: IdentityId, pt: &IdentityPoint) -> PointResult {
    let point = id.normalize(pt).unwrap_or_else(|_| pt.clone());
    match eval.sides(id, pt) {
        Ok(s) => {
            let pass = s.holds();
            PointResult {
                point,
                lhs: Some(s.lhs),
                rhs: Some(s.rhs),
                pass,
                category: if pass {
                    PointOutcome::Pass
                } else {
                    PointOutcome::Fail
                },
                error: None,
            }
        }
        Err(e) => PointResult {
            point,
            lhs: None,
            rhs: None,
            pass: false,
            category: PointOutcome::Error,
            error: Some(e.to_string()),
        },
    }
}

/// Checks `id` at every point of `grid`. Evaluation runs on the current
/// rayon pool; per-point errors are recorded, never propagated.
pub fn verify_grid(id: IdentityId, grid: &[IdentityPoint]) -> VerificationReport {
    verify_grid_with(&Evaluator::new(), id, grid)
}

pub fn verify_grid_with(
    eval: &Evaluator,
    id: IdentityId,
    grid: &[IdentityPoint],
) -> VerificationReport {
    let mut points: Vec<PointResult> = grid.par_iter().map(|pt| evaluate(eval, id, pt)).collect();
    points.sort_by(|a, b| a.point.cmp(&b.point));

    let mut summary = ReportSummary {
        total: points.len(),
        ..Default::default()
    };
    for p in &points {
        match p.category {
            PointOutcome::Pass => summary.passed += 1,
            PointOutcome::Fail => summary.failed += 1,
            PointOutcome::Error => summary.errored += 1,
        }
    }
    VerificationReport {
        schema: REPORT_SCHEMA,
        identity: id,
        points,
        summary,
    }
}
