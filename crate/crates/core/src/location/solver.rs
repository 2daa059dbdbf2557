//! Closed-form solutions.
//!
//! With `a = max(w + r1 − r2)`, `b = max(w − r1 + r2)`, `c = max(w + r1 + r2)`
//! and `d = max(w − r1 − r2)` over all points, the objective becomes
//! `max(a − x1 + x2, b + x1 − x2, c − x1 − x2, d + x1 + x2)`, whose minimum is
//! `λ = max(a + b, c + d) / 2`, attained on the segment
//!
//! ```text
//! x1(α) = α(a − d)/2 − (1 − α)(b − c)/2
//! x2(α) = (2α − 1)λ − α(a + d)/2 + (1 − α)(b + c)/2,    0 ≤ α ≤ 1.
//! ```
//!
//! A rotated-rectangle constraint is folded in by normalizing the objective by
//! its unconstrained optimum `λ0` and taking the maximum with the constraint
//! offsets coefficient-wise. The merged problem has the same form, its
//! minimum is nonnegative, and it is zero exactly when the feasible set meets
//! the unconstrained minimizers.
//!
//! All arithmetic here is conventional; the tropical layer is used to
//! cross-check it.

use crate::error::{Error, Result};
use crate::tropical::{Tropical, TropicalMatrix, TropicalVector};
use crate::TOLERANCE;

use super::{
    validate_points, CaseTag, Coefficients, Point2, ProblemInstance, RotatedRectConstraint,
    SolutionReport, WeightedPoint,
};

/// `(a0, b0, c0, d0)` for a non-empty point set.
pub fn unconstrained_coefficients(points: &[WeightedPoint]) -> Result<Coefficients> {
    if points.is_empty() {
        return Err(Error::Domain("coefficients need at least one point".into()));
    }
    let mut co = [f64::NEG_INFINITY; 4];
    for p in points {
        co[0] = co[0].max(p.w + p.r1 - p.r2);
        co[1] = co[1].max(p.w - p.r1 + p.r2);
        co[2] = co[2].max(p.w + p.r1 + p.r2);
        co[3] = co[3].max(p.w - p.r1 - p.r2);
    }
    if co.iter().any(|v| !v.is_finite()) {
        return Err(Error::Domain(
            "points must have finite coordinates and weights".into(),
        ));
    }
    Ok(Coefficients::from_conventional(co[0], co[1], co[2], co[3]))
}

/// `λ = max(a + b, c + d) / 2`.
pub fn lambda_from_coefficients(co: &Coefficients) -> Result<f64> {
    let [a, b, c, d] = co.conventional()?;
    Ok(lambda_of(a, b, c, d))
}

fn lambda_of(a: f64, b: f64, c: f64, d: f64) -> f64 {
    (a + b).max(c + d) / 2.0
}

/// The matrix with rows `(𝟘, a, 𝟘)`, `(b, 𝟘, c)`, `(𝟘, d, 𝟘)`. With
/// `y = (x1, x2, x1⁻¹)` the objective equals `y⁻ ⊗ A ⊗ y`.
pub fn build_extended_matrix(co: &Coefficients) -> Result<TropicalMatrix> {
    co.conventional()?;
    let z = Tropical::ZERO;
    TropicalMatrix::from_rows(&[vec![z, co.a, z], vec![co.b, z, co.c], vec![z, co.d, z]])
}

/// `x(α)` for coefficients `[a, b, c, d]` and their optimum `λ`.
pub fn closed_form_point(co: &[f64; 4], lambda: f64, alpha: f64) -> Result<Point2> {
    check_alpha(alpha)?;
    let [a, b, c, d] = *co;
    let x1 = alpha / 2.0 * (a - d) - (1.0 - alpha) / 2.0 * (b - c);
    let x2 = (2.0 * alpha - 1.0) * lambda - alpha / 2.0 * (a + d) + (1.0 - alpha) / 2.0 * (b + c);
    Ok(Point2::new(x1, x2))
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::Domain(format!(
            "alpha must lie in [0, 1], got {alpha}"
        )));
    }
    Ok(())
}

fn case_tag(co: &[f64; 4]) -> CaseTag {
    let gap = (co[0] + co[1]) - (co[2] + co[3]);
    if gap.abs() <= TOLERANCE {
        CaseTag::Tie
    } else if gap > 0.0 {
        CaseTag::AbDominant
    } else {
        CaseTag::CdDominant
    }
}

fn report_for(
    co: Coefficients,
    alpha: f64,
    lambda0: Option<f64>,
    exact: impl FnOnce(f64) -> bool,
) -> Result<SolutionReport> {
    check_alpha(alpha)?;
    let conv = co.conventional()?;
    let lambda = lambda_of(conv[0], conv[1], conv[2], conv[3]);
    Ok(SolutionReport {
        lambda,
        lambda0,
        alpha,
        point: closed_form_point(&conv, lambda, alpha)?,
        endpoint_alpha0: closed_form_point(&conv, lambda, 0.0)?,
        endpoint_alpha1: closed_form_point(&conv, lambda, 1.0)?,
        exact: exact(lambda),
        case_tag: case_tag(&conv),
        coefficients: co,
    })
}

/// Solves the problem without constraints.
pub fn solve_unconstrained(points: &[WeightedPoint], alpha: f64) -> Result<SolutionReport> {
    validate_points(points)?;
    let co = unconstrained_coefficients(points)?;
    report_for(co, alpha, None, |_| true)
}

/// `(max(a0 − λ0, a1), …, max(d0 − λ0, d1))`.
pub fn merge_constraints(
    co0: &Coefficients,
    lambda0: f64,
    cons: &RotatedRectConstraint,
) -> Result<Coefficients> {
    let norm = Tropical::from_conventional(lambda0)?.inv()?;
    co0.conventional()?;
    Ok(Coefficients::new(
        norm * co0.a + cons.a1,
        norm * co0.b + cons.b1,
        norm * co0.c + cons.c1,
        norm * co0.d + cons.d1,
    ))
}

/// Solves the problem restricted to the instance's constraint, or the free
/// problem if it has none.
///
/// The report is exact when the merged minimum is zero; the segment then lies
/// in the feasible set and attains the unconstrained optimum. Otherwise the
/// segment minimizes the merged objective and may be infeasible.
pub fn solve_constrained(instance: &ProblemInstance, alpha: f64) -> Result<SolutionReport> {
    let Some(cons) = instance.constraint() else {
        return solve_unconstrained(instance.points(), alpha);
    };
    let co0 = unconstrained_coefficients(instance.points())?;
    let lambda0 = lambda_from_coefficients(&co0)?;
    let merged = merge_constraints(&co0, lambda0, cons)?;
    report_for(merged, alpha, Some(lambda0), |lambda| {
        lambda.abs() <= TOLERANCE
    })
}

/// Whether a solution `y` of the extended problem projects back to the
/// plane, i.e. `y1 ⊗ y3 = 𝟙`.
pub fn proper_solution_check(y: &TropicalVector) -> Result<bool> {
    if y.len() != 3 {
        return Err(Error::Shape(format!(
            "expected a 3-vector, got length {}",
            y.len()
        )));
    }
    Ok((y.get(0) * y.get(2)).approx_eq(Tropical::ONE, TOLERANCE))
}
