use crate::error::Result;

use super::{
    lambda_from_coefficients, rectilinear_distance, unconstrained_coefficients, Point2,
    ProblemInstance, RotatedRectConstraint, WeightedPoint,
};

/// `φ(x) = max_i (ρ(r_i, x) + w_i)`; `-∞` for an empty point set.
pub fn evaluate_objective(points: &[WeightedPoint], x: Point2) -> f64 {
    points
        .iter()
        .map(|p| rectilinear_distance(p.position(), x) + p.w)
        .fold(f64::NEG_INFINITY, f64::max)
}

/// `φ₁(x)`, the largest violation among the present half-plane constraints;
/// `-∞` when none is present. `x` is feasible iff `φ₁(x) ≤ 0`.
pub fn evaluate_constraint(cons: &RotatedRectConstraint, x: Point2) -> f64 {
    let terms = [
        (cons.a1, -x.x1 + x.x2),
        (cons.b1, x.x1 - x.x2),
        (cons.c1, -x.x1 - x.x2),
        (cons.d1, x.x1 + x.x2),
    ];
    terms
        .into_iter()
        .filter_map(|(offset, linear)| offset.value().map(|o| o + linear))
        .fold(f64::NEG_INFINITY, f64::max)
}

pub fn is_feasible(cons: &RotatedRectConstraint, x: Point2, tol: f64) -> bool {
    evaluate_constraint(cons, x) <= tol
}

/// `ψ(x) = max(φ(x) − λ0, φ₁(x))` where `λ0` is the unconstrained optimum.
/// Without a constraint this is `φ(x) − λ0`.
pub fn evaluate_merged(instance: &ProblemInstance, x: Point2) -> Result<f64> {
    let lambda0 = lambda_from_coefficients(&unconstrained_coefficients(instance.points())?)?;
    let phi0 = evaluate_objective(instance.points(), x) - lambda0;
    Ok(match instance.constraint() {
        Some(cons) => phi0.max(evaluate_constraint(cons, x)),
        None => phi0,
    })
}
