use crate::error::{Error, Result};
use crate::location::{
    evaluate_constraint, evaluate_objective, lambda_from_coefficients, merge_constraints,
    unconstrained_coefficients, Point2, ProblemInstance, SolutionReport,
};
use crate::TOLERANCE;

use super::grid::{grid_search_min_with, GridMinimum, GridSpec, ObjectiveMode, SearchStrategy};

/// The values of `α` at which attainment is checked.
pub const AUDIT_ALPHAS: [f64; 3] = [0.0, 0.5, 1.0];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaResidual {
    pub alpha: f64,
    pub point: Point2,
    /// `|f(x(α)) − λ|` for the objective the report describes.
    pub residual: f64,
}

/// Outcome of auditing a report against a grid search.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationVerdict {
    /// `Raw` for unconstrained reports, `Merged` for constrained ones.
    pub mode: ObjectiveMode,
    pub grid: GridMinimum,
    pub reported_lambda: f64,
    /// `grid minimum − λ`; must lie in `[-TOLERANCE, gap_tolerance]`.
    pub grid_gap: f64,
    pub gap_tolerance: f64,
    pub residuals: Vec<AlphaResidual>,
    /// Whether `x(0)` and `x(1)` satisfy the constraint (constrained reports).
    pub endpoints_feasible: Option<[bool; 2]>,
    /// `max |φ(endpoint) − λ0|` (exact constrained reports).
    pub endpoint_objective_gap: Option<f64>,
    pub failures: Vec<String>,
}

impl VerificationVerdict {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Audits `report` against a grid search of the matching objective over
/// `spec` and against direct evaluation at sampled `α`.
///
/// The grid gap tolerance is `3 × step`: the objectives are 1-Lipschitz in
/// the rectilinear norm and every point is within `step` of a grid point in
/// that norm.
pub fn verify_report(
    instance: &ProblemInstance,
    report: &SolutionReport,
    spec: &GridSpec,
) -> Result<VerificationVerdict> {
    check_same_instance(instance, report)?;
    let points = instance.points();
    let cons = instance.constraint();
    let mode = if cons.is_some() {
        ObjectiveMode::Merged
    } else {
        ObjectiveMode::Raw
    };
    let grid = grid_search_min_with(points, cons, spec, mode, SearchStrategy::Pruned)?;

    let lambda = report.lambda;
    let gap_tolerance = 3.0 * spec.step;
    let grid_gap = grid.value - lambda;
    let mut failures = Vec::new();
    if grid_gap < -TOLERANCE {
        failures.push(format!(
            "grid found {} below the reported optimum {lambda}",
            grid.value
        ));
    }
    if grid_gap > gap_tolerance + TOLERANCE {
        failures.push(format!(
            "grid minimum {} exceeds the reported optimum {lambda} by more than {gap_tolerance}",
            grid.value
        ));
    }

    let lambda0 = report.lambda0.unwrap_or(lambda);
    let objective = |x: Point2| {
        let phi = evaluate_objective(points, x);
        match cons {
            Some(c) => (phi - lambda0).max(evaluate_constraint(c, x)),
            None => phi,
        }
    };
    let mut residuals = Vec::with_capacity(AUDIT_ALPHAS.len());
    for alpha in AUDIT_ALPHAS {
        let point = report.point_at(alpha)?;
        let residual = (objective(point) - lambda).abs();
        if residual > TOLERANCE {
            failures.push(format!(
                "objective at x({alpha}) misses the optimum by {residual}"
            ));
        }
        residuals.push(AlphaResidual {
            alpha,
            point,
            residual,
        });
    }

    let endpoints = [report.endpoint_alpha0, report.endpoint_alpha1];
    let endpoints_feasible =
        cons.map(|c| endpoints.map(|x| evaluate_constraint(c, x) <= TOLERANCE));
    let mut endpoint_objective_gap = None;
    if let (Some(feasible), true) = (endpoints_feasible, report.exact) {
        if !feasible.iter().all(|&f| f) {
            failures.push("an endpoint of an exact report violates the constraint".into());
        }
        let gap = endpoints
            .iter()
            .map(|&x| (evaluate_objective(points, x) - lambda0).abs())
            .fold(0.0, f64::max);
        if gap > TOLERANCE {
            failures.push(format!(
                "an endpoint of an exact report misses lambda0 by {gap}"
            ));
        }
        endpoint_objective_gap = Some(gap);
    }

    Ok(VerificationVerdict {
        mode,
        grid,
        reported_lambda: lambda,
        grid_gap,
        gap_tolerance,
        residuals,
        endpoints_feasible,
        endpoint_objective_gap,
        failures,
    })
}

fn check_same_instance(instance: &ProblemInstance, report: &SolutionReport) -> Result<()> {
    let co0 = unconstrained_coefficients(instance.points())?;
    let expected = match (instance.constraint(), report.lambda0) {
        (None, None) => co0,
        (Some(cons), Some(_)) => merge_constraints(&co0, lambda_from_coefficients(&co0)?, cons)?,
        (None, Some(_)) => {
            return Err(Error::Usage(
                "constrained report for an unconstrained instance".into(),
            ))
        }
        (Some(_), None) => {
            return Err(Error::Usage(
                "unconstrained report for a constrained instance".into(),
            ))
        }
    };
    if expected != report.coefficients {
        return Err(Error::Usage(
            "report was not produced from this instance".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::location::{solve_constrained, RotatedRectConstraint, WeightedPoint};
    use crate::tropical::Tropical;

    fn two_points() -> Vec<WeightedPoint> {
        vec![
            WeightedPoint::new(0.0, 0.0, 0.0),
            WeightedPoint::new(2.0, 0.0, 0.0),
        ]
    }

    fn with_c1(v: f64) -> ProblemInstance {
        let cons = RotatedRectConstraint {
            c1: Tropical::finite(v),
            ..Default::default()
        };
        ProblemInstance::new(two_points(), Some(cons)).unwrap()
    }

    #[test]
    fn unconstrained_pass() {
        let inst = ProblemInstance::unconstrained(two_points()).unwrap();
        let rep = solve_constrained(&inst, 0.5).unwrap();
        let spec = GridSpec::new(-1.0, 3.0, -1.0, 3.0, 0.01).unwrap();
        let v = verify_report(&inst, &rep, &spec).unwrap();
        assert!(v.passed(), "{:?}", v.failures);
        assert_eq!(v.mode, ObjectiveMode::Raw);
        assert!(v.grid_gap.abs() <= 0.03);
        assert!(v.residuals.iter().all(|r| r.residual <= 1e-9));
        assert_eq!(v.endpoints_feasible, None);
    }

    #[test]
    fn exact_constrained_pass() {
        let inst = with_c1(0.0);
        let rep = solve_constrained(&inst, 0.5).unwrap();
        let spec = GridSpec::auto_for(
            inst.points(),
            inst.constraint(),
            ObjectiveMode::Merged,
            0.01,
            &[],
        )
        .unwrap();
        let v = verify_report(&inst, &rep, &spec).unwrap();
        assert!(v.passed(), "{:?}", v.failures);
        assert_eq!(v.endpoints_feasible, Some([true, true]));
        assert!(v.endpoint_objective_gap.unwrap() <= 1e-9);
    }

    #[test]
    fn approximate_constrained_pass() {
        let inst = with_c1(4.0);
        let rep = solve_constrained(&inst, 0.5).unwrap();
        let spec = GridSpec::new(-1.0, 5.0, -1.0, 5.0, 0.01).unwrap();
        let v = verify_report(&inst, &rep, &spec).unwrap();
        assert!(v.passed(), "{:?}", v.failures);
        assert_eq!(v.mode, ObjectiveMode::Merged);
        assert_eq!(v.endpoints_feasible, Some([false, false]));
        assert_eq!(v.endpoint_objective_gap, None);
    }

    #[test]
    fn wrong_lambda_fails() {
        let inst = ProblemInstance::unconstrained(two_points()).unwrap();
        let mut rep = solve_constrained(&inst, 0.5).unwrap();
        rep.lambda = 0.5;
        let spec = GridSpec::new(-1.0, 3.0, -1.0, 3.0, 0.05).unwrap();
        let v = verify_report(&inst, &rep, &spec).unwrap();
        assert!(!v.passed());
    }

    #[test]
    fn mismatched_instance() {
        let free = ProblemInstance::unconstrained(two_points()).unwrap();
        let constrained = with_c1(4.0);
        let spec = GridSpec::new(-1.0, 3.0, -1.0, 3.0, 0.1).unwrap();
        let rep = solve_constrained(&constrained, 0.5).unwrap();
        assert!(matches!(
            verify_report(&free, &rep, &spec),
            Err(Error::Usage(_))
        ));
        let rep = solve_constrained(&free, 0.5).unwrap();
        assert!(matches!(
            verify_report(&constrained, &rep, &spec),
            Err(Error::Usage(_))
        ));
        let other = ProblemInstance::unconstrained(vec![
            WeightedPoint::new(0.0, 0.0, 0.0),
            WeightedPoint::new(5.0, 1.0, 0.0),
        ])
        .unwrap();
        assert!(matches!(
            verify_report(&other, &rep, &spec),
            Err(Error::Usage(_))
        ));
    }
}
