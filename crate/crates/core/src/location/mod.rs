//! The rectilinear minimax single-facility location problem.
//!
//! Given weighted points `r_i` with additive weights `w_i`, find `x` in the
//! plane minimizing `φ(x) = max_i (|r_1i − x_1| + |r_2i − x_2| + w_i)`,
//! optionally restricted to a rectangle whose sides are at 45° to the axes.

mod metric;
mod objective;
mod solver;
mod spectral;

use crate::error::{Error, Result};
use crate::tropical::Tropical;

pub use metric::{rectilinear_distance, rectilinear_distance_tropical};
pub use objective::{evaluate_constraint, evaluate_merged, evaluate_objective, is_feasible};
pub use solver::{
    build_extended_matrix, closed_form_point, lambda_from_coefficients, merge_constraints,
    proper_solution_check, solve_constrained, solve_unconstrained, unconstrained_coefficients,
};
pub use spectral::spectral_point;

/// A point of the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x1: f64,
    pub x2: f64,
}

impl Point2 {
    pub const fn new(x1: f64, x2: f64) -> Self {
        Point2 { x1, x2 }
    }

    pub fn translate(self, t1: f64, t2: f64) -> Self {
        Point2::new(self.x1 + t1, self.x2 + t2)
    }
}

/// A demand point `(r1, r2)` with additive weight `w`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedPoint {
    pub r1: f64,
    pub r2: f64,
    pub w: f64,
}

impl WeightedPoint {
    pub const fn new(r1: f64, r2: f64, w: f64) -> Self {
        WeightedPoint { r1, r2, w }
    }

    pub fn position(&self) -> Point2 {
        Point2::new(self.r1, self.r2)
    }

    fn is_finite(&self) -> bool {
        self.r1.is_finite() && self.r2.is_finite() && self.w.is_finite()
    }
}

/// The feasible set cut out by the half-planes
///
/// ```text
/// -x1 + x2 + a1 ≤ 0,   x1 - x2 + b1 ≤ 0,
/// -x1 - x2 + c1 ≤ 0,   x1 + x2 + d1 ≤ 0.
/// ```
///
/// An offset equal to `𝟘` drops its half-plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RotatedRectConstraint {
    pub a1: Tropical,
    pub b1: Tropical,
    pub c1: Tropical,
    pub d1: Tropical,
}

impl RotatedRectConstraint {
    pub fn new(a1: Tropical, b1: Tropical, c1: Tropical, d1: Tropical) -> Self {
        RotatedRectConstraint { a1, b1, c1, d1 }
    }

    /// The constraint that excludes nothing.
    pub fn unbounded() -> Self {
        Self::default()
    }

    /// The constraint `lo_u ≤ x1 − x2 ≤ hi_u`, `lo_v ≤ x1 + x2 ≤ hi_v`.
    pub fn from_bounds(lo_u: f64, hi_u: f64, lo_v: f64, hi_v: f64) -> Self {
        RotatedRectConstraint {
            a1: Tropical::finite(lo_u),
            b1: Tropical::finite(-hi_u),
            c1: Tropical::finite(lo_v),
            d1: Tropical::finite(-hi_v),
        }
    }

    pub fn offsets(&self) -> [Tropical; 4] {
        [self.a1, self.b1, self.c1, self.d1]
    }

    pub fn is_unbounded(&self) -> bool {
        self.offsets().iter().all(|t| t.is_zero())
    }
}

/// Weighted points (at least two) and an optional feasible-set constraint.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemInstance {
    points: Vec<WeightedPoint>,
    constraint: Option<RotatedRectConstraint>,
}

impl ProblemInstance {
    pub fn new(
        points: Vec<WeightedPoint>,
        constraint: Option<RotatedRectConstraint>,
    ) -> Result<Self> {
        validate_points(&points)?;
        Ok(ProblemInstance { points, constraint })
    }

    pub fn unconstrained(points: Vec<WeightedPoint>) -> Result<Self> {
        Self::new(points, None)
    }

    pub fn points(&self) -> &[WeightedPoint] {
        &self.points
    }

    pub fn constraint(&self) -> Option<&RotatedRectConstraint> {
        self.constraint.as_ref()
    }
}

pub(crate) fn validate_points(points: &[WeightedPoint]) -> Result<()> {
    if points.len() < 2 {
        return Err(Error::Domain(format!(
            "at least two points are required, got {}",
            points.len()
        )));
    }
    if let Some(i) = points.iter().position(|p| !p.is_finite()) {
        return Err(Error::Domain(format!("point {i} has a non-finite field")));
    }
    Ok(())
}

/// The four coefficients of `a x1⁻¹x2 ⊕ b x1x2⁻¹ ⊕ c x1⁻¹x2⁻¹ ⊕ d x1x2`,
/// i.e. conventionally `max(a − x1 + x2, b + x1 − x2, c − x1 − x2, d + x1 + x2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coefficients {
    pub a: Tropical,
    pub b: Tropical,
    pub c: Tropical,
    pub d: Tropical,
}

impl Coefficients {
    pub fn new(a: Tropical, b: Tropical, c: Tropical, d: Tropical) -> Self {
        Coefficients { a, b, c, d }
    }

    pub fn from_conventional(a: f64, b: f64, c: f64, d: f64) -> Self {
        Coefficients::new(
            Tropical::finite(a),
            Tropical::finite(b),
            Tropical::finite(c),
            Tropical::finite(d),
        )
    }

    /// `[a, b, c, d]` as reals; fails if any coefficient is `𝟘`.
    pub fn conventional(&self) -> Result<[f64; 4]> {
        let read = |name: &str, t: Tropical| {
            t.value()
                .ok_or_else(|| Error::Domain(format!("coefficient {name} is the zero element")))
        };
        Ok([
            read("a", self.a)?,
            read("b", self.b)?,
            read("c", self.c)?,
            read("d", self.d)?,
        ])
    }

    /// The four-term function these coefficients define, evaluated at `x`.
    pub fn evaluate(&self, x: Point2) -> f64 {
        let terms = [
            self.a.to_f64() - x.x1 + x.x2,
            self.b.to_f64() + x.x1 - x.x2,
            self.c.to_f64() - x.x1 - x.x2,
            self.d.to_f64() + x.x1 + x.x2,
        ];
        terms.into_iter().fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Which product attains `λ² = ab ⊕ cd`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// `ab > cd`
    AbDominant,
    /// `cd > ab`
    CdDominant,
    /// `ab = cd` within tolerance
    Tie,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::AbDominant => "AB_DOMINANT",
            CaseTag::CdDominant => "CD_DOMINANT",
            CaseTag::Tie => "TIE",
        }
    }
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The result of a solve.
///
/// The minimizers form the segment `x(α)`, `α ∈ [0, 1]`, which is affine in
/// `α`; the report carries both endpoints and the point for the requested `α`.
/// For constrained solves `lambda` is the minimum of the merged objective `ψ`
/// and `lambda0` the unconstrained optimum.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionReport {
    pub lambda: f64,
    pub lambda0: Option<f64>,
    pub alpha: f64,
    pub point: Point2,
    pub endpoint_alpha0: Point2,
    pub endpoint_alpha1: Point2,
    pub exact: bool,
    pub case_tag: CaseTag,
    /// The coefficients whose closed form produced the segment (the merged
    /// ones for constrained solves).
    pub coefficients: Coefficients,
}

impl SolutionReport {
    /// `x(α)` for any `α ∈ [0, 1]`.
    pub fn point_at(&self, alpha: f64) -> Result<Point2> {
        closed_form_point(&self.coefficients.conventional()?, self.lambda, alpha)
    }

    pub fn is_constrained(&self) -> bool {
        self.lambda0.is_some()
    }

    /// The optimal value of the original location problem when known: `λ`
    /// for unconstrained solves, `λ0` for exact constrained ones.
    pub fn location_optimum(&self) -> Option<f64> {
        match self.lambda0 {
            None => Some(self.lambda),
            Some(l0) if self.exact => Some(l0),
            Some(_) => None,
        }
    }
}
