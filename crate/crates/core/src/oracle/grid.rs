use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::location::{
    evaluate_constraint, evaluate_objective, lambda_from_coefficients, unconstrained_coefficients,
    Point2, RotatedRectConstraint, WeightedPoint,
};
use crate::TOLERANCE;

/// A rectangular window sampled at `x_min + k·step` along each axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x1_min: f64,
    pub x1_max: f64,
    pub x2_min: f64,
    pub x2_max: f64,
    pub step: f64,
}

impl GridSpec {
    pub fn new(x1_min: f64, x1_max: f64, x2_min: f64, x2_max: f64, step: f64) -> Result<Self> {
        let all = [x1_min, x1_max, x2_min, x2_max, step];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("grid bounds and step must be finite".into()));
        }
        if step <= 0.0 {
            return Err(Error::Domain(format!(
                "grid step must be positive, got {step}"
            )));
        }
        if x1_min > x1_max || x2_min > x2_max {
            return Err(Error::Domain("grid window has min > max".into()));
        }
        Ok(GridSpec {
            x1_min,
            x1_max,
            x2_min,
            x2_max,
            step,
        })
    }

    /// The bounding box of the points expanded on each side by the weight
    /// spread plus the rectilinear diameter. Every minimizer of the raw
    /// objective lies in this window.
    pub fn auto(points: &[WeightedPoint], step: f64) -> Result<Self> {
        let bounds = Bounds::of(points)?;
        bounds.expand(bounds.raw_margin(), step)
    }

    /// A window guaranteed to contain a minimizer of the chosen objective.
    ///
    /// Starts from [`GridSpec::auto`]. For the merged objective, and for the
    /// raw objective restricted to a constraint, the margin is widened using
    /// the objective value at the points and at `hints`: a minimizer `x`
    /// satisfies `dist₁(x, box) + w_min ≤ φ(x) ≤ value at any candidate`.
    pub fn auto_for(
        points: &[WeightedPoint],
        cons: Option<&RotatedRectConstraint>,
        mode: ObjectiveMode,
        step: f64,
        hints: &[Point2],
    ) -> Result<Self> {
        let bounds = Bounds::of(points)?;
        let objective = Objective::new(points, cons, mode)?;
        let offset = match mode {
            ObjectiveMode::Raw => 0.0,
            ObjectiveMode::Merged => objective.lambda0,
        };
        let best_candidate = points
            .iter()
            .map(WeightedPoint::position)
            .chain(hints.iter().copied())
            .filter_map(|p| objective.value(p))
            .fold(f64::INFINITY, f64::min);
        let margin = if best_candidate.is_finite() {
            bounds
                .raw_margin()
                .max(best_candidate + offset - bounds.w_min)
        } else {
            bounds.raw_margin()
        };
        bounds.expand(margin, step)
    }

    /// Number of samples along each axis.
    pub fn dims(&self) -> (usize, usize) {
        let count = |lo: f64, hi: f64| ((hi - lo) / self.step + 1e-9).floor() as usize + 1;
        (
            count(self.x1_min, self.x1_max),
            count(self.x2_min, self.x2_max),
        )
    }

    pub fn len(&self) -> usize {
        let (n1, n2) = self.dims();
        n1 * n2
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn point(&self, i: usize, j: usize) -> Point2 {
        Point2::new(
            self.x1_min + i as f64 * self.step,
            self.x2_min + j as f64 * self.step,
        )
    }

    pub fn contains(&self, x: Point2) -> bool {
        (self.x1_min..=self.x1_max).contains(&x.x1) && (self.x2_min..=self.x2_max).contains(&x.x2)
    }

    /// Row-major iteration over all samples.
    pub fn points(&self) -> impl Iterator<Item = Point2> + '_ {
        let (n1, n2) = self.dims();
        (0..n1).flat_map(move |i| (0..n2).map(move |j| self.point(i, j)))
    }
}

struct Bounds {
    lo: Point2,
    hi: Point2,
    w_min: f64,
    w_max: f64,
    diameter: f64,
}

impl Bounds {
    fn of(points: &[WeightedPoint]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Domain("grid window needs at least one point".into()));
        }
        let fold = |f: &dyn Fn(&WeightedPoint) -> f64| {
            points
                .iter()
                .map(f)
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                    (lo.min(v), hi.max(v))
                })
        };
        let (r1_lo, r1_hi) = fold(&|p| p.r1);
        let (r2_lo, r2_hi) = fold(&|p| p.r2);
        let (w_min, w_max) = fold(&|p| p.w);
        // the L1 diameter is the larger spread along the two diagonals
        let (u_lo, u_hi) = fold(&|p| p.r1 - p.r2);
        let (v_lo, v_hi) = fold(&|p| p.r1 + p.r2);
        Ok(Bounds {
            lo: Point2::new(r1_lo, r2_lo),
            hi: Point2::new(r1_hi, r2_hi),
            w_min,
            w_max,
            diameter: (u_hi - u_lo).max(v_hi - v_lo),
        })
    }

    fn raw_margin(&self) -> f64 {
        self.w_max - self.w_min + self.diameter
    }

    fn expand(&self, margin: f64, step: f64) -> Result<GridSpec> {
        GridSpec::new(
            self.lo.x1 - margin,
            self.hi.x1 + margin,
            self.lo.x2 - margin,
            self.hi.x2 + margin,
            step,
        )
    }
}

/// Which function the grid search minimizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObjectiveMode {
    /// `φ(x) = max_i (ρ(r_i, x) + w_i)`, restricted to feasible grid points
    /// when a constraint is given.
    Raw,
    /// `ψ(x) = max(φ(x) − λ0, φ₁(x))` over every grid point.
    Merged,
}

/// How the grid is scanned. Both strategies return the same minimum and the
/// same (lexicographically smallest) argmin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchStrategy {
    /// Evaluate every grid point.
    #[default]
    Exhaustive,
    /// Skip blocks of grid points whose lower bound, from the objective being
    /// 1-Lipschitz in the rectilinear norm, exceeds the best value found.
    Pruned,
}

/// The smallest grid value and the first grid point (in `(x1, x2)`
/// lexicographic order) attaining it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridMinimum {
    pub value: f64,
    pub argmin: Point2,
    pub index: (usize, usize),
}

impl GridMinimum {
    fn better_than(&self, other: &GridMinimum) -> bool {
        match self.value.total_cmp(&other.value) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => self.index < other.index,
        }
    }

    fn pick(a: Option<GridMinimum>, b: Option<GridMinimum>) -> Option<GridMinimum> {
        match (a, b) {
            (Some(a), Some(b)) => Some(if b.better_than(&a) { b } else { a }),
            (a, None) => a,
            (None, b) => b,
        }
    }
}

struct Objective<'a> {
    points: &'a [WeightedPoint],
    cons: Option<&'a RotatedRectConstraint>,
    mode: ObjectiveMode,
    lambda0: f64,
}

impl<'a> Objective<'a> {
    fn new(
        points: &'a [WeightedPoint],
        cons: Option<&'a RotatedRectConstraint>,
        mode: ObjectiveMode,
    ) -> Result<Self> {
        let lambda0 = match mode {
            ObjectiveMode::Raw => 0.0,
            ObjectiveMode::Merged => {
                lambda_from_coefficients(&unconstrained_coefficients(points)?)?
            }
        };
        Ok(Objective {
            points,
            cons,
            mode,
            lambda0,
        })
    }

    /// `None` for a grid point excluded by the constraint in raw mode.
    fn value(&self, x: Point2) -> Option<f64> {
        let phi = evaluate_objective(self.points, x);
        let phi1 = self
            .cons
            .map_or(f64::NEG_INFINITY, |c| evaluate_constraint(c, x));
        match self.mode {
            ObjectiveMode::Raw if phi1 > TOLERANCE => None,
            ObjectiveMode::Raw => Some(phi),
            ObjectiveMode::Merged => Some((phi - self.lambda0).max(phi1)),
        }
    }

    /// A lower bound over all grid points within rectilinear distance
    /// `radius` of `center`, or `None` if none of them can be feasible.
    fn lower_bound(&self, center: Point2, radius: f64) -> Option<f64> {
        let phi = evaluate_objective(self.points, center);
        let phi1 = self
            .cons
            .map_or(f64::NEG_INFINITY, |c| evaluate_constraint(c, center));
        match self.mode {
            ObjectiveMode::Raw if phi1 - radius > TOLERANCE + PRUNE_SLACK => None,
            ObjectiveMode::Raw => Some(phi - radius),
            ObjectiveMode::Merged => Some((phi - self.lambda0).max(phi1) - radius),
        }
    }
}

/// Exhaustive grid minimization of the chosen objective.
pub fn grid_search_min(
    points: &[WeightedPoint],
    cons: Option<&RotatedRectConstraint>,
    spec: &GridSpec,
    mode: ObjectiveMode,
) -> Result<GridMinimum> {
    grid_search_min_with(points, cons, spec, mode, SearchStrategy::Exhaustive)
}

pub fn grid_search_min_with(
    points: &[WeightedPoint],
    cons: Option<&RotatedRectConstraint>,
    spec: &GridSpec,
    mode: ObjectiveMode,
    strategy: SearchStrategy,
) -> Result<GridMinimum> {
    if points.is_empty() {
        return Err(Error::Domain("grid search needs at least one point".into()));
    }
    let objective = Objective::new(points, cons, mode)?;
    let best = match strategy {
        SearchStrategy::Exhaustive => exhaustive(&objective, spec),
        SearchStrategy::Pruned => pruned(&objective, spec),
    };
    best.ok_or(Error::InfeasibleAtResolution)
}

fn eval_block(
    objective: &Objective<'_>,
    spec: &GridSpec,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<GridMinimum> {
    let mut best: Option<GridMinimum> = None;
    for i in rows {
        for j in cols.clone() {
            let x = spec.point(i, j);
            if let Some(value) = objective.value(x) {
                let cand = GridMinimum {
                    value,
                    argmin: x,
                    index: (i, j),
                };
                if best.as_ref().is_none_or(|b| cand.better_than(b)) {
                    best = Some(cand);
                }
            }
        }
    }
    best
}

fn exhaustive(objective: &Objective<'_>, spec: &GridSpec) -> Option<GridMinimum> {
    let (n1, n2) = spec.dims();
    // the reduction is a total order on (value, index), so the result does
    // not depend on how rayon splits the rows
    (0..n1)
        .into_par_iter()
        .map(|i| eval_block(objective, spec, i..i + 1, 0..n2))
        .reduce(|| None, GridMinimum::pick)
}

/// Covers rounding in grid coordinates when comparing bounds to values.
const PRUNE_SLACK: f64 = 1e-7;
const LEAF_SIDE: usize = 4;

#[derive(Debug, Clone, Copy)]
struct Block {
    bound: f64,
    i0: usize,
    i1: usize,
    j0: usize,
    j1: usize,
}

impl PartialEq for Block {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Block {}

impl PartialOrd for Block {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Block {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bound
            .total_cmp(&other.bound)
            .then_with(|| (self.i0, self.j0).cmp(&(other.i0, other.j0)))
    }
}

fn make_block(
    objective: &Objective<'_>,
    spec: &GridSpec,
    (i0, i1): (usize, usize),
    (j0, j1): (usize, usize),
) -> Option<Block> {
    let (ic, jc) = ((i0 + i1 - 1) / 2, (j0 + j1 - 1) / 2);
    let reach = (ic - i0).max(i1 - 1 - ic) + (jc - j0).max(j1 - 1 - jc);
    let radius = reach as f64 * spec.step;
    let bound = objective.lower_bound(spec.point(ic, jc), radius)?;
    Some(Block {
        bound,
        i0,
        i1,
        j0,
        j1,
    })
}

fn pruned(objective: &Objective<'_>, spec: &GridSpec) -> Option<GridMinimum> {
    let (n1, n2) = spec.dims();
    let mut heap = BinaryHeap::new();
    heap.extend(make_block(objective, spec, (0, n1), (0, n2)).map(Reverse));
    let mut best: Option<GridMinimum> = None;
    let cutoff = |best: &Option<GridMinimum>| best.map_or(f64::INFINITY, |b| b.value + PRUNE_SLACK);

    while let Some(Reverse(block)) = heap.pop() {
        if block.bound > cutoff(&best) {
            break;
        }
        let (h, w) = (block.i1 - block.i0, block.j1 - block.j0);
        if h <= LEAF_SIDE && w <= LEAF_SIDE {
            let found = eval_block(objective, spec, block.i0..block.i1, block.j0..block.j1);
            best = GridMinimum::pick(best, found);
            continue;
        }
        let halves = if h >= w {
            let mid = block.i0 + h / 2;
            [
                ((block.i0, mid), (block.j0, block.j1)),
                ((mid, block.i1), (block.j0, block.j1)),
            ]
        } else {
            let mid = block.j0 + w / 2;
            [
                ((block.i0, block.i1), (block.j0, mid)),
                ((block.i0, block.i1), (mid, block.j1)),
            ]
        };
        for (rows, cols) in halves {
            if let Some(child) = make_block(objective, spec, rows, cols) {
                if child.bound <= cutoff(&best) {
                    heap.push(Reverse(child));
                }
            }
        }
    }
    best
}
