//! Max-plus (tropical) linear algebra and an exact closed-form solver for the
//! rectilinear minimax single-facility location problem on the plane.
//!
//! The crate has three layers:
//!
//! - [`tropical`]: the semifield `R_max,+`, dense vectors and matrices over it,
//!   and the spectral routines (eigenvalue, eigenvector basis, minimization of
//!   the form `x⁻ A x`).
//! - [`location`]: problem types, objective evaluation, and the closed-form
//!   solvers for the unconstrained problem and the problem restricted to a
//!   45°-rotated rectangle.
//! - [`oracle`]: a brute-force grid search used to audit solver output.

pub mod error;
pub mod location;
pub mod oracle;
pub mod tropical;

pub use error::{Error, Result};
pub use location::{
    CaseTag, Coefficients, Point2, ProblemInstance, RotatedRectConstraint, SolutionReport,
    WeightedPoint,
};
pub use oracle::{GridMinimum, GridSpec, ObjectiveMode, SearchStrategy, VerificationVerdict};
pub use tropical::{EigenData, Tropical, TropicalMatrix, TropicalVector};

/// Absolute tolerance used for every floating-point equality test in the crate.
pub const TOLERANCE: f64 = 1e-9;
