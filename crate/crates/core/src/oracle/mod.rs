//! Brute-force verification of solver output by grid search over the plane.

mod grid;
mod verify;

pub use grid::{
    grid_search_min, grid_search_min_with, GridMinimum, GridSpec, ObjectiveMode, SearchStrategy,
};
pub use verify::{verify_report, AlphaResidual, VerificationVerdict, AUDIT_ALPHAS};
