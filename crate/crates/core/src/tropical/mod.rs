//! The idempotent semifield `R_max,+` and linear algebra over it.

mod matrix;
mod scalar;
mod spectral;

pub use matrix::{TropicalMatrix, TropicalVector};
pub use scalar::Tropical;
pub use spectral::{eigenbasis, eigenvalue, min_quadratic_form, normalized_power_sum, EigenData};
