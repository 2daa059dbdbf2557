use crate::error::{Error, Result};
use crate::tropical::{min_quadratic_form, Tropical, TropicalVector};

use super::{build_extended_matrix, proper_solution_check, Coefficients, Point2};

/// Solves the four-term problem with the general spectral machinery instead
/// of the closed form.
///
/// Minimizes `y⁻ ⊗ A ⊗ y` for the extended matrix `A`, then rescales `y` so
/// that its first and last entries are mutually inverse and reads
/// `x = (y1, y2)`. Since the eigencone of `A` is one-dimensional, the result
/// does not depend on which eigenvector representatives were used.
pub fn spectral_point(co: &Coefficients, alpha: f64) -> Result<(f64, Point2)> {
    let a = build_extended_matrix(co)?;
    let (lambda, y) = min_quadratic_form(&a, alpha)?;
    let (Some(y1), Some(y3)) = (y.get(0).value(), y.get(2).value()) else {
        return Err(Error::Internal(
            "extended minimizer has a zero entry".into(),
        ));
    };
    let y = y.scale(Tropical::finite(-(y1 + y3) / 2.0));
    if !proper_solution_check(&y)? {
        return Err(Error::Internal(format!(
            "normalized extended solution {y} is not proper"
        )));
    }
    let lambda = lambda
        .value()
        .ok_or_else(|| Error::Internal("zero eigenvalue".into()))?;
    Ok((lambda, to_point(&y)?))
}

fn to_point(y: &TropicalVector) -> Result<Point2> {
    match (y.get(0).value(), y.get(1).value()) {
        (Some(x1), Some(x2)) => Ok(Point2::new(x1, x2)),
        _ => Err(Error::Internal("extended solution has a zero entry".into())),
    }
}
