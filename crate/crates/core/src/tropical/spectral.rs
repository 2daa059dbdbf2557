//! Spectral routines for irreducible matrices over `R_max,+`.
//!
//! An irreducible `n×n` matrix `A` has exactly one eigenvalue
//!
//! ```text
//! λ = tr(A)^{1/1} ⊕ tr(A²)^{1/2} ⊕ ⋯ ⊕ tr(Aⁿ)^{1/n},
//! ```
//!
//! the maximum mean weight of a cycle in its support digraph. Eigenvectors
//! are read off the normalized power sum `A^× = λ⁻¹A ⊕ ⋯ ⊕ λ⁻ⁿAⁿ`: every
//! column whose diagonal entry equals `𝟙` is one, and these columns (pruned
//! of collinear duplicates) span the eigencone.

use crate::error::{Error, Result};
use crate::TOLERANCE;

use super::{Tropical, TropicalMatrix, TropicalVector};

/// The eigenvalue of an irreducible matrix together with a basis of its
/// eigencone.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenData {
    pub eigenvalue: Tropical,
    /// One eigenvector per column, no two collinear, all entries finite.
    pub basis: TropicalMatrix,
}

impl EigenData {
    /// The first retained basis column.
    pub fn principal(&self) -> TropicalVector {
        self.basis.column(0)
    }

    /// `max_i |(A ⊗ g)_i − (λ ⊗ g)_i|` over all basis columns `g`.
    pub fn residual(&self, a: &TropicalMatrix) -> Result<f64> {
        let mut worst = 0.0f64;
        for g in self.basis.columns() {
            let lhs = a.apply(&g)?;
            let rhs = g.scale(self.eigenvalue);
            worst = worst.max(lhs.max_abs_diff(&rhs));
        }
        Ok(worst)
    }
}

fn require_irreducible(a: &TropicalMatrix) -> Result<()> {
    if !a.is_irreducible()? {
        return Err(Error::Reducible);
    }
    Ok(())
}

/// The eigenvalue of an irreducible matrix via the trace formula.
pub fn eigenvalue(a: &TropicalMatrix) -> Result<Tropical> {
    require_irreducible(a)?;
    let n = a.rows();
    let mut power = a.clone();
    let mut lambda = a.trace()?;
    for k in 2..=n {
        power = power.otimes(a)?;
        lambda = lambda + power.trace()?.root(k as u32)?;
    }
    if lambda.is_zero() {
        return Err(Error::Internal(
            "irreducible matrix produced a zero eigenvalue".into(),
        ));
    }
    Ok(lambda)
}

/// `A^× = λ⁻¹A ⊕ λ⁻²A² ⊕ ⋯ ⊕ λ⁻ⁿAⁿ`.
pub fn normalized_power_sum(a: &TropicalMatrix, lambda: Tropical) -> Result<TropicalMatrix> {
    if !a.is_square() {
        return Err(Error::Shape(format!(
            "normalized power sum needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let step = a.scale(lambda.inv()?);
    let mut term = step.clone();
    let mut sum = step.clone();
    for _ in 2..=a.rows() {
        term = term.otimes(&step)?;
        sum = sum.oplus(&term)?;
    }
    Ok(sum)
}

/// Eigenvalue and eigencone basis of an irreducible matrix.
///
/// Columns of `A^×` with a unit diagonal entry (within [`TOLERANCE`]) are
/// kept in index order, skipping any column collinear with one already kept.
/// Only pairwise collinearity is detected, not general tropical linear
/// dependence.
pub fn eigenbasis(a: &TropicalMatrix) -> Result<EigenData> {
    let lambda = eigenvalue(a)?;
    let star = normalized_power_sum(a, lambda)?;
    let mut kept: Vec<TropicalVector> = Vec::new();
    for i in 0..star.rows() {
        if !star.get(i, i).approx_eq(Tropical::ONE, TOLERANCE) {
            continue;
        }
        let column = star.column(i);
        if !column.is_all_finite() {
            return Err(Error::Internal(format!(
                "eigenvector column {i} of an irreducible matrix has a zero entry"
            )));
        }
        if kept
            .iter()
            .all(|k| column.collinear_factor(k, TOLERANCE).is_none())
        {
            kept.push(column);
        }
    }
    if kept.is_empty() {
        return Err(Error::Internal(format!(
            "no column of A^x has a unit diagonal entry (eigenvalue {lambda})"
        )));
    }
    Ok(EigenData {
        eigenvalue: lambda,
        basis: TropicalMatrix::from_columns(&kept)?,
    })
}

/// Minimizes `x⁻ ⊗ A ⊗ x` over vectors without zero entries.
///
/// Returns the minimum, which is the eigenvalue `λ` of `A`, and the minimizer
/// `x_i = u_i^α ⊗ v_i^{α−1}` where `u` and `v` are the principal basis
/// columns of `A` and `Aᵀ`.
pub fn min_quadratic_form(a: &TropicalMatrix, alpha: f64) -> Result<(Tropical, TropicalVector)> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::Domain(format!(
            "alpha must lie in [0, 1], got {alpha}"
        )));
    }
    let right = eigenbasis(a)?;
    let left = eigenbasis(&a.transpose())?;
    let u = right.principal();
    let v = left.principal();
    let x = u
        .iter()
        .zip(v.iter())
        .map(|(ui, vi)| Ok(ui.powf(alpha)? * vi.powf(alpha - 1.0)?))
        .collect::<Result<Vec<_>>>()?;
    Ok((right.eigenvalue, TropicalVector::new(x)?))
}
