//! Contour samples for external plotting.
//!
//! One header row `x1,x2,phi,phi1,psi`, then one row per grid point with x1
//! as the outer loop, then one `# endpoint alpha=...` comment row per
//! solution endpoint. `phi1` is `-inf` when there is no constraint.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use rectimax_core::location::{evaluate_constraint, evaluate_objective};
use rectimax_core::{GridSpec, Point2, ProblemInstance, SolutionReport};

use crate::error::CliError;

pub const HEADER: &str = "x1,x2,phi,phi1,psi";

fn row(instance: &ProblemInstance, lambda0: f64, x: Point2) -> String {
    let phi = evaluate_objective(instance.points(), x);
    let phi1 = instance
        .constraint()
        .map_or(f64::NEG_INFINITY, |c| evaluate_constraint(c, x));
    let psi = (phi - lambda0).max(phi1);
    format!("{},{},{},{},{}", x.x1, x.x2, phi, phi1, psi)
}

/// Writes the samples and returns the number of data rows.
pub fn write_contours<W: Write>(
    out: &mut W,
    instance: &ProblemInstance,
    report: &SolutionReport,
    window: &GridSpec,
) -> std::io::Result<usize> {
    let lambda0 = report.lambda0.unwrap_or(report.lambda);
    writeln!(out, "{HEADER}")?;
    let mut rows = 0;
    for x in window.points() {
        writeln!(out, "{}", row(instance, lambda0, x))?;
        rows += 1;
    }
    for (alpha, x) in [(0, report.endpoint_alpha0), (1, report.endpoint_alpha1)] {
        writeln!(
            out,
            "# endpoint alpha={alpha}: {}",
            row(instance, lambda0, x)
        )?;
    }
    Ok(rows)
}

pub fn emit_contours(
    path: &Path,
    instance: &ProblemInstance,
    report: &SolutionReport,
    window: &GridSpec,
) -> Result<usize, CliError> {
    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    let mut out = BufWriter::new(file);
    let rows =
        write_contours(&mut out, instance, report, window).map_err(|e| CliError::io(path, e))?;
    out.flush().map_err(|e| CliError::io(path, e))?;
    Ok(rows)
}
