//! The instance file format.
//!
//! A TOML document:
//!
//! ```toml
//! alpha = 0.5            # optional, in [0, 1]
//!
//! points = [
//!     { x1 = 0, x2 = 0, w = 0 },
//!     { x1 = 2, x2 = 0 },        # w defaults to 0
//! ]
//!
//! [constraint]           # optional; each offset optional
//! c1 = 4
//!
//! [audit]                # optional; requests the grid audit
//! step = 0.01
//! ```
//!
//! A missing `[constraint]` table selects the unconstrained solver; an empty
//! one is the constraint that excludes nothing.

use serde::{Deserialize, Serialize};

use rectimax_core::{ProblemInstance, RotatedRectConstraint, Tropical, WeightedPoint};

use crate::error::CliError;

pub const DEFAULT_ALPHA: f64 = 0.5;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    pub points: Vec<PointEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constraint: Option<ConstraintEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub audit: Option<AuditEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointEntry {
    pub x1: f64,
    pub x2: f64,
    #[serde(default)]
    pub w: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstraintEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a1: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b1: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c1: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d1: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AuditEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub step: Option<f64>,
}

impl InstanceFile {
    /// Parses a document; `origin` names it in error messages.
    pub fn parse(text: &str, origin: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Parse {
            path: origin.to_string(),
            message: e.to_string().trim_end().to_string(),
        })
    }

    pub fn to_toml_string(&self) -> Result<String, CliError> {
        toml::to_string(self).map_err(|e| CliError::Internal(e.to_string()))
    }

    pub fn alpha(&self) -> f64 {
        self.alpha.unwrap_or(DEFAULT_ALPHA)
    }

    /// Checks ranges and builds the solver instance.
    pub fn to_instance(&self) -> Result<ProblemInstance, CliError> {
        let alpha = self.alpha();
        if !(0.0..=1.0).contains(&alpha) {
            return Err(CliError::Validation(format!(
                "alpha must lie in [0, 1], got {alpha}"
            )));
        }
        if self.points.len() < 2 {
            return Err(CliError::Validation(format!(
                "at least two points are required, got {}",
                self.points.len()
            )));
        }
        for (i, p) in self.points.iter().enumerate() {
            for (name, v) in [("x1", p.x1), ("x2", p.x2), ("w", p.w)] {
                if !v.is_finite() {
                    return Err(CliError::Validation(format!(
                        "points[{i}].{name} is not finite"
                    )));
                }
            }
        }
        if let Some(step) = self.audit.and_then(|a| a.step) {
            if !(step.is_finite() && step > 0.0) {
                return Err(CliError::Validation(format!(
                    "audit.step must be positive, got {step}"
                )));
            }
        }
        let constraint = self.constraint.map(|c| c.to_constraint()).transpose()?;
        let points = self
            .points
            .iter()
            .map(|p| WeightedPoint::new(p.x1, p.x2, p.w))
            .collect();
        Ok(ProblemInstance::new(points, constraint)?)
    }
}

impl ConstraintEntry {
    fn to_constraint(self) -> Result<RotatedRectConstraint, CliError> {
        let read = |name: &str, v: Option<f64>| match v {
            None => Ok(Tropical::ZERO),
            Some(v) if v.is_finite() => Ok(Tropical::finite(v)),
            Some(v) => Err(CliError::Validation(format!(
                "constraint.{name} = {v} is not finite"
            ))),
        };
        Ok(RotatedRectConstraint::new(
            read("a1", self.a1)?,
            read("b1", self.b1)?,
            read("c1", self.c1)?,
            read("d1", self.d1)?,
        ))
    }
}
