//! The machine-readable report and the verbose summary.

use std::fmt::Write as _;

use serde::Serialize;

use rectimax_core::{
    GridSpec, ObjectiveMode, Point2, SolutionReport, Tropical, VerificationVerdict,
};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub mode: &'static str,
    pub lambda: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda0: Option<f64>,
    pub alpha: f64,
    pub x_alpha0: [f64; 2],
    pub x_alpha: [f64; 2],
    pub x_alpha1: [f64; 2],
    pub exact: bool,
    pub case_tag: &'static str,
    pub coefficients: CoefficientsOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audit: Option<AuditOut>,
}

/// `null` stands for 𝟘.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoefficientsOut {
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub c: Option<f64>,
    pub d: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditOut {
    pub passed: bool,
    pub objective: &'static str,
    pub step: f64,
    pub window: [f64; 4],
    pub grid_points: usize,
    pub grid_value: f64,
    pub grid_argmin: [f64; 2],
    pub grid_gap: f64,
    pub gap_tolerance: f64,
    pub residuals: Vec<ResidualOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub endpoints_feasible: Option<[bool; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub endpoint_objective_gap: Option<f64>,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResidualOut {
    pub alpha: f64,
    pub residual: f64,
}

fn pair(p: Point2) -> [f64; 2] {
    [p.x1, p.x2]
}

impl Report {
    pub fn new(rep: &SolutionReport) -> Self {
        let co = rep.coefficients;
        Report {
            mode: if rep.is_constrained() {
                "constrained"
            } else {
                "unconstrained"
            },
            lambda: rep.lambda,
            lambda0: rep.lambda0,
            alpha: rep.alpha,
            x_alpha0: pair(rep.endpoint_alpha0),
            x_alpha: pair(rep.point),
            x_alpha1: pair(rep.endpoint_alpha1),
            exact: rep.exact,
            case_tag: rep.case_tag.as_str(),
            coefficients: CoefficientsOut {
                a: co.a.value(),
                b: co.b.value(),
                c: co.c.value(),
                d: co.d.value(),
            },
            audit: None,
        }
    }

    pub fn with_audit(mut self, spec: &GridSpec, verdict: &VerificationVerdict) -> Self {
        self.audit = Some(AuditOut {
            passed: verdict.passed(),
            objective: match verdict.mode {
                ObjectiveMode::Raw => "raw",
                ObjectiveMode::Merged => "merged",
            },
            step: spec.step,
            window: [spec.x1_min, spec.x1_max, spec.x2_min, spec.x2_max],
            grid_points: spec.len(),
            grid_value: verdict.grid.value,
            grid_argmin: pair(verdict.grid.argmin),
            grid_gap: verdict.grid_gap,
            gap_tolerance: verdict.gap_tolerance,
            residuals: verdict
                .residuals
                .iter()
                .map(|r| ResidualOut {
                    alpha: r.alpha,
                    residual: r.residual,
                })
                .collect(),
            endpoints_feasible: verdict.endpoints_feasible,
            endpoint_objective_gap: verdict.endpoint_objective_gap,
            failures: verdict.failures.clone(),
        });
        self
    }

    /// Pretty JSON with a trailing newline. Field order is fixed by the struct.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report fields are serializable");
        s.push('\n');
        s
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        let fmt_pt = |p: [f64; 2]| format!("({}, {})", p[0], p[1]);
        let fmt_t =
            |v: Option<f64>| v.map_or_else(|| Tropical::ZERO.to_string(), |v| v.to_string());
        let _ = writeln!(s, "mode:      {}", self.mode);
        if let Some(l0) = self.lambda0 {
            let _ = writeln!(s, "lambda0:   {l0}");
        }
        let _ = writeln!(s, "lambda:    {}", self.lambda);
        let _ = writeln!(s, "exact:     {}", self.exact);
        let _ = writeln!(s, "case:      {}", self.case_tag);
        let c = &self.coefficients;
        let _ = writeln!(
            s,
            "a b c d:   {} {} {} {}",
            fmt_t(c.a),
            fmt_t(c.b),
            fmt_t(c.c),
            fmt_t(c.d)
        );
        let _ = writeln!(s, "x(0):      {}", fmt_pt(self.x_alpha0));
        let _ = writeln!(
            s,
            "x(alpha):  {} at alpha = {}",
            fmt_pt(self.x_alpha),
            self.alpha
        );
        let _ = writeln!(s, "x(1):      {}", fmt_pt(self.x_alpha1));
        if let Some(a) = &self.audit {
            let _ = writeln!(
                s,
                "audit:     {} ({} objective, {} points at step {}, gap {})",
                if a.passed { "passed" } else { "FAILED" },
                a.objective,
                a.grid_points,
                a.step,
                a.grid_gap
            );
            for f in &a.failures {
                let _ = writeln!(s, "  {f}");
            }
        }
        s
    }
}
