//! Command-line front end for the rectilinear minimax location solver.
//!
//! `rectimax solve <file>` reads a TOML instance (see [`input`]), solves it,
//! and prints a JSON report on standard output. Optional flags add a grid
//! audit, a contour export and a human-readable summary on standard error.

pub mod contours;
pub mod error;
pub mod input;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use rectimax_core::location::solve_constrained;
use rectimax_core::oracle::verify_report;
use rectimax_core::{GridSpec, ObjectiveMode, ProblemInstance, SolutionReport};

pub use contours::{emit_contours, write_contours};
pub use error::CliError;
pub use input::InstanceFile;
pub use report::Report;

/// Grid step of the audit when neither `--step` nor `audit.step` is given.
pub const DEFAULT_AUDIT_STEP: f64 = 0.05;

#[derive(Debug, Parser)]
#[command(
    name = "rectimax",
    version,
    about = "Rectilinear minimax facility location solver"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve an instance file and print a JSON report
    Solve(SolveArgs),
}

#[derive(Debug, Args)]
struct SolveArgs {
    /// TOML instance file
    file: PathBuf,

    /// Position on the solution segment, overriding the file
    #[arg(long)]
    alpha: Option<f64>,

    /// Check the solution against a brute-force grid search
    #[arg(long)]
    audit: bool,

    /// Grid step for the audit and the contour export
    #[arg(long)]
    step: Option<f64>,

    /// Write contour samples to this CSV file
    #[arg(long, value_name = "OUT", requires = "window")]
    contours: Option<PathBuf>,

    /// Contour window
    #[arg(
        long,
        value_name = "X1MIN,X1MAX,X2MIN,X2MAX",
        allow_hyphen_values = true,
        value_parser = parse_window,
        requires = "contours"
    )]
    window: Option<[f64; 4]>,

    /// Print a summary on standard error
    #[arg(short, long)]
    verbose: bool,
}

fn parse_window(s: &str) -> Result<[f64; 4], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(format!(
            "expected four comma-separated numbers, got {}",
            parts.len()
        ));
    }
    let mut out = [0.0; 4];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .parse()
            .map_err(|_| format!("`{part}` is not a number"))?;
    }
    Ok(out)
}

/// Reads and validates an instance file.
pub fn load_instance(path: &Path) -> Result<InstanceFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    InstanceFile::parse(&text, &path.display().to_string())
}

/// Validates the file and runs the solver; the constrained path is taken
/// whenever a `[constraint]` table is present.
pub fn solve_file(file: &InstanceFile) -> Result<(ProblemInstance, SolutionReport), CliError> {
    let instance = file.to_instance()?;
    let report = solve_constrained(&instance, file.alpha())?;
    Ok((instance, report))
}

/// Builds the audit window around the data and both endpoints and runs the
/// grid oracle.
pub fn audit(
    instance: &ProblemInstance,
    report: &SolutionReport,
    step: f64,
) -> Result<(GridSpec, rectimax_core::VerificationVerdict), CliError> {
    let mode = if instance.constraint().is_some() {
        ObjectiveMode::Merged
    } else {
        ObjectiveMode::Raw
    };
    let spec = GridSpec::auto_for(
        instance.points(),
        instance.constraint(),
        mode,
        step,
        &[report.endpoint_alpha0, report.endpoint_alpha1],
    )?;
    let verdict = verify_report(instance, report, &spec)?;
    Ok((spec, verdict))
}

fn check_step(step: f64) -> Result<f64, CliError> {
    if step.is_finite() && step > 0.0 {
        Ok(step)
    } else {
        Err(CliError::Validation(format!(
            "--step must be positive, got {step}"
        )))
    }
}

fn solve_command(
    args: &SolveArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let mut file = load_instance(&args.file)?;
    if let Some(alpha) = args.alpha {
        file.alpha = Some(alpha);
    }
    let (instance, solution) = solve_file(&file)?;
    let mut report = Report::new(&solution);

    let audit_step = args.step.or(file.audit.and_then(|a| a.step));
    if args.audit || file.audit.is_some() {
        let step = check_step(audit_step.unwrap_or(DEFAULT_AUDIT_STEP))?;
        let (spec, verdict) = audit(&instance, &solution, step)?;
        report = report.with_audit(&spec, &verdict);
    }

    if let (Some(path), Some([x1_min, x1_max, x2_min, x2_max])) = (&args.contours, args.window) {
        let step = args
            .step
            .ok_or_else(|| CliError::Validation("--contours needs --step".into()))
            .and_then(check_step)?;
        let window = GridSpec::new(x1_min, x1_max, x2_min, x2_max, step)?;
        emit_contours(path, &instance, &solution, &window)?;
    }

    let stdout_err = |e| CliError::io("<stdout>", e);
    out.write_all(report.to_json().as_bytes())
        .map_err(stdout_err)?;
    out.flush().map_err(stdout_err)?;
    if args.verbose {
        let _ = err.write_all(report.summary().as_bytes());
    }
    if let Some(a) = report.audit.as_ref().filter(|a| !a.passed) {
        return Err(CliError::Internal(format!(
            "audit failed: {}",
            a.failures.join("; ")
        )));
    }
    Ok(())
}

/// Runs the command line and returns the process exit code.
///
/// 0 on success, 1 for usage, parse and validation errors, 2 for I/O errors,
/// 3 for internal failures including a failed audit.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Solve(args) => solve_command(args, out, err),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
