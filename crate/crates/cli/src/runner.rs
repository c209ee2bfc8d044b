//! The batch pipeline: build or resume a state, run the scans over the radius
//! grid, emit report rows and checkpoints.

use crate::config::RunConfig;
use crate::report::{NonResonantRow, ResonantRow, NONRES_HEADER, RES_HEADER};
use birkstab::checkpoint;
use birkstab::majorant::{
    escape_time, remainder_parts, resonant_excursion, resonant_rho0, MajorantError, RadiusOutcome,
    StabilityResult, TailMode,
};
use birkstab::rigor::exp_lower;
use birkstab::normalform::{HamiltonianState, NormalizeError, ResonanceMode};
use std::fmt;
use std::fs;
use std::path::Path;

/// What the process should report through its exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunStatus {
    Success,
    ConfigOrIo,
    ResonanceDetected,
    NoStableRegime,
    SafeRangeAbort,
}

impl RunStatus {
    pub fn code(self) -> i32 {
        match self {
            RunStatus::Success => 0,
            RunStatus::ConfigOrIo => 2,
            RunStatus::ResonanceDetected => 3,
            RunStatus::NoStableRegime => 4,
            RunStatus::SafeRangeAbort => 5,
        }
    }
}

#[derive(Debug)]
pub enum RunError {
    Io(std::io::Error),
    Model(String),
    Majorant(MajorantError),
    Checkpoint(String),
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::Io(e) => write!(f, "io error: {e}"),
            RunError::Model(e) => write!(f, "model error: {e}"),
            RunError::Majorant(e) => write!(f, "{e}"),
            RunError::Checkpoint(e) => write!(f, "checkpoint error: {e}"),
        }
    }
}

impl std::error::Error for RunError {}

impl RunError {
    pub fn status(&self) -> RunStatus {
        match self {
            RunError::Majorant(MajorantError::Normalize(NormalizeError::Resonance { .. })) => {
                RunStatus::ResonanceDetected
            }
            RunError::Majorant(
                MajorantError::TailDivergent { .. } | MajorantError::NoStableRegime { .. },
            ) => RunStatus::NoStableRegime,
            RunError::Majorant(_) => RunStatus::NoStableRegime,
            _ => RunStatus::ConfigOrIo,
        }
    }
}

impl From<std::io::Error> for RunError {
    fn from(e: std::io::Error) -> Self {
        RunError::Io(e)
    }
}

pub struct RunReport {
    pub rows: Vec<String>,
    pub full_rows: Vec<String>,
    pub first_error: Option<RunError>,
}

/// Run the configured pipeline.  Results for radii completed before any error
/// are flushed to the output files; the first error (if any) decides the exit
/// status.
pub fn run(config: &RunConfig, resume: Option<&Path>) -> Result<RunReport, RunError> {
    let mut state = match resume {
        Some(path) => {
            let text = fs::read_to_string(path)?;
            checkpoint::parse_state(&text).map_err(|e| RunError::Checkpoint(e.to_string()))?
        }
        None => config
            .model
            .build(config.mode, config.r_i, config.r_ii)
            .map_err(|e| RunError::Model(e.to_string()))?,
    };
    state.deriv_mode = config.deriv_mode;

    let resonant_angle = match config.mode {
        ResonanceMode::NonResonant => None,
        ResonanceMode::SingleResonantAngle { angle } => Some(angle),
    };

    let outcomes = scan_with_checkpoints(&mut state, config)?;

    let mut rows = Vec::new();
    let mut full_rows = Vec::new();
    rows.push(if resonant_angle.is_some() { RES_HEADER } else { NONRES_HEADER }.to_string());
    full_rows.push(
        if resonant_angle.is_some() {
            "rho0sq\trhostar2sq\trhosq\tT\tlogT"
        } else {
            "rho0\trho\tr_opt\ta_r\tlog_R\tlog_Idot\tlog_T\ttail_divergent\thit_horizon"
        }
        .to_string(),
    );
    let mut first_error: Option<RunError> = None;

    for outcome in outcomes {
        match outcome {
            Ok(result) => match resonant_angle {
                None => {
                    let row = NonResonantRow { result };
                    rows.push(row.tsv(config.report_digits));
                    full_rows.push(row.tsv_full());
                }
                Some(angle) => match resonant_row(&state, config, angle, &result) {
                    Ok(row) => {
                        rows.push(row.tsv(config.report_digits));
                        full_rows.push(row.tsv_full());
                    }
                    Err(e) => {
                        if first_error.is_none() {
                            first_error = Some(e);
                        }
                    }
                },
            },
            Err(e) => {
                if first_error.is_none() {
                    first_error = Some(RunError::Majorant(e));
                }
            }
        }
    }

    if let Some(path) = &config.out_path {
        fs::write(path, rows.join("\n") + "\n")?;
    }
    if let Some(path) = &config.full_out_path {
        fs::write(path, full_rows.join("\n") + "\n")?;
    }
    Ok(RunReport { rows, full_rows, first_error })
}

/// Drive the shared evolution like `scan_grid`, writing a checkpoint after
/// every explicit step.
fn scan_with_checkpoints(
    state: &mut HamiltonianState,
    config: &RunConfig,
) -> Result<Vec<RadiusOutcome>, RunError> {
    let stepper = |state: &mut HamiltonianState| -> Result<(), NormalizeError> {
        let explicit = state.steps_done < state.r_i;
        if explicit {
            state.normalization_step()?;
        } else {
            state.estimate_step()?;
        }
        Ok(())
    };
    let mut after_step = |state: &HamiltonianState| -> Result<(), RunError> {
        if let Some(prefix) = &config.checkpoint_path {
            if state.steps_done <= state.r_i {
                let path = prefix.with_extension(format!("r{:04}.ckpt", state.steps_done));
                fs::write(path, checkpoint::serialize_state(state))?;
            }
        }
        Ok(())
    };
    birkstab::majorant::scan_grid_with(
        state,
        &config.rho_grid,
        config.scan_tail,
        config.time_tail,
        stepper,
        &mut |s| after_step(s).map_err(|e| e.to_string()),
    )
    .map_err(RunError::Checkpoint)
}

/// Resonant post-processing: the consistency radius from `beta`, the escape
/// time over the non-resonant actions, and the energy-conservation bound on
/// the resonant one.  The mutual-dependence loop converges immediately
/// because the excursion bound does not shrink with T; it is capped anyway.
fn resonant_row(
    state: &HamiltonianState,
    config: &RunConfig,
    angle: usize,
    result: &StabilityResult,
) -> Result<ResonantRow, RunError> {
    let bounds = &result.bounds_at_opt;
    let nu = &state.omega;
    let rho = result.rho;
    let mut rho0 = resonant_rho0(rho, config.beta, nu, angle).map_err(RunError::Majorant)?;
    let mut last = None;
    for _ in 0..8 {
        let log_t = escape_time(bounds, rho, rho0, config.time_tail).map_err(RunError::Majorant)?;
        let (_, rho_star_sq) =
            resonant_excursion(bounds, nu, angle, rho, rho0).map_err(RunError::Majorant)?;
        // Consistent when the claimed starting ball for the resonant action is
        // positive; the window [−T, T] then self-validates.
        if rho_star_sq > 0.0 {
            last = Some((log_t, rho_star_sq));
            break;
        }
        rho0 = 0.5 * (rho0 + rho);
        last = None;
    }
    let (log_t, rho_star_sq) = last.ok_or(RunError::Majorant(MajorantError::NotConfinable))?;
    let rho_sq = rho * rho;
    Ok(ResonantRow {
        rho0_sq: rho0 * rho0,
        rho_star_sq,
        rho_sq,
        t_lower: exp_lower(log_t.logval.min(349.0)),
        log_t: log_t.logval,
    })
}

/// Diagnostic remainder at a given radius and the current state (used by the
/// appendix verification path).
pub fn remainder_at(state: &HamiltonianState, rho: f64, mode: TailMode) -> f64 {
    let parts = remainder_parts(&state.class_bounds(), rho);
    parts.value(mode).0.logval
}
