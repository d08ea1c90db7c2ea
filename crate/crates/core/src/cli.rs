//! The `rotnum` command-line front end, kept free of process handling so it
//! can be driven from tests.
//!
//! Every CSV starts with a `# config ...` line holding the resolved
//! configuration. Numbers use the shortest decimal that round-trips.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use thiserror::Error;

use crate::circle::CirclePoint;
use crate::config::{ConfigError, RunConfig};
use crate::error::Error;
use crate::estimate::{estimate, estimator_compare, fixed_point_clearance, running_estimates, trajectory_records, Method};
use crate::mean::{bound_audit, parameter_sweep, partition_mean};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Estimate,
    Mean,
    Sweep,
    Records,
    Compare,
    Validate,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Invocation {
    pub command: Command,
    pub config: PathBuf,
    pub out: Option<PathBuf>,
    /// Overrides `run.reference`.
    pub reference: Option<f64>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(#[from] ConfigError),
    #[error("error: {0}")]
    Runtime(#[from] Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Runtime(_) | CliError::Io(_) => 1,
        }
    }
}

/// Loads the config, runs the command and reports errors on `stderr`.
/// Returns the process exit code.
pub fn run(inv: &Invocation, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = RunConfig::from_file(&inv.config)
        .map_err(CliError::from)
        .and_then(|cfg| execute(inv, &cfg, stdout, stderr));
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "{e}");
            e.exit_code()
        }
    }
}

/// Runs a command against an already loaded config. CSV goes to `--out`
/// when given, otherwise to `stdout`; summaries always go to `stdout`.
pub fn execute(inv: &Invocation, cfg: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    let header = config_header(cfg, inv.reference);
    let mut file = inv.out.as_ref().map(|p| File::create(p).map(BufWriter::new)).transpose()?;
    if inv.command == Command::Estimate {
        let trace = file.as_mut().map(|f| (f as &mut dyn Write, header.as_str()));
        return cmd_estimate(cfg, stdout, trace);
    }
    let csv_out: &mut dyn Write = match file.as_mut() {
        Some(f) => f,
        None => stdout,
    };
    match inv.command {
        Command::Estimate => unreachable!(),
        Command::Mean => cmd_mean(cfg, inv.reference, &header, csv_out, stderr),
        Command::Sweep => cmd_sweep(cfg, &header, csv_out),
        Command::Records => cmd_records(cfg, &header, csv_out),
        Command::Compare => cmd_compare(cfg, stdout),
        Command::Validate => cmd_validate(cfg, stdout),
    }
}

pub fn config_header(cfg: &RunConfig, reference: Option<f64>) -> String {
    match reference {
        Some(r) => format!("# config {} cli.reference={r}", cfg.resolved),
        None => format!("# config {}", cfg.resolved),
    }
}

fn start_point(cfg: &RunConfig) -> CirclePoint {
    cfg.run.convention.start(&*cfg.dynamics(), cfg.run.omega0)
}

/// One summary line: method, n, the counter as `k/n` for counting methods, and the value.
/// With a CSV sink, also writes the running estimate for every `n′ ≤ n`.
pub fn cmd_estimate(
    cfg: &RunConfig,
    out: &mut dyn Write,
    trace: Option<(&mut dyn Write, &str)>,
) -> Result<(), CliError> {
    let n = cfg.require_n()?;
    let sys = cfg.dynamics();
    let omega0 = start_point(cfg);
    let est = estimate(&*sys, cfg.run.method, omega0, cfg.run.x0, n)?;
    match est.counter {
        Some(k) => writeln!(out, "{} {} {}/{} {}", est.method.name(), n, k, n, est.value)?,
        None => writeln!(out, "{} {} {}", est.method.name(), n, est.value)?,
    }
    if let Some((csv, header)) = trace {
        let values = running_estimates(&*sys, cfg.run.method, omega0, cfg.run.x0, n)?;
        writeln!(csv, "{header}")?;
        writeln!(csv, "n,estimate")?;
        for (i, v) in values.iter().enumerate() {
            writeln!(csv, "{},{}", i + 1, v)?;
        }
        csv.flush()?;
    }
    Ok(())
}

/// CSV `n,mean,lower_band,upper_band` for `n′ = 1..=n`. Bands are centred on
/// the reference when one is known, otherwise on the final mean.
pub fn cmd_mean(
    cfg: &RunConfig,
    reference: Option<f64>,
    header: &str,
    out: &mut dyn Write,
    log: &mut dyn Write,
) -> Result<(), CliError> {
    let (n, m) = (cfg.require_n()?, cfg.require_m()?);
    let reference = reference.or(cfg.run.reference);
    let est = partition_mean(&*cfg.dynamics(), n, m, cfg.run.x0, cfg.run.method, true)?;
    let trace = est.trace.as_deref().ok_or(Error::MissingTrace)?;
    let centre = reference.unwrap_or(est.value);
    writeln!(out, "{header}")?;
    writeln!(out, "n,mean,lower_band,upper_band")?;
    for (i, v) in trace.iter().enumerate() {
        let band = 1.0 / (i + 1) as f64;
        writeln!(out, "{},{},{},{}", i + 1, v, centre - band, centre + band)?;
    }
    out.flush()?;
    writeln!(
        log,
        "mean {} over m = {} base points, n = {}; theorem band {}; discretisation error {}",
        est.value,
        m,
        n,
        est.theorem_band,
        est.discretisation_note()
    )?;
    if let Some(r) = reference {
        writeln!(log, "bound audit against {r}: worst slack {}", bound_audit(&est, r)?)?;
    }
    Ok(())
}

/// CSV `a,mean` in grid order.
pub fn cmd_sweep(cfg: &RunConfig, header: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let (n, m) = (cfg.require_n()?, cfg.require_m()?);
    let grid = cfg.require_grid()?;
    let sweep = parameter_sweep(&*cfg.dynamics(), grid, n, m, cfg.run.x0, cfg.run.method)?;
    writeln!(out, "{header}")?;
    writeln!(out, "a,mean")?;
    for (a, v) in sweep.values() {
        writeln!(out, "{a},{v}")?;
    }
    out.flush()?;
    Ok(())
}

/// CSV `n,record`: the steps at which the displacement sets a new high.
pub fn cmd_records(cfg: &RunConfig, header: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let n_max = cfg.require_n_max()?;
    let records = trajectory_records(&*cfg.dynamics(), start_point(cfg), cfg.run.x0, n_max)?;
    writeln!(out, "{header}")?;
    writeln!(out, "n,record")?;
    for r in records {
        writeln!(out, "{},{}", r.n, r.value)?;
    }
    out.flush()?;
    Ok(())
}

/// Table of the classical (standard lift), binary and visit (`z = 0`) estimates.
pub fn cmd_compare(cfg: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let n = cfg.require_n()?;
    let x0 = CirclePoint::new(cfg.run.x0).map_err(|e| ConfigError::Key { key: "run.x0".into(), message: e.to_string() })?;
    let c = estimator_compare(&*cfg.dynamics(), start_point(cfg), x0, n)?;
    let counter = |k: Option<i64>| k.map(|k| format!("{k}/{n}")).unwrap_or_default();
    writeln!(out, "{:<10} {:<24} counter", "quantity", "value")?;
    writeln!(out, "{:<10} {:<24}", "A", c.classical.value)?;
    writeln!(out, "{:<10} {:<24} {}", "B", c.binary.value, counter(c.binary.counter))?;
    writeln!(out, "{:<10} {:<24} {}", "V", c.visit.value, counter(c.visit.counter))?;
    writeln!(out, "{:<10} {:<24}", "|A-B|", c.gap)?;
    writeln!(out, "{:<10} {:<24}", "bound", c.bound)?;
    writeln!(out, "{:<10} {:<24}", "B=V", c.counters_equal)?;
    out.flush()?;
    Ok(())
}

/// Reports the resolved config; with `check_fixed_points` (or a visit
/// window away from 0) also the sampled fixed-point clearance.
pub fn cmd_validate(cfg: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    writeln!(out, "config ok")?;
    writeln!(out, "{}", cfg.resolved)?;
    let off_zero = matches!(cfg.run.method, Method::Visit { z } if z != CirclePoint::ZERO);
    if cfg.run.check_fixed_points || off_zero {
        let clearance = fixed_point_clearance(&*cfg.dynamics(), 64)?;
        writeln!(out, "fixed-point clearance {clearance}")?;
        if off_zero && clearance < 1e-6 {
            writeln!(out, "warning: maps appear to have fixed points; visit counting with z != 0 may not converge")?;
        }
    }
    out.flush()?;
    Ok(())
}
