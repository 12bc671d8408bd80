//! Run orchestration: executes the resolved configuration, persists CSVs,
//! and assembles the human-readable summary printed by `main`.

use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context};

use seird_core::analysis::{
    beta_sweep, compare_snapshots, eps_sweep, total_population, ComparisonReport,
};
use seird_core::kinetic::{run_kinetic, KineticBc, KineticRun, MicroInit};
use seird_core::macroscale::{run_macro, MacroBc, MacroRun};
use seird_core::model::{equilibrium_density, r0, N_SPECIES};
use seird_core::scenarios::{constant_beta_suite, Scenario};

use crate::config::{BcChoice, ResolvedRun, SolverChoice, SweepChoice};
use crate::output;

pub struct RunOutcome {
    pub files: Vec<PathBuf>,
    pub summary: Vec<String>,
}

/// Equilibrium inflow data pinned to the initial boundary densities.
fn inflow_from_initial(scenario: &Scenario) -> anyhow::Result<KineticBc> {
    let grid = scenario.spatial_grid()?;
    let vgrid = scenario.velocity_grid()?;
    let m_eq = equilibrium_density(&vgrid);
    let initial = scenario.initial_state(&grid);
    let live = initial.live();
    let mut left: [Vec<f64>; N_SPECIES] = Default::default();
    let mut right: [Vec<f64>; N_SPECIES] = Default::default();
    for i in 0..N_SPECIES {
        left[i] = m_eq.iter().map(|m| m * live[i][0]).collect();
        right[i] = m_eq
            .iter()
            .map(|m| m * live[i][grid.n_cells()])
            .collect();
    }
    Ok(KineticBc::Inflow { left, right })
}

fn kinetic_bc(run: &ResolvedRun) -> anyhow::Result<KineticBc> {
    match run.bc {
        BcChoice::Periodic => Ok(KineticBc::Periodic),
        BcChoice::Inflow => inflow_from_initial(&run.scenario),
        BcChoice::Neumann => {
            bail!("the kinetic solver supports periodic or inflow boundaries, not neumann")
        }
    }
}

fn macro_bc(run: &ResolvedRun) -> anyhow::Result<MacroBc> {
    match run.bc {
        BcChoice::Periodic => Ok(MacroBc::Periodic),
        BcChoice::Neumann => Ok(MacroBc::ZeroFlux),
        BcChoice::Inflow => {
            bail!("the macroscopic solver supports periodic or neumann boundaries, not inflow")
        }
    }
}

fn summarize_rate(run: &ResolvedRun, summary: &mut Vec<String>) {
    let rate = &run.scenario.rate;
    for (b, v) in rate.breakpoints().iter().zip(rate.values()) {
        match r0(&run.scenario.params, *v) {
            Ok(ratio) => summary.push(format!(
                "reproduction number from t = {b}: beta = {v} -> R0 = {ratio:.4}"
            )),
            Err(_) => summary.push(format!("reproduction number undefined for beta = {v}")),
        }
    }
}

fn drift_line(label: &str, initial: f64, fin: f64) -> String {
    let drift = if initial != 0.0 {
        ((fin - initial) / initial).abs()
    } else {
        (fin - initial).abs()
    };
    format!("conservation drift ({label}): {drift:.3e} relative")
}

fn run_kinetic_leg(run: &ResolvedRun) -> anyhow::Result<KineticRun> {
    let bc = kinetic_bc(run)?;
    Ok(run_kinetic(
        &run.scenario,
        run.eps,
        run.t_final,
        &run.output_times,
        &bc,
        MicroInit::LocalEquilibrium,
    )?)
}

fn run_macro_leg(run: &ResolvedRun) -> anyhow::Result<MacroRun> {
    let bc = macro_bc(run)?;
    Ok(run_macro(
        &run.scenario,
        run.t_final,
        &run.output_times,
        bc,
    )?)
}

pub fn execute(run: &ResolvedRun) -> anyhow::Result<RunOutcome> {
    let started = Instant::now();
    std::fs::create_dir_all(&run.out_dir)
        .with_context(|| format!("cannot create output directory {}", run.out_dir.display()))?;
    let grid = run.scenario.spatial_grid()?;

    let mut files = Vec::new();
    let mut summary = vec![format!(
        "scenario: {}  bc: {:?}  dt: {}",
        run.scenario.name, run.bc, run.scenario.dt
    )];
    summarize_rate(run, &mut summary);

    match run.sweep {
        Some(SweepChoice::Eps) => {
            if run.bc != BcChoice::Periodic {
                bail!("the eps sweep compares both solvers and requires periodic boundaries");
            }
            let probe_times: Vec<f64> = run
                .output_times
                .iter()
                .copied()
                .filter(|&t| t > 0.0)
                .collect();
            if probe_times.is_empty() {
                bail!("the eps sweep needs at least one positive output time");
            }
            let reports = eps_sweep(
                &run.scenario,
                &run.scenario.eps_list,
                run.t_final,
                &probe_times,
            )?;
            let path = run.out_dir.join("comparison.csv");
            output::write_comparison(&path, &reports)?;
            summary.push(format!(
                "eps sweep: {} eps values x {} probe times",
                run.scenario.eps_list.len(),
                probe_times.len()
            ));
            files.push(path);
        }
        Some(SweepChoice::Beta) => {
            let rates = constant_beta_suite();
            let sample_interval = (run.t_final / 500.0).max(run.scenario.dt);
            let series = beta_sweep(
                &run.scenario,
                &rates,
                run.t_final,
                run.probe_x,
                sample_interval,
            )?;
            for s in &series {
                let path = run
                    .out_dir
                    .join(format!("timeseries_beta_{}.csv", s.beta));
                output::write_probe_series(&path, s)?;
                files.push(path);
            }
            summary.push(format!(
                "beta sweep: {} rates probed at x = {}",
                series.len(),
                series
                    .first()
                    .map(|s| s.probe_x.to_string())
                    .unwrap_or_default()
            ));
        }
        None => {
            let kinetic_run = match run.solver {
                SolverChoice::Kinetic | SolverChoice::Both => Some(run_kinetic_leg(run)?),
                SolverChoice::Macro => None,
            };
            let macro_run = match run.solver {
                SolverChoice::Macro | SolverChoice::Both => Some(run_macro_leg(run)?),
                SolverChoice::Kinetic => None,
            };

            if let Some(kin) = &kinetic_run {
                let path = run.out_dir.join("kinetic_snapshots.csv");
                output::write_snapshots(&path, &kin.snapshots, &grid)?;
                files.push(path);
                summary.push(format!("kinetic run: eps = {}", run.eps));
                if let Some(warning) = &kin.diagnostics.stability_warning {
                    summary.push(format!("warning: {warning}"));
                }
                summary.push(format!(
                    "micro zero-mean residual: {:.3e}",
                    kin.diagnostics.max_zero_mean_residual
                ));
                let initial = total_population(&kin.snapshots[0], &grid);
                let fin = total_population(kin.last(), &grid);
                summary.push(drift_line("kinetic", initial, fin));
            }
            if let Some(mac) = &macro_run {
                let path = run.out_dir.join("macro_snapshots.csv");
                output::write_snapshots(&path, &mac.snapshots, &grid)?;
                files.push(path);
                let initial = total_population(&mac.snapshots[0], &grid);
                let fin = total_population(mac.last(), &grid);
                summary.push(drift_line("macro", initial, fin));
            }
            if let (Some(kin), Some(mac)) = (&kinetic_run, &macro_run) {
                let mut reports: Vec<ComparisonReport> = Vec::new();
                for (k_snap, m_snap) in kin.snapshots.iter().zip(&mac.snapshots) {
                    reports.push(compare_snapshots(k_snap, m_snap, run.eps, k_snap.t, &grid)?);
                }
                let path = run.out_dir.join("comparison.csv");
                output::write_comparison(&path, &reports)?;
                files.push(path);
            }
        }
    }

    summary.push(format!(
        "wall time: {:.2} s",
        started.elapsed().as_secs_f64()
    ));
    Ok(RunOutcome { files, summary })
}
