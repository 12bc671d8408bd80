//! Finite-difference solver for the limiting SEIRD reaction-diffusion system.
//!
//! Forward Euler in time with the three-point second difference in space,
//! guarded by the explicit parabolic stability bound. This is the reference
//! the kinetic solver must reproduce as the mean free path goes to zero, so
//! the reaction handling deliberately mirrors the kinetic macro update.

use serde::{Deserialize, Serialize};

use crate::error::{Result, SimError};
use crate::grid::SpatialGrid;
use crate::model::{reaction_rates_raw, ModelParams};
use crate::scenarios::Scenario;

/// Macroscopic fields on the node grid.
#[derive(Debug, Clone, PartialEq)]
pub struct MacroState {
    pub s: Vec<f64>,
    pub e: Vec<f64>,
    pub i: Vec<f64>,
    pub r: Vec<f64>,
    pub dead: Vec<f64>,
    pub t: f64,
}

impl MacroState {
    pub fn zeros(n_nodes: usize) -> Self {
        MacroState {
            s: vec![0.0; n_nodes],
            e: vec![0.0; n_nodes],
            i: vec![0.0; n_nodes],
            r: vec![0.0; n_nodes],
            dead: vec![0.0; n_nodes],
            t: 0.0,
        }
    }

    pub fn n_nodes(&self) -> usize {
        self.s.len()
    }

    /// Live compartments in species order (S, E, I, R).
    pub fn live(&self) -> [&[f64]; 4] {
        [&self.s, &self.e, &self.i, &self.r]
    }

    pub fn field(&self, c: crate::model::Compartment) -> &[f64] {
        match c {
            crate::model::Compartment::S => &self.s,
            crate::model::Compartment::E => &self.e,
            crate::model::Compartment::I => &self.i,
            crate::model::Compartment::R => &self.r,
            crate::model::Compartment::D => &self.dead,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.s.iter().all(|x| x.is_finite())
            && self.e.iter().all(|x| x.is_finite())
            && self.i.iter().all(|x| x.is_finite())
            && self.r.iter().all(|x| x.is_finite())
            && self.dead.iter().all(|x| x.is_finite())
    }

    pub fn max_abs(&self) -> f64 {
        [&self.s, &self.e, &self.i, &self.r, &self.dead]
            .iter()
            .flat_map(|v| v.iter())
            .fold(0.0_f64, |m, x| m.max(x.abs()))
    }
}

/// Boundary treatment for the macroscopic stencil.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MacroBc {
    /// Wrap indices; the duplicated endpoint nodes stay identified.
    Periodic,
    /// Homogeneous Neumann via mirror ghost nodes (`u_{-1} = u_1`).
    ZeroFlux,
}

/// Three-point second difference `(u_{j+1} - 2 u_j + u_{j-1}) / dx^2`.
pub fn laplacian(u: &[f64], grid: &SpatialGrid, bc: MacroBc) -> Vec<f64> {
    let mut out = vec![0.0; u.len()];
    laplacian_into(u, grid, bc, &mut out);
    out
}

fn laplacian_into(u: &[f64], grid: &SpatialGrid, bc: MacroBc, out: &mut [f64]) {
    let n = grid.n_cells();
    debug_assert_eq!(u.len(), n + 1);
    let inv_dx2 = 1.0 / (grid.dx() * grid.dx());
    for j in 1..n {
        out[j] = (u[j + 1] - 2.0 * u[j] + u[j - 1]) * inv_dx2;
    }
    match bc {
        MacroBc::Periodic => {
            // Node 0 and node n are the same physical point.
            out[0] = (u[1] - 2.0 * u[0] + u[n - 1]) * inv_dx2;
            out[n] = (u[1] - 2.0 * u[n] + u[n - 1]) * inv_dx2;
        }
        MacroBc::ZeroFlux => {
            out[0] = 2.0 * (u[1] - u[0]) * inv_dx2;
            out[n] = 2.0 * (u[n - 1] - u[n]) * inv_dx2;
        }
    }
}

/// Largest stable time step for the explicit diffusion stencil,
/// `dx^2 / (2 max_i d_i)`; unbounded when every diffusivity vanishes.
pub fn cfl_max_dt(grid: &SpatialGrid, p: &ModelParams) -> f64 {
    let d_max = p.diffusivities.iter().fold(0.0_f64, |m, d| m.max(*d));
    if d_max == 0.0 {
        f64::INFINITY
    } else {
        grid.dx() * grid.dx() / (2.0 * d_max)
    }
}

/// One forward-Euler step of the reaction-diffusion system.
pub fn macro_rd_step(
    state: &MacroState,
    beta: f64,
    grid: &SpatialGrid,
    p: &ModelParams,
    dt: f64,
    bc: MacroBc,
) -> Result<MacroState> {
    if !dt.is_finite() || dt <= 0.0 {
        return Err(SimError::invalid(format!("time step must be positive, got {dt}")));
    }
    let max_dt = cfl_max_dt(grid, p);
    if dt > max_dt {
        return Err(SimError::StepSize { dt, max_dt });
    }
    let mut next = MacroState::zeros(state.n_nodes());
    let mut lap = vec![0.0; state.n_nodes()];
    step_into(state, beta, grid, p, dt, bc, &mut next, &mut lap);
    Ok(next)
}

/// Fills `next` from `state`; `lap` is scratch space of node length.
#[allow(clippy::too_many_arguments)]
fn step_into(
    state: &MacroState,
    beta: f64,
    grid: &SpatialGrid,
    p: &ModelParams,
    dt: f64,
    bc: MacroBc,
    next: &mut MacroState,
    lap: &mut [f64],
) {
    let n_nodes = state.n_nodes();
    // Diffusion contribution per live compartment.
    let fields = [&state.s, &state.e, &state.i, &state.r];
    let targets = [&mut next.s, &mut next.e, &mut next.i, &mut next.r];
    for ((field, target), &d) in fields.iter().zip(targets).zip(&p.diffusivities) {
        if d == 0.0 {
            target.copy_from_slice(field);
        } else {
            laplacian_into(field, grid, bc, lap);
            for j in 0..n_nodes {
                target[j] = field[j] + dt * d * lap[j];
            }
        }
    }
    // Reactions and the dead compartment, all evaluated at the old time level.
    for j in 0..n_nodes {
        let rates = reaction_rates_raw(state.s[j], state.e[j], state.i[j], state.r[j], beta, p);
        next.s[j] += dt * rates.s;
        next.e[j] += dt * rates.e;
        next.i[j] += dt * rates.i;
        next.r[j] += dt * rates.r;
        next.dead[j] = state.dead[j] + dt * rates.d;
    }
    next.t = state.t + dt;
}

/// Trajectory of macroscopic snapshots.
#[derive(Debug, Clone)]
pub struct MacroRun {
    pub snapshots: Vec<MacroState>,
}

impl MacroRun {
    /// Snapshot nearest to `t`, if one was recorded within half a percent of it.
    pub fn at_time(&self, t: f64) -> Option<&MacroState> {
        self.snapshots
            .iter()
            .min_by(|a, b| (a.t - t).abs().partial_cmp(&(b.t - t).abs()).unwrap())
            .filter(|s| (s.t - t).abs() <= 1e-9 + 5e-3 * t.abs())
    }

    pub fn last(&self) -> &MacroState {
        self.snapshots.last().expect("runs always hold the initial snapshot")
    }
}

/// Map requested output times to step indices (nearest step, deduplicated,
/// excluding step 0 which is always snapshotted).
pub(crate) fn output_steps(dt: f64, n_steps: usize, output_times: &[f64]) -> Vec<usize> {
    let mut steps: Vec<usize> = output_times
        .iter()
        .map(|&t| ((t / dt).round().max(0.0) as usize).min(n_steps))
        .filter(|&k| k > 0)
        .collect();
    steps.sort_unstable();
    steps.dedup();
    steps
}

pub(crate) fn step_count(t_final: f64, dt: f64) -> usize {
    (t_final / dt).round() as usize
}

/// Run the macroscopic solver on a scenario up to `t_final`, snapshotting
/// the initial state plus the requested times (nearest step).
pub fn run_macro(
    scenario: &Scenario,
    t_final: f64,
    output_times: &[f64],
    bc: MacroBc,
) -> Result<MacroRun> {
    if !t_final.is_finite() || t_final < 0.0 {
        return Err(SimError::invalid(format!(
            "final time must be finite and nonnegative, got {t_final}"
        )));
    }
    let grid = scenario.spatial_grid()?;
    let p = &scenario.params;
    let dt = scenario.dt;
    let max_dt = cfl_max_dt(&grid, p);
    if dt > max_dt {
        return Err(SimError::StepSize { dt, max_dt });
    }

    let initial = scenario.initial_state(&grid);
    let n_steps = step_count(t_final, dt);
    let snap_steps = output_steps(dt, n_steps, output_times);

    let mut snapshots = Vec::with_capacity(snap_steps.len() + 1);
    snapshots.push(initial.clone());

    let mut cur = initial;
    let mut next = MacroState::zeros(cur.n_nodes());
    let mut lap = vec![0.0; cur.n_nodes()];
    let mut snap_iter = snap_steps.iter().copied().peekable();

    for k in 0..n_steps {
        let t_k = k as f64 * dt;
        let beta = scenario.rate.beta_at(t_k)?;
        step_into(&cur, beta, &grid, p, dt, bc, &mut next, &mut lap);
        // Keep t free of accumulated addition drift.
        next.t = (k + 1) as f64 * dt;
        std::mem::swap(&mut cur, &mut next);
        if !cur.is_finite() {
            return Err(SimError::BlowUp {
                step: k + 1,
                time: cur.t,
                context: "non-finite macroscopic field".into(),
            });
        }
        if snap_iter.peek() == Some(&(k + 1)) {
            snap_iter.next();
            snapshots.push(cur.clone());
        }
    }
    Ok(MacroRun { snapshots })
}
