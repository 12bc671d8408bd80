//! Asymptotic-preserving micro-macro solver for the kinetic SEIRD model.
//!
//! The distribution of each live species is split as
//! `f_i = M(v) u_i(t,x) + eps * g_i(t,x,v)` with `<g_i> = 0`. One time step
//! advances the micro perturbations `g_i` on faces with the stiff relaxation
//! taken implicitly, then the macro densities `u_i` on nodes using the new
//! micro flux, then the dead compartment. The relaxation denominator
//! `1 + dt*sigma/eps^2` keeps the step uniformly stable in `eps`, and as
//! `eps -> 0` the update collapses onto the explicit reaction-diffusion
//! stencil of [`crate::macroscale`].

use crate::error::{Result, SimError};
use crate::grid::{SpatialGrid, VelocityField, VelocityGrid};
use crate::macroscale::{output_steps, step_count, MacroState};
use crate::model::{reaction_rates_raw, ModelParams, TransmissionRate, N_SPECIES};
use crate::scenarios::Scenario;

/// Boundary handling for the kinetic solver.
#[derive(Debug, Clone, PartialEq)]
pub enum KineticBc {
    /// Wrap faces and identify the endpoint nodes.
    Periodic,
    /// Prescribed incoming distributions per species: `left[i]` feeds
    /// velocities `v > 0` at the left wall, `right[i]` velocities `v < 0`
    /// at the right wall.
    Inflow {
        left: [Vec<f64>; N_SPECIES],
        right: [Vec<f64>; N_SPECIES],
    },
}

impl KineticBc {
    fn validate(&self, n_vel: usize) -> Result<()> {
        if let KineticBc::Inflow { left, right } = self {
            for cols in [left, right] {
                for (i, col) in cols.iter().enumerate() {
                    if col.len() != n_vel {
                        return Err(SimError::invalid(format!(
                            "inflow distribution for species {i} has length {}, expected {n_vel}",
                            col.len()
                        )));
                    }
                    if col.iter().any(|x| *x < 0.0 || !x.is_finite()) {
                        return Err(SimError::invalid(format!(
                            "inflow distribution for species {i} must be finite and nonnegative"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// How the initial micro perturbation is prepared.
#[derive(Debug, Clone, Copy)]
pub enum MicroInit<'a> {
    /// Leading-order closure `g = -(1/sigma) v M(v) du/dx` (well-prepared
    /// data, no initial layer). Species with infinite relaxation start at 0.
    LocalEquilibrium,
    /// `g = 0` everywhere.
    Zero,
    /// `g = (f0 - M <f0>) / eps` from full distributions sampled on faces.
    FromDistribution(&'a [VelocityField; N_SPECIES]),
}

/// Full solver state: macro densities on nodes, micro perturbations on faces.
#[derive(Debug, Clone, PartialEq)]
pub struct KineticState {
    /// Live species densities (S, E, I, R) on nodes.
    pub u: [Vec<f64>; N_SPECIES],
    /// Dead density on nodes.
    pub dead: Vec<f64>,
    /// Micro perturbations on faces (ghosts included).
    pub g: [VelocityField; N_SPECIES],
    /// Mean free path.
    pub eps: f64,
    pub t: f64,
}

impl KineticState {
    /// Build a kinetic state from macroscopic fields, preparing the micro
    /// part with `init` and filling the ghost faces for `bc`.
    pub fn from_macro(
        state: &MacroState,
        eps: f64,
        init: MicroInit,
        grid: &SpatialGrid,
        vgrid: &VelocityGrid,
        p: &ModelParams,
        bc: &KineticBc,
    ) -> Result<Self> {
        if !eps.is_finite() || eps <= 0.0 {
            return Err(SimError::invalid(format!(
                "mean free path must be positive and finite, got {eps}"
            )));
        }
        if state.n_nodes() != grid.n_nodes() {
            return Err(SimError::invalid(format!(
                "state has {} nodes but the grid has {}",
                state.n_nodes(),
                grid.n_nodes()
            )));
        }
        bc.validate(vgrid.len())?;
        let u = [
            state.s.clone(),
            state.e.clone(),
            state.i.clone(),
            state.r.clone(),
        ];
        let g = init_micro(&u, init, grid, vgrid, p, eps)?;
        let mut out = KineticState {
            u,
            dead: state.dead.clone(),
            g,
            eps,
            t: state.t,
        };
        sync_ghost_faces(&mut out, grid, vgrid, bc);
        Ok(out)
    }

    /// Copy of the macroscopic view (node densities and time).
    pub fn to_macro(&self) -> MacroState {
        MacroState {
            s: self.u[0].clone(),
            e: self.u[1].clone(),
            i: self.u[2].clone(),
            r: self.u[3].clone(),
            dead: self.dead.clone(),
            t: self.t,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.u.iter().all(|u| u.iter().all(|x| x.is_finite()))
            && self.dead.iter().all(|x| x.is_finite())
            && self.g.iter().all(|g| g.is_finite())
    }

    pub fn max_abs_u(&self) -> f64 {
        self.u
            .iter()
            .flat_map(|u| u.iter())
            .fold(0.0_f64, |m, x| m.max(x.abs()))
    }

    pub fn min_u(&self) -> f64 {
        self.u
            .iter()
            .flat_map(|u| u.iter())
            .fold(f64::INFINITY, |m, x| m.min(*x))
    }
}

/// Orthogonal projection onto the equilibrium span: `P(h) = <h> M(v)`.
pub fn project(h: &[f64], m_eq: &[f64], vgrid: &VelocityGrid) -> Result<Vec<f64>> {
    if h.len() != vgrid.len() || m_eq.len() != vgrid.len() {
        return Err(SimError::invalid(format!(
            "projection shapes {} / {} do not match velocity grid size {}",
            h.len(),
            m_eq.len(),
            vgrid.len()
        )));
    }
    let mass = vgrid.mass(h);
    Ok(m_eq.iter().map(|m| mass * m).collect())
}

/// Prepare the initial micro perturbations on interior faces.
///
/// All modes end with the zero-mean projection, so `<g_i> = 0` holds at
/// every face regardless of the input.
pub fn init_micro(
    u: &[Vec<f64>; N_SPECIES],
    mode: MicroInit,
    grid: &SpatialGrid,
    vgrid: &VelocityGrid,
    p: &ModelParams,
    eps: f64,
) -> Result<[VelocityField; N_SPECIES]> {
    let n_cells = grid.n_cells();
    let n_vel = vgrid.len();
    for (i, col) in u.iter().enumerate() {
        if col.len() != grid.n_nodes() {
            return Err(SimError::invalid(format!(
                "species {i} has {} nodes, expected {}",
                col.len(),
                grid.n_nodes()
            )));
        }
    }
    let m_eq = 1.0 / vgrid.measure();
    let v = vgrid.nodes();
    let w = vgrid.weights();
    let mut fields = [
        VelocityField::zeros(n_cells + 2, n_vel),
        VelocityField::zeros(n_cells + 2, n_vel),
        VelocityField::zeros(n_cells + 2, n_vel),
        VelocityField::zeros(n_cells + 2, n_vel),
    ];
    match mode {
        MicroInit::Zero => {}
        MicroInit::LocalEquilibrium => {
            for species in 0..N_SPECIES {
                let sigma = p.sigmas[species];
                if !sigma.is_finite() {
                    continue;
                }
                for pf in 1..=n_cells {
                    let du = (u[species][pf] - u[species][pf - 1]) / grid.dx();
                    let face = fields[species].face_mut(pf);
                    for (slot, vl) in face.iter_mut().zip(v) {
                        *slot = -(1.0 / sigma) * vl * m_eq * du;
                    }
                }
            }
        }
        MicroInit::FromDistribution(f0) => {
            if !eps.is_finite() || eps <= 0.0 {
                return Err(SimError::invalid(
                    "distribution-based initialization needs a positive eps",
                ));
            }
            for species in 0..N_SPECIES {
                if f0[species].n_faces() != n_cells + 2 || f0[species].n_vel() != n_vel {
                    return Err(SimError::invalid(format!(
                        "initial distribution for species {species} has shape {}x{}, expected {}x{}",
                        f0[species].n_faces(),
                        f0[species].n_vel(),
                        n_cells + 2,
                        n_vel
                    )));
                }
                for pf in 1..=n_cells {
                    let sample = f0[species].face(pf);
                    let mass = vgrid.mass(sample);
                    let face = fields[species].face_mut(pf);
                    for (slot, f) in face.iter_mut().zip(sample) {
                        *slot = (f - m_eq * mass) / eps;
                    }
                }
            }
        }
    }
    // Zero-mean projection on every interior face.
    for field in &mut fields {
        for pf in 1..=n_cells {
            let face = field.face_mut(pf);
            let mut mass = 0.0;
            for (wl, x) in w.iter().zip(face.iter()) {
                mass += wl * x;
            }
            for x in face.iter_mut() {
                *x -= mass * m_eq;
            }
        }
    }
    Ok(fields)
}

/// Neighbouring face storage indices for the upwind stencil at face `pf`.
fn neighbors(pf: usize, n_cells: usize, periodic: bool) -> (usize, usize) {
    let left = if periodic && pf == 1 { n_cells } else { pf - 1 };
    let right = if periodic && pf == n_cells { 1 } else { pf + 1 };
    (left, right)
}

/// Refresh the ghost faces to match the boundary condition and the current
/// interior state.
pub fn sync_ghost_faces(
    state: &mut KineticState,
    grid: &SpatialGrid,
    vgrid: &VelocityGrid,
    bc: &KineticBc,
) {
    let n_cells = grid.n_cells();
    let n_vel = vgrid.len();
    match bc {
        KineticBc::Periodic => {
            for g in &mut state.g {
                g.copy_face(0, n_cells);
                g.copy_face(n_cells + 1, 1);
            }
        }
        KineticBc::Inflow { left, right } => {
            let m_eq = 1.0 / vgrid.measure();
            let v = vgrid.nodes();
            let two_over_eps = 2.0 / state.eps;
            for species in 0..N_SPECIES {
                let u_left = state.u[species][0];
                let u_right = state.u[species][n_cells];
                let first: Vec<f64> = state.g[species].face(1).to_vec();
                let last: Vec<f64> = state.g[species].face(n_cells).to_vec();
                let ghost0 = state.g[species].face_mut(0);
                for l in 0..n_vel {
                    ghost0[l] = if v[l] > 0.0 {
                        two_over_eps * (left[species][l] - u_left * m_eq) - first[l]
                    } else {
                        first[l]
                    };
                }
                let ghost_n = state.g[species].face_mut(n_cells + 1);
                for l in 0..n_vel {
                    ghost_n[l] = if v[l] < 0.0 {
                        two_over_eps * (right[species][l] - u_right * m_eq) - last[l]
                    } else {
                        last[l]
                    };
                }
            }
        }
    }
}

/// Advance the micro perturbations one step (relaxation implicit, transport
/// and sources explicit). Ghost faces of the returned fields still hold the
/// previous values; [`ap_step`] refreshes them after the macro update.
pub fn micro_step(
    state: &KineticState,
    beta: f64,
    grid: &SpatialGrid,
    vgrid: &VelocityGrid,
    p: &ModelParams,
    dt: f64,
    bc: &KineticBc,
) -> Result<[VelocityField; N_SPECIES]> {
    if !state.eps.is_finite() || state.eps <= 0.0 {
        return Err(SimError::invalid(format!(
            "mean free path must be positive and finite, got {}",
            state.eps
        )));
    }
    if !dt.is_finite() || dt <= 0.0 {
        return Err(SimError::invalid(format!("time step must be positive, got {dt}")));
    }
    let n_cells = grid.n_cells();
    let n_vel = vgrid.len();
    let dx = grid.dx();
    let m_eq = 1.0 / vgrid.measure();
    let inv_eps = 1.0 / state.eps;
    let inv_eps2 = inv_eps * inv_eps;
    let periodic = matches!(bc, KineticBc::Periodic);
    let v = vgrid.nodes();
    let w = vgrid.weights();
    let sum_w: f64 = w.iter().sum();

    let mut out = state.g.clone();
    let mut phi = vec![0.0; n_vel];

    for species in 0..N_SPECIES {
        let sigma = p.sigmas[species];
        if !sigma.is_finite() {
            // Infinite relaxation pins the perturbation to zero.
            continue;
        }
        let relax = 1.0 + dt * sigma * inv_eps2;
        let g_old = &state.g[species];
        let u_own = &state.u[species];
        for pf in 1..=n_cells {
            let (left, right) = neighbors(pf, n_cells, periodic);
            let here = g_old.face(pf);
            let lft = g_old.face(left);
            let rgt = g_old.face(right);

            // First-order upwind transport and its velocity mean.
            let mut mean_phi = 0.0;
            for l in 0..n_vel {
                let vl = v[l];
                let vp = vl.max(0.0);
                let vm = vl.min(0.0);
                let f = (vp * (here[l] - lft[l]) + vm * (rgt[l] - here[l])) / dx;
                phi[l] = f;
                mean_phi += w[l] * f;
            }

            // Interaction source from face-averaged macro data; constant in
            // velocity, so its fluctuating part is a round-off correction.
            let s_face = 0.5 * (state.u[0][pf - 1] + state.u[0][pf]);
            let e_face = 0.5 * (state.u[1][pf - 1] + state.u[1][pf]);
            let i_face = 0.5 * (state.u[2][pf - 1] + state.u[2][pf]);
            let r_face = 0.5 * (state.u[3][pf - 1] + state.u[3][pf]);
            let rates = reaction_rates_raw(s_face, e_face, i_face, r_face, beta, p);
            let rate = [rates.s, rates.e, rates.i, rates.r][species];
            let g_src = rate * m_eq;
            let g_src_fluct = g_src - (g_src * sum_w) * m_eq;

            let du = (u_own[pf] - u_own[pf - 1]) / dx;
            let target = out[species].face_mut(pf);
            for l in 0..n_vel {
                let stiff = inv_eps2 * v[l] * m_eq * du;
                let phi_fluct = phi[l] - mean_phi * m_eq;
                target[l] =
                    (here[l] - dt * (stiff + inv_eps * phi_fluct - inv_eps * g_src_fluct)) / relax;
            }

            // Re-enforce the zero-mean constraint against round-off drift.
            let mut mass = 0.0;
            for (wl, x) in w.iter().zip(target.iter()) {
                mass += wl * x;
            }
            for x in target.iter_mut() {
                *x -= mass * m_eq;
            }
        }
    }
    Ok(out)
}

/// Advance the macro densities using the freshly updated micro flux.
#[allow(clippy::too_many_arguments)]
pub fn macro_step(
    state: &KineticState,
    g_new: &[VelocityField; N_SPECIES],
    beta: f64,
    grid: &SpatialGrid,
    vgrid: &VelocityGrid,
    p: &ModelParams,
    dt: f64,
    bc: &KineticBc,
) -> Result<[Vec<f64>; N_SPECIES]> {
    if !dt.is_finite() || dt <= 0.0 {
        return Err(SimError::invalid(format!("time step must be positive, got {dt}")));
    }
    let n_cells = grid.n_cells();
    let n_nodes = grid.n_nodes();
    let n_vel = vgrid.len();
    let dx = grid.dx();
    let v = vgrid.nodes();
    let w = vgrid.weights();
    let m_eq = 1.0 / vgrid.measure();

    // Per-species face fluxes <v g> on interior faces.
    let mut flux = [
        vec![0.0; n_cells + 1],
        vec![0.0; n_cells + 1],
        vec![0.0; n_cells + 1],
        vec![0.0; n_cells + 1],
    ];
    for species in 0..N_SPECIES {
        for (pf, slot) in flux[species].iter_mut().enumerate().skip(1) {
            let face = g_new[species].face(pf);
            let mut acc = 0.0;
            for ((wl, vl), x) in w.iter().zip(v).zip(face) {
                acc += wl * vl * x;
            }
            *slot = acc;
        }
    }

    // Reaction rates at every node from the old macro state.
    let rates: Vec<[f64; 4]> = (0..n_nodes)
        .map(|j| {
            let r = reaction_rates_raw(
                state.u[0][j],
                state.u[1][j],
                state.u[2][j],
                state.u[3][j],
                beta,
                p,
            );
            [r.s, r.e, r.i, r.r]
        })
        .collect();

    let mut u_new = state.u.clone();
    for species in 0..N_SPECIES {
        let fx = &flux[species];
        let u_old = &state.u[species];
        let target = &mut u_new[species];
        for j in 1..n_cells {
            target[j] = u_old[j] - dt * (fx[j + 1] - fx[j]) / dx + dt * rates[j][species];
        }
        match bc {
            KineticBc::Periodic => {
                // The endpoint nodes are the same physical point; the left
                // neighbour face of node 0 is the last interior face.
                let diff = fx[1] - fx[n_cells];
                target[0] = u_old[0] - dt * diff / dx + dt * rates[0][species];
                target[n_cells] =
                    u_old[n_cells] - dt * diff / dx + dt * rates[n_cells][species];
            }
            KineticBc::Inflow { left, right } => {
                let eps = state.eps;
                let mut vp_m = 0.0;
                let mut vm_m = 0.0;
                let mut vp_g1 = 0.0;
                let mut vm_gn = 0.0;
                let mut vp_fl = 0.0;
                let mut vm_fr = 0.0;
                let g1 = g_new[species].face(1);
                let gn = g_new[species].face(n_cells);
                for l in 0..n_vel {
                    let vp = v[l].max(0.0);
                    let vm = v[l].min(0.0);
                    vp_m += w[l] * vp * m_eq;
                    vm_m += w[l] * vm * m_eq;
                    vp_g1 += w[l] * vp * g1[l];
                    vm_gn += w[l] * vm * gn[l];
                    vp_fl += w[l] * vp * left[species][l];
                    vm_fr += w[l] * vm * right[species][l];
                }
                let denom_l = 1.0 + (2.0 * dt / (eps * dx)) * vp_m;
                let numer_l = u_old[0] - (dt / dx) * (2.0 * vp_g1 - (2.0 / eps) * vp_fl)
                    + dt * rates[0][species];
                target[0] = numer_l / denom_l;
                let denom_r = 1.0 - (2.0 * dt / (eps * dx)) * vm_m;
                let numer_r = u_old[n_cells]
                    - (dt / dx) * ((2.0 / eps) * vm_fr - 2.0 * vm_gn)
                    + dt * rates[n_cells][species];
                target[n_cells] = numer_r / denom_r;
            }
        }
    }
    Ok(u_new)
}

/// Explicit Euler update of the dead compartment from the old infected field.
pub fn dead_step(dead: &[f64], infected: &[f64], alpha: f64, dt: f64) -> Vec<f64> {
    debug_assert_eq!(dead.len(), infected.len());
    dead.iter()
        .zip(infected)
        .map(|(d, i)| d + dt * alpha * i)
        .collect()
}

/// One composite step: micro update, macro update with the new micro flux,
/// dead-compartment update, ghost refresh.
pub fn ap_step(
    state: &mut KineticState,
    grid: &SpatialGrid,
    vgrid: &VelocityGrid,
    p: &ModelParams,
    rate: &TransmissionRate,
    dt: f64,
    bc: &KineticBc,
) -> Result<()> {
    let beta = rate.beta_at(state.t)?;
    let g_new = micro_step(state, beta, grid, vgrid, p, dt, bc)?;
    let u_new = macro_step(state, &g_new, beta, grid, vgrid, p, dt, bc)?;
    let dead_new = dead_step(&state.dead, &state.u[2], p.alpha, dt);
    state.g = g_new;
    state.u = u_new;
    state.dead = dead_new;
    state.t += dt;
    sync_ghost_faces(state, grid, vgrid, bc);
    Ok(())
}

/// Largest normalized micro mean over species and interior faces,
/// `max |<g_i>| / max(1, ||g_i||_inf)`.
pub fn zero_mean_residual(state: &KineticState, grid: &SpatialGrid, vgrid: &VelocityGrid) -> f64 {
    let n_cells = grid.n_cells();
    let mut worst: f64 = 0.0;
    for g in &state.g {
        let scale = g.max_abs().max(1.0);
        for pf in 1..=n_cells {
            let mass = vgrid.mass(g.face(pf));
            worst = worst.max(mass.abs() / scale);
        }
    }
    worst
}

/// Per-run diagnostics accumulated while stepping.
#[derive(Debug, Clone, Default)]
pub struct KineticDiagnostics {
    /// Largest normalized `|<g_i>|` seen at any face on any step.
    pub max_zero_mean_residual: f64,
    /// Running max of the macro densities, for stability audits.
    pub max_abs_u: f64,
    /// Running min of the macro densities; round-off level negatives are
    /// expected, anything larger signals a positivity failure.
    pub min_u: f64,
    /// Set when the scenario step exceeds the explicit stability estimate.
    pub stability_warning: Option<String>,
    pub steps: usize,
}

/// Kinetic trajectory: macroscopic snapshots plus diagnostics.
#[derive(Debug, Clone)]
pub struct KineticRun {
    pub snapshots: Vec<MacroState>,
    pub diagnostics: KineticDiagnostics,
}

impl KineticRun {
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

/// Explicit stability estimate combining the diffusion-limit bound with a
/// transport margin: `dx^2 / (2 max_i d_i + dx * max|v|)`.
pub fn kinetic_dt_estimate(grid: &SpatialGrid, vgrid: &VelocityGrid, p: &ModelParams) -> f64 {
    let d_max = p.diffusivities.iter().fold(0.0_f64, |m, d| m.max(*d));
    let dx = grid.dx();
    dx * dx / (2.0 * d_max + dx * vgrid.half_width())
}

/// Run the kinetic solver on a scenario, snapshotting the initial state plus
/// the requested times (nearest step).
pub fn run_kinetic(
    scenario: &Scenario,
    eps: f64,
    t_final: f64,
    output_times: &[f64],
    bc: &KineticBc,
    init: MicroInit,
) -> Result<KineticRun> {
    if !t_final.is_finite() || t_final < 0.0 {
        return Err(SimError::invalid(format!(
            "final time must be finite and nonnegative, got {t_final}"
        )));
    }
    let grid = scenario.spatial_grid()?;
    let vgrid = scenario.velocity_grid()?;
    let p = &scenario.params;
    let dt = scenario.dt;

    let mut diagnostics = KineticDiagnostics::default();
    let dt_estimate = kinetic_dt_estimate(&grid, &vgrid, p);
    if dt > dt_estimate {
        diagnostics.stability_warning = Some(format!(
            "step {dt} exceeds the explicit stability estimate {dt_estimate:.3e}"
        ));
    }

    let macro_initial = scenario.initial_state(&grid);
    let mut state = KineticState::from_macro(&macro_initial, eps, init, &grid, &vgrid, p, bc)?;

    let n_steps = step_count(t_final, dt);
    let snap_steps = output_steps(dt, n_steps, output_times);
    let mut snapshots = Vec::with_capacity(snap_steps.len() + 1);
    snapshots.push(state.to_macro());
    let mut snap_iter = snap_steps.iter().copied().peekable();

    diagnostics.max_abs_u = state.max_abs_u();
    diagnostics.min_u = state.min_u();
    for k in 0..n_steps {
        state.t = k as f64 * dt;
        ap_step(&mut state, &grid, &vgrid, p, &scenario.rate, dt, bc)?;
        state.t = (k + 1) as f64 * dt;

        let finite = state.u.iter().all(|u| u.iter().all(|x| x.is_finite()))
            && state.dead.iter().all(|x| x.is_finite());
        if !finite {
            return Err(SimError::BlowUp {
                step: k + 1,
                time: state.t,
                context: "non-finite macroscopic density".into(),
            });
        }
        diagnostics.max_abs_u = diagnostics.max_abs_u.max(state.max_abs_u());
        diagnostics.min_u = diagnostics.min_u.min(state.min_u());
        diagnostics.max_zero_mean_residual = diagnostics
            .max_zero_mean_residual
            .max(zero_mean_residual(&state, &grid, &vgrid));

        if snap_iter.peek() == Some(&(k + 1)) {
            snap_iter.next();
            if !state.is_finite() {
                return Err(SimError::BlowUp {
                    step: k + 1,
                    time: state.t,
                    context: "non-finite micro perturbation".into(),
                });
            }
            snapshots.push(state.to_macro());
        }
    }
    diagnostics.steps = n_steps;
    Ok(KineticRun {
        snapshots,
        diagnostics,
    })
}
