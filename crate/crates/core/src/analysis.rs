//! Diagnostics and experiment drivers: norms between solutions, conservation
//! audits, and the sweeps that compare the kinetic solver against its
//! reaction-diffusion limit.

use crate::error::{Result, SimError};
use crate::grid::SpatialGrid;
use crate::kinetic::{run_kinetic, KineticBc, MicroInit};
use crate::macroscale::{run_macro, MacroBc, MacroState};
use crate::model::{Compartment, Recruitment};
use crate::scenarios::Scenario;

/// Distances between one compartment of two solutions at one probe time.
#[derive(Debug, Clone, PartialEq)]
pub struct SpeciesDistance {
    pub compartment: Compartment,
    /// Integrated absolute difference, `sum |a - b| dx` with trapezoid
    /// endpoint weights.
    pub l1: f64,
    pub linf: f64,
    /// `l1` divided by the reference solution's own L1 norm.
    pub rel_l1: f64,
}

/// Kinetic-versus-macro comparison at one mean free path and probe time.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub eps: f64,
    pub time: f64,
    pub n_cells: usize,
    pub dx: f64,
    pub species: Vec<SpeciesDistance>,
}

impl ComparisonReport {
    pub fn distance(&self, c: Compartment) -> Option<&SpeciesDistance> {
        self.species.iter().find(|s| s.compartment == c)
    }
}

fn check_lengths(a: &[f64], b: &[f64], grid: &SpatialGrid) -> Result<()> {
    if a.len() != b.len() || a.len() != grid.n_nodes() {
        return Err(SimError::invalid(format!(
            "array lengths {} and {} do not match the grid's {} nodes",
            a.len(),
            b.len(),
            grid.n_nodes()
        )));
    }
    Ok(())
}

/// `sum_j |a_j - b_j| dx` with the duplicated periodic endpoint weighted
/// half on each side, so constant differences integrate exactly.
pub fn l1_distance(a: &[f64], b: &[f64], grid: &SpatialGrid) -> Result<f64> {
    check_lengths(a, b, grid)?;
    let mut acc = 0.0;
    for j in 0..a.len() {
        acc += grid.node_weight(j) * (a[j] - b[j]).abs();
    }
    Ok(acc * grid.dx())
}

/// Max-norm distance between two node arrays.
pub fn linf_distance(a: &[f64], b: &[f64], grid: &SpatialGrid) -> Result<f64> {
    check_lengths(a, b, grid)?;
    Ok(a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max))
}

/// Conserved total `sum_j (S+E+I+R+D)_j dx` with the periodic endpoint
/// convention.
pub fn total_population(state: &MacroState, grid: &SpatialGrid) -> f64 {
    let mut acc = 0.0;
    for j in 0..state.n_nodes() {
        let live = state.s[j] + state.e[j] + state.i[j] + state.r[j];
        acc += grid.node_weight(j) * (live + state.dead[j]);
    }
    acc * grid.dx()
}

/// Per-compartment distances between a kinetic snapshot and its macro
/// reference at one time.
pub fn compare_snapshots(
    kin: &MacroState,
    mac: &MacroState,
    eps: f64,
    time: f64,
    grid: &SpatialGrid,
) -> Result<ComparisonReport> {
    let mut species = Vec::with_capacity(Compartment::ALL.len());
    for c in Compartment::ALL {
        let a = kin.field(c);
        let b = mac.field(c);
        let l1 = l1_distance(a, b, grid)?;
        let linf = linf_distance(a, b, grid)?;
        let ref_l1 = l1_distance(b, &vec![0.0; b.len()], grid)?;
        let rel_l1 = if ref_l1 > 0.0 { l1 / ref_l1 } else { l1 };
        species.push(SpeciesDistance {
            compartment: c,
            l1,
            linf,
            rel_l1,
        });
    }
    Ok(ComparisonReport {
        eps,
        time,
        n_cells: grid.n_cells(),
        dx: grid.dx(),
        species,
    })
}

/// Run the macro solver once and the kinetic solver per mean free path,
/// reporting distances at each probe time. Reports are ordered by the given
/// eps list, then by probe time.
pub fn eps_sweep(
    scenario: &Scenario,
    eps_list: &[f64],
    t_final: f64,
    probe_times: &[f64],
) -> Result<Vec<ComparisonReport>> {
    if probe_times.iter().any(|t| *t > t_final + 1e-12) {
        return Err(SimError::invalid(
            "probe times must not exceed the final time",
        ));
    }
    let grid = scenario.spatial_grid()?;
    let macro_run = run_macro(scenario, t_final, probe_times, MacroBc::Periodic)?;
    let mut reports = Vec::with_capacity(eps_list.len() * probe_times.len());
    for &eps in eps_list {
        let kin_run = run_kinetic(
            scenario,
            eps,
            t_final,
            probe_times,
            &KineticBc::Periodic,
            MicroInit::LocalEquilibrium,
        )?;
        for &t in probe_times {
            let kin = kin_run.at_time(t).ok_or_else(|| {
                SimError::invalid(format!("kinetic run holds no snapshot near t = {t}"))
            })?;
            let mac = macro_run.at_time(t).ok_or_else(|| {
                SimError::invalid(format!("macro run holds no snapshot near t = {t}"))
            })?;
            reports.push(compare_snapshots(kin, mac, eps, t, &grid)?);
        }
    }
    Ok(reports)
}

/// Time series of the five compartments at one probe location.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeSeries {
    pub beta: f64,
    pub probe_x: f64,
    pub times: Vec<f64>,
    /// Rows follow [`Compartment::ALL`] order.
    pub values: [Vec<f64>; 5],
}

impl ProbeSeries {
    pub fn series(&self, c: Compartment) -> &[f64] {
        match c {
            Compartment::S => &self.values[0],
            Compartment::E => &self.values[1],
            Compartment::I => &self.values[2],
            Compartment::R => &self.values[3],
            Compartment::D => &self.values[4],
        }
    }
}

/// Macro-solver time series at `probe_x` for each constant rate in `rates`,
/// sampled every `sample_interval` (snapped to whole steps).
pub fn beta_sweep(
    scenario: &Scenario,
    rates: &[crate::model::TransmissionRate],
    t_final: f64,
    probe_x: f64,
    sample_interval: f64,
) -> Result<Vec<ProbeSeries>> {
    if !sample_interval.is_finite() || sample_interval <= 0.0 {
        return Err(SimError::invalid(format!(
            "sample interval must be positive, got {sample_interval}"
        )));
    }
    let grid = scenario.spatial_grid()?;
    let probe = grid.nearest_node(probe_x);
    let n_samples = (t_final / sample_interval).floor() as usize;
    let sample_times: Vec<f64> = (0..=n_samples).map(|k| k as f64 * sample_interval).collect();

    let mut out = Vec::with_capacity(rates.len());
    for rate in rates {
        let mut sc = scenario.clone();
        sc.rate = rate.clone();
        let run = run_macro(&sc, t_final, &sample_times, MacroBc::Periodic)?;
        let beta = rate.beta_at(0.0)?;
        let mut series = ProbeSeries {
            beta,
            probe_x: grid.node(probe),
            times: Vec::with_capacity(run.snapshots.len()),
            values: Default::default(),
        };
        for snap in &run.snapshots {
            series.times.push(snap.t);
            series.values[0].push(snap.s[probe]);
            series.values[1].push(snap.e[probe]);
            series.values[2].push(snap.i[probe]);
            series.values[3].push(snap.r[probe]);
            series.values[4].push(snap.dead[probe]);
        }
        out.push(series);
    }
    Ok(out)
}

/// Spatial variance of the normalized infected profile.
pub fn spread_metric(infected: &[f64], grid: &SpatialGrid) -> Result<f64> {
    if infected.len() != grid.n_nodes() {
        return Err(SimError::invalid(format!(
            "infected profile has {} nodes, expected {}",
            infected.len(),
            grid.n_nodes()
        )));
    }
    if infected.iter().any(|x| *x < 0.0) {
        return Err(SimError::invalid("infected profile must be nonnegative"));
    }
    let mut mass = 0.0;
    let mut first = 0.0;
    for (j, i) in infected.iter().enumerate() {
        let w = grid.node_weight(j) * i;
        mass += w;
        first += w * grid.node(j);
    }
    if mass <= 0.0 {
        return Err(SimError::invalid(
            "spread metric undefined for a zero-mass profile",
        ));
    }
    let mean = first / mass;
    let mut second = 0.0;
    for (j, i) in infected.iter().enumerate() {
        let d = grid.node(j) - mean;
        second += grid.node_weight(j) * i * d * d;
    }
    Ok(second / mass)
}

/// Total (trapezoid-weighted) infected mass, `sum_j I_j dx`.
pub fn infected_mass(state: &MacroState, grid: &SpatialGrid) -> f64 {
    let mut acc = 0.0;
    for j in 0..state.n_nodes() {
        acc += grid.node_weight(j) * state.i[j];
    }
    acc * grid.dx()
}

/// True when the recruitment mode makes `S+E+I+R+D` a conserved quantity.
pub fn conserves_total(recruitment: Recruitment) -> bool {
    matches!(recruitment, Recruitment::ProportionalToN)
}
