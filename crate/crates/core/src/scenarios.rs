//! Registry of the experiment setups: parameter sets, initial conditions,
//! transmission-rate schedules and grid settings, addressable by name.

use serde::{Deserialize, Serialize};

use crate::error::{Result, SimError};
use crate::grid::{SpatialGrid, VelocityGrid};
use crate::macroscale::MacroState;
use crate::model::{beta_for_r0, ModelParams, Recruitment, TransmissionRate};

/// Which initial-condition family a scenario uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IcKind {
    /// Twin susceptible bumps at x = +-0.5 with a centred infected seed.
    TwinBump,
    /// Single wide susceptible bump with the same infected seed.
    SingleBump,
}

/// Boundary handling requested by a scenario.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BcKind {
    Periodic,
    ZeroFlux,
    Inflow,
}

/// A complete experiment setup.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub params: ModelParams,
    pub rate: TransmissionRate,
    /// Spatial half-length L; the domain is [-L, L].
    pub half_length: f64,
    pub n_cells: usize,
    /// Velocity half-width V; velocity space is [-V, V].
    pub v_half: f64,
    pub n_vel: usize,
    pub dt: f64,
    pub ic: IcKind,
    pub bc: BcKind,
    /// Mean-free-path values swept by the kinetic/macro comparison.
    pub eps_list: Vec<f64>,
    /// Probe locations used by time-series outputs.
    pub probe_x: Vec<f64>,
}

impl Scenario {
    pub fn spatial_grid(&self) -> Result<SpatialGrid> {
        SpatialGrid::new(self.half_length, self.n_cells)
    }

    pub fn velocity_grid(&self) -> Result<VelocityGrid> {
        VelocityGrid::new(self.v_half, self.n_vel)
    }

    /// Initial macroscopic fields on `grid`.
    pub fn initial_state(&self, grid: &SpatialGrid) -> MacroState {
        match self.ic {
            IcKind::TwinBump => initial_condition_i(grid),
            IcKind::SingleBump => initial_condition_ii(grid),
        }
    }

    /// Check the invariants a deserialized scenario must satisfy.
    pub fn validate(&self) -> Result<()> {
        if !self.dt.is_finite() || self.dt <= 0.0 {
            return Err(SimError::invalid(format!(
                "scenario {}: time step must be positive, got {}",
                self.name, self.dt
            )));
        }
        self.spatial_grid()?;
        self.velocity_grid()?;
        self.rate.validate()?;
        if self.eps_list.iter().any(|&e| !e.is_finite() || e <= 0.0) {
            return Err(SimError::invalid(format!(
                "scenario {}: every eps must be positive and finite",
                self.name
            )));
        }
        Ok(())
    }
}

/// Parameter set used throughout the experiments: mu = 1/83, alpha = 0.06,
/// xi = 1/4, gamma = 1/8, diffusivities (0.05, 0.025, 0.001, 0).
pub fn paper_params() -> ModelParams {
    ModelParams::new(
        Recruitment::ProportionalToN,
        1.0 / 83.0,
        0.25,
        0.125,
        0.06,
        [0.05, 0.025, 0.001, 0.0],
        1.0,
    )
    .expect("reference parameters are valid")
}

/// Same rates with every diffusivity zeroed.
pub fn paper_params_no_diffusion() -> ModelParams {
    ModelParams::new(
        Recruitment::ProportionalToN,
        1.0 / 83.0,
        0.25,
        0.125,
        0.06,
        [0.0; 4],
        1.0,
    )
    .expect("reference parameters are valid")
}

/// Initial condition family i): twin susceptible bumps.
pub fn initial_condition_i(grid: &SpatialGrid) -> MacroState {
    let mut state = MacroState::zeros(grid.n_nodes());
    let norm = 2.6 / (0.9 * std::f64::consts::PI);
    for (j, &x) in grid.nodes().iter().enumerate() {
        let left = -((x - 0.5) / 0.12) * ((x - 0.5) / 0.12);
        let right = -((x + 0.5) / 0.12) * ((x + 0.5) / 0.12);
        state.s[j] = norm * (left.exp() + right.exp());
        state.i[j] = 0.04 * (-2.0 * x * x).exp();
    }
    state
}

/// Initial condition family ii): one wide susceptible bump.
pub fn initial_condition_ii(grid: &SpatialGrid) -> MacroState {
    let mut state = MacroState::zeros(grid.n_nodes());
    for (j, &x) in grid.nodes().iter().enumerate() {
        let arg = x / 1.4;
        state.s[j] = 0.96 * (-10.0 * arg * arg).exp();
        state.i[j] = 0.04 * (-2.0 * x * x).exp();
    }
    state
}

/// Step-wise transmission schedules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepwiseVariant {
    /// Low then high on [0, 50], switching at 25.
    One,
    /// Low, high, then low on [0, 100], switching at 100/3 and 200/3.
    Two,
}

pub fn stepwise_beta(variant: StepwiseVariant) -> TransmissionRate {
    match variant {
        StepwiseVariant::One => TransmissionRate::stepwise(&[(0.0, 0.075), (25.0, 1.4995)]),
        StepwiseVariant::Two => TransmissionRate::stepwise(&[
            (0.0, 0.075),
            (100.0 / 3.0, 1.4995),
            (200.0 / 3.0, 0.05),
        ]),
    }
    .expect("stepwise schedules are valid")
}

/// Constant transmission rates swept by the sensitivity study.
/// 1.12 is kept verbatim from the source table even though 0.12 would match
/// the 0.8 entry of [`R0_LABELS`].
pub const BETA_SUITE: [f64; 6] = [0.03, 0.075, 1.12, 0.1799, 0.7497, 2.2491];

/// Nominal reproduction-ratio labels paired with [`BETA_SUITE`]; metadata
/// only; reported reproduction numbers always come from [`crate::model::r0`].
pub const R0_LABELS: [f64; 6] = [0.2, 0.5, 0.8, 1.2, 5.0, 15.0];

pub fn constant_beta_suite() -> Vec<TransmissionRate> {
    BETA_SUITE
        .iter()
        .map(|&b| TransmissionRate::constant(b).expect("suite rates are valid"))
        .collect()
}

fn base_scenario(name: &str, params: ModelParams, ic: IcKind) -> Scenario {
    let rate = TransmissionRate::constant(
        beta_for_r0(&params, 2.0).expect("reference parameters invert"),
    )
    .expect("constant rate is valid");
    Scenario {
        name: name.to_string(),
        params,
        rate,
        half_length: 2.0,
        n_cells: 200,
        v_half: 1.0,
        n_vel: 164,
        dt: 1e-3,
        ic,
        bc: BcKind::Periodic,
        eps_list: vec![2.0, 2e-1, 2e-2, 2e-3, 2e-4, 2e-6],
        probe_x: vec![0.0, 0.5],
    }
}

/// All registered scenarios.
pub fn registry() -> Vec<Scenario> {
    vec![
        base_scenario("paper-i", paper_params(), IcKind::TwinBump),
        base_scenario("paper-ii", paper_params(), IcKind::SingleBump),
        base_scenario("paper-i-nodiff", paper_params_no_diffusion(), IcKind::TwinBump),
        base_scenario("paper-ii-nodiff", paper_params_no_diffusion(), IcKind::SingleBump),
    ]
}

/// Look a scenario up by name.
pub fn by_name(name: &str) -> Result<Scenario> {
    registry()
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| {
            let known: Vec<String> = registry().into_iter().map(|s| s.name).collect();
            SimError::invalid(format!(
                "unknown scenario {name:?}; known scenarios: {}",
                known.join(", ")
            ))
        })
}
