//! Epidemiological terms shared by both solvers.
//!
//! Holds the compartment reaction rates, the equilibrium velocity
//! distribution and the relaxation rates calibrated so that the kinetic
//! solver's diffusive limit reproduces the target diffusivities, the
//! velocity-level interaction operators, the piecewise-constant
//! transmission rate `beta(t)`, and the reproduction number.

use serde::{Deserialize, Serialize};

use crate::error::{Result, SimError};
use crate::grid::VelocityGrid;

/// Number of kinetic species (S, E, I, R); the dead compartment has no
/// velocity structure and is integrated separately.
pub const N_SPECIES: usize = 4;

/// Density floor guarding the `S*I/N` infection term where the population
/// is numerically empty; below it the infection term is set to zero.
pub const N_FLOOR: f64 = 1e-12;

/// Compartment labels, used for reports and CSV output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Compartment {
    S,
    E,
    I,
    R,
    D,
}

impl Compartment {
    pub const ALL: [Compartment; 5] = [
        Compartment::S,
        Compartment::E,
        Compartment::I,
        Compartment::R,
        Compartment::D,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Compartment::S => "S",
            Compartment::E => "E",
            Compartment::I => "I",
            Compartment::R => "R",
            Compartment::D => "D",
        }
    }
}

/// Recruitment term in the susceptible equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Recruitment {
    /// Fixed inflow `A`.
    Constant(f64),
    /// `A = mu * N(t, x)` pointwise, which conserves the live-plus-dead total.
    ProportionalToN,
}

/// Epidemiological constants plus per-species diffusivities and the
/// relaxation rates derived from them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelParams {
    pub recruitment: Recruitment,
    /// Natural death rate.
    pub mu: f64,
    /// Progression rate from exposed to infectious.
    pub xi: f64,
    /// Recovery rate.
    pub gamma: f64,
    /// Virus-induced fatality rate.
    pub alpha: f64,
    /// Target macroscopic diffusivities d_1..d_4 for S, E, I, R.
    pub diffusivities: [f64; 4],
    /// Relaxation rates sigma_i = V^2 / (3 d_i); infinite where d_i = 0.
    pub sigmas: [f64; 4],
    /// Reproduce the paper text's third interaction line verbatim
    /// (`xi*f_3` in place of `xi*f_2`); off by default.
    #[serde(default)]
    pub paper_literal_g3: bool,
}

impl ModelParams {
    /// Validate the rates and derive the relaxation rates for a velocity
    /// space of half-width `v_half`.
    pub fn new(
        recruitment: Recruitment,
        mu: f64,
        xi: f64,
        gamma: f64,
        alpha: f64,
        diffusivities: [f64; 4],
        v_half: f64,
    ) -> Result<Self> {
        for (name, value) in [("mu", mu), ("xi", xi), ("gamma", gamma), ("alpha", alpha)] {
            if !value.is_finite() || value < 0.0 {
                return Err(SimError::invalid(format!(
                    "rate {name} must be finite and nonnegative, got {value}"
                )));
            }
        }
        if let Recruitment::Constant(a) = recruitment {
            if !a.is_finite() || a < 0.0 {
                return Err(SimError::invalid(format!(
                    "constant recruitment must be finite and nonnegative, got {a}"
                )));
            }
        }
        let mut sigmas = [0.0; 4];
        for (i, &d) in diffusivities.iter().enumerate() {
            sigmas[i] = sigma_from_diffusivity(d, v_half)?;
        }
        Ok(ModelParams {
            recruitment,
            mu,
            xi,
            gamma,
            alpha,
            diffusivities,
            sigmas,
            paper_literal_g3: false,
        })
    }

    /// Recruitment value at a point with live population `n`.
    pub fn recruitment_at(&self, n: f64) -> f64 {
        match self.recruitment {
            Recruitment::Constant(a) => a,
            Recruitment::ProportionalToN => self.mu * n,
        }
    }

    /// Loss rate of the infected compartment, `gamma + mu + alpha`.
    pub fn infected_loss(&self) -> f64 {
        self.gamma + self.mu + self.alpha
    }
}

/// Equilibrium velocity distribution: uniform `M(v) = 1/(2V)`, normalized
/// with vanishing flux on the symmetric grid.
pub fn equilibrium_density(vgrid: &VelocityGrid) -> Vec<f64> {
    vec![1.0 / vgrid.measure(); vgrid.len()]
}

/// Relaxation rate realizing a macroscopic diffusivity `d` in the kinetic
/// limit: `sigma = V^2 / (3 d)`, from `D = <v^2 M>/sigma` with uniform `M`.
/// `d = 0` maps to the infinite-relaxation sentinel (the species carries no
/// micro perturbation).
pub fn sigma_from_diffusivity(d: f64, v_half: f64) -> Result<f64> {
    if d < 0.0 || !d.is_finite() {
        return Err(SimError::invalid(format!(
            "diffusivity must be finite and nonnegative, got {d}"
        )));
    }
    if d == 0.0 {
        Ok(f64::INFINITY)
    } else {
        Ok(v_half * v_half / (3.0 * d))
    }
}

/// Right-hand sides of the five compartment equations at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReactionRates {
    pub s: f64,
    pub e: f64,
    pub i: f64,
    pub r: f64,
    pub d: f64,
}

impl ReactionRates {
    pub fn as_array(&self) -> [f64; 5] {
        [self.s, self.e, self.i, self.r, self.d]
    }
}

/// Unvalidated reaction evaluation used inside the time steppers, where
/// compartments may carry round-off level negatives.
#[inline]
pub(crate) fn reaction_rates_raw(
    s: f64,
    e: f64,
    i: f64,
    r: f64,
    beta: f64,
    p: &ModelParams,
) -> ReactionRates {
    let n = s + e + i + r;
    let a = p.recruitment_at(n);
    let infection = if n <= N_FLOOR { 0.0 } else { beta * s * i / n };
    ReactionRates {
        s: a - p.mu * s - infection,
        e: infection - (p.mu + p.xi) * e,
        i: p.xi * e - p.infected_loss() * i,
        r: p.gamma * i - p.mu * r,
        d: p.alpha * i,
    }
}

/// Compartment reaction rates with `N = S + E + I + R`.
///
/// The rates telescope: `F_S + F_E + F_I + F_R + F_D = A - mu * N`.
pub fn reaction_terms(
    s: f64,
    e: f64,
    i: f64,
    r: f64,
    beta: f64,
    p: &ModelParams,
) -> Result<ReactionRates> {
    for (name, value) in [("S", s), ("E", e), ("I", i), ("R", r)] {
        if !value.is_finite() || value < 0.0 {
            return Err(SimError::invalid(format!(
                "compartment {name} must be finite and nonnegative, got {value}"
            )));
        }
    }
    if !beta.is_finite() || beta < 0.0 {
        return Err(SimError::invalid(format!(
            "transmission rate must be finite and nonnegative, got {beta}"
        )));
    }
    Ok(reaction_rates_raw(s, e, i, r, beta, p))
}

/// Velocity-level interaction operators evaluated on per-velocity
/// distributions, one column per species.
///
/// The constant recruitment source is spread uniformly over velocity space
/// (the `1/|V|` factor); the loss/gain terms act on the distributions
/// directly with `n(v) = sum_i f_i(v)`. Evaluated on equilibrium data
/// `f_i = M u_i` this makes `<G_i> = F_i(u_1..u_4)` hold to round-off.
pub fn kinetic_interaction(
    f: &[&[f64]; N_SPECIES],
    beta: f64,
    p: &ModelParams,
    vgrid: &VelocityGrid,
) -> Result<[Vec<f64>; N_SPECIES]> {
    let n_vel = vgrid.len();
    for (i, column) in f.iter().enumerate() {
        if column.len() != n_vel {
            return Err(SimError::invalid(format!(
                "species {i} column length {} does not match velocity grid size {n_vel}",
                column.len()
            )));
        }
        if column.iter().any(|x| *x < 0.0 || !x.is_finite()) {
            return Err(SimError::invalid(format!(
                "species {i} distribution must be finite and nonnegative"
            )));
        }
    }
    let masses = [
        vgrid.mass(f[0]),
        vgrid.mass(f[1]),
        vgrid.mass(f[2]),
        vgrid.mass(f[3]),
    ];
    let total: f64 = masses.iter().sum();
    let source = p.recruitment_at(total) / vgrid.measure();

    let mut g = [
        vec![0.0; n_vel],
        vec![0.0; n_vel],
        vec![0.0; n_vel],
        vec![0.0; n_vel],
    ];
    for l in 0..n_vel {
        let (f1, f2, f3, f4) = (f[0][l], f[1][l], f[2][l], f[3][l]);
        let n_local = f1 + f2 + f3 + f4;
        let infection = if n_local <= N_FLOOR / vgrid.measure() {
            0.0
        } else {
            beta * f1 * f3 / n_local
        };
        let incubation_source = if p.paper_literal_g3 { f3 } else { f2 };
        g[0][l] = source - p.mu * f1 - infection;
        g[1][l] = infection - (p.mu + p.xi) * f2;
        g[2][l] = p.xi * incubation_source - p.infected_loss() * f3;
        g[3][l] = p.gamma * f3 - p.mu * f4;
    }
    Ok(g)
}

/// Basic reproduction number `R_0 = xi * beta / ((xi + mu)(gamma + alpha + mu))`.
pub fn r0(p: &ModelParams, beta: f64) -> Result<f64> {
    let denom = (p.xi + p.mu) * (p.gamma + p.alpha + p.mu);
    if denom <= 0.0 {
        return Err(SimError::invalid(
            "reproduction number undefined: (xi + mu)(gamma + alpha + mu) must be positive",
        ));
    }
    Ok(p.xi * beta / denom)
}

/// Transmission rate realizing a target reproduction number; exact
/// algebraic inverse of [`r0`].
pub fn beta_for_r0(p: &ModelParams, target_r0: f64) -> Result<f64> {
    if p.xi == 0.0 {
        return Err(SimError::invalid(
            "cannot invert the reproduction number with xi = 0",
        ));
    }
    if !target_r0.is_finite() || target_r0 < 0.0 {
        return Err(SimError::invalid(format!(
            "target reproduction number must be finite and nonnegative, got {target_r0}"
        )));
    }
    Ok(target_r0 * (p.xi + p.mu) * (p.gamma + p.alpha + p.mu) / p.xi)
}

/// Piecewise-constant-in-time transmission rate. Pieces are left-closed and
/// right-open; the last value holds for all later times.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransmissionRate {
    breakpoints: Vec<f64>,
    values: Vec<f64>,
}

impl TransmissionRate {
    /// Single piece starting at `t = 0`.
    pub fn constant(beta: f64) -> Result<Self> {
        TransmissionRate::stepwise(&[(0.0, beta)])
    }

    /// Build from `(breakpoint, value)` pairs with strictly increasing
    /// breakpoints and nonnegative values.
    pub fn stepwise(pieces: &[(f64, f64)]) -> Result<Self> {
        if pieces.is_empty() {
            return Err(SimError::invalid("transmission rate needs at least one piece"));
        }
        for &(t, b) in pieces {
            if !t.is_finite() || !b.is_finite() || b < 0.0 {
                return Err(SimError::invalid(format!(
                    "transmission piece ({t}, {b}) must be finite with a nonnegative value"
                )));
            }
        }
        for w in pieces.windows(2) {
            if w[1].0 <= w[0].0 {
                return Err(SimError::invalid(format!(
                    "transmission breakpoints must be strictly increasing, got {} then {}",
                    w[0].0, w[1].0
                )));
            }
        }
        Ok(TransmissionRate {
            breakpoints: pieces.iter().map(|p| p.0).collect(),
            values: pieces.iter().map(|p| p.1).collect(),
        })
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Value of the piece containing `t`.
    pub fn beta_at(&self, t: f64) -> Result<f64> {
        if t < self.breakpoints[0] {
            return Err(SimError::invalid(format!(
                "time {t} lies before the first transmission breakpoint {}",
                self.breakpoints[0]
            )));
        }
        let idx = match self
            .breakpoints
            .iter()
            .position(|&b| b > t)
        {
            Some(next) => next - 1,
            None => self.breakpoints.len() - 1,
        };
        Ok(self.values[idx])
    }

    /// Validate the schedule invariants (used after deserialization).
    pub fn validate(&self) -> Result<()> {
        let pieces: Vec<(f64, f64)> = self
            .breakpoints
            .iter()
            .copied()
            .zip(self.values.iter().copied())
            .collect();
        if self.breakpoints.len() != self.values.len() {
            return Err(SimError::invalid(
                "transmission breakpoints and values must have equal length",
            ));
        }
        TransmissionRate::stepwise(&pieces).map(|_| ())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::VelocityGrid;

    fn paper_rates(recruitment: Recruitment) -> ModelParams {
        ModelParams::new(
            recruitment,
            1.0 / 83.0,
            0.25,
            0.125,
            0.06,
            [0.05, 0.025, 0.001, 0.0],
            1.0,
        )
        .unwrap()
    }

    #[test]
    fn equilibrium_is_uniform_and_normalized() {
        for (v_half, expect) in [(1.0, 0.5), (2.0, 0.25)] {
            let vg = VelocityGrid::new(v_half, 164).unwrap();
            let m = equilibrium_density(&vg);
            assert!(m.iter().all(|&x| x == expect));
            assert!((vg.mass(&m) - 1.0).abs() < 1e-13);
            assert!(vg.flux(&m).abs() < 1e-14);
        }
    }

    #[test]
    fn sigma_calibration_closed_forms() {
        // From the symbolic integral of v^2/(2V) over [-V, V]: d*sigma = V^2/3.
        let s1 = sigma_from_diffusivity(0.05, 1.0).unwrap();
        assert!((s1 - 20.0 / 3.0).abs() < 1e-13);
        let s3 = sigma_from_diffusivity(0.001, 1.0).unwrap();
        assert!((s3 - 1000.0 / 3.0).abs() < 1e-10);
        assert_eq!(sigma_from_diffusivity(0.0, 1.0).unwrap(), f64::INFINITY);
        assert!(sigma_from_diffusivity(-0.1, 1.0).is_err());
    }

    #[test]
    fn sigma_round_trip_matches_quadrature() {
        // Diffusivity implied by sigma through the discrete second moment.
        let vg = VelocityGrid::new(1.0, 164).unwrap();
        let m = equilibrium_density(&vg);
        let second = vg.moment(&m, |v| v * v).unwrap();
        for d in [0.05, 0.025, 0.001] {
            let sigma = sigma_from_diffusivity(d, 1.0).unwrap();
            let implied = second / sigma;
            assert!(
                (implied - d).abs() <= 1e-4 * d.max(1e-3),
                "implied diffusivity {implied} vs {d}"
            );
        }
    }

    #[test]
    fn disease_free_fixed_point() {
        let p = paper_rates(Recruitment::ProportionalToN);
        let f = reaction_terms(1.0, 0.0, 0.0, 0.0, 0.3, &p).unwrap();
        assert_eq!(f.as_array(), [0.0; 5]);
    }

    #[test]
    fn reaction_terms_hand_evaluation() {
        let p = paper_rates(Recruitment::ProportionalToN);
        let mu = 1.0 / 83.0;
        let f = reaction_terms(0.5, 0.0, 0.5, 0.0, 0.3, &p).unwrap();
        // N = 1, A = mu; direct evaluation of the right-hand sides.
        assert!((f.s - (mu - mu * 0.5 - 0.3 * 0.25)).abs() < 1e-15);
        assert!((f.e - 0.075).abs() < 1e-15);
        assert!((f.i - (-(0.125 + mu + 0.06) * 0.5)).abs() < 1e-15);
        assert!((f.r - 0.0625).abs() < 1e-15);
        assert!((f.d - 0.03).abs() < 1e-15);
    }

    #[test]
    fn reaction_terms_telescope() {
        let p = paper_rates(Recruitment::Constant(0.02));
        for (s, e, i, r) in [(0.3, 0.2, 0.1, 0.05), (1.0, 0.0, 0.0, 0.0), (0.0, 0.4, 0.2, 0.9)] {
            let f = reaction_terms(s, e, i, r, 0.42, &p).unwrap();
            let n = s + e + i + r;
            let sum: f64 = f.as_array().iter().sum();
            assert!(
                (sum - (0.02 - p.mu * n)).abs() < 1e-14,
                "telescoping failed for ({s},{e},{i},{r})"
            );
        }
    }

    #[test]
    fn reaction_terms_reject_negative() {
        let p = paper_rates(Recruitment::ProportionalToN);
        assert!(reaction_terms(-0.1, 0.0, 0.0, 0.0, 0.3, &p).is_err());
        assert!(reaction_terms(0.1, 0.0, 0.0, 0.0, -0.3, &p).is_err());
    }

    #[test]
    fn infection_floor_guards_empty_population() {
        let p = paper_rates(Recruitment::ProportionalToN);
        let f = reaction_terms(0.0, 0.0, 0.0, 0.0, 0.3, &p).unwrap();
        assert_eq!(f.as_array(), [0.0; 5]);
    }

    #[test]
    fn interaction_consistent_with_reactions_at_equilibrium() {
        let vg = VelocityGrid::new(1.0, 164).unwrap();
        let p = paper_rates(Recruitment::ProportionalToN);
        let m = equilibrium_density(&vg);
        let u = [0.7, 0.1, 0.15, 0.05];
        let cols: Vec<Vec<f64>> = u.iter().map(|ui| m.iter().map(|mv| mv * ui).collect()).collect();
        let f_refs: [&[f64]; 4] = [&cols[0], &cols[1], &cols[2], &cols[3]];
        let g = kinetic_interaction(&f_refs, 0.3, &p, &vg).unwrap();
        let expect = reaction_terms(u[0], u[1], u[2], u[3], 0.3, &p).unwrap();
        let expect_arr = [expect.s, expect.e, expect.i, expect.r];
        for i in 0..4 {
            let mass = vg.mass(&g[i]);
            assert!(
                (mass - expect_arr[i]).abs() < 1e-12,
                "species {i}: <G> = {mass} vs F = {}",
                expect_arr[i]
            );
        }
    }

    #[test]
    fn interaction_zero_input_zero_output() {
        let vg = VelocityGrid::new(1.0, 8).unwrap();
        let mut p = paper_rates(Recruitment::Constant(0.0));
        p.recruitment = Recruitment::Constant(0.0);
        let zero = vec![0.0; 8];
        let f_refs: [&[f64]; 4] = [&zero, &zero, &zero, &zero];
        let g = kinetic_interaction(&f_refs, 0.3, &p, &vg).unwrap();
        for col in &g {
            assert!(col.iter().all(|&x| x == 0.0));
        }
    }

    #[test]
    fn interaction_sum_matches_recruitment_balance() {
        // Sum over compartments of <G_i> telescopes to A - mu * N.
        let vg = VelocityGrid::new(1.0, 32).unwrap();
        let p = paper_rates(Recruitment::ProportionalToN);
        let m = equilibrium_density(&vg);
        let u = [0.5, 0.2, 0.2, 0.1];
        let cols: Vec<Vec<f64>> = u.iter().map(|ui| m.iter().map(|mv| mv * ui).collect()).collect();
        let f_refs: [&[f64]; 4] = [&cols[0], &cols[1], &cols[2], &cols[3]];
        let g = kinetic_interaction(&f_refs, 1.2, &p, &vg).unwrap();
        let total: f64 = g.iter().map(|col| vg.mass(col)).sum();
        let n: f64 = u.iter().sum();
        let live_balance = p.recruitment_at(n) - p.mu * n;
        // The dead flux alpha*I leaves the live system.
        assert!((total - (live_balance - p.alpha * u[2])).abs() < 1e-13);
    }

    #[test]
    fn interaction_rejects_negative_input() {
        let vg = VelocityGrid::new(1.0, 4).unwrap();
        let p = paper_rates(Recruitment::ProportionalToN);
        let bad = vec![-1.0; 4];
        let ok = vec![0.1; 4];
        let f_refs: [&[f64]; 4] = [&bad, &ok, &ok, &ok];
        assert!(kinetic_interaction(&f_refs, 0.3, &p, &vg).is_err());
    }

    #[test]
    fn paper_literal_g3_reproduces_text() {
        let vg = VelocityGrid::new(1.0, 4).unwrap();
        let mut p = paper_rates(Recruitment::Constant(0.0));
        p.paper_literal_g3 = true;
        let f2 = vec![0.3; 4];
        let f3 = vec![0.1; 4];
        let zero = vec![0.0; 4];
        let f_refs: [&[f64]; 4] = [&zero, &f2, &f3, &zero];
        let g = kinetic_interaction(&f_refs, 0.0, &p, &vg).unwrap();
        // Literal text: G_3 = xi*f_3 - (gamma+mu+alpha)*f_3.
        let expect = p.xi * 0.1 - p.infected_loss() * 0.1;
        assert!((g[2][0] - expect).abs() < 1e-15);
    }

    #[test]
    fn r0_paper_values() {
        let p = paper_rates(Recruitment::ProportionalToN);
        let value = r0(&p, 0.3).unwrap();
        let oracle = 0.25 * 0.3 / ((0.25 + 1.0 / 83.0) * (0.125 + 0.06 + 1.0 / 83.0));
        assert!((value - oracle).abs() < 1e-15);
        assert!((value - 1.4524).abs() < 5e-4, "r0 = {value}");
        assert_eq!(r0(&p, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn r0_threshold_identity() {
        let p = paper_rates(Recruitment::ProportionalToN);
        let beta = (p.xi + p.mu) * (p.gamma + p.alpha + p.mu) / p.xi;
        assert!((r0(&p, beta).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn r0_zero_denominator_rejected() {
        let p = ModelParams::new(
            Recruitment::ProportionalToN,
            0.0,
            0.0,
            0.0,
            0.0,
            [0.0; 4],
            1.0,
        )
        .unwrap();
        assert!(r0(&p, 0.3).is_err());
    }

    #[test]
    fn beta_for_r0_inverts() {
        let p = paper_rates(Recruitment::ProportionalToN);
        let beta = beta_for_r0(&p, 1.0).unwrap();
        let oracle = (0.25 + 1.0 / 83.0) * (0.125 + 0.06 + 1.0 / 83.0) / 0.25;
        assert!((beta - oracle).abs() < 1e-15);
        assert!((beta - 0.2065).abs() < 1e-3, "beta = {beta}");
        assert_eq!(beta_for_r0(&p, 0.0).unwrap(), 0.0);
        for target in [0.2, 2.0, 15.0] {
            let round_trip = r0(&p, beta_for_r0(&p, target).unwrap()).unwrap();
            assert!((round_trip - target).abs() < 1e-14 * target.max(1.0));
        }
    }

    #[test]
    fn r0_monotone_in_beta() {
        let p = paper_rates(Recruitment::ProportionalToN);
        let mut last = -1.0;
        for k in 0..20 {
            let value = r0(&p, 0.1 * k as f64).unwrap();
            assert!(value > last || k == 0);
            last = value;
        }
    }

    #[test]
    fn stepwise_rate_lookup() {
        // First paper schedule: switch at T/2 = 25 on [0, 50].
        let one = TransmissionRate::stepwise(&[(0.0, 0.075), (25.0, 1.4995)]).unwrap();
        assert_eq!(one.beta_at(10.0).unwrap(), 0.075);
        assert_eq!(one.beta_at(30.0).unwrap(), 1.4995);
        // Left-closed pieces: the switch time takes the new value.
        assert_eq!(one.beta_at(25.0).unwrap(), 1.4995);
        // Last value holds beyond the final breakpoint.
        assert_eq!(one.beta_at(1e6).unwrap(), 1.4995);
        assert!(one.beta_at(-1.0).is_err());
    }

    #[test]
    fn second_schedule_tail() {
        let two = TransmissionRate::stepwise(&[
            (0.0, 0.075),
            (100.0 / 3.0, 1.4995),
            (200.0 / 3.0, 0.05),
        ])
        .unwrap();
        assert_eq!(two.beta_at(80.0).unwrap(), 0.05);
        assert_eq!(two.beta_at(50.0).unwrap(), 1.4995);
    }

    #[test]
    fn constant_rate_everywhere() {
        let c = TransmissionRate::constant(0.3).unwrap();
        for t in [0.0, 0.5, 10.0, 1e9] {
            assert_eq!(c.beta_at(t).unwrap(), 0.3);
        }
    }

    #[test]
    fn malformed_schedules_rejected() {
        assert!(TransmissionRate::stepwise(&[]).is_err());
        assert!(TransmissionRate::stepwise(&[(0.0, 0.1), (0.0, 0.2)]).is_err());
        assert!(TransmissionRate::stepwise(&[(1.0, 0.1), (0.5, 0.2)]).is_err());
        assert!(TransmissionRate::stepwise(&[(0.0, -0.1)]).is_err());
    }

    #[test]
    fn params_reject_negative_rates() {
        assert!(ModelParams::new(
            Recruitment::ProportionalToN,
            -0.1,
            0.25,
            0.125,
            0.06,
            [0.0; 4],
            1.0
        )
        .is_err());
    }
}
