//! Run configuration: a single TOML document naming (or inlining) a
//! scenario plus run options, merged with command-line overrides into a
//! fully resolved run description.

use std::path::PathBuf;

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};

use seird_core::model::Recruitment;
use seird_core::scenarios::{self, BcKind, IcKind, Scenario, StepwiseVariant};

/// Scenario reference: a registry name or a full inline definition.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScenarioRef {
    Name(String),
    Inline(Box<Scenario>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum SolverChoice {
    Kinetic,
    Macro,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum BcChoice {
    Periodic,
    Inflow,
    Neumann,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum SweepChoice {
    Eps,
    Beta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
pub enum IcChoice {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    Ii,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum BetaScheduleChoice {
    /// Keep the scenario's own (constant) rate.
    Const,
    /// Two-piece schedule on [0, 50].
    Step1,
    /// Three-piece schedule on [0, 100].
    Step2,
}

fn default_true() -> bool {
    true
}

/// Parsed configuration document. Unknown keys are rejected.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub scenario: ScenarioRef,
    #[serde(default)]
    pub solver: Option<SolverChoice>,
    #[serde(default)]
    pub sweep: Option<SweepChoice>,
    #[serde(default)]
    pub eps: Option<f64>,
    #[serde(default)]
    pub t_final: Option<f64>,
    #[serde(default)]
    pub output_times: Option<Vec<f64>>,
    #[serde(default)]
    pub probe_x: Option<f64>,
    #[serde(default)]
    pub out_dir: Option<PathBuf>,
    #[serde(default)]
    pub bc: Option<BcChoice>,
    #[serde(default)]
    pub recruitment: Option<Recruitment>,
    #[serde(default)]
    pub ic: Option<IcChoice>,
    #[serde(default)]
    pub beta_schedule: Option<BetaScheduleChoice>,
    /// Runs are always seedless and reproducible; kept explicit so configs
    /// can state it, but `false` is rejected.
    #[serde(default = "default_true")]
    pub deterministic: bool,
}

impl RunConfig {
    pub fn named(name: &str) -> Self {
        RunConfig {
            scenario: ScenarioRef::Name(name.to_string()),
            solver: None,
            sweep: None,
            eps: None,
            t_final: None,
            output_times: None,
            probe_x: None,
            out_dir: None,
            bc: None,
            recruitment: None,
            ic: None,
            beta_schedule: None,
            deterministic: true,
        }
    }
}

/// Parse a configuration document, rejecting unknown keys with the TOML
/// position and key name.
pub fn parse_config(text: &str) -> anyhow::Result<RunConfig> {
    let config: RunConfig = toml::from_str(text).context("failed to parse run configuration")?;
    Ok(config)
}

/// Fully resolved run: scenario with every override applied.
#[derive(Debug, Clone)]
pub struct ResolvedRun {
    pub scenario: Scenario,
    pub solver: SolverChoice,
    pub sweep: Option<SweepChoice>,
    pub eps: f64,
    pub t_final: f64,
    pub output_times: Vec<f64>,
    pub probe_x: f64,
    pub out_dir: PathBuf,
    pub bc: BcChoice,
}

const DEFAULT_EPS: f64 = 2e-6;
const DEFAULT_T_FINAL: f64 = 10.0;
const DEFAULT_T_FINAL_BETA_SWEEP: f64 = 100.0;
/// Environment variable overriding the output directory.
pub const OUT_DIR_ENV: &str = "SEIRD_OUT_DIR";

impl RunConfig {
    /// Validate and resolve the configuration into a runnable description.
    pub fn resolve(&self) -> anyhow::Result<ResolvedRun> {
        if !self.deterministic {
            bail!("deterministic = false is not supported; runs are always reproducible");
        }
        let mut scenario = match &self.scenario {
            ScenarioRef::Name(name) => scenarios::by_name(name)?,
            ScenarioRef::Inline(sc) => {
                sc.validate()?;
                (**sc).clone()
            }
        };

        if let Some(ic) = self.ic {
            scenario.ic = match ic {
                IcChoice::I => IcKind::TwinBump,
                IcChoice::Ii => IcKind::SingleBump,
            };
        }
        if let Some(schedule) = self.beta_schedule {
            scenario.rate = match schedule {
                BetaScheduleChoice::Const => scenario.rate.clone(),
                BetaScheduleChoice::Step1 => scenarios::stepwise_beta(StepwiseVariant::One),
                BetaScheduleChoice::Step2 => scenarios::stepwise_beta(StepwiseVariant::Two),
            };
        }
        if let Some(recruitment) = self.recruitment {
            if let Recruitment::Constant(a) = recruitment {
                if !a.is_finite() || a < 0.0 {
                    bail!("constant recruitment must be finite and nonnegative, got {a}");
                }
            }
            scenario.params.recruitment = recruitment;
        }

        let bc = self.bc.unwrap_or(match scenario.bc {
            BcKind::Periodic => BcChoice::Periodic,
            BcKind::ZeroFlux => BcChoice::Neumann,
            BcKind::Inflow => BcChoice::Inflow,
        });
        scenario.bc = match bc {
            BcChoice::Periodic => BcKind::Periodic,
            BcChoice::Neumann => BcKind::ZeroFlux,
            BcChoice::Inflow => BcKind::Inflow,
        };

        let eps = self.eps.unwrap_or(DEFAULT_EPS);
        if !eps.is_finite() || eps <= 0.0 {
            bail!("eps must be positive and finite, got {eps}");
        }

        let t_final = self.t_final.unwrap_or(match self.sweep {
            Some(SweepChoice::Beta) => DEFAULT_T_FINAL_BETA_SWEEP,
            _ => DEFAULT_T_FINAL,
        });
        if !t_final.is_finite() || t_final < 0.0 {
            bail!("t_final must be finite and nonnegative, got {t_final}");
        }

        let output_times = match &self.output_times {
            Some(times) => {
                for &t in times {
                    if !(0.0..=t_final).contains(&t) {
                        bail!(
                            "output time {t} lies outside the run window [0, {t_final}]"
                        );
                    }
                }
                times.clone()
            }
            None => {
                let mut times: Vec<f64> = [0.5, 1.0, 5.0, 10.0]
                    .into_iter()
                    .filter(|&t| t <= t_final)
                    .collect();
                if t_final > 0.0 && times.last() != Some(&t_final) {
                    times.push(t_final);
                }
                times
            }
        };

        let probe_x = self
            .probe_x
            .or_else(|| scenario.probe_x.first().copied())
            .unwrap_or(0.0);
        if !probe_x.is_finite() || probe_x.abs() > scenario.half_length {
            bail!(
                "probe location {probe_x} lies outside the domain [-{l}, {l}]",
                l = scenario.half_length
            );
        }

        let out_dir = std::env::var_os(OUT_DIR_ENV)
            .map(PathBuf::from)
            .or_else(|| self.out_dir.clone())
            .unwrap_or_else(|| PathBuf::from("out").join(&scenario.name));

        let solver = self.solver.unwrap_or(SolverChoice::Both);

        // Boundary support differs per solver; fail early with a clear message.
        let wants_kinetic = self.sweep == Some(SweepChoice::Eps)
            || (self.sweep.is_none() && !matches!(solver, SolverChoice::Macro));
        let wants_macro = self.sweep.is_some() || !matches!(solver, SolverChoice::Kinetic);
        if wants_kinetic && bc == BcChoice::Neumann {
            bail!("the kinetic solver supports periodic or inflow boundaries, not neumann");
        }
        if wants_macro && bc == BcChoice::Inflow {
            bail!("the macroscopic solver supports periodic or neumann boundaries, not inflow");
        }

        Ok(ResolvedRun {
            scenario,
            solver,
            sweep: self.sweep,
            eps,
            t_final,
            output_times,
            probe_x,
            out_dir,
            bc,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_named_config_resolves() {
        let config = parse_config("scenario = \"paper-i\"").unwrap();
        let run = config.resolve().unwrap();
        assert_eq!(run.scenario.name, "paper-i");
        assert_eq!(run.eps, 2e-6);
        assert_eq!(run.t_final, 10.0);
        assert_eq!(run.output_times, vec![0.5, 1.0, 5.0, 10.0]);
        assert_eq!(run.probe_x, 0.0);
        assert!(matches!(run.solver, SolverChoice::Both));
    }

    #[test]
    fn unknown_key_rejected_by_name() {
        let err = parse_config("scenario = \"paper-i\"\nbetaa = 0.3\n").unwrap_err();
        let text = format!("{err:?}");
        assert!(text.contains("betaa"), "error should name the key: {text}");
    }

    #[test]
    fn output_time_outside_window_rejected() {
        let config = parse_config(
            "scenario = \"paper-i\"\nt_final = 50.0\noutput_times = [999.0]\n",
        )
        .unwrap();
        let err = config.resolve().unwrap_err();
        assert!(format!("{err}").contains("999"));
    }

    #[test]
    fn determinism_flag_must_stay_on() {
        let config = parse_config("scenario = \"paper-i\"\ndeterministic = false\n").unwrap();
        assert!(config.resolve().is_err());
    }

    #[test]
    fn ic_and_schedule_overrides_apply() {
        let mut config = RunConfig::named("paper-i");
        config.ic = Some(IcChoice::Ii);
        config.beta_schedule = Some(BetaScheduleChoice::Step1);
        config.t_final = Some(50.0);
        let run = config.resolve().unwrap();
        assert_eq!(run.scenario.ic, IcKind::SingleBump);
        assert_eq!(run.scenario.rate.beta_at(30.0).unwrap(), 1.4995);
    }

    #[test]
    fn bc_support_matrix_enforced() {
        let mut config = RunConfig::named("paper-i");
        config.bc = Some(BcChoice::Neumann);
        config.solver = Some(SolverChoice::Kinetic);
        assert!(config.resolve().is_err());
        config.solver = Some(SolverChoice::Macro);
        assert!(config.resolve().is_ok());

        let mut config = RunConfig::named("paper-i");
        config.bc = Some(BcChoice::Inflow);
        config.solver = Some(SolverChoice::Macro);
        assert!(config.resolve().is_err());
        config.solver = Some(SolverChoice::Kinetic);
        assert!(config.resolve().is_ok());
    }

    #[test]
    fn inline_scenario_accepted() {
        let sc = scenarios::by_name("paper-ii").unwrap();
        let mut config = RunConfig::named("ignored");
        config.scenario = ScenarioRef::Inline(Box::new(sc.clone()));
        config.solver = Some(SolverChoice::Macro);
        config.t_final = Some(1.0);
        config.output_times = Some(vec![1.0]);
        let doc = toml::to_string(&config).unwrap();
        let parsed = parse_config(&doc).unwrap();
        let run = parsed.resolve().unwrap();
        assert_eq!(run.scenario, sc);
    }

    #[test]
    fn beta_sweep_default_horizon() {
        let mut config = RunConfig::named("paper-ii");
        config.sweep = Some(SweepChoice::Beta);
        let run = config.resolve().unwrap();
        assert_eq!(run.t_final, 100.0);
    }
}
