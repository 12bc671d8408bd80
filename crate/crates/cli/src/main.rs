//! `simulate`: run the SEIRD kinetic and reaction-diffusion solvers on
//! named or user-provided scenarios and persist trajectories as CSV.

use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::Parser;

use seird_cli::config::{
    self, BcChoice, BetaScheduleChoice, IcChoice, RunConfig, SolverChoice, SweepChoice,
};
use seird_cli::runner;

#[derive(Debug, Parser)]
#[command(
    name = "simulate",
    about = "SEIRD epidemic simulations: micro-macro kinetic solver and its reaction-diffusion limit",
    after_help = "Examples:\n  simulate --scenario paper-i --solver both --eps 2e-6 --t-final 1\n  simulate --scenario paper-ii --sweep beta\n  simulate --config configs/paper-i.toml"
)]
struct Cli {
    /// Registered scenario name (see --list).
    #[arg(long)]
    scenario: Option<String>,
    /// Path to a TOML run configuration; flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Which solver(s) to run.
    #[arg(long, value_enum)]
    solver: Option<SolverChoice>,
    /// Mean free path for the kinetic solver.
    #[arg(long)]
    eps: Option<f64>,
    /// Sweep mode instead of a single run.
    #[arg(long, value_enum)]
    sweep: Option<SweepChoice>,
    /// Final simulation time.
    #[arg(long = "t-final")]
    t_final: Option<f64>,
    /// Snapshot times (comma separated).
    #[arg(long = "output-times", value_delimiter = ',')]
    output_times: Option<Vec<f64>>,
    /// Output directory (also settable via SEIRD_OUT_DIR).
    #[arg(long = "out")]
    out_dir: Option<PathBuf>,
    /// Boundary condition.
    #[arg(long, value_enum)]
    bc: Option<BcChoice>,
    /// Initial condition family.
    #[arg(long, value_enum)]
    ic: Option<IcChoice>,
    /// Transmission-rate schedule.
    #[arg(long = "beta-schedule", value_enum)]
    beta_schedule: Option<BetaScheduleChoice>,
    /// Probe location for time-series output.
    #[arg(long = "probe-x")]
    probe_x: Option<f64>,
    /// List registered scenarios and exit.
    #[arg(long)]
    list: bool,
}

fn apply_flags(mut config: RunConfig, cli: &Cli) -> RunConfig {
    if let Some(v) = cli.solver {
        config.solver = Some(v);
    }
    if let Some(v) = cli.eps {
        config.eps = Some(v);
    }
    if let Some(v) = cli.sweep {
        config.sweep = Some(v);
    }
    if let Some(v) = cli.t_final {
        config.t_final = Some(v);
    }
    if let Some(v) = &cli.output_times {
        config.output_times = Some(v.clone());
    }
    if let Some(v) = &cli.out_dir {
        config.out_dir = Some(v.clone());
    }
    if let Some(v) = cli.bc {
        config.bc = Some(v);
    }
    if let Some(v) = cli.ic {
        config.ic = Some(v);
    }
    if let Some(v) = cli.beta_schedule {
        config.beta_schedule = Some(v);
    }
    if let Some(v) = cli.probe_x {
        config.probe_x = Some(v);
    }
    config
}

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();

    if cli.list {
        for sc in seird_core::scenarios::registry() {
            println!("{}", sc.name);
        }
        return Ok(());
    }

    let base = match (&cli.config, &cli.scenario) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read config {}", path.display()))?;
            let mut parsed = config::parse_config(&text)?;
            if let Some(name) = &cli.scenario {
                parsed.scenario = config::ScenarioRef::Name(name.clone());
            }
            parsed
        }
        (None, Some(name)) => RunConfig::named(name),
        (None, None) => bail!("pass --scenario <name> or --config <path> (try --list)"),
    };

    let run = apply_flags(base, &cli).resolve()?;
    let outcome = runner::execute(&run)?;
    for line in &outcome.summary {
        println!("{line}");
    }
    for file in &outcome.files {
        println!("wrote {}", file.display());
    }
    Ok(())
}
