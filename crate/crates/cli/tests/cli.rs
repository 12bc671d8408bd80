//! End-to-end command-line behaviour: exit codes, file outputs, config
//! ingestion, and the shipped scenario configs.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use seird_cli::config::{parse_config, ScenarioRef};

fn simulate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_simulate"))
        .args(args)
        .output()
        .expect("spawn simulate")
}

fn repo_path(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").join(rel)
}

#[test]
fn smoke_run_writes_snapshots_and_comparison() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("run");
    let result = simulate(&[
        "--scenario",
        "paper-i",
        "--solver",
        "both",
        "--eps",
        "2e-2",
        "--t-final",
        "0.1",
        "--output-times",
        "0.05,0.1",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(result.status.success(), "stderr: {}", String::from_utf8_lossy(&result.stderr));
    for name in ["kinetic_snapshots.csv", "macro_snapshots.csv", "comparison.csv"] {
        let path = out.join(name);
        assert!(path.exists(), "{name} missing");
        let text = std::fs::read_to_string(&path).unwrap();
        let header = text.lines().next().unwrap();
        assert!(header.contains(','), "no header in {name}");
    }
    let stdout = String::from_utf8_lossy(&result.stdout);
    assert!(stdout.contains("R0"), "summary should report the reproduction number");
    assert!(stdout.contains("conservation drift"));
}

#[test]
fn beta_sweep_writes_six_series() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sweep");
    let result = simulate(&[
        "--scenario",
        "paper-ii",
        "--sweep",
        "beta",
        "--t-final",
        "1",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(result.status.success());
    let mut names: Vec<String> = std::fs::read_dir(&out)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.len(), 6, "expected six series files, got {names:?}");
    assert!(names.iter().all(|n| n.starts_with("timeseries_beta_")));
}

#[test]
fn missing_scenario_is_an_error() {
    let result = simulate(&[]);
    assert!(!result.status.success());
    let result = simulate(&["--scenario", "nonexistent"]);
    assert!(!result.status.success());
    let text = String::from_utf8_lossy(&result.stderr);
    assert!(text.contains("nonexistent"));
}

#[test]
fn invalid_output_time_is_an_error() {
    let result = simulate(&[
        "--scenario",
        "paper-i",
        "--t-final",
        "50",
        "--output-times",
        "999",
    ]);
    assert!(!result.status.success());
    let text = String::from_utf8_lossy(&result.stderr);
    assert!(text.contains("999"), "stderr: {text}");
}

#[test]
fn unknown_config_key_is_rejected_by_name() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    std::fs::write(&path, "scenario = \"paper-i\"\nbetaa = 0.3\n").unwrap();
    let result = simulate(&["--config", path.to_str().unwrap()]);
    assert!(!result.status.success());
    let text = String::from_utf8_lossy(&result.stderr);
    assert!(text.contains("betaa"), "stderr: {text}");
}

#[test]
fn boundary_support_matrix() {
    let dir = tempfile::tempdir().unwrap();
    // Neumann is macro-only.
    let bad = simulate(&["--scenario", "paper-i", "--bc", "neumann", "--solver", "kinetic"]);
    assert!(!bad.status.success());
    let ok = simulate(&[
        "--scenario",
        "paper-i",
        "--bc",
        "neumann",
        "--solver",
        "macro",
        "--t-final",
        "0.05",
        "--output-times",
        "0.05",
        "--out",
        dir.path().join("n").to_str().unwrap(),
    ]);
    assert!(ok.status.success());
    // Inflow is kinetic-only.
    let bad = simulate(&["--scenario", "paper-i", "--bc", "inflow", "--solver", "macro"]);
    assert!(!bad.status.success());
    let ok = simulate(&[
        "--scenario",
        "paper-i",
        "--bc",
        "inflow",
        "--solver",
        "kinetic",
        "--eps",
        "2e-2",
        "--t-final",
        "0.05",
        "--output-times",
        "0.05",
        "--out",
        dir.path().join("i").to_str().unwrap(),
    ]);
    assert!(
        ok.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&ok.stderr)
    );
}

#[test]
fn env_var_overrides_output_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("from-env");
    let result = Command::new(env!("CARGO_BIN_EXE_simulate"))
        .args([
            "--scenario",
            "paper-i",
            "--solver",
            "macro",
            "--t-final",
            "0.02",
            "--output-times",
            "0.02",
        ])
        .env("SEIRD_OUT_DIR", &out)
        .output()
        .unwrap();
    assert!(result.status.success());
    assert!(out.join("macro_snapshots.csv").exists());
}

#[test]
fn shipped_configs_parse_and_match_registry() {
    for sc in seird_core::scenarios::registry() {
        let path = repo_path(&format!("configs/{}.toml", sc.name));
        let text = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("missing shipped config {}: {e}", path.display()));
        let config = parse_config(&text).unwrap();
        match &config.scenario {
            ScenarioRef::Inline(inline) => {
                assert_eq!(**inline, sc, "shipped config drifted for {}", sc.name)
            }
            ScenarioRef::Name(_) => panic!("shipped configs should inline the scenario"),
        }
        let run = config.resolve().unwrap();
        assert_eq!(run.scenario, sc);
    }
}

#[test]
fn shipped_config_runs_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cfg");
    let path = repo_path("configs/paper-i.toml");
    let result = simulate(&[
        "--config",
        path.to_str().unwrap(),
        "--solver",
        "macro",
        "--t-final",
        "0.05",
        "--output-times",
        "0.05",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(
        result.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&result.stderr)
    );
    assert!(out.join("macro_snapshots.csv").exists());
}
