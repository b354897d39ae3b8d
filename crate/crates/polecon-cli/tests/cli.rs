//! Black-box tests of the binary: exit codes, flag/config precedence, and
//! artifact shape.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn polecon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polecon"))
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .args(args)
        .output()
        .unwrap()
}

#[test]
fn gaps_writes_artifacts() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().to_str().unwrap();
    let result = polecon(&["gaps", "--out", out]);
    assert!(result.status.success());
    for name in ["output_gap.csv", "cyclical_unemployment.csv", "episodes.csv", "gaps.svg"] {
        assert!(tmp.path().join(name).exists(), "missing {name}");
    }
    let episodes = fs::read_to_string(tmp.path().join("episodes.csv")).unwrap();
    assert!(episodes.starts_with("start,end,extremum_date,extremum_value,duration\n"));
    assert!(episodes.lines().count() > 4);
}

#[test]
fn missing_data_file_is_an_input_error() {
    let tmp = tempfile::tempdir().unwrap();
    let config = tmp.path().join("config.json");
    fs::write(
        &config,
        r#"{"data": {"gdp": "no_such_file.csv"}}"#,
    )
    .unwrap();
    let result = polecon(&[
        "gaps",
        "--config",
        config.to_str().unwrap(),
        "--out",
        tmp.path().join("out").to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&result.stderr);
    assert!(stderr.contains("no_such_file.csv"), "stderr: {stderr}");
}

#[test]
fn malformed_config_is_an_input_error() {
    let tmp = tempfile::tempdir().unwrap();
    let config = tmp.path().join("config.json");
    fs::write(&config, r#"{"unknown_section": 1}"#).unwrap();
    let result = polecon(&["report", "--config", config.to_str().unwrap()]);
    assert_eq!(result.status.code(), Some(1));
}

#[test]
fn stimulus_flags_override_config() {
    let tmp = tempfile::tempdir().unwrap();
    let config = tmp.path().join("config.json");
    fs::write(
        &config,
        r#"{"stimulus": {"gap": 50.0, "groups": [{"label": "all", "mpc": 0.5, "population_share": 1.0}]}}"#,
    )
    .unwrap();
    let out = tmp.path().join("out");
    let result = polecon(&[
        "stimulus",
        "--config",
        config.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        "--gap",
        "200",
        "--group",
        "everyone:1.0:0.8",
    ]);
    assert!(result.status.success());
    let plan: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.join("stimulus_plan.json")).unwrap()).unwrap();
    assert_eq!(plan["gap"], 200.0);
    assert_eq!(plan["allocations"][0]["group"]["label"], "everyone");
    // 200 / 0.8 under first-round impact.
    assert_eq!(plan["total_stimulus"], 250.0);
}

#[test]
fn bad_group_spec_is_an_input_error() {
    let tmp = tempfile::tempdir().unwrap();
    let result = polecon(&[
        "stimulus",
        "--out",
        tmp.path().to_str().unwrap(),
        "--group",
        "no-colons-here",
    ]);
    assert_eq!(result.status.code(), Some(1));
}

#[test]
fn game_inline_flags() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().to_str().unwrap();
    let result = polecon(&[
        "game",
        "--out",
        out,
        "--labels",
        "Cooperate,Defect",
        "--payoffs",
        "3,3;0,5;5,0;1,1",
    ]);
    assert!(result.status.success());
    let diag: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(tmp.path().join("game_diagnosis.json")).unwrap())
            .unwrap();
    assert_eq!(diag["game"]["strategy_labels"][1], "Defect");
    assert_eq!(diag["diagnosis"]["is_tragedy"], true);
    assert_eq!(diag["corrective_tax"]["infimum_tau"], 2.0);
}

#[test]
fn npv_zero_spread_costs_nothing() {
    let tmp = tempfile::tempdir().unwrap();
    let result = polecon(&[
        "npv",
        "--out",
        tmp.path().to_str().unwrap(),
        "--r-fm",
        "0.02",
        "--r-sl",
        "0.02",
        "--no-sweep",
    ]);
    assert!(result.status.success());
    let decision: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(tmp.path().join("npv_decision.json")).unwrap())
            .unwrap();
    assert_eq!(decision["costs_npv"], 0.0);
    assert!(!tmp.path().join("npv_sweep.csv").exists());
}

#[test]
fn retime_schedule_endpoints() {
    let tmp = tempfile::tempdir().unwrap();
    let result = polecon(&["retime", "--out", tmp.path().to_str().unwrap()]);
    assert!(result.status.success());
    let proposed = fs::read_to_string(tmp.path().join("proposed_schedule.csv")).unwrap();
    let lines: Vec<&str> = proposed.lines().collect();
    assert_eq!(lines[0], "effective_date,wage");
    assert!(lines[1].ends_with(",0.4"));
    assert!(lines.last().unwrap().ends_with(",7.25"));
}

#[test]
fn charity_output_matches_hand_arithmetic() {
    let tmp = tempfile::tempdir().unwrap();
    let result = polecon(&[
        "charity",
        "--out",
        tmp.path().to_str().unwrap(),
        "--baseline-giving",
        "100",
        "--baseline-price",
        "0.6",
        "--new-price",
        "0.55",
        "--mode",
        "point-elasticity",
    ]);
    assert!(result.status.success());
    let charity: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(tmp.path().join("charity.json")).unwrap())
            .unwrap();
    // -4 * (-0.05 / 0.60) = +1/3 of baseline giving.
    let induced = charity["induced_giving"].as_f64().unwrap();
    assert!((induced - 100.0 / 3.0).abs() < 1e-9);
}

#[test]
fn report_emits_index_of_all_artifacts() {
    let tmp = tempfile::tempdir().unwrap();
    let result = polecon(&["report", "--out", tmp.path().to_str().unwrap()]);
    assert!(result.status.success());
    let index: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(tmp.path().join("index.json")).unwrap()).unwrap();
    let artifacts: Vec<String> = index["artifacts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    assert!(artifacts.len() >= 20);
    for name in &artifacts {
        assert!(
            tmp.path().join(name).exists(),
            "index lists missing file {name}"
        );
    }
    // No leftover temp files from the atomic writes.
    assert!(!fs::read_dir(tmp.path())
        .unwrap()
        .any(|e| e.unwrap().path().extension().is_some_and(|x| x == "tmp")));
}

#[test]
fn relative_data_paths_resolve_against_config_location() {
    // Copy the snapshots next to a config that names them relatively, then
    // run from an unrelated working directory.
    let tmp = tempfile::tempdir().unwrap();
    let data_dir = tmp.path().join("data");
    fs::create_dir(&data_dir).unwrap();
    let source = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    for entry in fs::read_dir(&source).unwrap() {
        let entry = entry.unwrap();
        fs::copy(entry.path(), data_dir.join(entry.file_name())).unwrap();
    }
    let config = tmp.path().join("config.json");
    fs::write(&config, "{}").unwrap();

    let elsewhere = tempfile::tempdir().unwrap();
    let result = Command::new(env!("CARGO_BIN_EXE_polecon"))
        .current_dir(elsewhere.path())
        .args(["gaps", "--config", config.to_str().unwrap(), "--out"])
        .arg(tmp.path().join("out"))
        .output()
        .unwrap();
    assert!(result.status.success());
}
