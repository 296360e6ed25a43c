//! End-to-end checks of the installed binary: argument handling, output
//! schemas, exit codes, and cross-subcommand consistency.

use std::fs;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tendon-hand"));
    // keep the host environment from leaking a config override into tests
    cmd.env_remove("TENDON_HAND_CONFIG");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

fn floats(value: &serde_json::Value) -> Vec<f64> {
    value
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .collect()
}

const ZEROS_6: &str = "0,0,0,0,0,0";
const ZEROS_15: &str = "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0";

#[test]
fn fk_zero_command_is_the_rest_posture() {
    let out = run(&["fk", "--u", ZEROS_6, "--format", "json"]);
    let doc = stdout_json(&out);
    assert_eq!(floats(&doc["q"]), vec![0.0; 15]);
}

#[test]
fn fk_routes_the_last_servo_straight_to_the_cmc_joint() {
    let out = run(&["fk", "--u", "0,0,0,0,0,0.7", "--model", "ideal", "--format", "json"]);
    let doc = stdout_json(&out);
    assert_eq!(floats(&doc["q"])[14], 0.7);
}

#[test]
fn fk_reports_the_infeasible_servo() {
    let out = run(&["fk", "--u", "5,0,0,0,0,0"]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("servo 1"), "{stderr}");
}

#[test]
fn deg_flag_converts_both_directions() {
    let out = run(&[
        "fk", "--u", "0,0,0,0,0,30", "--deg", "--model", "ideal", "--format", "json",
    ]);
    let doc = stdout_json(&out);
    assert_eq!(doc["unit"], "deg");
    assert!((floats(&doc["q"])[14] - 30.0).abs() < 1e-12);
}

#[test]
fn ik_of_zeros_commands_nothing() {
    let out = run(&["ik", "--q", ZEROS_15, "--format", "json"]);
    let doc = stdout_json(&out);
    assert_eq!(floats(&doc["u"]), vec![0.0; 6]);
    assert_eq!(doc["residual_max"], 0.0);
}

#[test]
fn ik_round_trips_an_fk_posture() {
    let u_in = [0.4, 0.5, 0.3, 0.2, 0.6, 0.9];
    let u_text = "0.4,0.5,0.3,0.2,0.6,0.9";
    let fk = stdout_json(&run(&["fk", "--u", u_text, "--format", "json"]));
    let q_text = floats(&fk["q"])
        .iter()
        .map(|v| format!("{v:?}"))
        .collect::<Vec<_>>()
        .join(",");
    let ik = stdout_json(&run(&["ik", "--q", &q_text, "--format", "json"]));
    for (a, b) in floats(&ik["u"]).iter().zip(u_in) {
        assert!((a - b).abs() < 1e-9, "{a} vs {b}");
    }
    assert!(ik["residual_max"].as_f64().unwrap() < 1e-9);
}

#[test]
fn ik_names_the_joints_it_clipped() {
    let out = run(&[
        "ik", "--q", "0,0,0,3.0,0,0,0,0,0,0,0,0,0,0,0", "--format", "json",
    ]);
    let doc = stdout_json(&out);
    assert_eq!(doc["clipped_joints"], serde_json::json!(["q4"]));
}

#[test]
fn sweeps_with_equal_seeds_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let out = run(&[
            "sweep", "--servo", "2", "--k", "20", "--noise-sigma-deg", "0.1",
            "--seed", "7", "--out", path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let bytes_a = fs::read(&a).unwrap();
    assert_eq!(bytes_a, fs::read(&b).unwrap());
    let text = String::from_utf8(bytes_a).unwrap();
    assert_eq!(text.lines().count(), 1 + 20 * 15);
    assert!(text.starts_with(
        "servo_index,u_rad,joint_index,q_meas_rad,q_ideal_rad,q_comp_rad,residual_ideal_deg,residual_comp_deg"
    ));
}

#[test]
fn report_shows_the_rigid_model_losing_at_the_index_distal_joints() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("sweep.csv");
    assert!(run(&["sweep", "--servo", "2", "--k", "100", "--out", csv.to_str().unwrap()])
        .status
        .success());
    let doc = stdout_json(&run(&[
        "report", "--input", csv.to_str().unwrap(), "--format", "json",
    ]));
    assert_eq!(doc["servo_index"], 2);
    let joints = doc["joints"].as_array().unwrap();
    for label in ["index_dip", "index_pip"] {
        let j = joints.iter().find(|j| j["label"] == label).unwrap();
        let ideal = j["mae_ideal_deg"].as_f64().unwrap();
        let comp = j["mae_comp_deg"].as_f64().unwrap();
        assert!(ideal > comp, "{label}: {ideal} vs {comp}");
        assert!(comp < 1e-9);
    }
}

#[test]
fn validate_accepts_the_shipped_model() {
    let out = run(&["validate"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "0 violations");
}

#[test]
fn validate_rejects_a_broken_config_via_flag_and_env() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    let mut doc: serde_json::Value =
        serde_json::from_str(tendon_hand::DEFAULT_HAND_JSON).unwrap();
    doc["digits"][1]["joint_radii_m"][0] = serde_json::json!(-0.005);
    fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();

    let out = run(&["validate", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("violation"), "{stdout}");

    let out = bin()
        .args(["validate"])
        .env("TENDON_HAND_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn pose_subcommands_cover_list_show_run() {
    let list = run(&["pose", "list"]);
    assert!(list.status.success());
    let text = String::from_utf8_lossy(&list.stdout);
    for name in ["fist", "open", "cmc-abduct", "thumb-index-opposition"] {
        assert!(text.contains(name), "missing {name}");
    }

    let filtered = run(&["pose", "list", "--category", "power-grasp"]);
    let text = String::from_utf8_lossy(&filtered.stdout);
    assert!(text.contains("power-cylinder") && !text.contains("fist"));

    let show = run(&["pose", "show", "fist"]);
    assert!(String::from_utf8_lossy(&show.stdout).contains("q15"));

    let doc = stdout_json(&run(&["pose", "run", "fist", "--format", "json"]));
    assert!(floats(&doc["u"]).iter().all(|v| v.is_finite()));

    assert_eq!(run(&["pose", "run", "no-such"]).status.code(), Some(2));
}

#[test]
fn fit_reproduces_the_shipped_stiffness() {
    let doc = stdout_json(&run(&["fit", "--target-mae", "1.15", "--format", "json"]));
    let k_s = doc["k_s_n_per_m"].as_f64().unwrap();
    assert!((k_s - 135.498046875).abs() < 1e-9, "{k_s}");
    let mae = doc["achieved_mae_deg"].as_f64().unwrap();
    assert!((mae - 1.15).abs() < 1.15 * 1e-3);

    assert_eq!(run(&["fit", "--target-mae", "50"]).status.code(), Some(2));
}

#[test]
fn usage_mistakes_exit_with_one() {
    assert_eq!(run(&["fk", "--u", "1,2"]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["ik"]).status.code(), Some(1));
    assert!(run(&["--help"]).status.success());
}
