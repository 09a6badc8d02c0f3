use std::process::{Command, Output};

use serde_json::Value;

fn cppg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cppg")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn integer_radius_solves_continuous() {
    let v = json(&cppg(&["solve", "--m", "40", "--n", "40", "--k", "3", "--alpha", "1", "--beta", "1"]));
    assert_eq!(v["variant"], "C");
    assert_eq!(v["k_effective"], 3);
    let t = v["T"].as_u64().unwrap();
    assert_eq!(v["stops"].as_array().unwrap().len() as u64, t);
    assert_eq!(v["stops_exact"].as_array().unwrap().len() as u64, t);
    assert!(v["observed_ratio"].as_f64().unwrap() >= 1.0 - 1e-9);
}

#[test]
fn half_radius_min_stops_is_zigzag() {
    let v = json(&cppg(&["solve", "--m", "10", "--n", "10", "--k", "3/2", "--min", "stops"]));
    assert_eq!(v["variant"], "D");
    assert_eq!(v["construction"], "ZIGZAG");
}

#[test]
fn radius_forms_agree() {
    let a = cppg(&["solve", "--m", "12", "--n", "9", "--k", "3/2"]);
    let b = cppg(&["solve", "--m", "12", "--n", "9", "--k", "1.5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let solved = cppg(&["solve", "--m", "20", "--n", "20", "--k", "2"]);
    let file = dir.path().join("p.json");
    std::fs::write(&file, &solved.stdout).unwrap();
    let v = json(&cppg(&["verify", "--path", file.to_str().unwrap(), "--k", "2"]));
    assert_eq!(v["covered"], true);
    assert_eq!(v["tradeoff_ok"], true);

    // Dropping most stops breaks coverage.
    let mut path: Value = serde_json::from_slice(&solved.stdout).unwrap();
    for key in ["stops", "stops_exact"] {
        path[key].as_array_mut().unwrap().truncate(2);
    }
    std::fs::write(&file, serde_json::to_vec(&path).unwrap()).unwrap();
    let v = json(&cppg(&["verify", "--path", file.to_str().unwrap(), "--k", "2"]));
    assert_eq!(v["covered"], false);
}

#[test]
fn verify_reads_float_only_paths() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p.json");
    let path = serde_json::json!({
        "grid": {"m": 2, "n": 2},
        "waypoints": [[0.0, 0.0], [0.0, 1.0], [2.0, 1.0]],
        "stops": [[0.0, 1.0], [2.0, 1.0]],
    });
    std::fs::write(&file, path.to_string()).unwrap();
    let v = json(&cppg(&["verify", "--path", file.to_str().unwrap(), "--k", "2"]));
    assert_eq!(v["covered"], true);
    assert_eq!(v["L"], 3.0);
    assert_eq!(v["T"], 2);
    assert_eq!(v["well_formed"], true);

    // Moving a stop to (2, 2) leaves (3/2, 0) at distance 5/2.
    let path = serde_json::json!({
        "grid": {"m": 2, "n": 2},
        "waypoints": [[0.0, 0.0], [0.0, 1.0], [2.0, 1.0], [2.0, 2.0]],
        "stops": [[0.0, 1.0], [2.0, 2.0]],
    });
    std::fs::write(&file, path.to_string()).unwrap();
    let v = json(&cppg(&["verify", "--path", file.to_str().unwrap(), "--k", "2"]));
    assert_eq!(v["covered"], false);
}

#[test]
fn frontier_has_both_curves() {
    let v = json(&cppg(&["frontier", "--m", "10", "--n", "10", "--k", "1.5"]));
    assert_eq!(v["variant"], "D");
    assert_eq!(v["lower"]["role"], "LOWER");
    assert_eq!(v["upper"]["role"], "UPPER");
    assert!(!v["points"].as_array().unwrap().is_empty());
    for vertex in v["lower"]["vertices"].as_array().unwrap() {
        assert_eq!(vertex.as_array().unwrap().len(), 2);
    }
}

#[test]
fn oracle_small_frontier() {
    let v = json(&cppg(&["oracle", "--m", "1", "--n", "1", "--k", "1.5"]));
    assert_eq!(v["frontier"], serde_json::json!([[1, 2]]));
}

#[test]
fn svg_stop_count_matches_solution() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p.svg");
    let out = cppg(&["svg", "--m", "14", "--n", "11", "--k", "2", "--diamonds", "--out", file.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&file).unwrap();
    let doc = roxmltree::Document::parse(&text).unwrap();
    let stops = doc.descendants().filter(|n| n.has_tag_name("circle") && n.attribute("class") == Some("stop")).count();
    let v = json(&cppg(&["solve", "--m", "14", "--n", "11", "--k", "2"]));
    assert_eq!(stops as u64, v["T"].as_u64().unwrap());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["solve", "--m", "10", "--n", "10"][..],
        &["solve", "--m", "0", "--n", "10", "--k", "2"],
        &["solve", "--m", "10", "--n", "10", "--k", "two"],
        &["solve", "--m", "10", "--n", "10", "--k", "2", "--min", "time"],
        &["solve", "--m", "10", "--n", "10", "--k", "2", "--alpha", "0", "--beta", "0"],
        &["frobnicate"],
    ] {
        let out = cppg(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn solver_errors_exit_one() {
    let out = cppg(&["oracle", "--m", "10", "--n", "10", "--k", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["error"].as_str().unwrap().contains("lattice points"));
}
