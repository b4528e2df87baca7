use std::fs;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_orbit-atlas"));
    cmd.env_remove("ORBIT_ATLAS_SEED");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn analyze_bell_state() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bell.json");
    let h = [0.5, 0.0];
    let z = [0.0, 0.0];
    let state = serde_json::json!({
        "k": 2, "m": 2,
        "matrix": [[h, z, z, h], [z, z, z, z], [z, z, z, z], [h, z, z, h]]
    });
    fs::write(&path, state.to_string()).unwrap();
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    assert_eq!(v["gram"]["local_dim"], 3);
    assert!((v["entanglement"]["concurrence"].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn analyze_bloch_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rho.json");
    let state = serde_json::json!({
        "k": 2, "m": 2,
        "a": [0.0, 0.0, 0.0], "b": [0.0, 0.0, 0.0],
        "g": [[-0.1, 0.0, 0.0], [0.0, 0.05, 0.0], [0.0, 0.0, 0.02]]
    });
    fs::write(&path, state.to_string()).unwrap();
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(json(&out)["gram"]["local_dim"], 6);
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, "{\"k\": 2, \"m\": 2, \"matrix\": \"nope\"}").unwrap();
    assert_eq!(
        run(&["analyze", path.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["analyze", "/nonexistent/state.json"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["dims", "1", "3"]).status.code(), Some(2));
    assert_eq!(
        run(&["appendix-verify", "--cases", "12"]).status.code(),
        Some(2)
    );
}

#[test]
fn not_positive_semidefinite_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("neg.json");
    let state = serde_json::json!({
        "k": 2, "m": 2,
        "a": [0.0, 0.0, 0.9], "b": [0.0, 0.0, 0.0],
        "g": [[0.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]]
    });
    fs::write(&path, state.to_string()).unwrap();
    assert_eq!(
        run(&["analyze", path.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn werner_scan_csv() {
    let out = run(&["werner-scan", "--x-steps", "4", "--theta-steps", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "x,theta,concurrence,eof,min_pt_eigenvalue,in_ball"
    );
    assert_eq!(lines.len(), 1 + 12);
    assert!(!text.contains('\r'));
    assert_eq!(
        text,
        stdout(&run(&[
            "werner-scan",
            "--x-steps",
            "4",
            "--theta-steps",
            "3"
        ]))
    );
}

#[test]
fn werner_scan_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.csv");
    let out = run(&["werner-scan", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        fs::read_to_string(&path).unwrap().lines().count(),
        1 + 101 * 91
    );
}

#[test]
fn appendix_verify_exit_codes() {
    let ok = run(&["appendix-verify", "--cases", "1,2,3,5", "--samples", "10"]);
    assert_eq!(
        ok.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&ok.stderr)
    );
    let report = json(&ok);
    assert_eq!(report["all_match"], true);
    assert_eq!(report["cases"].as_array().unwrap().len(), 4);

    let all = run(&["appendix-verify", "--samples", "10"]);
    assert_eq!(all.status.code(), Some(3));
    let report = json(&all);
    let case4 = &report["cases"][3];
    assert_eq!(case4["case"], "4");
    assert_eq!(case4["typo_candidates"], serde_json::json!(["xi"]));
}

#[test]
fn appendix_verify_seed_from_env() {
    let a = bin()
        .args(["appendix-verify", "--cases", "2", "--samples", "5"])
        .env("ORBIT_ATLAS_SEED", "7")
        .output()
        .unwrap();
    let b = run(&[
        "appendix-verify",
        "--cases",
        "2",
        "--samples",
        "5",
        "--seed",
        "7",
    ]);
    assert_eq!(json(&a)["seed"], 7);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn random_scan_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("a.csv");
    let p2 = dir.path().join("b.csv");
    let a = run(&[
        "random-scan",
        "--count",
        "50",
        "--seed",
        "3",
        "--out",
        p1.to_str().unwrap(),
    ]);
    let b = bin()
        .args([
            "random-scan",
            "--count",
            "50",
            "--out",
            p2.to_str().unwrap(),
        ])
        .env("ORBIT_ATLAS_SEED", "3")
        .output()
        .unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a).trim(), "fraction at D_l = 6: 1");
    assert_eq!(fs::read(&p1).unwrap(), fs::read(&p2).unwrap());
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(fs::read_to_string(&p1).unwrap().lines().count(), 51);
}

#[test]
fn random_scan_pure_qutrit_qubit() {
    let out = run(&[
        "random-scan",
        "--k",
        "2",
        "--m",
        "3",
        "--kind",
        "pure",
        "--count",
        "20",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = text.lines().nth(1).unwrap();
    assert!(row.starts_with("0,"));
}

#[test]
fn dims_output() {
    let v = json(&run(&["dims", "2", "2"]));
    assert_eq!(v["max_local_dim"], 6);
    assert_eq!(v["generic_global_dim"], 12);
    assert_eq!(v["effective_dim"], 6);
    let v = json(&run(&["dims", "3", "3"]));
    assert_eq!(v["max_local_dim"], 16);
}

#[test]
fn ball_check_spectrum() {
    let v = json(&run(&["ball-check", "--spectrum", "0.47,0.30,0.13,0.10"]));
    assert_eq!(v["in_maximal_ball"], false);
    assert!((v["purity"].as_f64().unwrap() - 0.3378).abs() < 1e-12);
    assert_eq!(v["cstar"], 0.0);
    let v = json(&run(&["ball-check", "--spectrum", "0.25,0.25,0.25,0.25"]));
    assert_eq!(v["in_maximal_ball"], true);
    assert_eq!(
        run(&["ball-check", "--spectrum", "0.5,0.6"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["ball-check"]).status.code(), Some(2));
}
