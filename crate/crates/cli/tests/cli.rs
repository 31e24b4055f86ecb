use std::process::{Command, Output};

fn ineq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ineq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn check_strict_point() {
    let o = ineq(&["check", "GA2E", "--point", "4,9"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "StrictlyHolds margin=0.5");
}

#[test]
fn check_outside_validity_is_not_a_failure() {
    let o = ineq(&["check", "GA2E", "--point", "4,-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "OutsideValidity");
}

#[test]
fn check_equality_and_weights() {
    let o = ineq(&["check", "GA2E", "--point", "3,3"]);
    assert!(stdout(&o).starts_with("Equality"));
    let o = ineq(&["check", "GAN", "--point", "1,4", "--weights", "1,1"]);
    assert!(
        stdout(&o).starts_with("StrictlyHolds margin=0.5"),
        "{}",
        stdout(&o)
    );
    let inline = ineq(&["check", "GAN", "--point", "1,4,w=1,1"]);
    assert_eq!(stdout(&o), stdout(&inline));
}

#[test]
fn check_with_params_and_tuples() {
    let o = ineq(&[
        "check", "HOLDER", "--point", "1,2", "--tuple", "2,4", "--param", "p=2",
    ]);
    assert!(stdout(&o).starts_with("Equality"), "{}", stdout(&o));
    let o = ineq(&[
        "check",
        "BERNOULLI_FULL",
        "--point",
        "1",
        "--param",
        "alpha=2",
        "--complement",
    ]);
    assert!(stdout(&o).starts_with("StrictlyHolds"), "{}", stdout(&o));
}

#[test]
fn check_json() {
    let o = ineq(&["check", "GA2E", "--point", "4,9", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "StrictlyHolds");
    assert_eq!(v["entry"], "GA2E");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        ineq(&["check", "NOPE", "--point", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        ineq(&["check", "GA2E", "--point", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        ineq(&["check", "YOUNG", "--point", "1,2"]).status.code(),
        Some(2)
    );
    assert_eq!(ineq(&["frobnicate"]).status.code(), Some(2));
    let o = ineq(&["check", "GA2E", "--point", "x,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn list_and_explain() {
    let o = ineq(&["list", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["entries"].as_array().unwrap().len() >= 40);
    assert!(v["witnesses"].as_array().unwrap().len() >= 18);
    let o = ineq(&["explain", "YOUNG"]);
    let s = stdout(&o);
    assert!(s.contains("x^p = y^q") && s.contains("at most"), "{s}");
}

#[test]
fn witness_passes_and_reports_json() {
    let o = ineq(&[
        "witness",
        "W_REFLECT",
        "--samples",
        "50",
        "--seed",
        "3",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["witness"], "W_REFLECT");
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert_eq!(
        ineq(&["witness", "W_BACKWARD", "--params", "4,4"])
            .status
            .code(),
        Some(2)
    );
}

fn without_wall_time(bytes: &[u8]) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_slice(bytes).unwrap();
    v.as_object_mut().unwrap().remove("wall_time");
    v
}

#[test]
fn suite_json_is_deterministic() {
    let args = ["suite", "--seed", "42", "--samples", "20", "--json"];
    let a = ineq(&args);
    assert_eq!(
        a.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&a.stderr)
    );
    let b = ineq(&args);
    let (va, vb) = (without_wall_time(&a.stdout), without_wall_time(&b.stdout));
    assert_eq!(va, vb);
    assert_eq!(va["seed"], 42);
    assert_eq!(va["precision_bits"], 128);
    for key in ["entries", "witnesses", "limits", "monotonicity"] {
        assert!(va[key].is_array(), "{key}");
    }
}

#[test]
fn mutated_suite_exits_1() {
    let dir = std::env::temp_dir().join(format!("ineq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("mutated.json");
    std::fs::write(
        &cfg,
        r#"{"entries":[{"name":"GA2E","mutation":"SwapSides"}],"samples_per_entry":50,
            "witness_samples":0,"limit_tuples":0,"monotonicity_a":[],"chain_trials":0}"#,
    )
    .unwrap();
    let o = ineq(&["suite", "--config", cfg.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["entries"][0]["counts"]["violated"].as_u64().unwrap() > 0);
    std::fs::remove_dir_all(dir).ok();
}
