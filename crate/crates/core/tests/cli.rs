use std::process::{Command, Output};

fn qtangent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtangent"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn normal_forms() {
    let o = qtangent(&["nf", "u11*u22 - q*u12*u21"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1");
    let o = qtangent(&["nf", "-E + E"]);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn worked_example_bound() {
    let o = qtangent(&[
        "coideal",
        "bound",
        "K^6*Gd(5) + (Fd(1)*K^6 - K^6)*Gd(4) + (Fd(2)*K^6*Ed(1) + K^6*Ed(3))*Gd(2) + Fd(3)*K^6",
    ]);
    assert_eq!(stdout(&o).trim(), "17");
}

#[test]
fn calc2_has_no_braiding() {
    let o = qtangent(&["verify", "calc2", "--check", "braiding"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("no braiding (exact-kernel ansatz)"));
}

#[test]
fn verify_json_is_ordered() {
    let o = qtangent(&["--json", "--jobs", "2", "verify", "all", "--check", "coideal"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["name"].as_str().unwrap()).collect();
    let want: Vec<String> = (1..=11).map(|n| format!("calc{n}")).collect();
    assert_eq!(names, want);
}

#[test]
fn cohomology_table() {
    let o = qtangent(&["cohomology", "calc5", "--two-lambda-max", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn exit_codes() {
    assert_eq!(qtangent(&["verify", "calc99"]).status.code(), Some(2));
    assert_eq!(qtangent(&["nf", "E*("]).status.code(), Some(2));
    assert_eq!(qtangent(&["nf", "E*u11"]).status.code(), Some(2));
    assert_eq!(qtangent(&["coideal", "check", "1", "E"]).status.code(), Some(1));
    assert_eq!(qtangent(&["--fixtures", "/nonexistent", "verify", "all"]).status.code(), Some(2));
}
