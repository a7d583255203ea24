use std::process::{Command, Output};

fn qlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qlab"))
        .args(args)
        .output()
        .expect("qlab runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_prints_exponent_and_coefficient() {
    let o = qlab(&["expand", "--series", "S(1,1)", "--order", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines, ["0 1", "1 0", "2 1", "3 1", "4 2", "5 1", "6 2"]);
}

#[test]
fn expand_json() {
    let o = qlab(&["expand", "--series", "KR1", "--order", "4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, serde_json::json!(["1", "1", "1", "2", "2"]));
    let o = qlab(&["--sequential", "expand", "--series", "KR1", "--order", "4", "--json"]);
    assert_eq!(serde_json::from_str::<serde_json::Value>(&stdout(&o)).unwrap(), v);
}

#[test]
fn verify_json_schema() {
    let o = qlab(&["verify", "--id", "kr1", "--order", "50", "--json", "--no-timing"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["id"], "kr1");
    assert_eq!(v["requested_order"], 50);
    assert_eq!(v["agreement_order"], 50);
    assert!(v["first_mismatch"].is_null());
    assert_eq!(v["elapsed_ms"], 0);
}

#[test]
fn verify_reports_a_conjecture_mismatch() {
    let o = qlab(&["verify", "--id", "hick2", "--order", "20", "--json", "--no-timing"]);
    assert_eq!(o.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["first_mismatch"]["exponent"], 0);
}

#[test]
fn verify_all_proved_is_clean() {
    let o = qlab(&["verify-all", "--filter", "proved", "--order", "40", "--no-timing"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = qlab(&["verify-all", "--order", "40", "--json", "--no-timing"]);
    assert_eq!(o.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.as_array().unwrap().len() >= 28);
}

#[test]
fn usage_errors_exit_4() {
    for args in [
        &["bogus"][..],
        &["verify", "--id", "no_such_entry"],
        &["expand", "--series", "S(1", "--order", "3"],
        &["partitions", "--variant", "4,4", "--n", "3"],
        &["verify-all", "--filter", "maybe", "--order", "5"],
        &["expand", "--series", "KR1"],
    ] {
        let o = qlab(args);
        assert_eq!(o.status.code(), Some(4), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(qlab(&["--help"]).status.code(), Some(0));
}

#[test]
fn reduce_prints_a_certified_combination() {
    let o = qlab(&["reduce", "--a", "3", "--b", "7", "--order", "60"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("S(3,7) after"));
    assert!(out.contains("certificate: agrees through q^60"));
}

#[test]
fn partitions_listing() {
    let o = qlab(&["partitions", "--variant", "0,-1", "--n", "2", "--list"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2\n1 + 1\n2\n");
}

#[test]
fn reflect_reports_stabilization() {
    let o = qlab(&["reflect", "--family", "F", "--residue", "0", "--M", "3", "--order", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("0 1\n"));
    assert!(out.contains("stabilization order (M vs M+1):"));
}

#[test]
fn list_shows_every_entry() {
    let o = qlab(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("kr1 ")));
    assert!(out.lines().count() >= 28);
}
