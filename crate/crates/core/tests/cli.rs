use std::process::{Command, Output};

fn supercong(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supercong")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn theorems_verify_as_json() {
    let o = supercong(&["verify", "--claims", "thm1,thm2", "--pmin", "3", "--pmax", "199", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v.as_array().unwrap();
    // thm1 starts at 5, thm2 at 3
    assert_eq!(rows.len(), 44 + 45);
    for r in rows {
        assert_eq!(r["holds"], true);
        for key in ["claim", "lhs", "rhs", "modulus", "path"] {
            assert!(r[key].is_string(), "{key}");
        }
        assert!(r["p"].is_u64());
    }
    assert_eq!(rows[0]["claim"], "thm1");
    assert_eq!(rows[0]["path"], "both");
    assert_eq!(rows[43]["path"], "fast");
}

#[test]
fn unknown_claim_is_a_usage_error() {
    let o = supercong(&["verify", "--claims", "nosuch"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("nosuch"));
}

#[test]
fn bad_arguments_are_usage_errors() {
    assert_eq!(supercong(&["verify", "--pmax", "ten"]).status.code(), Some(3));
    assert_eq!(supercong(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(supercong(&["verify", "--claims", "thm1", "--pmin", "50", "--pmax", "40"]).status.code(), Some(3));
    assert_eq!(supercong(&["verify", "--format", "yaml"]).status.code(), Some(3));
    assert_eq!(supercong(&["--help"]).status.code(), Some(0));
}

#[test]
fn list_prints_the_registry() {
    let o = supercong(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().count() >= 29);
    assert!(text.lines().all(|l| l.split_whitespace().count() >= 4));
    let o = supercong(&["list", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.as_array().unwrap().iter().all(|c| !c["source"].as_str().unwrap().is_empty()));
}

#[test]
fn csv_goes_to_the_out_file() {
    let dir = std::env::temp_dir().join(format!("supercong-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.csv");
    let o = supercong(&[
        "verify", "--claims", "jacobsthal,lemma27-morley", "--pmax", "13", "--format", "csv", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("claim,p,holds,lhs,rhs,modulus,diff_valuation,path,instance"));
    assert!(lines.any(|l| l.starts_with("lemma27-morley,13,true,")));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn telescope_and_identity_subcommands() {
    let o = supercong(&["telescope", "--grid", "15", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2 * 16);
    let o = supercong(&["identity", "--nmax", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("wz256-boundary") && text.contains("wz1024-boundary"));
    assert!(text.contains("24 outcomes, 0 counterexamples"));
}

#[test]
fn thread_count_does_not_change_output() {
    let args = |t: &'static str| ["verify", "--claims", "all", "--pmax", "41", "--nmax", "20", "--grid", "10", "--format", "json", "--threads", t];
    let one = supercong(&args("1"));
    let eight = supercong(&args("8"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, eight.stdout);
}
