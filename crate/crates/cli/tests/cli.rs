use std::io::Write;
use std::process::{Command, Output, Stdio};

fn ybk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ybk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ybk_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ybk"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_builtin_and_catalog() {
    let o = ybk(&["verify", "catalog:dihedral3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("YBE: yes"));
    let o = ybk(&["verify", "shift:3"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn failing_property_exits_one() {
    // (1,1)->(1,2), (1,2)->(2,2), (2,1)->(2,1), (2,2)->(1,1) is a bijection
    // but not a solution.
    let doc = r#"{"format_version":"1","size":2,"table":[[1,2],[2,2],[2,1],[1,1]]}"#;
    let o = ybk_stdin(&["verify", "-"], doc);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("YBE: no"));
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(ybk(&["verify", "nosuch:2"]).status.code(), Some(2));
    assert_eq!(ybk(&["verify", "catalog:missing"]).status.code(), Some(2));
    assert_eq!(ybk(&["level"]).status.code(), Some(2));
    let bad = r#"{"format_version":"1","size":2,"table":[[1,1],[1,1],[1,2],[2,2]]}"#;
    let o = ybk_stdin(&["verify", "-"], bad);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a bijection"));
    let o = ybk_stdin(&["verify", "-"], "{\n \"size\": ");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn every_catalog_entry_matches_its_expected_profile() {
    let o = ybk(&["catalog", "--json"]);
    let names: Vec<String> = serde_json::from_slice(&o.stdout).unwrap();
    assert!(names.len() >= 10);
    for name in names {
        let o = ybk(&["props", &format!("catalog:{name}")]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        assert!(stdout(&o).contains("expected profile: matches"), "{name}");
    }
}

#[test]
fn enumerate_two_points() {
    let o = ybk(&["enumerate", "--size", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("5 YBE solutions among 24 bijections"));
    assert!(out.contains("5 classes under yb-iso"));
    let o = ybk(&["enumerate", "--size", "2", "--relation", "conjugacy"]);
    assert!(stdout(&o).contains("3 classes under conjugacy"));
}

#[test]
fn periodicity() {
    assert_eq!(
        stdout(&ybk(&["periodic", "identity:2"])).trim(),
        "Periodic(1)"
    );
    assert_eq!(
        stdout(&ybk(&["periodic", "flip:2", "--bound", "3"])).trim(),
        "AperiodicUpTo(3)"
    );
}

#[test]
fn semigroup_reports() {
    let o = ybk(&[
        "semigroup",
        "dihedral:3",
        "--presentation",
        "--max-len",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("growth: 1, 3, 5"));
    assert!(out.contains("e1e2=e2e3=e3e1"));
    let o = ybk(&["semigroup", "dihedral:3", "--cancel", "--max-len", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let o = ybk(&["semigroup", "flip:3", "--cancel", "--max-len", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("growth: 1, 3, 6, 10"));
}

#[test]
fn homology_output() {
    let o = ybk(&["homology", "dihedral:3", "--degree", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["homology"]["free_rank"], 1);
    assert_eq!(v["beta_orbits"], serde_json::json!([[1, 2, 3]]));
    let o = ybk(&["homology", "dihedral:3", "--degree", "2", "--coeff", "z/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        ybk(&["homology", "flip:2", "--degree", "1", "--coeff", "z/1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn kgraph_normal_forms() {
    let o = ybk(&[
        "kgraph",
        "normalize",
        "dihedral:3",
        "--k",
        "3",
        "--word",
        "3:1 1:2 2:1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let word = stdout(&o);
    let again = ybk(&[
        "kgraph",
        "normalize",
        "dihedral:3",
        "--k",
        "3",
        "--word",
        word.trim(),
    ]);
    assert_eq!(stdout(&again), word);
    assert_eq!(
        ybk(&["kgraph", "verify", "catalog:theta_sum_mod2"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        &["props", "catalog:dihedral4", "--json"][..],
        &["level", "shift:2", "--n", "2"][..],
        &["enumerate", "--size", "2", "--json"][..],
    ] {
        let a = ybk(args);
        let b = ybk(args);
        assert_eq!(a.stdout, b.stdout);
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn emitted_documents_read_back() {
    let doc = stdout(&ybk(&["builtin", "dihedral", "--size", "3"]));
    let o = ybk_stdin(&["verify", "-"], &doc);
    assert_eq!(o.status.code(), Some(0));
    let level = stdout(&ybk(&["level", "shift:2", "--n", "2"]));
    let o = ybk_stdin(&["verify", "-"], &level);
    assert_eq!(o.status.code(), Some(0));
}
