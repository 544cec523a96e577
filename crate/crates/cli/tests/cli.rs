use std::process::{Command, Output};

fn hecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke"))
        .args(args)
        .env_remove("HECKE_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn raw_trace_at_bk_parameters() {
    let out = hecke(&[
        "trace", "--kind", "raw", "--m", "2", "--n", "2", "--expr", "J1*J2", "--bind", "z=0,y1=1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn normalized_trace_of_t() {
    let out = hecke(&[
        "trace",
        "--kind",
        "normalized",
        "--m",
        "2",
        "--n",
        "1",
        "--expr",
        "t",
    ]);
    assert_eq!(stdout(&out), "y1\n");
}

#[test]
fn normalized_table_has_one_row_per_monomial() {
    let out = hecke(&["table", "--kind", "normalized", "--m", "2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "a1,a2,perm,value");
    assert_eq!(lines.len(), 9);
    assert!(lines.contains(&"0,0,1 2,1"));
}

#[test]
fn table_json_and_text_agree_in_size() {
    let json = hecke(&[
        "table", "--kind", "bk", "--m", "3", "--n", "2", "--output", "json",
    ]);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 18);
    let text = hecke(&[
        "table", "--kind", "bk", "--m", "3", "--n", "2", "--output", "text",
    ]);
    assert_eq!(stdout(&text).lines().count(), 18);
}

#[test]
fn normalize_prints_canonical_text() {
    let out = hecke(&["normalize", "--m", "2", "--n", "2", "--expr", "s1*s1 - 1"]);
    assert_eq!(stdout(&out), "0\n");
    let out = hecke(&[
        "normalize",
        "--m",
        "2",
        "--n",
        "2",
        "--expr",
        "s1*t*s1 + s1",
    ]);
    assert_eq!(stdout(&out), "J2\n");
}

#[test]
fn exit_codes() {
    assert_eq!(
        hecke(&["normalize", "--m", "2", "--n", "2", "--expr", "s1 +"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hecke(&["normalize", "--m", "2", "--n", "2", "--expr", "s2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hecke(&["normalize", "--m", "0", "--n", "2", "--expr", "t"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hecke(&["trace", "--m", "2", "--n", "2", "--expr", "t", "--bind", "y2=1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hecke(&["verify", "--suite", "bogus", "--m", "2", "--n", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(hecke(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        hecke(&["verify", "--suite", "relations", "--m", "2", "--n", "3"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        hecke(&["verify", "--suite", "Tr-symmetry", "--m", "2", "--n", "3"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn parse_errors_report_line_and_column() {
    let out = hecke(&["normalize", "--m", "2", "--n", "2", "--expr", "t*(s1"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("1:6"), "{err}");
}

#[test]
fn verify_report_schema() {
    let out = hecke(&[
        "verify",
        "--suite",
        "relations",
        "--m",
        "2",
        "--n",
        "3",
        "--seed",
        "5",
    ]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["suite"], "relations");
    assert_eq!(report["seed"], 5);
    assert_eq!(report["checks"], 6);
    assert_eq!(report["violations"], serde_json::json!([]));
}

#[test]
fn seed_environment_overrides_flag() {
    let out = Command::new(env!("CARGO_BIN_EXE_hecke"))
        .args([
            "verify",
            "--suite",
            "dimension",
            "--m",
            "2",
            "--n",
            "2",
            "--seed",
            "5",
        ])
        .env("HECKE_SEED", "11")
        .output()
        .unwrap();
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["seed"], 11);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let runs = [
        vec![
            "verify",
            "--suite",
            "Tr-symmetry",
            "--m",
            "2",
            "--n",
            "3",
            "--seed",
            "3",
        ],
        vec!["table", "--kind", "raw", "--m", "2", "--n", "3"],
        vec![
            "normalize",
            "--m",
            "3",
            "--n",
            "3",
            "--expr",
            "(J3 + z*t)^3*s2*s1",
        ],
    ];
    for args in runs {
        let a = hecke(&args);
        let b = hecke(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
