use std::process::{Command, Output};

fn wvsim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wvsim"))
        .args(args)
        .output()
        .expect("run wvsim")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data_rows(text: &str) -> Vec<&str> {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .collect()
}

#[test]
fn weak_value_examples() {
    let o = wvsim(&[
        "weak-value",
        "--pre",
        "-1:1,0:1",
        "--post",
        "-1:1,0:-2",
        "--obs",
        "diag",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1.000000000000 + 0.000000000000i\n");

    let o = wvsim(&["weak-value", "--pre", "1:1", "--post", "1:1"]);
    assert_eq!(stdout(&o), "1.000000000000 + 0.000000000000i\n");

    let o = wvsim(&[
        "weak-value",
        "--pre",
        "0:1,1:1",
        "--post",
        "0:1,1:0+1i",
        "--obs",
        "proj:1",
    ]);
    assert_eq!(stdout(&o), "0.500000000000 - 0.500000000000i\n");

    let o = wvsim(&[
        "weak-value",
        "--pre",
        "-1:1,1:1",
        "--post",
        "-1:1,1:1",
        "--obs",
        "sigmaz",
    ]);
    assert_eq!(stdout(&o), "0.000000000000 + 0.000000000000i\n");
}

#[test]
fn exit_codes() {
    assert_eq!(
        wvsim(&["weak-value", "--pre", "0:1", "--post", "1:1"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        wvsim(&["weak-value", "--pre", "0:q", "--post", "1:1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        wvsim(&["weak-value", "--pre", "0:1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        wvsim(&["amplify", "--alpha-tan", ""]).status.code(),
        Some(2)
    );
    assert_eq!(
        wvsim(&["amplify", "--alpha-tan", "-1"]).status.code(),
        Some(2)
    );
    assert_eq!(wvsim(&["compare", "--eps", "-0.1"]).status.code(), Some(2));
    assert_eq!(
        wvsim(&["compare", "--eps", "0.1", "--eps-grid", "1:2:4:lin"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        wvsim(&["compare", "--format", "xml"]).status.code(),
        Some(2)
    );
    assert_eq!(wvsim(&["bogus"]).status.code(), Some(2));
}

#[test]
fn compare_layout() {
    let o = wvsim(&["compare"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text
        .lines()
        .any(|l| l == wvsim_cli::commands::COMPARE_HEADER));
    assert_eq!(data_rows(&text).len(), 8);
    assert_eq!(text.lines().filter(|l| l.starts_with("# fit ")).count(), 3);
    // Comments only before the header and after the data.
    let lines: Vec<&str> = text.lines().collect();
    let header = lines.iter().position(|l| !l.starts_with('#')).unwrap();
    let last_data = lines.iter().rposition(|l| !l.starts_with('#')).unwrap();
    assert!(lines[header..=last_data]
        .iter()
        .skip(1)
        .all(|l| !l.starts_with('#')));
    assert!(!text.contains('\r'));

    let grid = wvsim(&["compare", "--eps-grid", "1e-3:1e-2:8:log"]);
    assert_eq!(data_rows(&stdout(&grid)), data_rows(&text));

    let single = stdout(&wvsim(&["compare", "--eps", "0.01"]));
    assert_eq!(data_rows(&single).len(), 1);
    assert!(!single.contains("# fit"));
}

#[test]
fn amplify_layout() {
    let text = stdout(&wvsim(&[
        "amplify",
        "--alpha-tan",
        "1,10,100",
        "--eps",
        "1e-4",
    ]));
    assert!(text
        .lines()
        .any(|l| l == wvsim_cli::commands::AMPLIFY_HEADER));
    let rows = data_rows(&text);
    assert_eq!(rows.len(), 3);
    for (row, t) in rows.iter().zip([1.0, 10.0, 100.0]) {
        let cols: Vec<&str> = row.split(',').collect();
        let shift: f64 = cols[1].parse().unwrap();
        assert!((shift / t - 1.0).abs() < 0.02);
        assert_eq!(cols[3], "true");
    }
    let strong = stdout(&wvsim(&["amplify", "--alpha-tan", "100", "--eps", "0.1"]));
    assert!(data_rows(&strong)[0].ends_with(",false"));
}

#[test]
fn config_file_and_output_path() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    std::fs::write(
        &cfg,
        r#"{"eps-grid": "1e-3:1e-2:4:log", "g": 2.0, "format": "csv"}"#,
    )
    .unwrap();
    let out = dir.path().join("rows.csv");
    let o = wvsim(&[
        "compare",
        "--config",
        cfg.to_str().unwrap(),
        "--g",
        "1",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("# g=1.00000000000e0"));
    assert_eq!(data_rows(&text).len(), 4);

    std::fs::write(&cfg, r#"{"unknown": 1}"#).unwrap();
    assert_eq!(
        wvsim(&["compare", "--config", cfg.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        wvsim(&["compare", "--config", "/nonexistent/x.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn pretty_format() {
    let text = stdout(&wvsim(&["compare", "--format", "pretty", "--eps", "0.01"]));
    assert!(text.contains("d_weak_vs_eigen"));
    assert!(!text.contains(','));
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["compare"][..],
        &["amplify", "--alpha-tan", "1,10,100"][..],
        &["weak-value", "--pre", "-1:1,0:1", "--post", "-1:1,0:-2"][..],
    ] {
        let a = wvsim(args);
        let b = wvsim(args);
        assert_eq!(a.stdout, b.stdout);
    }
}
