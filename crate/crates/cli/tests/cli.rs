use std::process::{Command, Output};

use quadrupole_cli::record::{parse_csv, parse_json, OutputRecord};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadrupole"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn csv_rows(args: &[&str]) -> Vec<OutputRecord> {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    parse_csv(&String::from_utf8(out.stdout).unwrap()).unwrap()
}

fn num(r: &OutputRecord, key: &str) -> f64 {
    r.number(key).unwrap_or_else(|| panic!("missing numeric {key}"))
}

#[test]
fn char_free_rotor() {
    let rows = csv_rows(&["char", "--class", "even-pi", "--order", "0", "--q", "0"]);
    assert_eq!(rows.len(), 1);
    assert!(num(&rows[0], "value").abs() < 1e-12);
}

#[test]
fn char_from_strength() {
    let rows = csv_rows(&["char", "--class", "odd-2pi", "--order", "1", "--xi", "0.2270115834"]);
    assert!(num(&rows[0], "value").abs() < 1e-8);
    assert!((num(&rows[0], "q") - 0.9080463336).abs() < 1e-12);
}

#[test]
fn char_with_label_and_oracle() {
    let rows = csv_rows(&["char", "--class", "a0", "--q", "5", "--oracle"]);
    let r = &rows[0];
    assert!((num(r, "value") - num(r, "oracle_value")).abs() < 1e-9);
    assert!(num(r, "discrepancy") < 1e-9);
}

#[test]
fn table_rows() {
    let rows = csv_rows(&["table", "--max-pairs", "5", "--format", "csv"]);
    assert_eq!(rows.len(), 10);
    let keys: Vec<&str> = rows[0].keys().collect();
    assert_eq!(keys, ["eigenvalue_label", "class", "order", "q_c", "xi_c", "residual"]);
    assert_eq!(num(&rows[0], "xi_c"), 0.0);
    assert!((num(&rows[1], "xi_c") - 0.2270115834).abs() < 1e-9);

    assert_eq!(csv_rows(&["table", "--max-pairs", "1"]).len(), 2);
    let six = csv_rows(&["table", "--max-pairs", "6"]);
    assert_eq!(six.len(), 12);
    assert!(six[10..].iter().all(|r| num(r, "xi_c") > 17.35709827));
}

#[test]
fn default_table_is_ten_rows() {
    assert_eq!(csv_rows(&["table"]).len(), 10);
}

#[test]
fn channels_counts() {
    for (xi, expected) in [("0", 0.0), ("1.0", 2.0), ("0.3", 2.0)] {
        let rows = csv_rows(&["channels", "--xi", xi]);
        assert_eq!(rows.len(), 25, "max_order 12 gives a0..a12 and b1..b12");
        assert!(rows.iter().all(|r| num(r, "open_channels") == expected), "xi={xi}");
        let open = rows
            .iter()
            .filter(|r| r.get("regime").unwrap().render() == "unbounded_below")
            .count();
        assert_eq!(open as f64, expected);
    }
}

#[test]
fn gap_rows() {
    let rows = csv_rows(&["gap", "--m", "0", "--q", "0.0001"]);
    assert!((num(&rows[0], "gap") - 1.0).abs() < 1e-3);

    let rows = csv_rows(&["gap", "--m", "1", "--q", "10,20,30,40"]);
    assert_eq!(rows.len(), 4);
    let gaps: Vec<f64> = rows.iter().map(|r| num(r, "gap")).collect();
    assert!(gaps.windows(2).all(|w| w[1] < w[0]), "{gaps:?}");
    for (r, g) in rows.iter().zip(&gaps) {
        assert!((num(r, "log_gap") - g.ln()).abs() < 1e-9);
    }

    // at the a_4 critical point the gap in q sits on the 1e-5 scale of
    // the reference xi spacing (3.7e-6 in xi is 1.5e-5 in q)
    let rows = csv_rows(&["gap", "--m", "4", "--q", "69.42837828"]);
    let g = num(&rows[0], "gap");
    assert!(g > 1e-6 && g < 1e-4, "{g}");
}

#[test]
fn json_matches_csv() {
    let csv_out = run(&["table", "--max-pairs", "2"]);
    let json_out = run(&["table", "--max-pairs", "2", "--format", "json"]);
    let from_csv = parse_csv(&String::from_utf8(csv_out.stdout).unwrap()).unwrap();
    let from_json = parse_json(&String::from_utf8(json_out.stdout).unwrap()).unwrap();
    assert_eq!(from_csv, from_json);
}

#[test]
fn writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    let out = run(&["table", "--max-pairs", "1", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let rows = parse_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(rows.len(), 2);
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["char", "--class", "a0", "--q", "1", "--xi", "0.25"],
        &["char", "--class", "a0"],
        &["char", "--class", "even-pi", "--q", "1"],
        &["char", "--class", "odd-2pi", "--order", "0", "--q", "1"],
        &["char", "--class", "a3", "--order", "2", "--q", "1"],
        &["char", "--class", "a0", "--q", "-1"],
        &["char", "--class", "nonsense", "--order", "1", "--q", "1"],
        &["channels", "--xi", "-0.5"],
        &["gap", "--m", "1", "--q", "0"],
        &["table", "--max-pairs", "0"],
        &["table", "--format", "xml"],
        &["frobnicate"],
    ];
    for args in cases {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn solver_failure_exits_1() {
    // the starting truncation for q = 1e7 already exceeds the cap
    let out = run(&["char", "--class", "a0", "--q", "1e7"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("did not converge"));
}

#[test]
fn unwritable_output_exits_1() {
    let out = run(&["table", "--max-pairs", "1", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(out.status.code(), Some(1));
}
