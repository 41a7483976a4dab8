use std::process::{Command, Output};

use serde_json::Value;

fn coxpyr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxpyr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = coxpyr(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn enumerate_lists_33_sorted_lines() {
    let out = stdout_of(&["enumerate"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 33);
    assert_eq!(lines[0], "(2,3,2,3)");
    assert_eq!(lines[32], "(4,4,4,4)");
    let json: Value = serde_json::from_str(&stdout_of(&["enumerate", "--format", "json"])).unwrap();
    let arr = json.as_array().unwrap();
    let mut sorted = arr.clone();
    sorted.sort_by_key(|v| serde_json::to_string(v).unwrap());
    assert_eq!(arr.len(), 33);
    assert_eq!(arr, &sorted);
}

#[test]
fn growth_json_carries_the_denominator() {
    let v: Value = serde_json::from_str(&stdout_of(&["growth", "2,3,2,4", "--format", "json"])).unwrap();
    assert_eq!(v["quadruple"], serde_json::json!([2, 3, 2, 4]));
    assert_eq!(v["g"], serde_json::json!([-1, 1, 0, 2, 1, 2, 1, 1]));
    // (t - 1) g
    assert_eq!(v["denominator"], serde_json::json!([1, -2, 1, -2, 1, -1, 1, 0, 1]));
    assert_eq!(v["j"], 0);
    let tau: f64 = v["tau"].as_str().unwrap().parse().unwrap();
    assert!((tau - 1.90648).abs() < 5e-5);
    let lo: f64 = v["r1_lower"].as_str().unwrap().parse().unwrap();
    let hi: f64 = v["r1_upper"].as_str().unwrap().parse().unwrap();
    assert!(lo < hi && hi - lo <= 2f64.powi(-40));
    assert_eq!(v["series"].as_array().unwrap().len(), 31);
    assert_eq!(v["numeric_check"], Value::Null);
}

#[test]
fn growth_text_shows_factored_denominator() {
    let out = stdout_of(&["growth", "2,3,2,4"]);
    assert!(out.contains("(t - 1)*(-1 + t + 2*t^3 + t^4 + 2*t^5 + t^6 + t^7)"), "{out}");
}

#[test]
fn numeric_check_flag() {
    let v: Value =
        serde_json::from_str(&stdout_of(&["growth", "2,3,2,5", "--format", "json", "--verify-perron-numeric"])).unwrap();
    assert_eq!(v["numeric_check"], Value::Bool(true));
}

#[test]
fn perron_certificate_for_an_exceptional_pyramid() {
    let v: Value = serde_json::from_str(&stdout_of(&["perron", "3,3,5,5", "--format", "json"])).unwrap();
    assert_eq!(v["j"], 2);
    assert_eq!(v["expanded"], serde_json::json!([-1, 1, 4, 1, 1, 3, 1, 2, 3, 1]));
    assert_eq!(v["support_gcd"], 1);
}

#[test]
fn volume_json_with_oracle() {
    let v: Value =
        serde_json::from_str(&stdout_of(&["volume", "2,4,2,4", "--format", "json", "--oracle-volume"])).unwrap();
    let total = v["total"].as_f64().unwrap();
    assert!((total - 0.457983).abs() < 1e-5);
    assert!((v["oracle"].as_f64().unwrap() - total).abs() < 1e-5);
    let pieces = v["pieces"].as_array().unwrap();
    assert_eq!(pieces.len(), 4);
    let sum: f64 = pieces
        .iter()
        .map(|p| p["sign"].as_f64().unwrap() * p["value"].as_f64().unwrap())
        .sum();
    assert!((sum - total).abs() < 1e-15);
    let plain: Value = serde_json::from_str(&stdout_of(&["volume", "2,4,2,4", "--format", "json"])).unwrap();
    assert!(plain.get("oracle").is_none());
}

#[test]
fn report_csv_has_33_rows() {
    let out = stdout_of(&["report", "--format", "csv"]);
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["k", "l", "m", "n", "growth_rate", "volume", "perron_j", "denominator"]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 33);
    let row = rows.iter().find(|r| &r[0] == "3" && &r[1] == "3" && &r[2] == "3" && &r[3] == "3").unwrap();
    let tau: f64 = row[4].parse().unwrap();
    let vol: f64 = row[5].parse().unwrap();
    assert!((tau - 2.41421).abs() < 5e-5);
    assert!((vol - 0.610644).abs() < 1e-5);
    assert_eq!(row[4].chars().filter(char::is_ascii_digit).count(), 10);
    let exceptional = rows.iter().filter(|r| &r[6] != "0").count();
    assert_eq!(exceptional, 4);
}

#[test]
fn report_json_matches_csv() {
    let v: Value = serde_json::from_str(&stdout_of(&["report", "--format", "json"])).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 33);
    assert_eq!(rows[0]["k"], 2);
    assert!(rows[0]["denominator"].as_str().unwrap().starts_with("(t - 1)*("));
}

#[test]
fn order_dot_and_json() {
    let dot = stdout_of(&["order"]);
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("label=\"(4,4,4,4)\\nτ=2.84547\""));
    assert_eq!(dot.matches("[label=").count(), 33);
    let v: Value = serde_json::from_str(&stdout_of(&["order", "--format", "json"])).unwrap();
    let edges = v["hasse_edges"].as_array().unwrap();
    assert_eq!(dot.matches(" -> ").count(), edges.len());
    assert_eq!(v["minimal"], serde_json::json!([0]));
    assert_eq!(v["maximal"].as_array().unwrap().len(), 2);
    // growth rate increases along every covering edge
    let els = v["elements"].as_array().unwrap();
    for e in edges {
        let (i, j) = (e[0].as_u64().unwrap() as usize, e[1].as_u64().unwrap() as usize);
        assert!(els[i]["growth_rate"].as_f64().unwrap() <= els[j]["growth_rate"].as_f64().unwrap());
    }
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let out = coxpyr(&["report", "--output", p.to_str().unwrap()]);
        assert!(out.status.success());
        assert!(out.stdout.is_empty());
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn malformed_quadruple_is_a_usage_error() {
    for bad in ["2,3,4", "a,b,c,d", "2;3;2;3", "2,3,2,3,3"] {
        let out = coxpyr(&["growth", bad]);
        assert_eq!(out.status.code(), Some(2), "{bad}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("invalid value"));
    }
}

#[test]
fn invalid_pyramid_is_a_domain_error() {
    let cases = [
        ("2,2,2,2", "k = l = 2"),
        ("2,3,2,1", "at least 2"),
        ("6,6,6,6", "outside the unit disk"),
    ];
    for (q, needle) in cases {
        let out = coxpyr(&["volume", q]);
        assert_eq!(out.status.code(), Some(1), "{q}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(needle), "{q}: {err}");
    }
}

#[test]
fn bad_configuration_is_rejected() {
    for args in [
        &["growth", "2,3,2,3", "--series-depth", "1"][..],
        &["growth", "2,3,2,3", "--root-eps", "0"],
        &["volume", "2,3,2,3", "--lobachevsky-eps", "-1"],
        &["growth", "2,3,2,3", "--format", "dot"],
    ] {
        let out = coxpyr(args);
        assert!(!out.status.success(), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn non_canonical_input_is_accepted() {
    let a: Value = serde_json::from_str(&stdout_of(&["growth", "3,2,3,2", "--format", "json"])).unwrap();
    let b: Value = serde_json::from_str(&stdout_of(&["growth", "2,3,2,3", "--format", "json"])).unwrap();
    assert_eq!(a["g"], b["g"]);
    assert_eq!(a["tau"], b["tau"]);
}
