//! Command-line contract: outputs, formats and exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn totdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_totdom"))
        .args(args)
        .env_remove("TOTDOM_CAP")
        .output()
        .expect("run totdom")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_str(&stdout(out)).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn poly_examples() {
    let v = json(&totdom(&["poly", "complete:3"]));
    assert_eq!(v["coefficients"], serde_json::json!([0, 0, 3, 1]));
    assert_eq!(v["gamma_t"], 2);
    assert_eq!(v["total"], 4);
    let v = json(&totdom(&["poly", "friendship:2"]));
    assert_eq!(v["coefficients"], serde_json::json!([0, 0, 4, 6, 5, 1]));
    assert_eq!(v["unimodal"], true);

    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.txt", "# C_4\n4\n0 1\n1 2\n2 3\n3 0\n");
    let v = json(&totdom(&["poly", &c4]));
    assert_eq!(v["coefficients"], serde_json::json!([0, 0, 4, 4, 1]));
    let table = stdout(&totdom(&["poly", &c4, "--format", "table"]));
    assert!(table.contains("gamma_t   2"));
    assert!(table.contains("total     9"));
}

#[test]
fn big_coefficients_stay_exact() {
    let v = stdout(&totdom(&["poly", "friendship:40"]));
    // C(80, 40)
    assert!(v.contains("107507208733336176461620"));
}

#[test]
fn isolated_vertex_gives_zero_polynomial() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", "3\n0 1\n");
    let v = json(&totdom(&["poly", &g]));
    assert_eq!(v["coefficients"], serde_json::json!([0, 0, 0, 0]));
    assert_eq!(v["gamma_t"], serde_json::Value::Null);
    let out = totdom(&["roots", &g]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_errors_are_usage_errors_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "3\n0 1\n1 7\n");
    let out = totdom(&["poly", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert_eq!(totdom(&["poly", "wheel:4"]).status.code(), Some(2));
    assert_eq!(totdom(&["poly", "kmn:4"]).status.code(), Some(2));
    assert_eq!(totdom(&["sweep", "wheel", "1..3"]).status.code(), Some(2));
}

#[test]
fn cap_is_a_resource_limit() {
    let dir = tempfile::tempdir().unwrap();
    let edges: String = (1..30).map(|v| format!("{} {}\n", v - 1, v)).collect();
    let path = write(dir.path(), "p30.txt", &format!("30\n{edges}"));
    assert_eq!(totdom(&["poly", &path]).status.code(), Some(3));
    let small = write(dir.path(), "p5.txt", "5\n0 1\n1 2\n2 3\n3 4\n");
    assert_eq!(
        totdom(&["poly", &small, "--cap", "4"]).status.code(),
        Some(3)
    );
    // flag beats environment
    let out = Command::new(env!("CARGO_BIN_EXE_totdom"))
        .args(["poly", &small, "--cap", "8"])
        .env("TOTDOM_CAP", "4")
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = Command::new(env!("CARGO_BIN_EXE_totdom"))
        .args(["poly", &small])
        .env("TOTDOM_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    // closed forms need no enumeration
    assert!(totdom(&["poly", "complete:40"]).status.success());
}

#[test]
fn roots_examples() {
    let v = json(&totdom(&["roots", "complete:3"]));
    assert_eq!(v["zero_multiplicity"], 2);
    assert_eq!(v["roots"].as_array().unwrap().len(), 1);
    assert_eq!(v["roots"][0]["re"].as_f64().unwrap(), -3.0);

    let csv = stdout(&totdom(&["roots", "kmn:2,2", "--format", "csv"]));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "param,re,im,multiplicity,residual");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].ends_with(",2,0.0000000000000000e0"));
    assert!(lines[2].contains("-2.0000000000000000e0"));

    let v = json(&totdom(&["roots", "book:5", "--check-disc"]));
    assert_eq!(v["disc_check"]["status"], "pass");
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        &["roots", "friendship:9"][..],
        &["sweep", "kmn", "1..6"][..],
        &["poly", "book:7", "--format", "table"][..],
    ] {
        assert_eq!(totdom(args).stdout, totdom(args).stdout);
    }
}

#[test]
fn sweep_writes_csv_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("k.csv");
    let svg = dir.path().join("k.svg");
    let out = totdom(&[
        "sweep",
        "complete",
        "1..6",
        "--out",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&csv).unwrap();
    // K_1 has no total dominating set; K_2 .. K_6 contribute their roots.
    assert!(!text.lines().any(|l| l.starts_with("1,")));
    assert_eq!(text.lines().filter(|l| l.starts_with("4,")).count(), 3);
    let doc = std::fs::read_to_string(&svg).unwrap();
    let parsed = roxmltree::Document::parse(&doc).unwrap();
    assert_eq!(parsed.root_element().tag_name().name(), "svg");
    assert_eq!(
        parsed
            .descendants()
            .filter(|n| n.has_tag_name("circle"))
            .count(),
        text.lines().count() - 1
    );
}

#[test]
fn check_campaigns() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "c.json",
        r#"{"seed": 42, "corpus": {"max_order": 8, "per_cell": 5},
            "checks": [{"check": "monotone_counts"}, {"check": "disc_bound"}, {"check": "kmn_circle", "max_sum": 10}]}"#,
    );
    let a = totdom(&["check", &cfg]);
    let b = totdom(&["check", &cfg]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let lines = stdout(&a);
    for line in lines.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["check_id"].is_string());
    }
    let other = totdom(&["check", &cfg, "--seed", "5"]);
    assert_ne!(other.stdout, a.stdout);

    let unknown = write(
        dir.path(),
        "u.json",
        r#"{"checks": [{"check": "nonsense"}]}"#,
    );
    assert_eq!(totdom(&["check", &unknown]).status.code(), Some(2));

    let empty = write(dir.path(), "e.json", "{}");
    let out = totdom(&["check", &empty]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());

    let book = write(
        dir.path(),
        "b.json",
        r#"{"checks": [{"check": "bn_no_nonzero_real", "from": 2, "to": 3}]}"#,
    );
    assert_eq!(totdom(&["check", &book]).status.code(), Some(1));

    let printed = stdout(&totdom(&["check", "--print-default"]));
    let v: serde_json::Value = serde_json::from_str(&printed).unwrap();
    assert_eq!(v["checks"].as_array().unwrap().len(), 12);
}

#[test]
fn default_campaign_fails_only_on_book_graphs() {
    let out = totdom(&["check"]);
    assert_eq!(out.status.code(), Some(1));
    let mut theorem_failures = std::collections::BTreeSet::new();
    for line in stdout(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        if v["level"] == "theorem" && v["status"] == "fail" {
            theorem_failures.insert(v["check_id"].as_str().unwrap().to_string());
        }
        assert_ne!(v["status"], "unconverged");
    }
    assert_eq!(
        theorem_failures.into_iter().collect::<Vec<_>>(),
        ["bn_no_nonzero_real", "book_formula_published"]
    );
}
