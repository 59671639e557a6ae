use std::process::{Command, Output};

use serde_json::Value;

fn quartic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quartic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, String, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = quartic(&all);
    let text = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (v, text, out.status.code().unwrap())
}

fn reserialize(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap();
    s.push('\n');
    s
}

#[test]
fn classify_135() {
    let (v, text, code) = json(&["classify", "--k", "135"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "quartic-report/1");
    assert_eq!(v["results"]["branch"], 4);
    assert_eq!(v["results"]["status"], "Classified");
    let pts: Vec<&str> = v["results"]["points"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p.as_str().unwrap())
        .collect();
    assert_eq!(
        pts,
        [
            "(0 : 1 : 0)",
            "(1 : 0 : 0)",
            "(3 : -6 : 1)",
            "(3 : 3 : 1)",
            "(6 : -3 : -1)"
        ]
    );
    assert_eq!(reserialize(&v), text);
}

#[test]
fn classify_without_rank_fact_exits_nonzero() {
    let out = quartic(&["classify", "--k", "7"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("NeedsRankFact"));
}

#[test]
fn classify_with_rank_file() {
    let dir = std::env::temp_dir().join(format!("quartic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ranks.tsv");
    std::fs::write(&path, "# k\ti\trank\tsource\n-1\t2\t0\ttest\n").unwrap();
    let (v, _, code) = json(&[
        "classify",
        "--k",
        "-1",
        "--ranks",
        path.to_str().unwrap(),
        "--height",
        "30",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["points"].as_array().unwrap().len(), 5);
    std::fs::write(&path, "-1\t4\t0\tbad\n").unwrap();
    let out = quartic(&["classify", "--k", "-1", "--ranks", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}

#[test]
fn errors_and_usage() {
    assert_eq!(quartic(&["classify", "--k", "0"]).status.code(), Some(2));
    assert_eq!(quartic(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(quartic(&["case", "--n", "7"]).status.code(), Some(2));
    let out = quartic(&["ffcheck", "--k", "1", "--pmax", "3"]);
    assert!(out.status.success());
}

#[test]
fn case_reports_round_trip() {
    for n in ["1", "2", "3", "6"] {
        let (v, text, code) = json(&["case", "--n", n]);
        assert_eq!(code, 0, "case {n}");
        assert_eq!(reserialize(&v), text, "case {n}");
    }
    let (v, _, _) = json(&["case", "--n", "3"]);
    let ks: Vec<&str> = v["results"][0]["integral_k_set"]
        .as_array()
        .unwrap()
        .iter()
        .map(|k| k.as_str().unwrap())
        .collect();
    assert_eq!(ks, ["-56000", "-72", "-2", "0", "2058"]);
}

#[test]
fn case5_report() {
    let (v, _, code) = json(&["case", "--n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["integral_k_set"], serde_json::json!(["864"]));
    let kinds: Vec<&str> = v["certificates"][0]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["kind"].as_str().unwrap())
        .collect();
    assert!(kinds.contains(&"gcd_bound") && kinds.contains(&"thue_box"));
}

#[test]
fn sweep_counts_rank_zero_values() {
    let (v, text, code) = json(&["sweep", "--from", "-100", "--to", "100", "--height", "30"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["summary"]["classified"], 99);
    assert_eq!(v["results"]["summary"]["total"], 200);
    assert_eq!(reserialize(&v), text);
}

#[test]
fn small_commands() {
    let (v, text, code) = json(&["search", "--k", "1", "--height", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["points"].as_array().unwrap().len(), 8);
    assert_eq!(reserialize(&v), text);

    let (v, _, _) = json(&["torsion", "--curve", "e2", "--k", "-1"]);
    assert_eq!(v["results"]["structure"], "Z/5Z");

    let (v, _, code) = json(&[
        "localsolve",
        "--c",
        "9",
        "--e",
        "4",
        "--f",
        "1,12,42,56,35,0,-14,-4,1",
        "--p",
        "3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["status"], "Insoluble");

    let (v, _, code) = json(&["ffcheck", "--k", "7", "--pmax", "50"]);
    assert_eq!(code, 0);
    assert!(v["results"]["traces"]
        .as_array()
        .unwrap()
        .iter()
        .all(|t| t["identity_holds"] == true));

    let (v, _, code) = json(&["param", "--family", "d14", "--arg", "-2,-4"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["k"], "59049/8");
    let (v, _, _) = json(&["param", "--family", "c12", "--arg", "3"]);
    assert_eq!(v["results"]["k"], "6561/32");
}
