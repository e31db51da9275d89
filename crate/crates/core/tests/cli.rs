use std::process::{Command, Output};

use serde_json::Value;

fn hurwitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(args)
        .env_remove("HURWITZ_CACHE")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn check() {
    let out = hurwitz(&["check", "[2,2,1],[2,3],[2,3]"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["genus"], 0);
    assert_eq!(v["zieve"], "applicable");
    assert_eq!(hurwitz(&["check", "[3]"]).status.code(), Some(1));
    assert_eq!(hurwitz(&["check", "[2,2,x]"]).status.code(), Some(2));
    let pretty = hurwitz(&["check", "[3,3],[3,3],[3,3]", "--pretty"]);
    assert!(String::from_utf8(pretty.stdout).unwrap().contains("gcd_obstruction"));
}

#[test]
fn count() {
    let weak = |s: &str| json(&hurwitz(&["count", s]))["count"].as_u64().unwrap();
    assert_eq!(weak("[2,2,2,2,1],[2,7],[2,7]"), 5);
    assert_eq!(weak("[2,2,2,2,1],[9],[9]"), 10);
    let strong = json(&hurwitz(&["count", "[2,1],[2,1],[3]", "--mode", "strong", "--classes"]));
    assert_eq!(strong["count"], 1);
    assert_eq!(strong["tuple_count"], 6);
    assert_eq!(strong["frobenius_check"], "pass");
    assert_eq!(strong["classes"].as_array().unwrap().len(), 1);
    assert_eq!(hurwitz(&["count", "[2,2,1],[5],[5]", "--genus", "0"]).status.code(), Some(1));
    assert_eq!(hurwitz(&["count", "[2,2,1],[5],[5]", "--genus", "1"]).status.code(), Some(0));
}

#[test]
fn cache_never_changes_counts() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("counts.jsonl");
    let cache = cache.to_str().unwrap();
    for datum in ["[2,2,2,2,1],[7,2],[7,2]", "[2,2,1],[5],[5]", "[3,3,1],[5,2],[4,3]", "[2,2,2,1],[7],[4,3]"] {
        for mode in ["weak", "strong"] {
            let plain = hurwitz(&["count", datum, "--mode", mode]).stdout;
            let cold = hurwitz(&["count", datum, "--mode", mode, "--cache", cache]).stdout;
            let warm = hurwitz(&["count", datum, "--mode", mode, "--cache", cache]).stdout;
            assert_eq!(plain, cold, "{datum} {mode}");
            assert_eq!(plain, warm, "{datum} {mode}");
        }
    }
    let lines = std::fs::read_to_string(cache).unwrap().lines().count();
    assert_eq!(lines, 8);

    let via_env = Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(["count", "[2,2,1],[5],[5]"])
        .env("HURWITZ_CACHE", cache)
        .output()
        .unwrap();
    assert_eq!(via_env.stdout, hurwitz(&["count", "[2,2,1],[5],[5]"]).stdout);
    assert_eq!(std::fs::read_to_string(cache).unwrap().lines().count(), 8);
}

#[test]
fn formula() {
    let value = |args: &[&str]| json(&hurwitz(args))["value"].as_u64().unwrap();
    assert_eq!(value(&["formula", "g1h2", "--k", "4"]), 4);
    assert_eq!(value(&["formula", "g2h4", "--k", "4"]), 10);
    assert_eq!(value(&["formula", "g0h2", "--k", "4", "--pqr", "3,3,3"]), 0);
    let g1 = json(&hurwitz(&["formula", "g1h3", "--k", "4", "--p", "7"]));
    assert_eq!(g1["value"], 5);
    assert_eq!(g1["uncorrected"], 6);
    assert_eq!(hurwitz(&["formula", "g2h4", "--k", "3"]).status.code(), Some(1));
}

#[test]
fn scan() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.jsonl");
    let out = hurwitz(&["scan", "--degree", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["exceptional"].as_array().unwrap().len(), 1);
    let lines: Vec<Value> = std::fs::read_to_string(&path)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), report["data"].as_u64().unwrap() as usize);
    for key in ["partitions", "degree", "genus", "nu", "zieve", "elapsed_ms"] {
        assert!(lines.iter().all(|l| l.get(key).is_some()), "{key}");
    }
    assert_eq!(hurwitz(&["scan", "--degree", "12"]).status.code(), Some(1));
}

#[test]
fn dessin() {
    let dir = tempfile::tempdir().unwrap();
    let out = hurwitz(&["dessin", "[2,2,2,2,1],[7,2],[7,2]", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["dessins"], 5);
    let dot = std::fs::read_to_string(dir.path().join("dessin_0.dot")).unwrap();
    assert!(dot.starts_with("graph dessin_0 {"));
    assert_eq!(dot.matches(" -- ").count(), 9);
    let side: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("dessin_4.json")).unwrap()).unwrap();
    assert_eq!(side["regions"].as_array().unwrap().len(), 2);

    let emitted = hurwitz(&["dessin", "[2,2,1],[5],[5]", "--emit", "json"]);
    let all: Value = serde_json::from_slice(&emitted.stdout).unwrap();
    assert_eq!(all.as_array().unwrap().len(), 1);
    assert_eq!(hurwitz(&["dessin", "[2,2],[3,1]"]).status.code(), Some(1));
    assert_eq!(hurwitz(&["dessin", "[2,2,x]"]).status.code(), Some(1));
}
