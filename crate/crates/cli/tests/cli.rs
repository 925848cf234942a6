use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn hurwitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(args)
        .env_remove("HURWITZ_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

#[test]
fn worked_examples() {
    let out = hurwitz(&["hurwitz", "--euler", "2", "--profiles", "[3],[3],[3]"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out), serde_json::json!({"value": "1/3"}));

    let out = hurwitz(&["hurwitz", "--euler", "0", "--profiles", "[2],[2]"]);
    assert_eq!(json(&out)["value"], "2/1");

    let out = hurwitz(&[
        "oracle",
        "tuple",
        "--euler",
        "2",
        "--profiles",
        "[3],[3],[1,1,1]",
    ]);
    assert_eq!(json(&out)["value"], "1/3");
}

#[test]
fn exit_codes() {
    assert_eq!(hurwitz(&["--no-such-flag"]).status.code(), Some(64));
    assert_eq!(hurwitz(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(hurwitz(&["--help"]).status.code(), Some(0));

    let out = hurwitz(&["hurwitz", "--euler", "2", "--profiles", "[3],[2,x]"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("\"x\""));

    let out = hurwitz(&["hurwitz", "--euler", "2", "--profiles", "[3],[2]"]);
    assert_eq!(out.status.code(), Some(1));

    let out = hurwitz(&["hurwitz", "--euler", "3", "--profiles", "[1]"]);
    assert_eq!(out.status.code(), Some(1));

    let out = hurwitz(&[
        "oracle",
        "tuple",
        "--euler",
        "-2",
        "--profiles",
        "[3],[3]",
        "--naive",
        "--budget",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = hurwitz(&[
        "--max-degree",
        "4",
        "hurwitz",
        "--euler",
        "2",
        "--profiles",
        "[5]",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn deterministic_output() {
    let args = ["verify", "cuts", "--d", "3"];
    let a = hurwitz(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(args)
        .env("RAYON_NUM_THREADS", "1")
        .env_remove("HURWITZ_CACHE_DIR")
        .output()
        .unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["passed"], true);
}

#[test]
fn wick_map_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ex1.json");
    fs::write(
        &path,
        r#"{"faces":[
            {"profile":[3],"sides":[{"edge":0,"rev":false,"tower":0,"slot":0}]},
            {"profile":[3],"sides":[{"edge":0,"rev":true,"tower":0,"slot":1}]}
        ]}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let out = hurwitz(&["oracle", "wick", "--map", p, "--d", "3", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["n_exponent"], -3);

    let out = hurwitz(&["oracle", "wick", "--map", p, "--d", "3"]);
    let entries = json(&out)["entries"].clone();
    let three = entries
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["profiles"] == serde_json::json!([[3]]))
        .unwrap();
    assert_eq!(three["value"], "1/3");

    fs::write(
        &path,
        r#"{"faces":[{"profile":[1],"sides":[{"edge":0,"tower":0,"slot":0}]}]}"#,
    )
    .unwrap();
    let out = hurwitz(&["oracle", "wick", "--map", p, "--d", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cutjoin_and_char_table() {
    let out = hurwitz(&["cutjoin", "--apply", "[2]"]);
    assert_eq!(json(&out), serde_json::json!({"coeffs": {"[1,1]": "1/1"}}));

    let out = hurwitz(&["char-table", "--d", "2", "--json"]);
    let v = json(&out);
    assert_eq!(v["partitions"], serde_json::json!([[2], [1, 1]]));
    assert_eq!(v["table"], serde_json::json!([[1, 1], [-1, 1]]));

    let out = hurwitz(&["cutjoin", "--eigen", "[2,1]"]);
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn yang_mills_and_tau() {
    let dir = tempfile::tempdir().unwrap();
    let classes = dir.path().join("classes.json");
    fs::write(&classes, r#"[{"kind":"identity"}]"#).unwrap();
    let c = classes.to_str().unwrap();

    let out = hurwitz(&[
        "ym",
        "--euler",
        "2",
        "--N",
        "2",
        "--dmax",
        "2",
        "--rho-order",
        "0",
    ]);
    let v = json(&out);
    assert!(v["truncation"].as_str().unwrap().contains("|λ| ≤ 2"));
    let total: i64 = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            t["value"]
                .as_str()
                .unwrap()
                .trim_end_matches("/1")
                .parse::<i64>()
                .unwrap()
        })
        .sum();
    assert_eq!(total, 15);

    let out = hurwitz(&[
        "ym",
        "--euler",
        "2",
        "--rho",
        "0.3",
        "--N",
        "4",
        "--dmax",
        "4",
        "--classes",
        c,
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["total"][0].as_f64().unwrap() > 1.0);

    let out = hurwitz(&[
        "tau", "jm", "--kind", "tl", "--s", "1/2", "--dmax", "2", "--check",
    ]);
    assert_eq!(json(&out)["passed"], true);

    let out = hurwitz(&["verify", "int-tau"]);
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn corrupted_cache_is_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let out = hurwitz(&["--cache-dir", d, "cache", "warm", "--dmax", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let file = dir.path().join("chartab-v1-d4.json");
    assert!(file.exists());

    fs::write(&file, "{ not json").unwrap();
    let out = hurwitz(&["--cache-dir", d, "selftest", "--level", "fast"]);
    assert_eq!(out.status.code(), Some(0));

    let out = hurwitz(&["--cache-dir", d, "cache", "check"]);
    let v = json(&out);
    let d4 = v["tables"]
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["d"] == 4)
        .unwrap();
    assert!(d4["outcome"].as_str().unwrap().starts_with("Recomputed"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("rejected"));

    let out = hurwitz(&["--cache-dir", d, "cache", "check"]);
    assert!(json(&out)["tables"][4]["outcome"] == "Hit");

    let out = hurwitz(&["--cache-dir", d, "cache", "clear"]);
    assert_eq!(json(&out)["removed"], 5);
}

#[test]
fn table_format() {
    let out = hurwitz(&[
        "--format",
        "table",
        "hurwitz",
        "--euler",
        "1",
        "--profiles",
        "[2]",
    ]);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "moebius: 0/1\nvalue: 0/1\n"
    );
}
