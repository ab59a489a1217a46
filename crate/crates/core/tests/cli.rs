mod common;

use std::process::{Command, Output};

use common::spec_path;

fn invsyz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invsyz")).args(args).output().unwrap()
}

fn spec_arg(name: &str) -> String {
    spec_path(name).to_string_lossy().into_owned()
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = invsyz(&["verify", "--spec", &spec_arg("a3"), "--imax", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["degrees"], serde_json::json!([3, 3, 2, 1]));
    assert_eq!(report["tau"], 3);
    assert_eq!(report["betti"], serde_json::json!([{"i":0,"j":0,"beta":1},{"i":1,"j":6,"beta":1}]));
    assert!(report.get("timings").is_none());
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("total:  1 1"));
    assert!(text.contains("relations_2tau"));
}

#[test]
fn reports_are_reproducible() {
    let a = invsyz(&["verify", "--spec", &spec_arg("c3_scalar_2_f7")]);
    let b = invsyz(&["verify", "--spec", &spec_arg("c3_scalar_2_f7")]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn records_are_recomputable_from_report_fields() {
    let o = invsyz(&["verify", "--spec", &spec_arg("c2_scalar_3")]);
    let r: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let degrees: Vec<i64> = r["degrees"].as_array().unwrap().iter().map(|v| v.as_i64().unwrap()).collect();
    let s = r["s"].as_i64().unwrap();
    let tau = r["tau"].as_i64().unwrap();
    let beta_i = |i: i64| {
        r["beta_i"].as_array().unwrap().iter().find(|e| e["i"] == i).map(|e| e["value"].as_i64().unwrap()).unwrap()
    };
    for rec in r["records"].as_array().unwrap() {
        let name = rec["name"].as_str().unwrap();
        let (left, right) = (rec["left"].as_i64().unwrap(), rec["right"].as_i64().unwrap());
        if let Some(i) = name.strip_prefix("betti_degree_sum[").and_then(|x| x.strip_suffix(']')) {
            let i: i64 = i.parse().unwrap();
            assert_eq!(left, beta_i(i));
            assert_eq!(right, degrees[..(s + i) as usize].iter().sum::<i64>() - s);
        }
        if let Some(i) = name.strip_prefix("conjecture[").and_then(|x| x.strip_suffix(']')) {
            let i: i64 = i.parse().unwrap();
            assert_eq!((left, right), (beta_i(i), (i + 1) * tau));
        }
        let status = rec["status"].as_str().unwrap();
        assert_eq!(left == right, status.ends_with("sharp"), "{name}");
    }
}

#[test]
fn modular_case_exits_65() {
    let o = invsyz(&["verify", "--spec", &spec_arg("modular_s2_f2")]);
    assert_eq!(o.status.code(), Some(65));
    assert!(String::from_utf8_lossy(&o.stderr).contains("modular case not supported"));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(invsyz(&["verify"]).status.code(), Some(64));
    assert_eq!(invsyz(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(invsyz(&["verify", "--spec", "/nonexistent/spec.json"]).status.code(), Some(64));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"field":{"type":"rational"},"group":{"type":"cyclic_scalar","m":2}}"#).unwrap();
    assert_eq!(invsyz(&["verify", "--spec", bad.to_str().unwrap()]).status.code(), Some(64));
    assert_eq!(invsyz(&["--help"]).status.code(), Some(0));
}

#[test]
fn unsupported_root_of_unity_exits_65() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("c3q.json");
    std::fs::write(&p, r#"{"field":{"type":"rational"},"group":{"type":"cyclic_scalar","m":3,"n":2}}"#).unwrap();
    assert_eq!(invsyz(&["invariants", "--spec", p.to_str().unwrap()]).status.code(), Some(65));
}

#[test]
fn stage_subcommands() {
    let inv: serde_json::Value = serde_json::from_slice(&invsyz(&["invariants", "--spec", &spec_arg("s3")]).stdout).unwrap();
    assert_eq!(inv["degrees"], serde_json::json!([3, 2, 1]));
    let t: serde_json::Value = serde_json::from_slice(&invsyz(&["tau", "--spec", &spec_arg("a3")]).stdout).unwrap();
    assert_eq!(t["tau"], 3);
    assert_eq!(t["hilbert_function_t_mod_i"], serde_json::json!([1, 2, 2]));
    let j: serde_json::Value =
        serde_json::from_slice(&invsyz(&["syzygy-ideal", "--spec", &spec_arg("c2_scalar_2")]).stdout).unwrap();
    assert_eq!(j["minimal_generators"], serde_json::json!(["x2^2 - x1*x3"]));
    let b: serde_json::Value =
        serde_json::from_slice(&invsyz(&["betti", "--spec", &spec_arg("c3_scalar_2_f7")]).stdout).unwrap();
    assert_eq!(b["resolution_length"], 2);
    let m: serde_json::Value = serde_json::from_slice(&invsyz(&["molien", "--spec", &spec_arg("a3"), "--terms", "4"]).stdout).unwrap();
    assert_eq!(m["coefficients"], serde_json::json!(["1", "1", "2", "4", "5"]));
    assert_eq!(invsyz(&["molien", "--spec", &spec_arg("c3_scalar_2_f7")]).status.code(), Some(65));
}

#[test]
fn sweep_summarizes_a_directory() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["a3", "s3", "modular_s2_f2"] {
        std::fs::copy(spec_path(name), dir.path().join(format!("{name}.json"))).unwrap();
    }
    let out = dir.path().join("rows.json");
    let o = invsyz(&["sweep", "--dir", dir.path().to_str().unwrap(), "--jobs", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(65));
    let table = String::from_utf8(o.stdout).unwrap();
    assert_eq!(table.lines().count(), 4);
    assert!(table.contains("modular case not supported"));
    let rows: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(rows[0]["file"], "a3.json");
    assert_eq!(rows[0]["summary"]["beta1"], 6);
}
