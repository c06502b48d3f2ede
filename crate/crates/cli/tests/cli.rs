use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_spectral-lab"));
    c.env_remove("SPECTRAL_LAB_THREADS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = run(&[args, &["--format", "json"]].concat());
    let code = out.status.code().expect("exit code");
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stderr))
    });
    (code, v)
}

#[test]
fn verify_negative_up_to_eight() {
    let (code, v) = json(&["verify", "--side", "neg", "--n", "1..8", "--p", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["graphs_checked"], 12113);
    let counts: Vec<u64> = v["counts"].as_array().unwrap().iter().map(|c| c["classes"].as_u64().unwrap()).collect();
    assert_eq!(counts, [1, 1, 2, 6, 21, 112, 853, 11117]);
    assert!(v["violations"].as_array().unwrap().is_empty());
    // equality in the n − 1 bound only at complete graphs
    let equal: Vec<&str> = v["rows"].as_array().unwrap().iter().map(|r| r["report"]["exceptional"].as_str().unwrap()).collect();
    assert_eq!(equal, ["K_1", "K_2", "K_n", "K_n", "K_n", "K_n", "K_n", "K_n"]);
}

#[test]
fn verify_positive_at_three_finds_the_path() {
    let (code, v) = json(&["verify", "--side", "pos", "--n", "3..3"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["graphs_checked"], 2);
    let path_min = v["minimizers"]
        .as_array()
        .unwrap()
        .iter()
        .find(|m| m["bound"] == "pos-path")
        .expect("a path-bound minimizer");
    // P_3 in graph6
    assert_eq!(path_min["report"]["graph6"], "BW");
    assert_eq!(path_min["margin"], 0.0);
}

#[test]
fn shifted_bound_exits_one_with_violations() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let out = run(&[
        "verify", "--side", "neg", "--n", "3..3", "--p", "3", "--bound-shift", "100", "--format", "json",
        "--output", report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    // K_3 and P_3 both fail the shifted n − 1 bound; the strict bound exempts them
    assert_eq!(v["violations"].as_array().unwrap().len(), 2);
}

#[test]
fn reports_are_deterministic_across_execution_modes() {
    let base = ["verify", "--side", "neg", "--n", "1..7", "--no-timing", "--format", "json", "--depth", "4"];
    let a = run(&base);
    let b = run(&[&base[..], &["--sequential"]].concat());
    let c = bin().args(base).env("SPECTRAL_LAB_THREADS", "3").output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    let strip = |o: &Output| {
        let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
        v["config"].as_object_mut().unwrap().remove("shards");
        v
    };
    assert_eq!(strip(&a), strip(&b));
    assert_eq!(strip(&a), strip(&c));
    assert_eq!(a.stdout, run(&base).stdout);
}

#[test]
fn checkpoint_resume_matches_fresh_run() {
    let dir = tempfile::tempdir().unwrap();
    let ck = dir.path().join("run.ndjson");
    let args = |extra: &[&str]| -> Vec<String> {
        ["verify", "--side", "pos", "--n", "6..8", "--no-timing", "--format", "json", "--depth", "5"]
            .iter()
            .chain(extra)
            .map(|s| s.to_string())
            .collect()
    };
    let fresh = bin().args(args(&[])).output().unwrap();
    let first = bin().args(args(&["--checkpoint", ck.to_str().unwrap()])).output().unwrap();
    assert_eq!(first.stdout, fresh.stdout);

    // drop the last few completed units and cut the final line, as after a kill
    let text = std::fs::read_to_string(&ck).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines.len() > 5);
    let mut damaged = lines[..lines.len() - 3].join("\n");
    damaged.push('\n');
    damaged.push_str(&lines[lines.len() - 3][..20]);
    std::fs::write(&ck, damaged).unwrap();

    let resumed = bin().args(args(&["--checkpoint", ck.to_str().unwrap()])).output().unwrap();
    assert_eq!(resumed.status.code(), Some(0));
    assert_eq!(resumed.stdout, fresh.stdout);
    assert_eq!(std::fs::read_to_string(&ck).unwrap().lines().count(), lines.len());

    // a checkpoint from another configuration is refused
    let other = bin()
        .args(["verify", "--side", "neg", "--n", "6..8", "--checkpoint", ck.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(other.status.code(), Some(2));
}

#[test]
fn table1_reports_rows_and_the_known_deviation() {
    let (code, v) = json(&["table1"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 23);
    let row = |name: &str| rows.iter().find(|r| r["name"] == name).unwrap().clone();
    assert_eq!(row("P_4")["spectrum"], serde_json::json!([1.618, 0.618, -0.618, -1.618]));
    assert!((row("H_14")["e3_minus"].as_f64().unwrap() - 8.499).abs() <= 1e-3);
    assert!((row("H_6")["e3_minus"].as_f64().unwrap() - 10.032).abs() <= 1e-3);
    // the tabulated energy of H_15 disagrees with its own tabulated spectrum
    let failing: Vec<&str> = v["violations"].as_array().unwrap().iter().map(|r| r["name"].as_str().unwrap()).collect();
    assert_eq!(failing, ["H_15"]);
    assert_eq!(code, 1);
}

#[test]
fn family_complete_minus_edge() {
    let (code, v) = json(&["family", "complete-minus-edge", "--n", "5..20"]);
    assert_eq!(code, 0);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 16);
    assert!((rows[0]["margin"].as_f64().unwrap() - 0.458).abs() < 1e-3);
    assert!(rows.iter().all(|r| r["margin"].as_f64().unwrap() >= -1e-6));
}

#[test]
fn family_subdivided_star_and_clique() {
    let (code, v) = json(&["family", "subdivided-star", "--n", "4", "--t", "1..3"]);
    assert_eq!(code, 0);
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["structure_ok"] == true));

    let (code, v) = json(&["family", "clique-k2", "--n", "6..6"]);
    assert_eq!(code, 0);
    let row = &v["rows"][0];
    let l0 = row["negative_root"].as_f64().unwrap().abs().powi(3);
    assert!(l0 > 4.0);
    assert!((row["closed_e3_minus"].as_f64().unwrap() - (3.0 + l0)).abs() < 1e-9);

    let out = run(&["family", "clique-k2", "--n", "5..6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn family_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("spectra.tsv");
    let args = ["family", "complete-plus-pendant", "--n", "4..12", "--format", "json", "--cache", cache.to_str().unwrap()];
    let first: Value = serde_json::from_slice(&bin().args(args).output().unwrap().stdout).unwrap();
    let second: Value = serde_json::from_slice(&bin().args(args).output().unwrap().stdout).unwrap();
    assert_eq!(first["timing"]["cache_misses"], 9);
    assert_eq!(second["timing"]["cache_hits"], 9);
    assert_eq!(first["rows"], second["rows"]);
    let uncached: Value = serde_json::from_slice(&run(&args[..6]).stdout).unwrap();
    for (a, b) in first["rows"].as_array().unwrap().iter().zip(uncached["rows"].as_array().unwrap()) {
        let d = a["numeric_e3_minus"].as_f64().unwrap() - b["numeric_e3_minus"].as_f64().unwrap();
        assert!(d.abs() < 1e-8);
    }
}

#[test]
fn bounds_values_and_chains() {
    let (code, v) = json(&["bounds"]);
    let rows = v["rows"].as_array().unwrap();
    let case = |label: &str| rows.iter().find(|r| r["label"] == label).unwrap().clone();
    let g = case("g_4(0,1,2,1)");
    assert!((g["value"].as_f64().unwrap() - (9.0 + 4.0 * 2f64.sqrt() - 6.0 * 5f64.sqrt())).abs() < 1e-9);
    assert_eq!(g["pass"], true);
    let chains = rows.iter().find(|r| r["label"] == "tabulated s = 4 chains").unwrap();
    assert_eq!(chains["pass"], true);
    // every f_4 / g_4 value matches; only the two misprinted star-clique values do not
    let failing: Vec<&str> = v["violations"].as_array().unwrap().iter().map(|r| r["label"].as_str().unwrap()).collect();
    assert_eq!(failing, ["f(2,1)-n", "f(2,2)-n"]);
    assert_eq!(code, 1);
}

#[test]
fn enumerate_counts() {
    let (code, v) = json(&["enumerate", "--n", "1..8"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["total"], 12113);
}

#[test]
fn gadgets_dump_decodes() {
    let (code, v) = json(&["gadgets"]);
    assert_eq!(code, 0);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 23);
    for r in rows {
        let g = spectral_lab::graph6::decode(r["graph6"].as_str().unwrap()).unwrap();
        assert_eq!(g.order() as u64, r["order"].as_u64().unwrap());
    }
}

#[test]
fn csv_matches_json() {
    let json_out = run(&["family", "complete-minus-edge", "--n", "5..7", "--format", "json", "--no-timing"]);
    let csv_out = run(&["family", "complete-minus-edge", "--n", "5..7", "--format", "csv", "--no-timing"]);
    let v: Value = serde_json::from_slice(&json_out.stdout).unwrap();
    let mut reader = csv::Reader::from_reader(&csv_out.stdout[..]);
    let mut seen = 0;
    for rec in reader.records() {
        let rec = rec.unwrap();
        if &rec[0] != "rows" {
            continue;
        }
        let idx: usize = rec[1].parse().unwrap();
        let pointer = format!("/rows/{idx}/{}", rec[2].replace('.', "/"));
        let value = v.pointer(&pointer).unwrap_or_else(|| panic!("{pointer} missing"));
        let text = match value {
            Value::String(s) => s.clone(),
            Value::Null => String::new(),
            other => other.to_string(),
        };
        assert_eq!(text, &rec[3], "{pointer}");
        seen += 1;
    }
    assert!(seen > 20);
}

#[test]
fn io_failure_exits_two() {
    let out = run(&["gadgets", "--output", "/nonexistent-dir/x.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!Path::new("/nonexistent-dir/x.json").exists());
}

#[test]
fn bad_thread_override_is_an_error() {
    let out = bin().args(["enumerate", "--n", "3"]).env("SPECTRAL_LAB_THREADS", "zero").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
