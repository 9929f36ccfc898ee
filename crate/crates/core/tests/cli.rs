use std::path::PathBuf;
use std::process::{Command, Output};

fn thuekit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thuekit")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("thuekit-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn solve_family_cubic() {
    let out = thuekit(&["solve", "13 -22 12 -2", "--y-max", "100", "--random-pairs", "50"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["version"], "thuekit-report/1");
    assert!(v["solutions"].as_array().unwrap().len() >= 3);
    assert_eq!(v["final_bounds"]["all_checks_pass"], true);
    assert!(v["timing"]["elapsed_ms"].is_u64());
}

#[test]
fn solve_reducible_power() {
    let out = thuekit(&["solve", "1 0 0 0", "--y-max", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["form"]["irreducible"], false);
    let caps: Vec<&serde_json::Value> = v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|x| x["lemma"].as_str().unwrap().starts_with("reducible_cap"))
        .collect();
    assert_eq!(caps.len(), 1);
    assert_eq!(caps[0]["vacuous"], true);
}

#[test]
fn solve_by_family_and_from_file() {
    let out = thuekit(&["solve", "--family", "f1", "--n", "4", "--p", "3", "--y-max", "200", "--random-pairs", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["form"]["label"], "f1(n=4,p=3)");
    let dir = scratch("file");
    let input = dir.join("form.txt");
    std::fs::write(&input, "# a cubic\n1 0 -1 -1\n").unwrap();
    let report = dir.join("out.json");
    let out = thuekit(&[
        "solve",
        input.to_str().unwrap(),
        "--y-max",
        "50",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(v["form"]["n"], 3);
}

#[test]
fn usage_and_input_errors() {
    assert_eq!(thuekit(&["matveev", "--n", "0", "--d", "1"]).status.code(), Some(1));
    assert_eq!(thuekit(&["solve", "1 2 x"]).status.code(), Some(1));
    assert_eq!(thuekit(&["solve", "1 0 1"]).status.code(), Some(1));
    assert_eq!(thuekit(&["matveev", "--n", "3", "--d", "2", "--chi", "3"]).status.code(), Some(1));
    assert_eq!(thuekit(&["solve", "--family", "even", "--n", "5", "--p", "2"]).status.code(), Some(1));
    assert_eq!(thuekit(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn matveev_table_and_json() {
    let out = thuekit(&["matveev", "--n", "5", "--d", "120", "--B", "10", "--chi", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let c0_line = text.lines().find(|l| l.starts_with("C0")).unwrap();
    let value: f64 = c0_line.split_whitespace().last().unwrap().parse().unwrap();
    assert!((value / 48.39 - 1.0).abs() < 1e-3, "{c0_line}");
    assert!(text.lines().any(|l| l.starts_with("D0")));
    let out = thuekit(&["matveev", "--n", "5", "--d", "120", "--B", "10", "--chi", "2", "--json"]);
    let v = json(&out);
    let mid: f64 = v["matveev"]["c0"]["mid"].as_str().unwrap().parse().unwrap();
    assert!((mid / 48.39 - 1.0).abs() < 1e-3);
    assert!(v["counting_constants"]["d0"].is_string());
}

fn strip_timing(dir: &std::path::Path) -> Vec<String> {
    let mut names: Vec<_> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    names.sort();
    names
        .iter()
        .map(|p| {
            let text = std::fs::read_to_string(p).unwrap();
            if p.extension().unwrap() == "json" {
                let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
                v.as_object_mut().unwrap().remove("timing");
                v.to_string()
            } else {
                text
            }
        })
        .collect()
}

#[test]
fn corpus_is_deterministic() {
    let dir = scratch("corpus");
    let cfg = dir.join("corpus.toml");
    std::fs::write(
        &cfg,
        "y_max = 100\nrandom_pairs = 20\n\n[[forms]]\ncoeffs = \"1 0 -1 -1\"\nlabel = \"plastic\"\n\n[[families]]\nkind = \"f1\"\nn = [3, 4]\np = [2, 3]\n",
    )
    .unwrap();
    let (a, b) = (dir.join("a"), dir.join("b"));
    for out in [&a, &b] {
        let r = thuekit(&["corpus", cfg.to_str().unwrap(), "--out-dir", out.to_str().unwrap()]);
        assert_eq!(r.status.code(), Some(0), "{}", String::from_utf8_lossy(&r.stderr));
    }
    let (ra, rb) = (strip_timing(&a), strip_timing(&b));
    assert_eq!(ra.len(), 6);
    assert_eq!(ra, rb);
    let csv = std::fs::read_to_string(a.join("summary.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "form,n,|D|,M,r,s,count,bound_11n_minus_2,bound_11r4s1,all_checks_pass");
    assert!(lines.next().unwrap().starts_with("plastic,3,23,"));
    assert_eq!(lines.count(), 4);
}

#[test]
fn empty_corpus_writes_header() {
    let dir = scratch("empty");
    let cfg = dir.join("empty.toml");
    std::fs::write(&cfg, "").unwrap();
    let out = dir.join("out");
    let r = thuekit(&["corpus", cfg.to_str().unwrap(), "--out-dir", out.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0));
    let csv = std::fs::read_to_string(out.join("summary.csv")).unwrap();
    assert_eq!(csv.lines().count(), 1);
    let bad = dir.join("bad.toml");
    std::fs::write(&bad, "ymax = 4\n").unwrap();
    assert_eq!(thuekit(&["corpus", bad.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn report_matches_shipped_schema_outline() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report.schema.json");
    let schema: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let out = thuekit(&["solve", "1 0 -4 1 1", "--y-max", "100", "--random-pairs", "10"]);
    let v = json(&out);
    assert_eq!(schema["properties"]["version"]["const"], v["version"]);
    let obj = v.as_object().unwrap();
    for key in schema["required"].as_array().unwrap() {
        assert!(obj.contains_key(key.as_str().unwrap()), "missing {key}");
    }
    let known = schema["properties"].as_object().unwrap();
    for key in obj.keys() {
        assert!(known.contains_key(key), "undocumented {key}");
    }
    let outcomes = schema["$defs"]["verdict"]["properties"]["outcome"]["enum"].as_array().unwrap();
    for verdict in v["verdicts"].as_array().unwrap() {
        assert!(outcomes.contains(&verdict["outcome"]));
    }
}
