use std::process::{Command, Output};

use serde_json::Value;

fn penta(args: &[&str]) -> (Output, tempfile::TempDir) {
    let cache = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_penta"))
        .args(args)
        .env("PENTA_CACHE_DIR", cache.path())
        .output()
        .unwrap();
    (out, cache)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn direction_of_alpha1() {
    let (o, _c) = penta(&["direction", "1"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("1\t4-5/2*phi\t"));
}

#[test]
fn trailing_zero_is_a_usage_error() {
    let (o, _c) = penta(&["direction", "10"]);
    assert_eq!(o.status.code(), Some(2));
    let (o, _c) = penta(&["orbits", "17"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unknown_flag_and_theorem_are_usage_errors() {
    assert_eq!(penta(&["verify", "--bogus"]).0.status.code(), Some(2));
    assert_eq!(penta(&["verify", "--theorem", "7"]).0.status.code(), Some(2));
    assert_eq!(penta(&["verify", "--oracle-fraction", "2"]).0.status.code(), Some(2));
}

#[test]
fn orbits_json() {
    let (o, _c) = penta(&["orbits", "1", "--oracle", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["orbits"]["short"]["canonical"], "2325");
    assert_eq!(v["orbits"]["long"]["canonical"], "143234");
    assert_eq!(v["orbits"]["periods"], serde_json::json!([4, 6]));
    assert_eq!(v["oracle"]["matches"], true);
}

#[test]
fn orbits_fill_the_cache() {
    let (o, cache) = penta(&["orbits", "21"]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(cache.path().join("orbits-v1.json")).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["version"], 1);
    assert!(v["orbits"]["21"].is_array());
}

#[test]
fn trace_single_trajectory() {
    let (o, _c) = penta(&["trace", "-", "--side", "0", "--t", "2/7", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["closed"], true);
    assert_eq!(v["combinatorial_period"], 2);
}

#[test]
fn trace_strips() {
    let (o, _c) = penta(&["trace", "far", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["short"]["word"]["canonical"].as_str().map(str::len), Some(2));
}

#[test]
fn verify_report_shape() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("report.json");
    let (o, _c) = penta(&["verify", "--depth", "2", "--theorem", "1,3,conjecture", "--json", "--out", file.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let printed: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    let strip = |mut v: Value| {
        for r in v.as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("elapsed_ms");
        }
        v
    };
    assert_eq!(strip(printed.clone()), strip(written));
    let rows = printed.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for r in rows {
        for key in ["theorem", "depth", "cases", "failures", "elapsed_ms"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
        assert_eq!(r["failures"].as_array().unwrap().len(), 0);
    }
    assert_eq!(rows[0]["cases"], 5);
    assert!(rows[2]["data"]["histogram"].is_object());
}

#[test]
fn unwritable_output_exits_one() {
    let (o, _c) = penta(&["verify", "--depth", "1", "--theorem", "1", "--out", "/nonexistent/dir/r.json"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn tiling_render_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    assert!(penta(&["render-tiling", "--depth", "2", "-o", a.to_str().unwrap()]).0.status.success());
    assert!(penta(&["render-tiling", "--depth", "2", "-o", b.to_str().unwrap()]).0.status.success());
    let sa = std::fs::read(&a).unwrap();
    assert_eq!(sa, std::fs::read(&b).unwrap());
    assert!(sa.starts_with(b"<svg"));
}

#[test]
fn strips_render() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("s.svg");
    let (o, _c) = penta(&["render-strips", "1", "-o", a.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&a).unwrap();
    assert!(text.contains("short 2325 (4), long 143234 (6)"), "{}", &text[..text.len().min(400)]);
}
