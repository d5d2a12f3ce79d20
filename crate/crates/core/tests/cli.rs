use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn transit(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_transit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn build_then_geometry_through_a_pipe() {
    // path on four vertices
    let built = transit(&["build", "--model", "I", "--graph6", "Ch"], None);
    let text = String::from_utf8(built.stdout.clone()).unwrap();
    assert_eq!(json(&built)["n"], 4);
    let geo = json(&transit(&["geometry"], Some(&text)));
    assert_eq!(geo["is_geometry"], true);
    let axioms = json(&transit(&["axioms", "--axiom", "m,b1,j0"], Some(&text)));
    for a in ["m", "b1", "j0"] {
        assert_eq!(axioms[a]["holds"], true, "{a}");
    }
}

#[test]
fn fixtures_by_name() {
    let v = json(&transit(&["axioms", "--fixture", "peano_not_ch", "--axiom", "ch,p"], None));
    assert_eq!(v["ch"]["holds"], false);
    assert_eq!(v["p"]["holds"], true);
    let v = json(&transit(&["geometry", "--fixture", "geometry_not_monotone"], None));
    assert_eq!(v["is_geometry"], true);
}

#[test]
fn hull_and_convex_sets() {
    // j0_ch_not_b1 on {a,b,c}: R(a,c) = R(b,c) = V
    let v = json(&transit(&["hull", "--fixture", "j0_ch_not_b1", "--set", "0,2"], None));
    assert_eq!(v["hull"], serde_json::json!([0, 1, 2]));
    let fast = json(&transit(&["convex-sets", "--fixture", "j0_ch_not_b1"], None));
    let brute = json(&transit(&["convex-sets", "--fixture", "j0_ch_not_b1", "--bruteforce"], None));
    assert_eq!(fast, brute);
}

#[test]
fn enumerate_counts() {
    for (n, count) in [(4, 6), (5, 21), (6, 112)] {
        let v = json(&transit(&["enumerate", "--n", &n.to_string(), "--count"], None));
        assert_eq!(v["count"], count);
    }
}

#[test]
fn verify_and_search() {
    let v = json(&transit(&["verify", "--theorem", "p3_b1_triangle", "--n", "5"], None));
    assert_eq!(v["mismatches"], serde_json::json!([]));
    assert_eq!(v["lhs_true"], v["rhs_true"]);
    let v = json(&transit(&["search", "--predicate", "ch_implies_b1", "--n", "4"], None));
    assert_eq!(v["found"], true);
    assert_eq!(v["witness"]["kind"], "transit");
}

#[test]
fn recognize_a_cycle() {
    let v = json(&transit(&["recognize", "--graph6", "Cr", "--class", "chordal"], None));
    assert_eq!(v["holds"], false);
}

#[test]
fn exit_codes() {
    // library error: unknown theorem
    let out = transit(&["verify", "--theorem", "nope"], None);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["error"].as_str().unwrap().contains("nope"));

    // malformed transit function on stdin
    assert_eq!(
        transit(&["geometry"], Some("{\"n\": 2, \"entries\": [{\"u\":0,\"v\":1,\"set\":[0]}]}")).status.code(),
        Some(2)
    );

    // usage and I/O problems
    assert_eq!(transit(&["--bogus"], None).status.code(), Some(1));
    assert_eq!(transit(&["axioms", "--input", "/nonexistent/file.json"], None).status.code(), Some(1));

    assert_eq!(transit(&["--help"], None).status.code(), Some(0));
    assert_eq!(transit(&["--version"], None).status.code(), Some(0));
}

#[test]
fn schema_lists_every_theorem() {
    let v = json(&transit(&["--schema"], None));
    let text = v.to_string();
    for t in ["geo_cg_ptolemaic", "prop51_hyper", "wt_eq_t_clawfree"] {
        assert!(text.contains(t), "{t}");
    }
}
