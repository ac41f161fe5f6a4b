//! End-to-end tests of the `hpp` binary: exit codes, JSON output shapes,
//! and pipelines that feed one command's output into another.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_hpp");

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn hpp");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("wait for hpp")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn check_m_failure_and_witness_flag() {
    // f(0)=0, f(1)=-1, f(2)=0 is convex, not concave.
    let dent = r#"{"points":[{"alpha":[0],"value":"0"},{"alpha":[1],"value":"-1"},{"alpha":[2],"value":"0"}]}"#;

    let out = run(&["check", "m"], dent);
    assert_eq!(code(&out), 1);
    let v = stdout_json(&out);
    assert_eq!(v["verdict"], serde_json::json!(false));
    assert!(v.get("witness").is_none(), "witness must be opt-in");

    let out = run(&["check", "m", "--witness"], dent);
    assert_eq!(code(&out), 1);
    let v = stdout_json(&out);
    assert_eq!(v["witness"]["kind"], serde_json::json!("exchange"));
}

#[test]
fn check_jump_system_passes() {
    let out = run(
        &["check", "jump-system"],
        r#"{"dim":2,"points":[[0,0],[1,1],[2,0],[0,2]]}"#,
    );
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["verdict"], serde_json::json!(true));
}

#[test]
fn fano_distance_is_m_concave_via_pipeline() {
    let fano = run(&["gen", "fano"], "");
    assert_eq!(code(&fano), 0);
    let out = run(&["check", "m"], &String::from_utf8_lossy(&fano.stdout));
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout_json(&out)["verdict"], serde_json::json!(true));
}

#[test]
fn fano_argmax_equals_bases() {
    let dist = run(&["gen", "fano"], "");
    let max = run(&["max", "brute"], &String::from_utf8_lossy(&dist.stdout));
    assert_eq!(code(&max), 0);
    let max = stdout_json(&max);
    assert_eq!(max["max"], serde_json::json!("0"));

    let bases = stdout_json(&run(&["gen", "fano", "--bases"], ""));
    let mut got: Vec<serde_json::Value> =
        max["argmax"]["points"].as_array().unwrap().clone();
    let mut want: Vec<serde_json::Value> = bases["points"].as_array().unwrap().clone();
    got.sort_by_key(|p| p.to_string());
    want.sort_by_key(|p| p.to_string());
    assert_eq!(got, want);
}

#[test]
fn quant_b_on_small_hive() {
    // The zero hive on the level-2 triangle, passed with Q = 2 = 2(n-1).
    let hive = r#"{"points":[
        {"alpha":[2,0,0],"value":"0"},{"alpha":[0,2,0],"value":"0"},{"alpha":[0,0,2],"value":"0"},
        {"alpha":[1,1,0],"value":"0"},{"alpha":[1,0,1],"value":"0"},{"alpha":[0,1,1],"value":"0"}]}"#;
    let out = run(&["construct", "quant-b", "--Q", "2"], hive);
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["certificate"]["verdict"], serde_json::json!("proves-stable"));
    // a_(2,0,0) = 2^(h0+h) = 2^(-1+0) = 1/2.
    let coeff = v["poly"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["alpha"] == serde_json::json!([2, 0, 0]))
        .expect("term (2,0,0)");
    assert_eq!(coeff["coeff"][0]["c"], serde_json::json!("1/2"));
}

#[test]
fn sr_falsifier_finds_negative_sample() {
    // P = 1 + z1 z2 fails at the origin: 0*0 - 1*1 = -1.
    let p = r#"{"nvars":2,"terms":[
        {"alpha":[0,0],"coeff":[{"exp":"0","c":"1"}]},
        {"alpha":[1,1],"coeff":[{"exp":"0","c":"1"}]}]}"#;
    let out = run(&["certify", "sr"], p);
    assert_eq!(code(&out), 1);
    let v = stdout_json(&out);
    assert_eq!(v["witness"]["value"], serde_json::json!("-1"));
}

#[test]
fn sr_pass_is_inconclusive() {
    // z1 + z2 satisfies the inequality everywhere, but a sampled pass
    // only fails to falsify.
    let p = r#"{"nvars":2,"terms":[
        {"alpha":[1,0],"coeff":[{"exp":"0","c":"1"}]},
        {"alpha":[0,1],"coeff":[{"exp":"0","c":"1"}]}]}"#;
    let out = run(&["certify", "sr"], p);
    assert_eq!(code(&out), 2);
    assert_eq!(stdout_json(&out)["verdict"], serde_json::json!(true));
}

#[test]
fn sturm_exit_codes() {
    let out = run(&["certify", "sturm"], r#"{"coeffs":["-1","0","1"]}"#);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["distinct_real_roots"], serde_json::json!(2));

    let out = run(&["certify", "sturm"], r#"{"coeffs":["1","0","1"]}"#);
    assert_eq!(code(&out), 1);
    assert_eq!(
        stdout_json(&out)["all_real"],
        serde_json::json!(false)
    );
}

#[test]
fn usage_error_is_64() {
    let out = run(&["frobnicate"], "");
    assert_eq!(code(&out), 64);
    let out = run(&["check"], "");
    assert_eq!(code(&out), 64, "missing subcommand is a usage error");
    let out = run(&["--help"], "");
    assert_eq!(code(&out), 0, "explicit help is not an error");
}

#[test]
fn bad_data_is_65() {
    let out = run(&["check", "m"], "not json");
    assert_eq!(code(&out), 65);
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid JSON"));

    // Well-formed JSON that violates a structural rule (a loop).
    let out = run(
        &["gen", "matching"],
        r#"{"n":2,"edges":[{"u":1,"v":1,"w":"1"}]}"#,
    );
    assert_eq!(code(&out), 65);
}

#[test]
fn term_cap_is_70() {
    let k4 = r#"{"n":4,"edges":[
        {"u":1,"v":2,"w":"1"},{"u":1,"v":3,"w":"1"},{"u":1,"v":4,"w":"1"},
        {"u":2,"v":3,"w":"1"},{"u":2,"v":4,"w":"1"},{"u":3,"v":4,"w":"1"}]}"#;
    let out = run(&["gen", "graph-poly", "--term-cap", "3"], k4);
    assert_eq!(code(&out), 70);

    let out = run(&["gen", "graph-poly"], k4);
    assert_eq!(code(&out), 0, "default cap is generous");
}

#[test]
fn random_hive_checks_out_and_is_seeded() {
    let a = run(&["gen", "random-hive", "--n", "3", "--seed", "5"], "");
    assert_eq!(code(&a), 0);
    let b = run(&["gen", "random-hive", "--n", "3", "--seed", "5"], "");
    assert_eq!(a.stdout, b.stdout, "same seed, same hive");
    let c = run(&["gen", "random-hive", "--n", "3", "--seed", "6"], "");
    assert_ne!(a.stdout, c.stdout, "different seed, different hive");

    let out = run(&["check", "hive"], &String::from_utf8_lossy(&a.stdout));
    assert_eq!(code(&out), 0);

    let strict = run(
        &["gen", "random-hive", "--n", "3", "--seed", "5", "--strict"],
        "",
    );
    let out = run(
        &["check", "hive", "--strict"],
        &String::from_utf8_lossy(&strict.stdout),
    );
    assert_eq!(code(&out), 0);
}

#[test]
fn strict_hive_construction_tropicalizes_back() {
    let hive = run(
        &["gen", "random-hive", "--n", "2", "--seed", "11", "--strict"],
        "",
    );
    let hive_str = String::from_utf8_lossy(&hive.stdout).into_owned();

    let built = run(&["construct", "strict-hive"], &hive_str);
    assert_eq!(code(&built), 0, "stderr: {}", String::from_utf8_lossy(&built.stderr));
    let built = stdout_json(&built);
    assert_eq!(
        built["certificate"]["verdict"],
        serde_json::json!("proves-stable")
    );

    let trop = run(&["trop"], &built["poly"].to_string());
    assert_eq!(code(&trop), 0);
    // Tropicalization recovers the hive exactly.
    let canon = |v: &serde_json::Value| {
        let mut pts: Vec<String> = v["points"]
            .as_array()
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        pts.sort();
        pts
    };
    assert_eq!(
        canon(&stdout_json(&trop)),
        canon(&serde_json::from_str(&hive_str).unwrap())
    );
}

#[test]
fn input_flag_reads_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("set.json");
    std::fs::write(&path, r#"{"dim":1,"points":[[0],[3]]}"#).unwrap();
    let out = Command::new(BIN)
        .args(["check", "jump-system", "-i", path.to_str().unwrap()])
        .output()
        .unwrap();
    // {0, 3} fails: from 0 toward 3, the two allowed steps only reach 2.
    assert_eq!(code(&out), 1);

    let out = Command::new(BIN)
        .args(["check", "jump-system", "-i", "/no/such/file.json"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 65);
}

#[test]
fn schema_flag_prints_and_exits_zero() {
    for args in [
        vec!["check", "m", "--schema"],
        vec!["certify", "rhombus", "--schema"],
        vec!["gen", "psd-det", "--schema"],
        vec!["construct", "quant-b", "--schema"],
    ] {
        let out = run(&args, "");
        assert_eq!(code(&out), 0, "args: {args:?}");
        assert!(!out.stdout.is_empty(), "args: {args:?}");
    }
}

#[test]
fn lemma_basic_harness_verdicts() {
    // (x + y + z)^3: every slice is real-rooted.
    let cube = r#"{"nvars":3,"terms":[
        {"alpha":[3,0,0],"coeff":[{"exp":"0","c":"1"}]},
        {"alpha":[0,3,0],"coeff":[{"exp":"0","c":"1"}]},
        {"alpha":[0,0,3],"coeff":[{"exp":"0","c":"1"}]},
        {"alpha":[2,1,0],"coeff":[{"exp":"0","c":"3"}]},
        {"alpha":[2,0,1],"coeff":[{"exp":"0","c":"3"}]},
        {"alpha":[1,2,0],"coeff":[{"exp":"0","c":"3"}]},
        {"alpha":[0,2,1],"coeff":[{"exp":"0","c":"3"}]},
        {"alpha":[1,0,2],"coeff":[{"exp":"0","c":"3"}]},
        {"alpha":[0,1,2],"coeff":[{"exp":"0","c":"3"}]},
        {"alpha":[1,1,1],"coeff":[{"exp":"0","c":"6"}]}]}"#;
    let out = run(&["certify", "lemma-basic"], cube);
    assert_eq!(code(&out), 2, "a sampled pass is inconclusive");

    // x^3 + y^3 + z^3 has non-real slice roots.
    let fermat = r#"{"nvars":3,"terms":[
        {"alpha":[3,0,0],"coeff":[{"exp":"0","c":"1"}]},
        {"alpha":[0,3,0],"coeff":[{"exp":"0","c":"1"}]},
        {"alpha":[0,0,3],"coeff":[{"exp":"0","c":"1"}]}]}"#;
    let out = run(&["certify", "lemma-basic"], fermat);
    assert_eq!(code(&out), 1);
    assert_eq!(
        stdout_json(&out)["verdict"],
        serde_json::json!("proves-unstable")
    );
}
