use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pillowcase"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all);
    (
        serde_json::from_slice(&o.stdout).expect("single JSON document"),
        o.status.code().unwrap(),
    )
}

#[test]
fn slope_word_smallest() {
    let o = run(&["slope-word", "--slope", "2/1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("omega    v\n"));
    assert!(out.contains("relator  u v u^-1 v^-1\n"));
}

#[test]
fn slope_word_with_oracle() {
    let (v, code) = json(&["slope-word", "--slope", "10/7", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(v["epsilon"], "+-++-++-+");
    assert_eq!(v["oracle"]["sequence_agreement"], true);
    assert_eq!(v["oracle"]["published"]["status"], "WARN");
    assert_eq!(
        v["oracle"]["published"]["mismatches"],
        serde_json::json!([7, 8])
    );
}

#[test]
fn slope_word_rejects_odd_numerator() {
    let o = run(&["slope-word", "--slope", "3/2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("numerator must be even"));
    let o = run(&["slope-word", "--slope", "4/2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn negative_slope_argument() {
    let (v, code) = json(&["slope-word", "--slope", "-10/7"]);
    assert_eq!(code, 0);
    assert_eq!(v["slope"], "-10/7");
    assert_eq!(v["epsilon"], "+-++-++-+");
}

#[test]
fn obstruct_examples() {
    let o = run(&["obstruct", "--pq", "3,2", "--slope", "2/1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict       : nontrivial"));
    let (v, _) = json(&["obstruct", "--pq", "3,2", "--slope", "2/1"]);
    assert_eq!(v["report"]["syllables"], 4);
    assert_eq!(v["report"]["normal_form"], "x^2 y x y");
    let (v, code) = json(&["obstruct", "--pq", "3,2", "--slope", "0/1"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["nontrivial"], false);
    assert_eq!(v["report"]["syllables"], 0);
}

#[test]
fn obstruct_report_keys() {
    let (v, _) = json(&["obstruct", "--pq", "7,5", "--slope", "2/3"]);
    let keys: Vec<&str> = v["report"]
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    for k in [
        "p",
        "q",
        "a",
        "b",
        "c",
        "d",
        "relator_uv",
        "relator_xy",
        "normal_form",
        "syllables",
        "nontrivial",
        "requires_external_diffeomorphism",
    ] {
        assert!(keys.contains(&k), "missing {k}");
    }
    assert_eq!(v["report"]["a"], 3);
    assert_eq!(v["report"]["b"], -4);
}

#[test]
fn obstruct_rejects_bad_pairs() {
    let o = run(&["obstruct", "--pq", "4,2", "--slope", "2/1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("p,q must be coprime"));
    assert_eq!(
        run(&["obstruct", "--pq", "2,3", "--slope", "2/1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["obstruct", "--pq", "3,1", "--slope", "2/1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn obstruct_kernel_certificate() {
    let (v, _) = json(&[
        "obstruct",
        "--pq",
        "3,2",
        "--slope",
        "0/1",
        "--against",
        "2/1",
    ]);
    assert_eq!(v["kernels"]["verdict"], "distinct");
    assert_eq!(v["kernels"]["requires_external_diffeomorphism"], false);
    let (v, _) = json(&[
        "obstruct",
        "--pq",
        "3,2",
        "--slope",
        "2/1",
        "--against",
        "2/3",
    ]);
    assert_eq!(v["kernels"]["requires_external_diffeomorphism"], true);
}

#[test]
fn kernels_examples() {
    let o = run(&["kernels", "--k1", "0", "--k2", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("(4t-5)/7"));
    assert!(out.contains("verdict       distinct"));
    let (v, code) = json(&["kernels", "--k1", "5", "--k2", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["distinct"], false);
    let (v, _) = json(&["kernels", "--k1", "0", "--k2", "100"]);
    assert_eq!(v["distinct"], true);
    assert_eq!(
        run(&["kernels", "--k1", "-1", "--k2", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn blanchfield_quadratic_example() {
    let (v, code) = json(&["blanchfield", "--x", "0,4t+5", "--y", "0,4t+5"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], "61*t / (t^2 - t + 1)");
    assert_eq!(v["hermitian"], true);
    let (v, _) = json(&["blanchfield", "--x", "t,0", "--y", "0,1"]);
    assert_eq!(v["value"], "0");
}

#[test]
fn satellite_examples() {
    let (v, code) = json(&[
        "satellite",
        "--pattern",
        "trefoil",
        "--companion",
        "trefoil",
        "--winding",
        "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["matches"], true);
    assert_eq!(v["presentation"][2][2], "-1 + 1*t^2");
    let (v, _) = json(&[
        "satellite",
        "--pattern",
        "trefoil",
        "--companion",
        "unknot",
        "--winding",
        "3",
    ]);
    assert_eq!(v["presentation"].as_array().unwrap().len(), 2);
    let o = run(&[
        "satellite",
        "--pattern",
        "trefoil",
        "--companion",
        "trefoil",
        "--winding",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_all_reduced() {
    let o = run(&[
        "verify-all",
        "--sweep-cmax",
        "4",
        "--sweep-pmax",
        "5",
        "--kmax",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("overall: WARN"));
    let (v, code) = json(&[
        "verify-all",
        "--sweep-cmax",
        "4",
        "--sweep-pmax",
        "5",
        "--kmax",
        "10",
    ]);
    assert_eq!(code, 0);
    // text and JSON carry the same rows
    for row in v["rows"].as_array().unwrap() {
        let line = format!(
            "{:<4} {:<5}",
            row["id"].as_str().unwrap(),
            row["status"].as_str().unwrap()
        );
        assert!(text.contains(&line), "{line}");
        assert!(text.contains(row["detail"].as_str().unwrap()));
    }
    assert_eq!(v["config"]["kmax"], 10);
}

#[test]
fn out_file_and_parallelism() {
    let dir = std::env::temp_dir().join(format!("pillowcase-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = run(&[
        "kernels",
        "--k1",
        "0",
        "--k2",
        "1",
        "--format",
        "json",
        "--parallelism",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(v["difference_compact"], "(4t-5)/7");
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(
        run(&["kernels", "--k1", "0", "--k2", "1", "--parallelism", "0"])
            .status
            .code(),
        Some(2)
    );
}
