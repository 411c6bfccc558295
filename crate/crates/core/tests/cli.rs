use std::process::{Command, Output};

use covkernel::cli::{parse_config, RunConfig};

fn covkernel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_covkernel"))
        .args(args)
        .env_remove("COVKERNEL_PRECISION_BITS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn scalar_examples() {
    let o = covkernel(&["kernel", "--id", "sine", "--x", "0", "--y", "0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1.0\n");
    let o = covkernel(&["mp", "--gamma", "1", "--xi", "2"]);
    assert_eq!(stdout(&o), "0.15915494309189535\n");
}

#[test]
fn verify_bulk_table() {
    let o = covkernel(&[
        "verify-bulk", "--gamma", "0.5", "--xi", "1.5", "--mu", "0", "--nu", "0", "--beta", "2", "--b", "0.75",
        "--N", "50,100,200", "--method", "contour",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# config: {"));
    assert_eq!(lines.next().unwrap(), "N,lhs,rhs,abs_err");
    let errs: Vec<f64> = lines.map(|l| l.split(',').nth(3).unwrap().parse().unwrap()).collect();
    assert_eq!(errs.len(), 3);
    assert!(errs[0] > errs[1] && errs[1] > errs[2], "{errs:?}");
}

#[test]
fn output_is_deterministic() {
    let args = ["mc", "--beta", "1", "--n", "5", "--m", "2", "--mu", "0.5", "--reps", "5000", "--seed", "7", "--format", "csv"];
    let a = covkernel(&args);
    let b = covkernel(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let args = ["verify-edge", "--gamma", "0.5", "--N", "60,120", "--format", "json"];
    assert_eq!(covkernel(&args).stdout, covkernel(&args).stdout);
}

#[test]
fn json_config_round_trips() {
    let cases: &[&[&str]] = &[
        &["exact", "--beta", "1", "--b", "2.2", "--n", "7", "--m", "3", "--mu", "0.1", "--nu", "-0.7", "--format", "json"],
        &["contour", "--n", "30", "--m", "15", "--mu", "29.3", "--nu", "30.1", "--format", "json"],
        &["kernel", "--id", "airy-tilde", "--x", "0.3", "--y", "-1.1", "--format", "json"],
        &["bessel-check", "--kind", "uniform", "--alpha", "10,20", "--format", "json"],
    ];
    for args in cases {
        let o = covkernel(args);
        assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        let parsed: RunConfig = serde_json::from_value(doc["config"].clone()).unwrap();
        let expected = parse_config(std::iter::once("covkernel").chain(args.iter().copied()), None).unwrap();
        assert_eq!(parsed, expected);
        assert!(doc["rows"].as_array().is_some_and(|r| !r.is_empty()));
    }
}

#[test]
fn csv_config_line_round_trips() {
    let o = covkernel(&["mc", "--beta", "2", "--n", "4", "--m", "2", "--reps", "1000", "--format", "csv"]);
    let text = stdout(&o);
    let json = text.lines().next().unwrap().strip_prefix("# config: ").unwrap();
    let parsed: RunConfig = serde_json::from_str(json).unwrap();
    let args = ["covkernel", "mc", "--beta", "2", "--n", "4", "--m", "2", "--reps", "1000", "--format", "csv"];
    assert_eq!(parsed, parse_config(args, None).unwrap());
}

#[test]
fn exit_codes() {
    assert_eq!(covkernel(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(covkernel(&["kernel", "--id", "nope", "--x", "0", "--y", "0"]).status.code(), Some(2));
    assert_eq!(covkernel(&["mp", "--gamma", "0", "--xi", "1"]).status.code(), Some(2));
    assert_eq!(covkernel(&["mc", "--beta", "1", "--b", "2", "--n", "3", "--m", "1"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_covkernel"))
        .args(["exact", "--n", "200", "--m", "150", "--mu", "3", "--nu", "4"])
        .env("COVKERNEL_PRECISION_BITS", "80")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = covkernel(&["exact", "--n", "4", "--m", "2", "--method", "cauchy", "--nodes", "100000000"]);
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(covkernel(&["exact", "--dist", "real-rademacher", "--beta", "1", "--n", "40", "--m", "20"]).status.code(), Some(0));
}

#[test]
fn b_star_echo() {
    let o = covkernel(&["exact", "--beta", "2", "--b", "1.25", "--n", "3", "--m", "1", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["config"]["run"]["ensemble"]["b_star"], serde_json::json!(1.0));
}
