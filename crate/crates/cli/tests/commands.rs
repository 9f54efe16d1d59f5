use geonum_cli::{parse_args, run, EXIT_INPUT, EXIT_OK};

fn cli(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["geonum"];
    argv.extend_from_slice(args);
    match parse_args(argv, 12) {
        Ok((cfg, input)) => run(&cfg, &input),
        Err(e) => e,
    }
}

#[test]
fn classify_g32() {
    assert_eq!(cli(&["classify", "--p", "3", "--q", "2"]), (EXIT_OK, "M4(2R)\n".into()));
    assert_eq!(cli(&["classify", "--p", "0", "--q", "4"]).1, "M2(Q)\n");
    assert_eq!(cli(&["classify", "--p", "2", "--q", "1", "--complex"]).1, "M2(2C)\n");
}

#[test]
fn eval_reverse() {
    let (code, out) = cli(&["eval", "--p", "1", "--q", "2", "rev(1+2*e1-3*f12)"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "1 + 2*e1 + 3*f12\n");
    assert_eq!(cli(&["eval", "--p", "2", "-e1*e2"]).1, "-1*e12\n");
    assert_eq!(cli(&["eval", "--q", "1", "--complex", "i*f1"]).1, "1*i*f1\n");
}

#[test]
fn eval_errors_exit_1() {
    let (code, out) = cli(&["eval", "--p", "1", "--q", "1", "e1*f9"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(out.contains("1:4:"), "{out}");
    assert_eq!(cli(&["eval", "--p", "1", "e1 +"]).0, EXIT_INPUT);
    assert_eq!(cli(&["eval", "--p", "20", "1"]).0, EXIT_INPUT);
    assert_eq!(cli(&["frobnicate"]).0, EXIT_INPUT);
    assert_eq!(cli(&["verify", "--samples", "0"]).0, EXIT_INPUT);
    assert_eq!(cli(&["iso", "--kind", "swap", "--p", "0", "--q", "0"]).0, EXIT_INPUT);
}

#[test]
fn dim_cap_is_configurable() {
    let args = ["geonum", "classify", "--p", "9", "--q", "5"];
    let (cfg, input) = parse_args(args, 14).unwrap();
    assert_eq!(run(&cfg, &input), (EXIT_OK, "M64(Q)\n".into()));
    let (cfg, input) = parse_args(args, 12).unwrap();
    assert_eq!(run(&cfg, &input).0, EXIT_INPUT);
}

#[test]
fn verify_g22_passes() {
    let (code, out) = cli(&["verify", "--p", "2", "--q", "2", "--samples", "50", "--seed", "7"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("all checks passed"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn deterministic_output() {
    for args in [
        &["verify", "--p", "1", "--q", "2", "--samples", "10", "--seed", "3", "--json"][..],
        &["iso", "--kind", "shift4", "--p", "4", "--q", "1", "--samples", "5", "--seed", "9"][..],
        &["rep", "--p", "3", "--q", "1", "1+e1*f1-2*e123"][..],
    ] {
        assert_eq!(cli(args), cli(args));
    }
}

#[test]
fn iso_reports() {
    let (code, out) = cli(&["iso", "--kind", "evensub", "--p", "1", "--q", "1", "--samples", "5"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("PASS even subalgebra"));
    let (code, out) = cli(&["iso", "--kind", "swap", "--p", "2", "--q", "1", "--json", "--samples", "5"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for check in v.as_array().unwrap() {
        assert_eq!(check["status"], "pass");
        assert!(check["witness"].is_null());
    }
}

#[test]
fn rep_outputs() {
    let (code, out) = cli(&["rep", "--q", "2", "f1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("[ i ]\n"), "{out}");
    let (_, out) = cli(&["rep", "--k", "1", "e1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ring"], "R");
    assert_eq!(v["size"], 2);
    assert_eq!(v["entries"], serde_json::json!([[["0"], ["1"]], [["1"], ["0"]]]));
    let (_, out) = cli(&["rep", "--p", "3", "--q", "2", "1"]);
    assert!(out.contains("M4(2R)"), "{out}");
    assert_eq!(cli(&["rep", "--k", "2", "--p", "1", "--q", "1", "e1"]).0, EXIT_INPUT);
}

#[test]
fn tables_and_clock() {
    let (code, out) = cli(&["table"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("M4(2R)"));
    let (_, out) = cli(&["table", "table1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 36);
    let (_, out) = cli(&["table", "table4"]);
    assert!(out.contains("M8(2C)"));
    let (_, out) = cli(&["clock", "--p", "3", "--q", "2"]);
    assert!(out.contains("M4(2R)"), "{out}");
    let (_, out) = cli(&["clock", "--p", "3", "--q", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["steps"].as_array().unwrap().len(), 5);
}
