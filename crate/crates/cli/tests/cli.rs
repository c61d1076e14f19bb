use std::process::{Command, Output};

use serde_json::Value;

fn intdiff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_intdiff"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = intdiff(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

fn code(args: &[&str]) -> Option<i32> {
    intdiff(args).status.code()
}

fn golden(name: &str) -> Value {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["norm", "I^2*d^2"]), "1 - e(0,0) - e(1,1)");
    assert_eq!(stdout(&["fdeg", "d^3"]), "-1");
    assert_eq!(code(&["verify", "--suite", "kernel", "--n", "2"]), Some(0));
}

#[test]
fn norm_json_matches_golden() {
    let out = stdout(&[
        "--format",
        "json",
        "norm",
        "I^2*d^2 + 1/2*x - 3*H*d^2 + e(1,2)*I",
    ]);
    assert_eq!(
        serde_json::from_str::<Value>(&out).unwrap(),
        golden("norm.json")
    );
    let out = stdout(&[
        "norm",
        "--n",
        "2",
        "--format",
        "json",
        "I1*e(0,1)_2 - 2/3*H2",
    ]);
    assert_eq!(
        serde_json::from_str::<Value>(&out).unwrap(),
        golden("norm_rank2.json")
    );
}

#[test]
fn norm_output_reparses() {
    for (n, e) in [
        ("1", "(x + d)^3 - I*e(2,0)*H"),
        ("2", "(x1 + I2)*(d1 - H2)^2 + e(1,1)_1"),
    ] {
        let once = stdout(&["--n", n, "norm", e]);
        assert_eq!(stdout(&["--n", n, "norm", &once]), once);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["norm", "x*"]), Some(1));
    assert_eq!(code(&["norm", "x3", "--n", "2"]), Some(1));
    assert_eq!(code(&["bogus"]), Some(1));
    assert_eq!(code(&["norm"]), Some(1));
    assert_eq!(code(&["--format", "yaml", "norm", "x"]), Some(1));
    assert_eq!(code(&["fdeg", "--n", "2", "x1"]), Some(1));
    assert_eq!(code(&["dims", "--gen", "1", "--max", "99"]), Some(1));
    assert_eq!(code(&["verify", "--suite", "nope"]), Some(1));
    assert_eq!(code(&["--help"]), Some(0));
    assert_eq!(code(&["--version"]), Some(0));
}

#[test]
fn subcommands() {
    assert_eq!(stdout(&["apply", "d^2 + x", "x^3"]), "6*x + x^4");
    assert_eq!(stdout(&["apply", "--n", "2", "I1*d2", "x2^2"]), "2*x1*x2");
    assert_eq!(
        stdout(&["split", "I^2*H^2 + e(3,1)"]),
        "A: I^2*H + I^2*H^2  (= x^2)\nF: e(3,1)\nL: -I^2*H"
    );
    assert_eq!(
        stdout(&["socle", "--n", "2", "I1*I2"]),
        "level: 2\ncensus: LL"
    );
    assert_eq!(stdout(&["socle", "0"]), "level: none\ncensus:");
    assert_eq!(stdout(&["quot", "I + e(0,0)"]), "d^-1");
    assert_eq!(stdout(&["matrix", "--size", "3", "I*d"]).lines().count(), 3);
    let m: Value =
        serde_json::from_str(&stdout(&["matrix", "--size", "3", "--format", "json", "x"])).unwrap();
    assert_eq!(
        m,
        serde_json::json!([
            ["0/1", "0/1", "0/1"],
            ["1/1", "0/1", "0/1"],
            ["0/1", "2/1", "0/1"]
        ])
    );
    assert_eq!(
        stdout(&["dims", "--gen", "e(0,0)", "--max", "5"]),
        "dims: 1 3 6 10 15 21\ndegree 2 leading difference 1 stable from 2"
    );
    let dims: Value = serde_json::from_str(&stdout(&[
        "--format", "json", "dims", "--gen", "1,I", "--max", "4",
    ]))
    .unwrap();
    assert_eq!(dims["dims"], serde_json::json!([2, 7, 15, 26, 40]));
}

#[test]
fn verify_is_deterministic() {
    let args = [
        "verify",
        "--suite",
        "oracle",
        "--samples",
        "20",
        "--seed",
        "5",
        "--format",
        "json",
    ];
    let strip = |s: String| {
        let mut v: Value = serde_json::from_str(&s).unwrap();
        for r in v.as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("elapsed");
        }
        v
    };
    let a = strip(stdout(&args));
    assert_eq!(a, strip(stdout(&args)));
    assert!(a.as_array().unwrap().iter().all(|r| r["passed"] == true));
}
