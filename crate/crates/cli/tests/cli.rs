use std::process::{Command, Output};

use serde_json::Value;
use surreal::SignSequence;

fn surreal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_surreal"))
        .args(args)
        .env_remove("SURREAL_MEMO_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(surreal(args).stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    surreal(args).status.code().unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn listed_examples() {
    assert_eq!(stdout(&["signs", "5/8"]), "+-+-\n");
    assert_eq!(stdout(&["nim", "mul", "2", "2"]), "3\n");
    let out = surreal(&["recip", "3", "--max-signs", "7"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("prefix +--+-+-\nenclosure ["), "{text}");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn conversions_and_arithmetic() {
    assert_eq!(stdout(&["dyadic", "+-+-"]), "5/8\n");
    assert_eq!(stdout(&["add", "1/2", "-1/4"]), "1/4\n");
    assert_eq!(stdout(&["mul", "--genetic", "3/4", "-+"]), "-3/8\n");
    assert_eq!(stdout(&["neg", "-1/2"]), "1/2\n");
    assert_eq!(stdout(&["eval", "concat_right(1)", "1/2"]), "3/4\n");
    assert_eq!(stdout(&["nim", "irreducible"]), "x^3 + 2\n");
    assert_eq!(stdout(&["nim", "subfield", "256"]), "true\n");
    assert_eq!(stdout(&["nim", "subfield", "8"]), "false\n");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["signs", "1/2"]), 0);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["signs", "1/3"]), 1);
    assert_eq!(code(&["recip", "0"]), 2);
    assert_eq!(code(&["sqrt", "-1"]), 2);
    assert_eq!(code(&["nim", "inv", "0"]), 2);
    assert_eq!(code(&["eval", "no_such_builtin", "1"]), 2);
    assert_eq!(code(&["root", "--poly", "[-2,0,1]"]), 2);
    assert_eq!(code(&["sqrt", "2", "--max-signs", "10"]), 3);
    assert_eq!(code(&["sqrt", "9/4"]), 0);
    assert_eq!(code(&["nim", "closure", "4", "--cap", "8"]), 3);
}

#[test]
fn memo_cap_from_environment() {
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_surreal"))
            .args(["mul", "--genetic", "+-+-+", "-+-+"])
            .env("SURREAL_MEMO_CAP", cap)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(run("4"), Some(3));
    assert_eq!(run("many"), Some(1));
    assert_eq!(run("100000"), Some(0));
}

#[test]
fn repeated_invocations_are_byte_identical() {
    let cases: &[&[&str]] = &[
        &["--json", "lab", "sup-escape", "--caps", "2..10"],
        &[
            "--json",
            "lab",
            "census",
            "--f",
            "floor_minus_x",
            "--d",
            "-1/2",
            "--birthday",
            "5",
        ],
        &[
            "--json",
            "--seedless",
            "lab",
            "initiality",
            "--seed",
            "tree:2",
            "--ops",
            "add",
            "--cap",
            "5",
        ],
        &[
            "--json",
            "root",
            "--poly",
            "[-2,0,1]",
            "--interval",
            "0,2",
            "--method",
            "genetic",
        ],
        &["nim", "table", "--op", "mul", "--size", "16"],
    ];
    for args in cases {
        let a = surreal(args);
        let b = surreal(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn json_values_round_trip() {
    for x in SignSequence::all_up_to(5) {
        let literal = x.to_dyadic().to_string();
        let v = json(&["--json", "signs", &literal]);
        let signs: SignSequence = v["signs"].as_str().unwrap().parse().unwrap();
        let dyadic: SignSequence = v["dyadic"].as_str().unwrap().parse().unwrap();
        assert_eq!(signs, x);
        assert_eq!(dyadic, x);
        assert_eq!(v["birthday"].as_u64().unwrap() as usize, x.birthday());
    }
}

#[test]
fn json_root_schema() {
    let v = json(&["--json", "recip", "3", "--max-signs", "7"]);
    assert_eq!(v["kind"], "prefix");
    assert_eq!(v["signs"], "+--+-+-");
    let low: SignSequence = v["enclosure"]["low"].as_str().unwrap().parse().unwrap();
    let high: SignSequence = v["enclosure"]["high"].as_str().unwrap().parse().unwrap();
    let third = |x: &SignSequence| x.to_dyadic().to_f64() * 3.0;
    assert!(third(&low) < 1.0 && 1.0 < third(&high));
    let v = json(&["--json", "root", "--poly", "[-1,2]", "--interval", "0,1"]);
    assert_eq!(v["kind"], "exact");
    assert_eq!(v["dyadic"], "1/2");
    assert_eq!(v["enclosure"]["low"], v["enclosure"]["high"]);
}

#[test]
fn json_reports_share_one_shape() {
    let reports = [
        json(&["--json", "lab", "concat-seq", "--n", "4"]),
        json(&["--json", "lab", "sup-escape"]),
        json(&[
            "--json",
            "lab",
            "census",
            "--f",
            "concat_right(1)",
            "--d",
            "2/3",
            "--birthday",
            "4",
        ]),
        json(&["--json", "lab", "initiality", "--seed", "0,1", "--cap", "4"]),
    ];
    for r in &reports {
        let obj = r.as_object().unwrap();
        let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        keys.sort();
        assert_eq!(keys, ["name", "parameters", "verdict", "witnesses"]);
    }
    assert_eq!(
        reports[1]["verdict"],
        "strictly increasing, no stabilization"
    );
    assert_eq!(reports[1]["witnesses"].as_array().unwrap().len(), 8);
}
