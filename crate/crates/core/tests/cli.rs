use std::process::Command;

use serde_json::Value;

fn ringcheck(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ringcheck")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn verify_headline_as_json() {
    let (code, out, _) = ringcheck(&["verify", "--identity", "thm37", "--algebra", "u3star(u3star(rat))", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["holds"], true);
    assert_eq!(v["dim"], 16);
    assert_eq!(v["generic_vars"], 64);
    assert_eq!(v["algebra"], "u3star(u3star(rat))");
    assert!(v["witness"].is_null());
}

#[test]
fn search_finds_commutator_product_witness() {
    let (code, out, _) = ringcheck(&["search", "--expr", "comm_product", "--algebra", "u3star(u3star(rat))"]);
    assert_eq!(code, 1);
    assert!(out.contains("witness:"));
    assert!(out.contains("nonzero at [E13⊗E13′]"), "{out}");
}

#[test]
fn prop31_over_full3() {
    let (code, _, _) = ringcheck(&["verify", "--identity", "prop31", "--algebra", "full:3"]);
    assert_eq!(code, 0);
}

#[test]
fn parallel_search_reports_the_same_witness() {
    let args = |jobs: &'static str| {
        ["search", "--expr", "domokos", "--algebra", "full:2", "--jobs", jobs, "--format", "json"]
    };
    let (c1, one, _) = ringcheck(&args("1"));
    let (c4, four, _) = ringcheck(&args("4"));
    assert_eq!((c1, c4), (1, 1));
    let strip = |s: &str| {
        let mut v: Value = serde_json::from_str(s).unwrap();
        v["elapsed_ms"] = Value::from(0);
        v
    };
    assert_eq!(strip(&one), strip(&four));
}

#[test]
fn probe_and_ck() {
    let (code, out, _) = ringcheck(&["probe-question", "--algebra", "full:2"]);
    assert_eq!(code, 0);
    assert!(out.contains("inapplicable"));
    let (code, _, _) = ringcheck(&["ck", "--k", "2", "--algebra", "grassmann:4"]);
    assert_eq!(code, 0);
    let (code, _, _) = ringcheck(&["ck", "--k", "2", "--algebra", "full:2"]);
    assert_eq!(code, 1);
}

#[test]
fn thm21_vacuous_case() {
    let (code, out, _) = ringcheck(&["thm21", "--algebra", "full:2"]);
    assert_eq!(code, 0);
    assert!(out.contains("implication vacuous"));
}

#[test]
fn selftest_with_bridges() {
    let (code, out, _) = ringcheck(&["selftest", "--bridges", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 7 * 7);
    assert!(items.iter().all(|r| r["holds"] == true));
}

#[test]
fn syntax_error_exit_code() {
    let (code, out, err) = ringcheck(&["verify", "--identity", "thm37", "--algebra", "u3star(grassmann:9"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("unbalanced parenthesis at column 18"));
    assert!(err.contains("r=9"));
}
