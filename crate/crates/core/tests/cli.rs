mod common;

use common::{check_schema, run_cli, schema, SCHEMAS};
use serde_json::json;

#[test]
fn schemas_are_valid_documents() {
    for name in SCHEMAS {
        jsonschema::meta::validate(&schema(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn classify_root_of_ten() {
    let out = run_cli(&["--json", "classify", "sqrt(10)"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v = check_schema("classify", out.stdout.trim()).unwrap();
    assert_eq!(v["class"], "rational_power_only");
    assert_eq!(v["rank"], 1);
    assert_eq!(v["approx"], "3.16227766017");
}

#[test]
fn classify_binomial_reports_conditions() {
    let out = run_cli(&["--json", "classify", "2 + sqrt(3)"]);
    assert_eq!(out.code, 0);
    let v = check_schema("classify", out.stdout.trim()).unwrap();
    assert_eq!(v["class"], "binomial");
    assert_eq!(v["species"], 1);
    assert_eq!(
        v["conditions"],
        json!({"remainder_commensurable": true, "greater_rational": true, "lesser_rational": false})
    );
}

#[test]
fn classify_text_output() {
    let out = run_cli(&["classify", "sqrt(sqrt(2))"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("canonical: sqrt(sqrt(2))"), "{}", out.stdout);
    assert!(out.stdout.contains("rank:      2"), "{}", out.stdout);
}

#[test]
fn not_representable_exits_one() {
    let out = run_cli(&["sqrt", "1 + sqrt(2)"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("not representable: denesting discriminant is not a rational square"), "{}", out.stderr);
}

#[test]
fn domain_errors_exit_one() {
    for args in [
        &["classify", "1 - 2"][..],
        &["commensurable", "0", "sqrt(2)"],
        &["sqrt", "0 - 4"],
        &["ranks", "--base", "4", "--count", "3"],
        &["binomial", "gen", "--type", "6", "--n", "2"],
        &["classify", "1 / (sqrt(2) - sqrt(2))"],
    ] {
        let out = run_cli(args);
        assert_eq!(out.code, 1, "{args:?}: {}", out.stderr);
        assert!(out.stderr.starts_with("error: "), "{args:?}: {}", out.stderr);
    }
}

#[test]
fn syntax_errors_exit_two_with_position() {
    let out = run_cli(&["classify", "sqrt(2"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("syntax error at position 6: expected \")\""), "{}", out.stderr);
    for bad in ["", "2 +", "-1", "sqrt 2", "2 $ 3", "1 / 0"] {
        let out = run_cli(&["classify", bad]);
        assert_eq!(out.code, 2, "{bad:?}: {}", out.stderr);
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &[][..],
        &["frobnicate"],
        &["verify", "--prop", "x99"],
        &["binomial", "gen", "--type", "7", "--n", "1"],
        &["ranks", "--base", "two", "--count", "3"],
    ] {
        assert_eq!(run_cli(args).code, 2, "{args:?}");
    }
}

#[test]
fn commensurable_modes() {
    let out = run_cli(&["--json", "commensurable", "sqrt(8)", "sqrt(2)"]);
    let v = check_schema("commensurable", out.stdout.trim()).unwrap();
    assert_eq!(v["commensurable"], true);
    assert_eq!(v["mode"], "length");
    let out = run_cli(&["commensurable", "sqrt(3)", "sqrt(2)"]);
    assert_eq!(out.stdout.trim(), "incommensurable in length");
    let out = run_cli(&["commensurable", "sqrt(3)", "sqrt(2)", "--power"]);
    assert_eq!(out.stdout.trim(), "commensurable in power");
}

#[test]
fn sqrt_denests() {
    let out = run_cli(&["--json", "sqrt", "3 + 2 * sqrt(2)"]);
    assert_eq!(out.code, 0);
    let v = check_schema("sqrt", out.stdout.trim()).unwrap();
    assert_eq!(v["canonical"], "1 + sqrt(2)");
}

#[test]
fn ranks_ladder() {
    let out = run_cli(&["--json", "ranks", "--base", "2", "--count", "3"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v = check_schema("ranks", out.stdout.trim()).unwrap();
    let lines: Vec<_> = v["terms"].as_array().unwrap().iter().map(|t| t["line"].as_str().unwrap().to_owned()).collect();
    assert_eq!(lines, ["sqrt(2)", "sqrt(sqrt(8))", "sqrt(sqrt(sqrt(128)))"]);
    let ranks: Vec<_> = v["terms"].as_array().unwrap().iter().map(|t| t["rank"].as_u64().unwrap()).collect();
    assert_eq!(ranks, [1, 2, 3]);
}

#[test]
fn binomial_gen() {
    let out = run_cli(&["--json", "binomial", "gen", "--type", "1", "--n", "2"]);
    assert_eq!(out.code, 0);
    let v = check_schema("binomial", out.stdout.trim()).unwrap();
    assert_eq!(v["greater_square"], "4");
    assert_eq!(v["lesser_square"], "3");
    assert_eq!(v["expression"], "2 + sqrt(3)");
    let out = run_cli(&["--json", "binomial", "gen", "--type", "5", "--n", "3/2", "--apotome"]);
    let v = check_schema("binomial", out.stdout.trim()).unwrap();
    assert_eq!(v["kind"], "apotome");
}

#[test]
fn verify_report() {
    let out = run_cli(&["--json", "verify", "--prop", "x17", "--trials", "500", "--seed", "7"]);
    assert_eq!(out.code, 0);
    let v = check_schema("verify", out.stdout.trim()).unwrap();
    assert_eq!(v, json!({"proposition": "x17", "attempted": 500, "passed": 500, "seed": 7, "counterexample": null}));
    let again = run_cli(&["--json", "verify", "--prop", "x17", "--trials", "500", "--seed", "7"]);
    assert_eq!(again.stdout, out.stdout);
    let zero = run_cli(&["verify", "--prop", "x21", "--trials", "0"]);
    assert_eq!(zero.code, 1);
}
