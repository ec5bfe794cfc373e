#![allow(dead_code)]

pub mod gen;

use std::path::PathBuf;

use extcalc_cli::{run, ExitCode, ENVELOPE_SCHEMA};
use serde_json::Value;

pub struct Case {
    pub id: &'static str,
    pub args: Vec<String>,
    pub exit: ExitCode,
}

pub fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

const BAD_BF: &str = r#"{"Q": 3, "default": {"Zp": 1, "ZpInf": 1, "Zploc": 1}, "exceptions": {}}"#;
const GOOD_BF: &str = r#"{"Q": 2, "default": {"Zp": 2, "ZpInf": 2, "Zploc": 2}, "exceptions": {"2": {"Zp": 3, "ZpInf": 2, "Zploc": 3}}}"#;
const CIRCLE: &str = r#"{"ranks": [1, 1], "boundaries": [[[0]]]}"#;
const PROJECTIVE_PLANE: &str = r#"{"ranks": [1, 1, 1], "boundaries": [[[0]], [[2]]]}"#;
const NOT_A_COMPLEX: &str = r#"{"ranks": [1, 1], "boundaries": [[[1]]]}"#;

macro_rules! case {
    ($id:literal, $exit:ident, [$($arg:expr),* $(,)?]) => {
        Case { id: $id, args: vec![$(String::from($arg)),*], exit: ExitCode::$exit }
    };
}

/// Success, domain-error and usage-error invocations of every subcommand.
pub fn cases() -> Vec<Case> {
    vec![
        case!("canon_ok", Ok, ["canon", "Z^2 + Z/12"]),
        case!("canon_sugar", Ok, ["canon", "Z[1/2] + Z_(~2) + Z_(3,5) + Z/2^oo + Z^0"]),
        case!("canon_syntax", Usage, ["canon", "Z + "]),
        case!("canon_not_prime", Usage, ["canon", "Z/4^oo"]),
        case!("canon_bad_modulus", Usage, ["canon", "Q + Z/1"]),
        case!("tensor_ok", Ok, ["tensor", "Z/12", "Z/18"]),
        case!("tensor_localized", Ok, ["tensor", "Z_(2) + Z/3^oo", "Z[1/3] + Z/2"]),
        case!("tensor_missing_arg", Usage, ["tensor", "Z"]),
        case!("tor_ok", Ok, ["tor", "Z/2^oo", "Z/4 + Z/3"]),
        case!("tor_trivial", Ok, ["tor", "Q", "Z/2^oo"]),
        case!("tor_syntax", Usage, ["tor", "Z/2^", "Z"]),
        case!("sigma_z12", Ok, ["sigma", "Z/12"]),
        case!("sigma_z", Ok, ["sigma", "Z"]),
        case!("sigma_mixed", Ok, ["sigma", "Z_(2) + Z/3^oo"]),
        case!("sigma_trivial", Domain, ["sigma", "0"]),
        case!("tau_ok", Ok, ["tau", "Q + Z/2^oo"]),
        case!("tau_trivial", Domain, ["tau", "Z^0"]),
        case!("snf_ok", Ok, ["snf", "[[2, 0], [0, 3]]"]),
        case!("snf_rect", Ok, ["snf", "[[-4, 6, 2], [6, -9, 12]]"]),
        case!("snf_ragged", Usage, ["snf", "[[1, 2], [3]]"]),
        case!("present_ok", Ok, ["present", "2", "[[1, 0]]"]),
        case!("present_free", Ok, ["present", "2", "[]"]),
        case!("present_mismatch", Domain, ["present", "2", "[[1, 2, 3]]"]),
        case!("present_bad_gens", Usage, ["present", "x", "[[1]]"]),
        case!("homology_circle", Ok, ["homology", CIRCLE]),
        case!("homology_rp2", Ok, ["homology", PROJECTIVE_PLANE]),
        case!("homology_malformed", Usage, ["homology", NOT_A_COMPLEX]),
        case!("homology_missing_file", Usage, ["homology", "no-such-file.json"]),
        case!("moore_ok", Ok, ["moore", "Z/2", "3"]),
        case!("moore_trivial", Domain, ["moore", "0", "1"]),
        case!("moore_degree_zero", Domain, ["moore", "Z", "0"]),
        case!("hcoef_ok", Ok, ["hcoef", "{1: Z/2}", "Z/2"]),
        case!("hcoef_trivial", Domain, ["hcoef", "{1: Z}", "0"]),
        case!("hcoef_duplicate", Usage, ["hcoef", "{1: Z, 1: Q}", "Z"]),
        case!("dim_inf", Ok, ["dim", "{1: Z/2}", "Q"]),
        case!("dim_ok", Ok, ["dim", "{1: Z/2}", "Z/2^oo"]),
        case!("dim_trivial", Domain, ["dim", "{1: Z}", "0"]),
        case!("cin_ok", Ok, ["cin", "{3: Z, 5: Q}"]),
        case!("cin_empty", Ok, ["cin", "{}"]),
        case!("cin_syntax", Usage, ["cin", "{1: Z"]),
        case!("smash_ok", Ok, ["smash", "{1: Z/2}", "{1: Z/2}"]),
        case!("smash_syntax", Usage, ["smash", "{1: Z}", "1: Z"]),
        case!("suspend_ok", Ok, ["suspend", "{1: Z/2, 2: Q}", "2"]),
        case!("suspend_negative", Usage, ["suspend", "{1: Z}", "-1"]),
        case!("pairing_ok", Ok, ["pairing", "{2: Z}", "{1: Z/2}"]),
        case!("pairing_syntax", Usage, ["pairing", "{2: Z}", "{1: R}"]),
        case!("vanish_ok", Ok, ["vanish", "{2: Z}", "{1: Z/2}", "2"]),
        case!("vanish_negative_m", Ok, ["vanish", "{2: Z}", "{1: Z/2}", "-1"]),
        case!("vanish_bad_m", Usage, ["vanish", "{2: Z}", "{1: Z/2}", "x"]),
        case!("leqgr_holds", Ok, ["leqgr", "{1: Z}", "{1: Z}"]),
        case!("leqgr_fails", Ok, ["leqgr", "{2: Z/2}", "{1: Z/2}"]),
        case!("leqgr_syntax", Usage, ["leqgr", "{1: Z}"]),
        case!("bfcheck_ok", Ok, ["bfcheck", GOOD_BF]),
        case!("bfcheck_violation", Domain, ["bfcheck", BAD_BF]),
        case!("bfcheck_file_violation", Domain, ["bfcheck", data("bad_bf.json")]),
        case!("bfcheck_bad_json", Usage, ["bfcheck", "{\"Q\": 1}"]),
        case!("bfdim_ok", Ok, ["bfdim", GOOD_BF, "Z/6"]),
        case!("bfdim_invalid", Domain, ["bfdim", BAD_BF, "Z"]),
        case!("bfdim_trivial", Domain, ["bfdim", GOOD_BF, "0"]),
        case!("covdim_ok", Ok, ["covdim", GOOD_BF]),
        case!("covdim_file", Ok, ["covdim", data("interval_bf.json")]),
        case!("covdim_invalid", Domain, ["covdim", BAD_BF]),
        case!("spae_ok", Ok, ["spae", GOOD_BF, "{3: Z}"]),
        case!("spae_fails", Ok, ["spae", GOOD_BF, "{2: Z/2}"]),
        case!("spae_invalid", Domain, ["spae", BAD_BF, "{1: Z}"]),
        case!("cohdimmin_ok", Ok, ["cohdimmin", GOOD_BF]),
        case!("cohdimmin_invalid", Domain, ["cohdimmin", BAD_BF]),
        case!("witness73_ok", Ok, ["witness73", "Q", "Z/2", "2"]),
        case!("witness73_not_separable", Domain, ["witness73", "Z", "Q", "1"]),
        case!("witness73_degree_zero", Domain, ["witness73", "Q", "Z/2", "0"]),
        case!("witness74_case_one", Ok, ["witness74", "Q + Z/2^oo", "Z_(2)", "2"]),
        case!("witness74_case_two", Ok, ["witness74", "Q + Z/2", "Z_(2)", "1"]),
        case!("witness74_outside_tau", Domain, ["witness74", "Q", "Z", "2"]),
        case!("witness74_not_applicable", Domain, ["witness74", "Z/2", "Z", "1"]),
        case!("spaek_circle", Ok, ["spaek", "--graded", "{1: Z}", "--group", "Z", "--n", "1"]),
        case!("spaek_fails", Ok, ["spaek", "--graded", "{1: Z/2, 2: Z/3}", "--group", "Z/2", "--n", "1"]),
        case!("spaek_disconnected", Domain, ["spaek", "--graded", "{0: Z}", "--group", "Z", "--n", "1"]),
        case!("spaek_missing_n", Usage, ["spaek", "--graded", "{1: Z}", "--group", "Z"]),
        case!("modp_ok", Ok, ["modp", "{1: Z_(2)}", "3"]),
        case!("modp_nontrivial", Ok, ["modp", "{1: Z_(2)}", "2"]),
        case!("modp_not_prime", Usage, ["modp", "{1: Z}", "4"]),
        case!("modp_disconnected", Domain, ["modp", "{0: Z}", "2"]),
        case!("classify_circle", Ok, ["classify", "{1: Z}"]),
        case!("classify_rational", Ok, ["classify", "{2: Q}"]),
        case!("classify_rp_infinity", Ok, ["classify", "{1: Z/2}"]),
        case!("classify_empty", Domain, ["classify", "{}"]),
        case!("compact_circle", Ok, ["compact", "{1: Z}"]),
        case!("compact_no", Ok, ["compact", "{2: Z}"]),
        case!("compact_disconnected", Domain, ["compact", "{0: Z}"]),
        case!("mooreem_circle", Ok, ["mooreem", "Z", "1"]),
        case!("mooreem_rational", Ok, ["mooreem", "Q", "2"]),
        case!("mooreem_sphere", Ok, ["mooreem", "Z", "2"]),
        case!("mooreem_degree_zero", Domain, ["mooreem", "Z", "0"]),
        case!("unknown_command", Usage, ["frobnicate"]),
        case!("no_command", Usage, []),
        case!("bad_flag", Usage, ["canon", "Z", "--frob"]),
    ]
}

pub fn schema() -> jsonschema::JSONSchema {
    let schema: Value = serde_json::from_str(ENVELOPE_SCHEMA).expect("schema is JSON");
    jsonschema::JSONSchema::compile(&schema).expect("schema compiles")
}

/// Problems with one case; empty when the case passes.
pub fn check_case(case: &Case, schema: &jsonschema::JSONSchema) -> Vec<String> {
    let mut problems = Vec::new();
    let text = run(case.args.clone());
    let mut json_args = case.args.clone();
    json_args.push("--json".into());
    let json = run(json_args);
    for (mode, o) in [("text", &text), ("json", &json)] {
        if o.exit != case.exit {
            problems.push(format!("{}: {mode} exit {:?}, expected {:?}", case.id, o.exit, case.exit));
        }
    }
    match serde_json::from_str::<Value>(&json.stdout) {
        Ok(v) => {
            if let Err(errors) = schema.validate(&v) {
                for e in errors {
                    problems.push(format!("{}: schema: {e} at {}", case.id, e.instance_path));
                }
            }
            if v["ok"].as_bool() != Some(case.exit == ExitCode::Ok) {
                problems.push(format!("{}: ok flag disagrees with exit code", case.id));
            }
        }
        Err(e) => problems.push(format!("{}: --json stdout is not JSON: {e}", case.id)),
    }
    if case.exit == ExitCode::Ok && !text.stderr.is_empty() {
        problems.push(format!("{}: stderr on success", case.id));
    }
    if case.exit != ExitCode::Ok && (!text.stdout.is_empty() || text.stderr.is_empty()) {
        problems.push(format!("{}: failure must report on stderr only", case.id));
    }
    problems
}

/// The golden transcript of a case: text run and JSON run.
pub fn transcript(case: &Case) -> String {
    let shown: Vec<String> = case.args.iter().map(|a| format!("'{a}'")).collect();
    let text = run(case.args.clone());
    let mut json_args = case.args.clone();
    json_args.push("--json".into());
    let json = run(json_args);
    format!(
        "$ extcalc {args}\nexit {}\n--- stdout\n{}--- stderr\n{}$ extcalc {args} --json\nexit {}\n{}",
        text.exit as i32,
        text.stdout,
        text.stderr,
        json.exit as i32,
        json.stdout,
        args = shown.join(" "),
    )
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}
