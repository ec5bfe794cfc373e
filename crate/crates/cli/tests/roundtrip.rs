mod common;

use common::gen;
use extcalc::{AdmissibleGroup, BocksteinFunction};
use extcalc_cli::{graded_text, group_text, parse_graded, parse_group, ENVELOPE_SCHEMA};
use proptest::prelude::*;

fn unicode(text: &str) -> String {
    text.replace("^oo", "^∞").replace(" + ", " ⊕ ")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn group_round_trip(seed in any::<u64>()) {
        let g = gen::group(&mut gen::rng(seed), 5);
        prop_assert_eq!(parse_group(&group_text(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_group(&unicode(&group_text(&g))).unwrap(), g);
    }

    #[test]
    fn graded_round_trip(seed in any::<u64>()) {
        let k = gen::graded(&mut gen::rng(seed), 0, 8, 5);
        prop_assert_eq!(parse_graded(&graded_text(&k)).unwrap(), k);
    }

    #[test]
    fn function_document_round_trip(seed in any::<u64>()) {
        let alpha = gen::function(&mut gen::rng(seed));
        prop_assert_eq!(BocksteinFunction::from_json(&alpha.to_json()).unwrap(), alpha);
    }

    #[test]
    fn parser_never_panics(text in "[ZQ0-9/^o_()~\\[\\],+{}: ]{0,24}") {
        let _ = parse_group(&text);
        let _ = parse_graded(&text);
    }
}

#[test]
fn unicode_output_parses_back() {
    let out = extcalc_cli::run(["canon", "Z + Z/2^oo + Z/9", "--unicode"]);
    let g = parse_group(out.stdout.trim()).unwrap();
    assert_eq!(g, parse_group("Z + Z/2^oo + Z/9").unwrap());
    assert_eq!(out.stdout, "Z ⊕ Z/9 ⊕ Z/2^∞\n");
}

#[test]
fn canon_prints_parseable_canonical_forms() {
    for text in ["Z/12 + Z/18", "Z_(2,3) + Z_(~3)", "Q^3 + Z/5^oo", "0"] {
        let g = parse_group(text).unwrap();
        let printed = extcalc_cli::run(["canon", text]).stdout;
        assert_eq!(parse_group(printed.trim()).unwrap(), g);
    }
    assert_eq!(group_text(&AdmissibleGroup::trivial()), "0");
}

#[test]
fn schema_rejects_malformed_envelopes() {
    let schema: serde_json::Value = serde_json::from_str(ENVELOPE_SCHEMA).unwrap();
    let schema = jsonschema::JSONSchema::compile(&schema).unwrap();
    let bad = [
        serde_json::json!({"schema_version": 1, "ok": true, "command": "cin"}),
        serde_json::json!({"schema_version": 1, "ok": true, "command": "cin", "result": {"value": 1}, "error": {"code": "x", "message": ""}}),
        serde_json::json!({"schema_version": 2, "ok": true, "command": "cin", "result": {"value": 1}}),
        serde_json::json!({"schema_version": 1, "ok": true, "command": "cin", "result": {"value": -1}}),
        serde_json::json!({"schema_version": 1, "ok": false, "command": "cin", "error": {"message": "m"}}),
        serde_json::json!({"schema_version": 1, "ok": true, "command": "nope", "result": {}}),
    ];
    for v in bad {
        assert!(!schema.is_valid(&v), "accepted {v}");
    }
    let good = serde_json::json!({"schema_version": 1, "ok": true, "command": "cin", "result": {"value": "inf"}});
    assert!(schema.is_valid(&good));
}
