use std::path::PathBuf;
use std::process::Command;

use flagcomp::cli::{parse_spec, Spec};
use flagcomp::classify::Component;
use flagcomp::parabolic::Marking;
use flagcomp::SimpleType;
use proptest::prelude::*;

fn flagcomp(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_flagcomp"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().expect("exited normally"),
    )
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn golden_outputs() {
    let cases: &[(&[&str], &str, i32)] = &[
        (&["decide", "G2[1]", "--format", "json"], "decide_g2_1.json", 0),
        (&["decide", "E8[1]", "--format", "json"], "decide_e8_1.json", 3),
        (&["explain", "A2[1]", "--format", "json"], "explain_a2_1.json", 0),
        (&["explain", "A2[1]"], "explain_a2_1.txt", 0),
        (&["decide", "A2[1] x C3[1] x E8[1]"], "decide_product.txt", 3),
        (
            &["enumerate", "--max-rank", "8", "--commutative"],
            "enumerate_commutative_8.txt",
            0,
        ),
    ];
    for (args, file, code) in cases {
        let (first, _, c1) = flagcomp(args);
        let (second, _, c2) = flagcomp(args);
        assert_eq!(first, second, "{args:?} is not byte-stable");
        assert_eq!(first, golden(file), "{args:?}");
        assert_eq!((c1, c2), (*code, *code), "{args:?}");
    }
}

#[test]
fn decide_json_schema() {
    let (out, _, code) = flagcomp(&["decide", "A2[1] x C3[3]", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["admits", "components", "dimension", "spec"]);
    assert_eq!(v["dimension"], 8);
    let comp = &v["components"][1];
    for key in ["family", "rank", "marking", "commutative", "exceptional", "dimension"] {
        assert!(comp.get(key).is_some(), "missing {key}");
    }
    assert_eq!(comp["family"], "C");
    assert_eq!(comp["marking"], serde_json::json!([3]));
    assert!(comp["exceptional"].is_null());
}

#[test]
fn exit_codes() {
    assert_eq!(flagcomp(&["decide", "G2[1]"]).2, 0);
    assert_eq!(flagcomp(&["decide", "E8[1]"]).2, 3);
    assert_eq!(flagcomp(&["decide", "A3[1,2]"]).2, 3);
    assert_eq!(flagcomp(&["decide", "B3[]"]).2, 0);
    assert_eq!(flagcomp(&["explain", "E7[1]"]).2, 3);

    for bad in [
        &["decide", "D2[1]"][..],
        &["decide", "A3[1,1]"],
        &["decide", "Z3[1]"],
        &["decide", "A3[4]"],
        &["decide", "A3[1"],
        &["decide", ""],
        &["decide", "\u{1F600}"],
        &["decide"],
        &["explain", "A2[1] x A1[1]"],
        &["enumerate", "--max-rank", "1"],
        &["enumerate", "--max-rank", "3", "--commutative", "--exceptional"],
        &["enumerate"],
        &["bogus"],
        &["dump-constants", "H3"],
        &[],
    ] {
        let (_, err, code) = flagcomp(bad);
        assert!(code >= 64, "{bad:?} exited with {code}");
        assert!(!err.is_empty(), "{bad:?} printed no diagnostic");
        assert!(!err.contains("panicked"), "{bad:?}: {err}");
    }
}

#[test]
fn parse_errors_name_canonical_types() {
    let (_, err, _) = flagcomp(&["decide", "D2[1]"]);
    assert!(err.contains("A1xA1"), "{err}");
    let (_, err, _) = flagcomp(&["decide", "C1[1]"]);
    assert!(err.contains("A1"), "{err}");
    let (_, err, _) = flagcomp(&["decide", "A3[1] x F5[1]"]);
    assert!(err.contains("at byte 8") && err.contains("r = 4"), "{err}");
}

#[test]
fn decide_text_mentions_covering_pair() {
    let (out, _, code) = flagcomp(&["decide", "G2[1]"]);
    assert_eq!(code, 0);
    assert!(out.contains("exceptional; covering pair SO(7)/P_1 = B3[1]; n = 5"), "{out}");
    assert!(out.ends_with("admits: yes\n"));
}

#[test]
fn enumerate_exceptional_rank_three() {
    let (out, _, code) = flagcomp(&["enumerate", "--max-rank", "3", "--exceptional", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let names: Vec<String> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| format!("{}{}[{}]", r["family"].as_str().unwrap(), r["rank"], r["index"]))
        .collect();
    assert_eq!(names, ["B2[2]", "B3[3]", "C2[1]", "C3[1]", "G2[1]"]);
    assert_eq!(v["filter"], "exceptional");
}

#[test]
fn dump_constants_is_stable() {
    let (a, _, code) = flagcomp(&["dump-constants", "G2"]);
    assert_eq!(code, 0);
    assert_eq!(a, flagcomp(&["dump-constants", "g2"]).0);
    let rows = a.lines().filter(|l| !l.starts_with('#')).count();
    // Ordered pairs of G2 roots with a root sum.
    assert_eq!(rows, 60);
}

fn arb_spec() -> impl Strategy<Value = Spec> {
    let types = SimpleType::all_up_to(8);
    let comp = (0..types.len(), any::<u32>()).prop_map(move |(k, mask)| {
        let t = types[k];
        Component::new(t, Marking::from_mask(t.rank(), mask & ((1 << t.rank()) - 1))).unwrap()
    });
    prop::collection::vec(comp, 1..5).prop_map(Spec)
}

proptest! {
    #[test]
    fn spec_round_trips(spec in arb_spec()) {
        let printed = spec.to_string();
        prop_assert_eq!(parse_spec(&printed).unwrap(), spec.clone());
        let squashed: String = printed.chars().filter(|c| !c.is_whitespace()).collect();
        prop_assert_eq!(parse_spec(&squashed.to_lowercase()).unwrap(), spec);
    }

    #[test]
    fn parser_never_panics(text in "[A-Ga-gxX0-9\\[\\], ]{0,24}") {
        let _ = parse_spec(&text);
    }
}
