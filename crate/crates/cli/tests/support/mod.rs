#![allow(dead_code)]

//! Golden fixtures: input documents and the commands run against them.

use std::path::PathBuf;

use hlr_cli::{run_command, Outcome};
use hlr_core::document::{AlgebraDocument, MorphismDocument};
use hlr_core::crossed::cm_to_cat1;
use hlr_core::library;
use hlr_core::Matrix;

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn updating() -> bool {
    std::env::var_os("UPDATE_GOLDEN").is_some_and(|v| v == "1")
}

fn cml(lambda: Matrix, source: &str, target: &str) -> AlgebraDocument {
    let get = |n: &str| match library::get(n) {
        Some(AlgebraDocument::CrossedModule(cm)) => cm,
        _ => panic!("{n}"),
    };
    AlgebraDocument::Morphism(MorphismDocument::CrossedL {
        lambda,
        source: get(source),
        target: get(target),
    })
}

pub fn input_documents() -> Vec<(&'static str, String)> {
    let mut docs = Vec::new();
    for name in [
        "crossed-ideal",
        "crossed-identity",
        "crossed-nilmod-twisted",
        "crossed-dxmod-ideal",
        "crossed-diag12",
        "action-ideal",
        "leibniz-dim2-hlr",
        "cat1-from-crossed-ideal",
        "morphism-identity-crossed-ideal",
        "morphism-twist-pair",
        "morphism-ideal-inclusion",
    ] {
        docs.push((name, library::get(name).unwrap().to_json()));
    }
    let Some(AlgebraDocument::CrossedModule(mut cm)) = library::get("crossed-ideal") else { panic!() };
    cm.boundary = Matrix::from_ints(&[&[0], &[1]]);
    docs.push(("crossed-ideal-cm1", AlgebraDocument::CrossedModule(cm).to_json()));
    let c = cm_to_cat1(&library::crossed_dxmod_ideal()).unwrap();
    docs.push(("cat1-dxmod-ideal", AlgebraDocument::Cat1(c).to_json()));
    let id1 = Matrix::identity(1);
    let incl = Matrix::from_ints(&[&[1], &[0]]);
    let morphisms = [
        ("cml-diag12-id", cml(Matrix::identity(2), "crossed-diag12", "crossed-diag12")),
        ("cml-diag12-alpha", cml(Matrix::from_ints(&[&[1, 0], &[0, 2]]), "crossed-diag12", "crossed-diag12")),
        ("cml-ideal-id", cml(id1, "crossed-ideal", "crossed-ideal")),
        ("cml-ideal-incl", cml(incl.clone(), "crossed-ideal", "crossed-identity")),
        ("cml-identity-id", cml(Matrix::identity(2), "crossed-identity", "crossed-identity")),
        ("cml-ideal-incl-broken", cml(Matrix::from_ints(&[&[0], &[1]]), "crossed-ideal", "crossed-identity")),
    ];
    for (name, doc) in morphisms {
        docs.push((name, doc.to_json()));
    }
    docs
}

pub fn f(name: &str) -> String {
    format!("tests/fixtures/{name}.json")
}

pub fn golden_commands() -> Vec<(&'static str, Vec<String>)> {
    let a = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    vec![
        ("validate-crossed-ideal", a(&["validate", &f("crossed-ideal")])),
        ("validate-crossed-ideal-cm1", a(&["validate", &f("crossed-ideal-cm1")])),
        ("validate-crossed-ideal-json", a(&["validate", &f("crossed-ideal-cm1"), "--format", "json"])),
        ("validate-action", a(&["validate", &f("action-ideal")])),
        ("validate-cat1", a(&["validate", &f("cat1-from-crossed-ideal")])),
        ("semidirect", a(&["semidirect", &f("action-ideal")])),
        ("to-cat1", a(&["to-cat1", &f("crossed-ideal")])),
        ("to-cm", a(&["to-cm", &f("cat1-from-crossed-ideal")])),
        ("roundtrip-ideal", a(&["roundtrip", &f("crossed-ideal")])),
        ("roundtrip-nilmod-twisted", a(&["roundtrip", &f("crossed-nilmod-twisted")])),
        ("roundtrip-json", a(&["roundtrip", &f("crossed-ideal"), "--format", "json"])),
        ("equalizer", a(&["equalizer", &f("cml-diag12-id"), &f("cml-diag12-alpha")])),
        ("coequalizer", a(&["coequalizer", &f("cml-diag12-id"), &f("cml-diag12-alpha")])),
        ("pullback", a(&["pullback", &f("cml-ideal-incl"), &f("cml-identity-id")])),
        ("pushout-printed", a(&["pushout", &f("cml-ideal-incl"), &f("cml-ideal-incl")])),
        ("pushout-signed", a(&["pushout", &f("cml-ideal-incl"), &f("cml-ideal-incl"), "--peiffer-sign", "signed"])),
        ("pushout-mixed", a(&["pushout", &f("cml-ideal-id"), &f("cml-ideal-incl")])),
        ("product", a(&["product", &f("crossed-diag12"), &f("crossed-diag12")])),
        ("coproduct-printed", a(&["coproduct", &f("crossed-identity"), &f("crossed-identity")])),
        (
            "coproduct-two-sided",
            a(&["coproduct", &f("crossed-identity"), &f("crossed-identity"), "--peiffer-sign", "two-sided"]),
        ),
        ("coproduct-ideal", a(&["coproduct", &f("crossed-ideal"), &f("crossed-identity")])),
        (
            "check-morphism",
            a(&[
                "check-morphism",
                &f("morphism-identity-crossed-ideal"),
                &f("morphism-ideal-inclusion"),
                &f("cml-ideal-incl"),
                &f("cml-ideal-incl-broken"),
            ]),
        ),
        ("check-morphism-twist-pair", a(&["check-morphism", &f("morphism-twist-pair")])),
        ("twist", a(&["twist", &f("leibniz-dim2-hlr"), "4,0;0,2", "1"])),
        ("twist-singular", a(&["twist", &f("leibniz-dim2-hlr"), "1,0;0,0", "1"])),
        ("examples", a(&["examples"])),
        ("examples-one", a(&["examples", "dual-numbers"])),
        ("strict-cat4", a(&["validate", &f("cat1-dxmod-ideal"), "--cat4-mode", "strict"])),
        ("reconstructed-cat4", a(&["validate", &f("cat1-dxmod-ideal")])),
        ("equalizer-summary", a(&["equalizer", &f("cml-diag12-id"), &f("cml-diag12-alpha"), "--output", OUT])),
        ("coequalizer-summary", a(&["coequalizer", &f("cml-diag12-id"), &f("cml-diag12-alpha"), "--output", OUT])),
        ("pullback-summary", a(&["pullback", &f("cml-ideal-incl"), &f("cml-identity-id"), "--output", OUT])),
        ("product-summary", a(&["product", &f("crossed-diag12"), &f("crossed-diag12"), "--output", OUT])),
        (
            "coproduct-summary",
            a(&["coproduct", &f("crossed-identity"), &f("crossed-identity"), "--peiffer-sign", "signed", "--output", OUT]),
        ),
        (
            "pushout-summary-json",
            a(&["pushout", &f("cml-ideal-id"), &f("cml-ideal-incl"), "--output", OUT, "--format", "json"]),
        ),
        ("twist-summary", a(&["twist", &f("leibniz-dim2-hlr"), "4,0;0,2", "1", "--output", OUT])),
        ("fuzz", a(&["fuzz", &f("crossed-ideal"), "--seed", "0", "--count", "12"])),
        ("fuzz-json", a(&["fuzz", &f("crossed-dxmod-ideal"), "--seed", "5", "--count", "3", "--format", "json"])),
        ("usage-error", a(&["validate"])),
        ("missing-file", a(&["validate", "tests/fixtures/absent.json"])),
        ("wrong-kind", a(&["to-cm", &f("crossed-ideal")])),
    ]
}

/// Placeholder for a scratch `--output` path; its contents join the golden text.
const OUT: &str = "{OUT}";

pub fn run(args: &[String]) -> Outcome {
    run_command(std::iter::once("hlr".to_string()).chain(args.iter().cloned()))
}

fn render(o: &Outcome) -> String {
    format!("exit: {}\n--- stdout\n{}--- stderr\n{}", o.code, o.stdout, o.stderr)
}

/// Runs a golden command and renders everything it produced.
pub fn run_golden(name: &str, args: &[String]) -> String {
    if !args.iter().any(|a| a == OUT) {
        return render(&run(args));
    }
    let path = std::env::temp_dir().join(format!("hlr-golden-{}-{name}.json", std::process::id()));
    let args: Vec<String> =
        args.iter().map(|a| if a == OUT { path.display().to_string() } else { a.clone() }).collect();
    let mut text = render(&run(&args));
    text.push_str("--- output\n");
    if let Ok(written) = std::fs::read_to_string(&path) {
        text.push_str(&written);
        std::fs::remove_file(&path).unwrap();
    }
    text
}

