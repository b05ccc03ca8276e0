mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use common::{corpus_dir, corpus_files};
use vclass::script::{parse, AmbientKind, Binding, Component, Directive, Statement, TwistsRef};

fn vclass(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_vclass"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn corpus_path(name: &str) -> String {
    corpus_dir().join(name).to_string_lossy().into_owned()
}

#[test]
fn every_corpus_script_succeeds() {
    for (name, _) in corpus_files() {
        let o = vclass(&[&corpus_path(&name)], None);
        assert!(o.status.success(), "{}: {}", name, String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn headline_numbers() {
    let o = vclass(&[&corpus_path("doublepoint.vc")], None);
    assert!(stdout(&o).lines().next().unwrap().ends_with("= 4*H^2"));
    let o = vclass(&[&corpus_path("conics.vc")], None);
    assert!(stdout(&o).trim_end().ends_with("= 31"));
}

#[test]
fn exit_codes() {
    let ok = "ambient P2 [x, y, z];\nlet X = scheme (x^2, x*y);\nprint vclass(X, twists(2, 2));\n";
    assert_eq!(vclass(&["-"], Some(ok)).status.code(), Some(0));

    let engine = "ambient P2 [x, y, z];\nlet X = scheme (x^2, x*y);\nprint segre(X);\nprint vclass(X, twists(3, 3));\n";
    let o = vclass(&["-"], Some(engine));
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
    // the directive before the failure is still reported
    assert!(stdout(&o).starts_with("segre(X) = H"));

    let syntax = "ambient P2 [x, y, z];\nprint segre(;\n";
    assert_eq!(vclass(&["-"], Some(syntax)).status.code(), Some(2));
    assert_eq!(vclass(&["/nonexistent/script.vc"], None).status.code(), Some(2));
}

#[test]
fn empty_script() {
    let o = vclass(&["-", "--format", "machine"], Some(""));
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["results"], serde_json::json!([]));
    assert!(vclass(&["-"], Some("# nothing\n")).stdout.is_empty());
}

#[test]
fn machine_output_is_reproducible() {
    for (name, _) in corpus_files() {
        let path = corpus_path(&name);
        let a = vclass(&[&path, "--format", "machine", "--seed", "7"], None);
        let b = vclass(&[&path, "--format", "machine", "--seed", "7"], None);
        let c = vclass(&[&path, "--format", "machine", "--seed", "7", "--parallel"], None);
        assert_eq!(a.stdout, b.stdout, "{}", name);
        assert_eq!(a.stdout, c.stdout, "{} parallel", name);
        let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
        assert!(v.get("error").is_none());
        assert!(v["results"].as_array().unwrap().iter().all(|r| r.get("elapsed_ms").is_none()));
    }
}

#[test]
fn timings_are_opt_in() {
    let o = vclass(&[&corpus_path("doublepoint.vc"), "--format", "machine", "--timings"], None);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["results"].as_array().unwrap().iter().all(|r| r["elapsed_ms"].is_u64()));
}

#[test]
fn corpus_round_trips_through_the_printer() {
    for (name, src) in corpus_files() {
        let s = parse(&src).unwrap();
        let printed = s.to_string();
        let again = parse(&printed).unwrap_or_else(|e| panic!("{}: {}\n{}", name, e, printed));
        assert_eq!(s, again, "{}", name);
        assert_eq!(printed, again.to_string());
    }
}

fn binding_form(b: &Binding) -> &'static str {
    match b {
        Binding::Scheme { inside: None, .. } => "scheme",
        Binding::Scheme { inside: Some(_), .. } => "scheme in",
        Binding::Twists(_) => "twists",
        Binding::Cone { .. } => "cone",
        Binding::Chart { .. } => "chart",
        Binding::Family { .. } => "family",
        Binding::Defvb { .. } => "defvb",
        Binding::Fiber { .. } => "fiber",
        Binding::Bundle { .. } => "bundle",
        Binding::Class(_) => "class",
    }
}

fn twists_form(t: &TwistsRef) -> &'static str {
    match t {
        TwistsRef::Named(_) => "named twists",
        TwistsRef::Inline(_) => "inline twists",
    }
}

fn directive_forms(d: &Directive) -> Vec<&'static str> {
    match d {
        Directive::Segre { inside: None, .. } => vec!["segre"],
        Directive::Segre { inside: Some(_), .. } => vec!["segre in"],
        Directive::Vclass { twists, .. } => vec!["vclass", twists_form(twists)],
        Directive::Excess { twists, .. } => vec!["excess", twists_form(twists)],
        Directive::Contribution { twists, component } => vec![
            "contribution",
            twists_form(twists),
            match component {
                Component::Point(_) => "point",
                Component::Subbundle { .. } => "subbundle",
            },
        ],
        Directive::Degrees(_) => vec!["degrees"],
        Directive::Bidegrees(_) => vec!["bidegrees"],
        Directive::Cone(_) => vec!["cone directive"],
        Directive::Dimdeg(_) => vec!["dimdeg"],
        Directive::Purity(_) => vec!["purity"],
        Directive::Flatlimit(_) => vec!["flatlimit"],
        Directive::Family(_) => vec!["family directive"],
        Directive::Eliminate { .. } => vec!["eliminate"],
        Directive::Residual { .. } => vec!["residual"],
        Directive::Chern(t) => vec!["chern", twists_form(t)],
        Directive::Blowup { .. } => vec!["blowup"],
    }
}

#[test]
fn corpus_covers_the_grammar() {
    let mut seen = BTreeSet::new();
    for (_, src) in corpus_files() {
        for s in parse(&src).unwrap().statements {
            match &s.node {
                Statement::Ambient(a) => {
                    seen.insert(if a.kind == AmbientKind::Projective { "projective" } else { "affine" });
                }
                Statement::Let { value, .. } => {
                    seen.insert(binding_form(value));
                }
                Statement::Print(d) => seen.extend(directive_forms(d)),
            }
        }
    }
    let all = [
        "projective", "affine", "scheme", "scheme in", "twists", "cone", "chart", "family", "defvb", "fiber", "bundle",
        "class", "named twists", "inline twists", "segre", "segre in", "vclass", "excess", "contribution", "point",
        "subbundle", "degrees", "bidegrees", "cone directive", "dimdeg", "purity", "flatlimit", "family directive",
        "eliminate", "residual", "chern", "blowup",
    ];
    let missing: Vec<_> = all.iter().filter(|f| !seen.contains(*f)).collect();
    assert!(missing.is_empty(), "not exercised by the corpus: {:?}", missing);
}
