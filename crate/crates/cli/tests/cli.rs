use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn skewgb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewgb"))
        .args(args)
        .env_remove("SKEWGB_MAX_PAIRS")
        .env_remove("SKEWGB_MAX_DEGREE")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("skewgb-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn basis(file: &Path, extra: &[&str]) -> Vec<String> {
    let mut args = vec!["--json", "gb", file.to_str().unwrap()];
    args.extend_from_slice(extra);
    let out = skewgb(&args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    json(&out)["basis"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn printed_basis_parses_back_to_itself() {
    for (extra, tag) in [
        (&["--order", "grlex"][..], "grlex"),
        (&["--weight", "1,1,1,3"][..], "weight"),
        (&["--order", "lex"][..], "lex"),
    ] {
        let first = basis(&fixture("example_b.txt"), extra);
        let src = format!("ring: weyl 2\nideal: {}\n", first.join("; "));
        let again = basis(&temp_file(&format!("round_{tag}.txt"), &src), extra);
        assert_eq!(first, again, "{tag}");
    }
}

#[test]
fn weighted_basis_of_example_b() {
    let b = basis(&fixture("example_b.txt"), &["--weight", "1,1,1,3"]);
    assert_eq!(b, ["y2 - y1^2", "x2*y1^2 + 1/2*x1*y1"]);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["fan", "fixtures/example_b.txt"][..],
        &["charvar", "fixtures/example_b.txt"][..],
        &["--json", "universal", "fixtures/parabola.txt"][..],
        &["verify", "--corpus", "fixtures/corpus"][..],
    ] {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_skewgb"))
                .current_dir(env!("CARGO_MANIFEST_DIR"))
                .args(args)
                .output()
                .unwrap()
        };
        let (a, b) = (run(), run());
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn text_reports() {
    let out = skewgb(&["charvar", fixture("example_a.txt").to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("characteristic variety: empty"), "{text}");
    assert!(text.contains("VACUOUS-PASS"), "{text}");

    let out = skewgb(&["pr", fixture("sl2.txt").to_str().unwrap()]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "v1 + v3 > v2, v2 > 0\n");

    let out = skewgb(&["gkdim", fixture("left_y1.txt").to_str().unwrap(), "--weight", "1,1"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1\n");
}

#[test]
fn parse_errors_exit_3() {
    let bad = temp_file("juxtaposed.txt", "ring: weyl 1\nideal: 2x1 + 1\n");
    let out = skewgb(&["gb", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("implicit multiplication"));

    let out = skewgb(&["charvar", fixture("example_b.txt").to_str().unwrap(), "--weight", "1,2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn region_errors_exit_4() {
    let b = fixture("example_b.txt");
    let out = skewgb(&["charvar", b.to_str().unwrap(), "--weight", "0,0,0,0"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("polynomial region"));
    let out = skewgb(&["gkdim", b.to_str().unwrap(), "--weight", "2,2,-1,-1"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn budget_exhaustion_exits_5() {
    let out = Command::new(env!("CARGO_BIN_EXE_skewgb"))
        .args(["gb", fixture("example_b.txt").to_str().unwrap()])
        .env("SKEWGB_MAX_PAIRS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn corpus_verifies() {
    let out = skewgb(&["verify", "--corpus", fixture("corpus").to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.trim_end().ends_with("0 failed"), "{text}");
}

#[test]
fn failing_bound_exits_6() {
    let out = skewgb(&["charvar", fixture("example_b.txt").to_str().unwrap(), "--bound", "3"]);
    assert_eq!(out.status.code(), Some(6));
}
