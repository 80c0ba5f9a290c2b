use std::io::Write;
use std::process::{Command, Output, Stdio};

use upic_cli::{analyze_str, AbelianGroup, Overrides, ReportDocument};

fn upic(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_upic"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn upic");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn report(input: &str) -> ReportDocument {
    let out = upic(&["analyze", "-"], input);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn group(free_rank: usize, torsion: &[u64]) -> AbelianGroup {
    AbelianGroup { free_rank, torsion: torsion.to_vec() }
}

const PGL2: &str = r#"{"group":{"named":"PGL","n":2},"galois":{"named":"trivial"}}"#;
const SL3: &str = r#"{"group":{"named":"SL","n":3},"galois":{"named":"trivial"}}"#;
const KLEIN: &str = r#"{"group":{"named":"norm_one_torus"},"galois":{"named":"klein"}}"#;

#[test]
fn pgl2_picard_group() {
    let r = report(PGL2);
    assert_eq!(r.pic, group(0, &[2]));
    assert_eq!(r.pic_bar, group(0, &[2]));
    assert_eq!(r.level_note, "computed at level Γ");
}

#[test]
fn sl3_everything_vanishes() {
    let r = report(SL3);
    let zero = group(0, &[]);
    assert_eq!(r.u_rank, 0);
    for g in [&r.pi1, &r.pic_bar, &r.pic, &r.br_a] {
        assert_eq!(*g, zero);
    }
    assert_eq!(r.sha1_omega, Some(zero.clone()));
    assert_eq!(r.sha2_omega, Some(zero));
}

#[test]
fn biquadratic_norm_one_torus() {
    let r = report(KLEIN);
    assert_eq!(r.sha2_omega, Some(group(0, &[2])));
    assert_eq!(r.pic, group(0, &[2, 2]));
    assert_eq!(r.br_a, group(0, &[2]));
}

#[test]
fn json_keys_and_group_shape() {
    let out = upic(&["analyze", "-"], PGL2);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["input", "U_rank", "Pic_bar", "Pic", "Br_a", "Sha1_omega", "Sha2_omega", "level_note"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["Pic"], serde_json::json!({"free_rank": 0, "torsion": [2]}));
    assert!(v.get("timing").is_none());
}

#[test]
fn output_is_byte_identical() {
    let a = upic(&["analyze", "-"], KLEIN).stdout;
    let b = upic(&["analyze", "-"], KLEIN).stdout;
    assert_eq!(a, b);
}

#[test]
fn report_round_trips() {
    for input in [PGL2, SL3, KLEIN] {
        let r = analyze_str(input, &Overrides::default()).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: ReportDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
    let timed = analyze_str(PGL2, &Overrides { timing: true, ..Overrides::default() }).unwrap();
    let back: ReportDocument = serde_json::from_str(&serde_json::to_string(&timed).unwrap()).unwrap();
    assert_eq!(back, timed);
}

#[test]
fn parse_errors_exit_2_with_location() {
    let out = upic(&["analyze", "-"], "{\"group\":\n  {\"named\": }");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
    let out = upic(&["analyze", "-"], r#"{"group":{"named":"SL","n":3},"colour":1}"#);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn validation_errors_exit_3() {
    for bad in [
        r#"{"group":{"named":"SL","n":1}}"#,
        r#"{"group":{"named":"E9","n":3}}"#,
        r#"{"group":{"named":"SL","n":3,"raw":{"rank":1}}}"#,
        r#"{"group":{"named":"SL","n":2},"galois":{"named":"cyclic","n":2},"action":{"twist":"flip"}}"#,
        r#"{"group":{"named":"torus","n":1},"galois":{"named":"cyclic","n":2},"action":{"matrices":[[[1]],[[2]]]}}"#,
    ] {
        let out = upic(&["analyze", "-"], bad);
        assert_eq!(out.status.code(), Some(3), "{bad}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn budget_exceeded_exits_4() {
    let out = upic(&["analyze", "-", "--budget", "10"], KLEIN);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn flags_override_document_options() {
    let input = r#"{"group":{"named":"norm_one_torus"},"galois":{"named":"klein"},"options":{"sha":false}}"#;
    assert_eq!(report(input).sha2_omega, None);
    let out = upic(&["analyze", "-", "--sha"], input);
    let r: ReportDocument = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r.sha2_omega, Some(group(0, &[2])));
    let r: ReportDocument = serde_json::from_slice(&upic(&["analyze", "-", "--no-sha"], KLEIN).stdout).unwrap();
    assert_eq!(r.sha1_omega, None);
}

#[test]
fn raw_root_datum_matches_named() {
    // PGL2: X = Z·α with coroot pairing 2.
    let raw = r#"{"group":{"raw":{"rank":1,"roots":[[1]],"coroots":[[2]]}}}"#;
    assert_eq!(report(raw).pic, group(0, &[2]));
    // Rank-one torus with inversion over Z/2.
    let raw = r#"{"group":{"raw":{"rank":1}},"galois":{"named":"cyclic","n":2},"action":{"matrices":[[[1]],[[-1]]]}}"#;
    let r = report(raw);
    assert_eq!(r.pic, group(0, &[2]));
    assert_eq!(r.u_rank, 1);
}

#[test]
fn table_format() {
    let out = upic(&["analyze", "-", "--format", "table"], PGL2);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("Pic          Z/2"), "{text}");
    assert!(text.contains("computed at level Γ"));
}

#[test]
fn selftest_with_zero_budget_fails() {
    let out = upic(&["selftest", "--budget", "0"], "");
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[FAIL]"));
    assert!(text.contains("budget"), "{text}");
}

#[test]
fn selftest_passes() {
    let out = upic(&["selftest"], "");
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 10);
}
