//! End-to-end tests of the binary: exit codes, determinism, and the
//! machine-format round trip.

use std::io::Write;
use std::process::{Command, Output};

fn freeres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freeres"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_job(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

const SQUARE: &str = "ring p=32003 vars=x,y,z order=degrevlex\nideal: x^2; x*y; x*z; y^2; y*z; z^2\n";

#[test]
fn resolve_prints_profile_and_exits_zero() {
    let job = write_job(SQUARE);
    let out = freeres(&["resolve", job.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("T = (0, 2, 3, 4)  reg 1"), "{text}");
    assert!(text.contains("total: 1 6 8 3"), "{text}");
}

#[test]
fn betti_oracle_cross_check_passes() {
    let job = write_job(SQUARE);
    let out = freeres(&["betti", job.path().to_str().unwrap(), "--oracle"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("oracle: match"), "{text}");
}

#[test]
fn check_reports_all_bounds() {
    let job = write_job(SQUARE);
    let out = freeres(&["check", job.path().to_str().unwrap(), "--bounds=all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for tag in ["codim1", "regthm", "maincor", "ehu1", "ehu2"] {
        assert!(text.contains(tag), "missing {tag} in {text}");
    }
    assert!(text.contains("asserted-violations 0"), "{text}");
}

#[test]
fn single_bound_selection_limits_output() {
    let job = write_job(SQUARE);
    let out = freeres(&["check", job.path().to_str().unwrap(), "--bounds=maincor"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("maincor"));
    assert!(!text.contains("codim1"), "{text}");
}

#[test]
fn bad_input_exits_one_with_location() {
    let job = write_job("ring p=32003 vars=x,y\nideal: x^2 + y^3*q\n");
    let out = freeres(&["check", job.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("2:"), "{err}");
    // composite characteristic
    let job = write_job("ring p=9 vars=x\nideal: x\n");
    let out = freeres(&["resolve", job.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    // unknown format
    let job = write_job(SQUARE);
    let out = freeres(&["resolve", job.path().to_str().unwrap(), "--format", "xml"]);
    assert_eq!(out.status.code(), Some(1));
    // missing file
    let out = freeres(&["resolve", "/nonexistent.ring"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn search_is_byte_identical_for_fixed_seed() {
    let args = [
        "search", "--vars", "3", "--maxdeg", "3", "--gens", "4", "--count", "12", "--seed",
        "2024", "--format", "json",
    ];
    let a = freeres(&args);
    let b = freeres(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout, "same seed must give identical reports");
    let mut changed = args;
    changed[9] = "2025";
    let c = freeres(&changed);
    assert_ne!(a.stdout, c.stdout, "different seed should change the report");
}

#[test]
fn characteristic_override_threads_through() {
    let job = write_job(SQUARE);
    let out = freeres(&["check", job.path().to_str().unwrap(), "--char", "101"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("char 101"), "{text}");
}

#[test]
fn json_recreation_blocks_reparse_and_agree() {
    let job = write_job(SQUARE);
    let out = freeres(&["check", job.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let instance = &json["instances"][0];
    let input = instance["analysis"]["input"].as_str().unwrap();
    // the embedded input re-parses and re-runs to the same bound numbers
    let job2 = write_job(input);
    let out2 = freeres(&["check", job2.path().to_str().unwrap(), "--format", "json"]);
    let json2: serde_json::Value = serde_json::from_slice(&out2.stdout).unwrap();
    assert_eq!(
        json["instances"][0]["analysis"]["bounds"],
        json2["instances"][0]["analysis"]["bounds"]
    );
    assert_eq!(json["summary"], json2["summary"]);
}

#[test]
fn zero_module_is_reported_specially() {
    let job = write_job("ring p=7 vars=x,y\nideal: 3\n");
    let out = freeres(&["resolve", job.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("zero module"), "{text}");
}
