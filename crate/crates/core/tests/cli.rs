use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use fq_scales::audio::read_wav;

fn fq(args: &[&str], stdin: &str) -> Output {
    fq_env(args, stdin, &[])
}

fn fq_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_fq"));
    cmd.args(args)
        .env_remove("FQ_DEFAULT_VREF")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("fq binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn quantize_log_zero() {
    let o = fq(&["quantize", "--scale", "log", "--vref", "1.0"], "0.0\n");
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(stdout(&o), "0.000000\n");
}

#[test]
fn quantize_buchla_pairs() {
    let o = fq(&["quantize", "--scale", "log", "--vref", "1.2"], "t,v\n0.0,0.6\n0.25,-1.8\n");
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "t,v\n0.0,0.878425\n0.25,-1.521575\n");
}

#[test]
fn vref_flag_beats_environment() {
    let env = [("FQ_DEFAULT_VREF", "1.2")];
    let from_env = fq_env(&["quantize", "--scale", "log"], "0.6\n", &env);
    assert_eq!(stdout(&from_env), "0.878425\n");
    let flag = fq_env(&["quantize", "--scale", "log", "--vref", "1.0"], "0.6\n", &env);
    assert_eq!(stdout(&flag), "0.790535\n");
    let bad = fq_env(&["quantize", "--scale", "log"], "0.6\n", &[("FQ_DEFAULT_VREF", "0")]);
    assert_eq!(code(&bad), 2);
}

#[test]
fn table_one_octave_over_a440() {
    let o = fq(&["table", "--scale", "log", "--base-freq", "440", "--octaves", "1"], "");
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "octave,step,frequency_hz,cents");
    assert_eq!(lines.len(), 14);
    assert_eq!(lines[1], "0,0,440.000000,0.000000");
    assert!(lines[7].starts_with("0,6,730.824181,"));
    assert!(lines[13].starts_with("0,12,880.000000,"));
}

#[test]
fn table_spans_octaves() {
    let o = fq(&["table", "--scale", "sine", "--octaves", "3", "--first-octave", "-1"], "");
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1 + 3 * 12 + 1);
    assert!(text.lines().nth(1).unwrap().starts_with("-1,0,130.812800,"));
}

#[test]
fn verify_passes_for_every_family() {
    for args in [
        &["verify", "--scale", "log"][..],
        &["verify", "--scale", "sine", "--vref", "1.2"],
        &["verify", "--scale", "power", "--param", "a=0.5", "--range=-5:5", "--samples", "20000"],
    ] {
        let o = fq(args, "");
        assert_eq!(code(&o), 0, "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).contains("status: pass"));
    }
}

#[test]
fn verify_fails_over_tolerance() {
    let o = fq(&["verify", "--scale", "log", "--tolerance", "1e-12", "--samples", "1000"], "");
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("status: fail"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["scl", "--scale", "log"][..],
        &["scl", "--scale", "power2", "--param", "a=3", "--no-banner"],
        &["table", "--scale", "sqrt", "--octaves", "2"],
        &["list"],
    ] {
        assert_eq!(fq(args, "").stdout, fq(args, "").stdout, "{args:?}");
    }
}

#[test]
fn scl_banner_is_optional() {
    let with = stdout(&fq(&["scl", "--scale", "log"], ""));
    let without = stdout(&fq(&["scl", "--scale", "log", "--no-banner", "--description", "Log"], ""));
    assert!(with.starts_with("! fq-scales "));
    assert!(without.starts_with("Log\n12\n258.387955\n"));
    assert!(without.ends_with("1200.000000\n"));
}

#[test]
fn validate_reports_status() {
    let ok = fq(&["validate", "--scale", "power2", "--param", "a=2"], "");
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).contains("status: valid"));
    let bad = fq(&["validate", "--scale", "power2", "--param", "a=200"], "");
    assert_eq!(code(&bad), 1);
    assert!(stdout(&bad).contains("status: invalid"));
}

#[test]
fn descriptor_files() {
    let dir = tempfile::tempdir().unwrap();
    let custom = dir.path().join("custom.json");
    std::fs::write(&custom, r#"{"steps": [0.0, 0.25, 0.6, 1.0]}"#).unwrap();
    let o = fq(&["scl", "--descriptor", custom.to_str().unwrap(), "--no-banner", "--description", "c"], "");
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(stdout(&o), "c\n3\n300.000000\n720.000000\n1200.000000\n");

    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{not json").unwrap();
    let o = fq(&["validate", "--descriptor", broken.to_str().unwrap()], "");
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("broken.json"));

    let invalid = dir.path().join("invalid.json");
    std::fs::write(&invalid, r#"{"steps": [0.0, 0.7, 0.6, 1.0]}"#).unwrap();
    assert_eq!(code(&fq(&["validate", "--descriptor", invalid.to_str().unwrap()], "")), 1);

    let missing = dir.path().join("missing.json");
    let o = fq(&["table", "--descriptor", missing.to_str().unwrap()], "");
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("missing.json"));
}

#[test]
fn render_writes_mono_wav() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("log.wav");
    let o = fq(
        &[
            "render", "--scale", "log", "--base-freq", "440", "--note-duration", "0.1", "--sample-rate", "8000",
            "--out", out.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let wav = read_wav(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(wav.sample_rate, 8000);
    assert_eq!(wav.samples.len(), 13 * 800);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["quantize"][..],
        &["quantize", "--scale", "nope"],
        &["quantize", "--scale", "power"],
        &["quantize", "--scale", "log", "--param", "a=2"],
        &["quantize", "--scale", "log", "--descriptor", "x.json"],
        &["table", "--scale", "log", "--octaves", "0"],
        &["verify", "--scale", "log", "--range", "3:1"],
        &["render", "--scale", "log"],
        &["frobnicate"],
    ] {
        let o = fq(args, "");
        assert_eq!(code(&o), 2, "{args:?}: {}", stderr(&o));
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn malformed_trace_exits_1() {
    let o = fq(&["quantize", "--scale", "log"], "0.0\n0.1,0.2,0.3\n");
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("<stdin>:2"));
    let o = fq(&["quantize", "--scale", "log"], "1,0.0\n1,0.5\n");
    assert_eq!(code(&o), 1);
    let o = fq(&["quantize", "--scale", "log", "--input", "/nonexistent/trace.csv"], "");
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains(Path::new("/nonexistent/trace.csv").to_str().unwrap()));
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(code(&fq(&["--help"], "")), 0);
    assert_eq!(code(&fq(&["--version"], "")), 0);
    let list = stdout(&fq(&["list"], ""));
    assert_eq!(list.lines().count(), 6);
}
