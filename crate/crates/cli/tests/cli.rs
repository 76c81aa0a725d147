use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hilbstab")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn alpha_of_six() {
    assert_eq!(stdout(&["alpha-m", "--m", "6"]).trim(), "alpha = 2/3");
    assert_eq!(stdout(&["alpha-m", "--alpha", "2/3"]).trim(), "m = 6");
}

#[test]
fn bicuspidal_is_semistable() {
    let text = stdout(&["is-semistable", "--example", "bicuspidal-g2-tricanonical", "--m", "2"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("semistable"));
    assert_eq!(lines.next(), Some("barycenter: (8/5, 8/5, 8/5, 8/5, 8/5)"));
    assert_eq!(lines.next(), Some("vertices: 10"));
}

#[test]
fn double_line_index() {
    let text = stdout(&["hm-index", "--ideal", "thickened-line:2:2", "--m", "4", "--rho", "0,1,1"]);
    assert!(text.contains("index = -8"), "{text}");
    assert!(text.contains("verdict: unstable"), "{text}");
}

#[test]
fn ideal_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("hilbstab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("conic.txt");
    std::fs::write(&path, "vars: x y z\nx*z - y^2\n").unwrap();
    let p = path.to_str().unwrap();
    let text = stdout(&["hilbert-function", "--ideal", p, "--m", "3", "--poly", "2*m + 1"]);
    assert!(text.starts_with("HF(3) = 7"), "{text}");
    let text = stdout(&["hm-index", "--ideal", p, "--m", "2", "--rho", "0,1,2", "--poly", "2*m + 1"]);
    assert!(text.contains("index = 0"), "{text}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn tail_index_matches_assembly() {
    let text = stdout(&["tail-index", "--b", "2", "--g", "5", "--m", "2"]);
    assert!(text.contains("closed form: -8/3"), "{text}");
    assert!(text.contains("assembled (g = 5): -8/3"), "{text}");
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        vec!["hm-index", "--example", "no-such-curve", "--m", "2", "--rho", "0,1"],
        vec!["alpha-m", "--m", "3/20"],
        vec!["hm-index", "--ideal", "thickened-line:2:2", "--m", "5/2", "--rho", "0,1,1"],
        vec!["gotzmann", "--poly", "m +"],
        vec!["state-polytope", "--m", "2"],
        vec!["no-such-command"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn json_is_deterministic() {
    let base = ["--json", "state-polytope", "--example", "bicuspidal-g2-tricanonical", "--m", "2"];
    let first = run(&base).stdout;
    let value: serde_json::Value = serde_json::from_slice(&first).unwrap();
    assert!(value.is_object());
    for threads in ["1", "2", "4"] {
        let mut args = base.to_vec();
        args.extend(["--threads", threads]);
        assert_eq!(run(&args).stdout, first, "threads = {threads}");
    }
    let args = ["--json", "is-semistable", "--example", "a2b-tail:2", "--m", "2"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
