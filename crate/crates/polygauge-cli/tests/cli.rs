//! End-to-end tests of the installed binary: spawn it, read its bytes.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_polygauge"))
}

/// (stdout, stderr, exit code)
fn run(args: &[&str]) -> (String, String, i32) {
    let out = bin().args(args).output().expect("binary spawns");
    (
        String::from_utf8(out.stdout).expect("stdout is UTF-8"),
        String::from_utf8(out.stderr).expect("stderr is UTF-8"),
        out.status.code().expect("no signal"),
    )
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

#[test]
fn eval_prints_twelve_significant_digits() {
    let (stdout, _, code) = run(&["eval", "--n", "3", "--quantity", "meandist"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "0.631838006783\n");
    let printed: f64 = stdout.trim().parse().unwrap();
    let want = 3.0f64.sqrt() / 20.0 * (4.0 + 3.0 * 3.0f64.ln());
    assert!(close(printed, want, 1e-11), "{printed} vs {want}");

    let (stdout, _, code) = run(&["eval", "--n", "4", "--quantity", "meanchord"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1.11072073454\n");

    let (stdout, _, code) = run(&["eval", "--n", "4", "--quantity", "F", "--at", "2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim().parse::<f64>().unwrap(), 1.0);

    // The circumradius scales lengths linearly: tripling r triples the
    // mean distance.
    let (one, _, _) = run(&["eval", "--n", "5", "--quantity", "meandist"]);
    let (three, _, _) = run(&["eval", "--n", "5", "--r", "3", "--quantity", "meandist"]);
    let one: f64 = one.trim().parse().unwrap();
    let three: f64 = three.trim().parse().unwrap();
    assert!(close(three, 3.0 * one, 1e-10));
}

#[test]
fn invalid_parameters_exit_two() {
    for args in [
        &["eval", "--n", "2", "--quantity", "F", "--at", "1"] as &[&str],
        &["eval", "--n", "4", "--quantity", "g"],
        &["eval", "--n", "4", "--quantity", "q", "--at", "1"],
        &["eval", "--n", "4", "--quantity", "f", "--at", "1"],
        &["table", "--n", "4", "--quantity", "F", "--points", "1"],
        &["table", "--n", "4", "--quantity", "meanchord"],
        &["table", "--n", "4", "--quantity", "F", "--format", "xml"],
        &["verify", "--n", "two..ten"],
        &["verify", "--n", "9..3"],
        &["eval", "--n", "4"],
    ] {
        let (_, stderr, code) = run(args);
        assert_eq!(code, 2, "args {args:?} stderr {stderr}");
        assert!(!stderr.is_empty(), "args {args:?}");
    }
}

#[test]
fn tables_cover_the_support_with_exact_endpoints() {
    let (stdout, _, code) = run(&["table", "--n", "7", "--quantity", "F", "--points", "40"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "x,value,series");
    assert_eq!(lines.len(), 41);
    let first: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(first[0].parse::<f64>().unwrap(), 0.0);
    assert_eq!(first[1].parse::<f64>().unwrap(), 0.0);
    assert_eq!(first[2], "F");
    let last: Vec<&str> = lines[40].split(',').collect();
    let top = 2.0 * (3.0 * std::f64::consts::PI / 7.0).sin();
    assert!(close(last[0].parse::<f64>().unwrap(), top, 1e-15));
    assert_eq!(last[1].parse::<f64>().unwrap(), 1.0);

    let (stdout, _, code) = run(&["table", "--n", "5", "--quantity", "G", "--points", "11"]);
    assert_eq!(code, 0);
    let last = stdout.lines().last().unwrap();
    assert_eq!(last.split(',').nth(1).unwrap().parse::<f64>().unwrap(), 1.0);
}

#[test]
fn circle_series_rides_along() {
    let (stdout, _, code) =
        run(&["table", "--n", "4", "--quantity", "F", "--points", "3", "--circle"]);
    assert_eq!(code, 0);
    let circle: Vec<&str> = stdout.lines().filter(|l| l.ends_with(",circle")).collect();
    assert_eq!(circle.len(), 3);
    // At s = r the disk's chord CDF is 1 − √3/2.
    let fields: Vec<&str> = circle[1].split(',').collect();
    assert_eq!(fields[0].parse::<f64>().unwrap(), 1.0);
    let value: f64 = fields[1].parse().unwrap();
    assert!(close(value, 1.0 - 0.75f64.sqrt(), 1e-15), "{value}");
}

#[test]
fn json_tables_round_trip() {
    let (stdout, _, code) =
        run(&["table", "--n", "3", "--quantity", "g", "--points", "5", "--format", "json"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("[\n"));
    assert!(stdout.ends_with("]\n"));
    assert_eq!(stdout.matches("\"series\": \"g\"").count(), 5);
    // Last abscissa is the diameter √3, with the density zero there.
    let last = stdout.lines().rev().nth(1).unwrap();
    assert!(last.contains("\"value\": 0.0000000000000000e0"));
    assert!(last.contains("1.7320508075688772e0"));
}

#[test]
fn table_writes_files_byte_identically() {
    let dir = std::env::temp_dir().join("polygauge-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let path_text = path.to_str().unwrap();
    let args = ["table", "--n", "5", "--quantity", "G", "--points", "17"];
    let (stdout, _, code) = run(&args);
    assert_eq!(code, 0);
    let (empty, _, code) = run(&[&args[..], &["--out", path_text]].concat());
    assert_eq!(code, 0);
    assert!(empty.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn verify_skips_statistics_below_the_sample_floor() {
    let (stdout, stderr, code) = run(&["verify", "--n", "3", "--samples", "100"]);
    assert_eq!(code, 0, "stderr {stderr}");
    assert!(stdout.contains("[SKIP] monte-carlo-chords"));
    assert!(stdout.contains("[SKIP] monte-carlo-distances"));
    assert!(stdout.contains("[PASS] quadrature-equivalence"));
    assert!(stdout.contains("[PASS] mutation-coefficient-row-3"));
    assert!(!stdout.contains("[FAIL]"));
    // Timing is diagnostic, not payload.
    assert!(stderr.contains("verified in"));
    assert!(!stdout.contains("verified in"));
}

#[test]
fn verify_output_ignores_worker_count() {
    let args = ["verify", "--n", "4", "--samples", "20000", "--seed", "7"];
    let one = bin().args(args).env("POLYGAUGE_THREADS", "1").output().unwrap();
    let five = bin().args(args).env("POLYGAUGE_THREADS", "5").output().unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, five.stdout);
    let again = bin().args(args).env("POLYGAUGE_THREADS", "5").output().unwrap();
    assert_eq!(five.stdout, again.stdout);
    assert!(String::from_utf8(one.stdout).unwrap().contains("[PASS] monte-carlo-chords"));
}
