//! End-to-end tests of the `alcuin` binary: output bytes, formats, and
//! exit codes.

use std::process::{Command, Output};

fn alcuin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alcuin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = alcuin(args);
    assert!(out.status.success(), "args={args:?} stderr={}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn count_defaults_to_closed_form_plain() {
    assert_eq!(stdout_of(&["count", "12"]), "3\n");
    assert_eq!(stdout_of(&["count", "23"]), "14\n");
    assert_eq!(stdout_of(&["count", "1"]), "0\n");
}

#[test]
fn count_accepts_every_method_case_insensitively() {
    for method in [
        "closed-form",
        "mod12",
        "bijection-sum",
        "series",
        "brute-force",
        "Closed-Form",
        "SERIES",
    ] {
        assert_eq!(
            stdout_of(&["count", "23", "--method", method]),
            "14\n",
            "method={method}"
        );
    }
}

#[test]
fn count_formats() {
    assert_eq!(
        stdout_of(&["count", "12", "--format", "csv"]),
        "p,method,count\n12,closed-form,3\n"
    );
    assert_eq!(
        stdout_of(&["count", "23", "--method", "mod12", "--format", "json"]),
        "{\"p\":23,\"method\":\"mod12\",\"count\":14}\n"
    );
    let parsed: serde_json::Value =
        serde_json::from_str(&stdout_of(&["count", "23", "--format", "json"])).unwrap();
    assert_eq!(parsed["p"], 23);
    assert_eq!(parsed["method"], "closed-form");
    assert_eq!(parsed["count"], 14);
}

#[test]
fn enumerate_lists_lexicographically() {
    assert_eq!(stdout_of(&["enumerate", "12"]), "2 5 5\n3 4 5\n4 4 4\n");
    assert_eq!(
        stdout_of(&["enumerate", "12", "--format", "csv"]),
        "a,b,c\n2,5,5\n3,4,5\n4,4,4\n"
    );
    assert_eq!(
        stdout_of(&["enumerate", "12", "--format", "json"]),
        "[[2,5,5],[3,4,5],[4,4,4]]\n"
    );
}

#[test]
fn enumerate_empty_perimeter_succeeds_with_no_rows() {
    let out = alcuin(&["enumerate", "4"]);
    assert_eq!(exit_code(&out), 0);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.is_empty());

    assert_eq!(stdout_of(&["enumerate", "4", "--format", "csv"]), "a,b,c\n");
    assert_eq!(stdout_of(&["enumerate", "4", "--format", "json"]), "[]\n");
}

#[test]
fn max_area_reports_triple_shift_and_exact_area() {
    assert_eq!(
        stdout_of(&["max-area", "8"]),
        "p = 8\ntriple = (2, 3, 3)\nv = -1\narea_sq_432 = 3456\narea = 2.828427\n"
    );
    assert_eq!(
        stdout_of(&["max-area", "7", "--format", "csv"]),
        "p,a,b,c,v,area_sq_432,area\n7,2,2,3,1,1701,1.984313\n"
    );
    let json = stdout_of(&["max-area", "16", "--format", "json"]);
    assert_eq!(
        json,
        "{\"p\":16,\"triple\":[5,5,6],\"v\":1,\"area_sq_432\":62208,\"area_approx\":12.000000}\n"
    );
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed["triple"], serde_json::json!([5, 5, 6]));
    assert_eq!(parsed["area_approx"], 12.0);
}

#[test]
fn max_area_fails_cleanly_on_empty_perimeters() {
    for p in ["1", "2", "4"] {
        let out = alcuin(&["max-area", p]);
        assert_eq!(exit_code(&out), 1, "p={p}");
        assert!(out.stdout.is_empty(), "p={p}");
        let msg = String::from_utf8_lossy(&out.stderr);
        assert!(msg.contains("no triangle exists"), "p={p} msg={msg}");
    }
    // perimeter 4 explains the degenerate candidate
    let out = alcuin(&["max-area", "4"]);
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("(1, 1, 2)"));
}

#[test]
fn table_covers_the_range_inclusively() {
    assert_eq!(stdout_of(&["table", "3", "5"]), "3 1\n4 0\n5 1\n");
    assert_eq!(
        stdout_of(&["table", "0", "4", "--format", "csv"]),
        "p,count\n0,0\n1,0\n2,0\n3,1\n4,0\n"
    );
    let parsed: serde_json::Value =
        serde_json::from_str(&stdout_of(&["table", "10", "12", "--format", "json"])).unwrap();
    assert_eq!(
        parsed,
        serde_json::json!([
            {"p": 10, "count": 2},
            {"p": 11, "count": 4},
            {"p": 12, "count": 3},
        ])
    );
}

#[test]
fn table_writes_files_byte_identically() {
    let dir = std::env::temp_dir().join("alcuin-cli-test-table");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.csv");
    let path_str = path.to_str().unwrap();

    let out = alcuin(&["table", "0", "24", "--format", "csv", "--output", path_str]);
    assert_eq!(exit_code(&out), 0);
    assert!(out.stdout.is_empty());
    let from_file = std::fs::read_to_string(&path).unwrap();
    let from_stdout = stdout_of(&["table", "0", "24", "--format", "csv"]);
    assert_eq!(from_file, from_stdout);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn table_write_failure_is_a_domain_error() {
    let out = alcuin(&["table", "0", "5", "--output", "/nonexistent-dir/t.txt"]);
    assert_eq!(exit_code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot write"));
}

#[test]
fn verify_small_range_passes() {
    let out = alcuin(&["verify", "100", "--no-timing"]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text,
        "verify: p in 1..=100\n\
         methods: closed-form mod12 bijection-sum series brute-force\n\
         method agreement OK\n\
         sequence prefix OK\n\
         generating-function product OK\n\
         max-area argmax OK (checked 3..=100)\n\
         odd-shift identity OK\n\
         result: PASS\n"
    );

    // timing line is present by default and starts with the oracle
    let timed = stdout_of(&["verify", "30"]);
    assert!(timed.contains("timings (ms): brute-force="));
}

#[test]
fn verify_respects_method_selection() {
    let out = stdout_of(&["verify", "50", "--method", "series", "--no-timing"]);
    assert!(out.contains("methods: series\n"));
    assert!(out.ends_with("result: PASS\n"));
}

#[test]
fn bench_rows_share_one_checksum() {
    let text = stdout_of(&["bench", "60", "--no-timing"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "bench: sum of T(p) for p in 1..=60, 1 repetition(s) per method");
    let sums: Vec<&str> = lines[2..]
        .iter()
        .map(|l| *l.split_whitespace().collect::<Vec<_>>().last().unwrap())
        .collect();
    assert_eq!(sums.len(), 5);
    assert!(sums.iter().all(|s| s == &sums[0]));

    // identical invocations give identical bytes without timing
    assert_eq!(stdout_of(&["bench", "60", "--no-timing"]), text);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["count", "0"][..],
        &["count", "abc"],
        &["count", "12", "--method", "quantum"],
        &["count", "12", "--format", "xml"],
        &["enumerate", "0"],
        &["max-area", "-5"],
        &["table", "5", "3"],
        &["table", "-1", "3"],
        &["verify", "0"],
        &["bench", "10", "--reps", "0"],
        &["frobnicate", "1"],
        &[],
    ] {
        let out = alcuin(args);
        assert_eq!(exit_code(&out), 2, "args={args:?}");
    }
}

#[test]
fn help_and_version_exit_zero() {
    for args in [&["--help"][..], &["--version"], &["count", "--help"]] {
        let out = alcuin(args);
        assert_eq!(exit_code(&out), 0, "args={args:?}");
        assert!(!out.stdout.is_empty());
    }
}

#[test]
fn outputs_are_deterministic_across_runs() {
    for args in [
        &["count", "240", "--format", "json"][..],
        &["enumerate", "30", "--format", "csv"],
        &["max-area", "100", "--format", "json"],
        &["table", "0", "50", "--format", "json"],
    ] {
        assert_eq!(stdout_of(args), stdout_of(args), "args={args:?}");
    }
}
