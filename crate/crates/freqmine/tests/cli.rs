//! Command-line behavior: exit codes per failure class, stdin handling,
//! the relative support form, summary lines, bench report shape, and the
//! help-text contract.

mod common;

use common::{fixture, fixture_path, freqmine};

#[test]
fn count_reads_stdin_by_default() {
    let run = freqmine(&["count"], Some("b a b"));
    assert_eq!((run.stdout.as_str(), run.code), ("a\t1\nb\t2\n", 0));
}

#[test]
fn count_of_empty_input_is_empty_success() {
    let run = freqmine(&["count", "-"], Some(""));
    assert_eq!(
        (run.stdout.as_str(), run.stderr.as_str(), run.code),
        ("", "", 0)
    );
}

#[test]
fn count_folds_case_and_strips_edge_punctuation() {
    let run = freqmine(&["count"], Some("Stop! stop... (stop) state-of-the-art"));
    assert_eq!(run.stdout, "state-of-the-art\t1\nstop\t3\n");
}

#[test]
fn unreadable_input_exits_2_with_diagnostic_on_stderr() {
    let run = freqmine(&["count", "/no/such/file.txt"], None);
    assert_eq!(run.code, 2);
    assert_eq!(run.stdout, "");
    assert!(
        run.stderr.contains("/no/such/file.txt"),
        "stderr: {}",
        run.stderr
    );

    let run = freqmine(&["mine", "--min-support", "2", "/no/such/file.tsv"], None);
    assert_eq!(run.code, 2);
}

#[test]
fn malformed_line_exits_3_and_names_the_line() {
    // With --tid the second line has no item list after the identifier.
    let run = freqmine(
        &["mine", "--min-support", "1", "--tid"],
        Some("T1\ta,b\nT2\n"),
    );
    assert_eq!(run.code, 3);
    assert_eq!(run.stdout, "");
    assert!(run.stderr.contains("line 2"), "stderr: {}", run.stderr);

    // An item with embedded whitespace cannot be a single item.
    let run = freqmine(&["mine", "--min-support", "1"], Some("a,b\nc d e,f\n"));
    assert_eq!(run.code, 3);
    assert!(run.stderr.contains("line 2"), "stderr: {}", run.stderr);
}

#[test]
fn invalid_min_support_exits_4() {
    for bad in ["0", "0.0", "1.5", "-2", "abc"] {
        let run = freqmine(&["mine", "--min-support", bad], Some("a,b\n"));
        assert_eq!(run.code, 4, "--min-support {bad}: stderr {}", run.stderr);
        assert_eq!(run.stdout, "");
        assert!(!run.stderr.is_empty());
    }
}

#[test]
fn relative_min_support_matches_the_absolute_form() {
    let baskets = fixture_path("data/baskets.tsv");
    let absolute = freqmine(&["mine", "--min-support", "2", "--tid", &baskets], None);
    let relative = freqmine(&["mine", "--min-support", "0.22", "--tid", &baskets], None);
    assert_eq!(absolute.code, 0);
    assert_eq!(absolute.stdout, relative.stdout);

    // 1.0 is relative |D| = 9, which nothing reaches; 1 is absolute.
    let everything = freqmine(&["mine", "--min-support", "1", "--tid", &baskets], None);
    let unanimous = freqmine(&["mine", "--min-support", "1.0", "--tid", &baskets], None);
    assert_eq!(unanimous.stdout, "");
    assert_ne!(everything.stdout, "");
}

#[test]
fn unsatisfiable_threshold_yields_zero_lines() {
    let run = freqmine(
        &[
            "mine",
            "--min-support",
            "10",
            "--tid",
            &fixture_path("data/baskets.tsv"),
        ],
        None,
    );
    assert_eq!((run.stdout.as_str(), run.code), ("", 0));
}

#[test]
fn summary_line_reports_run_metadata() {
    let run = freqmine(
        &[
            "mine",
            "--min-support",
            "2",
            "--tid",
            "--summary",
            &fixture_path("data/baskets.tsv"),
        ],
        None,
    );
    assert_eq!(run.code, 0);
    let expected = format!(
        "{}# |D|=9 min_sup=2 levels=3\n",
        fixture("golden/mine_baskets.tsv")
    );
    assert_eq!(run.stdout, expected);
}

#[test]
fn mine_without_tid_reads_bare_item_lines() {
    let run = freqmine(&["mine", "--min-support", "2"], Some("a,b\nb,a\nc\n"));
    assert_eq!(run.stdout, "1\ta\t2\n1\tb\t2\n2\ta,b\t2\n");
}

#[test]
fn mine_backends_agree_at_the_process_level() {
    let baskets = fixture_path("data/baskets.tsv");
    let outputs: Vec<String> = ["bst", "avl", "hash", "sorted_array"]
        .iter()
        .map(|backend| {
            let run = freqmine(
                &[
                    "mine",
                    "--min-support",
                    "2",
                    "--tid",
                    "--backend",
                    backend,
                    &baskets,
                ],
                None,
            );
            assert_eq!(run.code, 0, "{backend}");
            run.stdout
        })
        .collect();
    assert!(outputs.iter().all(|o| o == &outputs[0]));
}

#[test]
fn bench_emits_header_and_grid_rows() {
    let run = freqmine(
        &[
            "bench",
            "--backend",
            "bst,hash",
            "--kind",
            "ascending,random",
            "--n",
            "100",
            "--distinct",
            "10",
            "--seed",
            "3",
        ],
        None,
    );
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert_eq!(lines.len(), 5, "header plus a 2x2 grid");
    assert_eq!(
        lines[0],
        "backend\tkind\tn\tdistinct\tseed\tinsert_ns\tlookup_ns\tinorder_ns\theight\tcomparisons"
    );
    assert!(lines[1].starts_with("bst\tascending\t100\t10\t3\t"));
    assert!(lines[2].starts_with("bst\trandom\t100\t10\t3\t"));
    assert!(lines[3].starts_with("hash\tascending\t100\t10\t3\t"));
    assert!(lines[4].starts_with("hash\trandom\t100\t10\t3\t"));
}

#[test]
fn bench_defaults_to_the_full_grid() {
    let run = freqmine(&["bench", "--n", "50", "--distinct", "5"], None);
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout.lines().count(), 1 + 4 * 3);
}

#[test]
fn bench_reports_spine_height_and_dash() {
    let run = freqmine(
        &[
            "bench",
            "--backend",
            "bst",
            "--kind",
            "ascending",
            "--n",
            "1000",
            "--distinct",
            "1000",
            "--seed",
            "0",
        ],
        None,
    );
    let row: Vec<&str> = run.stdout.lines().nth(1).unwrap().split('\t').collect();
    assert_eq!(row[8], "1000", "unbalanced tree height on sorted keys");

    let run = freqmine(
        &[
            "bench",
            "--backend",
            "hash",
            "--kind",
            "random",
            "--n",
            "100",
            "--distinct",
            "10",
            "--seed",
            "0",
        ],
        None,
    );
    let row: Vec<&str> = run.stdout.lines().nth(1).unwrap().split('\t').collect();
    assert_eq!(row[8], "-", "no height for a hash table");
}

#[test]
fn bench_is_deterministic_outside_timing_columns() {
    let args = [
        "bench",
        "--backend",
        "avl,sorted_array",
        "--kind",
        "zipf",
        "--n",
        "400",
        "--distinct",
        "40",
        "--seed",
        "11",
    ];
    let strip_timings = |stdout: &str| -> Vec<Vec<String>> {
        stdout
            .lines()
            .map(|line| {
                line.split('\t')
                    .enumerate()
                    .filter(|(column, _)| !(5..=7).contains(column))
                    .map(|(_, cell)| cell.to_string())
                    .collect()
            })
            .collect()
    };
    let first = freqmine(&args, None);
    let second = freqmine(&args, None);
    assert_eq!(strip_timings(&first.stdout), strip_timings(&second.stdout));
}

#[test]
fn invalid_workloads_exit_4() {
    let cases: [&[&str]; 4] = [
        &["bench", "--n", "0", "--distinct", "0"],
        &["bench", "--n", "10", "--distinct", "0"],
        &["bench", "--n", "10", "--distinct", "11"],
        &[
            "bench",
            "--kind",
            "sideways",
            "--n",
            "10",
            "--distinct",
            "2",
        ],
    ];
    for args in cases {
        let run = freqmine(args, None);
        assert_eq!(run.code, 4, "{args:?}: stderr {}", run.stderr);
        assert_eq!(run.stdout, "");
    }
}

#[test]
fn help_documents_formats_and_conversion_rule() {
    let count_help = freqmine(&["count", "--help"], None);
    assert!(count_help.stdout.contains("--backend"));
    assert!(count_help.stdout.contains("<token>\\t<count>"));

    let mine_help = freqmine(&["mine", "--help"], None);
    for needle in [
        "--min-support",
        "--tid",
        "--summary",
        "--backend",
        "ceiling(fraction x |D|)",
        "<k>\\t<item1,item2,...>\\t<support>",
    ] {
        assert!(
            mine_help.stdout.contains(needle),
            "mine --help lacks {needle}"
        );
    }

    let bench_help = freqmine(&["bench", "--help"], None);
    for needle in [
        "--n",
        "--distinct",
        "--seed",
        "--kind",
        "ChaCha8",
        "insert_ns",
    ] {
        assert!(
            bench_help.stdout.contains(needle),
            "bench --help lacks {needle}"
        );
    }
}

#[test]
fn diagnostics_never_reach_stdout() {
    let failing: [&[&str]; 3] = [
        &["count", "/no/such/file"],
        &["mine", "--min-support", "0"],
        &["bench", "--n", "0", "--distinct", "0"],
    ];
    for args in failing {
        let run = freqmine(args, Some(""));
        assert_ne!(run.code, 0);
        assert_eq!(run.stdout, "", "{args:?}");
        assert!(!run.stderr.is_empty(), "{args:?}");
    }
}
