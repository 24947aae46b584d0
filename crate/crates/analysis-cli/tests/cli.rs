//! End-to-end tests through the compiled binary: exit codes, output
//! determinism, golden tables, and the documented worked examples.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_analysis-cli"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn edge_lines(text: &str) -> usize {
    text.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('n')).count()
}

#[test]
fn generated_graphs_match_their_documented_shapes() {
    let strip = stdout(&run(&["generate", "--family", "honeycomb", "--r", "1", "--s", "1", "--t", "2"]));
    assert!(strip.starts_with("n 10\n"), "{strip}");
    assert_eq!(edge_lines(&strip), 11);

    let cat = stdout(&run(&["generate", "--family", "caterpillar", "--legs", "2,0,3"]));
    assert!(cat.starts_with("n 8\n"), "{cat}");
    assert_eq!(edge_lines(&cat), 7);

    let poly = stdout(&run(&["generate", "--family", "polygon-line", "--n", "4", "--t", "2"]));
    assert!(poly.starts_with("n 14\n"), "{poly}");
    assert_eq!(edge_lines(&poly), 15);
}

#[test]
fn generated_files_round_trip_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let text_path = dir.path().join("strip.txt");
    let json_path = dir.path().join("strip.json");

    let out = run(&[
        "generate", "--family", "honeycomb", "--r", "1", "--s", "1", "--t", "2",
        "--output", text_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let out = run(&[
        "generate", "--format", "json", "--family", "honeycomb", "--r", "1", "--s", "1",
        "--t", "2", "--output", json_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);

    for path in [&text_path, &json_path] {
        let out = run(&["verify", "--input", path.to_str().unwrap()]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        let text = stdout(&out);
        assert!(text.contains("verdict    pass"), "{text}");
    }
}

#[test]
fn exit_codes_honor_the_contract() {
    // 0: a clean run
    assert_eq!(code(&run(&["tables", "--id", "2"])), 0);

    // 2: parse errors, both ours and clap's
    assert_eq!(code(&run(&["tables", "--id", "2", "--assign", "t1:1"])), 2);
    assert_eq!(code(&run(&["no-such-subcommand"])), 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "n x\n0 1\n").unwrap();
    assert_eq!(code(&run(&["mta", "--input", bad.to_str().unwrap()])), 2);

    // 3: structurally invalid requests
    assert_eq!(code(&run(&["generate", "--family", "path"])), 3);
    assert_eq!(code(&run(&["generate", "--family", "moebius", "--n", "4"])), 3);
    assert_eq!(code(&run(&["tables", "--id", "9"])), 3);
    let oob = dir.path().join("oob.txt");
    std::fs::write(&oob, "n 3\n0 5\n").unwrap();
    assert_eq!(code(&run(&["mta", "--input", oob.to_str().unwrap()])), 3);

    // 4: face budget, lifted by --big
    let capped = &["homology", "--family", "cycle", "--n", "12", "--face-budget", "5"];
    assert_eq!(code(&run(capped)), 4);
    let lifted = &["homology", "--family", "cycle", "--n", "12", "--face-budget", "5", "--big"];
    assert_eq!(code(&run(lifted)), 0);
}

#[test]
fn json_reports_are_byte_identical_across_runs() {
    let args = ["verify", "--format", "json", "--family", "honeycomb", "--r", "1", "--s", "1", "--t", "2"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    assert!(!stdout(&first).contains("timings_ms"));

    let timed = run(&[&args[..], &["--timings"]].concat());
    assert!(stdout(&timed).contains("timings_ms"));

    let tables = ["tables", "--format", "json", "--id", "3"];
    assert_eq!(run(&tables).stdout, run(&tables).stdout);
}

#[test]
fn tables_match_the_golden_transcriptions() {
    let golden = [
        include_str!("golden/table1.txt"),
        include_str!("golden/table2.txt"),
        include_str!("golden/table3.txt"),
    ];
    for (i, want) in golden.iter().enumerate() {
        let id = (i + 1).to_string();
        let out = run(&["tables", "--id", &id]);
        assert_eq!(code(&out), 0);
        assert_eq!(stdout(&out), *want, "table {id} drifted from the transcription");
    }
}

#[test]
fn evaluated_tables_pass_their_oracle_check() {
    let out = run(&["tables", "--id", "3", "--assign", "t1=1,t3=0,t6=1,t7=2", "--check"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("failures 0"), "{text}");

    let out = run(&["tables", "--id", "1", "--m", "3", "--check"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn verify_reproduces_the_documented_examples() {
    let out = run(&["verify", "--family", "caterpillar", "--legs", "2,2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("wedge: 1xS^0 v 1xS^1"), "{text}");
    assert!(text.contains("formula-vs-oracle"), "{text}");

    let out = run(&["verify", "--family", "path", "--n", "5"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("wedge: contractible"), "{text}");
    assert!(text.contains("verdict    pass"), "{text}");

    // the default strategy is announced, and an override sticks
    let out = stdout(&run(&["verify", "--family", "polygon-line", "--n", "4", "--t", "2"]));
    assert!(out.contains("strategy SmallestAj"), "{out}");
    let out = stdout(&run(&[
        "verify", "--family", "polygon-line", "--n", "4", "--t", "2",
        "--strategy", "lexicographic",
    ]));
    assert!(out.contains("strategy Lexicographic"), "{out}");
}

#[test]
fn mta_and_homotopy_render_their_stages() {
    let out = run(&[
        "mta", "--family", "honeycomb", "--r", "1", "--s", "1", "--t", "2",
        "--strategy", "fixed=1,4",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("2 cells {2:2}"), "{text}");

    let out = run(&["homotopy", "--family", "perfect-binary-tree", "--h", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("connectivity >="));

    let out = run(&["homotopy", "--family", "polygon-line", "--n", "4", "--t", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("cell window"));

    let out = run(&["homotopy", "--format", "json", "--family", "antenna-tree", "--h", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "null");
}

#[test]
fn small_sweeps_run_through_the_binary() {
    let out = run(&["sweep", "--what", "caterpillar", "--max-spine", "2", "--max-leg", "2", "--threads", "2"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("total 8, failures 0"));

    let args = ["sweep", "--format", "json", "--what", "random", "--instances", "5", "--seed", "11", "--threads", "2"];
    let first = run(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, run(&args).stdout);
}
