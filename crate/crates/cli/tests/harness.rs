//! End-to-end tests of the streaming pipeline and the binary: enumeration
//! counts, file sources, output determinism across worker counts, and
//! relabeling invariance of the verdicts.

use std::fs;
use std::io::Write as _;
use std::process::Command;

use lapsum::families;
use lapsum::graph::Graph;
use lapsum::graph6::{parse_graph6, write_graph6};
use lapsum_cli::enumerate::{enumerate_threshold, StreamError};
use lapsum_cli::pipeline::{run, Checks, GraphSource, KSelect, RunConfig};
use lapsum_cli::records::OutputFormat;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lapsum"))
}

#[test]
fn graph6_file_source_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("threshold4.g6");
    let mut f = fs::File::create(&path).unwrap();
    for g in enumerate_threshold(4).unwrap() {
        writeln!(f, "{}", write_graph6(&g)).unwrap();
    }
    drop(f);

    let cfg = RunConfig::new(GraphSource::Graph6File(path));
    let s = run(&cfg).unwrap();
    assert_eq!(s.graphs, 8);
    // 8 graphs x 3 valid k x 2 checks.
    assert_eq!(s.records, 48);
    assert_eq!((s.violations, s.anomalies), (0, 0));
}

#[test]
fn canonical_five_vertex_corpus_streams_from_file() {
    // Canonical representative = the labeled copy with the smallest
    // edge-mask code over all 120 relabelings. 34 isomorphism classes on
    // five vertices is the classical count.
    let mut perms: Vec<[usize; 5]> = Vec::new();
    let mut p = [0usize, 1, 2, 3, 4];
    heap_permutations(&mut p, 5, &mut perms);
    assert_eq!(perms.len(), 120);

    let mut canonical = std::collections::BTreeSet::new();
    for g in lapsum_cli::enumerate::enumerate_labeled(5).unwrap() {
        let code = perms
            .iter()
            .map(|p| {
                let edges: Vec<(usize, usize)> =
                    g.edges().map(|(u, v)| (p[u], p[v])).collect();
                let h = Graph::from_edges(5, &edges).unwrap();
                write_graph6(&h)
            })
            .min()
            .unwrap();
        canonical.insert(code);
    }
    assert_eq!(canonical.len(), 34);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("canonical5.g6");
    fs::write(&path, canonical.iter().map(|l| format!("{l}\n")).collect::<String>()).unwrap();

    let s = run(&RunConfig::new(GraphSource::Graph6File(path))).unwrap();
    assert_eq!(s.graphs, 34);
    assert_eq!(s.records, 34 * 4 * 2);
    assert_eq!((s.violations, s.anomalies), (0, 0));
}

fn heap_permutations(p: &mut [usize; 5], k: usize, out: &mut Vec<[usize; 5]>) {
    if k == 1 {
        out.push(*p);
        return;
    }
    for i in 0..k {
        heap_permutations(p, k - 1, out);
        if k % 2 == 0 {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
}

#[test]
fn empty_file_is_an_empty_stream() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.g6");
    fs::write(&path, "").unwrap();
    let s = run(&RunConfig::new(GraphSource::Graph6File(path))).unwrap();
    assert_eq!((s.graphs, s.records), (0, 0));
}

#[test]
fn malformed_line_is_reported_with_its_number() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.g6");
    let mut f = fs::File::create(&path).unwrap();
    writeln!(f, "C~").unwrap();
    writeln!(f, "C?").unwrap();
    writeln!(f, "not graph6 \u{1F9EE}").unwrap();
    writeln!(f, "C^").unwrap();
    drop(f);

    let err = run(&RunConfig::new(GraphSource::Graph6File(path))).unwrap_err();
    match err {
        StreamError::Parse { line, .. } => assert_eq!(line, 3),
        other => panic!("expected a parse error naming line 3, got {other}"),
    }
}

#[test]
fn output_is_identical_for_any_worker_count() {
    // 2^11 = 2048 threshold graphs: two full chunks, so reordering matters.
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("one.jsonl");
    let out3 = dir.path().join("three.jsonl");

    for (path, jobs) in [(&out1, 1), (&out3, 3)] {
        let mut cfg = RunConfig::new(GraphSource::ThresholdExhaustive { n: 12 });
        cfg.jobs = jobs;
        cfg.out = Some((path.clone(), OutputFormat::Jsonl));
        let s = run(&cfg).unwrap();
        assert_eq!(s.graphs, 2048);
        assert_eq!((s.violations, s.anomalies), (0, 0));
    }

    let a = fs::read(&out1).unwrap();
    let b = fs::read(&out3).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b, "records must not depend on worker count");

    // Spot-check the stream structure: indices present in order, known
    // discriminators, line count = graphs x k x checks.
    let text = String::from_utf8(a).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2048 * 11 * 2);
    let mut last_index = 0usize;
    for line in &lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let idx = v["index"].as_u64().unwrap() as usize;
        assert!(idx >= last_index, "indices must be non-decreasing");
        last_index = idx;
        let check = v["check"].as_str().unwrap();
        assert!(check == "sum_bound" || check == "complement_pair");
    }
}

#[test]
fn every_threshold_graph_attains_its_bound_once() {
    let cfg = RunConfig::new(GraphSource::ThresholdExhaustive { n: 8 });
    let s = run(&cfg).unwrap();
    assert_eq!(s.graphs, 128);
    assert_eq!((s.violations, s.anomalies), (0, 0));
    // Each threshold graph with at least one edge attains the sum bound at
    // exactly k = clique number - 1; the edgeless graph never does. n = 8 is
    // even, so the complement-pair bound is strict throughout.
    assert_eq!(s.equalities, 127);
    assert!(s.witnesses.iter().all(|w| w.check == "sum_bound"));
    let mut by_graph = std::collections::HashMap::new();
    for w in &s.witnesses {
        *by_graph.entry(w.index).or_insert(0) += 1;
    }
    assert!(by_graph.values().all(|&c| c == 1));
}

#[test]
fn complete_split_is_a_double_equality_witness() {
    let g = families::complete_split(9, 4).unwrap();
    let cfg = RunConfig::new(GraphSource::List(vec![g]));
    let s = run(&cfg).unwrap();
    // Equality at k = 4 for the sum bound, and again for the complement
    // pair since n = 9 = 2k + 1 and the clique number is k + 1.
    assert_eq!(s.equalities, 2);
    assert!(s.witnesses.iter().all(|w| w.k == 4));
    assert_eq!((s.violations, s.anomalies), (0, 0));
}

#[test]
fn verdicts_are_relabeling_invariant() {
    let base = families::complete_split(7, 3).unwrap();
    let perms: [[usize; 7]; 5] = [
        [6, 5, 4, 3, 2, 1, 0],
        [1, 2, 3, 4, 5, 6, 0],
        [3, 0, 6, 2, 5, 1, 4],
        [2, 4, 6, 1, 3, 5, 0],
        [4, 1, 5, 0, 6, 3, 2],
    ];
    let mut graphs = vec![base.clone()];
    for p in perms {
        let edges: Vec<(usize, usize)> =
            base.edges().map(|(u, v)| (p[u], p[v])).collect();
        graphs.push(Graph::from_edges(7, &edges).unwrap());
    }

    let mut cfg = RunConfig::new(GraphSource::List(graphs));
    cfg.checks = Checks { brouwer: true, ng: true, bounds: true, identities: true };
    let s = run(&cfg).unwrap();
    assert_eq!(s.graphs, 6);
    assert_eq!((s.violations, s.anomalies), (0, 0));
    // Each copy: sum-bound equality at k = 3 and complement-pair equality at
    // k = 3 (n = 7 = 2k + 1, clique number 4).
    assert_eq!(s.equalities, 12);
    assert!(s.witnesses.iter().all(|w| w.k == 3));
}

#[test]
fn k_list_restricts_records() {
    let mut cfg = RunConfig::new(GraphSource::LabeledExhaustive { n: 5 });
    cfg.ks = KSelect::List(vec![2, 4]);
    cfg.checks = Checks { brouwer: true, ng: false, bounds: false, identities: false };
    let s = run(&cfg).unwrap();
    assert_eq!(s.graphs, 1024);
    assert_eq!(s.records, 1024 * 2);
}

#[test]
fn binary_verify_clean_run_exits_zero() {
    let out = bin().args(["verify", "--n", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("graphs 8"));
    assert!(stdout.contains("violations 0"));
}

#[test]
fn binary_usage_errors_exit_two() {
    // Neither --n nor --input.
    let out = bin().arg("verify").output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Exhaustive labeled mode past the cap.
    let out = bin().args(["verify", "--n", "9"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("labeled enumeration"));

    // Unknown check name.
    let out = bin()
        .args(["verify", "--n", "3", "--checks", "brouwer,magic"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn binary_file_error_names_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.g6");
    fs::write(&path, "C~\nC?\n@@@@@@@@\n").unwrap();
    let out = bin()
        .args(["verify", "--input", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("line 3"), "stderr was: {stderr}");
}

#[test]
fn binary_family_graph6_pipes_back_in() {
    let out = bin()
        .args(["family", "complete-split", "6", "3", "--graph6-only"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let line = String::from_utf8(out.stdout).unwrap();
    let g = parse_graph6(line.trim()).unwrap();
    assert_eq!((g.n(), g.edge_count()), (6, 12));

    let out = bin()
        .args(["family", "threshold", "00101", "--graph6-only"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let g = parse_graph6(String::from_utf8(out.stdout).unwrap().trim()).unwrap();
    assert_eq!(g.n(), 5);

    // A cone over a complete base is exactly a complete split graph.
    let k3 = write_graph6(&Graph::complete(3).unwrap());
    let cone = bin()
        .args(["family", "cone", &k3, "2", "--graph6-only"])
        .output()
        .unwrap();
    assert_eq!(cone.status.code(), Some(0));
    let split = bin()
        .args(["family", "complete-split", "5", "3", "--graph6-only"])
        .output()
        .unwrap();
    assert_eq!(cone.stdout, split.stdout);
}

#[test]
fn binary_spectrum_reports_threshold_equality() {
    let out = bin().args(["spectrum", "D?{"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("threshold: true"));
    assert!(stdout.contains("Equality"));
}

#[test]
fn binary_csv_output_has_header_and_all_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n4.csv");
    let out = bin()
        .args([
            "verify",
            "--n",
            "4",
            "--out",
            path.to_str().unwrap(),
            "--format",
            "csv",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], lapsum_cli::records::CSV_HEADER);
    // 64 graphs x 3 k x 2 checks.
    assert_eq!(lines.len(), 1 + 64 * 3 * 2);
    let cols = lines[0].split(',').count();
    assert!(lines.iter().all(|l| l.split(',').count() == cols));
}
