use std::fs;
use std::path::Path;
use std::process::Command;

use multex::search::CertificateDocument;
use multex::verify::VerificationReport;
use multex::{EdgeColoring, PartitionedGraph};
use multex_cli::{run_with, EXIT_CAP, EXIT_FOUND, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED};

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn multex_env(args: &[&str], env_cap: Option<&str>) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("multex").chain(args.iter().copied());
    let code = run_with(argv, env_cap, &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn multex(args: &[&str]) -> Outcome {
    multex_env(args, None)
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn construct_emits_parseable_graphs() {
    let r = multex(&["construct", "--kind", "turan-c4multi", "--parts", "3,2,2"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert_eq!(r.out.lines().filter(|l| l.starts_with("e ")).count(), 10);
    assert_eq!(PartitionedGraph::from_text(&r.out).unwrap().edge_count(), 10);

    let r = multex(&["construct", "--kind", "turan-c3c4multi", "--parts", "3,2,2"]);
    assert_eq!(PartitionedGraph::from_text(&r.out).unwrap().edge_count(), 8);

    let r = multex(&["construct", "--kind", "ar-coloring", "--parts", "3,2,2"]);
    assert_eq!(EdgeColoring::from_text(&r.out).unwrap().color_count(), 9);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let r = multex(&["construct", "--kind", "turan-c4multi", "--parts", "4,4,4", "--out", path.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.is_empty());
    let g = PartitionedGraph::from_text(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(g.edge_count(), 24);
}

#[test]
fn unsorted_parts_are_refused_with_the_sorted_form() {
    let r = multex(&["construct", "--kind", "turan-c4multi", "--parts", "2,3,2"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("did you mean 3,2,2?"), "{}", r.err);
    assert!(r.out.is_empty());
    for bad in ["3,0,1", "3,x,1", "3,2"] {
        assert_eq!(multex(&["exact-turan", "--parts", bad, "--forbid", "c4multi"]).code, EXIT_USAGE, "{bad}");
    }
    let r = multex(&["construct", "--kind", "turan-c4multi", "--parts", "2,2,2,2"]);
    assert_eq!(r.code, EXIT_USAGE);
}

#[test]
fn exact_turan_prints_value_and_witness() {
    let r = multex(&["exact-turan", "--parts", "2,2,2", "--forbid", "c4multi,c3"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let mut lines = r.out.lines();
    assert_eq!(lines.next(), Some("value 6"));
    let witness: String = r.out.split_once('\n').unwrap().1.to_string();
    assert_eq!(PartitionedGraph::from_text(&witness).unwrap().edge_count(), 6);

    let r = multex(&["exact-turan", "--parts", "3,3,3", "--forbid", "c4multi"]);
    assert!(r.out.starts_with("value 15\n"));
}

#[test]
fn thread_count_never_changes_output() {
    for args in [
        &["exact-turan", "--parts", "4,3,2", "--forbid", "c4multi"][..],
        &["exact-turan", "--parts", "3,3,3", "--forbid", "c3,c4multi"][..],
        &["anti-ramsey", "--parts", "4,2,1"][..],
    ] {
        let outputs: Vec<String> = ["1", "4", "8"]
            .iter()
            .map(|t| {
                let mut a = args.to_vec();
                a.extend(["--threads", t]);
                let r = multex(&a);
                assert_eq!(r.code, EXIT_OK, "{}", r.err);
                r.out
            })
            .collect();
        assert!(outputs.iter().all(|o| o == &outputs[0]), "{args:?}");
    }
}

#[test]
fn certificates_are_written_and_reverify() {
    let dir = tempfile::tempdir().unwrap();
    for (args, value) in [
        (vec!["exact-turan", "--parts", "3,2,2", "--forbid", "c4multi"], 10),
        (vec!["anti-ramsey", "--parts", "3,2,1"], 8),
    ] {
        let path = dir.path().join("cert.json");
        let mut a = args.clone();
        a.extend(["--cert", path.to_str().unwrap()]);
        let r = multex(&a);
        assert_eq!(r.code, EXIT_OK, "{}", r.err);
        assert!(r.out.starts_with(&format!("value {value}\n")));
        let doc = CertificateDocument::from_json(&fs::read_to_string(&path).unwrap()).unwrap();
        let cert = doc.into_certificate().unwrap();
        cert.reverify().unwrap();
        assert_eq!(cert.value, value);
    }
}

#[test]
fn caps_refuse_with_exit_3() {
    let r = multex(&["exact-turan", "--parts", "5,4,4", "--forbid", "c4multi"]);
    assert_eq!(r.code, EXIT_CAP);
    assert!(r.err.contains("raise the cap to at least 13"), "{}", r.err);
    assert_eq!(multex(&["exact-turan", "--parts", "1,1,1", "--forbid", "c4multi", "--cap", "2"]).code, EXIT_CAP);
    assert_eq!(multex(&["anti-ramsey", "--parts", "3,3,2"]).code, EXIT_CAP);
    assert_eq!(multex(&["anti-ramsey", "--parts", "3,2,1", "--edge-cap", "10"]).code, EXIT_CAP);
    assert_eq!(multex(&["verify", "--max-sum", "13"]).code, EXIT_CAP);
}

#[test]
fn environment_cap_sets_the_default() {
    let r = multex_env(&["anti-ramsey", "--parts", "3,3,2"], Some("21"));
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.starts_with("value 12\n"));
    // an explicit flag wins over the environment
    assert_eq!(multex_env(&["anti-ramsey", "--parts", "3,3,2", "--edge-cap", "16"], Some("21")).code, EXIT_CAP);
    assert_eq!(multex_env(&["exact-turan", "--parts", "2,2,1", "--forbid", "c4multi"], Some("4")).code, EXIT_CAP);
    assert_eq!(multex_env(&["anti-ramsey", "--parts", "2,2,1"], Some("lots")).code, EXIT_USAGE);
}

#[test]
fn check_reports_through_exit_status() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write(dir.path(), "empty.txt", "multex-graph v1\nparts 2 2 2\n");
    let r = multex(&["check", "--pattern", "c4multi", "--in", &empty]);
    assert_eq!((r.code, r.out.as_str()), (EXIT_OK, "none\n"));

    let full = multex(&["construct", "--kind", "turan-c4multi", "--parts", "2,2,2"]).out;
    let fig = write(dir.path(), "fig.txt", &full);
    let r = multex(&["check", "--pattern", "c4multi", "--in", &fig]);
    assert_eq!(r.code, EXIT_OK);
    let r = multex(&["check", "--pattern", "c3", "--in", &fig]);
    assert_eq!(r.code, EXIT_FOUND);
    assert!(r.out.starts_with("c3 "));
    // two disjoint triangles and a cyclic 6-cycle: no family member
    assert_eq!(multex(&["check", "--pattern", "family-f", "--in", &fig]).code, EXIT_OK);
    let host = write(dir.path(), "host.txt", &PartitionedGraph::complete(multex::PartSizes::new(&[2, 2, 2]).unwrap()).to_text());
    let r = multex(&["check", "--pattern", "family-f", "--in", &host]);
    assert_eq!(r.code, EXIT_FOUND);
    assert!(r.out.starts_with("c4multi "), "{}", r.out);
    assert_eq!(multex(&["check", "--pattern", "multicycle:6", "--in", &fig]).code, EXIT_FOUND);
    assert_eq!(multex(&["check", "--pattern", "multicycle:13", "--in", &fig]).code, EXIT_CAP);
    assert_eq!(multex(&["check", "--pattern", "c9", "--in", &fig]).code, EXIT_USAGE);
}

#[test]
fn rainbow_checks_use_the_colouring() {
    let dir = tempfile::tempdir().unwrap();
    let host = write(dir.path(), "host.txt", &PartitionedGraph::complete(multex::PartSizes::new(&[3, 2, 2]).unwrap()).to_text());
    let lower = write(
        dir.path(),
        "lower.txt",
        &multex(&["construct", "--kind", "ar-coloring", "--parts", "3,2,2"]).out,
    );
    let r = multex(&["check", "--pattern", "c4multi", "--in", &host, "--coloring", &lower, "--rainbow"]);
    assert_eq!((r.code, r.out.as_str()), (EXIT_OK, "none\n"));
    let r = multex(&["check", "--pattern", "family-f", "--in", &host, "--coloring", &lower, "--rainbow"]);
    assert_eq!(r.code, EXIT_OK);

    let rainbow = write(dir.path(), "rainbow.txt", &EdgeColoring::rainbow(multex::PartSizes::new(&[3, 2, 2]).unwrap()).to_text());
    let r = multex(&["check", "--pattern", "c4multi", "--in", &host, "--coloring", &rainbow, "--rainbow"]);
    assert_eq!(r.code, EXIT_FOUND);

    assert_eq!(multex(&["check", "--pattern", "c4multi", "--in", &host, "--rainbow"]).code, EXIT_USAGE);
    let other = write(dir.path(), "other.txt", &EdgeColoring::rainbow(multex::PartSizes::new(&[2, 2, 2]).unwrap()).to_text());
    assert_eq!(
        multex(&["check", "--pattern", "c4multi", "--in", &host, "--coloring", &other, "--rainbow"]).code,
        EXIT_USAGE
    );
}

#[test]
fn enumerate_lists_copies_in_file_numbering() {
    let dir = tempfile::tempdir().unwrap();
    // parts given as 1 2 1: the triangle uses vertex 1 of the middle part
    let g = write(dir.path(), "g.txt", "multex-graph v1\nparts 1 2 1\ne 0:0 1:1\ne 0:0 2:0\ne 1:1 2:0\ne 1:0 2:0\n");
    let r = multex(&["enumerate", "--pattern", "c3", "--in", &g]);
    assert_eq!(r.code, EXIT_OK);
    let line = r.out.trim();
    let mut vs: Vec<&str> = line.split(' ').skip(1).collect();
    vs.sort_unstable();
    assert_eq!(vs, ["0:0", "1:1", "2:0"], "{line}");

    let host = write(dir.path(), "h.txt", &PartitionedGraph::complete(multex::PartSizes::new(&[2, 2, 2]).unwrap()).to_text());
    let r = multex(&["enumerate", "--pattern", "c4multi", "--in", &host]);
    assert_eq!(r.out.lines().count(), 12);
    let mut sorted: Vec<&str> = r.out.lines().collect();
    sorted.dedup();
    assert_eq!(sorted.len(), 12);
    let r = multex(&["--pretty", "enumerate", "--pattern", "c3", "--in", &host]);
    assert!(r.out.ends_with("8 copies\n"));
}

#[test]
fn bad_files_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "multex-graph v1\nparts 2 2\n");
    let r = multex(&["check", "--pattern", "c3", "--in", &bad]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("line 2"), "{}", r.err);
    let missing = dir.path().join("missing.txt");
    assert_eq!(multex(&["enumerate", "--pattern", "c3", "--in", missing.to_str().unwrap()]).code, EXIT_USAGE);
}

#[test]
fn verify_writes_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let r = multex(&[
        "verify",
        "--max-sum",
        "5",
        "--lemma2-trials",
        "50",
        "--probe-samples",
        "20",
        "--seed",
        "3",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(r.code, EXIT_OK, "{}", r.out);
    assert!(r.out.lines().last().unwrap().starts_with("summary pass="));
    assert!(r.out.lines().all(|l| !l.starts_with("fail\t")));
    let report: VerificationReport = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert!(!report.failed());
    assert!(report.entries().iter().any(|e| e.claim == "ar-c4multi" && e.instance == "K(3,1,1)"));
    assert!(report.entries().iter().any(|e| e.claim == "conjecture1"));
    assert_ne!(EXIT_VERIFY_FAILED, EXIT_OK);
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(multex(&[]).code, EXIT_USAGE);
    assert_eq!(multex(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(multex(&["exact-turan", "--parts", "2,2,2", "--forbid", "c5"]).code, EXIT_USAGE);
    let r = multex(&["--help"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("exact-turan"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_multex");
    let out = Command::new(bin)
        .args(["exact-turan", "--parts", "2,2,2", "--forbid", "c4multi,c3"])
        .env_remove("MULTEX_DEFAULT_CAP")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("value 6\n"));

    let out = Command::new(bin)
        .args(["anti-ramsey", "--parts", "3,3,2"])
        .env("MULTEX_DEFAULT_CAP", "21")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(bin)
        .args(["anti-ramsey", "--parts", "3,3,2"])
        .env_remove("MULTEX_DEFAULT_CAP")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(bin).args(["construct", "--kind", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
