use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use binlift::minor::{k4_pattern, MinorCertificate};
use binlift::BinaryMatroid;
use tempfile::TempDir;

const A2: &str = "matroid 2 6\nx y z a b c\n100101\n010011\n";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binlift"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn without_timing(text: &str) -> String {
    text.lines()
        .filter(|l| !l.starts_with("elapsed:"))
        .map(|l| format!("{l}\n"))
        .collect()
}

#[test]
fn gammoid_rejects_split_a2_with_an_empty_sets_certificate() {
    let dir = TempDir::new().unwrap();
    let a2 = write(&dir, "a2.txt", A2);
    let split = run(&["op", "split", "--matroid", &a2, "--set", "x,y,z"]);
    assert_eq!(split.status.code(), Some(0));
    let h = write(&dir, "a2h.txt", &stdout(&split));

    let out = run(&["gammoid", &h]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("no"));
    let cert: MinorCertificate = lines.next().unwrap().parse().unwrap();
    assert!(cert.is_trivial());
    let m: BinaryMatroid = fs::read_to_string(&h).unwrap().parse().unwrap();
    assert!(cert.verify(&m, k4_pattern()));

    let yes = run(&["gammoid", &a2]);
    assert_eq!((yes.status.code(), stdout(&yes).as_str()), (Some(0), "yes\n"));
}

#[test]
fn empty_split_set_returns_the_input_bytes() {
    let dir = TempDir::new().unwrap();
    let a2 = write(&dir, "a2.txt", A2);
    let out = run(&["op", "split", "--matroid", &a2, "--set", ""]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), A2);
}

#[test]
fn operation_outputs_parse_back() {
    let dir = TempDir::new().unwrap();
    let a2 = write(&dir, "a2.txt", A2);
    for args in [
        vec!["op", "esplit", "--matroid", &a2, "--set", "x,y"],
        vec!["op", "essplit", "--matroid", &a2, "--set", "y,x", "--pivot", "x"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        let m: BinaryMatroid = stdout(&out).parse().unwrap();
        assert_eq!(m.to_string(), stdout(&out));
        assert!(m.index_of("γ1").is_ok());
    }
    let es = run(&["op", "essplit", "--matroid", &a2, "--set", "x,y", "--pivot", "x"]);
    let m: BinaryMatroid = stdout(&es).parse().unwrap();
    assert_eq!(m.len(), 8);
    assert!(m.index_of("γp1").is_ok());
}

#[test]
fn duplicate_set_labels_are_dropped_with_a_warning() {
    let dir = TempDir::new().unwrap();
    let a2 = write(&dir, "a2.txt", A2);
    let dup = run(&["op", "split", "--matroid", &a2, "--set", "z,x,y,x"]);
    let plain = run(&["op", "split", "--matroid", &a2, "--set", "x,y,z"]);
    assert_eq!(stdout(&dup), stdout(&plain));
    assert!(stderr(&dup).contains("duplicate label `x`"));
    assert!(stderr(&plain).is_empty());
}

#[test]
fn graph_input_is_converted_and_noted() {
    let dir = TempDir::new().unwrap();
    let g = write(
        &dir,
        "k4.txt",
        "graph 4 6\na 0 1\nb 0 2\nc 0 3\nd 1 2\ne 1 3\nf 2 3\n",
    );
    let out = run(&["op", "split", "--graph", &g, "--set", ""]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("cycle matroid"));
    let m: BinaryMatroid = stdout(&out).parse().unwrap();
    assert_eq!((m.rank(), m.len()), (3, 6));
    // graph files are also accepted where a matroid is expected
    let gm = run(&["gammoid", &g]);
    assert_eq!(gm.status.code(), Some(1));
}

#[test]
fn minor_reports_found_or_absent() {
    let dir = TempDir::new().unwrap();
    let a2 = write(&dir, "a2.txt", A2);
    let split = stdout(&run(&["op", "split", "--matroid", &a2, "--set", "x,y,z"]));
    let host = write(&dir, "host.txt", &split);
    let found = run(&["minor", "--host", &host, "--pattern", "K4"]);
    assert_eq!(found.status.code(), Some(0));
    assert!(stdout(&found).parse::<MinorCertificate>().is_ok());
    let absent = run(&["minor", "--host", &host, "--pattern", "U24"]);
    assert_eq!((absent.status.code(), stdout(&absent).as_str()), (Some(1), "absent\n"));
    // patterns can be files; A2 has the same size as the host but lower rank
    let pat = run(&["minor", "--host", &host, "--pattern", &host]);
    assert_eq!(pat.status.code(), Some(0));
    let smaller = run(&["minor", "--host", &host, "--pattern", &a2]);
    assert_eq!(smaller.status.code(), Some(1));
}

#[test]
fn errors_map_to_distinct_exit_codes() {
    let dir = TempDir::new().unwrap();
    let a2 = write(&dir, "a2.txt", A2);
    let bad = write(&dir, "bad.txt", "matroid 2 6\nx y z\n");
    let missing = dir.path().join("missing.txt");
    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["gammoid", missing.to_str().unwrap()], 2),
        (vec!["op", "split", "--set", "x"], 2),
        (vec!["verify", "nonsense"], 2),
        (vec!["gammoid", &bad], 3),
        (vec!["op", "split", "--matroid", &a2, "--set", "q"], 4),
        (vec!["catalog", "show", "G9"], 4),
        (vec!["census", "--max-edges", "12"], 5),
        (vec!["op", "essplit", "--matroid", &a2, "--set", "x,y", "--pivot", "z"], 6),
    ];
    for (args, code) in cases {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(code), "{args:?}: {}", stderr(&out));
        assert!(!stderr(&out).is_empty());
    }
}

#[test]
fn verify_quotients_lists_eight_extensions() {
    let out = run(&["verify", "quotients-k4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("report quotients-k4\n"));
    assert!(text.contains("instances_checked: 8\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("note: column ")).count(), 8);
    assert!(text.lines().last().unwrap().starts_with("elapsed: "));
}

#[test]
fn verify_output_does_not_depend_on_jobs() {
    let dir = TempDir::new().unwrap();
    let one = dir.path().join("one.txt");
    let four = dir.path().join("four.txt");
    for (jobs, path) in [("1", &one), ("4", &four)] {
        let out = run(&[
            "verify", "g2", "--max-edges", "5", "--jobs", jobs, "--out", path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert!(stdout(&out).is_empty());
    }
    let (a, b) = (fs::read_to_string(&one).unwrap(), fs::read_to_string(&four).unwrap());
    assert_eq!(without_timing(&a), without_timing(&b));
    assert!(binlift::verifier::reverify_report_text(&a).unwrap());
}

#[test]
fn census_cache_round_trips() {
    let dir = TempDir::new().unwrap();
    let cache = dir.path().join("census.txt");
    let c = cache.to_str().unwrap();
    let fresh = run(&["census", "--max-edges", "4", "--gammoids", "--cache", c]);
    assert_eq!(fresh.status.code(), Some(0));
    assert!(Path::new(&cache).exists());
    let cached = run(&["census", "--max-edges", "4", "--gammoids", "--cache", c]);
    assert_eq!(stdout(&fresh), stdout(&cached));
    assert!(stdout(&fresh).ends_with("count: 30\n"));

    // a cache written for other parameters is ignored and rewritten
    let other = run(&["census", "--max-edges", "2", "--cache", c]);
    assert_eq!(stdout(&other).lines().last(), Some("count: 6"));

    let text = fs::read_to_string(&cache).unwrap();
    fs::write(&cache, text.replace("2:0-1", "2:1-0,0-0")).unwrap();
    let corrupt = run(&["census", "--max-edges", "2", "--cache", c]);
    assert_eq!(corrupt.status.code(), Some(3));
}

#[test]
fn catalog_show_prints_a_parseable_matroid() {
    let out = run(&["catalog", "show", "K4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let start = text.find("\nmatroid ").unwrap() + 1;
    let block: String = text[start..].lines().take(5).map(|l| format!("{l}\n")).collect();
    let m: BinaryMatroid = block.parse().unwrap();
    assert_eq!((m.rank(), m.len()), (3, 6));
}

#[test]
fn catalog_check_passes() {
    let out = run(&["catalog", "check"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert_eq!(stdout(&out).lines().filter(|l| l.contains(": PASS")).count(), 17);
}
