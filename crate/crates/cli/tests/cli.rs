use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_supercong"));
    c.env_remove("SUPERCONG_CACHE_DIR")
        .env_remove("SUPERCONG_LEDGER");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn values(o: &Output) -> Vec<String> {
    stdout(o)
        .lines()
        .map(|l| l.split('\t').nth(1).unwrap().to_string())
        .collect()
}

#[test]
fn compute_examples() {
    assert_eq!(
        values(&run(&["compute", "apery", "--n", "0..3"])),
        ["1", "5", "73", "1445"]
    );
    assert_eq!(
        values(&run(&["compute", "s18", "--n", "0..2"])),
        ["1", "6", "54"]
    );
    assert_eq!(values(&run(&["compute", "S:2,2,0", "--n", "2"])), ["73"]);
}

#[test]
fn unknown_sequence_lists_catalog() {
    let o = run(&["compute", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("catalog:") && err.contains("s18"));
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = bin()
        .env("SUPERCONG_CACHE_DIR", dir.path())
        .args(["compute", "apery", "--n", "0..4"])
        .output()
        .unwrap();
    assert!(o.status.success());
    let files: Vec<_> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    assert_eq!(files.len(), 1);
    let text = std::fs::read_to_string(&files[0]).unwrap();
    assert_eq!(text.lines().nth(3), Some("3\t1445"));
    // a second run reads the same values back
    assert_eq!(
        values(
            &bin()
                .env("SUPERCONG_CACHE_DIR", dir.path())
                .args(["compute", "apery", "--n", "3"])
                .output()
                .unwrap()
        ),
        ["1445"]
    );
}

#[test]
fn verify_exit_codes() {
    assert!(
        run(&["verify", "thm1.3", "--primes", "2,3,5", "--m", "1..2", "--r", "1..2"])
            .status
            .success()
    );
    assert!(run(&["verify", "vanhamme", "--primes", "3,5,7"])
        .status
        .success());
    assert_eq!(
        run(&["verify", "thm1.2", "--primes", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "thm1.2", "--m", "2..1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "no-such-target"]).status.code(), Some(2));
    assert_eq!(
        run(&["--jobs", "0", "verify", "tables"]).status.code(),
        Some(2)
    );
}

#[test]
fn json_records_use_the_two_term_schema() {
    let o = run(&[
        "verify", "thm1.3", "--primes", "3", "--m", "1", "--r", "1", "--format", "json",
    ]);
    let line = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    for key in [
        "sequence",
        "p",
        "m",
        "r",
        "claimed_exponent",
        "observed_valuation",
        "pass",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["sequence"], "s18");
}

#[test]
fn csv_mirrors_fields() {
    let o = run(&["verify", "example3.1", "--format", "csv"]);
    let text = stdout(&o);
    let header = text.lines().next().unwrap();
    assert_eq!(
        header,
        "assertion,claimed_exponent,m,observed_valuation,p,pass,r,sequence"
    );
    assert_eq!(text.lines().count(), 9);
}

fn ledger_of(dir: &Path, args: &[&str]) -> std::path::PathBuf {
    let path = dir.join("ledger.jsonl");
    let mut full = vec!["--ledger", path.to_str().unwrap()];
    full.extend_from_slice(args);
    assert!(run(&full).status.success());
    path
}

#[test]
fn ledger_report_clean_injected_and_corrupt() {
    let dir = tempfile::tempdir().unwrap();
    let path = ledger_of(dir.path(), &["verify", "thm1.3"]);
    ledger_of(dir.path(), &["verify", "conj23"]);
    let report = stdout(&run(&["report", path.to_str().unwrap()]));
    assert!(report.trim_end().ends_with("\n0 failures"), "{report}");
    assert!(report.contains("two_term 76"));
    // s18 at p = 3, r = 1 is claimed modulo 3^3 and holds there
    let s18 = report.lines().find(|l| l.starts_with("s18 ")).unwrap();
    assert!(
        s18.split_whitespace()
            .last()
            .unwrap()
            .parse::<i64>()
            .unwrap()
            >= 0
    );

    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let target = lines
        .iter()
        .position(|l| l.contains(r#""p":5"#) && l.contains("proven"))
        .unwrap();
    lines[target] = lines[target].replace(r#""pass":true"#, r#""pass":false"#);
    lines.push("{not json".into());
    std::fs::write(&path, lines.join("\n")).unwrap();
    let report = stdout(&run(&["report", path.to_str().unwrap()]));
    assert!(
        report.contains("failure: two_term FAIL s18 p=5"),
        "{report}"
    );
    assert!(report.contains(&format!("skipped line {}", lines.len())));
    assert!(report.trim_end().ends_with("\n1 failures"));
}

#[test]
fn conjectural_failures_fatal_only_when_strict() {
    let dir = tempfile::tempdir().unwrap();
    let path = ledger_of(
        dir.path(),
        &["verify", "tables", "--primes", "5", "--m", "1", "--r", "1"],
    );
    let text = std::fs::read_to_string(&path).unwrap();
    let line = text.lines().find(|l| l.contains("conjectural")).unwrap();
    std::fs::write(&path, line.replace(r#""pass":true"#, r#""pass":false"#)).unwrap();
    let lax = stdout(&run(&["report", path.to_str().unwrap()]));
    assert!(lax.contains("(not fatal)"));
    let strict = stdout(&run(&["--strict", "report", path.to_str().unwrap()]));
    assert!(!strict.contains("(not fatal)") && strict.contains("1 failures"));
}

#[test]
fn ledger_lines_roundtrip_with_sorted_keys() {
    let dir = tempfile::tempdir().unwrap();
    let path = ledger_of(dir.path(), &["verify", "eta-beukers", "--primes", "3,5,7"]);
    for line in std::fs::read_to_string(&path).unwrap().lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v.to_string(), line);
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["kind", "payload", "timestamp", "tool_version"]);
        assert_eq!(v["kind"], "beukers");
    }
}

#[test]
fn output_is_independent_of_jobs() {
    let one = run(&["--jobs", "1", "verify", "tables", "--format", "json"]);
    let four = run(&["--jobs", "4", "verify", "tables", "--format", "json"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    let q = [
        "search",
        "--model",
        "quadratic",
        "--a",
        "0..12",
        "--b",
        "0..4",
        "--c",
        "-40..40",
        "--nmax",
        "20",
    ];
    let s1 = bin().arg("--jobs").arg("1").args(q).output().unwrap();
    let s3 = bin().arg("--jobs").arg("3").args(q).output().unwrap();
    assert_eq!(s1.stdout, s3.stdout);
}

#[test]
fn search_lines_and_deep_mode() {
    let o = run(&[
        "--deep", "search", "--model", "cubic", "--a", "17", "--b", "5", "--c", "-5..5", "--d",
        "-2..2", "--nmax", "20",
    ]);
    assert!(o.status.success());
    let hits: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let apery = hits
        .iter()
        .find(|h| h["params"]["c"] == 1 && h["params"]["d"] == 0)
        .unwrap();
    assert_eq!(apery["n_checked"], 40);
    assert_eq!(apery["known_label"], "gamma (Apery)");
    assert_eq!(run(&["search", "--nmax", "5"]).status.code(), Some(2));
}

#[test]
fn eta_csv() {
    let o = run(&["eta", "--nmax", "5"]);
    assert_eq!(stdout(&o), "n,a(n)\n0,0\n1,1\n2,0\n3,-4\n4,0\n5,-2\n");
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("eta.csv");
    assert!(
        run(&["eta", "--nmax", "3", "--output", out.to_str().unwrap()])
            .status
            .success()
    );
    assert_eq!(
        std::fs::read_to_string(out).unwrap(),
        "n,a(n)\n0,0\n1,1\n2,0\n3,-4\n"
    );
}
