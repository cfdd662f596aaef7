use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/corpus")
        .join(name)
}

fn mealy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mealy"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn aleshin() -> String {
    corpus("aleshin.mealy").display().to_string()
}

#[test]
fn check_reports_all_predicates() {
    let o = mealy(&["check", &aleshin()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for p in ["invertible", "reversible", "coreversible", "bireversible"] {
        assert!(out.contains(&format!("{p}: yes")), "{out}");
    }
}

#[test]
fn growth_csv_rows() {
    let o = mealy(&["growth", &aleshin(), "--radius", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,gamma,log2_gamma");
    assert_eq!(lines.len(), 4);
    let gamma: Vec<u64> = lines[1..]
        .iter()
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert!(gamma.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn missing_file_is_a_usage_error() {
    let o = mealy(&["power", "missing.mealy", "-n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing.mealy"));
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(mealy(&["growth"]).status.code(), Some(2));
    assert_eq!(mealy(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(mealy(&["nq", &aleshin(), "-q", "w"]).status.code(), Some(2));
    assert_eq!(mealy(&["props", "--only", "L99"]).status.code(), Some(2));
}

#[test]
fn budget_exceeded_exit_code() {
    let o = mealy(&["power", &aleshin(), "-n", "3", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("dup.mealy");
    std::fs::write(&p, "x 0 -> x 0\nx 0 -> x 1\nx 1 -> x 1\n").unwrap();
    let o = mealy(&["check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn help_lists_every_subcommand() {
    let out = stdout(&mealy(&["--help"]));
    for cmd in [
        "check",
        "invert",
        "augment",
        "power",
        "component",
        "ratios",
        "minimize",
        "nq",
        "equal",
        "growth",
        "order",
        "witness",
        "props",
        "export-dot",
    ] {
        assert!(out.contains(cmd), "{cmd} missing from help");
    }
}

#[test]
fn automaton_outputs_parse_back() {
    let a = aleshin();
    for args in [
        vec!["invert", &a],
        vec!["augment", &a],
        vec!["power", &a, "-n", "2"],
        vec!["component", &a, "-q", "x", "-n", "2"],
        vec!["minimize", &a],
    ] {
        let o = mealy(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        mealy::parse_automaton(&stdout(&o)).unwrap();
    }
}

#[test]
fn inverse_has_primed_states() {
    let out = stdout(&mealy(&["invert", &aleshin()]));
    assert!(out.contains("z' 1 -> x' 1"), "{out}");
}

#[test]
fn dot_export() {
    let out = stdout(&mealy(&["export-dot", &aleshin()]));
    assert!(out.starts_with("digraph"));
    assert!(out.contains("label=\"0|0, 1|1\""));
    let o = mealy(&["growth", &aleshin(), "--format", "dot"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn minimize_writes_class_map() {
    let dir = tempfile::tempdir().unwrap();
    let map = dir.path().join("classes.txt");
    let o = mealy(&["minimize", &aleshin(), "--classes", map.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(map).unwrap(), "x -> x\ny -> y\nz -> z\n");
}

#[test]
fn ratios_and_nq_columns() {
    let out = stdout(&mealy(&["ratios", &aleshin(), "-q", "x", "--format", "csv"]));
    assert_eq!(out.lines().next(), Some("n,size_cc,ratio,follow_card,precede_card"));
    assert_eq!(out.lines().nth(1), Some("1,3,3,3,3"));
    let out = stdout(&mealy(&["nq", &aleshin(), "-q", "x", "--format", "csv"]));
    assert_eq!(
        out.lines().next(),
        Some("n,size_Nq,ratio,penultimate_count,first_letter_set")
    );
}

#[test]
fn witness_csv_has_summary() {
    let out = stdout(&mealy(&["witness", &aleshin(), "-q", "x", "--horizon", "4", "--format", "csv"]));
    assert!(out.starts_with("n,size_cc,mz_size,nq_size,nq_ratio,sandwich_lo,sandwich_hi\n"));
    assert!(out.contains("distinct_sizes_ok,true"));
    assert!(out.contains("k,3"));
}

#[test]
fn equal_and_order() {
    assert!(stdout(&mealy(&["equal", &aleshin(), "--word", "xx'", "--word", "1"])).contains("=="));
    assert!(stdout(&mealy(&["equal", &aleshin(), "--word", "z", "--word", "zz"])).contains("!="));
    let swap = corpus("swap_identity.mealy").display().to_string();
    let out = stdout(&mealy(&["order", &swap, "-q", "a", "--format", "csv"]));
    assert_eq!(out.lines().nth(1), Some("a,finite,2,0,8"));
}

#[test]
fn props_on_builtin_corpus() {
    let o = mealy(&["props", "--builtin", "--horizon", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("property_id,automaton,verdict"));
    assert_eq!(out.lines().count(), 1 + 4 * 14);
    assert!(!out.contains("FAIL"));
}

#[test]
fn props_mutant_skips() {
    let mutant = corpus("aleshin_mutant.mealy").display().to_string();
    let o = mealy(&["props", &mutant, "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().skip(1).all(|l| l.ends_with(",SKIP")));
}

#[test]
fn empty_props_run() {
    let o = mealy(&["props"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn corpus_directory_is_sorted() {
    let dir = corpus("").display().to_string();
    let out = stdout(&mealy(&["props", "--corpus", &dir, "--only", "L1", "--format", "csv"]));
    let names: Vec<&str> = out.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(names, ["aleshin", "aleshin_mutant", "identity", "swap_identity"]);
}
