//! End-to-end runs of the `cambrian-pop` binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cambrian-pop")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

#[test]
fn pop_weak_example() {
    let o = run(&["pop", "weak", "--type", "A4", "--perm", "52341"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), r#"{"result":"25314"}"#);
}

#[test]
fn motzkin_empty_path() {
    let o = run(&["motzkin", "--n", "0", "--count"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), r#"{"M":1,"Mbar":1}"#);
}

#[test]
fn motzkin_counts() {
    // Motzkin numbers 1, 1, 2, 4, 9, 21 and the low-peak-free counts 1, 1, 1, 2, 5, 12.
    let want = [(1, 1), (1, 1), (2, 1), (4, 2), (9, 5), (21, 12)];
    for (n, (m, mbar)) in want.iter().enumerate() {
        let o = run(&["motzkin", "--n", &n.to_string(), "--count"]);
        assert_eq!(stdout(&o), format!(r#"{{"M":{m},"Mbar":{mbar}}}"#));
    }
}

#[test]
fn envelope_adds_schema() {
    let o = run(&["--envelope", "pop", "weak", "--type", "A4", "--perm", "52341"]);
    assert_eq!(stdout(&o), r#"{"schema":"cambrian-pop/1","result":"25314"}"#);
}

#[test]
fn verify_image_a3_passes() {
    let o = run(&["verify", "image", "--type", "A3", "--all-coxeter"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains(r#""passed":true"#));
}

#[test]
fn verify_jobs_do_not_change_output() {
    let one = run(&["verify", "intervals", "--type", "B3", "--jobs", "1"]);
    let four = run(&["verify", "intervals", "--type", "B3", "--jobs", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(stdout(&one), stdout(&four));
}

#[test]
fn usage_errors_exit_one_and_name_the_flag() {
    let o = run(&["pop", "weak", "--type", "A4", "--perm", "5234"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--perm 5234"));
    let o = run(&["pop", "weak", "--type", "Q9", "--perm", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--type Q9"));
    let o = run(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["motzkin", "--n", "2", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn a2_mutation_example() {
    // T(S1) has D = {S1} and U = {P1}; mutating at S1 gives (∅, {S1, S2}), the zero class.
    let o = run(&["smc", "mutate", "--type", "A2", "--torsion", "1", "--at", "d:0"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains(r#""input":{"D":[{"index":0,"dims":"10"}],"U":[{"index":2,"dims":"11"}]}"#), "{s}");
    assert!(s.contains(r#""result":{"D":[],"U":[{"index":0,"dims":"10"},{"index":1,"dims":"01"}]}"#), "{s}");
    assert!(s.contains(r#""result_torsion":0"#), "{s}");
}

#[test]
fn cambrian_pop_rejects_unsortable_input() {
    let o = run(&["pop", "cambrian", "--type", "A3", "--word", "2,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not c-sortable"));
}

#[test]
fn formats_render() {
    let csv = run(&["image", "--type", "B2", "--format", "csv"]);
    assert!(stdout(&csv).starts_with("element,in_image,commuting_descents,boolean_interval\ne,true,true,true"));
    let dot = run(&["lattice", "weak", "--type", "A2", "--format", "dot"]);
    assert!(stdout(&dot).starts_with("digraph"));
}

#[test]
fn heap_orbit_has_h_elements() {
    let o = run(&["heap", "--type", "D4"]);
    let s = stdout(&o);
    assert!(s.contains(r#""coxeter_number":6"#));
    assert!(s.contains(r#""z_c_orbit":["0,1,2,0,1,2,3,2,0,1","0,1,2,0,1,3,2","0,1,2,0,1,3","0,1,2","0,1","e"]"#), "{s}");
}

#[test]
fn lab_is_deterministic() {
    let a = run(&["lab", "quotient-orbit-bound", "--type", "A3", "--samples", "20", "--seed", "7"]);
    let b = run(&["lab", "quotient-orbit-bound", "--type", "A3", "--samples", "20", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains(r#""within_bound":true"#));
}
