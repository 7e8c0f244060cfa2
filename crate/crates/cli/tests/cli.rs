use std::path::Path;
use std::process::{Command, Output};

use expcommute::report::ReportBody;
use expcommute::{MatrixFile, ReportDocument};
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_expcommute")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn doc(o: &Output) -> ReportDocument {
    ReportDocument::parse(std::str::from_utf8(&o.stdout).unwrap()).expect("stdout is a report")
}

fn write(dir: &Path, name: &str, f: &MatrixFile) -> String {
    let p = dir.join(name);
    f.save(&p).unwrap();
    p.display().to_string()
}

fn theorem(d: &ReportDocument) -> &expcommute::report::TheoremDoc {
    match &d.body {
        ReportBody::Theorem(t) => t,
        other => panic!("unexpected body {other:?}"),
    }
}

#[test]
fn eig_on_identity_is_free() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "i.json", &MatrixFile::real(3, &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0]));
    let o = run(&["eig", &f, "--no-timestamp"]);
    assert_eq!(code(&o), 0);
    let ReportBody::Eig(e) = doc(&o).body else { panic!() };
    assert!(e.congruence.free);
    assert_eq!(e.diameter.0, 0.0);
    assert_eq!(e.scaling_threshold.0, None);
    for z in e.spectrum {
        assert!((z.0 .0 - 1.0).abs() < 1e-12 && z.1 .0.abs() < 1e-12);
    }
}

#[test]
fn malformed_and_missing_files_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"n\": 2, \"entries\": [[1, 0]]}").unwrap();
    assert_eq!(code(&run(&["eig", bad.to_str().unwrap()])), 2);
    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(code(&run(&["eig", bad.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["eig", dir.path().join("missing.json").to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["verify", "nonsense", "a", "b"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&[])), 2);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn invalid_tolerance_exits_2() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "a.json", &MatrixFile::real(1, &[1.0]));
    assert_eq!(code(&run(&["eig", &f, "--eq-tol", "-1"])), 2);
    assert_eq!(code(&run(&["eig", &f, "--spectral-tol", "nan"])), 2);
}

#[test]
fn verify_main_exit_codes() {
    let dir = TempDir::new().unwrap();
    let d = write(dir.path(), "d.json", &MatrixFile::real(2, &[0.0, 0.0, 0.0, 1.0]));
    let d2 = write(dir.path(), "d2.json", &MatrixFile::real(2, &[0.0, 0.0, 0.0, 1.0]));
    let o = run(&["verify", "main", &d, &d2, "--no-timestamp"]);
    assert_eq!(code(&o), 0);
    assert_eq!(theorem(&doc(&o)).verdict, "consistent");

    let cx = dir.path().join("cx");
    let o = run(&["counterexample", "--a", "1", "--out-dir", cx.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let (a, b) = (cx.join("A.json"), cx.join("B.json"));
    let o = run(&["verify", "main", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(code(&o), 4);
    assert_eq!(theorem(&doc(&o)).verdict, "hypothesis-violated");

    let three = write(dir.path(), "three.json", &MatrixFile::real(3, &[0.0; 9]));
    assert_eq!(code(&run(&["verify", "main", &d, &three])), 2);
}

#[test]
fn cm_on_self_adjoint_is_hypothesis_violated() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", &MatrixFile::real(2, &[1.0, 2.0, 2.0, -1.0]));
    let b = write(dir.path(), "b.json", &MatrixFile::real(2, &[0.0, 1.0, 0.0, 0.0]));
    let o = run(&["verify", "cm", &a, &b]);
    assert_eq!(code(&o), 4);
    let t = doc(&o);
    let t = theorem(&t);
    assert_eq!(t.theorem, "chaban_mortad");
    assert!(!t.hypothesis_holds);
}

#[test]
fn counterexample_sign_symmetry_and_zero() {
    let pos = doc(&run(&["counterexample", "--a", "1", "--no-timestamp"]));
    let neg = doc(&run(&["counterexample", "--a", "-1", "--no-timestamp"]));
    let (ReportBody::Counterexample(p), ReportBody::Counterexample(n)) = (&pos.body, &neg.body) else { panic!() };
    assert_eq!(p.report.exp_defect, n.report.exp_defect);
    assert_eq!(p.report.op_defect, n.report.op_defect);
    let tau = std::f64::consts::TAU;
    let c = &p.commutator.entries;
    assert!((c[0].0 .0 - tau).abs() <= 1e-12 && (c[3].0 .0 + tau).abs() <= 1e-12);

    let zero = doc(&run(&["counterexample", "--a", "0"]));
    let ReportBody::Counterexample(z) = &zero.body else { panic!() };
    assert_eq!(z.report.op_defect.0, 0.0);
    assert!(z.report.exp_defect.0 <= 1e-12);
}

#[test]
fn expm_zero_and_cross_check() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "z.json", &MatrixFile::real(3, &[0.0; 9]));
    let o = run(&["expm", &f, "--cross-check"]);
    assert_eq!(code(&o), 0);
    let ReportBody::Expm(e) = doc(&o).body else { panic!() };
    assert_eq!(e.value, MatrixFile::real(3, &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0]));
    assert_eq!(e.oracle_gap.map(|g| g.0), Some(0.0));

    let big = write(dir.path(), "big.json", &MatrixFile::real(1, &[900.0]));
    assert_eq!(code(&run(&["expm", &big])), 3);
}

#[test]
fn fuzz_small_campaign_and_determinism() {
    let args = ["fuzz", "--theorem", "main", "--count", "30", "--seed", "5", "--no-timestamp"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let ReportBody::Fuzz(s) = doc(&a).body else { panic!() };
    assert_eq!(s.histogram.violation, 0);
    assert_eq!(s.histogram.consistent + s.histogram.hypothesis_violated, 30);
    assert!(s.worst.commuting_exp_defect.0 <= 1e-9);
    assert_eq!(code(&run(&["fuzz", "--theorem", "main", "--count", "0"])), 2);
}

#[test]
fn scan_requires_exponential_commutation() {
    let cx = doc(&run(&["counterexample"]));
    let ReportBody::Counterexample(c) = cx.body else { panic!() };
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", &c.matrix_a);
    let b = write(dir.path(), "b.json", &c.matrix_b);
    let o = run(&["scan", &a, &b, "--samples", "4"]);
    assert_eq!(code(&o), 0);
    let ReportBody::Scan(s) = doc(&o).body else { panic!() };
    assert_eq!(s.samples.len(), 4);
    let g = write(dir.path(), "g.json", &MatrixFile::real(2, &[1.0, 0.0, 0.0, 2.0]));
    let n = write(dir.path(), "n.json", &MatrixFile::real(2, &[0.0, 1.0, 0.0, 0.0]));
    assert_eq!(code(&run(&["scan", &g, &n])), 3);
}

#[test]
fn timestamp_only_differs_when_requested() {
    let with = doc(&run(&["counterexample"]));
    let without = doc(&run(&["counterexample", "--no-timestamp"]));
    assert!(with.timestamp.is_some());
    assert!(without.timestamp.is_none());
    assert_eq!(ReportDocument { timestamp: None, ..with }, without);
}

#[test]
fn reports_round_trip_exactly() {
    for args in [&["counterexample", "--a", "0.3", "--seed", "9"][..], &["fuzz", "--theorem", "cm", "--count", "5"][..]]
    {
        let o = run(args);
        let text = String::from_utf8(o.stdout).unwrap();
        let d = ReportDocument::parse(&text).unwrap();
        assert_eq!(d.to_json(), text);
        assert_eq!(ReportDocument::parse(&d.to_json()).unwrap(), d);
    }
}
