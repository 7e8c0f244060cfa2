use super::campaign::{self, PairKind};
use super::*;
use crate::gen::{commuting_pair, normal_with_parts, GenSpec};
use alloc::vec;
use core::f64::consts::E;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn cfg() -> ToleranceConfig {
    ToleranceConfig::default()
}

#[test]
fn exp_commutes_examples() {
    let a = ComplexMatrix::new(2, vec![c(0.3, 1.0), c(-1.0, 0.2), c(0.5, 0.0), c(1.0, -0.7)]).unwrap();
    assert!(exp_commutes(&a, &a).unwrap() <= 1e-15);
    let (ra, rb) = counterexample_pair(1.0).unwrap();
    assert!(exp_commutes(&ra, &rb).unwrap() <= cfg().eq_tol);
    let a2 = a.mul(&a);
    assert!(exp_commutes(&a, &a2).unwrap() <= cfg().eq_tol);
    assert!(exp_commutes(&a, &ComplexMatrix::identity(3)).is_err());
}

#[test]
fn exp_commutes_with_examples() {
    let (ra, rb) = counterexample_pair(1.0).unwrap();
    assert!(exp_commutes_with(&ra, &rb).unwrap() <= cfg().eq_tol);
    assert_eq!(exp_commutes_with(&ra, &ComplexMatrix::identity(2)).unwrap(), 0.0);

    // e^A B − B e^A = [[0, e − e²], [0, 0]]
    let a = ComplexMatrix::from_diag(&[c(1.0, 0.0), c(2.0, 0.0)]).unwrap();
    let b = ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
    let expected = (E * E - E) / (1.0 + (E * E + E.powi(4)).sqrt());
    let d = exp_commutes_with(&a, &b).unwrap();
    assert!((d - expected).abs() < 1e-14, "{d} vs {expected}");
    assert!(d > cfg().eq_tol);
}

#[test]
fn main_on_pi_rotation_pair_is_hypothesis_violated() {
    let (a, b) = counterexample_pair(1.0).unwrap();
    let r = verify_main(&a, &b, &cfg()).unwrap();
    assert_eq!(r.theorem, TheoremId::Main);
    assert!(!r.hypothesis_holds);
    assert_eq!(r.verdict, Verdict::HypothesisViolated);
    let cong = r.congruence(CHECK_SIGMA_A_FREE).unwrap();
    assert!(cong.witnesses.iter().any(|w| w.k == 1 && (w.s1 - c(0.0, PI)).norm() < 1e-10));
    assert!(r.exp_defect <= cfg().eq_tol);
    assert!(r.op_defect > SEPARATION_FACTOR * cfg().eq_tol);
    assert!(!r.is_failure());
}

#[test]
fn main_on_polynomial_of_diagonal() {
    let a = ComplexMatrix::from_diag(&[c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
    let b = a.polynomial(&[c(0.5, 1.0), c(-2.0, 0.0), c(0.0, 3.0)]);
    let r = verify_main(&a, &b, &cfg()).unwrap();
    assert_eq!(r.verdict, Verdict::Consistent);
    assert!(r.exp_defect <= cfg().eq_tol && r.op_defect <= cfg().eq_tol);
    assert!(!r.inconclusive_margin);
}

#[test]
fn main_on_noncommuting_pair_is_consistent() {
    let a = ComplexMatrix::from_diag(&[c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
    let b = ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
    let r = verify_main(&a, &b, &cfg()).unwrap();
    assert!(r.hypothesis_holds);
    assert_eq!(r.verdict, Verdict::Consistent);
    // e^A B − B e^A = [[0, 1 − e], [0, 0]]; AB − BA = [[0, −1], [0, 0]]
    let exp_expected = (E - 1.0) / (1.0 + (1.0 + E * E).sqrt());
    assert!((r.exp_defect - exp_expected).abs() < 1e-14);
    assert!((r.op_defect - 0.5).abs() < 1e-15);
}

#[test]
fn wermuth_examples() {
    let a = ComplexMatrix::from_diag(&[c(0.0, 1.0), c(0.0, 2.0)]).unwrap();
    let b = ComplexMatrix::from_diag(&[c(1.0, 0.0), c(2.0, 0.0)]).unwrap();
    let r = verify_wermuth(&a, &b, &cfg()).unwrap();
    assert!(r.hypothesis_holds);
    assert_eq!(r.verdict, Verdict::Consistent);
    assert_eq!(r.hypothesis_detail.len(), 2);

    let (ra, rb) = counterexample_pair(1.0).unwrap();
    let r = verify_wermuth(&ra, &rb, &cfg()).unwrap();
    assert_eq!(r.verdict, Verdict::HypothesisViolated);
    assert!(!r.check(CHECK_SIGMA_A_FREE).unwrap().passed());
    assert!(r.check(CHECK_SIGMA_B_FREE).unwrap().passed());

    for index in 0..30 {
        let inst = campaign::instance(TheoremId::Wermuth, 5, index, 0.1).unwrap();
        if inst.kind != PairKind::Independent {
            continue;
        }
        let r = verify_wermuth(&inst.a, &inst.b, &cfg()).unwrap();
        assert!(r.hypothesis_holds);
        assert!(r.exp_defect > SEPARATION_FACTOR * cfg().eq_tol);
        assert!(r.op_defect > SEPARATION_FACTOR * cfg().eq_tol);
        assert_eq!(r.verdict, Verdict::Consistent);
    }
}

#[test]
fn scan_on_commuting_pair() {
    let (a, b) = commuting_pair(&GenSpec::new(3, 4)).unwrap();
    let scan = t_witness_scan(&a, &b, DEFAULT_SCAN_SAMPLES, &cfg()).unwrap();
    assert_eq!(scan.samples.len(), DEFAULT_SCAN_SAMPLES);
    let tau = scan.tau.finite().unwrap();
    for s in &scan.samples {
        assert!(s.t > 0.0 && s.t < tau);
        assert!(s.exp_defect <= cfg().eq_tol);
    }
    assert!(scan.inferred_op_defect <= cfg().eq_tol);
}

#[test]
fn scan_on_pi_rotation_pair() {
    let (a, b) = counterexample_pair(1.0).unwrap();
    let scan = t_witness_scan(&a, &b, 5, &cfg()).unwrap();
    // σ(B) = {1, −1}: Δ = 2, τ = 2π / 2
    let tau = scan.tau.finite().unwrap();
    assert!((tau - PI).abs() < 1e-12);
    for (j, s) in scan.samples.iter().enumerate() {
        assert!((s.t - tau * (j + 1) as f64 / 6.0).abs() < 1e-15);
        // e^A = −I commutes with every e^{tB}; the argument stalls because σ(A) is not free
        assert!(s.exp_defect <= cfg().eq_tol);
        assert!(s.op_defect > SEPARATION_FACTOR * cfg().eq_tol);
        assert!((s.op_defect - s.t * scan.inferred_op_defect).abs() <= cfg().eq_tol);
    }
}

#[test]
fn scan_with_scalar_b_is_unbounded() {
    let a = ComplexMatrix::new(2, vec![c(1.0, 0.0), c(2.0, 1.0), c(0.0, 0.5), c(-1.0, 0.0)]).unwrap();
    let b = ComplexMatrix::scalar(2, c(3.0, -1.0));
    let scan = t_witness_scan(&a, &b, 4, &cfg()).unwrap();
    assert_eq!(scan.tau, Threshold::Unbounded);
    for s in &scan.samples {
        assert!(s.t > 0.0 && s.t < 1.0);
        assert!(s.exp_defect <= cfg().eq_tol);
    }
}

#[test]
fn scan_rejects_violated_precondition() {
    let a = ComplexMatrix::from_diag(&[c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
    let b = ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
    assert!(matches!(t_witness_scan(&a, &b, 3, &cfg()), Err(Error::Precondition(_))));
    assert!(t_witness_scan(&a, &a, 0, &cfg()).is_err());
}

#[test]
fn chaban_mortad_hypothesis_examples() {
    let a = ComplexMatrix::from_diag(&[c(1.0, PI / 2.0), c(2.0, 1.0)]).unwrap();
    let h = chaban_mortad_hypothesis(&a, &cfg()).unwrap();
    assert!(h.holds && h.normal && h.im_in_interval);

    let s = ComplexMatrix::from_real(2, &[1.0, 2.0, 2.0, -1.0]).unwrap();
    let h = chaban_mortad_hypothesis(&s, &cfg()).unwrap();
    assert!(h.normal && !h.holds);
    assert!(h.im_spectrum.iter().all(|&b| b == 0.0));

    let (ra, _) = counterexample_pair(1.0).unwrap();
    let h = chaban_mortad_hypothesis(&ra, &cfg()).unwrap();
    assert!(h.normal && !h.holds);
    assert!((h.im_spectrum[0] + PI).abs() < 1e-12 && (h.im_spectrum[1] - PI).abs() < 1e-12);

    let j = ComplexMatrix::new(2, vec![c(0.0, 1.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 1.0)]).unwrap();
    let h = chaban_mortad_hypothesis(&j, &cfg()).unwrap();
    assert!(!h.normal && !h.holds);
}

#[test]
fn chaban_mortad_examples() {
    let a = normal_with_parts(&[1.0, 2.0], &[0.5, 2.5], 17).unwrap();
    let b = ComplexMatrix::new(2, vec![c(0.1, 0.0), c(1.0, 1.0), c(-1.0, 0.0), c(0.0, 0.3)]).unwrap();
    let r = verify_chaban_mortad(&a, &b, &cfg()).unwrap();
    assert_eq!(r.theorem, TheoremId::ChabanMortad);
    assert!(r.hypothesis_holds && !r.lemma_failure);
    assert!(r.check(CHECK_LEMMA_FREE).unwrap().passed());
    assert_eq!(r.verdict, Verdict::Consistent);
    let main = verify_main(&a, &b, &cfg()).unwrap();
    assert_eq!((r.exp_defect, r.op_defect), (main.exp_defect, main.op_defect));

    let s = ComplexMatrix::from_real(2, &[1.0, 2.0, 2.0, -1.0]).unwrap();
    assert_eq!(verify_chaban_mortad(&s, &b, &cfg()).unwrap().verdict, Verdict::HypothesisViolated);
    let (ra, rb) = counterexample_pair(1.0).unwrap();
    assert_eq!(verify_chaban_mortad(&ra, &rb, &cfg()).unwrap().verdict, Verdict::HypothesisViolated);
}

#[test]
fn counterexample_family() {
    let (a, b) = counterexample_pair(1.0).unwrap();
    let comm = commutator(&a, &b).unwrap();
    assert_eq!(comm, ComplexMatrix::from_real(2, &[2.0 * PI, 0.0, 0.0, -2.0 * PI]).unwrap());

    let (a0, b0) = counterexample_pair(0.0).unwrap();
    assert_eq!(b0, ComplexMatrix::zeros(2));
    assert_eq!(op_defect(&a0, &b0).unwrap(), 0.0);
    assert_eq!(exp_commutes_with(&a0, &b0).unwrap(), 0.0);

    for a in [0.5, 1.0, 2.0, 4.0] {
        let (ma, mb) = counterexample_pair(a).unwrap();
        let r = verify_main(&ma, &mb, &cfg()).unwrap();
        assert!(r.exp_defect <= cfg().eq_tol);
        let expected = 2.0 * PI * a * 2f64.sqrt() / (1.0 + PI * 2f64.sqrt() * a * 2f64.sqrt());
        assert!((r.op_defect - expected).abs() < 1e-14);
        assert!(r.op_defect > SEPARATION_FACTOR * cfg().eq_tol);
        assert_eq!(r.verdict, Verdict::HypothesisViolated);
    }
}

#[test]
fn gray_zone_is_flagged_not_violated() {
    let cfg = ToleranceConfig { eq_tol: 1e-3, ..ToleranceConfig::default() };
    let c1 = classify(true, 5e-3, 1.0, &cfg);
    assert_eq!(c1.verdict, Verdict::Consistent);
    assert!(c1.inconclusive_margin);
    let c2 = classify(true, 1e-4, 1.0, &cfg);
    assert_eq!(c2.verdict, Verdict::Violation);
    let c3 = classify(true, 1.0, 1e-4, &cfg);
    assert_eq!(c3.verdict, Verdict::Violation);
    assert!(c3.forward_failure);
    let c4 = classify(false, 1.0, 1e-4, &cfg);
    assert_eq!(c4.verdict, Verdict::HypothesisViolated);
    assert!(c4.forward_failure);
}

#[test]
fn ids_round_trip_through_strings() {
    for t in [TheoremId::Wermuth, TheoremId::Main, TheoremId::ChabanMortad] {
        assert_eq!(TheoremId::parse(t.as_str()), Some(t));
    }
    assert_eq!(TheoremId::parse("cm"), Some(TheoremId::ChabanMortad));
    for v in [Verdict::Consistent, Verdict::HypothesisViolated, Verdict::Violation] {
        assert_eq!(Verdict::parse(v.as_str()), Some(v));
    }
}

#[test]
fn campaign_instances_are_deterministic_and_mixed() {
    let mut kinds = [0usize; 3];
    for index in 0..40 {
        let x = campaign::instance(TheoremId::Main, 42, index, 0.1).unwrap();
        assert_eq!(x, campaign::instance(TheoremId::Main, 42, index, 0.1).unwrap());
        assert!((2..=campaign::MAX_DIMENSION).contains(&x.a.n()));
        kinds[x.kind as usize] += 1;
    }
    assert!(kinds.iter().all(|&k| k > 0), "{kinds:?}");
    let out = campaign::run_instance(TheoremId::ChabanMortad, 1, 0, 0.1, &cfg()).unwrap();
    assert!(out.report.hypothesis_holds && out.margin_certified && !out.is_failure());
}
