//! Theorem layer: commutation predicates, hypothesis checks and verifiers
//! for exponential commutation.
//!
//! Every "iff" is checked as two implications with asymmetric thresholds:
//! a defect `≤ eq_tol` means "commutes", a defect `> 10·eq_tol` means "does
//! not commute", and anything in between is flagged as an inconclusive
//! margin without changing a consistent verdict.

pub mod campaign;

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};
use core::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::expm::expm;
use crate::matrix::{commutator, relative_defect, ComplexMatrix, ToleranceConfig};
use crate::spectrum::{eigenvalues, qr_eigenvalues, CongruenceReport, Spectrum, Threshold};

/// The modulus `2πi`, with `2π` the nearest double.
pub const TWO_PI_I: Complex64 = Complex64 { re: 0.0, im: TAU };

/// Default number of interior samples in [`t_witness_scan`].
pub const DEFAULT_SCAN_SAMPLES: usize = 16;

/// Factor separating "commutes" from "does not commute".
pub const SEPARATION_FACTOR: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// Both spectra congruence free; `e^A e^B = e^B e^A ⇔ AB = BA`.
    Wermuth,
    /// `σ(A)` congruence free; `e^A B = B e^A ⇔ AB = BA`.
    Main,
    /// `A` normal, `σ(Im A) ⊂ (0, π)`; `e^A B = B e^A ⇔ AB = BA`.
    ChabanMortad,
}

impl TheoremId {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Wermuth => "wermuth",
            TheoremId::Main => "main",
            TheoremId::ChabanMortad => "chaban_mortad",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "wermuth" => Some(TheoremId::Wermuth),
            "main" => Some(TheoremId::Main),
            "chaban_mortad" | "cm" => Some(TheoremId::ChabanMortad),
            _ => None,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Consistent,
    HypothesisViolated,
    /// An instance contradicting a proved statement; only a bug can cause it.
    Violation,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Consistent => "consistent",
            Verdict::HypothesisViolated => "hypothesis-violated",
            Verdict::Violation => "VIOLATION",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "consistent" => Some(Verdict::Consistent),
            "hypothesis-violated" => Some(Verdict::HypothesisViolated),
            "VIOLATION" => Some(Verdict::Violation),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CheckOutcome {
    Congruence(CongruenceReport),
    Flag(bool),
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        match self {
            CheckOutcome::Congruence(r) => r.free,
            CheckOutcome::Flag(b) => *b,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HypothesisCheck {
    pub name: &'static str,
    pub outcome: CheckOutcome,
}

pub const CHECK_SIGMA_A_FREE: &str = "sigma(A) 2pi*i-congruence free";
pub const CHECK_SIGMA_B_FREE: &str = "sigma(B) 2pi*i-congruence free";
pub const CHECK_A_NORMAL: &str = "A normal";
pub const CHECK_IM_INTERVAL: &str = "sigma(Im A) in (0,pi)";
pub const CHECK_LEMMA_FREE: &str = "lemma: sigma(A) 2pi*i-congruence free";

#[derive(Debug, Clone, PartialEq)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub hypothesis_holds: bool,
    pub hypothesis_detail: Vec<HypothesisCheck>,
    /// Normalized defect of the exponential-level commutation.
    pub exp_defect: f64,
    /// Normalized defect of `AB − BA`.
    pub op_defect: f64,
    pub verdict: Verdict,
    /// A defect fell in `(eq_tol, 10·eq_tol]`.
    pub inconclusive_margin: bool,
    /// `AB = BA` while the exponentials clearly do not commute. This
    /// direction needs no hypothesis, so it is flagged even when the
    /// hypothesis fails.
    pub forward_failure: bool,
    /// Chaban–Mortad hypothesis held but `σ(A)` was not certified 2πi-free.
    pub lemma_failure: bool,
}

impl TheoremReport {
    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.hypothesis_detail.iter().find(|c| c.name == name).map(|c| &c.outcome)
    }

    pub fn congruence(&self, name: &str) -> Option<&CongruenceReport> {
        match self.check(name) {
            Some(CheckOutcome::Congruence(r)) => Some(r),
            _ => None,
        }
    }

    /// Whether the instance signals a bug: a violation verdict or a failure
    /// of the hypothesis-free forward direction.
    pub fn is_failure(&self) -> bool {
        self.verdict == Verdict::Violation || self.forward_failure || self.lemma_failure
    }
}

struct Classification {
    verdict: Verdict,
    inconclusive_margin: bool,
    forward_failure: bool,
}

fn classify(hypothesis_holds: bool, exp_defect: f64, op_defect: f64, cfg: &ToleranceConfig) -> Classification {
    let commutes = |d: f64| d <= cfg.eq_tol;
    let differs = |d: f64| d > SEPARATION_FACTOR * cfg.eq_tol;
    let forward_failure = commutes(op_defect) && differs(exp_defect);
    let backward_failure = commutes(exp_defect) && differs(op_defect);
    let inconclusive_margin =
        !(commutes(exp_defect) || differs(exp_defect)) || !(commutes(op_defect) || differs(op_defect));
    let verdict = if !hypothesis_holds {
        Verdict::HypothesisViolated
    } else if forward_failure || backward_failure {
        Verdict::Violation
    } else {
        Verdict::Consistent
    };
    Classification { verdict, inconclusive_margin, forward_failure }
}

fn same_dims(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<()> {
    if a.n() == b.n() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left: a.n(), right: b.n() })
    }
}

/// Normalized defect of `[A, B]`.
pub fn op_defect(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    relative_defect(&commutator(a, b)?, a, b)
}

/// Normalized defect of `e^A e^B − e^B e^A`.
pub fn exp_commutes(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    same_dims(a, b)?;
    let ea = expm(a)?.value;
    let eb = expm(b)?.value;
    relative_defect(&commutator(&ea, &eb)?, &ea, &eb)
}

/// Normalized defect of `e^A B − B e^A`.
pub fn exp_commutes_with(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    same_dims(a, b)?;
    let ea = expm(a)?.value;
    relative_defect(&commutator(&ea, b)?, &ea, b)
}

fn spectrum_of(a: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<Spectrum> {
    eigenvalues(a, cfg).map_err(Error::undecidable)
}

fn free_check(name: &'static str, a: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<HypothesisCheck> {
    let report = spectrum_of(a, cfg)?.congruence_report(TWO_PI_I, cfg)?;
    Ok(HypothesisCheck { name, outcome: CheckOutcome::Congruence(report) })
}

/// `σ(A)` 2πi-congruence free ⇒ (`e^A B = B e^A` ⇔ `AB = BA`).
pub fn verify_main(a: &ComplexMatrix, b: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<TheoremReport> {
    same_dims(a, b)?;
    cfg.validate()?;
    let check = free_check(CHECK_SIGMA_A_FREE, a, cfg)?;
    let hypothesis_holds = check.outcome.passed();
    let exp_defect = exp_commutes_with(a, b)?;
    let op = op_defect(a, b)?;
    let c = classify(hypothesis_holds, exp_defect, op, cfg);
    Ok(TheoremReport {
        theorem: TheoremId::Main,
        hypothesis_holds,
        hypothesis_detail: alloc::vec![check],
        exp_defect,
        op_defect: op,
        verdict: c.verdict,
        inconclusive_margin: c.inconclusive_margin,
        forward_failure: c.forward_failure,
        lemma_failure: false,
    })
}

/// `σ(A)`, `σ(B)` 2πi-congruence free ⇒ (`e^A e^B = e^B e^A` ⇔ `AB = BA`).
pub fn verify_wermuth(a: &ComplexMatrix, b: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<TheoremReport> {
    same_dims(a, b)?;
    cfg.validate()?;
    let checks = alloc::vec![free_check(CHECK_SIGMA_A_FREE, a, cfg)?, free_check(CHECK_SIGMA_B_FREE, b, cfg)?];
    let hypothesis_holds = checks.iter().all(|c| c.outcome.passed());
    let exp_defect = exp_commutes(a, b)?;
    let op = op_defect(a, b)?;
    let c = classify(hypothesis_holds, exp_defect, op, cfg);
    Ok(TheoremReport {
        theorem: TheoremId::Wermuth,
        hypothesis_holds,
        hypothesis_detail: checks,
        exp_defect,
        op_defect: op,
        verdict: c.verdict,
        inconclusive_margin: c.inconclusive_margin,
        forward_failure: c.forward_failure,
        lemma_failure: false,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChabanMortadCheck {
    pub holds: bool,
    pub normal: bool,
    /// `σ(Im A)`, ascending.
    pub im_spectrum: Vec<f64>,
    pub im_in_interval: bool,
}

/// `A` normal and every eigenvalue `b` of `Im A` satisfies
/// `interval_margin < b < π − interval_margin`.
pub fn chaban_mortad_hypothesis(a: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<ChabanMortadCheck> {
    let normal = a.is_normal(cfg);
    let im = a.cartesian_decomposition().im;
    let mut im_spectrum: Vec<f64> =
        qr_eigenvalues(&im).map_err(Error::undecidable)?.into_iter().map(|z| z.re).collect();
    im_spectrum.sort_by(f64::total_cmp);
    let lo = cfg.interval_margin;
    let hi = PI - cfg.interval_margin;
    let im_in_interval = im_spectrum.iter().all(|&b| lo < b && b < hi);
    Ok(ChabanMortadCheck { holds: normal && im_in_interval, normal, im_spectrum, im_in_interval })
}

/// `A` normal with `σ(Im A) ⊂ (0, π)` ⇒ (`e^A B = B e^A` ⇔ `AB = BA`),
/// reduced to [`verify_main`] through the fact that such `σ(A)` is
/// 2πi-congruence free. That fact is asserted too: if the hypothesis holds
/// and `σ(A)` is not certified free, the verdict is a violation.
pub fn verify_chaban_mortad(a: &ComplexMatrix, b: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<TheoremReport> {
    same_dims(a, b)?;
    cfg.validate()?;
    let hyp = chaban_mortad_hypothesis(a, cfg)?;
    let main = verify_main(a, b, cfg)?;
    let sigma_free = main.hypothesis_holds;
    let lemma_failure = hyp.holds && !sigma_free;
    let c = classify(hyp.holds, main.exp_defect, main.op_defect, cfg);
    let verdict = if hyp.holds && lemma_failure { Verdict::Violation } else { c.verdict };
    let mut detail = alloc::vec![
        HypothesisCheck { name: CHECK_A_NORMAL, outcome: CheckOutcome::Flag(hyp.normal) },
        HypothesisCheck { name: CHECK_IM_INTERVAL, outcome: CheckOutcome::Flag(hyp.im_in_interval) },
    ];
    detail.extend(main.hypothesis_detail.into_iter().map(|c| HypothesisCheck { name: CHECK_LEMMA_FREE, ..c }));
    Ok(TheoremReport {
        theorem: TheoremId::ChabanMortad,
        hypothesis_holds: hyp.holds,
        hypothesis_detail: detail,
        exp_defect: main.exp_defect,
        op_defect: main.op_defect,
        verdict,
        inconclusive_margin: c.inconclusive_margin,
        forward_failure: c.forward_failure,
        lemma_failure,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanSample {
    pub t: f64,
    /// Normalized defect of `[e^A, e^{tB}]`.
    pub exp_defect: f64,
    /// `‖[A, tB]‖_F / (1 + ‖A‖_F ‖B‖_F)`, linear in `t`.
    pub op_defect: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WitnessScan {
    /// `τ` of `σ(B)` for modulus 2πi.
    pub tau: Threshold,
    pub samples: Vec<ScanSample>,
    pub inferred_op_defect: f64,
}

/// Replays the scaling argument on concrete data: starting from
/// `e^A B = B e^A`, samples `t` on an open uniform grid of `(0, τ)` (or
/// `(0, 1)` when `τ` is unbounded) and records the defect of
/// `[e^A, e^{tB}]` next to that of `[A, tB]`.
pub fn t_witness_scan(a: &ComplexMatrix, b: &ComplexMatrix, m: usize, cfg: &ToleranceConfig) -> Result<WitnessScan> {
    same_dims(a, b)?;
    cfg.validate()?;
    if m == 0 {
        return Err(Error::InvalidArgument("sample count must be positive"));
    }
    if exp_commutes_with(a, b)? > cfg.eq_tol {
        return Err(Error::Precondition("e^A B = B e^A does not hold within eq_tol"));
    }
    let tau = spectrum_of(b, cfg)?.scaling_threshold(TWO_PI_I)?;
    let span = tau.finite().unwrap_or(1.0);
    let ea = expm(a)?.value;
    let comm = commutator(a, b)?;
    let mut samples = Vec::with_capacity(m);
    for j in 1..=m {
        let t = span * j as f64 / (m + 1) as f64;
        let etb = expm(&b.scale_real(t))?.value;
        let exp_defect = relative_defect(&commutator(&ea, &etb)?, &ea, &etb)?;
        let tb = b.scale_real(t);
        let op_defect = relative_defect(&commutator(a, &tb)?, a, b)?;
        samples.push(ScanSample { t, exp_defect, op_defect });
    }
    Ok(WitnessScan { tau, samples, inferred_op_defect: relative_defect(&comm, a, b)? })
}

/// `A = [[0, π], [−π, 0]]`, `B = [[0, a], [a, 0]]`: `e^A = −I` commutes with
/// every `B` while `AB − BA = diag(2πa, −2πa)`.
pub fn counterexample_pair(a: f64) -> Result<(ComplexMatrix, ComplexMatrix)> {
    Ok((ComplexMatrix::from_real(2, &[0.0, PI, -PI, 0.0])?, ComplexMatrix::from_real(2, &[0.0, a, a, 0.0])?))
}

#[cfg(test)]
mod tests;
