//! Seeded instance generation and per-instance evaluation for the empirical
//! soundness campaigns.
//!
//! Instance `i` of a campaign with seed `s` is a pure function of
//! `(theorem, s, i, margin)`, so campaigns can be evaluated in any order or
//! in parallel with identical results.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by std's inherent float methods when std is in the build
use num_traits::Float;

use super::{
    verify_chaban_mortad, verify_main, verify_wermuth, TheoremId, TheoremReport, CHECK_LEMMA_FREE, CHECK_SIGMA_A_FREE,
    CHECK_SIGMA_B_FREE, TWO_PI_I,
};
use crate::error::Result;
use crate::gen::{
    congruence_free_spectrum, conjugate_diagonal, gaussian_matrix, random_unitary, similarity, CounterRng, GenSpec,
};
use crate::matrix::{ComplexMatrix, ToleranceConfig};

/// Spectral margin used by the campaigns unless overridden.
pub const DEFAULT_MARGIN: f64 = 0.1;
pub const MAX_DIMENSION: usize = 8;
/// Largest condition number of generated similarity transforms.
pub const MAX_CONDITIONING: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairKind {
    /// `B` a cubic polynomial in `A`.
    Polynomial,
    /// `B` diagonal in the eigenbasis of `A`.
    SharedEigenbasis,
    /// `B` unrelated to `A`.
    Independent,
}

impl PairKind {
    pub fn commuting(self) -> bool {
        !matches!(self, PairKind::Independent)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PairKind::Polynomial => "polynomial",
            PairKind::SharedEigenbasis => "shared-eigenbasis",
            PairKind::Independent => "independent",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub theorem: TheoremId,
    pub index: u64,
    pub seed: u64,
    pub kind: PairKind,
    pub a: ComplexMatrix,
    pub b: ComplexMatrix,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InstanceOutcome {
    pub instance: Instance,
    pub report: TheoremReport,
    /// The congruence hypotheses hold with the campaign's margin, not just
    /// at `congruence_tol`.
    pub margin_certified: bool,
}

impl InstanceOutcome {
    pub fn is_failure(&self) -> bool {
        self.report.is_failure()
    }
}

const STREAM_INSTANCE: u64 = 0x1000;
const STREAM_A_SPECTRUM: u64 = 1;
const STREAM_B_SPECTRUM: u64 = 2;
const STREAM_SIM_A: u64 = 3;
const STREAM_SIM_B: u64 = 4;
const STREAM_B: u64 = 5;

/// Seed of instance `index` in a campaign seeded with `campaign_seed`.
pub fn instance_seed(campaign_seed: u64, index: u64) -> u64 {
    CounterRng::new(campaign_seed).split(STREAM_INSTANCE).at(index)
}

fn pick_kind(rng: &mut CounterRng) -> PairKind {
    match rng.next_u64() % 3 {
        0 => PairKind::Polynomial,
        1 => PairKind::SharedEigenbasis,
        _ => PairKind::Independent,
    }
}

fn conditioning(rng: &mut CounterRng) -> f64 {
    (MAX_CONDITIONING.ln() * rng.uniform()).exp()
}

fn polynomial_of(a: &ComplexMatrix, rng: &mut CounterRng) -> ComplexMatrix {
    let coeffs: Vec<Complex64> = (0..4).map(|k| rng.complex_normal() / [1.0, 1.0, 4.0, 24.0][k]).collect();
    a.polynomial(&coeffs)
}

/// Builds instance `index` of a campaign.
///
/// * main: `σ(A)` drawn 2πi-free with `margin`, `A = P·D·P⁻¹` with
///   `cond(P) ≤ 10`; `B` polynomial in `A`, diagonal in the same basis, or
///   an independent Gaussian matrix.
/// * wermuth: as main, but every `B` also has a 2πi-free spectrum.
/// * chaban_mortad: `A = U·diag(a_k + i·b_k)·U*` with `b_k ∈ (0, π)`.
pub fn instance(theorem: TheoremId, campaign_seed: u64, index: u64, margin: f64) -> Result<Instance> {
    let seed = instance_seed(campaign_seed, index);
    let root = CounterRng::new(seed);
    let mut rng = root.split(0);
    let n = 2 + (rng.next_u64() % (MAX_DIMENSION as u64 - 1)) as usize;
    let kind = match pick_kind(&mut rng) {
        // a polynomial in A need not have a 2πi-free spectrum
        PairKind::Polynomial if theorem == TheoremId::Wermuth => PairKind::SharedEigenbasis,
        k => k,
    };

    let (a, p, p_inv) = match theorem {
        TheoremId::Main | TheoremId::Wermuth => {
            let values = congruence_free_spectrum(n, TWO_PI_I, margin, root.split(STREAM_A_SPECTRUM).at(0))?;
            let spec = GenSpec {
                seed: root.split(STREAM_SIM_A).at(0),
                n,
                conditioning: conditioning(&mut rng),
                spectrum_margin: margin,
            };
            let (p, p_inv) = similarity(&spec)?;
            (conjugate_diagonal(&p, &values, &p_inv)?, p, p_inv)
        }
        TheoremId::ChabanMortad => {
            let mut vr = root.split(STREAM_A_SPECTRUM);
            let values: Vec<Complex64> = (0..n)
                .map(|_| {
                    let re = vr.uniform_in(-3.0, 3.0);
                    let im = PI * (0.001 + 0.998 * vr.uniform());
                    Complex64::new(re, im)
                })
                .collect();
            let u = random_unitary(n, root.split(STREAM_SIM_A).at(0));
            let u_star = u.adjoint();
            (conjugate_diagonal(&u, &values, &u_star)?, u, u_star)
        }
    };

    let mut brng = root.split(STREAM_B);
    let b_values = || -> Result<Vec<Complex64>> {
        let stream = root.split(STREAM_B_SPECTRUM);
        match theorem {
            TheoremId::Wermuth => congruence_free_spectrum(n, TWO_PI_I, margin, stream.at(0)),
            _ => {
                let mut r = stream;
                Ok((0..n).map(|_| r.complex_normal() * 2.0).collect())
            }
        }
    };
    let b = match kind {
        PairKind::Polynomial => polynomial_of(&a, &mut brng),
        PairKind::SharedEigenbasis => conjugate_diagonal(&p, &b_values()?, &p_inv)?,
        PairKind::Independent => match theorem {
            TheoremId::Wermuth => {
                let spec = GenSpec {
                    seed: root.split(STREAM_SIM_B).at(0),
                    n,
                    conditioning: conditioning(&mut rng),
                    spectrum_margin: margin,
                };
                let (q, q_inv) = similarity(&spec)?;
                conjugate_diagonal(&q, &b_values()?, &q_inv)?
            }
            _ => gaussian_matrix(n, root.split(STREAM_SIM_B).at(0)).scale_real(2.0),
        },
    };
    Ok(Instance { theorem, index, seed, kind, a, b })
}

/// Runs the verifier matching the instance's theorem.
pub fn verify(
    theorem: TheoremId,
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    cfg: &ToleranceConfig,
) -> Result<TheoremReport> {
    match theorem {
        TheoremId::Main => verify_main(a, b, cfg),
        TheoremId::Wermuth => verify_wermuth(a, b, cfg),
        TheoremId::ChabanMortad => verify_chaban_mortad(a, b, cfg),
    }
}

fn certified(report: &TheoremReport, margin: f64, cfg: &ToleranceConfig) -> bool {
    let names: &[&str] = match report.theorem {
        TheoremId::Main => &[CHECK_SIGMA_A_FREE],
        TheoremId::Wermuth => &[CHECK_SIGMA_A_FREE, CHECK_SIGMA_B_FREE],
        TheoremId::ChabanMortad => &[CHECK_LEMMA_FREE],
    };
    let needed = margin * TWO_PI_I.norm();
    names.iter().all(|name| match report.congruence(name) {
        Some(r) => r.free && r.min_distance.is_none_or(|d| d >= needed - 2.0 * cfg.spectral_tol),
        None => false,
    })
}

pub fn run_instance(
    theorem: TheoremId,
    campaign_seed: u64,
    index: u64,
    margin: f64,
    cfg: &ToleranceConfig,
) -> Result<InstanceOutcome> {
    let instance = instance(theorem, campaign_seed, index, margin)?;
    let report = verify(theorem, &instance.a, &instance.b, cfg)?;
    let margin_certified = report.hypothesis_holds && certified(&report, margin, cfg);
    Ok(InstanceOutcome { instance, report, margin_certified })
}
