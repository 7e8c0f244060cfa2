//! Eigenvalues and spectral-set logic: diameter, z-congruence freedom, the
//! scaling threshold below which scaled sets become congruence free, and the
//! spectral box of a normal matrix.

mod eigen;

pub use eigen::{eigen_decomposition, hessenberg, qr_eigenvalues, EigenDecomposition, CONDITION_CEILING};

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by std's inherent float methods when std is in the build
use num_traits::Float;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, ToleranceConfig};

/// Multiset of eigenvalues, repeated per algebraic multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub values: Vec<Complex64>,
    /// Eigenvector-basis conditioning estimate; 1 for normal input.
    pub condition_hint: f64,
}

/// One violation of congruence freedom: `s1 − s2 ≈ k·z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub s1: Complex64,
    pub s2: Complex64,
    pub k: i64,
    /// `|(s1 − s2) − k·z|`.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CongruenceReport {
    pub free: bool,
    pub z: Complex64,
    pub witnesses: Vec<Witness>,
    /// Smallest distance from a difference of two distinct elements to a
    /// nonzero multiple of `z`; `None` when no distinct pair exists.
    pub min_distance: Option<f64>,
}

/// Scaling threshold `τ`. `Unbounded` stands for "any τ ∈ (0, ∞)" and has
/// no numeric representative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Threshold {
    Finite(f64),
    Unbounded,
}

impl Threshold {
    pub fn finite(self) -> Option<f64> {
        match self {
            Threshold::Finite(t) => Some(t),
            Threshold::Unbounded => None,
        }
    }
}

/// Bounding intervals of `σ(Re A)` and `σ(Im A)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralBox {
    pub re_lo: f64,
    pub re_hi: f64,
    pub im_lo: f64,
    pub im_hi: f64,
}

impl SpectralBox {
    pub fn contains(&self, z: Complex64, slack: f64) -> bool {
        z.re >= self.re_lo - slack
            && z.re <= self.re_hi + slack
            && z.im >= self.im_lo - slack
            && z.im <= self.im_hi + slack
    }
}

impl Spectrum {
    /// Spectrum from explicit values (condition hint 1).
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        if let Some(index) = values.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { values, condition_hint: 1.0 })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `max |s_i − s_j|`, 0 for a singleton.
    pub fn diameter(&self) -> Result<f64> {
        if self.values.is_empty() {
            return Err(Error::EmptySpectrum);
        }
        let mut best = 0.0f64;
        for (i, &a) in self.values.iter().enumerate() {
            for &b in &self.values[i + 1..] {
                best = best.max((a - b).norm());
            }
        }
        Ok(best)
    }

    /// Decides z-congruence freedom: no two distinct elements differ by
    /// `k·z` with `k ≠ 0`, up to `congruence_tol`.
    ///
    /// Every ordered pair is inspected, so a violation shows up twice, once
    /// with `k` and once with `−k`. A pair at distance exactly
    /// `congruence_tol` from a multiple counts as a violation.
    pub fn congruence_report(&self, z: Complex64, cfg: &ToleranceConfig) -> Result<CongruenceReport> {
        congruence_report(&self.values, z, cfg.congruence_tol)
    }

    /// `τ = |z| / Δ`, or `Unbounded` when `Δ = 0`.
    pub fn scaling_threshold(&self, z: Complex64) -> Result<Threshold> {
        if z.norm() == 0.0 {
            return Err(Error::ZeroModulus);
        }
        let diameter = self.diameter()?;
        if diameter == 0.0 {
            Ok(Threshold::Unbounded)
        } else {
            Ok(Threshold::Finite(z.norm() / diameter))
        }
    }

    /// `tS = { t·s : s ∈ S }`.
    pub fn scaled(&self, t: f64) -> Spectrum {
        Spectrum { values: self.values.iter().map(|&s| s * t).collect(), condition_hint: self.condition_hint }
    }
}

/// Distance from `d` to the nearest nonzero integer multiple of `z`, and that multiple.
pub fn nearest_nonzero_multiple(d: Complex64, z: Complex64) -> (i64, f64) {
    let zn2 = z.norm_sqr();
    let along = (d * z.conj()).re / zn2;
    let mut k = along.round();
    if k == 0.0 {
        k = if along >= 0.0 { 1.0 } else { -1.0 };
    }
    let k = k as i64;
    (k, (d - z * k as f64).norm())
}

pub(crate) fn congruence_report(values: &[Complex64], z: Complex64, tol: f64) -> Result<CongruenceReport> {
    let zn = z.norm();
    if zn == 0.0 {
        return Err(Error::ZeroModulus);
    }
    let mut witnesses = Vec::new();
    let mut min_distance: Option<f64> = None;
    if values.len() >= 2 {
        let diameter = Spectrum { values: values.to_vec(), condition_hint: 1.0 }.diameter()?;
        let k_max = ((diameter + tol) / zn).floor() + 1.0;
        let zn2 = z.norm_sqr();
        for (i, &s1) in values.iter().enumerate() {
            for (j, &s2) in values.iter().enumerate() {
                if i == j {
                    continue;
                }
                let d = s1 - s2;
                // equal elements (k = 0) are never witnesses
                if d.norm() <= tol {
                    continue;
                }
                let (_, dist) = nearest_nonzero_multiple(d, z);
                if i < j {
                    min_distance = Some(min_distance.map_or(dist, |m| m.min(dist)));
                }
                if dist > tol {
                    continue;
                }
                // every k with |d − kz| ≤ tol sits within tol/|z| of the projection
                let along = (d * z.conj()).re / zn2;
                let lo = (along - tol / zn).ceil().max(-k_max);
                let hi = (along + tol / zn).floor().min(k_max);
                let mut k = lo;
                while k <= hi {
                    if k != 0.0 {
                        let residual = (d - z * k).norm();
                        if residual <= tol {
                            witnesses.push(Witness { s1, s2, k: k as i64, residual });
                        }
                    }
                    k += 1.0;
                }
            }
        }
    }
    Ok(CongruenceReport { free: witnesses.is_empty(), z, witnesses, min_distance })
}

/// Eigenvalues of `a`; the condition hint is 1 for normal input and the
/// inverse-iteration basis estimate otherwise.
pub fn eigenvalues(a: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<Spectrum> {
    if a.is_normal(cfg) {
        let values = qr_eigenvalues(a)?;
        Ok(Spectrum { values, condition_hint: 1.0 })
    } else {
        let d = eigen_decomposition(a)?;
        Ok(Spectrum { values: d.values, condition_hint: d.condition })
    }
}

fn real_spectrum(h: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(qr_eigenvalues(h)?.into_iter().map(|z| z.re).collect())
}

fn bounds(values: &[f64]) -> (f64, f64) {
    values.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| (lo.min(x), hi.max(x)))
}

/// `σ(Re A)` and `σ(Im A)` of a normal matrix, as real numbers.
pub fn cartesian_spectra(a: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<(Vec<f64>, Vec<f64>)> {
    if !a.is_normal(cfg) {
        return Err(Error::NotNormal);
    }
    let parts = a.cartesian_decomposition();
    Ok((real_spectrum(&parts.re)?, real_spectrum(&parts.im)?))
}

/// Smallest intervals containing `σ(Re A)` and `σ(Im A)`.
pub fn spectral_box_normal(a: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<SpectralBox> {
    let (re, im) = cartesian_spectra(a, cfg)?;
    let (re_lo, re_hi) = bounds(&re);
    let (im_lo, im_hi) = bounds(&im);
    Ok(SpectralBox { re_lo, re_hi, im_lo, im_hi })
}

/// Checks `σ(A) ⊆ σ(Re A) + i·σ(Im A)` within `congruence_tol`.
pub fn check_spectral_inclusion_normal(a: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<bool> {
    let (re, im) = cartesian_spectra(a, cfg)?;
    let sigma = qr_eigenvalues(a)?;
    Ok(sigma.iter().all(|lambda| {
        re.iter().any(|&x| im.iter().any(|&y| (lambda - Complex64::new(x, y)).norm() <= cfg.congruence_tol))
    }))
}
