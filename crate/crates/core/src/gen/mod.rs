//! Seeded generators of structured instances: unitaries, matrices with a
//! prescribed spectrum, normal matrices with prescribed Cartesian parts,
//! congruence-free spectra and commuting pairs.
//!
//! Identical arguments always produce bit-identical output.

mod rng;

pub use rng::{mix64, CounterRng};

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by std's inherent float methods when std is in the build
use num_traits::Float;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::spectrum::nearest_nonzero_multiple;

/// Attempts allowed when rejection-sampling one spectrum.
pub const REJECTION_BUDGET: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub seed: u64,
    pub n: usize,
    /// Exact condition number of the similarity transform.
    pub conditioning: f64,
    /// Minimum distance of pairwise differences from nonzero multiples of
    /// the modulus, as a fraction of its modulus.
    pub spectrum_margin: f64,
}

impl GenSpec {
    pub fn new(seed: u64, n: usize) -> Self {
        Self { seed, n, conditioning: 1.0, spectrum_margin: 0.0 }
    }
}

// sub-stream ids, fixed so that streams are reproducible across versions
const STREAM_LEFT: u64 = 1;
const STREAM_RIGHT: u64 = 2;
const STREAM_SINGULAR: u64 = 3;
const STREAM_SPECTRUM: u64 = 4;
const STREAM_COEFFS: u64 = 5;

/// Haar-like unitary: Gram–Schmidt (twice) of a complex Gaussian matrix,
/// with the triangular factor's diagonal made positive.
pub fn random_unitary(n: usize, seed: u64) -> ComplexMatrix {
    assert!(n > 0, "dimension must be at least 1");
    let mut rng = CounterRng::new(seed);
    let g = ComplexMatrix::from_fn(n, |_, _| rng.complex_normal());
    let mut cols: Vec<Vec<Complex64>> = (0..n).map(|j| (0..n).map(|i| g[(i, j)]).collect()).collect();
    for j in 0..n {
        for _ in 0..2 {
            for k in 0..j {
                let (done, rest) = cols.split_at_mut(j);
                let q = &done[k];
                let v = &mut rest[0];
                let proj: Complex64 = q.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum();
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi -= proj * qi;
                }
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in cols[j].iter_mut() {
            *z /= norm;
        }
    }
    ComplexMatrix::from_fn(n, |i, j| cols[j][i])
}

/// `P` and `P⁻¹` with `P = U₁·diag(σ)·U₂`, `σ` log-uniform on
/// `[1, conditioning]` with both endpoints attained.
pub fn similarity(spec: &GenSpec) -> Result<(ComplexMatrix, ComplexMatrix)> {
    if spec.n == 0 {
        return Err(Error::EmptyMatrix);
    }
    if !(spec.conditioning.is_finite() && spec.conditioning >= 1.0) {
        return Err(Error::InvalidArgument("conditioning must be finite and at least 1"));
    }
    let root = CounterRng::new(spec.seed);
    let n = spec.n;
    let u1 = random_unitary(n, root.split(STREAM_LEFT).at(0));
    let u2 = random_unitary(n, root.split(STREAM_RIGHT).at(0));
    let mut rng = root.split(STREAM_SINGULAR);
    let log_k = spec.conditioning.ln();
    let sigma: Vec<f64> = (0..n)
        .map(|i| match i {
            0 => 1.0,
            _ if i == n - 1 => spec.conditioning,
            _ => (log_k * rng.uniform()).exp(),
        })
        .collect();
    let p = ComplexMatrix::from_fn(n, |i, j| (0..n).map(|k| u1[(i, k)] * sigma[k] * u2[(k, j)]).sum());
    let p_inv = ComplexMatrix::from_fn(n, |i, j| {
        (0..n).map(|k| u2[(k, i)].conj() * (1.0 / sigma[k]) * u1[(j, k)].conj()).sum()
    });
    Ok((p, p_inv))
}

/// `P·diag(values)·P⁻¹`.
pub fn with_spectrum(values: &[Complex64], spec: &GenSpec) -> Result<ComplexMatrix> {
    if values.len() != spec.n {
        return Err(Error::EntryCount { expected: spec.n, actual: values.len() });
    }
    let (p, p_inv) = similarity(spec)?;
    conjugate_diagonal(&p, values, &p_inv)
}

/// `P·diag(values)·Q`.
pub fn conjugate_diagonal(p: &ComplexMatrix, values: &[Complex64], q: &ComplexMatrix) -> Result<ComplexMatrix> {
    let d = ComplexMatrix::from_diag(values)?;
    if d.n() != p.n() || d.n() != q.n() {
        return Err(Error::DimensionMismatch { left: p.n(), right: d.n() });
    }
    let n = p.n();
    let pd = ComplexMatrix::from_fn(n, |i, j| p[(i, j)] * values[j]);
    Ok(pd.mul(q))
}

/// `U·diag(re_k + i·im_k)·U*` for a seeded unitary `U`.
pub fn normal_with_parts(re_values: &[f64], im_values: &[f64], seed: u64) -> Result<ComplexMatrix> {
    if re_values.len() != im_values.len() {
        return Err(Error::EntryCount { expected: re_values.len(), actual: im_values.len() });
    }
    if re_values.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    let values: Vec<Complex64> = re_values.iter().zip(im_values).map(|(&a, &b)| Complex64::new(a, b)).collect();
    let u = random_unitary(values.len(), seed);
    conjugate_diagonal(&u, &values, &u.adjoint())
}

/// `n` values in the disk of radius `|z|` whose pairwise differences stay at
/// least `margin·|z|` away from every nonzero multiple of `z`.
pub fn congruence_free_spectrum(n: usize, z: Complex64, margin: f64, seed: u64) -> Result<Vec<Complex64>> {
    let zn = z.norm();
    if zn == 0.0 {
        return Err(Error::ZeroModulus);
    }
    if !(margin.is_finite() && margin >= 0.0) {
        return Err(Error::InvalidArgument("margin must be finite and nonnegative"));
    }
    let mut rng = CounterRng::new(seed).split(STREAM_SPECTRUM);
    let mut out: Vec<Complex64> = Vec::with_capacity(n);
    let mut attempts = 0;
    while out.len() < n {
        if attempts >= REJECTION_BUDGET {
            return Err(Error::GenerationExhausted { attempts });
        }
        attempts += 1;
        let r = zn * rng.uniform().sqrt();
        let theta = core::f64::consts::TAU * rng.uniform();
        let candidate = Complex64::from_polar(r, theta);
        let ok = out.iter().all(|&s| nearest_nonzero_multiple(candidate - s, z).1 >= margin * zn);
        if ok {
            out.push(candidate);
        }
    }
    Ok(out)
}

/// Seeded `A` with spectrum and conditioning from `spec`, and
/// `B = c₀I + c₁A + c₂A² + c₃A³` with seeded coefficients.
pub fn commuting_pair(spec: &GenSpec) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let root = CounterRng::new(spec.seed);
    let mut rng = root.split(STREAM_SPECTRUM);
    let values: Vec<Complex64> = (0..spec.n).map(|_| rng.complex_normal() * 1.5).collect();
    let a = with_spectrum(&values, spec)?;
    let mut rng = root.split(STREAM_COEFFS);
    let coeffs: Vec<Complex64> = (0..4).map(|k| rng.complex_normal() / (1 + k) as f64).collect();
    let b = a.polynomial(&coeffs);
    Ok((a, b))
}

/// Complex Gaussian matrix scaled by `1/√n`.
pub fn gaussian_matrix(n: usize, seed: u64) -> ComplexMatrix {
    let mut rng = CounterRng::new(seed);
    let s = 1.0 / (n as f64).sqrt();
    ComplexMatrix::from_fn(n, |_, _| rng.complex_normal() * s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{commutator, relative_defect, ToleranceConfig};
    use core::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn unitary_examples() {
        let u1 = random_unitary(1, 5);
        assert!((u1[(0, 0)].norm() - 1.0).abs() < 1e-15);
        for n in [2, 5, 12] {
            let u = random_unitary(n, 99);
            let gap = u.mul(&u.adjoint()).sub(&ComplexMatrix::identity(n)).unwrap().frobenius();
            assert!(gap < 1e-12, "n={n}: {gap}");
            assert_eq!(u, random_unitary(n, 99));
        }
        assert_ne!(random_unitary(3, 1), random_unitary(3, 2));
    }

    #[test]
    fn similarity_has_requested_condition() {
        let spec = GenSpec { conditioning: 50.0, ..GenSpec::new(3, 4) };
        let (p, p_inv) = similarity(&spec).unwrap();
        assert!(p.mul(&p_inv).sub(&ComplexMatrix::identity(4)).unwrap().frobenius() < 1e-12);
        let bad = GenSpec { conditioning: 0.5, ..spec };
        assert!(similarity(&bad).is_err());
        assert!(with_spectrum(&[c(1.0, 0.0); 4], &bad).is_err());
    }

    #[test]
    fn scalar_spectrum_gives_scalar_matrix() {
        let lambda = c(2.0, -0.5);
        let a = with_spectrum(&[lambda; 3], &GenSpec::new(8, 3)).unwrap();
        assert!(a.sub(&ComplexMatrix::scalar(3, lambda)).unwrap().frobenius() < 1e-14);
        assert!(with_spectrum(&[lambda; 2], &GenSpec::new(8, 3)).is_err());
    }

    #[test]
    fn normal_with_parts_examples() {
        let a = normal_with_parts(&[0.0], &[PI / 2.0], 1).unwrap();
        assert!((a[(0, 0)] - c(0.0, PI / 2.0)).norm() < 1e-15);
        let a = normal_with_parts(&[1.0, -2.0, 0.5], &[0.5, 1.5, 3.0], 4).unwrap();
        assert!(a.is_normal(&ToleranceConfig::default()));
        assert!(normal_with_parts(&[1.0], &[1.0, 2.0], 0).is_err());
    }

    #[test]
    fn congruence_free_spectrum_respects_margin() {
        let z = c(0.0, 2.0 * PI);
        assert_eq!(congruence_free_spectrum(1, z, 0.2, 3).unwrap().len(), 1);
        let s = congruence_free_spectrum(8, z, 0.1, 11).unwrap();
        for (i, &a) in s.iter().enumerate() {
            assert!(a.norm() <= z.norm());
            for &b in &s[i + 1..] {
                assert!(nearest_nonzero_multiple(a - b, z).1 >= 0.1 * z.norm());
            }
        }
        assert_eq!(s, congruence_free_spectrum(8, z, 0.1, 11).unwrap());
        assert_eq!(congruence_free_spectrum(2, c(0.0, 0.0), 0.1, 1), Err(Error::ZeroModulus));
        // margin 1 is unattainable: every difference of the disk lies within |z| of ±z or beyond
        assert!(matches!(
            congruence_free_spectrum(40, z, 1.0, 1),
            Err(Error::GenerationExhausted { attempts: REJECTION_BUDGET })
        ));
    }

    #[test]
    fn commuting_pairs_commute() {
        let cfg = ToleranceConfig::default();
        for seed in 0..100 {
            let spec = GenSpec { conditioning: 3.0, ..GenSpec::new(seed, 1 + (seed as usize % 6)) };
            let (a, b) = commuting_pair(&spec).unwrap();
            let d = relative_defect(&commutator(&a, &b).unwrap(), &a, &b).unwrap();
            assert!(d <= cfg.eq_tol, "seed {seed}: {d}");
            assert_eq!((a.clone(), b.clone()), commuting_pair(&spec).unwrap());
        }
        let a = gaussian_matrix(3, 1);
        assert_eq!(a.polynomial(&[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]), ComplexMatrix::identity(3));
    }
}
