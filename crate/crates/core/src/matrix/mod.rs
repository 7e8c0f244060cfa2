//! Dense complex square matrices and the arithmetic every other module
//! builds on.

mod lu;

pub use lu::Lu;

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by std's inherent float methods when std is in the build
use num_traits::Float;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Every numerical threshold used by the verifiers.
///
/// Equality of matrices is always decided normwise through
/// [`relative_defect`], never entrywise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    /// Normwise-relative equality threshold.
    pub eq_tol: f64,
    /// Maximum distance from a nonzero multiple of the modulus that counts as congruent.
    pub congruence_tol: f64,
    /// Eigenvalue accuracy budget.
    pub spectral_tol: f64,
    /// Strictness margin for open intervals.
    pub interval_margin: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self { eq_tol: 1e-9, congruence_tol: 1e-7, spectral_tol: 1e-8, interval_margin: 1e-9 }
    }
}

impl ToleranceConfig {
    pub fn validate(&self) -> Result<Self> {
        for (name, value) in [
            ("eq_tol", self.eq_tol),
            ("congruence_tol", self.congruence_tol),
            ("spectral_tol", self.spectral_tol),
            ("interval_margin", self.interval_margin),
        ] {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::InvalidTolerance { name, value });
            }
        }
        Ok(*self)
    }
}

/// Square complex matrix, row-major, with finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Norms {
    pub frobenius: f64,
    /// Maximum absolute column sum.
    pub one_norm: f64,
    /// Maximum absolute row sum.
    pub inf_norm: f64,
}

/// `T = re + i·im` with both parts self-adjoint.
#[derive(Debug, Clone, PartialEq)]
pub struct CartesianParts {
    pub re: ComplexMatrix,
    pub im: ComplexMatrix,
}

impl ComplexMatrix {
    /// Builds an `n × n` matrix from row-major entries, rejecting non-finite values.
    pub fn new(n: usize, entries: Vec<Complex64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let expected = n.checked_mul(n).ok_or(Error::InvalidArgument("dimension overflow"))?;
        if entries.len() != expected {
            return Err(Error::EntryCount { expected, actual: entries.len() });
        }
        if let Some(index) = entries.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { n, data: entries })
    }

    /// Real row-major entries.
    pub fn from_real(n: usize, entries: &[f64]) -> Result<Self> {
        Self::new(n, entries.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n > 0, "matrix dimension must be at least 1");
        Self { n, data: vec![Complex64::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Complex64::new(1.0, 0.0))
    }

    pub fn scalar(n: usize, value: Complex64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = value;
        }
        m
    }

    pub fn from_diag(diag: &[Complex64]) -> Result<Self> {
        let n = diag.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if let Some(index) = diag.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::NonFinite { index });
        }
        let mut m = Self::zeros(n);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        Ok(m)
    }

    pub(crate) fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Complex64> {
        self.data
    }

    pub fn diagonal(&self) -> Vec<Complex64> {
        (0..self.n).map(|i| self[(i, i)]).collect()
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { left: self.n, right: other.n })
        }
    }

    /// Product without the dimension check; callers guarantee equal sizes.
    pub(crate) fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = vec![Complex64::zero(); n * n];
        for i in 0..n {
            let row = &mut out[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                let other_row = &other.data[k * n..(k + 1) * n];
                for (o, &b) in row.iter_mut().zip(other_row) {
                    *o += a * b;
                }
            }
        }
        Self { n, data: out }
    }

    pub(crate) fn zip_with(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        debug_assert_eq!(self.n, other.n);
        Self { n: self.n, data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    pub(crate) fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self { n: self.n, data: self.data.iter().map(|&z| f(z)).collect() }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    /// `Re T = ½(T + T*)`, `Im T = (1/2i)(T − T*)`.
    pub fn cartesian_decomposition(&self) -> CartesianParts {
        let adj = self.adjoint();
        let re = self.zip_with(&adj, |t, s| (t + s) * 0.5);
        // (t - s) / (2i) = -i (t - s) / 2
        let im = self.zip_with(&adj, |t, s| (t - s) * Complex64::new(0.0, -0.5));
        CartesianParts { re, im }
    }

    pub fn norms(&self) -> Norms {
        let n = self.n;
        let frobenius = self.frobenius();
        let mut one_norm = 0.0f64;
        let mut inf_norm = 0.0f64;
        for k in 0..n {
            let col: f64 = (0..n).map(|i| self[(i, k)].norm()).sum();
            let row: f64 = (0..n).map(|j| self[(k, j)].norm()).sum();
            one_norm = one_norm.max(col);
            inf_norm = inf_norm.max(row);
        }
        Norms { frobenius, one_norm, inf_norm }
    }

    pub fn frobenius(&self) -> f64 {
        // scaled accumulation keeps large entries from overflowing the sum of squares
        let scale = self.data.iter().map(|z| z.re.abs().max(z.im.abs())).fold(0.0, f64::max);
        if scale == 0.0 {
            return 0.0;
        }
        let sum: f64 = self.data.iter().map(|z| (z / scale).norm_sqr()).sum();
        scale * sum.sqrt()
    }

    pub fn one_norm(&self) -> f64 {
        self.norms().one_norm
    }

    /// `AA* = A*A` up to `eq_tol · (1 + ‖A‖_F²)`.
    pub fn is_normal(&self, cfg: &ToleranceConfig) -> bool {
        let adj = self.adjoint();
        let gap = self.mul(&adj).zip_with(&adj.mul(self), |a, b| a - b).frobenius();
        let f = self.frobenius();
        gap <= cfg.eq_tol * (1.0 + f * f)
    }

    /// `Σ coeffs[k] · A^k`, evaluated by Horner's rule.
    pub fn polynomial(&self, coeffs: &[Complex64]) -> Self {
        let mut acc = Self::zeros(self.n);
        for &c in coeffs.iter().rev() {
            acc = acc.mul(self);
            for i in 0..self.n {
                acc[(i, i)] += c;
            }
        }
        acc
    }

    pub fn determinant(&self) -> Complex64 {
        match Lu::factor(self) {
            Ok(lu) => lu.determinant(),
            Err(_) => Complex64::zero(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        Lu::factor(self)?.inverse()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}

pub fn mat_mul(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.check_same(b)?;
    Ok(a.mul(b))
}

/// `AB − BA`.
pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.check_same(b)?;
    Ok(a.mul(b).zip_with(&b.mul(a), |x, y| x - y))
}

/// `‖X‖_F / (1 + ‖scale_a‖_F · ‖scale_b‖_F)`.
pub fn relative_defect(x: &ComplexMatrix, scale_a: &ComplexMatrix, scale_b: &ComplexMatrix) -> Result<f64> {
    x.check_same(scale_a)?;
    x.check_same(scale_b)?;
    Ok(x.frobenius() / (1.0 + scale_a.frobenius() * scale_b.frobenius()))
}
