use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::ComplexMatrix;
use crate::error::{Error, Result};

/// LU factorization with partial pivoting, `PA = LU`.
#[derive(Debug, Clone)]
pub struct Lu {
    factors: ComplexMatrix,
    perm: Vec<usize>,
    swaps: usize,
}

impl Lu {
    pub fn factor(a: &ComplexMatrix) -> Result<Self> {
        let n = a.n();
        let mut f = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut swaps = 0;
        for k in 0..n {
            let (p, pivot_mag) =
                (k..n)
                    .map(|i| (i, f[(i, k)].norm()))
                    .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            if pivot_mag == 0.0 || !pivot_mag.is_finite() {
                return Err(Error::Singular);
            }
            if p != k {
                for j in 0..n {
                    let tmp = f[(k, j)];
                    f[(k, j)] = f[(p, j)];
                    f[(p, j)] = tmp;
                }
                perm.swap(k, p);
                swaps += 1;
            }
            let pivot = f[(k, k)];
            for i in k + 1..n {
                let l = f[(i, k)] / pivot;
                f[(i, k)] = l;
                if l.is_zero() {
                    continue;
                }
                for j in k + 1..n {
                    let u = f[(k, j)];
                    f[(i, j)] -= l * u;
                }
            }
        }
        Ok(Self { factors: f, perm, swaps })
    }

    pub fn determinant(&self) -> Complex64 {
        let d: Complex64 = (0..self.factors.n()).map(|i| self.factors[(i, i)]).product();
        if self.swaps % 2 == 1 {
            -d
        } else {
            d
        }
    }

    /// Solves `A x = b` in place.
    pub fn solve_vec(&self, b: &mut [Complex64]) {
        let n = self.factors.n();
        let permuted: Vec<Complex64> = self.perm.iter().map(|&p| b[p]).collect();
        b.copy_from_slice(&permuted);
        for i in 0..n {
            let mut s = b[i];
            for j in 0..i {
                s -= self.factors[(i, j)] * b[j];
            }
            b[i] = s;
        }
        for i in (0..n).rev() {
            let mut s = b[i];
            for j in i + 1..n {
                s -= self.factors[(i, j)] * b[j];
            }
            b[i] = s / self.factors[(i, i)];
        }
    }

    /// Solves `A X = B` column by column.
    pub fn solve(&self, b: &ComplexMatrix) -> Result<ComplexMatrix> {
        let n = self.factors.n();
        if b.n() != n {
            return Err(Error::DimensionMismatch { left: n, right: b.n() });
        }
        let mut out = ComplexMatrix::zeros(n);
        let mut col = alloc::vec![Complex64::zero(); n];
        for j in 0..n {
            for i in 0..n {
                col[i] = b[(i, j)];
            }
            self.solve_vec(&mut col);
            for i in 0..n {
                out[(i, j)] = col[i];
            }
        }
        if !out.is_finite() {
            return Err(Error::Singular);
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Result<ComplexMatrix> {
        self.solve(&ComplexMatrix::scalar(self.factors.n(), Complex64::one()))
    }
}
