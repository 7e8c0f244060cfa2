//! Matrix exponential: scaling and squaring with the degree-13 diagonal Padé
//! approximant, plus two independent oracles (scaled Taylor series and
//! eigendecomposition) for cross-checking.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by std's inherent float methods when std is in the build
use num_traits::Float;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, Lu};
use crate::spectrum::eigen_decomposition;

/// Largest `‖A‖₁` for which the degree-13 approximant is used unscaled.
pub const THETA_13: f64 = 5.371920351148152;

/// Default number of Taylor terms for [`expm_taylor_oracle`].
pub const TAYLOR_BUDGET: usize = 64;

/// Eigenvector-basis condition above which the eigen oracle refuses.
pub const EIG_ORACLE_MAX_CONDITION: f64 = 1e6;

const PADE_13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

#[derive(Debug, Clone, PartialEq)]
pub struct ExpmResult {
    pub value: ComplexMatrix,
    /// `s` in the `2^s` scaling.
    pub scaling_squarings: u32,
    /// `‖expm(A) − taylor(A)‖_F`, present when a cross-check was requested.
    pub oracle_gap: Option<f64>,
}

/// Smallest `s ≥ 0` with `norm / 2^s ≤ bound`.
fn squarings_for(norm: f64, bound: f64) -> u32 {
    if norm <= bound {
        return 0;
    }
    let mut s = (norm / bound).log2().ceil().max(0.0) as u32;
    while norm / f64::powi(2.0, s as i32) > bound {
        s += 1;
    }
    s
}

fn square_repeatedly(mut x: ComplexMatrix, s: u32) -> ComplexMatrix {
    for _ in 0..s {
        x = x.mul(&x);
    }
    x
}

fn combine(terms: &[(&ComplexMatrix, f64)], n: usize, diag: f64) -> ComplexMatrix {
    let mut out = ComplexMatrix::scalar(n, Complex64::new(diag, 0.0));
    for &(m, coef) in terms {
        out = out.zip_with(m, |acc, x| acc + x * coef);
    }
    out
}

/// `e^A` by scaling and squaring with the `[13/13]` Padé approximant.
pub fn expm(a: &ComplexMatrix) -> Result<ExpmResult> {
    let n = a.n();
    let s = squarings_for(a.one_norm(), THETA_13);
    let a = a.scale_real(f64::powi(2.0, -(s as i32)));
    let b = &PADE_13;

    let a2 = a.mul(&a);
    let a4 = a2.mul(&a2);
    let a6 = a4.mul(&a2);

    let u_inner = combine(&[(&a6, b[13]), (&a4, b[11]), (&a2, b[9])], n, 0.0);
    let u_outer = combine(&[(&a6, b[7]), (&a4, b[5]), (&a2, b[3])], n, b[1]);
    let u = a.mul(&a6.mul(&u_inner).zip_with(&u_outer, |x, y| x + y));

    let v_inner = combine(&[(&a6, b[12]), (&a4, b[10]), (&a2, b[8])], n, 0.0);
    let v_outer = combine(&[(&a6, b[6]), (&a4, b[4]), (&a2, b[2])], n, b[0]);
    let v = a6.mul(&v_inner).zip_with(&v_outer, |x, y| x + y);

    let denom = v.zip_with(&u, |x, y| x - y);
    let numer = v.zip_with(&u, |x, y| x + y);
    let r = Lu::factor(&denom)?.solve(&numer)?;

    let value = square_repeatedly(r, s);
    if !value.is_finite() {
        return Err(Error::Overflow);
    }
    Ok(ExpmResult { value, scaling_squarings: s, oracle_gap: None })
}

/// [`expm`] with the Taylor oracle's disagreement recorded in `oracle_gap`.
pub fn expm_cross_checked(a: &ComplexMatrix, budget: usize) -> Result<ExpmResult> {
    let mut result = expm(a)?;
    let oracle = expm_taylor_oracle(a, budget);
    if !oracle.is_finite() {
        return Err(Error::Overflow);
    }
    result.oracle_gap = Some(result.value.zip_with(&oracle, |x, y| x - y).frobenius());
    Ok(result)
}

/// Reference exponential: scale to `‖A‖₁ ≤ 1/2`, sum `budget` Taylor terms
/// with compensated summation, square back. Slow by design of the series,
/// meant only for cross-checking.
pub fn expm_taylor_oracle(a: &ComplexMatrix, budget: usize) -> ComplexMatrix {
    let n = a.n();
    let s = squarings_for(a.one_norm(), 0.5);
    let a = a.scale_real(f64::powi(2.0, -(s as i32)));

    let mut sum: Vec<Complex64> = ComplexMatrix::identity(n).into_entries();
    let mut comp = alloc::vec![Complex64::zero(); n * n];
    let mut term = ComplexMatrix::identity(n);
    for k in 1..budget {
        term = term.mul(&a).scale_real(1.0 / k as f64);
        for ((acc, c), &t) in sum.iter_mut().zip(comp.iter_mut()).zip(term.entries()) {
            // Kahan, per component
            let y = t - *c;
            let next = *acc + y;
            *c = (next - *acc) - y;
            *acc = next;
        }
        if term.entries().iter().all(|z| z.is_zero()) {
            break;
        }
    }
    let r = ComplexMatrix::from_fn(n, |i, j| sum[i * n + j]);
    square_repeatedly(r, s)
}

/// `V·diag(e^{λ_i})·V⁻¹` from the eigendecomposition. Refuses defective or
/// ill-conditioned input rather than returning an inaccurate answer.
pub fn expm_eig_oracle(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let d = eigen_decomposition(a)?;
    if d.condition > EIG_ORACLE_MAX_CONDITION {
        return Err(Error::OracleUnavailable { condition: d.condition, limit: EIG_ORACLE_MAX_CONDITION });
    }
    let n = a.n();
    let exps: Vec<Complex64> = d.values.iter().map(|z| z.exp()).collect();
    let scaled = ComplexMatrix::from_fn(n, |i, j| d.vectors[(i, j)] * exps[j]);
    let inv = Lu::factor(&d.vectors)?.inverse()?;
    let value = scaled.mul(&inv);
    if !value.is_finite() {
        return Err(Error::Overflow);
    }
    Ok(value)
}
