//! Complex Hessenberg reduction, shifted QR and inverse-iteration
//! eigenvectors.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by std's inherent float methods when std is in the build
use num_traits::Float;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, Lu};

/// Condition reported for a numerically singular eigenvector basis.
pub const CONDITION_CEILING: f64 = 1e16;

/// Iterations allowed per unit of dimension.
const ITERATIONS_PER_ROW: usize = 30;

/// Eigenvalues with unit-norm eigenvectors as the columns of `vectors`.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<Complex64>,
    pub vectors: ComplexMatrix,
    /// `‖V‖_F ‖V⁻¹‖_F / n`; 1 exactly when `V` is a multiple of a unitary.
    pub condition: f64,
}

/// Unitary similarity to upper Hessenberg form by Householder reflectors.
pub fn hessenberg(a: &ComplexMatrix) -> ComplexMatrix {
    let n = a.n();
    let mut h = a.clone();
    let mut v = alloc::vec![Complex64::zero(); n];
    for k in 0..n.saturating_sub(2) {
        let len = n - k - 1;
        let x = &mut v[..len];
        for (i, xi) in x.iter_mut().enumerate() {
            *xi = h[(k + 1 + i, k)];
        }
        let tail: f64 = x[1..].iter().map(|z| z.norm_sqr()).sum();
        if tail == 0.0 {
            continue;
        }
        let norm = (x[0].norm_sqr() + tail).sqrt();
        let phase = if x[0].norm() == 0.0 { Complex64::new(1.0, 0.0) } else { x[0] / x[0].norm() };
        // v = x + phase·‖x‖·e1 avoids cancellation; reflector maps x to -phase·‖x‖·e1
        x[0] += phase * norm;
        let vnorm = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for xi in x.iter_mut() {
            *xi /= vnorm;
        }
        // left: rows k+1.., H ← (I − 2vv*) H
        for j in k..n {
            let mut dot = Complex64::zero();
            for i in 0..len {
                dot += x[i].conj() * h[(k + 1 + i, j)];
            }
            dot *= 2.0;
            for i in 0..len {
                let vi = x[i];
                h[(k + 1 + i, j)] -= vi * dot;
            }
        }
        // right: columns k+1.., H ← H (I − 2vv*)
        for i in 0..n {
            let mut dot = Complex64::zero();
            for j in 0..len {
                dot += h[(i, k + 1 + j)] * x[j];
            }
            dot *= 2.0;
            for j in 0..len {
                let vj = x[j].conj();
                h[(i, k + 1 + j)] -= dot * vj;
            }
        }
        for i in k + 2..n {
            h[(i, k)] = Complex64::zero();
        }
    }
    h
}

/// Rotation `[[c, s], [-s̄, c]]` mapping `(a, b)` to `(r, 0)`.
fn givens(a: Complex64, b: Complex64) -> (f64, Complex64) {
    let bn = b.norm();
    if bn == 0.0 {
        return (1.0, Complex64::zero());
    }
    let an = a.norm();
    if an == 0.0 {
        return (0.0, b.conj() / bn);
    }
    let r = an.hypot(bn);
    (an / r, (a / an) * b.conj() / r)
}

/// Eigenvalue of the 2×2 block `[[a, b], [c, d]]` closest to `d`.
fn wilkinson_shift(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let half_gap = (a - d) * 0.5;
    let disc = (half_gap * half_gap + b * c).sqrt();
    let mid = (a + d) * 0.5;
    let r1 = mid + disc;
    let r2 = mid - disc;
    if (r1 - d).norm() <= (r2 - d).norm() {
        r1
    } else {
        r2
    }
}

/// Eigenvalues by single-shift QR with deflation on the Hessenberg form.
///
/// The total iteration budget is `30·n`.
pub fn qr_eigenvalues(a: &ComplexMatrix) -> Result<Vec<Complex64>> {
    let n = a.n();
    let mut h = hessenberg(a);
    let budget = ITERATIONS_PER_ROW * n;
    let scale = h.frobenius();
    let mut iterations = 0;
    let mut since_deflation = 0;
    let mut hi = n - 1;
    let mut rots: Vec<(f64, Complex64)> = Vec::with_capacity(n);

    while hi > 0 {
        let mut lo = hi;
        while lo > 0 {
            let sub = h[(lo, lo - 1)].norm();
            let mut diag = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            if diag == 0.0 {
                diag = scale;
            }
            if sub <= f64::EPSILON * diag || sub < f64::MIN_POSITIVE {
                h[(lo, lo - 1)] = Complex64::zero();
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            hi -= 1;
            since_deflation = 0;
            continue;
        }
        if iterations >= budget {
            return Err(Error::NoConvergence { iterations });
        }
        iterations += 1;
        since_deflation += 1;

        let mu = if since_deflation % 11 == 0 {
            // exceptional shift breaks symmetric stagnation cycles
            h[(hi, hi)] + Complex64::new(0.75 * h[(hi, hi - 1)].norm(), 0.43 * h[(hi, hi - 1)].norm())
        } else {
            wilkinson_shift(h[(hi - 1, hi - 1)], h[(hi - 1, hi)], h[(hi, hi - 1)], h[(hi, hi)])
        };

        for k in lo..=hi {
            h[(k, k)] -= mu;
        }
        rots.clear();
        for k in lo..hi {
            let (c, s) = givens(h[(k, k)], h[(k + 1, k)]);
            for j in k..=hi {
                let x = h[(k, j)];
                let y = h[(k + 1, j)];
                h[(k, j)] = x * c + s * y;
                h[(k + 1, j)] = -s.conj() * x + y * c;
            }
            h[(k + 1, k)] = Complex64::zero();
            rots.push((c, s));
        }
        for (idx, &(c, s)) in rots.iter().enumerate() {
            let k = lo + idx;
            let last = (k + 2).min(hi);
            for i in lo..=last {
                let x = h[(i, k)];
                let y = h[(i, k + 1)];
                h[(i, k)] = x * c + y * s.conj();
                h[(i, k + 1)] = -x * s + y * c;
            }
        }
        for k in lo..=hi {
            h[(k, k)] += mu;
        }
    }
    let values = h.diagonal();
    if values.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
        return Err(Error::Overflow);
    }
    Ok(values)
}

fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Fixed, index-dependent start vector so distinct eigenvalues of one
/// eigenspace pick up independent directions.
fn start_vector(n: usize, index: usize) -> Vec<Complex64> {
    (0..n)
        .map(|i| {
            let h = mix64(((index as u64) << 32) ^ (i as u64) ^ 0x9e37_79b9_7f4a_7c15);
            let re = (h >> 11) as f64 / (1u64 << 53) as f64 - 0.5;
            let im = (mix64(h) >> 11) as f64 / (1u64 << 53) as f64 - 0.5;
            Complex64::new(re, im)
        })
        .collect()
}

fn normalize(x: &mut [Complex64]) -> bool {
    let norm = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if !(norm.is_finite() && norm > 0.0) {
        return false;
    }
    for z in x.iter_mut() {
        *z /= norm;
    }
    true
}

/// Unit eigenvector for `lambda` by two steps of inverse iteration.
fn inverse_iteration(a: &ComplexMatrix, lambda: Complex64, index: usize) -> Vec<Complex64> {
    let n = a.n();
    let scale = a.one_norm().max(lambda.norm()).max(f64::MIN_POSITIVE);
    let mut delta = scale * 1e-13;
    for _ in 0..6 {
        let shift = lambda + Complex64::new(delta, delta * 0.5);
        let mut m = a.clone();
        for i in 0..n {
            m[(i, i)] -= shift;
        }
        if let Ok(lu) = Lu::factor(&m) {
            let mut x = start_vector(n, index);
            let mut ok = true;
            for _ in 0..2 {
                lu.solve_vec(&mut x);
                if !normalize(&mut x) {
                    ok = false;
                    break;
                }
            }
            if ok {
                return x;
            }
        }
        delta *= 1e3;
    }
    let mut x = start_vector(n, index);
    normalize(&mut x);
    x
}

pub fn eigen_decomposition(a: &ComplexMatrix) -> Result<EigenDecomposition> {
    let values = qr_eigenvalues(a)?;
    let n = a.n();
    let mut vectors = ComplexMatrix::zeros(n);
    for (j, &lambda) in values.iter().enumerate() {
        let x = inverse_iteration(a, lambda, j);
        for i in 0..n {
            vectors[(i, j)] = x[i];
        }
    }
    let condition = basis_condition(&vectors);
    Ok(EigenDecomposition { values, vectors, condition })
}

pub(crate) fn basis_condition(v: &ComplexMatrix) -> f64 {
    match v.inverse() {
        Ok(inv) => {
            let c = v.frobenius() * inv.frobenius() / v.n() as f64;
            if c.is_finite() {
                c.clamp(1.0, CONDITION_CEILING)
            } else {
                CONDITION_CEILING
            }
        }
        Err(_) => CONDITION_CEILING,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn hessenberg_is_similar_and_has_zero_lower_part() {
        let a = ComplexMatrix::new(4, (0..16).map(|k| c((k as f64 * 0.37).sin(), (k as f64 * 0.91).cos())).collect())
            .unwrap();
        let h = hessenberg(&a);
        for i in 0..4usize {
            for j in 0..i.saturating_sub(1) {
                assert_eq!(h[(i, j)], Complex64::zero());
            }
        }
        assert!((h.trace() - a.trace()).norm() < 1e-13);
        assert!((h.frobenius() - a.frobenius()).abs() < 1e-13);
    }

    #[test]
    fn givens_annihilates() {
        for (a, b) in [(c(1.0, 2.0), c(-3.0, 0.5)), (c(0.0, 0.0), c(0.0, 2.0)), (c(1.0, 0.0), c(0.0, 0.0))] {
            let (cs, s) = givens(a, b);
            let lower = -s.conj() * a + b * cs;
            assert!(lower.norm() < 1e-15);
            assert!((cs * cs + s.norm_sqr() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn triangular_and_jordan_inputs() {
        let t = ComplexMatrix::from_real(2, &[1.0, 1.0, 0.0, 2.0]).unwrap();
        let mut v = qr_eigenvalues(&t).unwrap();
        v.sort_by(|x, y| x.re.partial_cmp(&y.re).unwrap());
        assert!((v[0] - c(1.0, 0.0)).norm() < 1e-15 && (v[1] - c(2.0, 0.0)).norm() < 1e-15);

        let j = ComplexMatrix::from_real(2, &[1.0, 1.0, 0.0, 1.0]).unwrap();
        let d = eigen_decomposition(&j).unwrap();
        assert!(d.condition > 1e6, "Jordan block basis must look singular: {}", d.condition);
    }

    #[test]
    fn unitary_basis_condition_is_one() {
        let d = ComplexMatrix::from_diag(&[c(1.0, 0.0), c(2.0, 0.0), c(-3.0, 1.0)]).unwrap();
        let e = eigen_decomposition(&d).unwrap();
        assert!((e.condition - 1.0).abs() < 1e-10, "{}", e.condition);
    }

    #[test]
    fn zero_and_scalar_matrices() {
        assert_eq!(qr_eigenvalues(&ComplexMatrix::zeros(3)).unwrap(), alloc::vec![Complex64::zero(); 3]);
        let s = ComplexMatrix::scalar(4, c(2.0, -1.0));
        assert!(qr_eigenvalues(&s).unwrap().iter().all(|&z| z == c(2.0, -1.0)));
        let e = eigen_decomposition(&s).unwrap();
        assert!(e.condition < 10.0, "eigenspace projections stay independent: {}", e.condition);
    }
}
