//! Brute-force reference computations for the test suites.
//!
//! Nothing here shares code with `expcommute-core`: matrices are plain
//! row-major slices and every routine takes the slow, obvious route.

#![allow(clippy::needless_range_loop)]

use num_complex::Complex64;

/// Row-major product of two `n × n` matrices.
pub fn mul(n: usize, a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            out[i * n + j] = (0..n).map(|k| a[i * n + k] * b[k * n + j]).sum();
        }
    }
    out
}

/// Characteristic polynomial `det(λI − A)` by Faddeev–LeVerrier, as
/// coefficients `[c_0, …, c_n]` of `λ^0 … λ^n` with `c_n = 1`.
pub fn charpoly(n: usize, a: &[Complex64]) -> Vec<Complex64> {
    let zero = Complex64::new(0.0, 0.0);
    let mut coeffs = vec![zero; n + 1];
    coeffs[n] = Complex64::new(1.0, 0.0);
    let mut m = vec![zero; n * n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1} I
        let mut next = mul(n, a, &m);
        for i in 0..n {
            next[i * n + i] += coeffs[n - k + 1];
        }
        m = next;
        let am = mul(n, a, &m);
        let tr: Complex64 = (0..n).map(|i| am[i * n + i]).sum();
        coeffs[n - k] = -tr / k as f64;
    }
    coeffs
}

fn horner(coeffs: &[Complex64], x: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

/// Roots of a polynomial given low-to-high coefficients: closed form up to
/// degree 2, Aberth–Ehrlich iteration beyond.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    match deg {
        0 => vec![],
        1 => vec![-monic[0]],
        2 => {
            let (b, c) = (monic[1], monic[0]);
            let disc = (b * b - 4.0 * c).sqrt();
            let q = if (b.conj() * disc).re >= 0.0 { -(b + disc) / 2.0 } else { -(b - disc) / 2.0 };
            if q.norm() == 0.0 {
                vec![q, q]
            } else {
                vec![q, c / q]
            }
        }
        _ => {
            let radius = 1.0 + monic[..deg].iter().map(|c| c.norm()).fold(0.0, f64::max);
            let mut z: Vec<Complex64> = (0..deg)
                .map(|k| Complex64::from_polar(radius * 0.7, 0.4 + std::f64::consts::TAU * k as f64 / deg as f64))
                .collect();
            for _ in 0..500 {
                let mut moved = 0.0f64;
                for i in 0..deg {
                    let (p, dp) = horner(&monic, z[i]);
                    if p.norm() == 0.0 {
                        continue;
                    }
                    let ratio = p / dp;
                    let repulse: Complex64 =
                        (0..deg).filter(|&j| j != i).map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j])).sum();
                    let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulse);
                    if step.re.is_finite() && step.im.is_finite() {
                        z[i] -= step;
                        moved = moved.max(step.norm());
                    }
                }
                if moved < 1e-15 * radius {
                    break;
                }
            }
            z
        }
    }
}

/// Eigenvalues of a small matrix as the roots of its characteristic polynomial.
pub fn eigenvalues_small(n: usize, a: &[Complex64]) -> Vec<Complex64> {
    polynomial_roots(&charpoly(n, a))
}

/// Leibniz expansion over all permutations.
pub fn determinant(n: usize, a: &[Complex64]) -> Complex64 {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Complex64::new(0.0, 0.0);
    permute(n, a, &mut perm, 0, 1.0, &mut total);
    total
}

fn permute(n: usize, a: &[Complex64], perm: &mut [usize], k: usize, sign: f64, total: &mut Complex64) {
    if k == n {
        let prod: Complex64 = (0..n).map(|i| a[i * n + perm[i]]).product();
        *total += prod * sign;
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(n, a, perm, k + 1, if i == k { sign } else { -sign }, total);
        perm.swap(k, i);
    }
}

/// `min over bijections π of max |a_i − b_π(i)|`, by dynamic programming
/// over subsets. Returns infinity when the lengths differ.
pub fn bottleneck_match(a: &[Complex64], b: &[Complex64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let n = a.len();
    assert!(n <= 20, "subset DP is exponential");
    let mut dp = vec![f64::INFINITY; 1 << n];
    dp[0] = 0.0;
    for mask in 0usize..(1 << n) {
        if dp[mask].is_infinite() {
            continue;
        }
        let i = mask.count_ones() as usize;
        if i == n {
            continue;
        }
        for j in 0..n {
            if mask & (1 << j) == 0 {
                let cost = dp[mask].max((a[i] - b[j]).norm());
                let next = mask | (1 << j);
                if cost < dp[next] {
                    dp[next] = cost;
                }
            }
        }
    }
    dp[(1 << n) - 1]
}

/// A point of the lattice `(x + iy) / denominator`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
}

/// Exact z-congruence freedom on a lattice: no two distinct points differ
/// by `k·z` for any `1 ≤ |k| ≤ max_k`.
pub fn grid_congruence_free(points: &[GridPoint], z: GridPoint, max_k: i64) -> bool {
    for (i, p) in points.iter().enumerate() {
        for (j, q) in points.iter().enumerate() {
            if i == j || p == q {
                continue;
            }
            let (dx, dy) = (p.x - q.x, p.y - q.y);
            for k in (-max_k..=max_k).filter(|&k| k != 0) {
                if dx == k * z.x && dy == k * z.y {
                    return false;
                }
            }
        }
    }
    true
}

/// Reference unitary check: `‖U U* − I‖_F`.
pub fn unitarity_gap(n: usize, u: &[Complex64]) -> f64 {
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            let dot: Complex64 = (0..n).map(|k| u[i * n + k] * u[j * n + k].conj()).sum();
            let target = if i == j { 1.0 } else { 0.0 };
            acc += (dot - target).norm_sqr();
        }
    }
    acc.sqrt()
}
