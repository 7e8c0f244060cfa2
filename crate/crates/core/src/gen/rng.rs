//! Counter-based SplitMix64.
//!
//! Output `i` (zero-based) of the stream with key `k` is
//! `mix64(k + (i + 1)·0x9E3779B97F4A7C15)` with wrapping arithmetic, where
//! `mix64` is the SplitMix64 finalizer. A child stream `id` of key `k` has
//! key `mix64(k ^ mix64(id + 0xD1B54A32D192ED03))`. Uniform doubles take the
//! top 53 bits; normals come from Box–Muller on two consecutive uniforms
//! `(1 − u1, u2)`, cosine branch first.

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by std's inherent float methods when std is in the build
use num_traits::Float;

const GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;
const SPLIT: u64 = 0xd1b5_4a32_d192_ed03;

#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterRng {
    key: u64,
    counter: u64,
}

impl CounterRng {
    pub fn new(seed: u64) -> Self {
        Self { key: seed, counter: 0 }
    }

    /// Independent child stream; does not advance `self`.
    pub fn split(&self, id: u64) -> Self {
        Self::new(mix64(self.key ^ mix64(id.wrapping_add(SPLIT))))
    }

    /// The `index`-th output without touching the stream position.
    pub fn at(&self, index: u64) -> u64 {
        mix64(self.key.wrapping_add(index.wrapping_add(1).wrapping_mul(GAMMA)))
    }

    pub fn next_u64(&mut self) -> u64 {
        let out = self.at(self.counter);
        self.counter = self.counter.wrapping_add(1);
        out
    }

    /// Uniform in `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    pub fn normal_pair(&mut self) -> (f64, f64) {
        let u1 = 1.0 - self.uniform();
        let u2 = self.uniform();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = core::f64::consts::TAU * u2;
        (r * theta.cos(), r * theta.sin())
    }

    /// Standard complex Gaussian, `E|z|² = 1`.
    pub fn complex_normal(&mut self) -> Complex64 {
        let (a, b) = self.normal_pair();
        Complex64::new(a, b) * core::f64::consts::FRAC_1_SQRT_2
    }
}
