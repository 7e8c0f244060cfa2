//! Finite-dimensional verification of commuting matrix exponentials.
//!
//! The crate decides z-congruence freedom of matrix spectra, computes the
//! matrix exponential (scaling and squaring with a degree-13 Padé
//! approximant) alongside two independent oracles, and checks hypotheses and
//! conclusions of the exponential commutation theorems on concrete
//! instances:
//!
//! * Wermuth: if `σ(A)` and `σ(B)` are 2πi-congruence free, then
//!   `e^A e^B = e^B e^A ⇔ AB = BA`;
//! * the single-operator version: if `σ(A)` alone is 2πi-congruence free,
//!   then `e^A B = B e^A ⇔ AB = BA`;
//! * Chaban–Mortad: if `A` is normal and `σ(Im A) ⊂ (0, π)`, the same
//!   equivalence holds.
//!
//! Everything here is pure computation over `alloc`; file formats, reports
//! and the command-line front end live in the `expcommute` crate.

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod expm;
pub mod gen;
pub mod matrix;
pub mod spectrum;
pub mod wermuth;

pub use error::{Error, Result};
pub use expm::{expm, expm_eig_oracle, expm_taylor_oracle, ExpmResult};
pub use matrix::{commutator, mat_mul, relative_defect, CartesianParts, ComplexMatrix, Norms, ToleranceConfig};
pub use num_complex::Complex64 as ComplexScalar;
pub use spectrum::{CongruenceReport, SpectralBox, Spectrum, Threshold, Witness};
pub use wermuth::{TheoremId, TheoremReport, Verdict, WitnessScan, TWO_PI_I};
