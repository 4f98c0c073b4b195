//! Ranks of the higher K-groups of a ring of integers and the spectrum of
//! the Riemann operator on their complexifications.

use serde::Serialize;

use crate::number_field::Signature;
use crate::ComplexScalar;

/// Largest `n_max` accepted by [`spectrum`].
pub const MAX_N: u64 = 1_000_000;

/// rank K_n(A) = dim K_n(A) ⊗ C, by Borel's theorem.
///
/// For the degenerate signature `(0, 0)` the `n = 1` entry saturates at 0.
pub fn borel_rank(n: u64, sig: Signature) -> u64 {
    let (r1, r2) = (u64::from(sig.r1), u64::from(sig.r2));
    match n {
        0 => 1,
        1 => (r1 + r2).saturating_sub(1),
        _ if n % 4 == 1 => r1 + r2,
        _ if n % 4 == 3 => r2,
        _ => 0,
    }
}

/// One eigenspace of the Riemann operator: eigenvalue `(1 - n) / 2` on
/// `K_n(A) ⊗ C`, with multiplicity `rank K_n(A)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpectrumSlice {
    pub n: u64,
    /// Numerator of the eigenvalue; the denominator is always 2.
    pub eigenvalue_num: i64,
    pub multiplicity: u64,
}

impl SpectrumSlice {
    pub fn eigenvalue(&self) -> f64 {
        self.eigenvalue_num as f64 / 2.0
    }

    pub fn eigenvalue_complex(&self) -> ComplexScalar {
        ComplexScalar::new(self.eigenvalue(), 0.0)
    }
}

/// Slices for `n = 0..=n_max`, zero multiplicities included.
///
/// # Panics
///
/// If `n_max` exceeds [`MAX_N`].
pub fn spectrum(sig: Signature, n_max: u64) -> Vec<SpectrumSlice> {
    assert!(n_max <= MAX_N, "n_max {n_max} exceeds {MAX_N}");
    (0..=n_max).map(|n| SpectrumSlice { n, eigenvalue_num: 1 - n as i64, multiplicity: borel_rank(n, sig) }).collect()
}
