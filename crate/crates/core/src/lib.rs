//! Zeta-regularized determinants of the Riemann operator acting on the
//! rational higher K-groups of the ring of integers of a number field.
//!
//! The operator acts on `K_n(A) ⊗ C` as the scalar `(1 - n) / 2`, with
//! multiplicities given by Borel's ranks. Its regularized determinant
//! `det(sI - R)` is evaluated two ways:
//!
//! * [`regdet::det_spectral`] assembles it from Hurwitz-zeta regularized
//!   products over the spectrum;
//! * [`regdet::det_closed`] evaluates the gamma-factor closed form.
//!
//! The two must agree wherever both are defined.

// `!(x > a)` is used on purpose so NaN lands in the rejecting branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod json;
pub mod ktheory;
pub mod number_field;
pub mod regdet;
pub mod special_fn;

pub use error::{Error, Result};
pub use ktheory::{borel_rank, spectrum, SpectrumSlice};
pub use number_field::{parse_polynomial, signature, sturm_real_root_count, IntPolynomial, Signature};
pub use regdet::{det_closed, det_spectral, DetValue, Method};
pub use special_fn::PrecisionConfig;

/// Double-precision complex scalar used by the analytic layer.
pub type ComplexScalar = num_complex::Complex64;
