//! The spectral zeta function of the Riemann operator and its regularized
//! determinant `det(sI - R)`, evaluated along two independent routes.
//!
//! Spectrum (eigenvalue `(1-n)/2` with multiplicity `rank K_n(A)`) gives
//!
//! ```text
//! φ_A(w, s) = (s - 1/2)^{-w} + (r1 + r2 - 1) s^{-w}
//!           + (r1 + r2) φ1(w, s) + r2 φ2(w, s),
//! φ1(w, s)  = Σ_{k≥1} (2k + s)^{-w}     = 2^{-w} ζ(w, 1 + s/2),
//! φ2(w, s)  = Σ_{k≥0} (2k + 1 + s)^{-w} = 2^{-w} ζ(w, (s + 1)/2),
//! ```
//!
//! and `det(sI - R) = exp(-∂_w φ_A(w, s)|_{w=0})`. The spectral route
//! evaluates this derivative through the Hurwitz engine; the closed route
//! evaluates the gamma-factor formula
//!
//! ```text
//! (s - 1/2) s^{-1} [Γ_R(s)^{r1} Γ_C(s)^{r2} (2π)^{d s / 2}]^{-1} C(K),
//! C(K) = (2√π)^{r1} (2√(2π))^{r2},   d = r1 + 2 r2.
//! ```

use std::f64::consts::{LN_2, PI};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::json;
use crate::number_field::Signature;
use crate::special_fn::{self, hurwitz_zeta, hurwitz_zeta_dw_at0, PrecisionConfig};
use crate::ComplexScalar;

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// Which route produced a determinant value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Spectral,
    ClosedForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DetValue {
    #[serde(serialize_with = "json::complex")]
    pub value: ComplexScalar,
    pub method: Method,
    #[serde(serialize_with = "json::complex")]
    pub s: ComplexScalar,
    pub sig: Signature,
}

fn zero() -> ComplexScalar {
    ComplexScalar::new(0.0, 0.0)
}

fn one() -> ComplexScalar {
    ComplexScalar::new(1.0, 0.0)
}

/// `z^k` by binary powering; no logarithms, so no branch choice.
fn ipow(z: ComplexScalar, k: i64) -> ComplexScalar {
    let mut base = if k < 0 { z.inv() } else { z };
    let mut e = k.unsigned_abs();
    let mut acc = one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

/// `(2π)^{-k s / 2}` through the real logarithm of the positive base.
fn sqrt_2pi_pow_neg(s: ComplexScalar, k: f64) -> ComplexScalar {
    (-s * (k * HALF_LN_2PI)).exp()
}

fn domain(function: &'static str, at: ComplexScalar, reason: &'static str) -> Error {
    Error::Domain { function, at, reason }
}

fn finite(function: &'static str, at: ComplexScalar, v: ComplexScalar) -> Result<ComplexScalar> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(domain(function, at, "result overflows double precision"))
    }
}

fn require_spectral_domain(function: &'static str, s: ComplexScalar) -> Result<()> {
    if !(s.re > -1.0) {
        return Err(domain(function, s, "spectral route requires Re(s) > -1"));
    }
    Ok(())
}

/// φ1(w, s) = 2^{-w} ζ(w, 1 + s/2), valid for Re(s) > -2.
pub fn phi1(w: ComplexScalar, s: ComplexScalar, cfg: &PrecisionConfig) -> Result<ComplexScalar> {
    if !(s.re > -2.0) {
        return Err(domain("phi1", s, "requires Re(s) > -2"));
    }
    Ok((-w * LN_2).exp() * hurwitz_zeta(w, 1.0 + s * 0.5, cfg)?)
}

/// φ2(w, s) = 2^{-w} ζ(w, (s + 1)/2), valid for Re(s) > -1.
pub fn phi2(w: ComplexScalar, s: ComplexScalar, cfg: &PrecisionConfig) -> Result<ComplexScalar> {
    if !(s.re > -1.0) {
        return Err(domain("phi2", s, "requires Re(s) > -1"));
    }
    Ok((-w * LN_2).exp() * hurwitz_zeta(w, (s + 1.0) * 0.5, cfg)?)
}

/// `-∂_w 2^{-w} ζ(w, x)` at `w = 0`, i.e. `log 2 · ζ(0, x) - ζ'(0, x)`.
fn neg_dw_scaled_hurwitz(x: ComplexScalar, cfg: &PrecisionConfig) -> Result<ComplexScalar> {
    Ok(LN_2 * hurwitz_zeta(zero(), x, cfg)? - hurwitz_zeta_dw_at0(x)?)
}

/// `-∂_w φ1(w, s)` at `w = 0`.
pub fn neg_dphi1_at0(s: ComplexScalar, cfg: &PrecisionConfig) -> Result<ComplexScalar> {
    if !(s.re > -2.0) {
        return Err(domain("phi1", s, "requires Re(s) > -2"));
    }
    neg_dw_scaled_hurwitz(1.0 + s * 0.5, cfg)
}

/// `-∂_w φ2(w, s)` at `w = 0`.
pub fn neg_dphi2_at0(s: ComplexScalar, cfg: &PrecisionConfig) -> Result<ComplexScalar> {
    if !(s.re > -1.0) {
        return Err(domain("phi2", s, "requires Re(s) > -1"));
    }
    neg_dw_scaled_hurwitz((s + 1.0) * 0.5, cfg)
}

/// Regularized product over `n > 1, n ≡ 1 (mod 4)` of `(n-1)/2 + s`.
///
/// Closed form: `s^{-1} Γ_R(s)^{-1} (2π)^{-s/2} 2√π`, undefined at `s = 0`.
pub fn regprod1(s: ComplexScalar, method: Method, cfg: &PrecisionConfig) -> Result<ComplexScalar> {
    match method {
        Method::Spectral => finite("regprod1", s, neg_dphi1_at0(s, cfg)?.exp()),
        Method::ClosedForm => {
            if s == zero() {
                return Err(Error::Pole { function: "regprod1", at: s });
            }
            let v = s.inv() * special_fn::recip_gamma_r(s)? * sqrt_2pi_pow_neg(s, 1.0) * (2.0 * PI.sqrt());
            finite("regprod1", s, v)
        }
    }
}

/// Regularized product over `n ≡ 3 (mod 4)` of `(n-1)/2 + s`.
///
/// Closed form: `Γ_R(s+1)^{-1} (2π)^{-s/2} √2`, entire in `s`.
pub fn regprod2(s: ComplexScalar, method: Method, cfg: &PrecisionConfig) -> Result<ComplexScalar> {
    match method {
        Method::Spectral => finite("regprod2", s, neg_dphi2_at0(s, cfg)?.exp()),
        Method::ClosedForm => {
            let v = special_fn::recip_gamma_r(s + 1.0)? * sqrt_2pi_pow_neg(s, 1.0) * 2f64.sqrt();
            finite("regprod2", s, v)
        }
    }
}

/// C(K) = (2√π)^{r1} (2√(2π))^{r2}.
pub fn constant_c(sig: Signature) -> ComplexScalar {
    let a = 2.0 * PI.sqrt();
    let b = 2.0 * (2.0 * PI).sqrt();
    ComplexScalar::new(a.powi(sig.r1 as i32) * b.powi(sig.r2 as i32), 0.0)
}

fn units_rank(sig: Signature) -> i64 {
    i64::from(sig.r1) + i64::from(sig.r2) - 1
}

/// `det(sI - R)` assembled from the spectral regularized products:
/// `(s - 1/2) s^{r1+r2-1} P1(s)^{r1+r2} P2(s)^{r2}`.
pub fn det_spectral(s: ComplexScalar, sig: Signature, cfg: &PrecisionConfig) -> Result<DetValue> {
    if s == zero() {
        return Err(Error::Pole { function: "det_spectral", at: s });
    }
    require_spectral_domain("det_spectral", s)?;
    let p1 = regprod1(s, Method::Spectral, cfg)?;
    let p2 = regprod2(s, Method::Spectral, cfg)?;
    let r12 = i64::from(sig.r1) + i64::from(sig.r2);
    let value = (s - 0.5) * ipow(s, units_rank(sig)) * ipow(p1, r12) * ipow(p2, i64::from(sig.r2));
    Ok(DetValue { value: finite("det_spectral", s, value)?, method: Method::Spectral, s, sig })
}

/// `det(sI - R)` from the gamma-factor closed form. The reciprocal gamma
/// factors vanish at their poles, so the value there is exactly 0.
pub fn det_closed(s: ComplexScalar, sig: Signature) -> Result<DetValue> {
    if s == zero() {
        return Err(Error::Pole { function: "det_closed", at: s });
    }
    let gr = special_fn::recip_gamma_r(s)?;
    let gc = special_fn::recip_gamma_c(s)?;
    let value = (s - 0.5)
        * s.inv()
        * ipow(gr, i64::from(sig.r1))
        * ipow(gc, i64::from(sig.r2))
        * sqrt_2pi_pow_neg(s, f64::from(sig.degree))
        * constant_c(sig);
    Ok(DetValue { value: finite("det_closed", s, value)?, method: Method::ClosedForm, s, sig })
}

/// Dispatches on `method`.
pub fn det(s: ComplexScalar, sig: Signature, method: Method, cfg: &PrecisionConfig) -> Result<DetValue> {
    match method {
        Method::Spectral => det_spectral(s, sig, cfg),
        Method::ClosedForm => det_closed(s, sig),
    }
}

fn require_phi_a_domain(s: ComplexScalar) -> Result<()> {
    if s == zero() {
        return Err(domain("phi_A", s, "s = 0 is excluded"));
    }
    if s == ComplexScalar::new(0.5, 0.0) {
        return Err(domain("phi_A", s, "s = 1/2 is excluded"));
    }
    require_spectral_domain("phi_A", s)
}

/// The spectral zeta function φ_A(w, s) of `sI - R`.
pub fn phi_a(w: ComplexScalar, s: ComplexScalar, sig: Signature, cfg: &PrecisionConfig) -> Result<ComplexScalar> {
    require_phi_a_domain(s)?;
    let r12 = f64::from(sig.r1) + f64::from(sig.r2);
    let v = (-w * (s - 0.5).ln()).exp()
        + units_rank(sig) as f64 * (-w * s.ln()).exp()
        + r12 * phi1(w, s, cfg)?
        + f64::from(sig.r2) * phi2(w, s, cfg)?;
    finite("phi_A", w, v)
}

/// `-∂_w φ_A(w, s)` at `w = 0`, summed term by term. Its exponential is
/// [`det_spectral`]; the value itself is one determination of the log.
pub fn neg_dphi_a_at0(s: ComplexScalar, sig: Signature, cfg: &PrecisionConfig) -> Result<ComplexScalar> {
    require_phi_a_domain(s)?;
    let r12 = f64::from(sig.r1) + f64::from(sig.r2);
    Ok((s - 0.5).ln()
        + units_rank(sig) as f64 * s.ln()
        + r12 * neg_dphi1_at0(s, cfg)?
        + f64::from(sig.r2) * neg_dphi2_at0(s, cfg)?)
}
