//! Complex special functions: log-gamma, the archimedean gamma factors and
//! an Euler–Maclaurin Hurwitz zeta engine.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ComplexScalar;

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// B_2, B_4, ..., B_20.
const BERNOULLI_EVEN: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

/// Stirling series is used once `Re(z)` has been shifted past this.
const STIRLING_MIN_RE: f64 = 15.0;

/// Bounds the length of the upward recurrence.
const MIN_SUPPORTED_RE: f64 = -1e5;

/// Truncation parameters for the numerical layer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PrecisionConfig {
    /// Number of directly summed terms before the Euler–Maclaurin tail.
    pub em_shift: u32,
    /// Highest Bernoulli correction order (even).
    pub em_order: u32,
    /// Central-difference step for the derivative oracle.
    pub fd_step: f64,
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        PrecisionConfig { em_shift: 30, em_order: 12, fd_step: 1e-5 }
    }
}

impl PrecisionConfig {
    pub fn validate(&self) -> Result<()> {
        if self.em_shift < 8 {
            return Err(Error::Config(format!("em_shift must be >= 8, got {}", self.em_shift)));
        }
        if self.em_order < 2 || self.em_order > 20 || !self.em_order.is_multiple_of(2) {
            return Err(Error::Config(format!("em_order must be an even integer in 2..=20, got {}", self.em_order)));
        }
        if !(self.fd_step > 0.0 && self.fd_step < 1e-2) {
            return Err(Error::Config(format!("fd_step must lie in (0, 1e-2), got {}", self.fd_step)));
        }
        Ok(())
    }

    /// Parses a JSON object; missing fields take their defaults.
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: PrecisionConfig = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }
}

fn is_nonpositive_integer(z: ComplexScalar) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

fn check_finite(function: &'static str, at: ComplexScalar, v: ComplexScalar) -> Result<ComplexScalar> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain { function, at, reason: "result overflows double precision" })
    }
}

/// `log Γ(z+n) - Σ_{k<n} log(z+k)` with `n` chosen so the Stirling series
/// is accurate at `z+n`. Each `log(z+k)` is principal, so off the negative
/// real axis this is the principal branch of log Γ. On the negative axis the
/// imaginary part is only meaningful modulo 2π, which is enough for Γ itself.
fn ln_gamma_shifted(function: &'static str, z: ComplexScalar) -> Result<ComplexScalar> {
    if z.re < MIN_SUPPORTED_RE {
        return Err(Error::Domain { function, at: z, reason: "real part below supported range" });
    }
    let shift = if z.re < STIRLING_MIN_RE { (STIRLING_MIN_RE - z.re).ceil() as u64 } else { 0 };
    let mut correction = ComplexScalar::new(0.0, 0.0);
    for k in 0..shift {
        correction += (z + k as f64).ln();
    }
    Ok(stirling(z + shift as f64) - correction)
}

fn stirling(z: ComplexScalar) -> ComplexScalar {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut series = ComplexScalar::new(0.0, 0.0);
    let mut pow = inv;
    for (j, b) in BERNOULLI_EVEN.iter().take(8).enumerate() {
        let m = 2.0 * (j as f64 + 1.0);
        series += pow * (b / (m * (m - 1.0)));
        pow *= inv2;
    }
    (z - 0.5) * z.ln() - z + HALF_LN_2PI + series
}

/// Principal branch of log Γ(z), continuous on ℂ minus `(-∞, 0]`.
pub fn log_gamma(z: ComplexScalar) -> Result<ComplexScalar> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole { function: "log_gamma", at: z });
    }
    if z.im == 0.0 && z.re < 0.0 {
        return Err(Error::Domain { function: "log_gamma", at: z, reason: "negative real axis is the branch cut" });
    }
    check_finite("log_gamma", z, ln_gamma_shifted("log_gamma", z)?)
}

/// Γ(z) for every non-pole `z`, including negative non-integer reals.
pub fn gamma(z: ComplexScalar) -> Result<ComplexScalar> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole { function: "gamma", at: z });
    }
    check_finite("gamma", z, ln_gamma_shifted("gamma", z)?.exp())
}

/// Γ_R(s) = Γ(s/2) π^{-s/2}.
pub fn gamma_r(s: ComplexScalar) -> Result<ComplexScalar> {
    let half = s * 0.5;
    if is_nonpositive_integer(half) {
        return Err(Error::Pole { function: "gamma_R", at: s });
    }
    check_finite("gamma_R", s, (ln_gamma_shifted("gamma_R", half)? - half * PI.ln()).exp())
}

/// Γ_C(s) = 2 (2π)^{-s} Γ(s).
pub fn gamma_c(s: ComplexScalar) -> Result<ComplexScalar> {
    if is_nonpositive_integer(s) {
        return Err(Error::Pole { function: "gamma_C", at: s });
    }
    let ln = ln_gamma_shifted("gamma_C", s)? + std::f64::consts::LN_2 - s * (2.0 * PI).ln();
    check_finite("gamma_C", s, ln.exp())
}

/// 1/Γ_R(s), entire: exactly zero at s = 0, -2, -4, ...
pub fn recip_gamma_r(s: ComplexScalar) -> Result<ComplexScalar> {
    let half = s * 0.5;
    if is_nonpositive_integer(half) {
        return Ok(ComplexScalar::new(0.0, 0.0));
    }
    check_finite("recip_gamma_R", s, (half * PI.ln() - ln_gamma_shifted("recip_gamma_R", half)?).exp())
}

/// 1/Γ_C(s), entire: exactly zero at s = 0, -1, -2, ...
pub fn recip_gamma_c(s: ComplexScalar) -> Result<ComplexScalar> {
    if is_nonpositive_integer(s) {
        return Ok(ComplexScalar::new(0.0, 0.0));
    }
    let ln = s * (2.0 * PI).ln() - std::f64::consts::LN_2 - ln_gamma_shifted("recip_gamma_C", s)?;
    check_finite("recip_gamma_C", s, ln.exp())
}

/// Hurwitz zeta ζ(w, x) = Σ_{k≥0} (k+x)^{-w}, analytically continued in `w`.
///
/// Sums the first `em_shift` terms directly and replaces the tail by its
/// Euler–Maclaurin expansion through `B_{em_order}`. All powers use the
/// principal logarithm, which is unambiguous because `Re(k+x) > 0`.
///
/// For `Re(w)` well below zero the head sum and the integral term are of
/// size `N^{1-Re(w)}` and cancel, so relative accuracy degrades there.
pub fn hurwitz_zeta(w: ComplexScalar, x: ComplexScalar, cfg: &PrecisionConfig) -> Result<ComplexScalar> {
    if !(x.re > 0.0) {
        return Err(Error::Domain { function: "hurwitz_zeta", at: x, reason: "requires Re(x) > 0" });
    }
    if w == ComplexScalar::new(1.0, 0.0) {
        return Err(Error::Pole { function: "hurwitz_zeta", at: w });
    }

    let n = cfg.em_shift;
    let mut sum = ComplexScalar::new(0.0, 0.0);
    for k in 0..n {
        sum += (-w * (x + k as f64).ln()).exp();
    }

    let a = x + n as f64;
    let ln_a = a.ln();
    let a_pow = (-w * ln_a).exp(); // a^{-w}
    sum += a_pow * a / (w - 1.0);
    sum += a_pow * 0.5;

    // B_{2j}/(2j)! * w(w+1)...(w+2j-2) * a^{-w-2j+1}
    let inv_a = a.inv();
    let inv_a2 = inv_a * inv_a;
    let mut rising = w; // w(w+1)...(w+2j-2)
    let mut factorial = 2.0; // (2j)!
    let mut pow = a_pow * inv_a;
    for j in 1..=(cfg.em_order / 2) as usize {
        sum += rising * pow * (BERNOULLI_EVEN[j - 1] / factorial);
        let m = 2.0 * j as f64;
        rising *= (w + (m - 1.0)) * (w + m);
        factorial *= (m + 1.0) * (m + 2.0);
        pow *= inv_a2;
    }
    check_finite("hurwitz_zeta", w, sum)
}

/// ∂_w ζ(w, x) at w = 0 via the Lerch closed form log Γ(x) - ½ log 2π.
pub fn hurwitz_zeta_dw_at0(x: ComplexScalar) -> Result<ComplexScalar> {
    if !(x.re > 0.0) {
        return Err(Error::Domain { function: "hurwitz_zeta_dw_at0", at: x, reason: "requires Re(x) > 0" });
    }
    Ok(log_gamma(x)? - HALF_LN_2PI)
}

/// Central finite difference of [`hurwitz_zeta`] in `w` at 0, step `fd_step`.
pub fn hurwitz_zeta_dw_at0_fd(x: ComplexScalar, cfg: &PrecisionConfig) -> Result<ComplexScalar> {
    let h = ComplexScalar::new(cfg.fd_step, 0.0);
    let plus = hurwitz_zeta(h, x, cfg)?;
    let minus = hurwitz_zeta(-h, x, cfg)?;
    Ok((plus - minus) / (2.0 * cfg.fd_step))
}

/// Regularized product Π_{n≥0} (n + x) = exp(-ζ'(0, x)), i.e. √(2π)/Γ(x).
pub fn lerch_regprod(x: ComplexScalar) -> Result<ComplexScalar> {
    Ok((-hurwitz_zeta_dw_at0(x)?).exp())
}
