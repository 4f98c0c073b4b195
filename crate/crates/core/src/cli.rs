//! Command implementations behind the `regdet` binary, plus the text
//! formats it accepts (complex points, grids, precision overrides).
//!
//! Every command returns a serializable value; the binary decides between
//! JSON (default) and CSV and maps errors to exit codes.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::json::{self, JsonComplex};
use crate::ktheory::{self, MAX_N};
use crate::number_field::{self, IntPolynomial, Signature};
use crate::regdet;
use crate::special_fn::{self, PrecisionConfig};
use crate::ComplexScalar;

/// Environment variable holding a JSON [`PrecisionConfig`].
pub const PRECISION_ENV: &str = "REGDET_PRECISION";

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFY_FAILED: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const DOMAIN: i32 = 3;
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::Degree | Error::Config(_) => exit::PARSE,
        Error::Pole { .. } | Error::Domain { .. } | Error::NotSquarefree { .. } => exit::DOMAIN,
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub code: &'static str,
    pub message: String,
}

#[derive(Debug, Serialize)]
pub struct ErrorReport {
    pub error: ErrorBody,
}

impl From<&Error> for ErrorBody {
    fn from(e: &Error) -> Self {
        ErrorBody { code: e.code(), message: e.to_string() }
    }
}

impl From<&Error> for ErrorReport {
    fn from(e: &Error) -> Self {
        ErrorReport { error: e.into() }
    }
}

/// Output that can also be rendered as CSV.
pub trait ToCsv {
    fn to_csv(&self) -> String;
}

fn num(x: f64) -> String {
    // shortest round-trip representation
    format!("{x:?}")
}

/// Start from the environment's JSON (if any); explicit flags win.
pub fn resolve_precision(
    env_json: Option<&str>,
    em_shift: Option<u32>,
    em_order: Option<u32>,
    fd_step: Option<f64>,
) -> Result<PrecisionConfig> {
    let mut cfg = match env_json {
        Some(text) if !text.trim().is_empty() => PrecisionConfig::from_json(text)?,
        _ => PrecisionConfig::default(),
    };
    if let Some(v) = em_shift {
        cfg.em_shift = v;
    }
    if let Some(v) = em_order {
        cfg.em_order = v;
    }
    if let Some(v) = fd_step {
        cfg.fd_step = v;
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Parses one complex point: `1.5`, `-2i`, `i`, `0.3-0.5i`, `1e-3+2e1i`.
pub fn parse_complex(text: &str) -> Result<ComplexScalar> {
    parse_complex_at(text, 0)
}

fn parse_complex_at(text: &str, offset: usize) -> Result<ComplexScalar> {
    let lead = text.len() - text.trim_start().len();
    let t = text.trim();
    let err = |pos: usize, expected: &str| Error::Parse {
        position: offset + lead + pos,
        expected: expected.to_string(),
        found: match t[pos.min(t.len())..].chars().next() {
            Some(c) => format!("{c:?}"),
            None => "end of input".to_string(),
        },
    };
    let real = |s: &str, pos: usize| -> Result<f64> {
        match s.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => Err(err(pos, "finite real number")),
        }
    };
    if t.is_empty() {
        return Err(err(0, "complex number"));
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(ComplexScalar::new(real(t, 0)?, 0.0));
    };
    // split between real and imaginary parts at the last sign not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re_txt, im_txt, im_pos) = match split {
        Some(k) => (&body[..k], &body[k..], k),
        None => ("", body, 0),
    };
    let im = match im_txt {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => real(s.strip_prefix('+').unwrap_or(s), im_pos)?,
    };
    let re = if re_txt.is_empty() { 0.0 } else { real(re_txt, 0)? };
    Ok(ComplexScalar::new(re, im))
}

/// The standard check grid: `{0.3, 1, 1.7, 2, 3.5} × {0, ±0.5i, ±2i}`.
pub fn default_grid() -> Vec<ComplexScalar> {
    let mut grid = Vec::with_capacity(25);
    for re in [0.3, 1.0, 1.7, 2.0, 3.5] {
        for im in [0.0, 0.5, -0.5, 2.0, -2.0] {
            grid.push(ComplexScalar::new(re, im));
        }
    }
    grid
}

/// `default` or a comma-separated list of complex points.
pub fn parse_grid(text: &str) -> Result<Vec<ComplexScalar>> {
    if text.trim() == "default" {
        return Ok(default_grid());
    }
    let mut points = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        points.push(parse_complex_at(piece, offset)?);
        offset += piece.len() + 1;
    }
    Ok(points)
}

fn load_polynomial(text: &str) -> Result<(IntPolynomial, Signature)> {
    let p = number_field::parse_polynomial(text)?;
    let sig = number_field::signature(&p)?;
    Ok((p, sig))
}

#[derive(Debug, Serialize)]
pub struct SignatureOutput {
    pub r1: u32,
    pub r2: u32,
    pub degree: u32,
}

impl ToCsv for SignatureOutput {
    fn to_csv(&self) -> String {
        format!("r1,r2,degree\n{},{},{}\n", self.r1, self.r2, self.degree)
    }
}

pub fn cmd_signature(poly_text: &str) -> Result<SignatureOutput> {
    let (_, sig) = load_polynomial(poly_text)?;
    Ok(SignatureOutput { r1: sig.r1, r2: sig.r2, degree: sig.degree })
}

#[derive(Debug, Serialize)]
pub struct RankRow {
    pub n: u64,
    pub eigenvalue: f64,
    pub rank: u64,
}

#[derive(Debug, Serialize)]
pub struct RanksOutput {
    pub field_poly: String,
    pub sig: Signature,
    pub rows: Vec<RankRow>,
}

impl ToCsv for RanksOutput {
    fn to_csv(&self) -> String {
        let mut out = String::from("n,eigenvalue,rank\n");
        for r in &self.rows {
            let _ = writeln!(out, "{},{},{}", r.n, num(r.eigenvalue), r.rank);
        }
        out
    }
}

pub fn cmd_ranks(poly_text: &str, n_max: u64) -> Result<RanksOutput> {
    let (p, sig) = load_polynomial(poly_text)?;
    if n_max > MAX_N {
        return Err(Error::Domain {
            function: "ranks",
            at: ComplexScalar::new(n_max as f64, 0.0),
            reason: "n_max exceeds 10^6",
        });
    }
    let rows = ktheory::spectrum(sig, n_max)
        .into_iter()
        .map(|s| RankRow { n: s.n, eigenvalue: s.eigenvalue(), rank: s.multiplicity })
        .collect();
    Ok(RanksOutput { field_poly: p.to_string(), sig, rows })
}

/// Which determinant route(s) `det` evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetMethod {
    Spectral,
    Closed,
    Both,
}

#[derive(Debug, Serialize)]
pub struct DetOutput {
    pub field_poly: String,
    pub sig: Signature,
    #[serde(serialize_with = "json::complex")]
    pub s: ComplexScalar,
    #[serde(serialize_with = "json::complex_opt")]
    pub spectral: Option<ComplexScalar>,
    #[serde(serialize_with = "json::complex_opt")]
    pub closed: Option<ComplexScalar>,
    pub rel_diff: Option<f64>,
    pub precision: PrecisionConfig,
}

impl ToCsv for DetOutput {
    fn to_csv(&self) -> String {
        let mut out = String::from("method,re,im\n");
        for (name, v) in [("spectral", self.spectral), ("closed", self.closed)] {
            if let Some(z) = v {
                let _ = writeln!(out, "{name},{},{}", num(z.re), num(z.im));
            }
        }
        out
    }
}

/// |a - b| / |b|, falling back to |a - b| when `b` is exactly zero.
pub fn relative_error(a: ComplexScalar, b: ComplexScalar) -> f64 {
    let diff = (a - b).norm();
    let scale = b.norm();
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}

pub fn cmd_det(poly_text: &str, s: ComplexScalar, method: DetMethod, cfg: &PrecisionConfig) -> Result<DetOutput> {
    let (p, sig) = load_polynomial(poly_text)?;
    let spectral = match method {
        DetMethod::Spectral | DetMethod::Both => Some(regdet::det_spectral(s, sig, cfg)?.value),
        DetMethod::Closed => None,
    };
    let closed = match method {
        DetMethod::Closed | DetMethod::Both => Some(regdet::det_closed(s, sig)?.value),
        DetMethod::Spectral => None,
    };
    let rel_diff = spectral.zip(closed).map(|(a, b)| relative_error(a, b));
    Ok(DetOutput { field_poly: p.to_string(), sig, s, spectral, closed, rel_diff, precision: *cfg })
}

#[derive(Debug, Serialize)]
pub struct PointResult {
    pub index: usize,
    #[serde(serialize_with = "json::complex")]
    pub s: ComplexScalar,
    #[serde(serialize_with = "json::complex_opt")]
    pub det_spectral: Option<ComplexScalar>,
    #[serde(serialize_with = "json::complex_opt")]
    pub det_closed: Option<ComplexScalar>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub error: Option<ErrorBody>,
}

#[derive(Debug, Serialize)]
pub struct Exclusion {
    pub index: usize,
    #[serde(serialize_with = "json::complex")]
    pub s: ComplexScalar,
    pub reason: &'static str,
}

#[derive(Debug, Serialize)]
pub struct VerificationReport {
    pub field_poly: String,
    pub sig: Signature,
    #[serde(serialize_with = "json::complex_vec")]
    pub grid: Vec<ComplexScalar>,
    pub per_point: Vec<PointResult>,
    pub excluded: Vec<Exclusion>,
    pub max_rel_err: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub precision: PrecisionConfig,
}

impl VerificationReport {
    pub fn errored_points(&self) -> usize {
        self.per_point.iter().filter(|p| p.error.is_some()).count()
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            exit::OK
        } else if !self.per_point.is_empty() && self.errored_points() == self.per_point.len() {
            exit::DOMAIN
        } else {
            exit::VERIFY_FAILED
        }
    }
}

impl ToCsv for VerificationReport {
    fn to_csv(&self) -> String {
        let mut out =
            String::from("index,s_re,s_im,spectral_re,spectral_im,closed_re,closed_im,abs_err,rel_err,error\n");
        let opt = |v: Option<f64>| v.map(num).unwrap_or_default();
        for p in &self.per_point {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                p.index,
                num(p.s.re),
                num(p.s.im),
                opt(p.det_spectral.map(|z| z.re)),
                opt(p.det_spectral.map(|z| z.im)),
                opt(p.det_closed.map(|z| z.re)),
                opt(p.det_closed.map(|z| z.im)),
                opt(p.abs_err),
                opt(p.rel_err),
                p.error.as_ref().map_or("", |e| e.code),
            );
        }
        out
    }
}

fn exclusion_reason(s: ComplexScalar) -> Option<&'static str> {
    if s == ComplexScalar::new(0.0, 0.0) {
        Some("s = 0 is a pole of the determinant")
    } else if s == ComplexScalar::new(0.5, 0.0) {
        Some("s = 1/2 is the trivial zero from the factor (s - 1/2)")
    } else {
        None
    }
}

fn evaluate_point(index: usize, s: ComplexScalar, sig: Signature, cfg: &PrecisionConfig) -> PointResult {
    let outcome =
        regdet::det_spectral(s, sig, cfg).and_then(|a| regdet::det_closed(s, sig).map(|b| (a.value, b.value)));
    match outcome {
        Ok((a, b)) => PointResult {
            index,
            s,
            det_spectral: Some(a),
            det_closed: Some(b),
            abs_err: Some((a - b).norm()),
            rel_err: Some(relative_error(a, b)),
            error: None,
        },
        Err(e) => PointResult {
            index,
            s,
            det_spectral: None,
            det_closed: None,
            abs_err: None,
            rel_err: None,
            error: Some((&e).into()),
        },
    }
}

/// Compares both determinant routes over `grid`. Points are evaluated in
/// parallel; results are ordered by grid index.
pub fn verify(
    poly: &IntPolynomial,
    sig: Signature,
    grid: &[ComplexScalar],
    tolerance: f64,
    cfg: &PrecisionConfig,
) -> VerificationReport {
    let mut excluded = Vec::new();
    let mut kept = Vec::new();
    for (index, &s) in grid.iter().enumerate() {
        match exclusion_reason(s) {
            Some(reason) => excluded.push(Exclusion { index, s, reason }),
            None => kept.push((index, s)),
        }
    }
    let per_point: Vec<PointResult> = kept.par_iter().map(|&(index, s)| evaluate_point(index, s, sig, cfg)).collect();
    let max_rel_err = per_point.iter().filter_map(|p| p.rel_err).fold(0.0_f64, f64::max);
    let passed = !per_point.is_empty() && per_point.iter().all(|p| p.error.is_none()) && max_rel_err < tolerance;
    VerificationReport {
        field_poly: poly.to_string(),
        sig,
        grid: grid.to_vec(),
        per_point,
        excluded,
        max_rel_err,
        tolerance,
        passed,
        precision: *cfg,
    }
}

pub fn cmd_verify(
    poly_text: &str,
    grid_spec: &str,
    tolerance: f64,
    cfg: &PrecisionConfig,
) -> Result<VerificationReport> {
    let (p, sig) = load_polynomial(poly_text)?;
    let grid = parse_grid(grid_spec)?;
    if !(tolerance > 0.0) {
        return Err(Error::Config(format!("tolerance must be positive, got {tolerance}")));
    }
    Ok(verify(&p, sig, &grid, tolerance, cfg))
}

#[derive(Debug, Serialize)]
pub struct LerchOutput {
    #[serde(serialize_with = "json::complex")]
    pub x: ComplexScalar,
    /// √(2π)/Γ(x) via the closed-form derivative.
    #[serde(serialize_with = "json::complex")]
    pub closed: ComplexScalar,
    /// The same product from a central difference of ζ(w, x) at w = 0.
    #[serde(serialize_with = "json::complex")]
    pub finite_difference: ComplexScalar,
    /// |closed · Γ(x) - √(2π)|.
    pub gamma_check: f64,
    pub precision: PrecisionConfig,
}

impl ToCsv for LerchOutput {
    fn to_csv(&self) -> String {
        let mut out = String::from("quantity,re,im\n");
        for (name, z) in [("closed", self.closed), ("finite_difference", self.finite_difference)] {
            let _ = writeln!(out, "{name},{},{}", num(z.re), num(z.im));
        }
        let _ = writeln!(out, "gamma_check,{},0.0", num(self.gamma_check));
        out
    }
}

pub fn cmd_lerch(x: ComplexScalar, cfg: &PrecisionConfig) -> Result<LerchOutput> {
    let closed = special_fn::lerch_regprod(x)?;
    let finite_difference = (-special_fn::hurwitz_zeta_dw_at0_fd(x, cfg)?).exp();
    let gamma = special_fn::log_gamma(x)?.exp();
    let gamma_check = (closed * gamma - (2.0 * std::f64::consts::PI).sqrt()).norm();
    Ok(LerchOutput { x, closed, finite_difference, gamma_check, precision: *cfg })
}

/// Serializes any command output as pretty JSON.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("command outputs serialize")
}

/// Wraps a bare complex for ad-hoc JSON output.
pub fn complex_json(z: ComplexScalar) -> JsonComplex {
    JsonComplex(z)
}
