//! Independent oracles shared by the integration suites. Nothing here calls
//! the Euler–Maclaurin engine or the Sturm code.
#![allow(dead_code)]

use nalgebra::{DMatrix, Schur};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regdet::{ComplexScalar, Signature};

pub fn c(re: f64) -> ComplexScalar {
    ComplexScalar::new(re, 0.0)
}

pub fn rel_err(a: ComplexScalar, b: ComplexScalar) -> f64 {
    (a - b).norm() / b.norm()
}

pub const ZETA3: f64 = 1.202_056_903_159_594_3;

/// `Σ_{k=0}^{K-1} (k+x)^{-w}` summed smallest-first, plus the integral and
/// trapezoid tail terms at `K`. Returns the value and a bound on the
/// neglected remainder, `|w(w+1)| / 12 · (K + Re x)^{-Re w - 1} / (Re w + 1)`
/// plus the first omitted correction `|w| / 12 · (K + Re x)^{-Re w - 1}`.
pub fn hurwitz_direct(w: ComplexScalar, x: ComplexScalar, terms: u64) -> (ComplexScalar, f64) {
    assert!(w.re >= 2.0);
    let mut sum = c(0.0);
    for k in (0..terms).rev() {
        sum += (x + k as f64).powc(-w);
    }
    let a = x + terms as f64;
    let tail = a.powc(1.0 - w) / (w - 1.0) + 0.5 * a.powc(-w);
    let sigma = w.re;
    let base = terms as f64 + x.re;
    let bound = (w.norm() / 12.0 + (w * (w + 1.0)).norm() / (12.0 * (sigma + 1.0))) * base.powf(-sigma - 1.0);
    (sum + tail, bound)
}

/// Tail `Σ_{k≥K} (step·k + offset)^{-w}` by integral, trapezoid and first
/// Bernoulli correction.
fn arithmetic_tail(w: ComplexScalar, step: f64, offset: ComplexScalar, start: u64) -> ComplexScalar {
    let a = offset + step * start as f64;
    a.powc(1.0 - w) / ((w - 1.0) * step) + 0.5 * a.powc(-w) + (step / 12.0) * w * a.powc(-w - 1.0)
}

/// φ_A(w, s) straight from the spectrum: `Σ_{n ≤ n_max} rank_n (s + (n-1)/2)^{-w}`
/// with ranks read from an explicit table, plus the arithmetic tails of the
/// two nonzero residue classes beyond `n_max`.
pub fn phi_a_bruteforce(w: ComplexScalar, s: ComplexScalar, sig: Signature, n_max: u64) -> ComplexScalar {
    let ranks = borel_table(sig, n_max);
    let mut sum = c(0.0);
    for n in (0..=n_max).rev() {
        let m = ranks[n as usize];
        if m != 0 {
            sum += m as f64 * (s + (n as f64 - 1.0) / 2.0).powc(-w);
        }
    }
    // n = 4k+1 → 2k + s ; n = 4k+3 → 2k + 1 + s
    let k1 = (n_max - 1) / 4 + 1; // first k with 4k+1 > n_max
    let k3 = if n_max >= 3 { (n_max - 3) / 4 + 1 } else { 0 };
    let r12 = f64::from(sig.r1 + sig.r2);
    sum += r12 * arithmetic_tail(w, 2.0, s, k1);
    sum += f64::from(sig.r2) * arithmetic_tail(w, 2.0, s + 1.0, k3);
    sum
}

/// Borel's ranks for n = 0..=n_max built by filling residue classes.
pub fn borel_table(sig: Signature, n_max: u64) -> Vec<u64> {
    let mut t = vec![0u64; n_max as usize + 1];
    t[0] = 1;
    if n_max >= 1 {
        t[1] = u64::from(sig.r1 + sig.r2).saturating_sub(1);
    }
    for n in (5..=n_max).step_by(4) {
        t[n as usize] = u64::from(sig.r1 + sig.r2);
    }
    for n in (3..=n_max).step_by(4) {
        t[n as usize] = u64::from(sig.r2);
    }
    t
}

/// Roots of `Σ coeffs[i] x^i` as eigenvalues of the companion matrix.
pub fn companion_roots(coeffs: &[i64]) -> Vec<ComplexScalar> {
    let d = coeffs.len() - 1;
    let lead = coeffs[d] as f64;
    let mut m = DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..d {
        m[(i, d - 1)] = -(coeffs[i] as f64) / lead;
    }
    // Unshifted QR can stall on permutation-like companions (x^4 + 1), so
    // bound the iteration and retry on C + αI when it does.
    for alpha in [0.0, 0.37, -0.61, 1.13, -1.9] {
        let shifted = &m + DMatrix::<f64>::identity(d, d) * alpha;
        if let Some(schur) = Schur::try_new(shifted, f64::EPSILON, 10_000) {
            return schur.complex_eigenvalues().iter().map(|z| z - alpha).collect();
        }
    }
    panic!("companion eigenvalues did not converge for {coeffs:?}");
}

pub fn count_real_roots(coeffs: &[i64]) -> usize {
    companion_roots(coeffs).iter().filter(|z| z.im.abs() < 1e-8).count()
}

pub fn min_root_separation(coeffs: &[i64]) -> f64 {
    let roots = companion_roots(coeffs);
    let mut best = f64::INFINITY;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            best = best.min((roots[i] - roots[j]).norm());
        }
    }
    best
}

/// Random integer polynomial of degree 1..=6 with coefficients in [-9, 9].
pub fn random_polynomial(rng: &mut ChaCha8Rng) -> Vec<i64> {
    let degree = rng.gen_range(1..=6);
    let mut coeffs: Vec<i64> = (0..degree).map(|_| rng.gen_range(-9..=9)).collect();
    let mut lead = 0;
    while lead == 0 {
        lead = rng.gen_range(-9..=9);
    }
    coeffs.push(lead);
    coeffs
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// 50 points with Re(x) in (0.1, 10] and |Im x| ≤ 5.
pub fn hurwitz_x_set() -> Vec<ComplexScalar> {
    let mut r = rng(0x5eed_0001);
    (0..50)
        .map(|_| {
            let re = 10.0 - r.gen_range(0.0..9.9);
            ComplexScalar::new(re, r.gen_range(-5.0..=5.0))
        })
        .collect()
}

/// 200 points with |s| ≤ 10 at distance > 0.1 from every non-positive integer.
pub fn duplication_s_set() -> Vec<ComplexScalar> {
    let mut r = rng(0x5eed_0002);
    let mut out = Vec::with_capacity(200);
    while out.len() < 200 {
        let s = ComplexScalar::new(r.gen_range(-10.0..=10.0), r.gen_range(-10.0..=10.0));
        if s.norm() > 10.0 {
            continue;
        }
        let near_pole = (0..=11).any(|k| (s + k as f64).norm() <= 0.1);
        if !near_pole {
            out.push(s);
        }
    }
    out
}

/// `{0.3, 1, 1.7, 2, 3.5} × {0, ±0.5i, ±2i}`.
pub fn route_grid() -> Vec<ComplexScalar> {
    let mut g = Vec::new();
    for re in [0.3, 1.0, 1.7, 2.0, 3.5] {
        for im in [0.0, 0.5, -0.5, 2.0, -2.0] {
            g.push(ComplexScalar::new(re, im));
        }
    }
    g
}

/// Test fields: polynomial text and the signature it must produce.
pub const FIELDS: [(&str, (u32, u32)); 6] =
    [("x", (1, 0)), ("x^2+1", (0, 1)), ("x^2-2", (2, 0)), ("x^3-2", (1, 1)), ("x^4+1", (0, 2)), ("x^5-5x+1", (3, 1))];
