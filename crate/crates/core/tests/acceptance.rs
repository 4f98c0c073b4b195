//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any criterion fails.

mod common;

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use common::{
    borel_table, c, count_real_roots, duplication_s_set, hurwitz_direct, hurwitz_x_set, phi_a_bruteforce,
    random_polynomial, rel_err, rng, route_grid, FIELDS,
};
use regdet::regdet::{det_closed, det_spectral, phi_a, regprod1, regprod2, Method};
use regdet::special_fn::{
    gamma_c, gamma_r, hurwitz_zeta, hurwitz_zeta_dw_at0, hurwitz_zeta_dw_at0_fd, lerch_regprod, log_gamma,
};
use regdet::{
    borel_rank, parse_polynomial, signature, sturm_real_root_count, ComplexScalar, Error, IntPolynomial,
    PrecisionConfig, Signature,
};

const SIGNATURES: [(u32, u32); 6] = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 1)];

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Outcome {
    Outcome { passed, detail }
}

fn within(elapsed: Duration, limit: Duration) -> bool {
    elapsed < limit
}

/// 1. Lerch formula and its finite-difference derivative on 50 points.
fn lerch_formula() -> Outcome {
    let start = Instant::now();
    let cfg = PrecisionConfig::default();
    let sqrt_2pi = (2.0 * PI).sqrt();
    let mut worst_rel = 0.0_f64;
    let mut worst_fd = 0.0_f64;
    for x in hurwitz_x_set() {
        let g = log_gamma(x).unwrap().exp();
        worst_rel = worst_rel.max((lerch_regprod(x).unwrap() * g - sqrt_2pi).norm() / sqrt_2pi);
        let fd = hurwitz_zeta_dw_at0_fd(x, &cfg).unwrap();
        worst_fd = worst_fd.max((hurwitz_zeta_dw_at0(x).unwrap() - fd).norm());
    }
    let elapsed = start.elapsed();
    outcome(
        worst_rel < 1e-9 && worst_fd < 1e-6 && within(elapsed, Duration::from_secs(1)),
        format!("max rel {worst_rel:.2e} (< 1e-9), max fd abs {worst_fd:.2e} (< 1e-6), {elapsed:.2?} (< 1 s)"),
    )
}

/// 2. Regularized product of the positive integers.
fn example_one() -> Outcome {
    let sqrt_2pi = (2.0 * PI).sqrt();
    let err = rel_err(lerch_regprod(c(1.0)).unwrap(), c(sqrt_2pi));
    outcome(err < 1e-10, format!("rel {err:.2e} (< 1e-10)"))
}

/// 3. ζ(0, x) = 1/2 - x.
fn hurwitz_special_value() -> Outcome {
    let cfg = PrecisionConfig::default();
    let worst = hurwitz_x_set()
        .into_iter()
        .map(|x| (hurwitz_zeta(c(0.0), x, &cfg).unwrap() - (0.5 - x)).norm())
        .fold(0.0_f64, f64::max);
    outcome(worst < 1e-9, format!("max abs {worst:.2e} (< 1e-9)"))
}

/// 4. Both regularized products, spectral vs closed form, on the grid.
fn regprod_routes() -> Outcome {
    let start = Instant::now();
    let cfg = PrecisionConfig::default();
    let mut worst = 0.0_f64;
    for s in route_grid() {
        let a = regprod1(s, Method::Spectral, &cfg).unwrap();
        let b = regprod1(s, Method::ClosedForm, &cfg).unwrap();
        worst = worst.max(rel_err(a, b));
        let a = regprod2(s, Method::Spectral, &cfg).unwrap();
        let b = regprod2(s, Method::ClosedForm, &cfg).unwrap();
        worst = worst.max(rel_err(a, b));
    }
    let elapsed = start.elapsed();
    outcome(
        worst < 1e-8 && within(elapsed, Duration::from_secs(2)),
        format!("max rel {worst:.2e} (< 1e-8), {elapsed:.2?} (< 2 s)"),
    )
}

/// 5. det_spectral = det_closed for six fields whose signatures come from
///    the Sturm count, checked against the companion-matrix oracle.
fn determinant_routes() -> Outcome {
    let start = Instant::now();
    let cfg = PrecisionConfig::default();
    let mut worst = 0.0_f64;
    let mut sig_ok = true;
    let mut seen = Vec::new();
    for (text, (r1, r2)) in FIELDS {
        let p = parse_polynomial(text).unwrap();
        let sig = signature(&p).unwrap();
        let coeffs: Vec<i64> = p.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect();
        sig_ok &= (sig.r1, sig.r2) == (r1, r2) && sig.r1 as usize == count_real_roots(&coeffs);
        seen.push((sig.r1, sig.r2));
        for s in route_grid() {
            let a = det_spectral(s, sig, &cfg).unwrap().value;
            let b = det_closed(s, sig).unwrap().value;
            worst = worst.max(rel_err(a, b));
        }
    }
    sig_ok &= SIGNATURES.iter().all(|s| seen.contains(s));
    let elapsed = start.elapsed();
    outcome(
        sig_ok && worst < 1e-8 && within(elapsed, Duration::from_secs(10)),
        format!("signatures ok: {sig_ok}, max rel {worst:.2e} (< 1e-8), {elapsed:.2?} (< 10 s)"),
    )
}

/// 6. For K = Q, det_closed(s) against 2√π (s - 1/2) s^{-1} Γ_R(s)^{-1}.
fn rational_field_shape() -> Outcome {
    let sig = Signature::new(1, 0);
    let mut worst = 0.0_f64;
    let mut points = 0;
    for re in [0.3, 1.0, 1.7, 2.0, 3.5] {
        for im in [0.0, 0.5, -0.5, 2.0] {
            let s = ComplexScalar::new(re, im);
            let d = det_closed(s, sig).unwrap().value;
            let expected = 2.0 * PI.sqrt() * (s - 0.5) / s / gamma_r(s).unwrap();
            worst = worst.max(rel_err(d, expected));
            points += 1;
        }
    }
    outcome(worst < 1e-10, format!("{points} points, max rel {worst:.2e} (< 1e-10)"))
}

/// 7. Γ_C(s) = Γ_R(s) Γ_R(s+1) at 200 random points.
fn duplication() -> Outcome {
    let points = duplication_s_set();
    let worst = points
        .iter()
        .map(|&s| {
            let lhs = gamma_c(s).unwrap();
            let rhs = gamma_r(s).unwrap() * gamma_r(s + 1.0).unwrap();
            (lhs - rhs).norm() / lhs.norm()
        })
        .fold(0.0_f64, f64::max);
    outcome(worst < 1e-10, format!("{} points, max rel {worst:.2e} (< 1e-10)", points.len()))
}

/// 8. Borel's rank table for n ≤ 100.
fn borel_table_exact() -> Outcome {
    let mut mismatches = 0;
    for (r1, r2) in SIGNATURES {
        let sig = Signature::new(r1, r2);
        let table = borel_table(sig, 100);
        mismatches += (0..=100u64).filter(|&n| borel_rank(n, sig) != table[n as usize]).count();
    }
    let k1_z = borel_rank(1, Signature::new(1, 0));
    outcome(mismatches == 0 && k1_z == 0, format!("{mismatches} mismatches over 6 x 101 entries, rank K_1(Z) = {k1_z}"))
}

/// 9. Sturm count vs companion-matrix eigenvalues on 100 random squarefree
///    polynomials.
fn sturm_oracle() -> Outcome {
    let mut r = rng(0x5eed_0009);
    let mut checked = 0;
    let mut mismatches = 0;
    while checked < 100 {
        let coeffs = random_polynomial(&mut r);
        let p = IntPolynomial::from_i64s(&coeffs).unwrap();
        match sturm_real_root_count(&p) {
            Ok(n) => {
                checked += 1;
                if n != count_real_roots(&coeffs) {
                    mismatches += 1;
                }
            }
            Err(Error::NotSquarefree { .. }) => {}
            Err(_) => mismatches += 1,
        }
    }
    outcome(mismatches == 0, format!("{mismatches} mismatches in {checked} polynomials"))
}

/// 10. Hurwitz values vs direct series; φ_A vs brute-force spectrum sums.
fn series_oracles() -> Outcome {
    let cfg = PrecisionConfig::default();
    let ws = [c(2.0), c(3.5), ComplexScalar::new(2.0, 3.0), ComplexScalar::new(4.0, -7.0), c(10.0)];
    let mut worst_hz = 0.0_f64;
    let mut worst_bound = 0.0_f64;
    for x in hurwitz_x_set().into_iter().step_by(5) {
        for &w in &ws {
            let (direct, bound) = hurwitz_direct(w, x, 100_000);
            worst_bound = worst_bound.max(bound);
            worst_hz = worst_hz.max(rel_err(hurwitz_zeta(w, x, &cfg).unwrap(), direct));
        }
    }
    let mut worst_phi = 0.0_f64;
    let phi_ws = [c(2.0), c(10.0), ComplexScalar::new(3.0, 1.0)];
    let phi_ss = [c(1.0), ComplexScalar::new(1.7, 0.5), ComplexScalar::new(3.5, -2.0)];
    for (r1, r2) in SIGNATURES {
        let sig = Signature::new(r1, r2);
        for &w in &phi_ws {
            for &s in &phi_ss {
                let a = phi_a(w, s, sig, &cfg).unwrap();
                worst_phi = worst_phi.max(rel_err(a, phi_a_bruteforce(w, s, sig, 10_000)));
            }
        }
    }
    outcome(
        worst_hz < 1e-9 && worst_bound < 1e-12 && worst_phi < 1e-8,
        format!(
            "hurwitz max rel {worst_hz:.2e} (< 1e-9, tail bound {worst_bound:.1e}), phi_A max rel {worst_phi:.2e} (< 1e-8)"
        ),
    )
}

fn main() {
    let suite_start = Instant::now();
    let criteria: [Criterion; 10] = [
        ("Lerch regularized product", lerch_formula),
        ("regularized product of n >= 1 is sqrt(2 pi)", example_one),
        ("Hurwitz zeta at w = 0", hurwitz_special_value),
        ("regularized products: spectral vs closed form", regprod_routes),
        ("determinant: spectral vs gamma-factor closed form", determinant_routes),
        ("rational field closed form vs 2 sqrt(pi)(s-1/2)/(s Gamma_R(s))", rational_field_shape),
        ("duplication Gamma_C = Gamma_R(s) Gamma_R(s+1)", duplication),
        ("Borel rank table", borel_table_exact),
        ("Sturm count vs companion-matrix roots", sturm_oracle),
        ("series oracles for Hurwitz zeta and phi_A", series_oracles),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] {:>2}. {name}: {}", i + 1, o.detail);
        if !o.passed {
            failed.push(i + 1);
        }
    }
    let total = suite_start.elapsed();
    let fast = total < Duration::from_secs(60);
    println!("[{}] suite wall-clock {total:.2?} (< 60 s)", if fast { "PASS" } else { "FAIL" });
    if failed.is_empty() && fast {
        println!("acceptance: all criteria passed");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
