//! Exact real-root counting with a fraction-free Sturm sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};

type Coeffs = Vec<BigInt>;

fn trim(mut p: Coeffs) -> Coeffs {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn derivative(p: &[BigInt]) -> Coeffs {
    p.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect()
}

/// Divides out the (positive) content so coefficient growth stays bounded.
fn primitive_part(p: Coeffs) -> Coeffs {
    let content = p.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if content.is_zero() || content == BigInt::from(1) {
        return p;
    }
    p.into_iter().map(|c| c / &content).collect()
}

/// A positive multiple of the remainder of `a` by `b`.
///
/// Each reduction step scales by `|lc(b)|` instead of `lc(b)`, so the sign
/// of the true remainder is preserved.
fn signed_pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> Coeffs {
    let lc_b = b.last().expect("nonzero divisor");
    let lc_b_abs = lc_b.abs();
    let negative = lc_b.is_negative();
    let mut r: Coeffs = a.to_vec();
    while r.len() >= b.len() {
        let lc_r = r.last().expect("nonempty").clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c *= &lc_b_abs;
        }
        for (i, bc) in b.iter().enumerate() {
            let t = &lc_r * bc;
            if negative {
                r[i + shift] += t;
            } else {
                r[i + shift] -= t;
            }
        }
        debug_assert!(r.last().is_some_and(Zero::is_zero));
        r = trim(r);
    }
    r
}

/// Sturm chain `p, p', -rem(p, p'), ...` up to positive scalar factors.
/// The last entry is a gcd of `p` and `p'`.
fn sturm_chain(p: &[BigInt]) -> Vec<Coeffs> {
    let mut chain = vec![p.to_vec(), primitive_part(trim(derivative(p)))];
    loop {
        let n = chain.len();
        let r = signed_pseudo_remainder(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        let next: Coeffs = primitive_part(r).into_iter().map(|c| -c).collect();
        chain.push(next);
    }
    chain
}

fn sign_changes(signs: impl Iterator<Item = bool>) -> usize {
    let mut prev: Option<bool> = None;
    let mut count = 0;
    for s in signs {
        if prev.is_some_and(|p| p != s) {
            count += 1;
        }
        prev = Some(s);
    }
    count
}

/// Number of distinct real roots of a squarefree polynomial.
pub fn sturm_real_root_count(p: &IntPolynomial) -> Result<usize> {
    let chain = sturm_chain(p.coeffs());
    let gcd_degree = chain.last().map_or(0, |g| g.len() - 1);
    if gcd_degree > 0 {
        return Err(Error::NotSquarefree { gcd_degree });
    }
    // Signs at ±∞ come from leading terms; `true` means positive.
    let at_pos_inf = chain.iter().map(|q| q.last().expect("nonzero").is_positive());
    let at_neg_inf = chain.iter().map(|q| {
        let positive = q.last().expect("nonzero").is_positive();
        if (q.len() - 1) % 2 == 0 {
            positive
        } else {
            !positive
        }
    });
    Ok(sign_changes(at_neg_inf) - sign_changes(at_pos_inf))
}
