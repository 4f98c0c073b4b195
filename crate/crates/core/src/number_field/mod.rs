//! Number fields given by an integer defining polynomial, and their
//! signature `(r1, r2)`.

mod parser;
mod sturm;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use parser::{parse_polynomial, MAX_EXPONENT};
pub use sturm::sturm_real_root_count;

/// Integer polynomial with coefficients in ascending degree order.
///
/// Always has degree at least 1 and a nonzero leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial, dropping trailing zero coefficients.
    pub fn new(mut coeffs: Vec<BigInt>) -> Result<Self> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(Error::Degree);
        }
        Ok(IntPolynomial { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading_coeff(&self) -> &BigInt {
        self.coeffs.last().expect("degree >= 1")
    }

    /// Multiplies every coefficient by a nonzero constant.
    pub fn scale(&self, k: &BigInt) -> Result<Self> {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Renders the bracketed ascending coefficient list, e.g. `[-2,0,0,1]`.
    pub fn to_list_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        format!("[{}]", parts.join(","))
    }
}

/// Expression form with descending powers, e.g. `x^3-2` or `2x^2+3x-1`.
/// The output parses back to the same polynomial.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            if power == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match power {
                0 => {}
                1 => f.write_str("x")?,
                p => write!(f, "x^{p}")?,
            }
        }
        Ok(())
    }
}

/// Numbers of real embeddings and of conjugate pairs of complex embeddings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub r1: u32,
    pub r2: u32,
    pub degree: u32,
}

impl Signature {
    pub fn new(r1: u32, r2: u32) -> Self {
        Signature { r1, r2, degree: r1 + 2 * r2 }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.r1, self.r2)
    }
}

/// Signature of `Q[x]/(p)`. Irreducibility is not checked; for a reducible
/// squarefree `p` this is the signature of the corresponding étale algebra.
pub fn signature(p: &IntPolynomial) -> Result<Signature> {
    let degree = p.degree();
    let r1 = sturm_real_root_count(p)?;
    debug_assert!(r1 <= degree && (degree - r1).is_multiple_of(2));
    let r2 = (degree - r1) / 2;
    Ok(Signature { r1: r1 as u32, r2: r2 as u32, degree: degree as u32 })
}
