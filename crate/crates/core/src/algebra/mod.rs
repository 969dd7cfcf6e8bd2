//! Exact arithmetic: Laurent polynomials over ℚ, the field
//! `ℚ[t]/(t² − t + 1)`, rational functions in `t`, and small matrices.
//!
//! Nothing here uses floating point.

mod field;
mod laurent;
mod matrix;
mod poly;
mod ratfn;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use field::FieldElem;
pub use laurent::LaurentPoly;
pub use matrix::{determinant, matrix_inverse_rational, Matrix};
pub use ratfn::{delta, RationalFn, TorsionPairingValue};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("substitution t -> t^0 is not a ring endomorphism")]
    ZeroPower,
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("matrix is singular over Q(t)")]
    Singular,
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("cannot parse `{0}`")]
    Parse(String),
}

/// `n` or `n/d` in lowest terms.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `n` or `n/d` (optionally signed); rejects zero denominators.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (
            n.trim().parse::<BigInt>().ok()?,
            d.trim().parse::<BigInt>().ok()?,
        ),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
