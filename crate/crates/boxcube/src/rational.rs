//! Exact rational scalars for interval endpoints and cube anchors.
//!
//! Endpoints are kept as `num_rational::Rational64` values, which are always
//! stored in lowest terms with a positive denominator. Floating point is
//! never used anywhere in this crate: whether two closed intervals touch is
//! an exact question, and a single rounding error would silently change an
//! intersection graph.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Exact rational number in lowest terms with a positive denominator.
pub type Rational = num_rational::Rational64;

/// Builds `num / den` in lowest terms. Fails on a zero denominator.
pub fn rational(num: i64, den: i64) -> Result<Rational> {
    if den == 0 {
        return Err(Error::invalid(format!("rational {num}/0 has a zero denominator")));
    }
    Ok(Rational::new(num, den))
}

/// The integer `value` as a rational.
pub fn integer(value: i64) -> Rational {
    Rational::from_integer(value)
}

/// Total order on rationals via 128-bit cross multiplication.
///
/// Both operands keep a positive denominator, so comparing `a.n * b.d` with
/// `b.n * a.d` in `i128` is exact for every representable value and avoids
/// the slower generic comparison path in the hot pairwise loops.
#[inline]
pub fn cmp_exact(a: &Rational, b: &Rational) -> Ordering {
    let lhs = (*a.numer() as i128) * (*b.denom() as i128);
    let rhs = (*b.numer() as i128) * (*a.denom() as i128);
    lhs.cmp(&rhs)
}

/// `a <= b` under [`cmp_exact`].
#[inline]
pub fn le_exact(a: &Rational, b: &Rational) -> bool {
    cmp_exact(a, b) != Ordering::Greater
}
