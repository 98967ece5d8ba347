//! Rational parsing and the whitespace-separated coefficient-line format.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Rational, UniPoly};

use super::PolyError;

/// Parses `"n"` or `"n/d"` (base 10). Both ASCII `-` and U+2212 are accepted
/// as the minus sign.
pub fn parse_rational(token: &str) -> Result<Rational, PolyError> {
    let cleaned = token.trim().replace('\u{2212}', "-");
    let bad = || PolyError::Parse(format!("invalid rational {token:?}"));
    let (num, den) = match cleaned.split_once('/') {
        Some((n, d)) => (n.parse::<BigInt>().map_err(|_| bad())?, d.parse::<BigInt>().map_err(|_| bad())?),
        None => (cleaned.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(PolyError::Parse(format!("zero denominator in {token:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Lowest-terms rendering: `"n"` when integral, `"n/d"` otherwise, ASCII minus.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Reads a coefficient line such as `"0 -1/2 1"` (meaning `u^2 - u/2`).
/// An empty line is the zero polynomial.
pub fn parse_coeff_line(line: &str) -> Result<UniPoly, PolyError> {
    line.split_whitespace().map(parse_rational).collect::<Result<Vec<_>, _>>().map(UniPoly::new)
}

/// Inverse of [`parse_coeff_line`]. The zero polynomial renders as `"0"`.
pub fn format_coeff_line(p: &UniPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    p.coeffs().iter().map(format_rational).collect::<Vec<_>>().join(" ")
}

/// `1 / 2^m`
pub fn dyadic(m: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << m)
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Integral upper bound `2^e` with `2^e > |x|`.
pub fn power_of_two_above(x: &Rational) -> Rational {
    let mut b = Rational::one();
    while b <= x.abs() {
        b *= int(2);
    }
    b
}
