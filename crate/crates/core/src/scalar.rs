//! Scalar abstraction for the polynomial and root-isolation machinery.
//!
//! Everything in [`crate::exactpoly`] and [`crate::trigonal`] is written against
//! [`Scalar`]. Only exact scalars (see [`Scalar::EXACT`]) give trustworthy sign
//! decisions; the crate-root aliases all pick [`crate::Rational`].

use std::cmp::Ordering;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};

/// An ordered field usable as a polynomial coefficient type.
pub trait Scalar: Clone + Debug + PartialOrd + Num + Signed + FromPrimitive + Send + Sync + 'static {
    /// Whether arithmetic is exact. Sturm counts over inexact scalars are heuristics.
    const EXACT: bool;

    /// A positive factor that brings `coeffs` into a normal form (for rationals:
    /// integral and primitive). Multiplying a polynomial by it never changes signs,
    /// so Sturm sequences may apply it freely to curb coefficient growth.
    fn normalizing_factor(_coeffs: &[Self]) -> Option<Self> {
        None
    }

    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn midpoint(a: &Self, b: &Self) -> Self {
        (a.clone() + b.clone()) / Self::two()
    }

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("every scalar type represents small integers")
    }

    /// Sign (as an ordering against zero) of the polynomial with coefficients
    /// `coeffs`, constant term first, at `x`.
    fn poly_sign_at(coeffs: &[Self], x: &Self) -> Ordering {
        let v = coeffs.iter().rev().fold(Self::zero(), |acc, c| acc * x.clone() + c.clone());
        v.partial_cmp(&Self::zero()).unwrap_or(Ordering::Equal)
    }

    /// A positive multiple of the remainder of `a` by `b` (constant term first,
    /// no trailing zeros), or `None` to fall back on plain division.
    fn positive_rem(_a: &[Self], _b: &[Self]) -> Option<Vec<Self>> {
        None
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;
}

impl Scalar for f32 {
    const EXACT: bool = false;
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn normalizing_factor(coeffs: &[Self]) -> Option<Self> {
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for c in coeffs.iter().filter(|c| !c.is_zero()) {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        if num.is_zero() {
            return None;
        }
        let factor = BigRational::new(den, num);
        (!factor.is_one()).then_some(factor)
    }

    /// Integer coefficients and `x = a/b` take the homogeneous route
    /// `sum c_i a^i b^(n-i)`, which has the sign of `p(x)` and needs no gcds.
    fn poly_sign_at(coeffs: &[Self], x: &Self) -> Ordering {
        if !coeffs.iter().all(|c| c.denom().is_one()) {
            let v = coeffs.iter().rev().fold(Self::zero(), |acc, c| acc * x + c);
            return v.cmp(&Self::zero());
        }
        let Some((last, rest)) = coeffs.split_last() else {
            return Ordering::Equal;
        };
        let (a, b) = (x.numer(), x.denom());
        let mut acc = last.numer().clone();
        let mut bp = BigInt::one();
        for c in rest.iter().rev() {
            bp *= b;
            acc = acc * a + c.numer() * &bp;
        }
        acc.cmp(&BigInt::zero())
    }

    /// Integer pseudo-division with the divisor's leading coefficient taken in
    /// absolute value, then reduced to a primitive polynomial.
    fn positive_rem(a: &[Self], b: &[Self]) -> Option<Vec<Self>> {
        if !a.iter().chain(b).all(|c| c.denom().is_one()) {
            return None;
        }
        let b: Vec<&BigInt> = b.iter().map(|c| c.numer()).collect();
        let (&lc, d) = (b.last()?, b.len() - 1);
        let (alc, negative) = (lc.abs(), lc.is_negative());
        let mut rem: Vec<BigInt> = a.iter().map(|c| c.numer().clone()).collect();
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
        while rem.len() > d {
            let c = rem.pop().unwrap();
            let shift = rem.len() - d;
            let c = if negative { -c } else { c };
            for r in rem.iter_mut() {
                *r *= &alc;
            }
            for (j, bj) in b[..d].iter().enumerate() {
                rem[shift + j] -= &c * *bj;
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        let content = rem.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        Some(
            rem.into_iter()
                .map(|c| BigRational::from_integer(if content.is_zero() { c } else { c / &content }))
                .collect(),
        )
    }
}
