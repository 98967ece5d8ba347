//! Real trigonal curves on Hirzebruch surfaces and the topology of the real
//! elliptic surfaces they cover: exact polynomial tools, discriminant analysis,
//! combinatorial patchworking and the restriction diagram.

pub mod classify;
pub mod exactpoly;
pub mod patchwork;
pub mod scalar;
pub mod trigonal;

pub use num_bigint::BigInt;

/// Exact rational numbers, always in lowest terms.
pub type Rational = num_rational::BigRational;
/// Univariate polynomial over [`Rational`], constant term first.
pub type UniPoly = exactpoly::Poly<Rational>;
/// Interval `(lo, hi]` holding exactly one root of some polynomial.
pub type IsolatingInterval = exactpoly::Interval<Rational>;
