use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::trigonal::BiPoly;
use crate::Rational;

use super::curve::SignDistribution;
use super::lifting::ConvexLifting;
use super::triangulation::LatticeTriangulation;

#[derive(Clone, Debug)]
pub struct TPolynomialRequest<'a> {
    pub triangulation: &'a LatticeTriangulation,
    pub signs: &'a SignDistribution,
    pub lifting: &'a ConvexLifting,
    /// Must be positive.
    pub t: Rational,
}

fn rational_pow(t: &Rational, e: &BigInt) -> Rational {
    let n = e.abs().to_u32().expect("T-polynomial exponent out of range");
    let (num, den) = (t.numer().pow(n), t.denom().pow(n));
    if e.is_negative() {
        Rational::new(den, num)
    } else {
        Rational::new(num, den)
    }
}

/// `sum s(i,j) t^(L nu(i,j)) u^i x^j` over the vertices, where `L` clears the
/// denominators of `nu`.
pub fn emit_t_polynomial(req: &TPolynomialRequest) -> BiPoly<Rational> {
    assert!(req.t.is_positive(), "t must be positive");
    let exps = req.lifting.integer_values();
    BiPoly::from_terms(req.triangulation.vertices.iter().map(|v| {
        let s = Rational::from_integer(BigInt::from(req.signs[v]));
        (v.0 as usize, v.1 as usize, s * rational_pow(&req.t, &exps[v]))
    }))
}
