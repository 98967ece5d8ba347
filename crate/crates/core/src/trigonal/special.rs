use crate::exactpoly::rational::dyadic;
use crate::{Rational, UniPoly};

use super::{check_generic, depress, real_scheme, BiPoly, RealScheme, TrigonalCurve, TrigonalError};

pub const SPECIAL_HALVING_CAP: u32 = 64;

/// `x (x - g2) (x - g3) + eps` with `g2 = u^(2k) + 1` and `g3 = -u^(2k) - 2`.
pub fn special_extremal_raw(k: u32, eps: &Rational) -> BiPoly<Rational> {
    let m = UniPoly::monomial(Rational::from_integer(1.into()), 2 * k as usize);
    let g2 = &m + &UniPoly::from_ints(&[1]);
    let g3 = -(&m + &UniPoly::from_ints(&[2]));
    let a2 = -(&g2 + &g3);
    let a1 = &g2 * &g3;
    BiPoly::from_rows(vec![UniPoly::constant(eps.clone()), a1, a2, UniPoly::one()])
}

/// A generic curve whose real part is three disjoint pseudo-lines: the
/// perturbation `eps = 1/2^j` shrinks from `1/2` until the result qualifies.
pub fn special_extremal(k: u32) -> Result<TrigonalCurve<Rational>, TrigonalError> {
    for j in 1..=SPECIAL_HALVING_CAP {
        let curve = depress(&special_extremal_raw(k, &dyadic(j)), k)?;
        if check_generic(&curve).is_generic() && real_scheme(&curve)? == RealScheme::ThreePseudoLines {
            return Ok(curve);
        }
    }
    Err(TrigonalError::PerturbationFailed(SPECIAL_HALVING_CAP))
}
