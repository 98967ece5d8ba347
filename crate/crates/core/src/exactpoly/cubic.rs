use crate::{IsolatingInterval, Rational, UniPoly};

use super::{sturm_isolate, PolyError, RootDomain};

/// Isolating intervals, increasing, for the real roots of `x^3 + p0 x + q0`.
/// Refine them through a [`super::SturmChain`] on the same cubic if needed.
pub fn ordered_real_roots_of_cubic(p0: &Rational, q0: &Rational) -> Result<Vec<IsolatingInterval>, PolyError> {
    sturm_isolate(&depressed_cubic(p0, q0), &RootDomain::AllReals)
}

/// The monic cubic `x^3 + p0 x + q0`.
pub fn depressed_cubic(p0: &Rational, q0: &Rational) -> UniPoly {
    UniPoly::new(vec![q0.clone(), p0.clone(), Rational::from_integer(0.into()), Rational::from_integer(1.into())])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::int;

    #[test]
    fn three_roots() {
        let ivs = ordered_real_roots_of_cubic(&int(-1), &int(0)).unwrap();
        assert_eq!(ivs.len(), 3);
        for (iv, r) in ivs.iter().zip([-1, 0, 1]) {
            assert!(iv.contains(&int(r)));
        }
    }

    #[test]
    fn one_root() {
        let ivs = ordered_real_roots_of_cubic(&int(1), &int(0)).unwrap();
        assert_eq!(ivs.len(), 1);
        assert!(ivs[0].contains(&int(0)));
    }

    #[test]
    fn triple_root_is_rejected() {
        assert_eq!(ordered_real_roots_of_cubic(&int(0), &int(0)).unwrap_err(), PolyError::NotSquarefree);
        // 4p^3 + 27q^2 = 0 for p = -3, q = 2: (x-1)^2 (x+2)
        assert_eq!(ordered_real_roots_of_cubic(&int(-3), &int(2)).unwrap_err(), PolyError::NotSquarefree);
    }
}
