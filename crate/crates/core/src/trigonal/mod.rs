//! Trigonal curves `x^3 + p(u) x + q(u) = 0` on the Hirzebruch surface of
//! degree `2k`: depression, discriminant, genericity and the real scheme.

mod bipoly;
mod io;
mod scheme;
mod special;

use thiserror::Error;

use crate::exactpoly::{Poly, PolyError};
use crate::scalar::Scalar;

pub use bipoly::BiPoly;
pub use io::{format_curve, parse_curve};
pub use scheme::{
    analyze, negative_intervals, oval_pair_side, real_scheme, NegativeInterval, OvalReport, PairSide, RealScheme,
    SchemeAnalysis,
};
pub use special::{special_extremal, special_extremal_raw, SPECIAL_HALVING_CAP};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TrigonalError {
    #[error("bad Newton polygon: {0}")]
    BadNewtonPolygon(String),
    #[error("deg {which} = {degree} exceeds {bound}")]
    DegreeOverflow { which: &'static str, degree: usize, bound: usize },
    #[error("curve is not generic: {0}")]
    NonGeneric(String),
    #[error("degenerate endpoint: {0}")]
    DegenerateEndpoint(String),
    #[error("no generic three-pseudo-line perturbation within {0} halvings")]
    PerturbationFailed(u32),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Reduced model `x^3 + p(u) x + q(u)` of a trigonal curve on the Hirzebruch
/// surface of degree `2k`, with `deg p <= 4k` and `deg q <= 6k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrigonalCurve<T> {
    k: u32,
    p: Poly<T>,
    q: Poly<T>,
}

impl<T: Scalar> TrigonalCurve<T> {
    pub fn new(k: u32, p: Poly<T>, q: Poly<T>) -> Result<Self, TrigonalError> {
        assert!(k >= 1, "k must be positive");
        check_degree("p", &p, 4 * k as usize)?;
        check_degree("q", &q, 6 * k as usize)?;
        Ok(TrigonalCurve { k, p, q })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn p(&self) -> &Poly<T> {
        &self.p
    }

    pub fn q(&self) -> &Poly<T> {
        &self.q
    }

    /// The cubic in `x` over the point `u = u0`.
    pub fn fiber(&self, u0: &T) -> Poly<T> {
        Poly::new(vec![self.q.eval(u0), self.p.eval(u0), T::zero(), T::one()])
    }

    /// Same curve after the base change `u -> a u + b` (`a != 0`).
    pub fn reparametrize(&self, a: &T, b: &T) -> Self {
        let g = Poly::new(vec![b.clone(), a.clone()]);
        TrigonalCurve { k: self.k, p: self.p.compose(&g), q: self.q.compose(&g) }
    }
}

fn check_degree<T: Scalar>(which: &'static str, f: &Poly<T>, bound: usize) -> Result<(), TrigonalError> {
    match f.degree() {
        Some(degree) if degree > bound => Err(TrigonalError::DegreeOverflow { which, degree, bound }),
        _ => Ok(()),
    }
}

/// Removes the `x^2` term: with `raw = c (x^3 + a2 x^2 + a1 x + a0)`,
/// `p = a1 - a2^2/3` and `q = a0 - a1 a2/3 + 2 a2^3/27`.
pub fn depress<T: Scalar>(raw: &BiPoly<T>, k: u32) -> Result<TrigonalCurve<T>, TrigonalError> {
    let (a2, a1, a0) = monic_rows(raw)?;
    let three = T::from_int(3);
    let p = &a1 - &(&a2 * &a2).scale(&(T::one() / three.clone()));
    let q = &(&a0 - &(&a1 * &a2).scale(&(T::one() / three))) + &a2.pow(3).scale(&(T::two() / T::from_int(27)));
    TrigonalCurve::new(k, p, q)
}

/// `a2(u) / 3`: a root `y` of the depressed cubic over `u0` corresponds to the
/// root `y - a2(u0)/3` of `raw`.
pub fn depression_shift<T: Scalar>(raw: &BiPoly<T>) -> Result<Poly<T>, TrigonalError> {
    let (a2, _, _) = monic_rows(raw)?;
    Ok(a2.scale(&(T::one() / T::from_int(3))))
}

/// Rows `x^2`, `x^1`, `x^0` divided by the constant `x^3` coefficient.
type MonicRows<T> = (Poly<T>, Poly<T>, Poly<T>);

fn monic_rows<T: Scalar>(raw: &BiPoly<T>) -> Result<MonicRows<T>, TrigonalError> {
    if raw.x_degree() != Some(3) {
        return Err(TrigonalError::BadNewtonPolygon(format!("x-degree {:?}, expected 3", raw.x_degree())));
    }
    let lead = raw.row(3);
    if !lead.is_constant() {
        return Err(TrigonalError::BadNewtonPolygon("x^3 coefficient depends on u".into()));
    }
    let inv = T::one() / lead.coeff(0);
    Ok((raw.row(2).scale(&inv), raw.row(1).scale(&inv), raw.row(0).scale(&inv)))
}

/// `4 p^3 + 27 q^2`
pub fn discriminant<T: Scalar>(c: &TrigonalCurve<T>) -> Poly<T> {
    &c.p.pow(3).scale(&T::from_int(4)) + &(&c.q * &c.q).scale(&T::from_int(27))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericityReport<T> {
    pub delta: Poly<T>,
    /// `deg delta == 12k`
    pub degree_ok: bool,
    pub squarefree_ok: bool,
    /// `p`, `q` and `delta` pairwise without common roots.
    pub coprime_ok: bool,
}

impl<T: Scalar> GenericityReport<T> {
    pub fn is_generic(&self) -> bool {
        self.degree_ok && self.squarefree_ok && self.coprime_ok
    }

    pub fn summary(&self) -> String {
        format!(
            "deg delta = {:?}, degree_ok={}, squarefree_ok={}, coprime_ok={}",
            self.delta.degree(),
            self.degree_ok,
            self.squarefree_ok,
            self.coprime_ok
        )
    }
}

pub fn check_generic<T: Scalar>(c: &TrigonalCurve<T>) -> GenericityReport<T> {
    let delta = discriminant(c);
    let squarefree_ok = delta.is_squarefree();
    genericity_report(c, delta, squarefree_ok)
}

/// The report for a discriminant whose squarefreeness is already known.
pub(crate) fn genericity_report<T: Scalar>(
    c: &TrigonalCurve<T>,
    delta: Poly<T>,
    squarefree_ok: bool,
) -> GenericityReport<T> {
    let degree_ok = delta.degree() == Some(12 * c.k as usize);
    let coprime = |a: &Poly<T>, b: &Poly<T>| !a.is_zero() && !b.is_zero() && Poly::gcd(a, b).is_constant();
    let coprime_ok = coprime(&c.p, &c.q) && coprime(&c.p, &delta) && coprime(&c.q, &delta);
    GenericityReport { delta, degree_ok, squarefree_ok, coprime_ok }
}
