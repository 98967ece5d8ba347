use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactpoly::{Interval, Poly, RootDomain, Sign, SturmChain};
use crate::scalar::Scalar;

use super::{discriminant, genericity_report, TrigonalCurve, TrigonalError};

/// Real scheme of a generic trigonal curve. `Ovals` is unordered and always
/// stored with `a <= b`; build it through [`RealScheme::ovals`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RealScheme {
    ThreePseudoLines,
    Ovals { a: u32, b: u32 },
}

impl RealScheme {
    pub fn ovals(a: u32, b: u32) -> Self {
        RealScheme::Ovals { a: a.min(b), b: a.max(b) }
    }

    pub fn oval_count(&self) -> u32 {
        match self {
            RealScheme::ThreePseudoLines => 0,
            RealScheme::Ovals { a, b } => a + b,
        }
    }
}

impl fmt::Display for RealScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealScheme::ThreePseudoLines => write!(f, "three-pseudo-lines"),
            RealScheme::Ovals { a, b } => write!(f, "<{a}|{b}>"),
        }
    }
}

impl FromStr for RealScheme {
    type Err = TrigonalError;

    /// Accepts `<a|b>`, `⟨a|b⟩` and `three-pseudo-lines`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "three-pseudo-lines" {
            return Ok(RealScheme::ThreePseudoLines);
        }
        let bad = || TrigonalError::Parse(format!("invalid real scheme {s:?}"));
        let inner = s
            .strip_prefix('<')
            .and_then(|r| r.strip_suffix('>'))
            .or_else(|| s.strip_prefix('\u{27e8}').and_then(|r| r.strip_suffix('\u{27e9}')))
            .ok_or_else(bad)?;
        let (a, b) = inner.split_once('|').ok_or_else(bad)?;
        Ok(RealScheme::ovals(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
    }
}

impl Serialize for RealScheme {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RealScheme {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Which two of the three ordered real branches `x1 < x2 < x3` form an oval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairSide {
    Lower,
    Upper,
}

impl PairSide {
    /// Sign of the cubic between the two branches of the pair.
    pub fn interior_sign(self) -> Sign {
        match self {
            PairSide::Lower => Sign::Positive,
            PairSide::Upper => Sign::Negative,
        }
    }
}

/// A maximal interval of the real projective line on which the discriminant is
/// negative. `left` and `right` isolate its endpoint roots; when the interval
/// passes through infinity, `left` isolates the largest root and `right` the
/// smallest. `sample` is a rational point strictly inside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegativeInterval<T> {
    pub left: Interval<T>,
    pub right: Interval<T>,
    pub through_infinity: bool,
    pub sample: T,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OvalReport<T> {
    pub interval: NegativeInterval<T>,
    pub side: PairSide,
    /// Sign of the cubic over `interval.sample`, evaluated between the pair.
    pub sampled_sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeAnalysis<T> {
    pub scheme: RealScheme,
    pub delta_roots: Vec<Interval<T>>,
    pub ovals: Vec<OvalReport<T>>,
    /// Negative intervals whose two endpoints close up different pairs: a fold
    /// of the pseudo-line, not an oval.
    pub zigzags: Vec<NegativeInterval<T>>,
}

// Cap on bisections when separating a root of delta from roots of p and q.
// Genericity guarantees termination, the cap only guards against misuse.
const SEPARATION_CAP: usize = 100_000;

struct Analyzer<'a, T> {
    curve: &'a TrigonalCurve<T>,
    delta: SturmChain<T>,
    p_roots: Option<SturmChain<T>>,
    q_roots: Option<SturmChain<T>>,
}

impl<'a, T: Scalar> Analyzer<'a, T> {
    fn new(curve: &'a TrigonalCurve<T>) -> Result<Self, TrigonalError> {
        // the Sturm chain of delta doubles as its squarefreeness test
        let delta = discriminant(curve);
        let chain = SturmChain::new(&delta);
        let report = genericity_report(curve, delta, chain.is_ok());
        if !report.is_generic() {
            return Err(TrigonalError::NonGeneric(report.summary()));
        }
        let chain_of = |f: &Poly<T>| -> Result<Option<SturmChain<T>>, TrigonalError> {
            let sf = f.squarefree_part();
            Ok(if sf.is_constant() { None } else { Some(SturmChain::new(&sf)?) })
        };
        Ok(Analyzer { curve, delta: chain?, p_roots: chain_of(curve.p())?, q_roots: chain_of(curve.q())? })
    }

    fn roots(&self) -> Vec<Interval<T>> {
        self.delta.separate_roots(self.delta.isolate(&RootDomain::AllReals))
    }

    fn negative_intervals(&self, roots: &[Interval<T>]) -> Vec<NegativeInterval<T>> {
        let delta = self.delta.poly();
        let mut out = Vec::new();
        for w in roots.windows(2) {
            let sample = T::midpoint(&w[0].hi, &w[1].lo);
            if delta.sign_at(&sample) == Sign::Negative {
                out.push(NegativeInterval { left: w[0].clone(), right: w[1].clone(), through_infinity: false, sample });
            }
        }
        if let (Some(first), Some(last)) = (roots.first(), roots.last()) {
            if delta.sign_at_pos_infinity() == Sign::Negative {
                let sample = last.hi.clone() + T::one();
                out.push(NegativeInterval { left: last.clone(), right: first.clone(), through_infinity: true, sample });
            }
        }
        out
    }

    /// Sign of `f` at the root of delta isolated by `iv`, found by shrinking `iv`
    /// until `f` has no root in its closure.
    fn sign_at_root(&self, f: &Poly<T>, f_roots: &Option<SturmChain<T>>, iv: &Interval<T>) -> Option<Sign> {
        let iv = match f_roots {
            None => iv.clone(),
            Some(chain) => self.delta.separate_from(iv, chain, SEPARATION_CAP)?,
        };
        Some(f.sign_at(&iv.lo)).filter(|s| *s != Sign::Zero)
    }

    /// At a simple root `r` of delta the fiber is `(x - d)^2 (x - s)` with
    /// `d = -3q/(2p)` and `s = 3q/p`, where `p(r) < 0`. The oval closes up at the
    /// double root, so it is the upper pair iff `d > s`, i.e. iff `q(r) > 0`.
    fn side_at(&self, root: &Interval<T>) -> Result<PairSide, TrigonalError> {
        let degenerate = |what: &str| TrigonalError::DegenerateEndpoint(format!("{what} near {:?}", root.midpoint()));
        let sp = self.sign_at_root(self.curve.p(), &self.p_roots, root).ok_or_else(|| degenerate("p vanishes"))?;
        if sp != Sign::Negative {
            return Err(degenerate("p is not negative"));
        }
        match self.sign_at_root(self.curve.q(), &self.q_roots, root) {
            Some(Sign::Positive) => Ok(PairSide::Upper),
            Some(Sign::Negative) => Ok(PairSide::Lower),
            _ => Err(degenerate("q vanishes")),
        }
    }

    fn side(&self, iv: &NegativeInterval<T>) -> Result<PairSide, TrigonalError> {
        self.side_at(if iv.through_infinity { &iv.right } else { &iv.left })
    }

    fn far_side(&self, iv: &NegativeInterval<T>) -> Result<PairSide, TrigonalError> {
        self.side_at(if iv.through_infinity { &iv.left } else { &iv.right })
    }
}

/// Sign of the fiber cubic over `u0` at a rational point between the branches
/// of `side`. The fiber must have three real roots.
fn sampled_sign<T: Scalar>(curve: &TrigonalCurve<T>, u0: &T, side: PairSide) -> Result<Sign, TrigonalError> {
    let g = curve.fiber(u0);
    let chain = SturmChain::new(&g)?;
    let roots = chain.separate_roots(chain.isolate(&RootDomain::AllReals));
    if roots.len() != 3 {
        return Err(TrigonalError::Inconsistent(format!(
            "fiber over {u0:?} has {} real roots, expected 3",
            roots.len()
        )));
    }
    let (a, b) = match side {
        PairSide::Lower => (&roots[0], &roots[1]),
        PairSide::Upper => (&roots[1], &roots[2]),
    };
    Ok(g.sign_at(&T::midpoint(&a.hi, &b.lo)))
}

/// Maximal discriminant-negative intervals of a generic curve.
pub fn negative_intervals<T: Scalar>(c: &TrigonalCurve<T>) -> Result<Vec<NegativeInterval<T>>, TrigonalError> {
    let an = Analyzer::new(c)?;
    Ok(an.negative_intervals(&an.roots()))
}

pub fn oval_pair_side<T: Scalar>(
    c: &TrigonalCurve<T>,
    interval: &NegativeInterval<T>,
) -> Result<PairSide, TrigonalError> {
    Analyzer::new(c)?.side(interval)
}

/// Full analysis: every oval with its pair side, cross-checked against the sign
/// of the cubic sampled inside the oval. A negative interval counts as an oval
/// only when both endpoints close up the same pair.
pub fn analyze<T: Scalar>(c: &TrigonalCurve<T>) -> Result<SchemeAnalysis<T>, TrigonalError> {
    let an = Analyzer::new(c)?;
    let roots = an.roots();
    if roots.is_empty() {
        let scheme = match an.delta.poly().sign_at_pos_infinity() {
            Sign::Negative => RealScheme::ThreePseudoLines,
            _ => RealScheme::ovals(0, 0),
        };
        return Ok(SchemeAnalysis { scheme, delta_roots: roots, ovals: Vec::new(), zigzags: Vec::new() });
    }
    let (mut ovals, mut zigzags) = (Vec::new(), Vec::new());
    let (mut plus, mut minus) = (0, 0);
    for interval in an.negative_intervals(&roots) {
        let side = an.side(&interval)?;
        if an.far_side(&interval)? != side {
            zigzags.push(interval);
            continue;
        }
        let sampled = sampled_sign(c, &interval.sample, side)?;
        if sampled != side.interior_sign() {
            return Err(TrigonalError::Inconsistent(format!(
                "oval over {:?}: endpoint says {side:?}, sampled sign {sampled:?}",
                interval.sample
            )));
        }
        match sampled {
            Sign::Positive => plus += 1,
            _ => minus += 1,
        }
        ovals.push(OvalReport { interval, side, sampled_sign: sampled });
    }
    Ok(SchemeAnalysis { scheme: RealScheme::ovals(plus, minus), delta_roots: roots, ovals, zigzags })
}

pub fn real_scheme<T: Scalar>(c: &TrigonalCurve<T>) -> Result<RealScheme, TrigonalError> {
    analyze(c).map(|a| a.scheme)
}
