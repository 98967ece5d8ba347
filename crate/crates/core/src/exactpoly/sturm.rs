use crate::scalar::Scalar;

use super::{Poly, PolyError, Sign};

/// Half-open interval `(lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Scalar> Interval<T> {
    pub fn new(lo: T, hi: T) -> Self {
        assert!(lo < hi, "empty interval");
        Interval { lo, hi }
    }

    pub fn width(&self) -> T {
        self.hi.clone() - self.lo.clone()
    }

    pub fn midpoint(&self) -> T {
        T::midpoint(&self.lo, &self.hi)
    }

    pub fn contains(&self, x: &T) -> bool {
        &self.lo < x && x <= &self.hi
    }

    pub fn translate(&self, by: &T) -> Self {
        Interval { lo: self.lo.clone() + by.clone(), hi: self.hi.clone() + by.clone() }
    }
}

#[derive(Clone, Debug)]
pub enum RootDomain<T> {
    AllReals,
    /// Roots in `(lo, hi]`.
    Within(Interval<T>),
}

/// Refinement target used when callers don't ask for anything finer.
pub fn default_width<T: Scalar>() -> T {
    T::one() / T::from_int(1024)
}

/// Sturm sequence of a squarefree polynomial. Every member is rescaled by a
/// positive factor (the first one included), which leaves all signs intact.
#[derive(Clone, Debug)]
pub struct SturmChain<T> {
    chain: Vec<Poly<T>>,
}

impl<T: Scalar> SturmChain<T> {
    pub fn new(p: &Poly<T>) -> Result<Self, PolyError> {
        if p.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut chain = vec![p.clone().normalized()];
        let d = chain[0].derivative().normalized();
        if !d.is_zero() {
            chain.push(d);
        }
        while chain.len() >= 2 {
            let n = chain.len();
            let r = chain[n - 2].positive_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(-r);
        }
        // the last member is gcd(p, p') up to a constant
        if !chain.last().unwrap().is_constant() {
            return Err(PolyError::NotSquarefree);
        }
        Ok(SturmChain { chain })
    }

    /// Positive multiple of the polynomial the chain was built from.
    pub fn poly(&self) -> &Poly<T> {
        &self.chain[0]
    }

    pub fn members(&self) -> &[Poly<T>] {
        &self.chain
    }

    fn variations(signs: impl Iterator<Item = Sign>) -> usize {
        let mut last = Sign::Zero;
        let mut count = 0;
        for s in signs.filter(|s| *s != Sign::Zero) {
            if last != Sign::Zero && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &T) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_neg_infinity(&self) -> usize {
        Self::variations(self.chain.iter().map(Poly::sign_at_neg_infinity))
    }

    pub fn variations_at_pos_infinity(&self) -> usize {
        Self::variations(self.chain.iter().map(Poly::sign_at_pos_infinity))
    }

    /// Number of distinct roots in `(lo, hi]`.
    pub fn count_in(&self, lo: &T, hi: &T) -> usize {
        self.variations_at(lo) - self.variations_at(hi)
    }

    pub fn count_real_roots(&self) -> usize {
        self.variations_at_neg_infinity() - self.variations_at_pos_infinity()
    }

    /// A power of two strictly exceeding the modulus of every real root
    /// (Cauchy bound `1 + max |a_i / a_n|`, rounded up).
    pub fn root_bound(&self) -> T {
        let p = self.poly();
        let lc = p.leading().unwrap().abs();
        let cauchy = p.coeffs()[..p.coeffs().len() - 1].iter().map(|c| c.abs() / lc.clone()).fold(T::zero(), |m, c| {
            if c > m {
                c
            } else {
                m
            }
        }) + T::one();
        let mut b = T::one();
        while b <= cauchy {
            b = b * T::two();
        }
        b
    }

    /// One interval per distinct root, sorted, pairwise disjoint, each containing
    /// exactly one root. Intervals come straight out of bisection (not yet refined).
    pub fn isolate(&self, domain: &RootDomain<T>) -> Vec<Interval<T>> {
        let whole = match domain {
            RootDomain::AllReals => {
                let b = self.root_bound();
                Interval::new(-b.clone(), b)
            }
            RootDomain::Within(iv) => iv.clone(),
        };
        let mut out = Vec::new();
        let v_lo = self.variations_at(&whole.lo);
        let v_hi = self.variations_at(&whole.hi);
        let mut stack = vec![(whole, v_lo, v_hi)];
        while let Some((iv, v_lo, v_hi)) = stack.pop() {
            match v_lo - v_hi {
                0 => {}
                1 => out.push(iv),
                _ => {
                    let mid = iv.midpoint();
                    let v_mid = self.variations_at(&mid);
                    stack.push((Interval::new(mid.clone(), iv.hi), v_mid, v_hi));
                    stack.push((Interval::new(iv.lo, mid), v_lo, v_mid));
                }
            }
        }
        out.sort_by(|a, b| a.lo.partial_cmp(&b.lo).expect("ordered scalars"));
        out
    }

    /// Bisects `iv` (which must hold exactly one root) until its width is at most
    /// `max_width`; the result still holds that root.
    pub fn refine(&self, iv: &Interval<T>, max_width: &T) -> Interval<T> {
        let mut lo = iv.lo.clone();
        let mut hi = iv.hi.clone();
        let mut v_lo = self.variations_at(&lo);
        while &(hi.clone() - lo.clone()) > max_width {
            let mid = T::midpoint(&lo, &hi);
            let v_mid = self.variations_at(&mid);
            if v_lo - v_mid == 1 {
                hi = mid;
            } else {
                lo = mid;
                v_lo = v_mid;
            }
        }
        Interval::new(lo, hi)
    }

    /// Refines sorted isolating intervals (as returned by [`Self::isolate`]) until
    /// neighbours are strictly apart, so `(iv[i].hi, iv[i + 1].lo)` is a nonempty
    /// root-free gap.
    pub fn separate_roots(&self, mut ivs: Vec<Interval<T>>) -> Vec<Interval<T>> {
        for i in 1..ivs.len() {
            while ivs[i - 1].hi >= ivs[i].lo {
                let w = ivs[i - 1].width() / T::two();
                ivs[i - 1] = self.refine(&ivs[i - 1], &w);
                let w = ivs[i].width() / T::two();
                ivs[i] = self.refine(&ivs[i], &w);
            }
        }
        ivs
    }

    /// Bisects until no root of `other` lies in the closed interval, so that
    /// `other` has constant nonzero sign near the root. `other` must not vanish at
    /// the root itself; gives up after `max_steps` halvings.
    pub fn separate_from(&self, iv: &Interval<T>, other: &SturmChain<T>, max_steps: usize) -> Option<Interval<T>> {
        let mut cur = iv.clone();
        for _ in 0..=max_steps {
            let clean = other.count_in(&cur.lo, &cur.hi) == 0 && other.poly().sign_at(&cur.lo) != Sign::Zero;
            if clean {
                return Some(cur);
            }
            let w = cur.width() / T::two();
            cur = self.refine(&cur, &w);
        }
        None
    }
}

/// Isolating intervals for the distinct real roots of a squarefree polynomial,
/// refined to [`default_width`].
pub fn sturm_isolate<T: Scalar>(p: &Poly<T>, domain: &RootDomain<T>) -> Result<Vec<Interval<T>>, PolyError> {
    let chain = SturmChain::new(p)?;
    let w = default_width::<T>();
    Ok(chain.isolate(domain).iter().map(|iv| chain.refine(iv, &w)).collect())
}

/// Exact sign on an interval the caller knows to be root-free, sampled at the
/// midpoint.
pub fn sign_on_interval<T: Scalar>(p: &Poly<T>, iv: &Interval<T>) -> Result<Sign, PolyError> {
    match p.sign_at(&iv.midpoint()) {
        Sign::Zero => Err(PolyError::SignAmbiguous(format!("{:?} at {:?}", p, iv.midpoint()))),
        s => Ok(s),
    }
}
