use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

use super::Sign;

/// Dense univariate polynomial, constant term first.
///
/// The coefficient vector never carries trailing zeros, so the zero polynomial
/// is the empty vector and `degree()` is `None` for it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * u^n`
    pub fn monomial(c: T, n: usize) -> Self {
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = c;
        Self::new(coeffs)
    }

    /// The identity polynomial `u`.
    pub fn var() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `u^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn sign_at(&self, x: &T) -> Sign {
        match T::poly_sign_at(&self.coeffs, x) {
            std::cmp::Ordering::Less => Sign::Negative,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Positive,
        }
    }

    /// Sign as `u -> +inf`.
    pub fn sign_at_pos_infinity(&self) -> Sign {
        self.leading().map_or(Sign::Zero, Sign::of)
    }

    /// Sign as `u -> -inf`.
    pub fn sign_at_neg_infinity(&self) -> Sign {
        match self.degree() {
            None => Sign::Zero,
            Some(d) if d % 2 == 0 => self.sign_at_pos_infinity(),
            Some(_) => -self.sign_at_pos_infinity(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.clone() * T::from_int(i as i64)).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `self(g(u))`
    pub fn compose(&self, g: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * g) + &Self::constant(c.clone()))
    }

    /// `self(u + c)`
    pub fn shift(&self, c: &T) -> Self {
        self.compose(&Self::new(vec![c.clone(), T::one()]))
    }

    /// Scales so the leading coefficient is one. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = T::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![T::zero(); rem.len() - d];
        for i in (0..quot.len()).rev() {
            let c = rem[i + d].clone() / lc.clone();
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * b.clone();
            }
            quot[i] = c;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Positive rescaling into the scalar's normal form; signs are untouched.
    pub fn normalized(self) -> Self {
        match T::normalizing_factor(&self.coeffs) {
            Some(f) => self.scale(&f),
            None => self,
        }
    }

    /// A positive multiple of `self.rem(divisor)` in normal form. Signs are the
    /// same as those of the true remainder.
    pub fn positive_rem(&self, divisor: &Self) -> Self {
        match T::positive_rem(&self.coeffs, &divisor.coeffs) {
            Some(c) => Self::new(c).normalized(),
            None => self.rem(divisor).normalized(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0)` is zero.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut x, mut y) = (a.clone().normalized(), b.clone().normalized());
        while !y.is_zero() {
            let r = x.positive_rem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && Self::gcd(self, &self.derivative()).is_constant()
    }

    /// `self / gcd(self, self')`: same roots, all simple.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.clone();
        }
        let g = Self::gcd(self, &self.derivative());
        self.div_rem(&g).0
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr for Poly<T> {
            type Output = Poly<T>;

            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_negative() { (true, c.abs()) } else { (false, c.clone()) };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = mag.is_one() && i > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "u")?,
                _ => write!(f, "u^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type P = Poly<Rational>;

    fn p(c: &[i64]) -> P {
        P::from_ints(c)
    }

    #[test]
    fn arithmetic_examples() {
        // (u+1) + (u-1) = 2u
        assert_eq!(&p(&[1, 1]) + &p(&[-1, 1]), p(&[0, 2]));
        // u * u = u^2
        assert_eq!(&P::var() * &P::var(), p(&[0, 0, 1]));
        // zero absorbs
        assert_eq!(&P::zero() * &p(&[3, 0, 7]), P::zero());
        // cancellation trims the degree
        let d = &p(&[1, 2, 3]) - &p(&[0, 0, 3]);
        assert_eq!(d.degree(), Some(1));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(P::gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])), p(&[-1, 1]));
        let sq = p(&[1, -2, 1]);
        assert_eq!(P::gcd(&sq, &sq.derivative()), p(&[-1, 1]));
        assert!(!sq.is_squarefree());
        assert_eq!(P::gcd(&p(&[1, 0, 1]), &P::var()), P::one());
        assert!(p(&[1, 0, 1]).is_squarefree());
    }

    #[test]
    fn gcd_is_monic_even_for_scaled_inputs() {
        let a = p(&[-6, 0, 6]);
        let b = p(&[-3, 3]);
        assert_eq!(P::gcd(&a, &b), p(&[-1, 1]));
        assert_eq!(P::gcd(&P::zero(), &b), p(&[-1, 1]));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[5, -3, 0, 2, 1]);
        let b = p(&[1, 0, 3]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn shift_and_compose() {
        // (u+1)^2 = u^2 + 2u + 1
        assert_eq!(p(&[0, 0, 1]).shift(&Rational::from_int(1)), p(&[1, 2, 1]));
        assert_eq!(p(&[0, 1]).compose(&p(&[0, 0, 2])), p(&[0, 0, 2]));
    }

    #[test]
    fn signs_at_infinity() {
        let f = p(&[0, 0, 0, -1]);
        assert_eq!(f.sign_at_pos_infinity(), Sign::Negative);
        assert_eq!(f.sign_at_neg_infinity(), Sign::Positive);
        assert_eq!(p(&[1, 0, -2]).sign_at_neg_infinity(), Sign::Negative);
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(p(&[-1, 0, 1]).to_string(), "u^2 - 1");
        assert_eq!(p(&[0, -2, 0, 3]).to_string(), "3u^3 - 2u");
        assert_eq!(P::zero().to_string(), "0");
    }

    #[test]
    fn generic_over_floats() {
        let f: Poly<f64> = Poly::from_ints(&[-2, 0, 1]);
        assert_eq!(f.eval(&3.0), 7.0);
        assert_eq!(f.derivative(), Poly::from_ints(&[0, 2]));
    }
}
