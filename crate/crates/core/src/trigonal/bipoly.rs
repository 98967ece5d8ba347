use std::fmt;

use crate::exactpoly::Poly;
use crate::scalar::Scalar;

/// Polynomial in `u` and `x`, stored as one `u`-polynomial per power of `x`.
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly<T> {
    rows: Vec<Poly<T>>,
}

impl<T: Scalar> BiPoly<T> {
    pub fn from_rows(mut rows: Vec<Poly<T>>) -> Self {
        while rows.last().is_some_and(Poly::is_zero) {
            rows.pop();
        }
        BiPoly { rows }
    }

    pub fn zero() -> Self {
        BiPoly { rows: Vec::new() }
    }

    /// Sum of `c u^i x^j` over the given terms; repeated exponents add up.
    pub fn from_terms(terms: impl IntoIterator<Item = (usize, usize, T)>) -> Self {
        let mut rows: Vec<Vec<T>> = Vec::new();
        for (i, j, c) in terms {
            if rows.len() <= j {
                rows.resize(j + 1, Vec::new());
            }
            if rows[j].len() <= i {
                rows[j].resize(i + 1, T::zero());
            }
            rows[j][i] = rows[j][i].clone() + c;
        }
        Self::from_rows(rows.into_iter().map(Poly::new).collect())
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    /// Coefficient of `x^j`.
    pub fn row(&self, j: usize) -> Poly<T> {
        self.rows.get(j).cloned().unwrap_or_else(Poly::zero)
    }

    /// Nonzero terms `(i, j, c)` for `c u^i x^j`.
    pub fn terms(&self) -> Vec<(usize, usize, T)> {
        let mut out = Vec::new();
        for (j, row) in self.rows.iter().enumerate() {
            for (i, c) in row.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }

    /// The polynomial in `x` over `u = u0`.
    pub fn at_u(&self, u0: &T) -> Poly<T> {
        Poly::new(self.rows.iter().map(|r| r.eval(u0)).collect())
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for BiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (i, j, c)) in terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            match i {
                0 => {}
                1 => write!(f, "u")?,
                _ => write!(f, "u^{i}")?,
            }
            match j {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{j}")?,
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for BiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BiPoly").field("terms", &self.terms().len()).finish()
    }
}
