//! Exact rational arithmetic, dense univariate polynomials and Sturm root
//! isolation. Every sign decision elsewhere in the crate goes through here.

mod cubic;
mod poly;
pub mod rational;
mod sturm;

use std::ops::Neg;

use thiserror::Error;

use crate::scalar::Scalar;

pub use cubic::{depressed_cubic, ordered_real_roots_of_cubic};
pub use poly::Poly;
pub use sturm::{default_width, sign_on_interval, sturm_isolate, Interval, RootDomain, SturmChain};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of<T: Scalar>(x: &T) -> Sign {
        if x.is_positive() {
            Sign::Positive
        } else if x.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match self.to_i8() * rhs.to_i8() {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            _ => Sign::Zero,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial vanishes on an interval assumed root-free: {0}")]
    SignAmbiguous(String),
    #[error("parse error: {0}")]
    Parse(String),
}
