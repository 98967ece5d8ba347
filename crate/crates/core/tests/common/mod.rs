//! Brute-force oracles shared by the integration tests and the acceptance run.
#![allow(dead_code)]

use ellipscheme::exactpoly::rational::{int, rational};
use ellipscheme::exactpoly::{ordered_real_roots_of_cubic, Sign, SturmChain};
use ellipscheme::trigonal::{depress, depression_shift, BiPoly};
use ellipscheme::{Rational, UniPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

/// Cauchy-style bound `1 + max |a_i / a_n|` on the absolute value of roots.
fn bound(c: &[Rational]) -> Rational {
    let lead = c.last().unwrap().abs();
    let m = c.iter().map(|a| a.abs() / &lead).fold(Rational::zero(), |a, b| if b > a { b } else { a });
    m + Rational::one()
}

/// Exponent `e` with `2^e >= x > 0`.
fn log2_ceil(x: &Rational) -> i64 {
    let mut e = 0i64;
    let mut p = Rational::one();
    while &p < x {
        p *= int(2);
        e += 1;
    }
    while &(&p / int(2)) >= x {
        p /= int(2);
        e -= 1;
    }
    e
}

fn pow2(e: i64) -> Rational {
    if e >= 0 {
        int(2).pow(e as i32)
    } else {
        Rational::one() / int(2).pow((-e) as i32)
    }
}

/// Sample points `+-2^e (1 + j/s)` for `lo <= e < hi`, `0 <= j < s`, and `0`,
/// in increasing order.
fn geometric_grid(lo: i64, hi: i64, s: i64) -> Vec<Rational> {
    let mut pos = Vec::new();
    for e in lo..hi {
        let base = pow2(e);
        for j in 0..s {
            pos.push(&base * rational(s + j, s));
        }
    }
    pos.push(pow2(hi));
    let mut all: Vec<Rational> = pos.iter().rev().map(|x| -x.clone()).collect();
    all.push(Rational::zero());
    all.extend(pos);
    all
}

fn sign_changes(p: &UniPoly, xs: &[Rational]) -> usize {
    let mut last: Option<Sign> = None;
    let mut changes = 0;
    for x in xs {
        let s = p.sign_at(x);
        if s != Sign::Zero {
            if last.is_some_and(|l| l != s) {
                changes += 1;
            }
            last = Some(s);
        }
    }
    changes
}

/// Real roots of a squarefree polynomial counted as sign changes over a
/// geometric rational grid spanning the root bounds of `p` and of its
/// reversal, refined per octave until three consecutive resolutions agree.
/// Independent of any Sturm machinery.
pub fn grid_root_count(p: &UniPoly) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let c = p.coeffs();
    let nz: Vec<Rational> = c.iter().skip_while(|a| a.is_zero()).cloned().collect();
    let hi = log2_ceil(&bound(c)) + 1;
    let lo = if nz.len() > 1 {
        let rev: Vec<Rational> = nz.iter().rev().cloned().collect();
        -log2_ceil(&bound(&rev)) - 1
    } else {
        hi - 1
    };
    let mut s = 16i64;
    let mut history: Vec<usize> = Vec::new();
    loop {
        history.push(sign_changes(p, &geometric_grid(lo, hi, s)));
        let h = history.len();
        if h >= 3 && history[h - 1] == history[h - 2] && history[h - 2] == history[h - 3] {
            return history[h - 1];
        }
        assert!(s < 1 << 14, "grid oracle did not stabilize: {history:?}");
        s *= 2;
    }
}

fn integer_coeffs(p: &UniPoly) -> Vec<BigInt> {
    let l = p.coeffs().iter().fold(BigInt::one(), |l, a| l.lcm(a.denom()));
    p.coeffs().iter().map(|a| (a * Rational::from_integer(l.clone())).to_integer()).collect()
}

fn descartes_variations(c: &[BigInt]) -> usize {
    let signs: Vec<bool> = c.iter().filter(|a| !a.is_zero()).map(|a| a.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `c(x + 1)` by repeated synthetic division.
fn taylor_shift_one(c: &[BigInt]) -> Vec<BigInt> {
    let mut a = c.to_vec();
    let n = a.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = a[j + 1].clone();
            a[j] += t;
        }
    }
    a
}

/// Roots in `(0, 1)` of a squarefree `c`, by Descartes' rule and bisection.
fn descartes_unit(c: &[BigInt]) -> usize {
    // variations of (1+x)^n c(1/(1+x))
    let rev: Vec<BigInt> = c.iter().rev().cloned().collect();
    match descartes_variations(&taylor_shift_one(&rev)) {
        0 => return 0,
        1 => return 1,
        _ => {}
    }
    let n = c.len() - 1;
    // left half: 2^n c(x/2); right half: the same shifted by one
    let left: Vec<BigInt> = c.iter().enumerate().map(|(i, a)| a << (n - i)).collect();
    let right = taylor_shift_one(&left);
    let mid = usize::from(right[0].is_zero());
    descartes_unit(&left) + mid + descartes_unit(&right)
}

fn positive_roots(c: &[BigInt], b: &BigInt) -> usize {
    // roots of c in (0, b) are roots of c(b x) in (0, 1)
    let mut pw = BigInt::one();
    let scaled: Vec<BigInt> = c
        .iter()
        .map(|a| {
            let t = a * &pw;
            pw *= b;
            t
        })
        .collect();
    descartes_unit(&scaled)
}

/// Real roots of a squarefree polynomial by the Descartes rule of signs with
/// bisection on `(-B, B)`, exact and independent of any Sturm machinery.
pub fn descartes_root_count(p: &UniPoly) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let mut c = integer_coeffs(p);
    let zero = usize::from(c[0].is_zero());
    while c[0].is_zero() {
        c.remove(0);
    }
    let b = bound(p.coeffs()).ceil().to_integer();
    let neg: Vec<BigInt> = c.iter().enumerate().map(|(i, a)| if i % 2 == 1 { -a } else { a.clone() }).collect();
    zero + positive_roots(&c, &b) + positive_roots(&neg, &b)
}

/// Random polynomial of degree `1..=max_deg` with coefficients `n/d`,
/// `|n| <= 9`, `1 <= d <= 4`, squarefree.
pub fn random_squarefree(rng: &mut impl Rng, max_deg: usize) -> UniPoly {
    loop {
        let deg = rng.gen_range(1..=max_deg);
        let coeffs: Vec<Rational> = (0..=deg).map(|_| rational(rng.gen_range(-9..=9), rng.gen_range(1..=4))).collect();
        let p = UniPoly::new(coeffs);
        if p.degree() == Some(deg) && p.is_squarefree() {
            return p;
        }
    }
}

/// Random rational with numerator in `-20..=20` and denominator in `1..=7`.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    rational(rng.gen_range(-20..=20), rng.gen_range(1..=7))
}

/// The depression identity at `u0`, checked two ways: as the polynomial
/// identity `g(x) = f(x - s) / c`, and by matching the ordered real roots of
/// the two cubics after the shift `s = a2(u0)/3`.
pub fn depression_identity_holds(raw: &BiPoly<Rational>, k: u32, u0: &Rational) -> bool {
    let curve = depress(raw, k).unwrap();
    let s = depression_shift(raw).unwrap().eval(u0);
    let f = raw.at_u(u0);
    let lead = f.leading().unwrap().clone();
    let g = curve.fiber(u0);
    let shifted = f.shift(&-s.clone()).scale(&(Rational::one() / lead));
    if shifted != g {
        return false;
    }
    let (p0, q0) = (curve.p().eval(u0), curve.q().eval(u0));
    if (int(4) * p0.pow(3) + int(27) * q0.pow(2)).is_zero() {
        // double root at this fiber, only the identity applies
        return true;
    }
    let depressed = ordered_real_roots_of_cubic(&p0, &q0).unwrap();
    let original = SturmChain::new(&f).unwrap();
    original.count_real_roots() == depressed.len()
        && depressed.iter().all(|iv| original.count_in(&(&iv.lo - &s), &(&iv.hi - &s)) == 1)
}
