//! Convex liftings of refinement-shaped triangulations.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::Rational;

use super::geometry::{interpolate, sorted_triangle, strictly_inside, Point};
use super::triangulation::LatticeTriangulation;

/// Insertion of `point` into the interior of the triangle `parent`, splitting it
/// into three.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Refinement {
    pub parent: [Point; 3],
    pub point: Point,
}

/// Heights `nu` at the vertices of a triangulation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexLifting {
    pub values: BTreeMap<Point, Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("refinement history does not reproduce the triangulation: {0}")]
    NotRefinementShaped(String),
    #[error("no convexity certificate after {0} shrinkings of the lowering schedule")]
    CertificationFailed(u32),
}

const SHRINK_CAP: u32 = 64;

impl ConvexLifting {
    pub fn value(&self, p: Point) -> &Rational {
        &self.values[&p]
    }

    /// Least common multiple of the denominators: `scale * nu` is integral.
    pub fn denominator_lcm(&self) -> BigInt {
        self.values.values().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
    }

    /// `scale * nu` as integers, with `scale` the denominator lcm.
    pub fn integer_values(&self) -> BTreeMap<Point, BigInt> {
        let l = Rational::from_integer(self.denominator_lcm());
        self.values.iter().map(|(p, v)| (*p, (v * &l).to_integer())).collect()
    }

    /// Subtracts an affine function `a i + b j + c` that levels the corners
    /// `(0,0)`, `(6k,0)`, `(0,3)` as far as integral scaled slopes allow, then
    /// shifts the minimum to zero. Convexity survives and no new denominators
    /// appear. The T-polynomial only changes by positive rescalings of `u`, `x`
    /// and the whole polynomial, with smaller exponents.
    pub fn balanced(&self, k: u32) -> ConvexLifting {
        let l = Rational::from_integer(self.denominator_lcm());
        let w = 6 * k as i64;
        let at = |p: Point| self.values.get(&p).cloned().unwrap_or_else(Rational::zero);
        let slope = |rise: Rational, run: i64| (rise * &l / Rational::from_integer(run.into())).round() / &l;
        let a = slope(at((w, 0)) - at((0, 0)), w);
        let b = slope(at((0, 3)) - at((0, 0)), 3);
        let tilted: BTreeMap<Point, Rational> = self
            .values
            .iter()
            .map(|(p, v)| (*p, v - &a * Rational::from_integer(p.0.into()) - &b * Rational::from_integer(p.1.into())))
            .collect();
        let low = tilted.values().min().cloned().unwrap_or_else(Rational::zero);
        ConvexLifting { values: tilted.into_iter().map(|(p, v)| (p, v - &low)).collect() }
    }
}

/// Fan triangles over the bottom vertices of `tri`, each tagged with depth 0.
fn base_fan(tri: &LatticeTriangulation) -> Vec<([Point; 3], u32)> {
    let bottom: Vec<i64> =
        tri.vertices.iter().filter(|v| v.1 == 0).map(|v| v.0).collect::<BTreeSet<_>>().into_iter().collect();
    bottom.windows(2).map(|w| ([(w[0], 0), (w[1], 0), (0, 3)], 0)).collect()
}

/// Replays `history` on the fan and returns, per inserted point, the parent
/// triangle and its nesting depth (1 for a point inserted into a fan triangle).
fn replay(tri: &LatticeTriangulation, history: &[Refinement]) -> Result<Vec<([Point; 3], u32)>, LiftError> {
    let mut tris = base_fan(tri);
    let mut steps = Vec::with_capacity(history.len());
    for (n, r) in history.iter().enumerate() {
        let key = sorted_triangle(r.parent);
        let pos = tris
            .iter()
            .position(|(t, _)| sorted_triangle(*t) == key)
            .ok_or_else(|| LiftError::NotRefinementShaped(format!("step {n}: parent {:?} not present", r.parent)))?;
        let (t, d) = tris.remove(pos);
        if !strictly_inside(r.point, &t) {
            return Err(LiftError::NotRefinementShaped(format!("step {n}: {:?} not interior to {t:?}", r.point)));
        }
        let [a, b, c] = t;
        for child in [[a, b, r.point], [b, c, r.point], [c, a, r.point]] {
            tris.push((child, d + 1));
        }
        steps.push((t, d + 1));
    }
    let got: BTreeSet<[Point; 3]> = tris.iter().map(|(t, _)| sorted_triangle(*t)).collect();
    if got != tri.triangle_set() {
        return Err(LiftError::NotRefinementShaped("replayed triangles differ".into()));
    }
    Ok(steps)
}

/// `nu(i,0) = i^2`, `nu(0,3) = 0`, and each inserted point sits `c / 4^d` below
/// the plane of its parent, `d` being its nesting depth. `c` starts at 1 and is
/// halved until [`certify_convexity`] accepts.
pub fn build_lifting(tri: &LatticeTriangulation, history: &[Refinement]) -> Result<ConvexLifting, LiftError> {
    let steps = replay(tri, history)?;
    let mut c = Rational::one();
    for _ in 0..=SHRINK_CAP {
        let mut values: BTreeMap<Point, Rational> = BTreeMap::new();
        for v in tri.vertices.iter().filter(|v| v.1 == 0) {
            values.insert(*v, Rational::from_integer((v.0 * v.0).into()));
        }
        values.insert((0, 3), Rational::zero());
        for (r, (parent, depth)) in history.iter().zip(&steps) {
            let plane = interpolate(parent, [&values[&parent[0]], &values[&parent[1]], &values[&parent[2]]], r.point);
            let iota = &c / Rational::from_integer(BigInt::from(4).pow(*depth));
            values.insert(r.point, plane - iota);
        }
        let lifting = ConvexLifting { values };
        if certify_convexity(tri, &lifting) {
            return Ok(lifting);
        }
        c /= Rational::from_integer(2.into());
    }
    Err(LiftError::CertificationFailed(SHRINK_CAP))
}

/// Exact edge-by-edge test: across every interior edge, the plane of one
/// triangle passes strictly below the far vertex of the other. This makes the
/// lifting convex and non-linear on the union of any two triangles.
pub fn certify_convexity(tri: &LatticeTriangulation, lifting: &ConvexLifting) -> bool {
    let mut by_edge: BTreeMap<(Point, Point), Vec<[Point; 3]>> = BTreeMap::new();
    for t in tri.triangle_point_list() {
        for e in 0..3 {
            let (a, b) = (t[e], t[(e + 1) % 3]);
            by_edge.entry((a.min(b), a.max(b))).or_default().push(t);
        }
    }
    if tri.vertices.iter().any(|v| !lifting.values.contains_key(v)) {
        return false;
    }
    let nu = |p: &Point| &lifting.values[p];
    by_edge.iter().all(|((a, b), ts)| match ts.as_slice() {
        [_] => true,
        [t1, t2] => {
            let far = *t2.iter().find(|v| *v != a && *v != b).unwrap();
            interpolate(t1, [nu(&t1[0]), nu(&t1[1]), nu(&t1[2])], far) < *nu(&far)
        }
        _ => false,
    })
}
