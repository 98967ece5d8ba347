//! The M-curve and (M-2)-curve families assembled from local fixtures.

use std::collections::BTreeMap;

use thiserror::Error;

use super::construction::{ConstructionError, PatchworkConstruction};
use super::fixtures::{FixtureSet, LocalFixture};
use super::geometry::Point;
use super::lifting::Refinement;
use super::triangulation::LatticeTriangulation;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("lambda = {lambda} out of range 0..={max} for k = {k}")]
    OutOfRange { k: u32, lambda: u32, max: u32 },
    #[error("k must be positive")]
    BadK,
    #[error("pieces disagree on the sign at {0:?}")]
    SignConflict(Point),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

/// `(i, j) -> (i + 2 shift (3 - j), j)`: unimodular, fixes `(0,3)`, moves the
/// bottom edge by `6 shift` and keeps the parity of `i`.
pub fn shear(p: Point, shift: i64) -> Point {
    (p.0 + 2 * shift * (3 - p.1), p.1)
}

#[derive(Default)]
struct Assembly {
    tris: Vec<[Point; 3]>,
    signs: BTreeMap<Point, i8>,
    history: Vec<Refinement>,
}

impl Assembly {
    fn sign(&mut self, p: Point, s: i8) -> Result<(), FamilyError> {
        match self.signs.insert(p, s) {
            Some(old) if old != s => Err(FamilyError::SignConflict(p)),
            _ => Ok(()),
        }
    }

    fn place(&mut self, f: &LocalFixture, shift: i64) -> Result<(), FamilyError> {
        for (p, s) in &f.vertices {
            self.sign(shear(*p, shift), *s)?;
        }
        self.tris.extend(f.triangle_points().into_iter().map(|t| t.map(|p| shear(p, shift))));
        self.history.extend(
            f.history
                .iter()
                .map(|r| Refinement { parent: r.parent.map(|p| shear(p, shift)), point: shear(r.point, shift) }),
        );
        Ok(())
    }

    fn finish(self, k: u32) -> Result<PatchworkConstruction, FamilyError> {
        let c = PatchworkConstruction {
            triangulation: LatticeTriangulation::from_triangles(k, &self.tris),
            signs: self.signs,
            history: self.history,
        };
        c.validate()?;
        Ok(c)
    }
}

/// Skeleton: corner triangles `[(0,0),(1,0),(0,3)]` and `[(6k-1,0),(6k,0),(0,3)]`
/// with `-` at `(0,0)` and `(6k,0)`; big pieces on `[(6l+1,0),(6l+5,0),(0,3)]`
/// for `l < k`, connectors on `[(6l-1,0),(6l+1,0),(0,3)]` for `0 < l < k`.
/// `pick(l)` chooses the big piece.
pub(crate) fn assemble<'a>(
    k: u32,
    connector: &LocalFixture,
    pick: impl Fn(u32) -> &'a LocalFixture,
) -> Result<PatchworkConstruction, FamilyError> {
    if k == 0 {
        return Err(FamilyError::BadK);
    }
    let n = 6 * k as i64;
    let mut a = Assembly::default();
    a.tris.push([(0, 0), (1, 0), (0, 3)]);
    a.tris.push([(n - 1, 0), (n, 0), (0, 3)]);
    a.sign((0, 0), -1)?;
    a.sign((n, 0), -1)?;
    for l in 0..k {
        a.place(pick(l), l as i64)?;
    }
    for l in 1..k {
        a.place(connector, l as i64 - 1)?;
    }
    a.finish(k)
}

/// M-curve with real scheme `<k-1+4 lambda | 5k-1-4 lambda>`: the first `lambda`
/// big pieces carry `+` ovals, the others `-` ovals.
pub fn mcurve_family(fixtures: &FixtureSet, k: u32, lambda: u32) -> Result<PatchworkConstruction, FamilyError> {
    if lambda > k {
        return Err(FamilyError::OutOfRange { k, lambda, max: k });
    }
    assemble(k, &fixtures.connector, |l| if l < lambda { &fixtures.big_plus } else { &fixtures.big_minus })
}

/// (M-2)-curve with real scheme `<k+4 lambda | 5k-4-4 lambda>`: the M-curve with
/// its last big piece (a `-` piece, since `lambda < k`) replaced.
pub fn m2curve_family(fixtures: &FixtureSet, k: u32, lambda: u32) -> Result<PatchworkConstruction, FamilyError> {
    if k == 0 {
        return Err(FamilyError::BadK);
    }
    if lambda >= k {
        return Err(FamilyError::OutOfRange { k, lambda, max: k - 1 });
    }
    assemble(k, &fixtures.connector, |l| {
        if l < lambda {
            &fixtures.big_plus
        } else if l == k - 1 {
            &fixtures.modified
        } else {
            &fixtures.big_minus
        }
    })
}
