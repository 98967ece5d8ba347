use std::collections::BTreeSet;
use std::fmt;

use super::geometry::{
    area2, in_closed, in_newton_triangle, interiors_overlap, newton_corners, sorted_triangle, Point,
};

/// Lattice triangulation of the Newton triangle `T` of parameter `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeTriangulation {
    pub k: u32,
    pub vertices: Vec<Point>,
    pub triangles: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    BadIndex {
        triangle: usize,
    },
    Degenerate {
        triangle: usize,
    },
    VertexOutside(Point),
    MissingCorner(Point),
    DuplicateVertex(Point),
    /// Vertex lying on a triangle without being one of its corners.
    HangingVertex {
        vertex: Point,
        triangle: usize,
    },
    ImproperIntersection {
        first: usize,
        second: usize,
    },
    AreaMismatch {
        doubled: i64,
        expected: i64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BadIndex { triangle } => write!(f, "triangle {triangle}: vertex index out of range"),
            Violation::Degenerate { triangle } => write!(f, "triangle {triangle}: zero area"),
            Violation::VertexOutside(p) => write!(f, "vertex outside: {p:?}"),
            Violation::MissingCorner(p) => write!(f, "corner {p:?} is not a vertex"),
            Violation::DuplicateVertex(p) => write!(f, "vertex {p:?} listed twice"),
            Violation::HangingVertex { vertex, triangle } => {
                write!(f, "vertex {vertex:?} lies on triangle {triangle} without being a corner of it")
            }
            Violation::ImproperIntersection { first, second } => {
                write!(f, "improper intersection: triangles {first} and {second}")
            }
            Violation::AreaMismatch { doubled, expected } => {
                write!(f, "area mismatch: doubled area {doubled}, expected {expected}")
            }
        }
    }
}

impl LatticeTriangulation {
    /// Builds the vertex list (sorted) from the triangles' corners.
    pub fn from_triangles(k: u32, tris: &[[Point; 3]]) -> Self {
        let vertices: Vec<Point> = tris.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let index = |p: &Point| vertices.binary_search(p).unwrap();
        let triangles = tris.iter().map(|t| [index(&t[0]), index(&t[1]), index(&t[2])]).collect();
        LatticeTriangulation { k, vertices, triangles }
    }

    /// Fan from `(0,3)` over the given bottom-edge abscissas (must include 0 and 6k).
    pub fn fan(k: u32, bottom: &[i64]) -> Self {
        let mut b = bottom.to_vec();
        b.sort_unstable();
        b.dedup();
        let tris: Vec<[Point; 3]> = b.windows(2).map(|w| [(w[0], 0), (w[1], 0), (0, 3)]).collect();
        Self::from_triangles(k, &tris)
    }

    pub fn triangle_points(&self, t: usize) -> [Point; 3] {
        self.triangles[t].map(|v| self.vertices[v])
    }

    pub fn triangle_point_list(&self) -> Vec<[Point; 3]> {
        (0..self.triangles.len()).map(|t| self.triangle_points(t)).collect()
    }

    /// Triangles as a set of sorted point triples, independent of indexing.
    pub fn triangle_set(&self) -> BTreeSet<[Point; 3]> {
        self.triangle_point_list().into_iter().map(sorted_triangle).collect()
    }

    pub fn index_of(&self, p: Point) -> Option<usize> {
        self.vertices.iter().position(|&v| v == p)
    }

    /// Structural check; reports every violation found instead of stopping at
    /// the first.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let mut out = Vec::new();
        let n = self.vertices.len();
        let mut seen = BTreeSet::new();
        for &v in &self.vertices {
            if !seen.insert(v) {
                out.push(Violation::DuplicateVertex(v));
            }
            if !in_newton_triangle(v, self.k) {
                out.push(Violation::VertexOutside(v));
            }
        }
        for c in newton_corners(self.k) {
            if !seen.contains(&c) {
                out.push(Violation::MissingCorner(c));
            }
        }
        let mut good = Vec::new();
        for (ti, t) in self.triangles.iter().enumerate() {
            if t.iter().any(|&v| v >= n) {
                out.push(Violation::BadIndex { triangle: ti });
            } else if area2(&self.triangle_points(ti)) == 0 {
                out.push(Violation::Degenerate { triangle: ti });
            } else {
                good.push(ti);
            }
        }
        let doubled: i64 = good.iter().map(|&t| area2(&self.triangle_points(t))).sum();
        let expected = 18 * self.k as i64;
        if doubled != expected {
            out.push(Violation::AreaMismatch { doubled, expected });
        }
        for (x, &a) in good.iter().enumerate() {
            let ta = self.triangle_points(a);
            for &b in &good[x + 1..] {
                if interiors_overlap(&ta, &self.triangle_points(b)) {
                    out.push(Violation::ImproperIntersection { first: a, second: b });
                }
            }
            for &v in &self.vertices {
                if !ta.contains(&v) && in_closed(v, &ta) {
                    out.push(Violation::HangingVertex { vertex: v, triangle: a });
                }
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fan_is_valid() {
        for k in 1..=3 {
            let bottom: Vec<i64> = (0..=6 * k as i64).collect();
            assert_eq!(LatticeTriangulation::fan(k, &bottom).validate(), Ok(()));
        }
    }

    #[test]
    fn overlapping_triangles_are_reported() {
        let mut t = LatticeTriangulation::fan(1, &[0, 6]);
        t.triangles.push(t.triangles[0]);
        let errs = t.validate().unwrap_err();
        assert!(errs.iter().any(|e| matches!(e, Violation::ImproperIntersection { .. })));
        assert!(errs.iter().any(|e| e.to_string().contains("improper intersection")));
    }

    #[test]
    fn outside_vertex_is_reported() {
        let t = LatticeTriangulation::from_triangles(1, &[[(0, 0), (6, 0), (0, 3)], [(6, 0), (7, 0), (0, 3)]]);
        let errs = t.validate().unwrap_err();
        assert!(errs.contains(&Violation::VertexOutside((7, 0))));
        assert!(errs.iter().any(|e| e.to_string().starts_with("vertex outside")));
    }

    #[test]
    fn hanging_vertex_and_missing_area() {
        // (3,0) sits on the bottom edge of the single triangle
        let mut t = LatticeTriangulation::fan(1, &[0, 6]);
        t.vertices.push((3, 0));
        let errs = t.validate().unwrap_err();
        assert!(errs.iter().any(|e| matches!(e, Violation::HangingVertex { vertex: (3, 0), .. })));
        let t = LatticeTriangulation::from_triangles(1, &[[(0, 0), (3, 0), (0, 3)]]);
        let errs = t.validate().unwrap_err();
        assert!(errs.contains(&Violation::MissingCorner((6, 0))));
        assert!(errs.contains(&Violation::AreaMismatch { doubled: 9, expected: 18 }));
    }
}
