//! Integer lattice geometry on the Newton triangle and its symmetric quadrangle.

/// Lattice point `(i, j)` standing for the monomial `u^i x^j`.
pub type Point = (i64, i64);

/// Twice the signed area of `abc`.
pub fn cross(a: Point, b: Point, c: Point) -> i64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

pub fn area2(t: &[Point; 3]) -> i64 {
    cross(t[0], t[1], t[2]).abs()
}

/// Strictly inside the (nondegenerate) triangle.
pub fn strictly_inside(p: Point, t: &[Point; 3]) -> bool {
    let s = cross(t[0], t[1], t[2]).signum();
    (0..3).all(|e| s * cross(t[e], t[(e + 1) % 3], p) > 0)
}

/// In the closed triangle.
pub fn in_closed(p: Point, t: &[Point; 3]) -> bool {
    let s = cross(t[0], t[1], t[2]).signum();
    (0..3).all(|e| s * cross(t[e], t[(e + 1) % 3], p) >= 0)
}

/// Whether the open interiors of two nondegenerate triangles meet. Two convex
/// polygons have disjoint interiors iff some edge line weakly separates them.
pub fn interiors_overlap(a: &[Point; 3], b: &[Point; 3]) -> bool {
    let separated_by_edge_of = |x: &[Point; 3], y: &[Point; 3]| {
        let s = cross(x[0], x[1], x[2]).signum();
        (0..3).any(|e| {
            let (p, q) = (x[e], x[(e + 1) % 3]);
            y.iter().all(|&v| s * cross(p, q, v) <= 0)
        })
    };
    !(separated_by_edge_of(a, b) || separated_by_edge_of(b, a))
}

/// Corners of `T = conv{(0,0), (6k,0), (0,3)}`.
pub fn newton_corners(k: u32) -> [Point; 3] {
    [(0, 0), (6 * k as i64, 0), (0, 3)]
}

/// Whether `p` lies in `T`: `i, j >= 0` and `i + 2k j <= 6k`.
pub fn in_newton_triangle(p: Point, k: u32) -> bool {
    let k = k as i64;
    p.0 >= 0 && p.1 >= 0 && p.0 + 2 * k * p.1 <= 6 * k
}

/// Triangle with its vertices in sorted order, for set comparisons.
pub fn sorted_triangle(mut t: [Point; 3]) -> [Point; 3] {
    t.sort();
    t
}

/// Exact barycentric interpolation: the value at `p` of the affine function
/// taking `values` at the vertices of `t`.
pub fn interpolate<R>(t: &[Point; 3], values: [&R; 3], p: Point) -> R
where
    R: Clone + num_traits::Num + num_traits::FromPrimitive,
{
    let total = cross(t[0], t[1], t[2]);
    let w = [cross(p, t[1], t[2]), cross(t[0], p, t[2]), cross(t[0], t[1], p)];
    let mut acc = R::zero();
    for (wi, v) in w.iter().zip(values) {
        acc = acc + v.clone() * R::from_i64(*wi).unwrap();
    }
    acc / R::from_i64(total).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::{int, rational};

    #[test]
    fn inside_tests() {
        let t = [(0, 0), (4, 0), (0, 4)];
        assert!(strictly_inside((1, 1), &t));
        assert!(!strictly_inside((2, 0), &t));
        assert!(in_closed((2, 0), &t));
        assert!(!in_closed((3, 3), &t));
    }

    #[test]
    fn overlap_tests() {
        let a = [(0, 0), (2, 0), (0, 2)];
        assert!(!interiors_overlap(&a, &[(2, 0), (0, 2), (2, 2)]));
        assert!(interiors_overlap(&a, &[(1, 0), (3, 0), (1, 2)]));
        assert!(interiors_overlap(&a, &a));
        assert!(!interiors_overlap(&a, &[(5, 5), (6, 5), (5, 6)]));
    }

    #[test]
    fn newton_triangle_membership() {
        assert!(in_newton_triangle((4, 1), 1));
        assert!(!in_newton_triangle((5, 1), 1));
        assert!(in_newton_triangle((2, 2), 1));
        assert!(!in_newton_triangle((0, 4), 1));
    }

    #[test]
    fn interpolation_is_exact() {
        let t = [(0, 0), (3, 0), (0, 3)];
        // f = i + 2j + 1/3
        let vals = [rational(1, 3), rational(10, 3), rational(19, 3)];
        assert_eq!(interpolate(&t, [&vals[0], &vals[1], &vals[2]], (1, 1)), rational(10, 3));
        assert_eq!(interpolate(&t, [&int(0), &int(9), &int(0)], (1, 1)), int(3));
    }
}
