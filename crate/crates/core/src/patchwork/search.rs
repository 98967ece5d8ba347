//! Bounded search for the local fixtures. Candidates are refinement-shaped
//! triangulations of a piece's frame with a sign on every vertex; the first
//! candidate in a fixed total order that passes the acceptance predicates wins.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use super::collapse::collapse_to;
use super::construction::PatchworkConstruction;
use super::curve::OrientedScheme;
use super::families::assemble;
use super::fixtures::{FixtureSet, LocalFixture};
use super::geometry::{sorted_triangle, strictly_inside, Point};
use super::lifting::Refinement;
use super::oracle::patchwork_oracle;

/// Frame `[bottom-left, bottom-right, apex]`, the optional bottom points by
/// abscissa, the points that may be inserted, and the insertion budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpace {
    pub frame: [Point; 3],
    pub bottom: Vec<i64>,
    pub interior: Vec<Point>,
    pub max_refinements: usize,
    /// Signs on the frame corners, in frame order.
    pub frame_signs: [i8; 3],
}

impl SearchSpace {
    /// Every lattice point strictly inside `[(1,0),(5,0),(0,3)]` is a candidate.
    pub fn big_piece() -> Self {
        SearchSpace {
            frame: [(1, 0), (5, 0), (0, 3)],
            bottom: vec![2, 3, 4],
            interior: vec![(1, 1), (2, 1), (3, 1), (1, 2)],
            max_refinements: 4,
            frame_signs: [1, 1, 1],
        }
    }

    pub fn connector() -> Self {
        SearchSpace {
            frame: [(5, 0), (7, 0), (0, 3)],
            bottom: vec![6],
            interior: vec![(4, 1), (2, 2)],
            max_refinements: 2,
            frame_signs: [1, 1, 1],
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Also require [`patchwork_oracle`] agreement (slow for the connector,
    /// whose check needs `k = 2`).
    pub oracle: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("no {0} candidate passes the acceptance predicates")]
    NotFound(&'static str),
}

/// One refinement-shaped triangulation, stored in its sort key order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Shape {
    vertex_count: usize,
    refinements: usize,
    vertices: Vec<Point>,
    triangles: Vec<[Point; 3]>,
    history: Vec<([Point; 3], Point)>,
}

fn fan(frame: &[Point; 3], bottom: &[i64]) -> Vec<[Point; 3]> {
    let mut xs: Vec<i64> = vec![frame[0].0, frame[1].0];
    xs.extend(bottom);
    xs.sort_unstable();
    xs.windows(2).map(|w| sorted_triangle([(w[0], 0), (w[1], 0), frame[2]])).collect()
}

type Shapes = BTreeMap<BTreeSet<[Point; 3]>, Vec<([Point; 3], Point)>>;

fn grow(tris: &mut Vec<[Point; 3]>, history: &mut Vec<([Point; 3], Point)>, space: &SearchSpace, out: &mut Shapes) {
    let key: BTreeSet<[Point; 3]> = tris.iter().copied().collect();
    match out.get_mut(&key) {
        Some(h) if *h <= *history => return,
        Some(h) => *h = history.clone(),
        None => {
            out.insert(key, history.clone());
        }
    }
    if history.len() == space.max_refinements {
        return;
    }
    for &p in &space.interior {
        if history.iter().any(|(_, q)| *q == p) {
            continue;
        }
        let Some(at) = tris.iter().position(|t| strictly_inside(p, t)) else { continue };
        let parent = tris.swap_remove(at);
        let [a, b, c] = parent;
        tris.extend([[a, b, p], [b, c, p], [c, a, p]].map(sorted_triangle));
        history.push((parent, p));
        grow(tris, history, space, out);
        history.pop();
        tris.truncate(tris.len() - 3);
        tris.push(parent);
        let last = tris.len() - 1;
        tris.swap(at, last);
    }
}

fn shapes(space: &SearchSpace) -> Vec<Shape> {
    let mut out = BTreeMap::new();
    for mask in 0..1u32 << space.bottom.len() {
        let chosen: Vec<i64> =
            space.bottom.iter().enumerate().filter(|(n, _)| mask >> n & 1 == 1).map(|(_, x)| *x).collect();
        let mut tris = fan(&space.frame, &chosen);
        grow(&mut tris, &mut Vec::new(), space, &mut out);
    }
    let mut v: Vec<Shape> = out
        .into_iter()
        .map(|(tris, history)| {
            let vertices: Vec<Point> = tris.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();
            Shape {
                vertex_count: vertices.len(),
                refinements: history.len(),
                vertices,
                triangles: tris.into_iter().collect(),
                history,
            }
        })
        .collect();
    v.sort();
    v
}

fn fixture(shape: &Shape, signs: &[i8]) -> LocalFixture {
    let index: BTreeMap<Point, usize> = shape.vertices.iter().enumerate().map(|(n, p)| (*p, n)).collect();
    LocalFixture {
        vertices: shape.vertices.iter().copied().zip(signs.iter().copied()).collect(),
        triangles: shape.triangles.iter().map(|t| t.map(|p| index[&p])).collect(),
        history: shape.history.iter().map(|(parent, point)| Refinement { parent: *parent, point: *point }).collect(),
    }
}

/// Number of candidates in `space`: shapes times free sign patterns.
pub fn candidate_count(space: &SearchSpace) -> usize {
    shapes(space).iter().map(|s| 1usize << (s.vertex_count - 3)).sum()
}

/// The least candidate of `space` accepted by `accept`. Shapes are ordered by
/// vertex count, then number of refinements (fewer nested insertions keep the
/// lifting's denominators small), then vertex list, triangles and history; sign patterns on the
/// non-frame vertices (sorted) run from all `-` to all `+`.
pub fn search(space: &SearchSpace, mut accept: impl FnMut(&LocalFixture) -> bool) -> Option<LocalFixture> {
    for shape in shapes(space) {
        let free: Vec<usize> =
            (0..shape.vertices.len()).filter(|n| !space.frame.contains(&shape.vertices[*n])).collect();
        let mut signs = vec![0i8; shape.vertices.len()];
        for (n, p) in shape.vertices.iter().enumerate() {
            if let Some(c) = space.frame.iter().position(|q| q == p) {
                signs[n] = space.frame_signs[c];
            }
        }
        for bits in 0..1u32 << free.len() {
            for (b, &n) in free.iter().enumerate() {
                // most significant bit first, so the order is lexicographic
                signs[n] = if bits >> (free.len() - 1 - b) & 1 == 1 { 1 } else { -1 };
            }
            let f = fixture(&shape, &signs);
            if accept(&f) {
                return Some(f);
            }
        }
    }
    None
}

/// Every oval surrounds exactly one vertex, there is one pseudo-line, and the
/// oriented counts are `(plus, minus)`.
fn shaped_like(c: &PatchworkConstruction, plus: u32, minus: u32) -> bool {
    let Ok(cl) = c.classification() else { return false };
    let o = cl.oriented();
    cl.pseudo_lines == 1 && (o.plus, o.minus) == (plus, minus) && cl.ovals.iter().all(|ov| ov.surrounded.len() == 1)
}

/// Every oriented scheme below the construction's is reachable by collapsing.
fn collapsible(c: &PatchworkConstruction, plus: u32, minus: u32) -> bool {
    (0..=plus).all(|a| (0..=minus).all(|b| collapse_to(c, OrientedScheme { plus: a, minus: b }).is_ok()))
}

fn oracle_agrees(c: &PatchworkConstruction) -> bool {
    patchwork_oracle(c).is_ok()
}

/// A `T` piece whose copies carry four ovals of sign `eps` in the `k = 1`
/// M-curve, each removable by collapsing.
pub fn search_big_piece(eps: i8, opts: SearchOptions) -> Result<LocalFixture, SearchError> {
    let (plus, minus) = if eps > 0 { (4, 0) } else { (0, 4) };
    search(&SearchSpace::big_piece(), |f| {
        let Ok(c) = assemble(1, f, |_| f) else { return false };
        shaped_like(&c, plus, minus) && collapsible(&c, plus, minus) && (!opts.oracle || oracle_agrees(&c))
    })
    .ok_or(SearchError::NotFound(if eps > 0 { "big + piece" } else { "big - piece" }))
}

/// A connector giving `<1+4 lambda | 9-4 lambda>` (oriented) for `k = 2` and
/// every `lambda`.
pub fn search_connector(
    big_plus: &LocalFixture,
    big_minus: &LocalFixture,
    opts: SearchOptions,
) -> Result<LocalFixture, SearchError> {
    search(&SearchSpace::connector(), |f| {
        let all = (0..=2u32).all(|lambda| {
            assemble(2, f, |l| if l < lambda { big_plus } else { big_minus })
                .is_ok_and(|c| shaped_like(&c, 1 + 4 * lambda, 9 - 4 * lambda))
        });
        all && (!opts.oracle
            || assemble(2, f, |l| if l < 1 { big_plus } else { big_minus }).is_ok_and(|c| oracle_agrees(&c)))
    })
    .ok_or(SearchError::NotFound("connector"))
}

/// The replacement for the last `-` piece: oriented `<k+4 lambda | 5k-4-4 lambda>`
/// for `k = 1, 2` and every `lambda < k`, with both ovals of the `k = 1` curve
/// removable independently.
pub fn search_modified(
    big_plus: &LocalFixture,
    big_minus: &LocalFixture,
    connector: &LocalFixture,
    opts: SearchOptions,
) -> Result<LocalFixture, SearchError> {
    search(&SearchSpace::big_piece(), |f| {
        let pick = |k: u32, lambda: u32| {
            move |l: u32| {
                if l < lambda {
                    big_plus
                } else if l == k - 1 {
                    f
                } else {
                    big_minus
                }
            }
        };
        let all = (1..=2u32).all(|k| {
            (0..k).all(|lambda| {
                assemble(k, connector, pick(k, lambda))
                    .is_ok_and(|c| shaped_like(&c, k + 4 * lambda, 5 * k - 4 - 4 * lambda))
            })
        });
        let Ok(c) = assemble(1, connector, pick(1, 0)) else { return false };
        all && collapsible(&c, 1, 1) && (!opts.oracle || oracle_agrees(&c))
    })
    .ok_or(SearchError::NotFound("modified piece"))
}

/// Runs the four searches in dependency order.
pub fn search_fixture_set(opts: SearchOptions) -> Result<FixtureSet, SearchError> {
    let big_plus = search_big_piece(1, opts)?;
    let big_minus = search_big_piece(-1, opts)?;
    let connector = search_connector(&big_plus, &big_minus, opts)?;
    let modified = search_modified(&big_plus, &big_minus, &connector, opts)?;
    Ok(FixtureSet { big_plus, big_minus, connector, modified })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_are_valid_refinements() {
        let all = shapes(&SearchSpace::connector());
        // fan with or without (6,0), then (4,1) and/or (2,2) where they fit
        assert!(all.len() >= 4);
        for s in &all {
            let area: i64 = s.triangles.iter().map(|t| super::super::geometry::area2(t).abs()).sum();
            assert_eq!(area, 6);
            assert_eq!(s.history.len() + 3 + s.vertices.iter().filter(|p| p.1 == 0).count() - 2, s.vertex_count);
        }
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all);
    }

    #[test]
    fn search_order_is_lexicographic() {
        let mut seen = Vec::new();
        search(&SearchSpace::connector(), |f| {
            seen.push(f.vertices.clone());
            seen.len() == 3
        });
        // the smallest shape is the bare frame with no free vertex
        assert_eq!(seen[0], vec![((0, 3), 1), ((5, 0), 1), ((7, 0), 1)]);
    }
}
