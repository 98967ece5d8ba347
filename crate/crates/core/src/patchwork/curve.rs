//! Symmetrization to the quadrangle `Q`, curve tracing and classification of
//! the traced components.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::trigonal::RealScheme;

use super::geometry::Point;
use super::triangulation::LatticeTriangulation;

/// Signs `+1` / `-1` at triangulation vertices.
pub type SignDistribution = BTreeMap<Point, i8>;

/// The four reflected copies of a triangulation of `T`, covering
/// `Q = conv{(+-6k,0), (0,+-3)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricTriangulation {
    pub k: u32,
    pub vertices: Vec<Point>,
    pub signs: Vec<i8>,
    pub triangles: Vec<[usize; 3]>,
}

/// `s(e1 i, e2 j) = e1^i e2^j s(i, j)`.
pub fn reflected_sign(p: Point, sign: i8, e1: i64, e2: i64) -> i8 {
    let f1 = if e1 < 0 && p.0 % 2 != 0 { -1 } else { 1 };
    let f2 = if e2 < 0 && p.1 % 2 != 0 { -1 } else { 1 };
    sign * f1 * f2
}

pub fn symmetrize(tri: &LatticeTriangulation, signs: &SignDistribution) -> SymmetricTriangulation {
    let mut index: BTreeMap<Point, usize> = BTreeMap::new();
    let mut vertices = Vec::new();
    let mut vsigns = Vec::new();
    let mut triangles = Vec::new();
    for (e1, e2) in [(1, 1), (-1, 1), (1, -1), (-1, -1)] {
        let mut id = |p: Point| -> usize {
            let q = (e1 * p.0, e2 * p.1);
            *index.entry(q).or_insert_with(|| {
                vertices.push(q);
                vsigns.push(reflected_sign(p, signs[&p], e1, e2));
                vertices.len() - 1
            })
        };
        for t in tri.triangle_point_list() {
            triangles.push([id(t[0]), id(t[1]), id(t[2])]);
        }
    }
    SymmetricTriangulation { k: tri.k, vertices, signs: vsigns, triangles }
}

impl SymmetricTriangulation {
    pub fn sign_of(&self, p: Point) -> Option<i8> {
        self.vertices.iter().position(|&v| v == p).map(|i| self.signs[i])
    }
}

/// Point in doubled coordinates, so edge midpoints are integral.
pub type HalfPoint = (i64, i64);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub a: HalfPoint,
    pub b: HalfPoint,
    pub triangle: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub segments: Vec<usize>,
    /// Points of the component on the boundary of `Q`; they come in mirror pairs.
    pub boundary_points: Vec<HalfPoint>,
}

impl Component {
    /// Number of passages through the glued boundary (the fiber at infinity).
    pub fn crossings(&self) -> usize {
        self.boundary_points.len() / 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatchworkCurve {
    pub sym: SymmetricTriangulation,
    pub segments: Vec<Segment>,
    pub components: Vec<Component>,
}

fn on_boundary(m: HalfPoint, k: u32) -> bool {
    let k = k as i64;
    m.0.abs() + 2 * k * m.1.abs() == 12 * k
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.parent[ra] = rb;
    }
}

/// One segment per triangle with mixed signs, joining the midpoints of its two
/// mixed edges. Components are glued across the boundary of `Q` by
/// `(u, x) ~ (-u, x)`.
pub fn trace_curve(sym: &SymmetricTriangulation) -> PatchworkCurve {
    let mut segments = Vec::new();
    for (ti, t) in sym.triangles.iter().enumerate() {
        let mids: Vec<HalfPoint> = (0..3)
            .filter(|&e| sym.signs[t[e]] != sym.signs[t[(e + 1) % 3]])
            .map(|e| {
                let (p, q) = (sym.vertices[t[e]], sym.vertices[t[(e + 1) % 3]]);
                (p.0 + q.0, p.1 + q.1)
            })
            .collect();
        if let [a, b] = mids[..] {
            segments.push(Segment { a, b, triangle: ti });
        }
    }
    let mut ids: HashMap<HalfPoint, usize> = HashMap::new();
    for s in &segments {
        for m in [s.a, s.b] {
            let n = ids.len();
            ids.entry(m).or_insert(n);
        }
    }
    let mut uf = UnionFind::new(ids.len());
    for s in &segments {
        uf.union(ids[&s.a], ids[&s.b]);
    }
    for (&m, &i) in &ids {
        if on_boundary(m, sym.k) {
            let mirror = ids.get(&(-m.0, m.1)).copied().expect("boundary crossings come in mirror pairs");
            uf.union(i, mirror);
        }
    }
    let mut by_root: BTreeMap<usize, Component> = BTreeMap::new();
    for (si, s) in segments.iter().enumerate() {
        let r = uf.find(ids[&s.a]);
        by_root
            .entry(r)
            .or_insert_with(|| Component { segments: Vec::new(), boundary_points: Vec::new() })
            .segments
            .push(si);
    }
    let mut boundary: Vec<(&HalfPoint, &usize)> = ids.iter().filter(|(m, _)| on_boundary(**m, sym.k)).collect();
    boundary.sort();
    for (m, &i) in boundary {
        let r = uf.find(i);
        by_root.get_mut(&r).unwrap().boundary_points.push(*m);
    }
    let mut components: Vec<Component> = by_root.into_values().collect();
    components.sort_by(|a, b| a.segments.cmp(&b.segments));
    PatchworkCurve { sym: sym.clone(), segments, components }
}

/// Even-odd test of the lattice point `p` against a closed polygonal chain.
fn surrounds(curve: &PatchworkCurve, comp: &Component, p: Point) -> bool {
    let (px, py) = (2 * p.0, 2 * p.1);
    let mut inside = false;
    for &si in &comp.segments {
        let Segment { a, b, .. } = curve.segments[si];
        if (a.1 > py) != (b.1 > py) {
            // x-coordinate of the crossing compared with px, without division
            let lhs = (a.0 - px) * (b.1 - a.1) + (py - a.1) * (b.0 - a.0);
            let right = if b.1 > a.1 { lhs > 0 } else { lhs < 0 };
            if right {
                inside = !inside;
            }
        }
    }
    inside
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OvalInfo {
    pub component: usize,
    /// Vertices of the symmetric triangulation inside the oval, sorted.
    pub surrounded: Vec<Point>,
    pub sign: i8,
}

/// Oval counts with their groups kept apart (`plus` ovals surround `+`
/// vertices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OrientedScheme {
    pub plus: u32,
    pub minus: u32,
}

impl fmt::Display for OrientedScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}|{}>", self.plus, self.minus)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub pseudo_lines: usize,
    pub ovals: Vec<OvalInfo>,
}

impl Classification {
    pub fn oriented(&self) -> OrientedScheme {
        let plus = self.ovals.iter().filter(|o| o.sign > 0).count() as u32;
        OrientedScheme { plus, minus: self.ovals.len() as u32 - plus }
    }

    pub fn component_count(&self) -> usize {
        self.pseudo_lines + self.ovals.len()
    }

    pub fn scheme(&self) -> Result<RealScheme, ClassifyError> {
        match (self.pseudo_lines, self.ovals.len()) {
            (3, 0) => Ok(RealScheme::ThreePseudoLines),
            (1, _) => {
                let o = self.oriented();
                Ok(RealScheme::ovals(o.plus, o.minus))
            }
            (n, _) => Err(ClassifyError::PseudoLineCount(n)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("unclassifiable oval: {0}")]
    UnclassifiableOval(String),
    #[error("{0} components wrap the base direction, expected 1 or 3")]
    PseudoLineCount(usize),
}

/// Pseudo-lines are the components crossing the fiber at infinity an odd number
/// of times; every other component must be a bounded oval whose surrounded
/// vertices all carry one sign.
pub fn classify(curve: &PatchworkCurve) -> Result<Classification, ClassifyError> {
    let mut pseudo_lines = 0;
    let mut ovals = Vec::new();
    for (ci, comp) in curve.components.iter().enumerate() {
        let c = comp.crossings();
        if c % 2 == 1 {
            pseudo_lines += 1;
            continue;
        }
        if c > 0 {
            return Err(ClassifyError::UnclassifiableOval(format!(
                "component {ci} crosses the fiber at infinity {c} times"
            )));
        }
        let surrounded: Vec<Point> =
            curve.sym.vertices.iter().copied().filter(|&v| surrounds(curve, comp, v)).collect::<Vec<_>>();
        let mut surrounded = surrounded;
        surrounded.sort();
        let signs: Vec<i8> = surrounded.iter().map(|&v| curve.sym.sign_of(v).unwrap()).collect();
        let sign = match signs.first() {
            None => return Err(ClassifyError::UnclassifiableOval(format!("component {ci} surrounds no vertex"))),
            Some(&s) if signs.iter().all(|&x| x == s) => s,
            Some(_) => {
                return Err(ClassifyError::UnclassifiableOval(format!(
                    "component {ci} surrounds vertices of both signs"
                )))
            }
        };
        ovals.push(OvalInfo { component: ci, surrounded, sign });
    }
    ovals.sort_by(|a, b| a.surrounded.cmp(&b.surrounded));
    Ok(Classification { pseudo_lines, ovals })
}

pub fn classify_components(curve: &PatchworkCurve) -> Result<RealScheme, ClassifyError> {
    classify(curve)?.scheme()
}
