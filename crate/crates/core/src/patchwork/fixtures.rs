//! Fixture files and the shipped local fixtures.
//!
//! Format, one item per line, `#` starting a comment:
//! * vertex: `i1 i2 sign` with sign `+` or `-`
//! * triangle: `v v v` (indices into the vertex lines, in order)
//! * refinement: `a b c i1 i2` (parent triangle by vertex indices, then the
//!   inserted point)

use std::collections::BTreeMap;
use std::path::Path;

use thiserror::Error;

use super::construction::PatchworkConstruction;
use super::geometry::Point;
use super::lifting::Refinement;
use super::triangulation::LatticeTriangulation;

/// A fixture before placement: signs and triangles in local coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalFixture {
    pub vertices: Vec<(Point, i8)>,
    pub triangles: Vec<[usize; 3]>,
    pub history: Vec<Refinement>,
}

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("fixture does not fit: {0}")]
    Placement(String),
}

fn syntax(line: usize, msg: impl Into<String>) -> FixtureError {
    FixtureError::Syntax { line: line + 1, msg: msg.into() }
}

pub fn parse_fixture(text: &str) -> Result<LocalFixture, FixtureError> {
    let mut vertices = Vec::new();
    let mut triangles = Vec::new();
    let mut history = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let tok: Vec<&str> = line.split_whitespace().collect();
        let int = |s: &str| s.parse::<i64>().map_err(|_| syntax(n, format!("not an integer: {s:?}")));
        let idx = |s: &str| -> Result<usize, FixtureError> {
            let i = s.parse::<usize>().map_err(|_| syntax(n, format!("not an index: {s:?}")))?;
            if i >= vertices.len() {
                return Err(syntax(n, format!("vertex index {i} out of range")));
            }
            Ok(i)
        };
        match tok.as_slice() {
            [i1, i2, s @ ("+" | "-")] => {
                if !triangles.is_empty() || !history.is_empty() {
                    return Err(syntax(n, "vertex lines must come first"));
                }
                vertices.push(((int(i1)?, int(i2)?), if *s == "+" { 1 } else { -1 }));
            }
            [a, b, c] => {
                if !history.is_empty() {
                    return Err(syntax(n, "triangle lines must precede refinement lines"));
                }
                triangles.push([idx(a)?, idx(b)?, idx(c)?]);
            }
            [a, b, c, i1, i2] => {
                let parent = [idx(a)?, idx(b)?, idx(c)?].map(|i| vertices[i].0);
                history.push(Refinement { parent, point: (int(i1)?, int(i2)?) });
            }
            _ => return Err(syntax(n, format!("unrecognised line {line:?}"))),
        }
    }
    Ok(LocalFixture { vertices, triangles, history })
}

pub fn format_fixture(f: &LocalFixture) -> String {
    let mut out = String::new();
    for ((i, j), s) in &f.vertices {
        out.push_str(&format!("{i} {j} {}\n", if *s > 0 { '+' } else { '-' }));
    }
    for [a, b, c] in &f.triangles {
        out.push_str(&format!("{a} {b} {c}\n"));
    }
    let index: BTreeMap<Point, usize> = f.vertices.iter().enumerate().map(|(n, (p, _))| (*p, n)).collect();
    for r in &f.history {
        let [a, b, c] = r.parent.map(|p| index[&p]);
        out.push_str(&format!("{a} {b} {c} {} {}\n", r.point.0, r.point.1));
    }
    out
}

impl LocalFixture {
    pub fn from_construction(c: &PatchworkConstruction) -> Self {
        let tri = &c.triangulation;
        LocalFixture {
            vertices: tri.vertices.iter().map(|v| (*v, c.signs[v])).collect(),
            triangles: tri.triangles.clone(),
            history: c.history.clone(),
        }
    }

    pub fn triangle_points(&self) -> Vec<[Point; 3]> {
        self.triangles.iter().map(|t| t.map(|v| self.vertices[v].0)).collect()
    }

    /// Reads a whole construction; `k` is recovered from the bottom-right corner.
    pub fn into_construction(self) -> Result<PatchworkConstruction, FixtureError> {
        let max_i = self.vertices.iter().map(|(p, _)| p.0).max().unwrap_or(0);
        if max_i <= 0 || max_i % 6 != 0 {
            return Err(FixtureError::Placement(format!("largest u-exponent {max_i} is not a positive multiple of 6")));
        }
        let k = (max_i / 6) as u32;
        let tris = self.triangle_points();
        let triangulation = LatticeTriangulation::from_triangles(k, &tris);
        Ok(PatchworkConstruction { triangulation, signs: self.vertices.into_iter().collect(), history: self.history })
    }
}

/// The fixtures used by the construction families. Each lives in local
/// coordinates: the `T` pieces on `[(1,0),(5,0),(0,3)]`, the connector on
/// `[(5,0),(7,0),(0,3)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureSet {
    /// `T` piece whose four copies carry four `+` ovals.
    pub big_plus: LocalFixture,
    /// `T` piece whose four copies carry four `-` ovals.
    pub big_minus: LocalFixture,
    /// Connector piece: two ovals, one of each sign.
    pub connector: LocalFixture,
    /// Replacement for a `big_minus` piece trading three `-` ovals for one `+`.
    pub modified: LocalFixture,
}

pub const FIXTURE_FILES: [&str; 4] = ["big_plus.txt", "big_minus.txt", "connector.txt", "modified.txt"];

impl FixtureSet {
    pub fn builtin() -> Self {
        let parse = |s: &str| parse_fixture(s).expect("shipped fixtures parse");
        FixtureSet {
            big_plus: parse(include_str!("../../fixtures/big_plus.txt")),
            big_minus: parse(include_str!("../../fixtures/big_minus.txt")),
            connector: parse(include_str!("../../fixtures/connector.txt")),
            modified: parse(include_str!("../../fixtures/modified.txt")),
        }
    }

    pub fn load_dir(dir: &Path) -> Result<Self, FixtureError> {
        let read = |name: &str| -> Result<LocalFixture, FixtureError> {
            let path = dir.join(name);
            let text = std::fs::read_to_string(&path)
                .map_err(|source| FixtureError::Io { path: path.display().to_string(), source })?;
            parse_fixture(&text)
        };
        Ok(FixtureSet {
            big_plus: read(FIXTURE_FILES[0])?,
            big_minus: read(FIXTURE_FILES[1])?,
            connector: read(FIXTURE_FILES[2])?,
            modified: read(FIXTURE_FILES[3])?,
        })
    }

    pub fn write_dir(&self, dir: &Path) -> std::io::Result<()> {
        let all = [&self.big_plus, &self.big_minus, &self.connector, &self.modified];
        for (name, f) in FIXTURE_FILES.iter().zip(all) {
            std::fs::write(dir.join(name), format_fixture(f))?;
        }
        Ok(())
    }
}
