use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ClassifyError;

/// Closed connected surface. Ordering puts spheres first, then orientable
/// surfaces by genus, then non-orientable ones by cross-cap count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurfaceComponent {
    Sphere,
    /// `S_g`, `g >= 1`
    Orientable(u32),
    /// `V_q`, `q >= 1`
    NonOrientable(u32),
}

impl SurfaceComponent {
    pub fn euler(self) -> i64 {
        match self {
            SurfaceComponent::Sphere => 2,
            SurfaceComponent::Orientable(g) => 2 - 2 * g as i64,
            SurfaceComponent::NonOrientable(q) => 2 - q as i64,
        }
    }

    /// First mod-2 Betti number.
    pub fn h1(self) -> i64 {
        match self {
            SurfaceComponent::Sphere => 0,
            SurfaceComponent::Orientable(g) => 2 * g as i64,
            SurfaceComponent::NonOrientable(q) => q as i64,
        }
    }

    /// `S_0` and `V_0` are both spheres.
    pub fn orientable(g: u32) -> Self {
        if g == 0 {
            SurfaceComponent::Sphere
        } else {
            SurfaceComponent::Orientable(g)
        }
    }

    pub fn non_orientable(q: u32) -> Self {
        if q == 0 {
            SurfaceComponent::Sphere
        } else {
            SurfaceComponent::NonOrientable(q)
        }
    }
}

/// Nonempty multiset of components kept sorted, so equal types compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TopType {
    components: Vec<SurfaceComponent>,
}

impl TopType {
    pub fn new(mut components: Vec<SurfaceComponent>) -> Self {
        assert!(!components.is_empty(), "a topological type has at least one component");
        components.sort();
        TopType { components }
    }

    /// `a S` together with `rest`.
    pub fn with_spheres(a: u32, rest: &[SurfaceComponent]) -> Self {
        let mut c = vec![SurfaceComponent::Sphere; a as usize];
        c.extend_from_slice(rest);
        Self::new(c)
    }

    pub fn components(&self) -> &[SurfaceComponent] {
        &self.components
    }

    pub fn sphere_count(&self) -> usize {
        self.components.iter().filter(|c| **c == SurfaceComponent::Sphere).count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Betti {
    pub chi: i64,
    pub h_star: i64,
    pub h1: i64,
    pub ncomp: i64,
}

pub fn betti(t: &TopType) -> Betti {
    let chi = t.components.iter().map(|c| c.euler()).sum();
    let h1 = t.components.iter().map(|c| c.h1()).sum();
    let ncomp = t.components.len() as i64;
    Betti { chi, h_star: 2 * ncomp + h1, h1, ncomp }
}

impl fmt::Display for TopType {
    /// Spheres first as `aS`, then `S<g>` / `V<q>`, joined by `+`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.sphere_count() {
            0 => {}
            1 => parts.push("S".to_string()),
            n => parts.push(format!("{n}S")),
        }
        for c in &self.components {
            match c {
                SurfaceComponent::Sphere => {}
                SurfaceComponent::Orientable(g) => parts.push(format!("S{g}")),
                SurfaceComponent::NonOrientable(q) => parts.push(format!("V{q}")),
            }
        }
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for TopType {
    type Err = ClassifyError;

    /// Terms joined by `+` (or `⊔`); each term is an optional multiplicity
    /// followed by `S`, `S<g>` or `V<q>` with `q` even.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |why: &str| ClassifyError::Parse(s.to_string(), why.to_string());
        let mut comps = Vec::new();
        for term in s.split(['+', '\u{2294}']).map(str::trim) {
            let digits = term.chars().take_while(char::is_ascii_digit).count();
            let count: usize =
                if digits == 0 { 1 } else { term[..digits].parse().map_err(|_| err("bad multiplicity"))? };
            let body = &term[digits..];
            let index = |rest: &str| -> Result<Option<u32>, ClassifyError> {
                if rest.is_empty() {
                    Ok(None)
                } else {
                    rest.parse().map(Some).map_err(|_| err("bad index"))
                }
            };
            let comp = if let Some(rest) = body.strip_prefix('S') {
                SurfaceComponent::orientable(index(rest)?.unwrap_or(0))
            } else if let Some(rest) = body.strip_prefix('V') {
                match index(rest)? {
                    None | Some(0) => return Err(err("V needs a positive cross-cap count")),
                    Some(q) if q % 2 == 1 => return Err(err("odd cross-cap count is not supported")),
                    Some(q) => SurfaceComponent::NonOrientable(q),
                }
            } else {
                return Err(err("expected S or V"));
            };
            if count == 0 {
                return Err(err("zero multiplicity"));
            }
            comps.extend(std::iter::repeat_n(comp, count));
        }
        Ok(TopType::new(comps))
    }
}

impl Serialize for TopType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TopType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
