//! Removing ovals by flipping the sign of the vertex they surround.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use super::construction::PatchworkConstruction;
use super::curve::{ClassifyError, OrientedScheme, OvalInfo};
use super::geometry::Point;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CollapseError {
    #[error("oval {oval} surrounds {surrounded} vertices, expected exactly one")]
    NotIsolated { oval: usize, surrounded: usize },
    #[error("no oval with index {0}")]
    NoSuchOval(usize),
    #[error("flipping also changed other ovals: expected {expected}, got {got}")]
    Entangled { expected: OrientedScheme, got: OrientedScheme },
    #[error("no admissible set of ovals leaves {0}")]
    Unreachable(OrientedScheme),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

fn base_point(p: Point) -> Point {
    (p.0.abs(), p.1.abs())
}

/// Flips the base sign under each target oval's single surrounded vertex (the
/// flip acts on all four symmetric copies), then re-classifies and checks that
/// exactly the targets disappeared. `targets` index the ovals of
/// [`PatchworkConstruction::classification`].
pub fn collapse_ovals(c: &PatchworkConstruction, targets: &[usize]) -> Result<PatchworkConstruction, CollapseError> {
    let before = c.classification()?;
    let targets: BTreeSet<usize> = targets.iter().copied().collect();
    let mut flips = BTreeSet::new();
    for &t in &targets {
        let oval = before.ovals.get(t).ok_or(CollapseError::NoSuchOval(t))?;
        if oval.surrounded.len() != 1 {
            return Err(CollapseError::NotIsolated { oval: t, surrounded: oval.surrounded.len() });
        }
        flips.insert(base_point(oval.surrounded[0]));
    }
    let out = c.with_flipped(flips);
    let after = out.classification()?;
    let key = |o: &OvalInfo| (o.surrounded.clone(), o.sign);
    let expected: Vec<_> =
        before.ovals.iter().enumerate().filter(|(i, _)| !targets.contains(i)).map(|(_, o)| key(o)).collect();
    let got: Vec<_> = after.ovals.iter().map(key).collect();
    if after.pseudo_lines != before.pseudo_lines || got != expected {
        let plus = expected.iter().filter(|(_, s)| *s > 0).count() as u32;
        return Err(CollapseError::Entangled {
            expected: OrientedScheme { plus, minus: expected.len() as u32 - plus },
            got: after.oriented(),
        });
    }
    Ok(out)
}

/// Finds a set of ovals whose collapse leaves `target` (oriented) and applies
/// it. Ovals sharing a base vertex are flipped together, so candidates are
/// unions of such groups, tried smallest first.
pub fn collapse_to(
    c: &PatchworkConstruction,
    target: OrientedScheme,
) -> Result<(PatchworkConstruction, Vec<usize>), CollapseError> {
    let cl = c.classification()?;
    let now = cl.oriented();
    if target.plus > now.plus || target.minus > now.minus {
        return Err(CollapseError::Unreachable(target));
    }
    let (need_plus, need_minus) = (now.plus - target.plus, now.minus - target.minus);
    let mut groups: BTreeMap<Point, Vec<usize>> = BTreeMap::new();
    for (i, o) in cl.ovals.iter().enumerate() {
        if o.surrounded.len() == 1 {
            groups.entry(base_point(o.surrounded[0])).or_default().push(i);
        }
    }
    let groups: Vec<Vec<usize>> = groups.into_values().collect();
    if groups.len() > 24 {
        return Err(CollapseError::Unreachable(target));
    }
    let mut masks: Vec<u32> = (0..1u32 << groups.len()).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        let chosen: Vec<usize> =
            (0..groups.len()).filter(|g| mask >> g & 1 == 1).flat_map(|g| groups[g].iter().copied()).collect();
        let plus = chosen.iter().filter(|&&i| cl.ovals[i].sign > 0).count() as u32;
        if plus != need_plus || chosen.len() as u32 - plus != need_minus {
            continue;
        }
        if let Ok(out) = collapse_ovals(c, &chosen) {
            return Ok((out, chosen));
        }
    }
    Err(CollapseError::Unreachable(target))
}
