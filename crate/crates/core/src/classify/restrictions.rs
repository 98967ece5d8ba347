use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::toptype::{SurfaceComponent, TopType};
use super::ClassifyError;

/// Numerical invariants of the complex surface, all determined by `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KInvariants {
    pub k: u32,
    pub b_total: i64,
    pub b2: i64,
    pub tau: i64,
    pub tau_minus: i64,
    pub chi_top: i64,
}

impl KInvariants {
    pub fn new(k: u32) -> Self {
        let k64 = k as i64;
        KInvariants {
            k,
            b_total: 12 * k64,
            b2: 12 * k64 - 2,
            tau: -8 * k64,
            tau_minus: 10 * k64 - 1,
            chi_top: 12 * k64,
        }
    }
}

/// `(chi, h*)` of the real part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagramPoint {
    pub chi: i64,
    pub h_star: i64,
}

impl DiagramPoint {
    pub fn new(chi: i64, h_star: i64) -> Self {
        DiagramPoint { chi, h_star }
    }

    /// Number of components.
    pub fn ncomp(&self) -> i64 {
        (self.chi + self.h_star) / 4
    }

    pub fn h1(&self) -> i64 {
        (self.h_star - self.chi) / 2
    }
}

fn admissible(chi: i64, h: i64, k: i64) -> bool {
    if chi % 2 != 0 || h % 2 != 0 {
        return false;
    }
    if !(4..=12 * k).contains(&h) || !(2 - 10 * k..=10 * k - 2).contains(&chi) {
        return false;
    }
    if chi > h - 4 || chi < 4 - h {
        return false;
    }
    if (chi + h) % 4 != 0 || !(1..=5 * k).contains(&((chi + h) / 4)) {
        return false;
    }
    let h1 = (h - chi) / 2;
    if h1 % 2 != 0 || !(2..=10 * k).contains(&h1) {
        return false;
    }
    let d = (12 * k - h) / 2;
    let r = (chi - 8 * k).rem_euclid(16);
    match d {
        0 => r == 0,
        1 => r == 2 || r == 14,
        _ => true,
    }
}

/// All points passing the arithmetic restrictions for parameter `k`.
pub fn allowed_points(k: u32) -> BTreeSet<DiagramPoint> {
    let k = k as i64;
    let mut out = BTreeSet::new();
    for h in (4..=12 * k).step_by(2) {
        for chi in (2 - 10 * k..=10 * k - 2).step_by(2) {
            if admissible(chi, h, k) {
                out.insert(DiagramPoint::new(chi, h));
            }
        }
    }
    out
}

/// One spherical-plus-one-surface type per point (`S_l` for even `k`, `V_{2l}`
/// for odd `k`, with `a` spheres), and the two-torus type at `(0, 8)`.
pub fn point_to_types(pt: DiagramPoint, k: u32) -> Result<BTreeSet<TopType>, ClassifyError> {
    if !admissible(pt.chi, pt.h_star, k as i64) {
        return Err(ClassifyError::NotAllowed { chi: pt.chi, h_star: pt.h_star, k });
    }
    let a = ((pt.chi + pt.h_star) / 4 - 1) as u32;
    let l = ((pt.h_star - pt.chi) / 4) as u32;
    let even = k.is_multiple_of(2);
    let big = if even { SurfaceComponent::orientable(l) } else { SurfaceComponent::non_orientable(2 * l) };
    let mut out = BTreeSet::from([TopType::with_spheres(a, &[big])]);
    if pt == DiagramPoint::new(0, 8) {
        out.insert(two_handles(k));
    }
    Ok(out)
}

/// `S1 + S1` for even `k`, `V2 + V2` for odd `k`.
pub(super) fn two_handles(k: u32) -> TopType {
    let c = if k.is_multiple_of(2) { SurfaceComponent::Orientable(1) } else { SurfaceComponent::NonOrientable(2) };
    TopType::new(vec![c, c])
}
