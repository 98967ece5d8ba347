use std::collections::BTreeSet;

use crate::trigonal::RealScheme;

use super::restrictions::{allowed_points, point_to_types, two_handles};
use super::toptype::{betti, SurfaceComponent, TopType};
use super::ClassifyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MorseOptions {
    /// Allow `S1 -> S` and `V2 -> S`.
    pub genus_zero_contractions: bool,
}

impl Default for MorseOptions {
    fn default() -> Self {
        MorseOptions { genus_zero_contractions: true }
    }
}

/// The M-list (`a = k+4l-1`, `l = 5k-4l`), the (M-2)-list (`a = k+4l`,
/// `l = 5k-4l-3`) and the two-handle type, as `a S` plus `S_l` or `V_{2l}`.
pub fn extremal_types(k: u32) -> Vec<TopType> {
    let big = |l: u32| {
        if k.is_multiple_of(2) {
            SurfaceComponent::orientable(l)
        } else {
            SurfaceComponent::non_orientable(2 * l)
        }
    };
    let mut out = Vec::new();
    for lambda in 0..=k {
        out.push(TopType::with_spheres(k + 4 * lambda - 1, &[big(5 * k - 4 * lambda)]));
    }
    for lambda in 0..k {
        out.push(TopType::with_spheres(k + 4 * lambda, &[big(5 * k - 4 * lambda - 3)]));
    }
    out.push(two_handles(k));
    out
}

pub fn morse_moves(t: &TopType) -> BTreeSet<TopType> {
    morse_moves_with(t, MorseOptions::default())
}

/// Every type one simplification away: drop a sphere (keeping the real part
/// nonempty), or remove one handle from a non-spherical component.
pub fn morse_moves_with(t: &TopType, opts: MorseOptions) -> BTreeSet<TopType> {
    let comps = t.components();
    let mut out = BTreeSet::new();
    for (i, c) in comps.iter().enumerate() {
        let rest = || comps.iter().enumerate().filter(move |(j, _)| *j != i).map(|(_, c)| *c);
        let replacement = match *c {
            SurfaceComponent::Sphere => {
                if comps.len() >= 2 {
                    out.insert(TopType::new(rest().collect()));
                }
                continue;
            }
            SurfaceComponent::Orientable(g) if g >= 2 || opts.genus_zero_contractions => {
                SurfaceComponent::orientable(g - 1)
            }
            SurfaceComponent::NonOrientable(q) if q >= 3 || (q == 2 && opts.genus_zero_contractions) => {
                SurfaceComponent::non_orientable(q - 2)
            }
            _ => continue,
        };
        out.insert(TopType::new(rest().chain([replacement]).collect()));
    }
    out
}

pub fn morse_closure(k: u32) -> BTreeSet<TopType> {
    morse_closure_with(k, MorseOptions::default())
}

/// Everything reachable from the extremal types, restricted to total first
/// Betti number at least 2.
pub fn morse_closure_with(k: u32, opts: MorseOptions) -> BTreeSet<TopType> {
    let mut seen: BTreeSet<TopType> = BTreeSet::new();
    let mut stack = extremal_types(k);
    while let Some(t) = stack.pop() {
        if seen.insert(t.clone()) {
            stack.extend(morse_moves_with(&t, opts).into_iter().filter(|m| !seen.contains(m)));
        }
    }
    seen.into_iter().filter(|t| betti(t).h1 >= 2).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCheck {
    pub k: u32,
    pub holds: bool,
    pub closure_size: usize,
    pub only_in_closure: Vec<TopType>,
    pub only_in_diagram: Vec<TopType>,
}

/// Compares the Morse closure of the extremal types with the types attached
/// to the allowed diagram points.
pub fn verify_theorem(k: u32) -> TheoremCheck {
    let closure = morse_closure(k);
    let diagram: BTreeSet<TopType> = allowed_points(k)
        .into_iter()
        .flat_map(|p| point_to_types(p, k).expect("allowed points map to types"))
        .collect();
    let only_in_closure: Vec<TopType> = closure.difference(&diagram).cloned().collect();
    let only_in_diagram: Vec<TopType> = diagram.difference(&closure).cloned().collect();
    TheoremCheck {
        k,
        holds: only_in_closure.is_empty() && only_in_diagram.is_empty(),
        closure_size: closure.len(),
        only_in_closure,
        only_in_diagram,
    }
}

/// Types of the double covers branched along a curve with scheme `s`, one per
/// real structure: `a S + S_{b+1}` (even `k`) or `a S + V_{2b+2}` (odd `k`),
/// and the same with `a`, `b` exchanged.
pub fn cover_type(s: RealScheme, k: u32) -> Vec<TopType> {
    let one = |a: u32, b: u32| {
        let big = if k.is_multiple_of(2) {
            SurfaceComponent::orientable(b + 1)
        } else {
            SurfaceComponent::non_orientable(2 * b + 2)
        };
        TopType::with_spheres(a, &[big])
    };
    match s {
        RealScheme::ThreePseudoLines => vec![two_handles(k)],
        RealScheme::Ovals { a, b } => vec![one(a, b), one(b, a)],
    }
}

/// Whether no type of the closure simplifies to `t`.
pub fn is_extremal(t: &TopType, k: u32) -> Result<bool, ClassifyError> {
    let closure = morse_closure(k);
    if !closure.contains(t) {
        return Err(ClassifyError::NotInFamily(t.clone(), k));
    }
    Ok(!closure.iter().any(|c| morse_moves(c).contains(t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TopType {
        s.parse().unwrap()
    }

    fn set(v: &[&str]) -> BTreeSet<TopType> {
        v.iter().map(|s| t(s)).collect()
    }

    #[test]
    fn extremal_lists() {
        assert_eq!(extremal_types(1), vec![t("V10"), t("4S+V2"), t("S+V4"), t("V2+V2")]);
        let e2 = extremal_types(2);
        assert_eq!(e2.len(), 6);
        assert_eq!(e2[0], t("S+S10"));
        assert_eq!(e2[4], t("6S+S3"));
    }

    #[test]
    fn move_examples() {
        assert_eq!(morse_moves(&t("S2+S")), set(&["S1+S", "S2"]));
        assert!(morse_moves(&t("S")).is_empty());
        assert_eq!(morse_moves(&t("V2+V2")), set(&["S+V2"]));
        let strict = MorseOptions { genus_zero_contractions: false };
        assert!(morse_moves_with(&t("V2+V2"), strict).is_empty());
        assert_eq!(morse_moves_with(&t("S1+S"), strict), set(&["S1"]));
    }

    #[test]
    fn closure_examples() {
        let c = morse_closure(1);
        assert!(c.contains(&t("V8")));
        assert!(c.contains(&t("S+V2")));
        assert!(morse_moves(&t("S+V4")).contains(&t("S+V2")));
        assert!(morse_moves(&t("V2+V2")).contains(&t("S+V2")));
        assert!(!c.contains(&t("S")));
    }

    #[test]
    fn genus_zero_flag_does_not_change_small_closures() {
        for k in 1..=4 {
            let strict = morse_closure_with(k, MorseOptions { genus_zero_contractions: false });
            assert_eq!(strict, morse_closure(k), "k={k}");
        }
    }

    #[test]
    fn theorem_small_k() {
        for k in 1..=3 {
            let r = verify_theorem(k);
            assert!(r.holds, "{r:?}");
        }
    }

    #[test]
    fn covers() {
        assert_eq!(cover_type(RealScheme::ovals(2, 3), 2), vec![t("2S+S4"), t("3S+S3")]);
        assert_eq!(cover_type(RealScheme::ovals(0, 4), 1), vec![t("V10"), t("4S+V2")]);
        assert_eq!(cover_type(RealScheme::ThreePseudoLines, 1), vec![t("V2+V2")]);
        assert_eq!(cover_type(RealScheme::ThreePseudoLines, 2), vec![t("S1+S1")]);
    }

    #[test]
    fn extremality() {
        assert!(is_extremal(&t("V10"), 1).unwrap());
        assert!(!is_extremal(&t("V8"), 1).unwrap());
        assert!(is_extremal(&t("V2+V2"), 1).unwrap());
        assert!(matches!(is_extremal(&t("S"), 1), Err(ClassifyError::NotInFamily(..))));
        for k in 1..=3 {
            for e in extremal_types(k) {
                assert!(is_extremal(&e, k).unwrap(), "{e} k={k}");
            }
        }
    }
}
