use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::morse::{extremal_types, is_extremal};
use super::restrictions::{allowed_points, point_to_types, DiagramPoint};
use super::toptype::{betti, TopType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointKind {
    /// Maximal `h*`, carrying an extremal type.
    M,
    /// `h* = 12k - 4` carrying an extremal type.
    MMinus2,
    /// The point `(0, 8)`, which carries two types.
    Special,
    Plain,
}

impl PointKind {
    fn glyph(self) -> char {
        match self {
            PointKind::M => 'M',
            PointKind::MMinus2 => 'E',
            PointKind::Special => '@',
            PointKind::Plain => 'o',
        }
    }

    fn colour(self) -> &'static str {
        match self {
            PointKind::M => "#c0392b",
            PointKind::MMinus2 => "#2471a3",
            PointKind::Special => "#229954",
            PointKind::Plain => "#7f8c8d",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramEntry {
    pub chi: i64,
    pub h_star: i64,
    pub kind: PointKind,
    pub types: Vec<TopType>,
    /// The members of `types` that are extremal.
    pub extremal: Vec<TopType>,
}

pub fn diagram_entries(k: u32) -> Vec<DiagramEntry> {
    let ext = extremal_types(k);
    let h_max = 12 * k as i64;
    let mut out = Vec::new();
    for pt in allowed_points(k) {
        let types: Vec<TopType> = point_to_types(pt, k).expect("allowed").into_iter().collect();
        let extremal: Vec<TopType> =
            types.iter().filter(|t| ext.contains(t) && is_extremal(t, k).unwrap_or(false)).cloned().collect();
        let kind = if pt == DiagramPoint::new(0, 8) {
            PointKind::Special
        } else if !extremal.is_empty() && pt.h_star == h_max {
            PointKind::M
        } else if !extremal.is_empty() && pt.h_star == h_max - 4 {
            PointKind::MMinus2
        } else {
            PointKind::Plain
        };
        out.push(DiagramEntry { chi: pt.chi, h_star: pt.h_star, kind, types, extremal });
    }
    out
}

fn lookup(entries: &[DiagramEntry], chi: i64, h: i64) -> Option<&DiagramEntry> {
    entries.iter().find(|e| e.chi == chi && e.h_star == h)
}

/// Text version of the diamond: `h*` grows upwards, `chi` to the right.
pub fn render_ascii(k: u32) -> String {
    let entries = diagram_entries(k);
    let k64 = k as i64;
    let chi_max = 10 * k64 - 2;
    let mut s = String::new();
    writeln!(s, "allowed (chi, h*) for k = {k}").unwrap();
    for h in (4..=12 * k64).rev().step_by(2) {
        write!(s, "{h:>4} |").unwrap();
        for chi in (-chi_max..=chi_max).step_by(2) {
            s.push(lookup(&entries, chi, h).map_or('.', |e| e.kind.glyph()));
        }
        s.push('\n');
    }
    let width = (chi_max + 1) as usize;
    writeln!(s, "     +{}", "-".repeat(width)).unwrap();
    writeln!(s, "      chi from {} to {} in steps of 2", -chi_max, chi_max).unwrap();
    writeln!(s, "legend: M extremal M-point, E extremal (M-2)-point, @ the point (0,8), o other allowed point")
        .unwrap();
    writeln!(s).unwrap();
    writeln!(s, "extremal types:").unwrap();
    for t in extremal_types(k) {
        let b = betti(&t);
        writeln!(s, "  {t}  (chi={}, h*={})", b.chi, b.h_star).unwrap();
    }
    writeln!(s).unwrap();
    writeln!(s, "points:").unwrap();
    for e in &entries {
        let types: Vec<String> =
            e.types.iter().map(|t| if e.extremal.contains(t) { format!("{t}*") } else { t.to_string() }).collect();
        writeln!(s, "  ({:>4}, {:>3})  {}", e.chi, e.h_star, types.join(", ")).unwrap();
    }
    writeln!(s, "(* marks extremal types)").unwrap();
    s
}

fn f6(x: f64) -> String {
    format!("{x:.6}")
}

/// SVG version: same points, kinds and extremal list as [`render_ascii`].
pub fn render_svg(k: u32) -> String {
    let entries = diagram_entries(k);
    let k64 = k as i64;
    let chi_max = (10 * k64 - 2) as f64;
    let h_max = (12 * k64) as f64;
    let (cell, margin) = (14.0_f64, 40.0_f64);
    let plot_w = chi_max * cell + 2.0 * margin;
    let plot_h = (h_max - 4.0) / 2.0 * cell + 2.0 * margin;
    let ext = extremal_types(k);
    let height = plot_h + 20.0 * (ext.len() as f64 + 2.0);
    let x_of = |chi: i64| margin + (chi as f64 + chi_max) / 2.0 * cell;
    let y_of = |h: i64| margin + (h_max - h as f64) / 2.0 * cell;
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        f6(plot_w),
        f6(height),
        f6(plot_w),
        f6(height)
    )
    .unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    writeln!(
        s,
        r#"<text x="{}" y="{}" font-size="12">allowed (chi, h*) for k = {k}</text>"#,
        f6(margin),
        f6(margin / 2.0)
    )
    .unwrap();
    writeln!(
        s,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="0.5"/>"#,
        f6(x_of(0)),
        f6(y_of(12 * k64)),
        f6(x_of(0)),
        f6(y_of(4))
    )
    .unwrap();
    for e in &entries {
        let title: Vec<String> = e.types.iter().map(|t| t.to_string()).collect();
        writeln!(
            s,
            r#"<circle cx="{}" cy="{}" r="{}" fill="{}" data-kind="{}"><title>({}, {}) {}</title></circle>"#,
            f6(x_of(e.chi)),
            f6(y_of(e.h_star)),
            f6(if e.kind == PointKind::Plain { 3.0 } else { 5.0 }),
            e.kind.colour(),
            e.kind.glyph(),
            e.chi,
            e.h_star,
            title.join(", ")
        )
        .unwrap();
    }
    let mut y = plot_h;
    writeln!(s, r#"<text x="{}" y="{}" font-size="12">extremal types:</text>"#, f6(margin), f6(y)).unwrap();
    for t in &ext {
        y += 20.0;
        writeln!(s, r#"<text x="{}" y="{}" font-size="12" class="extremal">{t}</text>"#, f6(margin + 10.0), f6(y))
            .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_marks() {
        let e = diagram_entries(1);
        let special = e.iter().find(|e| e.kind == PointKind::Special).unwrap();
        assert_eq!((special.chi, special.h_star), (0, 8));
        assert_eq!(special.types.len(), 2);
        assert_eq!(e.iter().filter(|e| e.kind == PointKind::M).count(), 2);
    }

    #[test]
    fn k8_has_nine_m_points() {
        assert_eq!(diagram_entries(8).iter().filter(|e| e.kind == PointKind::M).count(), 9);
        let grid: usize = render_ascii(8).lines().filter(|l| l.contains('|')).map(|l| l.matches('M').count()).sum();
        assert_eq!(grid, 9);
    }

    #[test]
    fn ascii_and_svg_agree() {
        let a = render_ascii(1);
        let s = render_svg(1);
        for t in extremal_types(1) {
            assert!(a.contains(&t.to_string()));
            assert!(s.contains(&format!(">{t}</text>")));
        }
        assert_eq!(s.matches("<circle").count(), diagram_entries(1).len());
    }
}
