//! SVG picture of a patchwork: the quadrangle `Q`, the symmetrized
//! triangulation, vertex signs and the traced curve.

use std::fmt::Write;

use super::curve::{Classification, HalfPoint, PatchworkCurve};

const UNIT_X: f64 = 30.0;
const UNIT_Y: f64 = 60.0;
const MARGIN: f64 = 20.0;

const PLUS: &str = "#c0392b";
const MINUS: &str = "#2471a3";

fn f6(x: f64) -> String {
    format!("{x:.6}")
}

struct Frame {
    k: f64,
}

impl Frame {
    fn x(&self, i: f64) -> f64 {
        MARGIN + (i + 6.0 * self.k) * UNIT_X
    }

    fn y(&self, j: f64) -> f64 {
        MARGIN + (3.0 - j) * UNIT_Y
    }

    fn half(&self, p: HalfPoint) -> (String, String) {
        (f6(self.x(p.0 as f64 / 2.0)), f6(self.y(p.1 as f64 / 2.0)))
    }
}

/// Ovals are coloured by the sign they surround when `classification` is given;
/// everything else is drawn in black.
pub fn render_patchwork_svg(curve: &PatchworkCurve, classification: Option<&Classification>) -> String {
    let sym = &curve.sym;
    let fr = Frame { k: sym.k as f64 };
    let (w, h) = (12.0 * fr.k * UNIT_X + 2.0 * MARGIN, 6.0 * UNIT_Y + 2.0 * MARGIN);
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        f6(w),
        f6(h),
        f6(w),
        f6(h)
    )
    .unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();

    let n = 6.0 * fr.k;
    let corners = [(n, 0.0), (0.0, 3.0), (-n, 0.0), (0.0, -3.0)];
    let pts: Vec<String> = corners.iter().map(|&(i, j)| format!("{},{}", f6(fr.x(i)), f6(fr.y(j)))).collect();
    writeln!(s, r#"<polygon points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#, pts.join(" ")).unwrap();

    s.push_str(r##"<g stroke="#b3b6b7" stroke-width="0.5" fill="none">"##);
    s.push('\n');
    for t in &sym.triangles {
        let pts: Vec<String> = t
            .iter()
            .map(|&v| format!("{},{}", f6(fr.x(sym.vertices[v].0 as f64)), f6(fr.y(sym.vertices[v].1 as f64))))
            .collect();
        writeln!(s, r#"<polygon points="{}"/>"#, pts.join(" ")).unwrap();
    }
    s.push_str("</g>\n");

    let mut colour = vec!["black"; curve.components.len()];
    if let Some(cl) = classification {
        for o in &cl.ovals {
            colour[o.component] = if o.sign > 0 { PLUS } else { MINUS };
        }
    }
    for (ci, comp) in curve.components.iter().enumerate() {
        writeln!(s, r#"<g stroke="{}" stroke-width="2.5" stroke-linecap="round" data-component="{ci}">"#, colour[ci])
            .unwrap();
        for &si in &comp.segments {
            let seg = &curve.segments[si];
            let ((x1, y1), (x2, y2)) = (fr.half(seg.a), fr.half(seg.b));
            writeln!(s, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#).unwrap();
        }
        s.push_str("</g>\n");
    }

    for (v, sign) in sym.vertices.iter().zip(&sym.signs) {
        let (fill, label) = if *sign > 0 { (PLUS, "+") } else { (MINUS, "-") };
        writeln!(
            s,
            r#"<circle cx="{}" cy="{}" r="3.000000" fill="{fill}"><title>({}, {}) {label}</title></circle>"#,
            f6(fr.x(v.0 as f64)),
            f6(fr.y(v.1 as f64)),
            v.0,
            v.1
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}
