use std::collections::BTreeSet;
use std::fmt::Write;
use std::path::{Path, PathBuf};

use ellipscheme::classify::{
    allowed_points, cover_type, diagram_entries, extremal_types, point_to_types, render_ascii, render_svg,
    verify_theorem, DiagramPoint, KInvariants, TopType,
};
use ellipscheme::exactpoly::rational::{format_rational, int, parse_rational};
use ellipscheme::patchwork::svg::render_patchwork_svg;
use ellipscheme::patchwork::{
    collapse_to, emit_t_polynomial, format_fixture, m2curve_family, mcurve_family, FixtureSet, LocalFixture,
    OrientedScheme, PatchworkConstruction, TPolynomialRequest,
};
use ellipscheme::trigonal::{analyze as analyze_curve, check_generic, depress, format_curve, parse_curve, RealScheme};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::{Family, Format};

pub const FIXTURE_DIR_VAR: &str = "ELLIPSCHEME_FIXTURE_DIR";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    /// `report` is printed to stdout before the message.
    #[error("{message}")]
    Domain { message: String, report: Option<String> },
    #[error("{message}")]
    Internal { message: String, report: Option<String> },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain { .. } => 2,
            CliError::Internal { .. } => 3,
        }
    }

    pub fn stdout(&self) -> Option<&str> {
        match self {
            CliError::Usage(_) => None,
            CliError::Domain { report, .. } | CliError::Internal { report, .. } => report.as_deref(),
        }
    }
}

fn domain(e: impl ToString) -> CliError {
    CliError::Domain { message: e.to_string(), report: None }
}

fn json_text(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("output serializes");
    s.push('\n');
    s
}

fn joined(types: &[TopType]) -> String {
    types.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(", ")
}

pub fn classify(k: u32, format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Ascii => render_ascii(k),
        Format::Svg => render_svg(k),
        Format::Json => json_text(&json!({
            "k": k,
            "invariants": KInvariants::new(k),
            "extremal": extremal_types(k),
            "points": diagram_entries(k),
        })),
    })
}

pub struct ConstructArgs {
    pub k: u32,
    pub family: Family,
    pub lambda: u32,
    pub collapse: Option<String>,
    pub emit: Option<String>,
    pub out: PathBuf,
    pub format: Format,
}

fn fixtures() -> Result<FixtureSet, CliError> {
    match std::env::var_os(FIXTURE_DIR_VAR) {
        Some(dir) => FixtureSet::load_dir(Path::new(&dir)).map_err(domain),
        None => Ok(FixtureSet::builtin()),
    }
}

fn parse_pair(s: &str) -> Result<OrientedScheme, CliError> {
    let bad = || CliError::Usage(format!("--collapse expects two counts `a,b`, got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok(OrientedScheme { plus: a.trim().parse().map_err(|_| bad())?, minus: b.trim().parse().map_err(|_| bad())? })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| domain(format!("cannot write {}: {e}", path.display())))
}

#[derive(Serialize)]
struct ConstructReport {
    k: u32,
    family: &'static str,
    lambda: u32,
    components: usize,
    scheme: RealScheme,
    oriented: [u32; 2],
    covers: Vec<TopType>,
    fixture: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    collapsed: Option<CollapseReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    curve: Option<String>,
}

#[derive(Serialize)]
struct CollapseReport {
    removed: Vec<usize>,
    scheme: RealScheme,
    oriented: [u32; 2],
    covers: Vec<TopType>,
    fixture: String,
}

fn scheme_of(c: &PatchworkConstruction) -> Result<(RealScheme, [u32; 2], usize), CliError> {
    let cl = c.classification().map_err(domain)?;
    let o = cl.oriented();
    Ok((cl.scheme().map_err(domain)?, [o.plus, o.minus], cl.component_count()))
}

pub fn construct(args: &ConstructArgs) -> Result<String, CliError> {
    let target = args.collapse.as_deref().map(parse_pair).transpose()?;
    let t = match &args.emit {
        Some(s) => {
            let t = parse_rational(s).map_err(|e| CliError::Usage(format!("--emit: {e}")))?;
            if t <= int(0) {
                return Err(CliError::Usage(format!("--emit needs a positive t, got {s}")));
            }
            Some(t)
        }
        None => None,
    };
    let set = fixtures()?;
    let (name, c) = match args.family {
        Family::M => ("m", mcurve_family(&set, args.k, args.lambda)),
        Family::M2 => ("m2", m2curve_family(&set, args.k, args.lambda)),
    };
    let c = c.map_err(domain)?;
    let stem = format!("{name}_k{}_l{}", args.k, args.lambda);
    let (scheme, oriented, components) = scheme_of(&c)?;
    let fixture = args.out.join(format!("{stem}.txt"));
    write_file(&fixture, &format_fixture(&LocalFixture::from_construction(&c)))?;

    let mut last = c.clone();
    let collapsed = match target {
        Some(target) => {
            let (d, removed) = collapse_to(&c, target).map_err(domain)?;
            let (s, o, _) = scheme_of(&d)?;
            let path = args.out.join(format!("{stem}_c{}_{}.txt", target.plus, target.minus));
            write_file(&path, &format_fixture(&LocalFixture::from_construction(&d)))?;
            last = d;
            Some(CollapseReport {
                removed,
                scheme: s,
                oriented: o,
                covers: cover_type(s, args.k),
                fixture: path.display().to_string(),
            })
        }
        None => None,
    };

    let curve = match t {
        Some(t) => {
            let lifting = last.lifting().map_err(domain)?.balanced(args.k);
            let raw = emit_t_polynomial(&TPolynomialRequest {
                triangulation: &last.triangulation,
                signs: &last.signs,
                lifting: &lifting,
                t: t.clone(),
            });
            let curve = depress(&raw, args.k).map_err(domain)?;
            let tag = format_rational(&t).replace('/', "_");
            let suffix = target.map_or(String::new(), |s| format!("_c{}_{}", s.plus, s.minus));
            let path = args.out.join(format!("{stem}{suffix}_t{tag}.curve"));
            write_file(&path, &format_curve(&curve))?;
            Some(path.display().to_string())
        }
        None => None,
    };

    if args.format == Format::Svg {
        let cl = last.classification().map_err(domain)?;
        return Ok(render_patchwork_svg(&last.curve(), Some(&cl)));
    }
    let report = ConstructReport {
        k: args.k,
        family: name,
        lambda: args.lambda,
        components,
        scheme,
        oriented,
        covers: cover_type(scheme, args.k),
        fixture: fixture.display().to_string(),
        collapsed,
        curve,
    };
    if args.format == Format::Json {
        return Ok(json_text(&report));
    }
    let mut s = String::new();
    writeln!(s, "construction: {name} k={} lambda={}", args.k, args.lambda).unwrap();
    writeln!(s, "components: {}", report.components).unwrap();
    // groups printed in construction order; the scheme itself is unordered
    writeln!(s, "scheme: <{}|{}>", oriented[0], oriented[1]).unwrap();
    writeln!(s, "covers: {}", joined(&report.covers)).unwrap();
    writeln!(s, "fixture: {}", report.fixture).unwrap();
    if let Some(c) = &report.collapsed {
        let removed: Vec<String> = c.removed.iter().map(|i| i.to_string()).collect();
        writeln!(s, "collapsed: <{}|{}> (removed ovals {})", c.oriented[0], c.oriented[1], removed.join(", ")).unwrap();
        writeln!(s, "collapsed covers: {}", joined(&c.covers)).unwrap();
        writeln!(s, "collapsed fixture: {}", c.fixture).unwrap();
    }
    if let Some(p) = &report.curve {
        writeln!(s, "curve: {p}").unwrap();
    }
    Ok(s)
}

#[derive(Serialize)]
struct AnalyzeReport {
    k: u32,
    delta_degree: Option<usize>,
    degree_ok: bool,
    squarefree_ok: bool,
    coprime_ok: bool,
    generic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    delta_roots: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    folds: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    scheme: Option<RealScheme>,
    #[serde(skip_serializing_if = "Option::is_none")]
    covers: Option<Vec<TopType>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn render_analysis(r: &AnalyzeReport, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(json_text(r)),
        Format::Svg => Err(CliError::Usage("analyze has no svg output".into())),
        Format::Ascii => {
            let mut s = String::new();
            writeln!(s, "k: {}", r.k).unwrap();
            let deg = r.delta_degree.map_or("-".to_string(), |d| d.to_string());
            writeln!(s, "deg delta: {deg} (expected {})", 12 * r.k).unwrap();
            writeln!(s, "degree_ok: {}", r.degree_ok).unwrap();
            writeln!(s, "squarefree_ok: {}", r.squarefree_ok).unwrap();
            writeln!(s, "coprime_ok: {}", r.coprime_ok).unwrap();
            writeln!(s, "generic: {}", r.generic).unwrap();
            if let Some(n) = r.delta_roots {
                writeln!(s, "delta roots: {n}").unwrap();
            }
            if let Some(n) = r.folds {
                writeln!(s, "folds: {n}").unwrap();
            }
            if let Some(x) = &r.scheme {
                writeln!(s, "scheme: {x}").unwrap();
            }
            if let Some(c) = &r.covers {
                writeln!(s, "covers: {}", joined(c)).unwrap();
            }
            if let Some(e) = &r.error {
                writeln!(s, "error: {e}").unwrap();
            }
            Ok(s)
        }
    }
}

pub fn analyze(file: &Path, format: Format) -> Result<String, CliError> {
    if format == Format::Svg {
        return Err(CliError::Usage("analyze has no svg output".into()));
    }
    let text = std::fs::read_to_string(file).map_err(|e| domain(format!("cannot read {}: {e}", file.display())))?;
    let curve = parse_curve(&text).map_err(domain)?;
    let g = check_generic(&curve);
    let mut report = AnalyzeReport {
        k: curve.k(),
        delta_degree: g.delta.degree(),
        degree_ok: g.degree_ok,
        squarefree_ok: g.squarefree_ok,
        coprime_ok: g.coprime_ok,
        generic: g.is_generic(),
        delta_roots: None,
        folds: None,
        scheme: None,
        covers: None,
        error: None,
    };
    if !report.generic {
        report.error = Some(format!("curve is not generic: {}", g.summary()));
        let out = render_analysis(&report, format)?;
        return Err(CliError::Domain { message: report.error.clone().unwrap(), report: Some(out) });
    }
    match analyze_curve(&curve) {
        Ok(a) => {
            report.delta_roots = Some(a.delta_roots.len());
            report.folds = Some(a.zigzags.len());
            report.scheme = Some(a.scheme);
            report.covers = Some(cover_type(a.scheme, curve.k()));
            render_analysis(&report, format)
        }
        Err(e) => {
            report.error = Some(e.to_string());
            let out = render_analysis(&report, format)?;
            Err(CliError::Domain { message: e.to_string(), report: Some(out) })
        }
    }
}

#[derive(Serialize)]
struct VerifyRow {
    k: u32,
    theorem: bool,
    closure_size: usize,
    diagram: bool,
    families: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    problems: Vec<String>,
}

fn check_diagram(k: u32, problems: &mut Vec<String>) -> bool {
    let k64 = k as i64;
    let pts = allowed_points(k);
    let before = problems.len();
    if let Some(p) = pts.iter().find(|p| !pts.contains(&DiagramPoint::new(-p.chi, p.h_star))) {
        problems.push(format!("{p:?} has no mirror point"));
    }
    let top: BTreeSet<DiagramPoint> = pts.iter().filter(|p| p.h_star == 12 * k64).copied().collect();
    let expected: BTreeSet<DiagramPoint> =
        (0..=k64).map(|l| DiagramPoint::new(2 * (k64 + 4 * l) - (10 * k64 - 8 * l), 12 * k64)).collect();
    if top != expected {
        problems.push(format!("top row {top:?}"));
    }
    match point_to_types(DiagramPoint::new(0, 8), k) {
        Ok(t) if t.len() == 2 => {}
        other => problems.push(format!("(0,8) types: {other:?}")),
    }
    problems.len() == before
}

fn check_families(k: u32, set: &FixtureSet, problems: &mut Vec<String>) -> bool {
    let before = problems.len();
    let mut check = |name: &str, c: Result<PatchworkConstruction, String>, want: RealScheme, comps: u32| match c
        .and_then(|c| scheme_of(&c).map_err(|e| e.to_string()))
    {
        Ok((s, _, n)) if s == want && n as u32 == comps => {}
        Ok((s, _, n)) => problems.push(format!("{name}: {s} with {n} components, expected {want} with {comps}")),
        Err(e) => problems.push(format!("{name}: {e}")),
    };
    for lambda in 0..=k {
        let c = mcurve_family(set, k, lambda).map_err(|e| e.to_string());
        check(
            &format!("m lambda={lambda}"),
            c,
            RealScheme::ovals(k - 1 + 4 * lambda, 5 * k - 1 - 4 * lambda),
            6 * k - 1,
        );
    }
    for lambda in 0..k {
        let c = m2curve_family(set, k, lambda).map_err(|e| e.to_string());
        check(&format!("m2 lambda={lambda}"), c, RealScheme::ovals(k + 4 * lambda, 5 * k - 4 - 4 * lambda), 6 * k - 3);
    }
    problems.len() == before
}

pub fn verify(k_max: u32, format: Format) -> Result<String, CliError> {
    if format == Format::Svg {
        return Err(CliError::Usage("verify has no svg output".into()));
    }
    let set = fixtures()?;
    let rows: Vec<VerifyRow> = (1..=k_max)
        .map(|k| {
            let mut problems = Vec::new();
            let t = verify_theorem(k);
            if !t.holds {
                problems.push(format!(
                    "closure only: [{}]; diagram only: [{}]",
                    joined(&t.only_in_closure),
                    joined(&t.only_in_diagram)
                ));
            }
            let diagram = check_diagram(k, &mut problems);
            let families = check_families(k, &set, &mut problems);
            VerifyRow { k, theorem: t.holds, closure_size: t.closure_size, diagram, families, problems }
        })
        .collect();
    let ok = rows.iter().all(|r| r.theorem && r.diagram && r.families);
    let out = if format == Format::Json {
        json_text(&json!({ "k_max": k_max, "pass": ok, "rows": rows }))
    } else {
        let mark = |b: bool| if b { "pass" } else { "FAIL" };
        let mut s = format!("{:>3}  {:<8}{:<8}{:<9}{}\n", "k", "theorem", "diagram", "families", "closure");
        for r in &rows {
            writeln!(
                s,
                "{:>3}  {:<8}{:<8}{:<9}{}",
                r.k,
                mark(r.theorem),
                mark(r.diagram),
                mark(r.families),
                r.closure_size
            )
            .unwrap();
            for p in &r.problems {
                writeln!(s, "     {p}").unwrap();
            }
        }
        s
    };
    if ok {
        Ok(out)
    } else {
        Err(CliError::Internal { message: "verification failed".into(), report: Some(out) })
    }
}
