//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::{depression_identity_holds, descartes_root_count, grid_root_count, random_rational, random_squarefree};
use ellipscheme::classify::{
    allowed_points, betti, cover_type, morse_closure, point_to_types, verify_theorem, DiagramPoint, TopType,
};
use ellipscheme::exactpoly::rational::dyadic;
use ellipscheme::exactpoly::{sturm_isolate, RootDomain, SturmChain};
use ellipscheme::patchwork::{
    classify_components, collapse_ovals, collapse_to, emit_t_polynomial, m2curve_family, mcurve_family,
    patchwork_oracle, FixtureSet, OrientedScheme, PatchworkConstruction, TPolynomialRequest,
};
use ellipscheme::trigonal::{check_generic, real_scheme, special_extremal, special_extremal_raw, BiPoly, RealScheme};
use ellipscheme::Rational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every family construction for `k`, labelled.
fn families(f: &FixtureSet, k: u32) -> Vec<(String, PatchworkConstruction)> {
    let mut out = Vec::new();
    for lambda in 0..=k {
        out.push((format!("m k={k} lambda={lambda}"), mcurve_family(f, k, lambda).unwrap()));
    }
    for lambda in 0..k {
        out.push((format!("m2 k={k} lambda={lambda}"), m2curve_family(f, k, lambda).unwrap()));
    }
    out
}

fn theorem() -> Outcome {
    for k in 1..=8 {
        let r = verify_theorem(k);
        ensure(r.holds, || {
            format!("k={k}: closure-only {:?}, diagram-only {:?}", r.only_in_closure, r.only_in_diagram)
        })?;
    }
    Ok("closure equals diagram types for k=1..8".into())
}

fn diagram() -> Outcome {
    for k in 1..=10i64 {
        let pts = allowed_points(k as u32);
        for p in &pts {
            ensure(pts.contains(&DiagramPoint::new(-p.chi, p.h_star)), || format!("k={k}: {p:?} has no mirror"))?;
        }
        let top: BTreeSet<DiagramPoint> = pts.iter().filter(|p| p.h_star == 12 * k).copied().collect();
        // chi = 2 #components - h1
        let expected: BTreeSet<DiagramPoint> =
            (0..=k).map(|l| DiagramPoint::new(2 * (k + 4 * l) - (10 * k - 8 * l), 12 * k)).collect();
        ensure(top == expected, || format!("k={k}: top row {top:?}, expected {expected:?}"))?;
        let special = DiagramPoint::new(0, 8);
        ensure(pts.contains(&special), || format!("k={k}: (0,8) missing"))?;
        let n = point_to_types(special, k as u32).map_err(|e| e.to_string())?.len();
        ensure(n == 2, || format!("k={k}: (0,8) carries {n} types"))?;
    }
    Ok("symmetric, k+1 top points, (0,8) with two types, k=1..10".into())
}

fn schemes() -> Outcome {
    let f = FixtureSet::builtin();
    let mut n = 0;
    for k in 1..=2u32 {
        for lambda in 0..=k {
            let curve = mcurve_family(&f, k, lambda).map_err(|e| e.to_string())?.curve();
            let s = classify_components(&curve).map_err(|e| e.to_string())?;
            let want = RealScheme::ovals(k - 1 + 4 * lambda, 5 * k - 1 - 4 * lambda);
            ensure(s == want, || format!("m k={k} lambda={lambda}: {s}, expected {want}"))?;
            let comps = curve.components.len() as u32;
            ensure(comps == 6 * k - 1, || format!("m k={k} lambda={lambda}: {comps} components"))?;
            n += 1;
        }
        for lambda in 0..k {
            let curve = m2curve_family(&f, k, lambda).map_err(|e| e.to_string())?.curve();
            let s = classify_components(&curve).map_err(|e| e.to_string())?;
            let want = RealScheme::ovals(k + 4 * lambda, 5 * k - 4 - 4 * lambda);
            ensure(s == want, || format!("m2 k={k} lambda={lambda}: {s}, expected {want}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} constructions for k=1,2"))
}

fn oracle() -> Outcome {
    let f = FixtureSet::builtin();
    let mut runs = families(&f, 1);
    runs.push(("m2 k=2 lambda=0".into(), m2curve_family(&f, 2, 0).unwrap()));
    let mut notes = Vec::new();
    for (name, c) in runs {
        let r = patchwork_oracle(&c).map_err(|e| format!("{name}: {e}"))?;
        notes.push(format!("{name} from m={}", r.agreed_from));
    }
    Ok(notes.join(", "))
}

fn collapsing() -> Outcome {
    let c = mcurve_family(&FixtureSet::builtin(), 1, 1).unwrap();
    let s = classify_components(&c.curve()).map_err(|e| e.to_string())?;
    ensure(s == RealScheme::ovals(4, 0), || format!("start scheme {s}"))?;
    for a in 0..=4 {
        let (out, _) = collapse_to(&c, OrientedScheme { plus: a, minus: 0 }).map_err(|e| format!("a'={a}: {e}"))?;
        let s = classify_components(&out.curve()).map_err(|e| e.to_string())?;
        ensure(s == RealScheme::ovals(a, 0), || format!("a'={a}: got {s}"))?;
    }
    // disjoint collapses: ovals grouped by the base vertex they surround
    let ovals = c.classification().unwrap().ovals;
    let base = |i: usize| (ovals[i].surrounded[0].0.abs(), ovals[i].surrounded[0].1.abs());
    let bases: BTreeSet<_> = (0..ovals.len()).map(base).collect();
    let groups: Vec<Vec<usize>> = bases.iter().map(|b| (0..ovals.len()).filter(|&i| base(i) == *b).collect()).collect();
    let relocate = |d: &PatchworkConstruction, g: &[usize]| -> Vec<usize> {
        let now = d.classification().unwrap().ovals;
        g.iter().map(|&i| now.iter().position(|o| o.surrounded == ovals[i].surrounded).unwrap()).collect()
    };
    let mut pairs = 0;
    for x in 0..groups.len() {
        for y in x + 1..groups.len() {
            let both =
                collapse_ovals(&c, &[groups[x].clone(), groups[y].clone()].concat()).map_err(|e| e.to_string())?;
            let first = collapse_ovals(&c, &groups[x]).map_err(|e| e.to_string())?;
            let xy = collapse_ovals(&first, &relocate(&first, &groups[y])).map_err(|e| e.to_string())?;
            let second = collapse_ovals(&c, &groups[y]).map_err(|e| e.to_string())?;
            let yx = collapse_ovals(&second, &relocate(&second, &groups[x])).map_err(|e| e.to_string())?;
            ensure(xy == both && yx == both, || format!("groups {x} and {y} do not commute"))?;
            pairs += 1;
        }
    }
    Ok(format!("<a'|0> for a'=0..4, {pairs} commuting pairs"))
}

fn pseudo_lines() -> Outcome {
    for (k, want) in [(1u32, "V2+V2"), (2, "S1+S1")] {
        let c = special_extremal(k).map_err(|e| e.to_string())?;
        let r = check_generic(&c);
        ensure(r.is_generic(), || format!("k={k}: {}", r.summary()))?;
        let roots = SturmChain::new(&r.delta).map_err(|e| e.to_string())?.count_real_roots();
        ensure(roots == 0 && descartes_root_count(&r.delta) == 0, || format!("k={k}: delta has {roots} roots"))?;
        ensure(r.delta.leading().is_some_and(|l| *l < Rational::from_integer(0.into())), || {
            format!("k={k}: delta not negative")
        })?;
        let s = real_scheme(&c).map_err(|e| e.to_string())?;
        ensure(s == RealScheme::ThreePseudoLines, || format!("k={k}: {s}"))?;
        let cover = cover_type(s, k);
        let want: TopType = want.parse().unwrap();
        ensure(cover == vec![want.clone()], || format!("k={k}: cover {cover:?}"))?;
    }
    Ok("k=1,2 covers V2+V2 and S1+S1".into())
}

fn covers() -> Outcome {
    let f = FixtureSet::builtin();
    let mut n = 0;
    for k in 1..=2 {
        let closure = morse_closure(k);
        let pts = allowed_points(k);
        for (name, c) in families(&f, k) {
            let s = c.scheme().map_err(|e| e.to_string())?;
            let RealScheme::Ovals { a, b } = s else { return Err(format!("{name}: {s}")) };
            let d = 2 * (a as i64 - b as i64);
            let ts = cover_type(s, k);
            let chis: Vec<i64> = ts.iter().map(|t| betti(t).chi).collect();
            ensure(chis == vec![d, -d], || format!("{name}: chi {chis:?}"))?;
            for t in ts {
                let bt = betti(&t);
                ensure(closure.contains(&t), || format!("{name}: {t} not in closure"))?;
                ensure(pts.contains(&DiagramPoint::new(bt.chi, bt.h_star)), || format!("{name}: {t} off the diagram"))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} cover types for k=1,2"))
}

fn foundation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in 0..200 {
        let p = random_squarefree(&mut rng, 12);
        let got = sturm_isolate(&p, &RootDomain::AllReals).map_err(|e| e.to_string())?.len();
        let grid = grid_root_count(&p);
        ensure(got == grid, || format!("polynomial {n} ({p}): sturm {got}, grid {grid}"))?;
    }
    let f = FixtureSet::builtin();
    let mut raws: Vec<(String, u32, BiPoly<Rational>)> = Vec::new();
    for k in 1..=2 {
        for (name, c) in families(&f, k) {
            let lifting = c.lifting().unwrap().balanced(k);
            let raw = emit_t_polynomial(&TPolynomialRequest {
                triangulation: &c.triangulation,
                signs: &c.signs,
                lifting: &lifting,
                t: dyadic(1),
            });
            raws.push((name, k, raw));
        }
        raws.push((format!("special k={k}"), k, special_extremal_raw(k, &dyadic(3))));
    }
    for (name, k, raw) in &raws {
        for _ in 0..10 {
            let u0 = random_rational(&mut rng);
            ensure(depression_identity_holds(raw, *k, &u0), || format!("{name}: identity fails at u={u0}"))?;
        }
    }
    Ok(format!("200 polynomials, {} curves x 10 base points", raws.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("theorem cross-check", theorem),
        ("diagram properties", diagram),
        ("patchwork schemes", schemes),
        ("end-to-end oracle", oracle),
        ("independent collapsing", collapsing),
        ("three pseudo-lines", pseudo_lines),
        ("cover consistency", covers),
        ("foundation properties", foundation),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name} ({secs:.1}s): {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name} ({secs:.1}s): {why}", n + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
