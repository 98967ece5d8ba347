//! Curve files: `k=<int>`, `p=<coefficients>`, `q=<coefficients>`.

use crate::exactpoly::rational::{format_coeff_line, parse_coeff_line};
use crate::Rational;

use super::{TrigonalCurve, TrigonalError};

pub fn parse_curve(text: &str) -> Result<TrigonalCurve<Rational>, TrigonalError> {
    let (mut k, mut p, mut q) = (None, None, None);
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let (key, value) =
            line.split_once('=').ok_or_else(|| TrigonalError::Parse(format!("expected key=value, got {line:?}")))?;
        let slot = match key.trim() {
            "k" => {
                let v: u32 = value.trim().parse().map_err(|_| TrigonalError::Parse(format!("bad k {value:?}")))?;
                if v == 0 {
                    return Err(TrigonalError::Parse("k must be positive".into()));
                }
                k = Some(v);
                continue;
            }
            "p" => &mut p,
            "q" => &mut q,
            other => return Err(TrigonalError::Parse(format!("unknown key {other:?}"))),
        };
        *slot = Some(parse_coeff_line(value)?);
    }
    let missing = |name: &str| TrigonalError::Parse(format!("missing {name}= line"));
    TrigonalCurve::new(k.ok_or_else(|| missing("k"))?, p.ok_or_else(|| missing("p"))?, q.ok_or_else(|| missing("q"))?)
}

pub fn format_curve(c: &TrigonalCurve<Rational>) -> String {
    format!("k={}\np={}\nq={}\n", c.k(), format_coeff_line(c.p()), format_coeff_line(c.q()))
}
