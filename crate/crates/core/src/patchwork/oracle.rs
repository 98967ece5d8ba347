//! Algebraic cross-check of a patchwork: the T-polynomial for small `t`,
//! depressed and analyzed exactly, must have the combinatorial real scheme.

use thiserror::Error;

use crate::exactpoly::rational::dyadic;
use crate::trigonal::{depress, real_scheme, RealScheme, TrigonalError};

use super::construction::PatchworkConstruction;
use super::curve::ClassifyError;
use super::lifting::LiftError;
use super::tpoly::{emit_t_polynomial, TPolynomialRequest};

pub const ORACLE_MAX_HALVINGS: u32 = 40;
const RUN: usize = 3;

/// Outcome at `t = 1/2^m`; `scheme` is `None` when the curve is not generic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleAttempt {
    pub m: u32,
    pub scheme: Option<RealScheme>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub combinatorial: RealScheme,
    /// First `m` of the agreeing run.
    pub agreed_from: u32,
    pub attempts: Vec<OracleAttempt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("no stabilization at {combinatorial} within {ORACLE_MAX_HALVINGS} halvings (last schemes: {})", last_seen(.attempts))]
    NoStabilization { combinatorial: RealScheme, attempts: Vec<OracleAttempt> },
    #[error(transparent)]
    Lift(#[from] LiftError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Trigonal(#[from] TrigonalError),
}

fn last_seen(attempts: &[OracleAttempt]) -> String {
    attempts
        .iter()
        .rev()
        .take(RUN)
        .map(|a| a.scheme.map_or("non-generic".to_string(), |s| s.to_string()))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Tries `t = 1/2, 1/4, ...` and succeeds once three consecutive values give
/// generic curves whose scheme equals the combinatorial one. The lifting is
/// [balanced](super::lifting::ConvexLifting::balanced) first.
pub fn patchwork_oracle(c: &PatchworkConstruction) -> Result<OracleReport, OracleError> {
    let combinatorial = c.scheme()?;
    let lifting = c.lifting()?.balanced(c.k());
    let mut attempts: Vec<OracleAttempt> = Vec::new();
    for m in 1..=ORACLE_MAX_HALVINGS {
        let raw = emit_t_polynomial(&TPolynomialRequest {
            triangulation: &c.triangulation,
            signs: &c.signs,
            lifting: &lifting,
            t: dyadic(m),
        });
        let curve = depress(&raw, c.k())?;
        let scheme = match real_scheme(&curve) {
            Ok(s) => Some(s),
            Err(TrigonalError::NonGeneric(_)) => None,
            Err(e) => return Err(e.into()),
        };
        attempts.push(OracleAttempt { m, scheme });
        if attempts.len() >= RUN && attempts[attempts.len() - RUN..].iter().all(|a| a.scheme == Some(combinatorial)) {
            return Ok(OracleReport { combinatorial, agreed_from: m + 1 - RUN as u32, attempts });
        }
    }
    Err(OracleError::NoStabilization { combinatorial, attempts })
}
