use thiserror::Error;

use crate::trigonal::RealScheme;

use super::curve::{
    classify, symmetrize, trace_curve, Classification, ClassifyError, PatchworkCurve, SignDistribution,
    SymmetricTriangulation,
};
use super::geometry::Point;
use super::lifting::{build_lifting, ConvexLifting, LiftError, Refinement};
use super::triangulation::{LatticeTriangulation, Violation};

/// Triangulation of `T`, signs at its vertices, and the refinement history
/// from which a convex lifting is rebuilt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatchworkConstruction {
    pub triangulation: LatticeTriangulation,
    pub signs: SignDistribution,
    pub history: Vec<Refinement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid triangulation: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("sign distribution does not match the vertex set (first offender {0:?})")]
    SignDomain(Point),
    #[error("sign at {0:?} is not +1 or -1")]
    BadSign(Point),
}

impl PatchworkConstruction {
    pub fn k(&self) -> u32 {
        self.triangulation.k
    }

    pub fn validate(&self) -> Result<(), ConstructionError> {
        self.triangulation.validate().map_err(ConstructionError::Invalid)?;
        for v in &self.triangulation.vertices {
            match self.signs.get(v) {
                None => return Err(ConstructionError::SignDomain(*v)),
                Some(s) if *s != 1 && *s != -1 => return Err(ConstructionError::BadSign(*v)),
                _ => {}
            }
        }
        if let Some(extra) = self.signs.keys().find(|p| self.triangulation.index_of(**p).is_none()) {
            return Err(ConstructionError::SignDomain(*extra));
        }
        Ok(())
    }

    pub fn lifting(&self) -> Result<ConvexLifting, LiftError> {
        build_lifting(&self.triangulation, &self.history)
    }

    pub fn symmetrize(&self) -> SymmetricTriangulation {
        symmetrize(&self.triangulation, &self.signs)
    }

    pub fn curve(&self) -> PatchworkCurve {
        trace_curve(&self.symmetrize())
    }

    pub fn classification(&self) -> Result<Classification, ClassifyError> {
        classify(&self.curve())
    }

    pub fn scheme(&self) -> Result<RealScheme, ClassifyError> {
        self.classification()?.scheme()
    }

    pub fn with_flipped(&self, base_points: impl IntoIterator<Item = Point>) -> Self {
        let mut out = self.clone();
        for p in base_points {
            if let Some(s) = out.signs.get_mut(&p) {
                *s = -*s;
            }
        }
        out
    }
}
