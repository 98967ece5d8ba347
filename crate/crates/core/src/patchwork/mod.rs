//! Combinatorial patchworking for trigonal curves: triangulations of the
//! Newton triangle, convex liftings, the symmetric extension with its sign
//! rule, curve tracing and classification, oval collapsing and T-polynomials.

mod collapse;
mod construction;
mod curve;
mod families;
mod fixtures;
mod geometry;
mod lifting;
mod oracle;
pub mod search;
pub mod svg;
mod tpoly;
mod triangulation;

pub use collapse::{collapse_ovals, collapse_to, CollapseError};
pub use construction::{ConstructionError, PatchworkConstruction};
pub use curve::{
    classify, classify_components, reflected_sign, symmetrize, trace_curve, Classification, ClassifyError, Component,
    HalfPoint, OrientedScheme, OvalInfo, PatchworkCurve, Segment, SignDistribution, SymmetricTriangulation,
};
pub use families::{m2curve_family, mcurve_family, shear, FamilyError};
pub use fixtures::{format_fixture, parse_fixture, FixtureError, FixtureSet, LocalFixture, FIXTURE_FILES};
pub use geometry::{cross, in_newton_triangle, interiors_overlap, newton_corners, strictly_inside, Point};
pub use lifting::{build_lifting, certify_convexity, ConvexLifting, LiftError, Refinement};
pub use oracle::{patchwork_oracle, OracleAttempt, OracleError, OracleReport, ORACLE_MAX_HALVINGS};
pub use tpoly::{emit_t_polynomial, TPolynomialRequest};
pub use triangulation::{LatticeTriangulation, Violation};
