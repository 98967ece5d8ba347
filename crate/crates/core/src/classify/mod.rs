//! Topological types of real regular jacobian elliptic surfaces: the
//! restriction diagram, extremal types, Morse simplifications and the double
//! cover induced by a trigonal curve.

mod diagram;
mod morse;
mod restrictions;
mod toptype;

use thiserror::Error;

pub use diagram::{diagram_entries, render_ascii, render_svg, DiagramEntry, PointKind};
pub use morse::{
    cover_type, extremal_types, is_extremal, morse_closure, morse_closure_with, morse_moves, morse_moves_with,
    verify_theorem, MorseOptions, TheoremCheck,
};
pub use restrictions::{allowed_points, point_to_types, DiagramPoint, KInvariants};
pub use toptype::{betti, Betti, SurfaceComponent, TopType};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("point (chi={chi}, h*={h_star}) is not allowed for k={k}")]
    NotAllowed { chi: i64, h_star: i64, k: u32 },
    #[error("{0} is not in the Morse closure for k={1}")]
    NotInFamily(TopType, u32),
    #[error("invalid topological type {0:?}: {1}")]
    Parse(String, String),
}
