//! Exact rational plane motions and the collinearity word of a pure braid.
//!
//! Motions move one strand at a time along straight segments, so every
//! collinearity condition is linear in time and all predicates are exact.
//! Orientation `+1` means a positive determinant (counterclockwise), which
//! makes the regular configuration agree with the initial triple indices.

mod config;
mod events;
mod gadgets;
mod linking;
mod point;
mod program;

pub use config::{regular_rational_configuration, Configuration};
pub use events::{compile, compile_checked, segment_events, CollinearityEvent, CompileOutput};
pub use gadgets::{
    embed_at_infinity, full_twist_program, pure_braid_generator_program, random_closed_program,
};
pub use linking::geometric_linking;
pub use point::{integer, orientation, parse_rational, rational, Rational, RationalPoint, Turn};
pub use program::{Move, MoveFile, MoveProgram, ProgramFile};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("strand count {0} outside the supported range 4..=64")]
    InvalidN(usize),
    #[error("strand {strand} out of range for n = {n}")]
    BadStrand { strand: usize, n: usize },
    #[error("genericity violated: {0}")]
    Genericity(String),
    #[error("program is declared closed but does not return to its initial configuration")]
    NotClosed,
    #[error("twist at move {move_index} requires all points on one circle about the origin")]
    NotConcyclic { move_index: usize },
    #[error("twist with zero turns")]
    ZeroTwist,
    #[error("difference path of strands {i} and {j} passes through the origin")]
    DegeneratePath { i: usize, j: usize },
    #[error("programs containing twists cannot gain a far strand")]
    TwistNotEmbeddable,
    #[error("construction failed: {0}")]
    ConstructionFailure(String),
    #[error("parse error: {0}")]
    Parse(String),
}
