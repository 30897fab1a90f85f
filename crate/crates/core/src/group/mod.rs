//! Words, relations and invariants of the free 3-braid group `G(n,3)`.

mod moves;
mod search;
mod word;

pub use moves::{
    applicable_moves, apply_move, free_reduce, generator_parity, ParityVector, RelationMove,
};
pub use search::{bounded_equal, replay, DistinctWitness, EqualityVerdict};
pub(crate) use word::check_n;
pub use word::{GWord, GenSubset, GenTriple, Strand, MAX_STRANDS, MIN_STRANDS};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("strand count {0} outside the supported range 4..=64")]
    InvalidN(usize),
    #[error("malformed letter `{0}`")]
    BadLetter(String),
    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("repeated index in {0:?}")]
    RepeatedIndex(Vec<usize>),
    #[error("generators with {0} indices carry no semantics; only 3-subsets are supported")]
    UnsupportedArity(usize),
    #[error("strand count mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid move: {0}")]
    InvalidMove(String),
}
