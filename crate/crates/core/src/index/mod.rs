//! Triple indices, the action of `G(n,3)` on them, realisability of letters,
//! the bad-letter projection and the relation censuses.

mod census;
mod classify;
mod state;

pub use census::{
    action_consistency, far_pairs, relation_census, tetra_word, CensusReport, CensusRow, Lemma,
    CENSUS_SEED, SAMPLED_STATES,
};
pub use classify::{
    classify_from, classify_word, letter_status, project_once, stable_projection, ClassifiedWord,
    LetterStatus,
};
pub use state::{triple_rank, OrientationState, Sign};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndexError {
    #[error("strand count {0} outside the supported range 4..=64")]
    InvalidN(usize),
    #[error("bad triple {triple:?} for n = {n}")]
    BadTriple { triple: [usize; 3], n: usize },
    #[error("strand count mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("state id {id} out of range for n = {n}")]
    StateId { n: usize, id: u64 },
    #[error("census `{lemma}` is not available for n = {n}")]
    UnsupportedN { lemma: String, n: usize },
}
