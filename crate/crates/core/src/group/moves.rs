use std::collections::BTreeSet;
use std::fmt;

use super::word::{GWord, GenTriple};
use super::GroupError;

/// A single application of a defining relation of `G(n,3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationMove {
    /// `u a a v -> u v`, deleting the pair starting at the position.
    SquareDelete(usize),
    /// `u v -> u a a v`, inserting before the position.
    SquareInsert(usize, GenTriple),
    /// `u a b v -> u b a v` for generators sharing at most one index.
    FarCommute(usize),
    /// Reverses the four letters of a tetrahedron block starting at the position.
    TetraReverse(usize),
}

impl RelationMove {
    pub fn position(&self) -> usize {
        match *self {
            RelationMove::SquareDelete(p)
            | RelationMove::SquareInsert(p, _)
            | RelationMove::FarCommute(p)
            | RelationMove::TetraReverse(p) => p,
        }
    }

    /// Number of letters of the source word the move rewrites.
    pub fn span(&self) -> usize {
        match self {
            RelationMove::SquareDelete(_) | RelationMove::FarCommute(_) => 2,
            RelationMove::SquareInsert(..) => 0,
            RelationMove::TetraReverse(_) => 4,
        }
    }

    /// Number of letters occupying the rewritten span in the result.
    pub fn result_span(&self) -> usize {
        match self {
            RelationMove::SquareDelete(_) => 0,
            RelationMove::SquareInsert(..) | RelationMove::FarCommute(_) => 2,
            RelationMove::TetraReverse(_) => 4,
        }
    }
}

impl fmt::Display for RelationMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationMove::SquareDelete(p) => write!(f, "square-delete@{p}"),
            RelationMove::SquareInsert(p, g) => write!(f, "square-insert@{p}:{g}"),
            RelationMove::FarCommute(p) => write!(f, "far-commute@{p}"),
            RelationMove::TetraReverse(p) => write!(f, "tetra-reverse@{p}"),
        }
    }
}

fn is_square_at(letters: &[GenTriple], p: usize) -> bool {
    p + 1 < letters.len() && letters[p] == letters[p + 1]
}

fn is_far_at(letters: &[GenTriple], p: usize) -> bool {
    p + 1 < letters.len() && letters[p].shared(&letters[p + 1]) <= 1
}

/// Four consecutive pairwise distinct letters whose union has four elements.
/// Those are necessarily the four 3-subsets of that 4-set.
pub(crate) fn is_tetra_block(block: &[GenTriple]) -> bool {
    if block.len() != 4 {
        return false;
    }
    let distinct: BTreeSet<&GenTriple> = block.iter().collect();
    let union: BTreeSet<usize> = block.iter().flat_map(|g| g.elems()).collect();
    distinct.len() == 4 && union.len() == 4
}

fn is_tetra_at(letters: &[GenTriple], p: usize) -> bool {
    p + 4 <= letters.len() && is_tetra_block(&letters[p..p + 4])
}

/// Every relation move applicable to `w`. Insertions are listed only when
/// `allow_insert` is set and the result stays within `max_len` letters.
pub fn applicable_moves(w: &GWord, allow_insert: bool, max_len: usize) -> Vec<RelationMove> {
    let letters = w.letters();
    let mut out = Vec::new();
    for p in 0..letters.len() {
        if is_square_at(letters, p) {
            out.push(RelationMove::SquareDelete(p));
        }
        if is_far_at(letters, p) {
            out.push(RelationMove::FarCommute(p));
        }
        if is_tetra_at(letters, p) {
            out.push(RelationMove::TetraReverse(p));
        }
    }
    if allow_insert && letters.len() + 2 <= max_len {
        let gens = GenTriple::all(w.n());
        for p in 0..=letters.len() {
            out.extend(gens.iter().map(|&g| RelationMove::SquareInsert(p, g)));
        }
    }
    out
}

/// Rewrites `w` by `m`, failing if the relation's pattern is absent.
pub fn apply_move(w: &GWord, m: RelationMove) -> Result<GWord, GroupError> {
    let letters = w.letters();
    let invalid = || GroupError::InvalidMove(format!("{m} does not apply to \"{w}\""));
    let mut out = letters.to_vec();
    match m {
        RelationMove::SquareDelete(p) => {
            if !is_square_at(letters, p) {
                return Err(invalid());
            }
            out.drain(p..p + 2);
        }
        RelationMove::SquareInsert(p, g) => {
            if p > letters.len() || g.n() != w.n() {
                return Err(invalid());
            }
            out.splice(p..p, [g, g]);
        }
        RelationMove::FarCommute(p) => {
            if !is_far_at(letters, p) {
                return Err(invalid());
            }
            out.swap(p, p + 1);
        }
        RelationMove::TetraReverse(p) => {
            if !is_tetra_at(letters, p) {
                return Err(invalid());
            }
            out[p..p + 4].reverse();
        }
    }
    Ok(w.with_letters(out))
}

/// Cancels adjacent equal pairs until none remain.
pub fn free_reduce(w: &GWord) -> GWord {
    let mut stack: Vec<GenTriple> = Vec::with_capacity(w.len());
    for &g in w.letters() {
        if stack.last() == Some(&g) {
            stack.pop();
        } else {
            stack.push(g);
        }
    }
    w.with_letters(stack)
}

/// Occurrence counts of every generator modulo 2.
///
/// Every defining relation preserves each count's parity, so this is a
/// homomorphism from `G(n,3)` onto `(Z/2)^C(n,3)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParityVector {
    n: usize,
    bits: Vec<bool>,
}

impl ParityVector {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Parity of `g`'s occurrence count.
    pub fn bit(&self, g: &GenTriple) -> bool {
        self.bits[crate::index::triple_rank(g.elems())]
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|b| !b)
    }

    /// Generators occurring an odd number of times, in lexicographic order.
    pub fn odd_generators(&self) -> Vec<GenTriple> {
        GenTriple::all(self.n)
            .into_iter()
            .filter(|g| self.bit(g))
            .collect()
    }
}

pub fn generator_parity(w: &GWord) -> ParityVector {
    let n = w.n();
    let mut bits = vec![false; num::integer::binomial(n, 3)];
    for g in w.letters() {
        let r = crate::index::triple_rank(g.elems());
        bits[r] = !bits[r];
    }
    ParityVector { n, bits }
}
