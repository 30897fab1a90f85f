//! Cylindrical braids read off realisable words.
//!
//! Fix an axis strand `a`. A letter `a_{a,i,j}` whose central element is not
//! the axis means `z_i` and `z_j` lie on one ray from `z_a`: their angles
//! around the axis swap, and the central one passes closer to the axis.
//! Letters with the axis in the middle, and letters not involving the axis,
//! leave the angular order alone.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::group::{generator_parity, GWord, Strand};
use crate::index::{classify_word, OrientationState, Sign};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReconstructionError {
    #[error("axis {axis} out of range for n = {n}")]
    BadAxis { axis: Strand, n: usize },
    #[error("letter {position} is not realisable")]
    NotRealisable { position: usize },
    #[error("letter {position} swaps strands {inner} and {outer}, which are not adjacent around the axis")]
    AdjacencyViolation {
        position: usize,
        inner: Strand,
        outer: Strand,
    },
    #[error("letter {position} admits several central elements {centrals:?}")]
    AmbiguousCentral {
        position: usize,
        centrals: Vec<Strand>,
    },
    #[error("invariants over different strand sets")]
    StrandMismatch,
}

/// One angle swap: `inner` passes closer to the axis than `outer`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CylLetter {
    pub inner: Strand,
    pub outer: Strand,
    pub sign: Sign,
}

impl fmt::Display for CylLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign == Sign::Pos { '+' } else { '-' };
        write!(f, "b({},{},{s})", self.inner, self.outer)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CylWord {
    pub n: usize,
    pub axis: Strand,
    pub letters: Vec<CylLetter>,
    /// Angular order of the non-axis strands at the start.
    pub initial_order: Vec<Strand>,
    /// Angular order after all swaps, read cyclically.
    pub final_order: Vec<Strand>,
}

impl fmt::Display for CylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, l) in self.letters.iter().enumerate() {
            if pos > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Counterclockwise order of the other vertices as seen from vertex `axis`
/// of the regular configuration.
pub fn initial_cyclic_order(n: usize, axis: Strand) -> Vec<Strand> {
    (axis + 1..=n).chain(1..axis).collect()
}

/// Sign of a swap. With this convention the half-sum over a pair's swaps
/// equals the winding of their difference minus half the sum of their
/// windings around the axis.
fn crossing_sign(state: &OrientationState, axis: Strand, inner: Strand, outer: Strand) -> Sign {
    state.signed_unchecked(axis, outer, inner)
}

/// Builds the cylindrical braid word around `axis` from a realisable word.
pub fn reconstruct_axis(w: &GWord, axis: Strand) -> Result<CylWord, ReconstructionError> {
    let n = w.n();
    if !(1..=n).contains(&axis) {
        return Err(ReconstructionError::BadAxis { axis, n });
    }
    let classified = classify_word(w);
    if let Some(position) = classified.bad_positions().first() {
        return Err(ReconstructionError::NotRealisable {
            position: *position,
        });
    }
    let initial_order = initial_cyclic_order(n, axis);
    let mut ring = initial_order.clone();
    let mut letters = Vec::new();
    for (position, g) in w.letters().iter().enumerate() {
        if !g.contains(axis) {
            continue;
        }
        let centrals = classified.statuses[position].centrals();
        let central = match centrals {
            [c] => *c,
            _ => {
                return Err(ReconstructionError::AmbiguousCentral {
                    position,
                    centrals: centrals.to_vec(),
                })
            }
        };
        if central == axis {
            continue;
        }
        let [x, y] = g.others(axis).expect("letter contains the axis");
        let outer = if central == x { y } else { x };
        let len = ring.len();
        let pi = ring
            .iter()
            .position(|&s| s == central)
            .expect("non-axis strand");
        let po = ring
            .iter()
            .position(|&s| s == outer)
            .expect("non-axis strand");
        if (pi + 1) % len != po && (po + 1) % len != pi {
            return Err(ReconstructionError::AdjacencyViolation {
                position,
                inner: central,
                outer,
            });
        }
        ring.swap(pi, po);
        let sign = crossing_sign(&classified.prefix_states[position], axis, central, outer);
        letters.push(CylLetter {
            inner: central,
            outer,
            sign,
        });
    }
    Ok(CylWord {
        n,
        axis,
        letters,
        initial_order,
        final_order: ring,
    })
}

/// A multiple of 1/2, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInteger(pub i64);

impl HalfInteger {
    pub fn from_integer(v: i64) -> Self {
        HalfInteger(2 * v)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn as_integer(self) -> Option<i64> {
        (self.0 % 2 == 0).then_some(self.0 / 2)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}/2", self.0),
        }
    }
}

/// Permutation of the angular order plus pairwise half-signed swap counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnularInvariants {
    pub axis: Strand,
    /// Non-axis strands in their initial angular order.
    pub strands: Vec<Strand>,
    /// `permutation[k]` is the strand finally found where `strands[k]`
    /// started, after rotating the final order to fix `strands[0]`.
    pub permutation: Vec<Strand>,
    /// Keyed by `(i, j)` with `i < j`.
    pub linking: BTreeMap<(Strand, Strand), HalfInteger>,
}

impl AnnularInvariants {
    pub fn is_identity(&self) -> bool {
        self.permutation == self.strands
    }

    pub fn linking_of(&self, i: Strand, j: Strand) -> HalfInteger {
        self.linking
            .get(&(i.min(j), i.max(j)))
            .copied()
            .unwrap_or_default()
    }

    /// Cycle notation of the permutation, `()` for the identity.
    pub fn cycles(&self) -> String {
        let image: BTreeMap<Strand, Strand> = self
            .strands
            .iter()
            .copied()
            .zip(self.permutation.iter().copied())
            .collect();
        let mut seen = Vec::new();
        let mut out = String::new();
        for &start in image.keys() {
            if seen.contains(&start) || image[&start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen.push(start);
            let mut next = image[&start];
            while next != start {
                cycle.push(next);
                seen.push(next);
                next = image[&next];
            }
            let body: Vec<String> = cycle.iter().map(|s| s.to_string()).collect();
            out.push_str(&format!("({})", body.join(" ")));
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    /// Plain-text block: axis, permutation in cycle notation, symmetric
    /// linking matrix over the non-axis strands in increasing order.
    pub fn to_text(&self) -> String {
        let mut labels = self.strands.clone();
        labels.sort_unstable();
        let mut out = format!(
            "axis {}\npermutation {}\nlinking\n",
            self.axis,
            self.cycles()
        );
        out.push_str(&format!(
            "\t{}\n",
            labels
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join("\t")
        ));
        for &i in &labels {
            let row: Vec<String> = labels
                .iter()
                .map(|&j| {
                    if i == j {
                        String::from("-")
                    } else {
                        self.linking_of(i, j).to_string()
                    }
                })
                .collect();
            out.push_str(&format!("{i}\t{}\n", row.join("\t")));
        }
        out
    }
}

pub fn annular_invariants(c: &CylWord) -> AnnularInvariants {
    let strands = c.initial_order.clone();
    let mut linking = BTreeMap::new();
    for (k, &i) in strands.iter().enumerate() {
        for &j in &strands[k + 1..] {
            linking.insert((i.min(j), i.max(j)), HalfInteger(0));
        }
    }
    for l in &c.letters {
        let key = (l.inner.min(l.outer), l.inner.max(l.outer));
        linking.entry(key).or_insert(HalfInteger(0)).0 += l.sign.to_i64();
    }
    let shift = c
        .final_order
        .iter()
        .position(|&s| s == strands[0])
        .expect("same strand set");
    let mut permutation = c.final_order.clone();
    permutation.rotate_left(shift);
    AnnularInvariants {
        axis: c.axis,
        strands,
        permutation,
        linking,
    }
}

/// `Some(m)` when `b` equals `a` shifted by `m` on every pair (the effect of
/// `m` full twists) with the same permutation.
pub fn invariants_equal_mod_full_twist(
    a: &AnnularInvariants,
    b: &AnnularInvariants,
) -> Option<i64> {
    if a.axis != b.axis || a.strands != b.strands || a.permutation != b.permutation {
        return None;
    }
    let mut diffs = a
        .linking
        .iter()
        .map(|(key, va)| b.linking.get(key).map(|vb| vb.0 - va.0));
    let first = diffs.next()??;
    if first % 2 != 0 {
        return None;
    }
    diffs.all(|d| d == Some(first)).then_some(first / 2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelVerdict {
    /// Some generator occurs an odd number of times.
    NontrivialByParity,
    /// The annular invariants around `axis` differ from the trivial braid's
    /// by more than a full-twist shift; `pair` is a witness pair.
    NontrivialByLinking {
        axis: Strand,
        pair: (Strand, Strand),
    },
    /// No invariant available here separates the word from the identity.
    TrivialConsistent,
}

impl fmt::Display for KernelVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelVerdict::NontrivialByParity => f.write_str("NontrivialByParity"),
            KernelVerdict::NontrivialByLinking { axis, pair } => {
                write!(
                    f,
                    "NontrivialByLinking(axis {axis}, pair {{{},{}}})",
                    pair.0, pair.1
                )
            }
            KernelVerdict::TrivialConsistent => f.write_str("TrivialConsistent"),
        }
    }
}

/// A pair whose value departs from the most common linking value, or the
/// first pair of a displaced strand when the permutations differ.
fn witness_pair(base: &AnnularInvariants, inv: &AnnularInvariants) -> (Strand, Strand) {
    if let Some(k) = (0..inv.strands.len()).find(|&k| inv.permutation[k] != base.permutation[k]) {
        let (i, j) = (inv.strands[k], inv.permutation[k]);
        return (i.min(j), i.max(j));
    }
    let diffs: Vec<((Strand, Strand), i64)> = base
        .linking
        .iter()
        .map(|(key, v)| (*key, inv.linking_of(key.0, key.1).0 - v.0))
        .collect();
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for (_, d) in &diffs {
        *counts.entry(*d).or_insert(0) += 1;
    }
    let max = counts.values().copied().max().unwrap_or(0);
    // ties go to the value of the earliest pair
    let mode = diffs
        .iter()
        .map(|(_, d)| *d)
        .find(|d| counts[d] == max)
        .unwrap_or(0);
    diffs
        .iter()
        .find(|(_, d)| *d != mode)
        .or_else(|| diffs.first())
        .map(|(key, _)| *key)
        .expect("at least three non-axis strands")
}

/// Looks for evidence that `w` is not the image of a full-twist power.
/// Axes are tried from `n` down to 1.
pub fn kernel_witness(w: &GWord) -> Result<KernelVerdict, ReconstructionError> {
    let classified = classify_word(w);
    if let Some(position) = classified.bad_positions().first() {
        return Err(ReconstructionError::NotRealisable {
            position: *position,
        });
    }
    if !generator_parity(w).is_zero() {
        return Ok(KernelVerdict::NontrivialByParity);
    }
    let n = w.n();
    let empty = GWord::empty(n).expect("valid strand count");
    for axis in (1..=n).rev() {
        let inv = annular_invariants(&reconstruct_axis(w, axis)?);
        let base = annular_invariants(&reconstruct_axis(&empty, axis)?);
        if invariants_equal_mod_full_twist(&base, &inv).is_none() {
            return Ok(KernelVerdict::NontrivialByLinking {
                axis,
                pair: witness_pair(&base, &inv),
            });
        }
    }
    Ok(KernelVerdict::TrivialConsistent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{compile, full_twist_program, pure_braid_generator_program};

    fn w(t: &[[usize; 3]]) -> GWord {
        GWord::from_triples(4, t).unwrap()
    }

    #[test]
    fn axis_central_letters_vanish() {
        let c = reconstruct_axis(&w(&[[1, 3, 4], [1, 3, 4]]), 4).unwrap();
        assert!(c.letters.is_empty());
        assert_eq!(c.final_order, vec![1, 2, 3]);
    }

    #[test]
    fn empty_word() {
        let c = reconstruct_axis(&GWord::empty(4).unwrap(), 4).unwrap();
        assert!(c.letters.is_empty());
        assert_eq!(c.final_order, c.initial_order);
        let inv = annular_invariants(&c);
        assert!(inv.is_identity());
        assert!(inv.linking.values().all(|v| v.0 == 0));
        assert_eq!(inv.cycles(), "()");
    }

    #[test]
    fn initial_orders() {
        assert_eq!(initial_cyclic_order(5, 1), vec![2, 3, 4, 5]);
        assert_eq!(initial_cyclic_order(5, 3), vec![4, 5, 1, 2]);
        assert_eq!(initial_cyclic_order(4, 4), vec![1, 2, 3]);
    }

    #[test]
    fn generator_a13_around_axis_4() {
        let word = compile(&pure_braid_generator_program(4, 1, 3).unwrap())
            .unwrap()
            .word;
        let inv = annular_invariants(&reconstruct_axis(&word, 4).unwrap());
        assert!(inv.is_identity());
        assert_eq!(inv.linking_of(1, 3), HalfInteger::from_integer(1));
        assert_eq!(inv.linking_of(1, 2), HalfInteger(0));
        assert_eq!(inv.linking_of(2, 3), HalfInteger(0));
    }

    #[test]
    fn opposite_swaps_cancel() {
        let c = CylWord {
            n: 4,
            axis: 4,
            letters: vec![
                CylLetter {
                    inner: 1,
                    outer: 2,
                    sign: Sign::Pos,
                },
                CylLetter {
                    inner: 1,
                    outer: 2,
                    sign: Sign::Neg,
                },
            ],
            initial_order: vec![1, 2, 3],
            final_order: vec![1, 2, 3],
        };
        let inv = annular_invariants(&c);
        assert!(inv.is_identity());
        assert!(inv.linking.values().all(|v| v.0 == 0));
        assert_eq!(c.to_string(), "b(1,2,+) b(1,2,-)");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            reconstruct_axis(&w(&[[1, 3, 4], [1, 2, 3]]), 4),
            Err(ReconstructionError::NotRealisable { position: 1 })
        ));
        assert!(matches!(
            reconstruct_axis(&GWord::empty(4).unwrap(), 5),
            Err(ReconstructionError::BadAxis { .. })
        ));
    }

    #[test]
    fn full_twist_comparison() {
        let base = annular_invariants(&reconstruct_axis(&GWord::empty(4).unwrap(), 4).unwrap());
        assert_eq!(invariants_equal_mod_full_twist(&base, &base), Some(0));
        let mut shifted = base.clone();
        for v in shifted.linking.values_mut() {
            v.0 += 2;
        }
        assert_eq!(invariants_equal_mod_full_twist(&base, &shifted), Some(1));
        let mut single = base.clone();
        single.linking.insert((1, 2), HalfInteger(2));
        assert_eq!(invariants_equal_mod_full_twist(&base, &single), None);
        let mut half = base.clone();
        for v in half.linking.values_mut() {
            v.0 += 1;
        }
        assert_eq!(invariants_equal_mod_full_twist(&base, &half), None);
    }

    #[test]
    fn kernel_examples() {
        let twist = compile(&full_twist_program(4, 1).unwrap()).unwrap().word;
        assert_eq!(
            kernel_witness(&twist).unwrap(),
            KernelVerdict::TrivialConsistent
        );
        let a13 = compile(&pure_braid_generator_program(4, 1, 3).unwrap())
            .unwrap()
            .word;
        assert_eq!(
            kernel_witness(&a13).unwrap(),
            KernelVerdict::NontrivialByLinking {
                axis: 4,
                pair: (1, 3)
            }
        );
        assert_eq!(
            kernel_witness(&w(&[[1, 2, 3]])).unwrap(),
            KernelVerdict::NontrivialByParity
        );
    }

    #[test]
    fn text_block() {
        let word = compile(&pure_braid_generator_program(4, 1, 3).unwrap())
            .unwrap()
            .word;
        let text = annular_invariants(&reconstruct_axis(&word, 4).unwrap()).to_text();
        assert_eq!(
            text,
            "axis 4\npermutation ()\nlinking\n\t1\t2\t3\n1\t-\t0\t1\n2\t0\t-\t0\n3\t1\t0\t-\n"
        );
    }

    #[test]
    fn half_integer_display() {
        assert_eq!(HalfInteger(3).to_string(), "3/2");
        assert_eq!(HalfInteger(-4).to_string(), "-2");
    }
}
