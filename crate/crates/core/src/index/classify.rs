//! Per-letter realisability and the bad-letter projection.
//!
//! A letter `a_{xcy}` met at state `s` is realisable with central element `c`
//! when every outside strand `p` sees the three points on the same side:
//! `(x,c,p) = (x,y,p) = (c,y,p)`. The condition only reads triples that
//! contain an outside strand, so a letter's status is the same before and
//! after its own flip.

use std::fmt;

use crate::group::{GWord, GenTriple, Strand};

use super::state::OrientationState;
use super::IndexError;

/// The central elements a letter is realisable for; empty means bad.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LetterStatus {
    centrals: Vec<Strand>,
}

impl LetterStatus {
    pub fn centrals(&self) -> &[Strand] {
        &self.centrals
    }

    pub fn is_good(&self) -> bool {
        !self.centrals.is_empty()
    }

    pub fn admits(&self, c: Strand) -> bool {
        self.centrals.contains(&c)
    }
}

impl fmt::Display for LetterStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.centrals.is_empty() {
            return f.write_str("bad");
        }
        f.write_str("good{")?;
        for (pos, c) in self.centrals.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

fn is_central(s: &OrientationState, x: Strand, c: Strand, y: Strand) -> bool {
    (1..=s.n()).filter(|p| ![x, c, y].contains(p)).all(|p| {
        let xc = s.signed_unchecked(x, c, p);
        xc == s.signed_unchecked(x, y, p) && xc == s.signed_unchecked(c, y, p)
    })
}

/// Central elements for which `g` is realisable at `s`.
pub fn letter_status(s: &OrientationState, g: &GenTriple) -> Result<LetterStatus, IndexError> {
    if g.n() != s.n() {
        return Err(IndexError::DimensionMismatch {
            expected: s.n(),
            found: g.n(),
        });
    }
    let [i, j, k] = g.elems();
    // (x, c, y) with c in the middle; reversing x and y gives the same test.
    let centrals = [(j, i, k), (i, j, k), (i, k, j)]
        .into_iter()
        .filter(|&(x, c, y)| is_central(s, x, c, y))
        .map(|(_, c, _)| c)
        .collect();
    Ok(LetterStatus { centrals })
}

/// A word read left to right from the initial state, with each letter's
/// status at its prefix state. Bad letters still act on the state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedWord {
    pub word: GWord,
    pub statuses: Vec<LetterStatus>,
    pub prefix_states: Vec<OrientationState>,
    pub final_state: OrientationState,
}

impl ClassifiedWord {
    pub fn is_realisable(&self) -> bool {
        self.statuses.iter().all(LetterStatus::is_good)
    }

    pub fn bad_positions(&self) -> Vec<usize> {
        self.statuses
            .iter()
            .enumerate()
            .filter(|(_, st)| !st.is_good())
            .map(|(pos, _)| pos)
            .collect()
    }

    pub fn good_count(&self) -> usize {
        self.statuses.iter().filter(|s| s.is_good()).count()
    }

    /// Plain-text table: position, letter, status.
    pub fn table(&self) -> String {
        let mut out = String::from("pos\tletter\tstatus\n");
        for (pos, (g, st)) in self.word.letters().iter().zip(&self.statuses).enumerate() {
            out.push_str(&format!("{}\t{g}\t{st}\n", pos + 1));
        }
        out.push_str(&format!(
            "realisable: {}\n",
            if self.is_realisable() { "yes" } else { "no" }
        ));
        out
    }
}

/// Classifies `w` starting from the regular configuration's state.
pub fn classify_word(w: &GWord) -> ClassifiedWord {
    let start = OrientationState::initial(w.n()).expect("GWord guarantees a valid strand count");
    classify_from(&start, w).expect("strand counts agree")
}

/// Classifies `w` starting from an arbitrary state.
pub fn classify_from(start: &OrientationState, w: &GWord) -> Result<ClassifiedWord, IndexError> {
    if start.n() != w.n() {
        return Err(IndexError::DimensionMismatch {
            expected: start.n(),
            found: w.n(),
        });
    }
    let mut state = start.clone();
    let mut statuses = Vec::with_capacity(w.len());
    let mut prefix_states = Vec::with_capacity(w.len());
    for g in w.letters() {
        statuses.push(letter_status(&state, g)?);
        prefix_states.push(state.clone());
        state.flip_in_place(g)?;
    }
    Ok(ClassifiedWord {
        word: w.clone(),
        statuses,
        prefix_states,
        final_state: state,
    })
}

/// Deletes every bad letter of `w`.
pub fn project_once(w: &GWord) -> GWord {
    let classified = classify_word(w);
    let mut statuses = classified.statuses.iter();
    w.filtered(|_| statuses.next().is_some_and(LetterStatus::is_good))
}

/// Iterates [`project_once`] to a fixed point, returning the fixed point
/// and the number of passes (the last pass deletes nothing).
pub fn stable_projection(w: &GWord) -> (GWord, usize) {
    let mut current = w.clone();
    let mut passes = 0;
    loop {
        passes += 1;
        let next = project_once(&current);
        if next.len() == current.len() {
            return (next, passes);
        }
        current = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: usize, b: usize, c: usize) -> GenTriple {
        GenTriple::new(4, a, b, c).unwrap()
    }

    fn w(t: &[[usize; 3]]) -> GWord {
        GWord::from_triples(4, t).unwrap()
    }

    /// Independent evaluation: the three central conditions at n = 4 reduce
    /// to sign patterns of x = (i,j,l), y = (i,k,l), z = (j,k,l) for the
    /// single outside strand l, read from the sorted stored values.
    fn brute_centrals(s: &OrientationState, t: GenTriple) -> Vec<usize> {
        let [i, j, k] = t.elems();
        let l = (1..=4).find(|p| !t.contains(*p)).unwrap();
        let v = |a: usize, b: usize, c: usize| s.signed_index(a, b, c).unwrap().to_i64();
        let (x, y, z) = (v(i, j, l), v(i, k, l), v(j, k, l));
        let mut out = Vec::new();
        // central i: (j,i,l) = (j,k,l) = (i,k,l)  ->  -x = z = y
        if -x == z && z == y {
            out.push(i);
        }
        // central j: (i,j,l) = (i,k,l) = (j,k,l)  ->  x = y = z
        if x == y && y == z {
            out.push(j);
        }
        // central k: (i,k,l) = (i,j,l) = (k,j,l)  ->  y = x = -z
        if y == x && x == -z {
            out.push(k);
        }
        out
    }

    #[test]
    fn tetra_images_can_differ_by_a_non_relation_swap() {
        let lhs = GWord::parse("a134 a234 a134 a124 a123", 4).unwrap();
        let rhs = GWord::parse("a134 a123 a124 a134 a234", 4).unwrap();
        let (pl, pr) = (project_once(&lhs), project_once(&rhs));
        assert_eq!(pl.to_string(), "a134 a234 a134");
        assert_eq!(pr.to_string(), "a134 a134 a234");
        // the swapped letters share two indices, so no single relation links the images
        assert_eq!(pl.letters()[1].shared(&pl.letters()[2]), 2);
        let one_step = crate::group::applicable_moves(&pl, true, pl.len() + 2)
            .into_iter()
            .any(|m| crate::group::apply_move(&pl, m).is_ok_and(|r| r == pr));
        assert!(!one_step);
    }

    #[test]
    fn matches_sign_pattern_oracle() {
        for id in 0..16 {
            let s = OrientationState::from_id(4, id).unwrap();
            for t in GenTriple::all(4) {
                let got = letter_status(&s, &t).unwrap();
                assert_eq!(
                    got.centrals(),
                    brute_centrals(&s, t).as_slice(),
                    "state {id} letter {t}"
                );
            }
        }
    }

    #[test]
    fn letter_status_examples() {
        let s = OrientationState::initial(4).unwrap();
        assert_eq!(letter_status(&s, &g(1, 2, 3)).unwrap().centrals(), &[2]);
        assert_eq!(letter_status(&s, &g(1, 3, 4)).unwrap().centrals(), &[4]);
        let after = s.flip(&g(1, 3, 4)).unwrap();
        assert!(!letter_status(&after, &g(1, 2, 3)).unwrap().is_good());
    }

    #[test]
    fn at_most_one_central() {
        for n in [4, 5] {
            let total = 1u64 << num::integer::binomial(n, 3);
            for id in (0..total).step_by(7) {
                let s = OrientationState::from_id(n, id).unwrap();
                for t in GenTriple::all(n) {
                    assert!(letter_status(&s, &t).unwrap().centrals().len() <= 1);
                }
            }
        }
    }

    #[test]
    fn classify_examples() {
        let c = classify_word(&w(&[[1, 3, 4], [1, 2, 3]]));
        assert_eq!(c.statuses[0].centrals(), &[4]);
        assert!(!c.statuses[1].is_good());
        assert!(!c.is_realisable());
        assert_eq!(c.bad_positions(), vec![1]);

        let c = classify_word(&w(&[[1, 2, 3], [1, 2, 3]]));
        assert!(c.statuses.iter().all(LetterStatus::is_good));

        let c = classify_word(&GWord::empty(4).unwrap());
        assert!(c.is_realisable());
        assert!(c.statuses.is_empty());
        assert_eq!(c.final_state, OrientationState::initial(4).unwrap());
    }

    #[test]
    fn prefix_states_chain() {
        let x = w(&[[1, 3, 4], [1, 2, 3], [2, 3, 4], [1, 2, 3]]);
        let c = classify_word(&x);
        assert_eq!(c.prefix_states[0], OrientationState::initial(4).unwrap());
        for t in 0..x.len() - 1 {
            assert_eq!(
                c.prefix_states[t + 1],
                c.prefix_states[t].flip(&x.letters()[t]).unwrap()
            );
        }
        assert_eq!(
            c.final_state,
            c.prefix_states[3].flip(&x.letters()[3]).unwrap()
        );
    }

    #[test]
    fn projection_examples() {
        let x = w(&[[1, 3, 4], [1, 2, 3]]);
        assert_eq!(project_once(&x), w(&[[1, 3, 4]]));
        assert_eq!(stable_projection(&x), (w(&[[1, 3, 4]]), 2));
        let real = w(&[[1, 2, 3], [1, 2, 3]]);
        assert_eq!(project_once(&real), real);
        assert_eq!(stable_projection(&real), (real.clone(), 1));
        let e = GWord::empty(4).unwrap();
        assert_eq!(project_once(&e), e);
    }

    #[test]
    fn table_marks_bad_letter() {
        let t = classify_word(&w(&[[1, 3, 4], [1, 2, 3]])).table();
        assert!(t.contains("1\ta134\tgood{4}"));
        assert!(t.contains("2\ta123\tbad"));
        assert!(t.ends_with("realisable: no\n"));
    }
}
