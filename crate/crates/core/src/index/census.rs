//! Exhaustive (or seeded) status censuses over relation instances.
//!
//! Each case fixes a prefix state and classifies the letters of both sides of
//! one relation starting from it.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::group::{GWord, GenTriple, Strand};

use super::classify::{classify_from, LetterStatus};
use super::state::OrientationState;
use super::IndexError;

/// Number of sampled states when the state space is too large to enumerate.
pub const SAMPLED_STATES: usize = 512;
/// Seed for sampled censuses.
pub const CENSUS_SEED: u64 = 0x6e33_c3e5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lemma {
    Tetra,
    Square,
    Commute,
}

impl FromStr for Lemma {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "tetra" => Ok(Lemma::Tetra),
            "square" => Ok(Lemma::Square),
            "commute" => Ok(Lemma::Commute),
            other => Err(format!(
                "unknown lemma `{other}` (expected tetra, square or commute)"
            )),
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Lemma::Tetra => "tetra",
            Lemma::Square => "square",
            Lemma::Commute => "commute",
        })
    }
}

/// One relation instance at one prefix state.
#[derive(Debug, Clone)]
pub struct CensusRow {
    /// State id, or the sample index for sampled censuses.
    pub state: u64,
    pub lhs: Vec<(GenTriple, LetterStatus)>,
    pub rhs: Vec<(GenTriple, LetterStatus)>,
    pub violations: Vec<String>,
}

impl CensusRow {
    fn good_count(side: &[(GenTriple, LetterStatus)]) -> usize {
        side.iter().filter(|(_, st)| st.is_good()).count()
    }

    pub fn lhs_good(&self) -> usize {
        Self::good_count(&self.lhs)
    }

    pub fn rhs_good(&self) -> usize {
        Self::good_count(&self.rhs)
    }
}

#[derive(Debug, Clone)]
pub struct CensusReport {
    pub lemma: Lemma,
    pub n: usize,
    pub exhaustive: bool,
    pub rows: Vec<CensusRow>,
}

impl CensusReport {
    pub fn violation_count(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| !r.violations.is_empty())
            .count()
    }

    /// Histogram of (LHS good count, RHS good count).
    pub fn good_count_histogram(&self) -> BTreeMap<(usize, usize), usize> {
        let mut hist = BTreeMap::new();
        for r in &self.rows {
            *hist.entry((r.lhs_good(), r.rhs_good())).or_insert(0) += 1;
        }
        hist
    }

    pub fn summary(&self) -> String {
        let hist: Vec<String> = self
            .good_count_histogram()
            .iter()
            .map(|((l, r), c)| format!("{l}/{r}:{c}"))
            .collect();
        format!(
            "census {} n={} ({}): {} cases, {} violations; good counts lhs/rhs {}",
            self.lemma,
            self.n,
            if self.exhaustive {
                "exhaustive"
            } else {
                "sampled"
            },
            self.rows.len(),
            self.violation_count(),
            hist.join(" ")
        )
    }

    /// Tab-separated table with one line per case, followed by the summary.
    pub fn table(&self) -> String {
        let side = |s: &[(GenTriple, LetterStatus)]| {
            s.iter()
                .map(|(g, st)| format!("{g}:{st}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut out = String::from("state\tlhs\trhs\tviolation\n");
        for r in &self.rows {
            let v = if r.violations.is_empty() {
                String::from("-")
            } else {
                r.violations.join("; ")
            };
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                r.state,
                side(&r.lhs),
                side(&r.rhs),
                v
            ));
        }
        out.push_str(&self.summary());
        out.push('\n');
        out
    }
}

/// States to iterate over: all of them when they fit, a seeded sample otherwise.
fn census_states(n: usize, exhaustive: bool) -> Result<Vec<(u64, OrientationState)>, IndexError> {
    let triples = num::integer::binomial(n, 3);
    if exhaustive {
        (0..1u64 << triples)
            .map(|id| Ok((id, OrientationState::from_id(n, id)?)))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(CENSUS_SEED);
        let gens = GenTriple::all(n);
        (0..SAMPLED_STATES as u64)
            .map(|sample| {
                let mut s = OrientationState::initial(n)?;
                for g in &gens {
                    if rng.gen::<bool>() {
                        s.flip_in_place(g)?;
                    }
                }
                Ok((sample, s))
            })
            .collect()
    }
}

fn classify_side(
    state: &OrientationState,
    letters: &[GenTriple],
) -> Result<Vec<(GenTriple, LetterStatus)>, IndexError> {
    let w =
        GWord::new(state.n(), letters.to_vec()).expect("letters share the state's strand count");
    let c = classify_from(state, &w)?;
    Ok(letters.iter().copied().zip(c.statuses).collect())
}

/// All 24 orderings of a 4-set, as index tuples.
pub(crate) fn orderings(set: [Strand; 4]) -> Vec<[Strand; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in (0..4).filter(|&b| b != a) {
            for c in (0..4).filter(|&c| c != a && c != b) {
                let d = 6 - a - b - c;
                out.push([set[a], set[b], set[c], set[d]]);
            }
        }
    }
    out
}

/// The tetrahedron word `a_{U∖u1} a_{U∖u2} a_{U∖u3} a_{U∖u4}` for an ordered 4-tuple.
pub fn tetra_word(n: usize, tuple: [Strand; 4]) -> Result<Vec<GenTriple>, IndexError> {
    (0..4)
        .map(|skip| {
            let rest: Vec<Strand> = (0..4).filter(|&p| p != skip).map(|p| tuple[p]).collect();
            GenTriple::new(n, rest[0], rest[1], rest[2]).map_err(|_| IndexError::InvalidN(n))
        })
        .collect()
}

/// Whether some total order of `set` makes every letter realisable with
/// respect to its middle element.
fn has_consistent_order(set: [Strand; 4], sides: &[&[(GenTriple, LetterStatus)]]) -> bool {
    orderings(set).into_iter().any(|order| {
        let pos = |s: Strand| {
            order
                .iter()
                .position(|&o| o == s)
                .expect("letter inside the 4-set")
        };
        sides.iter().all(|side| {
            side.iter().all(|(g, st)| {
                let mut e = g.elems();
                e.sort_by_key(|&s| pos(s));
                st.admits(e[1])
            })
        })
    })
}

fn tetra_census() -> Result<CensusReport, IndexError> {
    let n = 4;
    let mut rows = Vec::new();
    for (id, state) in census_states(n, true)? {
        for tuple in orderings([1, 2, 3, 4]) {
            let lhs_letters = tetra_word(n, tuple)?;
            let rhs_letters: Vec<GenTriple> = lhs_letters.iter().rev().copied().collect();
            let lhs = classify_side(&state, &lhs_letters)?;
            let rhs = classify_side(&state, &rhs_letters)?;
            let mut row = CensusRow {
                state: id,
                lhs,
                rhs,
                violations: Vec::new(),
            };
            let (l, r) = (row.lhs_good(), row.rhs_good());
            for (side, count) in [("lhs", l), ("rhs", r)] {
                if ![0, 1, 4].contains(&count) {
                    row.violations
                        .push(format!("{side} good count {count} not in {{0,1,4}}"));
                }
            }
            if l != r {
                row.violations
                    .push(format!("good counts differ: {l} vs {r}"));
            }
            if l == 1 && r == 1 {
                let survivor = |s: &[(GenTriple, LetterStatus)]| {
                    s.iter().find(|(_, st)| st.is_good()).map(|(g, _)| *g)
                };
                if survivor(&row.lhs) != survivor(&row.rhs) {
                    row.violations
                        .push(String::from("singleton survivors differ"));
                }
            }
            if l == 4 && !has_consistent_order([1, 2, 3, 4], &[&row.lhs, &row.rhs]) {
                row.violations
                    .push(String::from("no total order realises all four letters"));
            }
            rows.push(row);
        }
    }
    Ok(CensusReport {
        lemma: Lemma::Tetra,
        n,
        exhaustive: true,
        rows,
    })
}

fn square_census() -> Result<CensusReport, IndexError> {
    let n = 4;
    let mut rows = Vec::new();
    for (id, state) in census_states(n, true)? {
        for g in GenTriple::all(n) {
            let lhs = classify_side(&state, &[g, g])?;
            let mut violations = Vec::new();
            if lhs[0].1 != lhs[1].1 {
                violations.push(format!("{g}: copies differ ({} vs {})", lhs[0].1, lhs[1].1));
            }
            rows.push(CensusRow {
                state: id,
                lhs,
                rhs: Vec::new(),
                violations,
            });
        }
    }
    Ok(CensusReport {
        lemma: Lemma::Square,
        n,
        exhaustive: true,
        rows,
    })
}

/// Ordered pairs of generators sharing at most one index.
pub fn far_pairs(n: usize) -> Vec<(GenTriple, GenTriple)> {
    let gens = GenTriple::all(n);
    let mut out = Vec::new();
    for a in &gens {
        for b in &gens {
            if a.shared(b) <= 1 {
                out.push((*a, *b));
            }
        }
    }
    out
}

fn commute_census(n: usize) -> Result<CensusReport, IndexError> {
    let exhaustive = n == 5;
    let pairs = far_pairs(n);
    let mut rows = Vec::new();
    for (id, state) in census_states(n, exhaustive)? {
        for &(a, b) in &pairs {
            let lhs = classify_side(&state, &[a, b])?;
            let rhs = classify_side(&state, &[b, a])?;
            let mut violations = Vec::new();
            if lhs[0].1 != rhs[1].1 {
                violations.push(format!("{a} changes status under the swap"));
            }
            if lhs[1].1 != rhs[0].1 {
                violations.push(format!("{b} changes status under the swap"));
            }
            rows.push(CensusRow {
                state: id,
                lhs,
                rhs,
                violations,
            });
        }
    }
    Ok(CensusReport {
        lemma: Lemma::Commute,
        n,
        exhaustive,
        rows,
    })
}

/// Runs the status census for one relation family.
///
/// Tetrahedron and square censuses are exhaustive at n = 4. The commutation
/// census is exhaustive at n = 5 and sampled with a fixed seed for n ≥ 6.
pub fn relation_census(n: usize, lemma: Lemma) -> Result<CensusReport, IndexError> {
    match (lemma, n) {
        (Lemma::Tetra, 4) => tetra_census(),
        (Lemma::Square, 4) => square_census(),
        (Lemma::Commute, n) if (5..=crate::group::MAX_STRANDS).contains(&n) => commute_census(n),
        _ => Err(IndexError::UnsupportedN {
            lemma: lemma.to_string(),
            n,
        }),
    }
}

/// Checks that both sides of every relation instance act identically on
/// every state. Returns (cases checked, violations). Exhaustive for n ∈ {4, 5}.
pub fn action_consistency(n: usize) -> Result<(usize, usize), IndexError> {
    if !(4..=5).contains(&n) {
        return Err(IndexError::UnsupportedN {
            lemma: String::from("action"),
            n,
        });
    }
    let mut patterns: Vec<(Vec<GenTriple>, Vec<GenTriple>)> = Vec::new();
    for g in GenTriple::all(n) {
        patterns.push((vec![g, g], Vec::new()));
    }
    for (a, b) in far_pairs(n) {
        patterns.push((vec![a, b], vec![b, a]));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    for tuple in orderings([i, j, k, l]) {
                        let lhs = tetra_word(n, tuple)?;
                        let rhs = lhs.iter().rev().copied().collect();
                        patterns.push((lhs, rhs));
                    }
                }
            }
        }
    }
    let mut checked = 0;
    let mut violations = 0;
    for (_, state) in census_states(n, true)? {
        for (lhs, rhs) in &patterns {
            let run = |letters: &[GenTriple]| -> Result<OrientationState, IndexError> {
                let mut s = state.clone();
                for g in letters {
                    s.flip_in_place(g)?;
                }
                Ok(s)
            };
            checked += 1;
            if run(lhs)? != run(rhs)? {
                violations += 1;
            }
        }
    }
    Ok((checked, violations))
}
