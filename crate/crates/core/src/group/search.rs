use std::collections::{HashMap, VecDeque};
use std::fmt;

use super::moves::{applicable_moves, apply_move, generator_parity, RelationMove};
use super::word::GWord;
use super::GroupError;

/// Outcome of a bounded equality search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EqualityVerdict {
    /// The moves rewrite the first word into the second, in order.
    Equal(Vec<RelationMove>),
    /// An invariant separates the two words.
    Distinct(DistinctWitness),
    /// The search budget ran out without a decision.
    Unknown { explored: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistinctWitness {
    ParityMismatch,
}

impl fmt::Display for EqualityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EqualityVerdict::Equal(path) => write!(f, "Equal ({} moves)", path.len()),
            EqualityVerdict::Distinct(DistinctWitness::ParityMismatch) => {
                f.write_str("Distinct (parity mismatch)")
            }
            EqualityVerdict::Unknown { explored } => {
                write!(f, "Unknown (search limits reached after {explored} words)")
            }
        }
    }
}

/// Breadth-first search from `w1` towards `w2` over all relation moves.
///
/// At most `node_budget` words are expanded and no intermediate word exceeds
/// `max_len` letters. Inequality is only reported with a parity witness.
pub fn bounded_equal(
    w1: &GWord,
    w2: &GWord,
    node_budget: usize,
    max_len: usize,
) -> Result<EqualityVerdict, GroupError> {
    if w1.n() != w2.n() {
        return Err(GroupError::DimensionMismatch {
            expected: w1.n(),
            found: w2.n(),
        });
    }
    if generator_parity(w1) != generator_parity(w2) {
        return Ok(EqualityVerdict::Distinct(DistinctWitness::ParityMismatch));
    }
    if w1 == w2 {
        return Ok(EqualityVerdict::Equal(Vec::new()));
    }

    // node index -> (parent index, move taken from parent)
    let mut nodes: Vec<(GWord, Option<(usize, RelationMove)>)> = vec![(w1.clone(), None)];
    let mut seen: HashMap<GWord, usize> = HashMap::from([(w1.clone(), 0)]);
    let mut queue = VecDeque::from([0usize]);
    let mut expanded = 0;

    while let Some(idx) = queue.pop_front() {
        if expanded >= node_budget {
            break;
        }
        expanded += 1;
        let current = nodes[idx].0.clone();
        for m in applicable_moves(&current, true, max_len) {
            let next = apply_move(&current, m)?;
            if next.len() > max_len || seen.contains_key(&next) {
                continue;
            }
            let found = next == *w2;
            seen.insert(next.clone(), nodes.len());
            nodes.push((next, Some((idx, m))));
            if found {
                return Ok(EqualityVerdict::Equal(trace_path(&nodes, nodes.len() - 1)));
            }
            queue.push_back(nodes.len() - 1);
        }
    }
    Ok(EqualityVerdict::Unknown { explored: expanded })
}

fn trace_path(
    nodes: &[(GWord, Option<(usize, RelationMove)>)],
    mut idx: usize,
) -> Vec<RelationMove> {
    let mut path = Vec::new();
    while let Some((parent, m)) = nodes[idx].1 {
        path.push(m);
        idx = parent;
    }
    path.reverse();
    path
}

/// Applies `path` to `w` in order.
pub fn replay(w: &GWord, path: &[RelationMove]) -> Result<GWord, GroupError> {
    path.iter()
        .try_fold(w.clone(), |acc, &m| apply_move(&acc, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, t: &[[usize; 3]]) -> GWord {
        GWord::from_triples(n, t).unwrap()
    }

    #[test]
    fn tetrahedron_sides_are_one_move_apart() {
        let lhs = w(4, &[[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]);
        let rhs = lhs.inverse();
        match bounded_equal(&lhs, &rhs, 1000, 8).unwrap() {
            EqualityVerdict::Equal(path) => {
                assert_eq!(path, vec![RelationMove::TetraReverse(0)]);
                assert_eq!(replay(&lhs, &path).unwrap(), rhs);
            }
            v => panic!("unexpected {v}"),
        }
    }

    #[test]
    fn parity_separates() {
        let a = w(4, &[[1, 2, 3]]);
        let b = w(4, &[[1, 2, 4]]);
        let e = GWord::empty(4).unwrap();
        assert_eq!(
            bounded_equal(&a, &b, 10, 4).unwrap(),
            EqualityVerdict::Distinct(DistinctWitness::ParityMismatch)
        );
        assert_eq!(
            bounded_equal(&a, &e, 10, 4).unwrap(),
            EqualityVerdict::Distinct(DistinctWitness::ParityMismatch)
        );
    }

    #[test]
    fn dimension_mismatch() {
        let a = GWord::empty(4).unwrap();
        let b = GWord::empty(5).unwrap();
        assert!(matches!(
            bounded_equal(&a, &b, 10, 4),
            Err(GroupError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn insertion_path_replays() {
        // a123 a124 a124 a123 reduces to the empty word through two deletions.
        let x = w(4, &[[1, 2, 3], [1, 2, 4], [1, 2, 4], [1, 2, 3]]);
        let e = GWord::empty(4).unwrap();
        let EqualityVerdict::Equal(path) = bounded_equal(&e, &x, 5000, 4).unwrap() else {
            panic!("expected equal");
        };
        assert_eq!(replay(&e, &path).unwrap(), x);
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        // Same parity, but unreachable within a tiny budget.
        let a = w(
            5,
            &[
                [1, 2, 3],
                [1, 4, 5],
                [2, 3, 4],
                [1, 2, 3],
                [1, 4, 5],
                [2, 3, 4],
            ],
        );
        let b = GWord::empty(5).unwrap();
        assert!(matches!(
            bounded_equal(&a, &b, 1, 6).unwrap(),
            EqualityVerdict::Unknown { .. }
        ));
    }
}
