use std::fmt;
use std::ops::{Mul, Neg};

use crate::group::{GWord, GenTriple, Strand};

use super::IndexError;

/// A ±1 value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_bool_negative(negative: bool) -> Self {
        if negative {
            Sign::Neg
        } else {
            Sign::Pos
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Pos => "+1",
            Sign::Neg => "-1",
        })
    }
}

/// Colex rank of a sorted 1-based triple; for n = 4 this coincides with the
/// lexicographic order a123, a124, a134, a234.
pub fn triple_rank(elems: [Strand; 3]) -> usize {
    let [a, b, c] = elems.map(|e| e - 1);
    a + b * (b - 1) / 2 + c * (c - 1) * (c - 2) / 6
}

/// Sign of the permutation sorting three distinct values.
fn sort_sign(i: Strand, j: Strand, k: Strand) -> Sign {
    let inversions = usize::from(i > j) + usize::from(i > k) + usize::from(j > k);
    Sign::from_bool_negative(inversions % 2 == 1)
}

/// Triple indices `(i,j,k) ∈ {±1}`, stored on sorted triples.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientationState {
    n: usize,
    negative: Vec<bool>,
}

impl OrientationState {
    /// The indices of the regular n-gon: every sorted triple is +1, because
    /// `j - i < k - i` for `i < j < k`.
    pub fn initial(n: usize) -> Result<Self, IndexError> {
        crate::group::check_n(n).map_err(|_| IndexError::InvalidN(n))?;
        Ok(Self {
            n,
            negative: vec![false; num::integer::binomial(n, 3)],
        })
    }

    /// State whose sorted triple of colex rank `r` is −1 iff bit `r` of `id` is set.
    pub fn from_id(n: usize, id: u64) -> Result<Self, IndexError> {
        let mut s = Self::initial(n)?;
        let count = s.negative.len();
        if count > 64 || (count < 64 && id >> count != 0) {
            return Err(IndexError::StateId { n, id });
        }
        for (r, slot) in s.negative.iter_mut().enumerate() {
            *slot = id >> r & 1 == 1;
        }
        Ok(s)
    }

    /// Inverse of [`from_id`](Self::from_id), when the state fits in 64 bits.
    pub fn id(&self) -> Option<u64> {
        (self.negative.len() <= 64).then(|| {
            self.negative
                .iter()
                .enumerate()
                .fold(0u64, |acc, (r, &neg)| acc | (u64::from(neg) << r))
        })
    }

    /// Number of sorted triples, i.e. `C(n,3)`.
    pub fn triple_count(&self) -> usize {
        self.negative.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Stored value of a generator's sorted triple.
    pub fn value(&self, g: &GenTriple) -> Sign {
        Sign::from_bool_negative(self.negative[triple_rank(g.elems())])
    }

    /// `(i,j,k)` for an ordered triple of distinct strands.
    pub fn signed_index(&self, i: Strand, j: Strand, k: Strand) -> Result<Sign, IndexError> {
        let in_range = |s: Strand| (1..=self.n).contains(&s);
        if i == j || j == k || i == k || !in_range(i) || !in_range(j) || !in_range(k) {
            return Err(IndexError::BadTriple {
                triple: [i, j, k],
                n: self.n,
            });
        }
        Ok(self.signed_unchecked(i, j, k))
    }

    pub(crate) fn signed_unchecked(&self, i: Strand, j: Strand, k: Strand) -> Sign {
        let mut sorted = [i, j, k];
        sorted.sort_unstable();
        sort_sign(i, j, k) * Sign::from_bool_negative(self.negative[triple_rank(sorted)])
    }

    fn check(&self, n: usize) -> Result<(), IndexError> {
        if n == self.n {
            Ok(())
        } else {
            Err(IndexError::DimensionMismatch {
                expected: self.n,
                found: n,
            })
        }
    }

    /// Negates the entry of `g`'s triple.
    pub fn flip(&self, g: &GenTriple) -> Result<Self, IndexError> {
        let mut out = self.clone();
        out.flip_in_place(g)?;
        Ok(out)
    }

    pub fn flip_in_place(&mut self, g: &GenTriple) -> Result<(), IndexError> {
        self.check(g.n())?;
        let r = triple_rank(g.elems());
        self.negative[r] = !self.negative[r];
        Ok(())
    }

    /// Acts by the letters of `w`, left to right.
    pub fn run_word(&self, w: &GWord) -> Result<Self, IndexError> {
        self.check(w.n())?;
        let mut out = self.clone();
        for g in w.letters() {
            out.flip_in_place(g)?;
        }
        Ok(out)
    }
}

impl fmt::Display for OrientationState {
    /// Values listed in lexicographic triple order, e.g. `123:+ 124:- ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, g) in GenTriple::all(self.n).iter().enumerate() {
            if pos > 0 {
                f.write_str(" ")?;
            }
            let sym = if self.value(g) == Sign::Pos { '+' } else { '-' };
            let [i, j, k] = g.elems();
            if self.n <= 9 {
                write!(f, "{i}{j}{k}:{sym}")?;
            } else {
                write!(f, "({i},{j},{k}):{sym}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, a: usize, b: usize, c: usize) -> GenTriple {
        GenTriple::new(n, a, b, c).unwrap()
    }

    #[test]
    fn ranks_are_a_bijection() {
        for n in 4..=9 {
            let mut ranks: Vec<usize> = GenTriple::all(n)
                .iter()
                .map(|t| triple_rank(t.elems()))
                .collect();
            ranks.sort_unstable();
            assert_eq!(ranks, (0..num::integer::binomial(n, 3)).collect::<Vec<_>>());
        }
        let lex: Vec<usize> = GenTriple::all(4)
            .iter()
            .map(|t| triple_rank(t.elems()))
            .collect();
        assert_eq!(lex, vec![0, 1, 2, 3]);
    }

    #[test]
    fn initial_state_examples() {
        let s = OrientationState::initial(4).unwrap();
        for t in GenTriple::all(4) {
            assert_eq!(s.value(&t), Sign::Pos);
        }
        let s5 = OrientationState::initial(5).unwrap();
        assert_eq!(s5.signed_index(2, 1, 3).unwrap(), Sign::Neg);
        assert_eq!(s.signed_index(2, 3, 1).unwrap(), Sign::Pos);
        assert!(matches!(
            OrientationState::initial(3),
            Err(IndexError::InvalidN(3))
        ));
    }

    #[test]
    fn signed_index_examples() {
        let s = OrientationState::initial(4).unwrap();
        assert_eq!(s.signed_index(3, 2, 1).unwrap(), Sign::Neg);
        assert_eq!(s.signed_index(2, 3, 1).unwrap(), Sign::Pos);
        let s2 = s.flip(&g(4, 1, 2, 3)).unwrap();
        assert_eq!(s2.signed_index(1, 2, 3).unwrap(), Sign::Neg);
        assert!(matches!(
            s.signed_index(1, 1, 2),
            Err(IndexError::BadTriple { .. })
        ));
        assert!(matches!(
            s.signed_index(1, 2, 5),
            Err(IndexError::BadTriple { .. })
        ));
    }

    #[test]
    fn antisymmetry_on_all_orderings() {
        let s = OrientationState::from_id(5, 0b1011001101).unwrap();
        for t in GenTriple::all(5) {
            let [i, j, k] = t.elems();
            let v = s.value(&t);
            assert_eq!(s.signed_index(j, k, i).unwrap(), v);
            assert_eq!(s.signed_index(k, i, j).unwrap(), v);
            assert_eq!(s.signed_index(j, i, k).unwrap(), -v);
            assert_eq!(s.signed_index(i, k, j).unwrap(), -v);
            assert_eq!(s.signed_index(k, j, i).unwrap(), -v);
        }
    }

    #[test]
    fn flip_examples() {
        let s = OrientationState::initial(4).unwrap();
        let a123 = g(4, 1, 2, 3);
        let s1 = s.flip(&a123).unwrap();
        assert_eq!(s1.value(&a123), Sign::Neg);
        for t in GenTriple::all(4).into_iter().filter(|t| *t != a123) {
            assert_eq!(s1.value(&t), Sign::Pos);
        }
        assert_eq!(s1.flip(&a123).unwrap(), s);
        let s2 = s.flip(&g(4, 1, 2, 4)).unwrap();
        assert_eq!(s2.value(&g(4, 1, 3, 4)), Sign::Pos);
        assert!(matches!(
            s.flip(&g(5, 1, 2, 3)),
            Err(IndexError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn run_word_examples() {
        let s = OrientationState::initial(4).unwrap();
        let lhs = GWord::from_triples(4, &[[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]).unwrap();
        assert_eq!(
            s.run_word(&lhs).unwrap(),
            s.run_word(&lhs.inverse()).unwrap()
        );
        assert_eq!(s.run_word(&GWord::empty(4).unwrap()).unwrap(), s);
    }

    #[test]
    fn ids_round_trip() {
        for id in 0..16 {
            let s = OrientationState::from_id(4, id).unwrap();
            assert_eq!(s.id(), Some(id));
        }
        assert!(OrientationState::from_id(4, 16).is_err());
        assert_eq!(
            OrientationState::from_id(4, 0b0010).unwrap().to_string(),
            "123:+ 124:- 134:+ 234:+"
        );
    }
}
