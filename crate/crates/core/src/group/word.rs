//! Generators and words of the free 3-braid group `G(n,3)`.
//!
//! A generator `a_m` is indexed by a 3-subset `m` of `{1..n}`; the order in
//! which the indices are written is irrelevant, so every generator is stored
//! with sorted indices.

use std::fmt;

use super::GroupError;

/// Strand identifier, 1-based.
pub type Strand = usize;

/// Smallest strand count for which the classifier and geometry are defined.
pub const MIN_STRANDS: usize = 4;

/// Largest strand count accepted by the text formats.
pub const MAX_STRANDS: usize = 64;

pub(crate) fn check_n(n: usize) -> Result<(), GroupError> {
    if (MIN_STRANDS..=MAX_STRANDS).contains(&n) {
        Ok(())
    } else {
        Err(GroupError::InvalidN(n))
    }
}

/// A generator index set of arbitrary size `k`.
///
/// Parsing accepts any arity; only 3-subsets carry group semantics (see
/// [`GenTriple`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSubset {
    n: usize,
    elems: Vec<Strand>,
}

impl GenSubset {
    pub fn new(n: usize, indices: &[Strand]) -> Result<Self, GroupError> {
        check_n(n)?;
        let mut elems = indices.to_vec();
        elems.sort_unstable();
        for &e in &elems {
            if e == 0 || e > n {
                return Err(GroupError::IndexOutOfRange { index: e, n });
            }
        }
        if elems.windows(2).any(|w| w[0] == w[1]) {
            return Err(GroupError::RepeatedIndex(indices.to_vec()));
        }
        if elems.is_empty() {
            return Err(GroupError::BadLetter(String::from("empty index set")));
        }
        Ok(Self { n, elems })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arity(&self) -> usize {
        self.elems.len()
    }

    pub fn elems(&self) -> &[Strand] {
        &self.elems
    }

    /// Parses `aijk...` (one digit per index, n ≤ 9) or `a(i,j,...)`.
    pub fn parse(text: &str, n: usize) -> Result<Self, GroupError> {
        let bad = || GroupError::BadLetter(text.to_string());
        let body = text.strip_prefix('a').ok_or_else(bad)?;
        let indices: Vec<Strand> = if let Some(inner) = body.strip_prefix('(') {
            let inner = inner.strip_suffix(')').ok_or_else(bad)?;
            inner
                .split(',')
                .map(|s| s.trim().parse::<Strand>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            if body.is_empty() || n > 9 {
                return Err(bad());
            }
            body.chars()
                .map(|c| c.to_digit(10).map(|d| d as Strand).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        Self::new(n, &indices)
    }
}

impl fmt::Display for GenSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letter(f, self.n, &self.elems)
    }
}

fn write_letter(f: &mut fmt::Formatter<'_>, n: usize, elems: &[Strand]) -> fmt::Result {
    if n <= 9 {
        f.write_str("a")?;
        for e in elems {
            write!(f, "{e}")?;
        }
        Ok(())
    } else {
        f.write_str("a(")?;
        for (pos, e) in elems.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// A generator `a_{ijk}` of `G(n,3)`, stored as `i < j < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenTriple {
    n: usize,
    elems: [Strand; 3],
}

impl GenTriple {
    /// Builds the generator from three distinct indices in any order.
    pub fn new(n: usize, a: Strand, b: Strand, c: Strand) -> Result<Self, GroupError> {
        let subset = GenSubset::new(n, &[a, b, c])?;
        Self::try_from(subset)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elems(&self) -> [Strand; 3] {
        self.elems
    }

    pub fn contains(&self, s: Strand) -> bool {
        self.elems.contains(&s)
    }

    /// Number of indices shared with `other`.
    pub fn shared(&self, other: &GenTriple) -> usize {
        self.elems.iter().filter(|e| other.contains(**e)).count()
    }

    /// The two indices other than `s`, in increasing order.
    pub fn others(&self, s: Strand) -> Option<[Strand; 2]> {
        let rest: Vec<Strand> = self.elems.iter().copied().filter(|&e| e != s).collect();
        (rest.len() == 2).then(|| [rest[0], rest[1]])
    }

    /// All generators of `G(n,3)` in lexicographic order.
    pub fn all(n: usize) -> Vec<GenTriple> {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    out.push(GenTriple {
                        n,
                        elems: [i, j, k],
                    });
                }
            }
        }
        out
    }

    pub fn parse(text: &str, n: usize) -> Result<Self, GroupError> {
        Self::try_from(GenSubset::parse(text, n)?)
    }
}

impl TryFrom<GenSubset> for GenTriple {
    type Error = GroupError;

    fn try_from(subset: GenSubset) -> Result<Self, GroupError> {
        match subset.elems[..] {
            [i, j, k] => Ok(GenTriple {
                n: subset.n,
                elems: [i, j, k],
            }),
            _ => Err(GroupError::UnsupportedArity(subset.arity())),
        }
    }
}

impl fmt::Display for GenTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letter(f, self.n, &self.elems)
    }
}

/// A word in the generators of `G(n,3)`. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GWord {
    n: usize,
    letters: Vec<GenTriple>,
}

impl GWord {
    pub fn empty(n: usize) -> Result<Self, GroupError> {
        check_n(n)?;
        Ok(Self {
            n,
            letters: Vec::new(),
        })
    }

    pub fn new(n: usize, letters: Vec<GenTriple>) -> Result<Self, GroupError> {
        check_n(n)?;
        if let Some(bad) = letters.iter().find(|g| g.n != n) {
            return Err(GroupError::DimensionMismatch {
                expected: n,
                found: bad.n,
            });
        }
        Ok(Self { n, letters })
    }

    /// Shorthand for tests and fixtures: each entry is an unordered triple.
    pub fn from_triples(n: usize, triples: &[[Strand; 3]]) -> Result<Self, GroupError> {
        let letters = triples
            .iter()
            .map(|t| GenTriple::new(n, t[0], t[1], t[2]))
            .collect::<Result<_, _>>()?;
        Self::new(n, letters)
    }

    /// Parses whitespace-separated letters; whitespace inside `a(...)` is allowed.
    pub fn parse(text: &str, n: usize) -> Result<Self, GroupError> {
        let letters = tokenize(text)
            .iter()
            .map(|tok| GenTriple::parse(tok, n))
            .collect::<Result<_, _>>()?;
        Self::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[GenTriple] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn into_letters(self) -> Vec<GenTriple> {
        self.letters
    }

    pub(crate) fn with_letters(&self, letters: Vec<GenTriple>) -> Self {
        Self { n: self.n, letters }
    }

    pub fn push(&mut self, g: GenTriple) -> Result<(), GroupError> {
        if g.n != self.n {
            return Err(GroupError::DimensionMismatch {
                expected: self.n,
                found: g.n,
            });
        }
        self.letters.push(g);
        Ok(())
    }

    /// The formal inverse: letters reversed (every generator is an involution).
    pub fn inverse(&self) -> Self {
        self.with_letters(self.letters.iter().rev().copied().collect())
    }

    /// Keeps only the letters satisfying `keep`, preserving order.
    pub fn filtered(&self, mut keep: impl FnMut(&GenTriple) -> bool) -> Self {
        self.with_letters(self.letters.iter().copied().filter(|g| keep(g)).collect())
    }

    /// Re-indexes the word into `G(m,3)` for `m ≥ n`.
    pub fn widen(&self, m: usize) -> Result<Self, GroupError> {
        check_n(m)?;
        if m < self.n {
            return Err(GroupError::DimensionMismatch {
                expected: self.n,
                found: m,
            });
        }
        let letters = self
            .letters
            .iter()
            .map(|g| GenTriple {
                n: m,
                elems: g.elems,
            })
            .collect();
        Ok(Self { n: m, letters })
    }
}

fn tokenize(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut depth = 0usize;
    for c in text.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            _ => {}
        }
        if c.is_whitespace() {
            if depth == 0 && !current.is_empty() {
                tokens.push(std::mem::take(&mut current));
            }
        } else {
            current.push(c);
        }
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    tokens
}

impl fmt::Display for GWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, g) in self.letters.iter().enumerate() {
            if pos > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
