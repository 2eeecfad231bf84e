//! Permutations of `{1, …, n+1}` viewed as elements of the Coxeter system
//! `A_n`, together with words and generator subsets.
//!
//! Composition is right-to-left: `(x * y)(i) = x(y(i))`, so the word
//! `s2 s1` evaluates to `s2 * s1`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// The subscript `n` of `A_n`. The group acts on `n + 1` letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rank(usize);

impl Rank {
    /// Largest supported rank; one-line entries are stored as bytes.
    pub const MAX: usize = 250;

    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > Self::MAX {
            return Err(Error::InvalidRank(n));
        }
        Ok(Rank(n))
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0
    }

    /// Number of letters permuted, `n + 1`.
    #[inline]
    pub fn letters(self) -> usize {
        self.0 + 1
    }

    /// Number of positive roots, `n(n+1)/2`.
    pub fn positive_root_count(self) -> usize {
        self.0 * (self.0 + 1) / 2
    }

    pub fn check_generator(self, index: usize) -> Result<()> {
        if index == 0 || index > self.0 {
            Err(Error::GeneratorOutOfRange { index, rank: self.0 })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A_{}", self.0)
    }
}

/// A word in the simple generators; letters are 1-based generator indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: impl Into<Vec<usize>>) -> Self {
        Word(letters.into())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Parses `"s2 s1"`, `"s2*s1"` or `"2,1"`; the empty string and `"e"`
    /// denote the identity.
    pub fn parse(text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for token in text.split(|c: char| c.is_whitespace() || c == '*' || c == ',' || c == '·') {
            let token = token.trim();
            if token.is_empty() || token == "e" {
                continue;
            }
            let digits = token.strip_prefix('s').unwrap_or(token);
            let index: usize = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator token {token:?}")))?;
            letters.push(index);
        }
        Ok(Word(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (k, letter) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{letter}")?;
        }
        Ok(())
    }
}

/// A subset of the generator indices `{1, …, n}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSet(BTreeSet<usize>);

impl GeneratorSet {
    pub fn empty() -> Self {
        GeneratorSet(BTreeSet::new())
    }

    pub fn full(rank: Rank) -> Self {
        GeneratorSet((1..=rank.get()).collect())
    }

    pub fn interval(a: usize, c: usize) -> Self {
        GeneratorSet((a..=c).collect())
    }

    pub fn from_indices(rank: Rank, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = indices.into_iter().collect();
        for &i in &set {
            rank.check_generator(i)?;
        }
        Ok(GeneratorSet(set))
    }

    /// Parses a comma or space separated list such as `"1,3"`; `""` is empty.
    pub fn parse(rank: Rank, text: &str) -> Result<Self> {
        let mut indices = Vec::new();
        for token in text.split(|c: char| c == ',' || c.is_whitespace()) {
            let token = token.trim().trim_start_matches('s');
            if token.is_empty() {
                continue;
            }
            indices.push(
                token
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad generator index {token:?}")))?,
            );
        }
        Self::from_indices(rank, indices)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn with(&self, i: usize) -> Self {
        let mut set = self.0.clone();
        set.insert(i);
        GeneratorSet(set)
    }

    pub fn without(&self, i: usize) -> Self {
        let mut set = self.0.clone();
        set.remove(&i);
        GeneratorSet(set)
    }

    /// Maximal runs of consecutive indices, as inclusive intervals.
    pub fn components(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for i in self.iter() {
            match out.last_mut() {
                Some((_, c)) if *c + 1 == i => *c = i,
                _ => out.push((i, i)),
            }
        }
        out
    }

    /// In type A two generator sets are orthogonal when no index of one is
    /// equal or adjacent to an index of the other.
    pub fn is_orthogonal_to(&self, other: &GeneratorSet) -> bool {
        self.iter()
            .all(|i| other.iter().all(|j| i.abs_diff(j) > 1))
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<usize> for GeneratorSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        GeneratorSet(iter.into_iter().collect())
    }
}

/// An element of `A_n` in one-line notation.
///
/// Entries are stored 0-based; every public accessor speaks 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<u8>,
}

impl Permutation {
    pub fn identity(rank: Rank) -> Self {
        Permutation { image: (0..rank.letters() as u8).collect() }
    }

    /// Builds a permutation from its one-line notation `[x(1), …, x(n+1)]`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let len = one_line.len();
        let bad = || Error::NotAPermutation { expected: len, found: one_line.to_vec() };
        if len < 2 {
            return Err(Error::InvalidRank(len.saturating_sub(1)));
        }
        Rank::new(len - 1)?;
        let mut seen = vec![false; len];
        let mut image = Vec::with_capacity(len);
        for &v in one_line {
            if v == 0 || v > len || seen[v - 1] {
                return Err(bad());
            }
            seen[v - 1] = true;
            image.push((v - 1) as u8);
        }
        Ok(Permutation { image })
    }

    /// The simple reflection `s_i`, swapping `i` and `i + 1`.
    pub fn simple_reflection(rank: Rank, i: usize) -> Result<Self> {
        rank.check_generator(i)?;
        let mut p = Self::identity(rank);
        p.image.swap(i - 1, i);
        Ok(p)
    }

    /// The transposition of the letters `i < j` (the reflection `t_(i,j)`).
    pub fn transposition(rank: Rank, i: usize, j: usize) -> Self {
        let mut p = Self::identity(rank);
        p.image.swap(i - 1, j - 1);
        p
    }

    /// Evaluates a word as the product `s_{a1} * s_{a2} * … * s_{am}`.
    pub fn from_word(rank: Rank, word: &Word) -> Result<Self> {
        let mut p = Self::identity(rank);
        for &letter in word.letters() {
            rank.check_generator(letter)?;
            // right-multiplying by s_i swaps positions i and i+1
            p.image.swap(letter - 1, letter);
        }
        Ok(p)
    }

    /// Longest element of the standard parabolic subgroup `W_J`: reverses
    /// each maximal interval `[a, c+1]` spanned by a run `a..=c` of `J`.
    pub fn longest_element(rank: Rank, subset: &GeneratorSet) -> Self {
        let mut p = Self::identity(rank);
        for (a, c) in subset.components() {
            p.image[a - 1..=c].reverse();
        }
        p
    }

    /// Longest element of the whole group, `i ↦ n + 2 − i`.
    pub fn longest(rank: Rank) -> Self {
        Self::longest_element(rank, &GeneratorSet::full(rank))
    }

    pub fn rank(&self) -> Rank {
        Rank(self.image.len() - 1)
    }

    /// `x(i)` for 1-based `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1] as usize + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.image.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0u8; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v as usize] = i as u8;
        }
        Permutation { image }
    }

    fn check_rank(&self, other: &Permutation) -> Result<()> {
        if self.image.len() != other.image.len() {
            Err(Error::RankMismatch(self.rank().get(), other.rank().get()))
        } else {
            Ok(())
        }
    }

    /// `self * rhs`, i.e. `i ↦ self(rhs(i))`.
    pub fn compose(&self, rhs: &Permutation) -> Result<Self> {
        self.check_rank(rhs)?;
        Ok(Permutation { image: rhs.image.iter().map(|&v| self.image[v as usize]).collect() })
    }

    /// Number of inversions `i < j` with `x(i) > x(j)`.
    pub fn length(&self) -> usize {
        let n = self.image.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.image[i] > self.image[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `{i : x(i) > x(i+1)}`.
    pub fn right_descents(&self) -> BTreeSet<usize> {
        (1..self.image.len()).filter(|&i| self.image[i - 1] > self.image[i]).collect()
    }

    /// `{i : α_i ∈ Φ_x}`, equivalently the right descents of `x⁻¹`.
    pub fn left_descents(&self) -> BTreeSet<usize> {
        self.inverse().right_descents()
    }

    /// Lexicographically smallest reduced word, found by peeling off the
    /// smallest left descent at each step.
    pub fn canonical_reduced_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.length());
        let mut current = self.clone();
        while let Some(&i) = current.left_descents().iter().next() {
            letters.push(i);
            // s_i * current swaps the values i and i+1
            for v in current.image.iter_mut() {
                if *v as usize == i - 1 {
                    *v = i as u8;
                } else if *v as usize == i {
                    *v = (i - 1) as u8;
                }
            }
        }
        Word(letters)
    }

    /// The same permutation acting on `1..=rank+1`, fixing the new letters.
    pub fn embed(&self, rank: Rank) -> Result<Self> {
        if rank.letters() < self.image.len() {
            return Err(Error::RankMismatch(self.rank().get(), rank.get()));
        }
        let mut image = self.image.clone();
        image.extend(self.image.len() as u8..rank.letters() as u8);
        Ok(Permutation { image })
    }

    /// Generators occurring in any reduced word: the `i` for which `x` does
    /// not preserve `{1, …, i}`.
    pub fn support(&self) -> GeneratorSet {
        let mut max = 0;
        let mut out = GeneratorSet::empty();
        for (i, &v) in self.image.iter().enumerate().take(self.image.len() - 1) {
            max = max.max(v as usize);
            if max > i {
                out = out.with(i + 1);
            }
        }
        out
    }

    /// Parses one-line notation `"[3,1,2]"` or word notation `"s2 s1"`,
    /// `"s2*s1"`; `"e"` or `""` is the identity.
    pub fn parse(rank: Rank, text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if let Some(inner) = trimmed.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse(format!("unterminated one-line form {text:?}")))?;
            let values = inner
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad entry {t:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if values.len() != rank.letters() {
                return Err(Error::Parse(format!(
                    "{text:?} has {} entries, {rank} needs {}",
                    values.len(),
                    rank.letters()
                )));
            }
            return Self::from_one_line(&values);
        }
        let word = Word::parse(trimmed)?;
        Self::from_word(rank, &word)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, v) in self.image.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", *v as usize + 1)?;
        }
        f.write_str("]")
    }
}

/// Panics on rank mismatch; use [`Permutation::compose`] for a checked product.
impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("rank mismatch in permutation product")
    }
}

impl Mul for Permutation {
    type Output = Permutation;

    fn mul(self, rhs: Permutation) -> Permutation {
        &self * &rhs
    }
}

/// Every element of `A_n`, in lexicographic order of one-line notation.
pub fn all_permutations(rank: Rank) -> Vec<Permutation> {
    let n = rank.letters();
    let mut current: Vec<u8> = (0..n as u8).collect();
    let mut out = Vec::new();
    loop {
        out.push(Permutation { image: current.clone() });
        // next lexicographic permutation
        let Some(i) = (0..n - 1).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    #[test]
    fn compose_convention() {
        assert_eq!(p(&[1, 3, 2]).compose(&p(&[2, 1, 3])).unwrap(), p(&[3, 1, 2]));
        let s1 = Permutation::simple_reflection(r(2), 1).unwrap();
        let s2 = Permutation::simple_reflection(r(2), 2).unwrap();
        assert_eq!(&s2 * &s1, p(&[3, 1, 2]));
        assert_eq!(&s1 * &s2, p(&[2, 3, 1]));
    }

    #[test]
    fn compose_rank_mismatch() {
        let a = Permutation::identity(r(2));
        let b = Permutation::identity(r(3));
        assert_eq!(a.compose(&b), Err(Error::RankMismatch(2, 3)));
    }

    #[test]
    fn group_laws() {
        for x in all_permutations(r(3)) {
            let e = Permutation::identity(r(3));
            assert_eq!(&x * &e, x);
            assert_eq!(&x * &x.inverse(), e);
        }
    }

    #[test]
    fn lengths() {
        assert_eq!(p(&[3, 1, 2]).length(), 2);
        assert_eq!(Permutation::identity(r(4)).length(), 0);
        assert_eq!(Permutation::longest(r(3)).length(), 6);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::from_one_line(&[1, 1, 2]).is_err());
        assert!(Permutation::from_one_line(&[1, 4, 2]).is_err());
        assert!(Permutation::from_one_line(&[1]).is_err());
        assert!(Rank::new(0).is_err());
    }

    #[test]
    fn canonical_words() {
        assert_eq!(p(&[3, 1, 2]).canonical_reduced_word(), Word::new([2, 1]));
        assert_eq!(Permutation::identity(r(2)).canonical_reduced_word(), Word::default());
        assert_eq!(p(&[3, 2, 1]).canonical_reduced_word(), Word::new([1, 2, 1]));
    }

    #[test]
    fn canonical_word_evaluates_back() {
        for x in all_permutations(r(4)) {
            let w = x.canonical_reduced_word();
            assert_eq!(w.len(), x.length());
            assert_eq!(Permutation::from_word(r(4), &w).unwrap(), x);
        }
    }

    #[test]
    fn parabolic_longest_elements() {
        assert_eq!(Permutation::longest(r(2)), p(&[3, 2, 1]));
        assert_eq!(Permutation::longest_element(r(3), &GeneratorSet::empty()), Permutation::identity(r(3)));
        let j = GeneratorSet::from_indices(r(3), [2, 3]).unwrap();
        assert_eq!(
            Permutation::longest_element(r(3), &j),
            Permutation::parse(r(3), "s2 s3 s2").unwrap()
        );
        let j = GeneratorSet::from_indices(r(4), [1, 3, 4]).unwrap();
        assert_eq!(Permutation::longest_element(r(4), &j), p(&[2, 1, 5, 4, 3]));
    }

    #[test]
    fn descents() {
        let x = p(&[3, 1, 2]);
        assert_eq!(x.right_descents(), BTreeSet::from([1]));
        assert_eq!(x.left_descents(), BTreeSet::from([2]));
    }

    #[test]
    fn parsing() {
        assert_eq!(Permutation::parse(r(2), "s2 s1").unwrap(), p(&[3, 1, 2]));
        assert_eq!(Permutation::parse(r(2), "s2*s1").unwrap(), p(&[3, 1, 2]));
        assert_eq!(Permutation::parse(r(2), "[1,2,3]").unwrap(), Permutation::identity(r(2)));
        assert_eq!(Permutation::parse(r(2), "s1 s2").unwrap(), p(&[2, 3, 1]));
        assert_eq!(Permutation::parse(r(2), "e").unwrap(), Permutation::identity(r(2)));
        assert!(Permutation::parse(r(2), "s3").is_err());
        assert!(Permutation::parse(r(2), "[1,2]").is_err());
        assert!(Permutation::parse(r(2), "[1,2,3").is_err());
        assert!(Permutation::parse(r(2), "t1").is_err());
    }

    #[test]
    fn enumerates_whole_group() {
        assert_eq!(all_permutations(r(3)).len(), 24);
        let set: BTreeSet<_> = all_permutations(r(4)).into_iter().collect();
        assert_eq!(set.len(), 120);
    }

    #[test]
    fn generator_set_components() {
        let j = GeneratorSet::from_indices(r(6), [1, 2, 4, 6]).unwrap();
        assert_eq!(j.components(), vec![(1, 2), (4, 4), (6, 6)]);
        assert!(GeneratorSet::parse(r(3), "1,3").unwrap().contains(3));
        assert!(GeneratorSet::parse(r(3), "4").is_err());
        let a = GeneratorSet::from_indices(r(4), [1, 2]).unwrap();
        assert!(a.is_orthogonal_to(&GeneratorSet::from_indices(r(4), [4]).unwrap()));
        assert!(!a.is_orthogonal_to(&GeneratorSet::from_indices(r(4), [3]).unwrap()));
    }
}
