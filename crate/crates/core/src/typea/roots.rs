//! Positive roots of `A_n` as index pairs and the inversion-set calculus
//! built on them.
//!
//! The pair `(i, j)` with `i < j` stands for `α_i + α_{i+1} + … + α_{j−1}`,
//! i.e. `e_i − e_j`. A permutation `w` sends it to `e_{w(i)} − e_{w(j)}`.

use std::collections::BTreeSet;
use std::fmt;

use super::perm::{GeneratorSet, Permutation, Rank, Word};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveRoot {
    lo: u8,
    hi: u8,
}

impl PositiveRoot {
    pub fn new(rank: Rank, lo: usize, hi: usize) -> Result<Self> {
        if lo == 0 || lo >= hi || hi > rank.letters() {
            return Err(Error::MalformedRoot { lo, hi, rank: rank.get() });
        }
        Ok(PositiveRoot { lo: lo as u8, hi: hi as u8 })
    }

    /// No rank check; callers guarantee `1 ≤ lo < hi`.
    pub(crate) fn pair(lo: usize, hi: usize) -> Self {
        debug_assert!(0 < lo && lo < hi);
        PositiveRoot { lo: lo as u8, hi: hi as u8 }
    }

    pub fn simple(rank: Rank, i: usize) -> Result<Self> {
        rank.check_generator(i)?;
        Ok(Self::pair(i, i + 1))
    }

    /// The unique root of maximal depth, `α_1 + … + α_n`.
    pub fn highest(rank: Rank) -> Self {
        Self::pair(1, rank.letters())
    }

    #[inline]
    pub fn lo(self) -> usize {
        self.lo as usize
    }

    #[inline]
    pub fn hi(self) -> usize {
        self.hi as usize
    }

    /// Number of simple roots in the support.
    pub fn depth(self) -> usize {
        self.hi() - self.lo()
    }

    pub fn is_simple(self) -> bool {
        self.depth() == 1
    }

    /// Generator indices `{lo, …, hi−1}` of the simple roots in the support.
    pub fn support(self) -> GeneratorSet {
        (self.lo()..self.hi()).collect()
    }

    /// Coefficients over the simple-root basis.
    pub fn coefficients(self, rank: Rank) -> Vec<i64> {
        (1..=rank.get())
            .map(|k| i64::from(self.lo() <= k && k < self.hi()))
            .collect()
    }

    /// Parses `"(1,3)"` or `"a1+a2"`.
    pub fn parse(rank: Rank, text: &str) -> Result<Self> {
        let t = text.trim();
        if let Some(inner) = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
            let mut parts = inner.split(',').map(|s| s.trim().parse::<usize>());
            return match (parts.next(), parts.next(), parts.next()) {
                (Some(Ok(lo)), Some(Ok(hi)), None) => Self::new(rank, lo, hi),
                _ => Err(Error::Parse(format!("bad root {text:?}"))),
            };
        }
        let mut indices = t
            .split('+')
            .map(|s| {
                let s = s.trim();
                s.strip_prefix('a')
                    .or_else(|| s.strip_prefix('α'))
                    .and_then(|d| d.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad root {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        indices.sort_unstable();
        let lo = indices[0];
        if indices.windows(2).any(|w| w[1] != w[0] + 1) {
            return Err(Error::Parse(format!("{text:?} is not a root of A_n")));
        }
        Self::new(rank, lo, lo + indices.len())
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

/// A root with its sign; negation flips the flag and keeps the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedRoot {
    pub root: PositiveRoot,
    pub positive: bool,
}

impl std::ops::Neg for SignedRoot {
    type Output = SignedRoot;

    fn neg(self) -> Self {
        SignedRoot { root: self.root, positive: !self.positive }
    }
}

impl fmt::Display for SignedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.positive { "+" } else { "-" }, self.root)
    }
}

/// A finite set of positive roots.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet(BTreeSet<PositiveRoot>);

impl RootSet {
    pub fn new() -> Self {
        RootSet(BTreeSet::new())
    }

    /// Every positive root of `A_n`.
    pub fn all_positive(rank: Rank) -> Self {
        let m = rank.letters();
        (1..m).flat_map(|i| (i + 1..=m).map(move |j| PositiveRoot::pair(i, j))).collect()
    }

    /// `Φ⁺_J`: positive roots whose support lies in `J`.
    pub fn parabolic(rank: Rank, subset: &GeneratorSet) -> Self {
        Self::all_positive(rank)
            .into_iter()
            .filter(|r| (r.lo()..r.hi()).all(|k| subset.contains(k)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, r: PositiveRoot) -> bool {
        self.0.contains(&r)
    }

    pub fn contains_pair(&self, lo: usize, hi: usize) -> bool {
        self.0.contains(&PositiveRoot::pair(lo, hi))
    }

    pub fn insert(&mut self, r: PositiveRoot) -> bool {
        self.0.insert(r)
    }

    pub fn iter(&self) -> impl Iterator<Item = PositiveRoot> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &RootSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        RootSet(self.0.union(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &RootSet) -> RootSet {
        RootSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn symmetric_difference(&self, other: &RootSet) -> RootSet {
        RootSet(self.0.symmetric_difference(&other.0).copied().collect())
    }

    pub fn simple_roots(&self) -> impl Iterator<Item = PositiveRoot> + '_ {
        self.iter().filter(|r| r.is_simple())
    }

    /// `(i,j), (j,k) ∈ I ⇒ (i,k) ∈ I`.
    pub fn is_closed(&self) -> bool {
        self.iter().all(|a| {
            self.0
                .range(PositiveRoot::pair(a.hi(), a.hi() + 1)..)
                .take_while(|b| b.lo() == a.hi())
                .all(|b| self.contains_pair(a.lo(), b.hi()))
        })
    }

    /// `(i,k) ∈ I ⇒ (i,j) ∈ I or (j,k) ∈ I` for every `i < j < k`.
    pub fn is_coclosed(&self) -> bool {
        self.iter().all(|r| {
            (r.lo() + 1..r.hi())
                .all(|j| self.contains_pair(r.lo(), j) || self.contains_pair(j, r.hi()))
        })
    }

    /// Smallest closed superset.
    pub fn transitive_closure(&self) -> RootSet {
        let mut set = self.clone();
        loop {
            let mut added = Vec::new();
            for a in set.iter() {
                for b in set.iter().filter(|b| b.lo() == a.hi()) {
                    let c = PositiveRoot::pair(a.lo(), b.hi());
                    if !set.contains(c) {
                        added.push(c);
                    }
                }
            }
            if added.is_empty() {
                return set;
            }
            set.0.extend(added);
        }
    }
}

impl FromIterator<PositiveRoot> for RootSet {
    fn from_iter<I: IntoIterator<Item = PositiveRoot>>(iter: I) -> Self {
        RootSet(iter.into_iter().collect())
    }
}

impl IntoIterator for RootSet {
    type Item = PositiveRoot;
    type IntoIter = std::collections::btree_set::IntoIter<PositiveRoot>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl fmt::Display for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, r) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("}")
    }
}

/// `w(e_lo − e_hi) = e_{w(lo)} − e_{w(hi)}`.
pub fn act(w: &Permutation, r: PositiveRoot) -> SignedRoot {
    let (a, b) = (w.apply(r.lo()), w.apply(r.hi()));
    SignedRoot { root: PositiveRoot::pair(a.min(b), a.max(b)), positive: a < b }
}

/// Support and depth of a root.
pub fn root_data(r: PositiveRoot) -> (GeneratorSet, usize) {
    (r.support(), r.depth())
}

impl Permutation {
    /// Left inversion set `Φ_x = {β > 0 : x⁻¹(β) < 0}`, i.e. the pairs
    /// `i < j` with `x⁻¹(i) > x⁻¹(j)`.
    pub fn inversion_set(&self) -> RootSet {
        let inv = self.inverse();
        let m = self.rank().letters();
        let mut set = RootSet::new();
        for i in 1..m {
            for j in i + 1..=m {
                if inv.apply(i) > inv.apply(j) {
                    set.insert(PositiveRoot::pair(i, j));
                }
            }
        }
        set
    }

    /// `x ≤_R y ⇔ Φ_x ⊆ Φ_y`.
    pub fn leq_weak_right(&self, other: &Permutation) -> Result<bool> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank().get(), other.rank().get()));
        }
        Ok(self.inversion_set().is_subset(&other.inversion_set()))
    }

    /// The unique permutation with the given inversion set.
    pub fn from_inversion_set(rank: Rank, set: &RootSet) -> Result<Self> {
        let m = rank.letters();
        if set.iter().any(|r| r.hi() > m) {
            return Err(Error::InvalidInversionSet);
        }
        // Position of letter i in the total order where i precedes j (i < j)
        // exactly when (i, j) is not an inversion. That position is x⁻¹(i).
        let mut one_line = vec![0usize; m];
        let mut used = vec![false; m];
        for i in 1..=m {
            let before = (1..i).filter(|&j| !set.contains_pair(j, i)).count()
                + (i + 1..=m).filter(|&j| set.contains_pair(i, j)).count();
            if used[before] {
                return Err(Error::InvalidInversionSet);
            }
            used[before] = true;
            one_line[before] = i;
        }
        let x = Permutation::from_one_line(&one_line)?;
        if &x.inversion_set() != set {
            return Err(Error::InvalidInversionSet);
        }
        Ok(x)
    }

    /// Join in the weak right order, via the transitive closure of the union
    /// of inversion sets.
    pub fn join<'a>(elements: impl IntoIterator<Item = &'a Permutation>) -> Result<Permutation> {
        let mut iter = elements.into_iter();
        let first = iter
            .next()
            .ok_or_else(|| Error::InvalidChoices("join of an empty sequence".into()))?;
        let rank = first.rank();
        let mut union = first.inversion_set();
        for x in iter {
            if x.rank() != rank {
                return Err(Error::RankMismatch(rank.get(), x.rank().get()));
            }
            union = union.union(&x.inversion_set());
        }
        Permutation::from_inversion_set(rank, &union.transitive_closure())
    }

    /// Binary join; both operands share a rank.
    pub fn join_with(&self, other: &Permutation) -> Permutation {
        Permutation::join([self, other]).expect("join of same-rank permutations")
    }

    /// Left descents, right descents and whether both are singletons.
    pub fn descent_data(&self) -> DescentData {
        let left = self.left_descents();
        let right = self.right_descents();
        let bigrassmannian = left.len() == 1 && right.len() == 1;
        DescentData { left, right, bigrassmannian }
    }

    pub fn is_bigrassmannian(&self) -> bool {
        self.descent_data().bigrassmannian
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentData {
    pub left: BTreeSet<usize>,
    pub right: BTreeSet<usize>,
    pub bigrassmannian: bool,
}

/// `{β_1, …, β_m}` with `β_k = s_{a1} ⋯ s_{a(k−1)}(α_{ak})`; fails when the
/// word is not reduced.
pub fn inversion_set_of_word(rank: Rank, word: &Word) -> Result<RootSet> {
    let mut prefix = Permutation::identity(rank);
    let mut set = RootSet::new();
    for &letter in word.letters() {
        let beta = act(&prefix, PositiveRoot::simple(rank, letter)?);
        if !beta.positive || !set.insert(beta.root) {
            return Err(Error::NotReduced);
        }
        prefix = &prefix * &Permutation::simple_reflection(rank, letter)?;
    }
    Ok(set)
}
