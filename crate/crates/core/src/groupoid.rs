//! Generators `ν(α, Π_K)` and decomposition of morphisms `(Π_L, w, Π_K)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::typea::{act, all_permutations, GeneratorSet, Permutation, PositiveRoot, Rank, RootSet};

/// `ν(α, Π_base) = w_{base ∪ {α}} · w_base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuGenerator {
    pub alpha: usize,
    pub base: GeneratorSet,
    pub element: Permutation,
}

impl NuGenerator {
    /// The generator set `K'` with `ν(Π_base) = Π_{K'}`.
    pub fn target(&self) -> GeneratorSet {
        simple_image(&self.element, &self.base).expect("ν maps Π_base into Π")
    }

    /// The three defining root conditions:
    /// `Φ⁺_{base∪α} ∖ Φ⁺_base` goes negative, `Φ⁺_base` stays positive,
    /// and `Π_base` lands in `Π`.
    pub fn satisfies_conditions(&self) -> bool {
        let rank = self.element.rank();
        let small = RootSet::parabolic(rank, &self.base);
        let big = RootSet::parabolic(rank, &self.base.with(self.alpha));
        big.difference(&small).iter().all(|r| !act(&self.element, r).positive)
            && small.iter().all(|r| act(&self.element, r).positive)
            && simple_image(&self.element, &self.base).is_some()
    }
}

/// If `w` maps every `α_j`, `j ∈ set`, to a simple root, the set of their indices.
pub fn simple_image(w: &Permutation, set: &GeneratorSet) -> Option<GeneratorSet> {
    set.iter()
        .map(|j| {
            let r = act(w, PositiveRoot::pair(j, j + 1));
            (r.positive && r.root.is_simple()).then_some(r.root.lo())
        })
        .collect()
}

pub fn nu(rank: Rank, alpha: usize, base: &GeneratorSet) -> Result<NuGenerator> {
    rank.check_generator(alpha)?;
    for j in base.iter() {
        rank.check_generator(j)?;
    }
    if base.contains(alpha) {
        return Err(Error::AlphaInBase(alpha));
    }
    let element = &Permutation::longest_element(rank, &base.with(alpha)) * &Permutation::longest_element(rank, base);
    let generator = NuGenerator { alpha, base: base.clone(), element };
    debug_assert!(generator.satisfies_conditions());
    Ok(generator)
}

/// A morphism `(Π_target, element, Π_source)` with `element(Π_source) = Π_target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidMorphism {
    source: GeneratorSet,
    element: Permutation,
    target: GeneratorSet,
}

impl GroupoidMorphism {
    pub fn new(source: GeneratorSet, element: Permutation, target: GeneratorSet) -> Result<Self> {
        let rank = element.rank();
        for j in source.iter().chain(target.iter()) {
            rank.check_generator(j)?;
        }
        match simple_image(&element, &source) {
            Some(image) if image == target => Ok(GroupoidMorphism { source, element, target }),
            Some(image) => Err(Error::InvalidMorphism(format!(
                "{element} maps Π_{source} onto Π_{image}, not Π_{target}"
            ))),
            None => Err(Error::InvalidMorphism(format!(
                "{element} does not map Π_{source} into the simple roots"
            ))),
        }
    }

    pub fn source(&self) -> &GeneratorSet {
        &self.source
    }

    pub fn element(&self) -> &Permutation {
        &self.element
    }

    pub fn target(&self) -> &GeneratorSet {
        &self.target
    }
}

/// Generators `g_1, …, g_k` with `element = g_k ⋯ g_1`, chaining from the
/// source to the target. At each step `α` is the smallest simple root that
/// the remaining element sends negative.
pub fn decompose_morphism(m: &GroupoidMorphism) -> Result<Vec<NuGenerator>> {
    let rank = m.element.rank();
    let mut rest = m.element.clone();
    let mut current = m.source.clone();
    let mut out = Vec::new();
    while !rest.is_identity() {
        let alpha = (1..=rank.get())
            .find(|&i| !act(&rest, PositiveRoot::pair(i, i + 1)).positive)
            .expect("non-identity element has a right descent");
        let g = nu(rank, alpha, &current).map_err(|_| {
            Error::InvalidMorphism(format!("α_{alpha} sent negative but lies in Π_{current}"))
        })?;
        rest = &rest * &g.element.inverse();
        current = g.target();
        out.push(g);
    }
    if current != m.target {
        return Err(Error::InvalidMorphism(format!("chain ends at Π_{current}, not Π_{}", m.target)));
    }
    Ok(out)
}

/// Largest rank accepted by [`groupoid_objects`].
pub const OBJECTS_BOUND: usize = 5;

/// Every morphism with source `Π_J`, found by scanning the whole group.
pub fn groupoid_morphisms(rank: Rank, j: &GeneratorSet) -> Result<Vec<GroupoidMorphism>> {
    if rank.get() > OBJECTS_BOUND {
        return Err(Error::BoundExceeded { rank: rank.get(), bound: OBJECTS_BOUND });
    }
    for i in j.iter() {
        rank.check_generator(i)?;
    }
    Ok(all_permutations(rank)
        .into_iter()
        .filter_map(|w| {
            let target = simple_image(&w, j)?;
            Some(GroupoidMorphism { source: j.clone(), element: w, target })
        })
        .collect())
}

/// All `K` with `w(Π_J) = Π_K` for some `w`.
pub fn groupoid_objects(rank: Rank, j: &GeneratorSet) -> Result<BTreeSet<GeneratorSet>> {
    Ok(groupoid_morphisms(rank, j)?.into_iter().map(|m| m.target).collect())
}
