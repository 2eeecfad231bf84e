//! The equation `w(Φ_x) = Φ_y`.

use crate::error::{Error, Result};
use crate::typea::{act, all_permutations, Permutation, Rank, RootSet};

/// A solution `(w, x, y)` of `w(Φ_x) = Φ_y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferTriple {
    pub w: Permutation,
    pub x: Permutation,
    pub y: Permutation,
}

impl TransferTriple {
    pub fn new(w: Permutation, x: Permutation, y: Permutation) -> Result<Self> {
        same_rank(&[&w, &x, &y])?;
        Ok(TransferTriple { w, x, y })
    }

    pub fn holds(&self) -> bool {
        transfer_check(&self.w, &self.x, &self.y).expect("ranks checked on construction")
    }
}

fn same_rank(elements: &[&Permutation]) -> Result<Rank> {
    let rank = elements[0].rank();
    for e in &elements[1..] {
        if e.rank() != rank {
            return Err(Error::RankMismatch(rank.get(), e.rank().get()));
        }
    }
    Ok(rank)
}

/// `w(Φ_x)` if every image is positive.
fn positive_image(w: &Permutation, x: &Permutation) -> Option<RootSet> {
    let mut image = RootSet::new();
    for beta in x.inversion_set().iter() {
        let r = act(w, beta);
        if !r.positive {
            return None;
        }
        image.insert(r.root);
    }
    Some(image)
}

/// Whether `w(Φ_x) = Φ_y` with all images positive.
pub fn transfer_check(w: &Permutation, x: &Permutation, y: &Permutation) -> Result<bool> {
    same_rank(&[w, x, y])?;
    Ok(positive_image(w, x).is_some_and(|image| image == y.inversion_set()))
}

/// The `y` with `Φ_y = w(Φ_x)`, if the image is positive and an inversion set.
pub fn transfer_image(w: &Permutation, x: &Permutation) -> Result<Option<Permutation>> {
    let rank = same_rank(&[w, x])?;
    let Some(image) = positive_image(w, x) else {
        return Ok(None);
    };
    debug_assert_eq!((w * x).length(), w.length() + x.length());
    Ok(Permutation::from_inversion_set(rank, &image).ok())
}

/// `Φ_{w⁻¹} ⊆ Φ_{u⁻¹}`: `u = g w` with `ℓ(u) = ℓ(g) + ℓ(w)`.
pub fn right_divisor_check(w: &Permutation, u: &Permutation) -> Result<bool> {
    same_rank(&[w, u])?;
    Ok(w.inverse().inversion_set().is_subset(&u.inverse().inversion_set()))
}

/// Every `w` (identity included) with `w(Φ_x) = Φ_y`. Candidates are the
/// right divisors of `w_0 x⁻¹`.
pub fn solve_transfers(x: &Permutation, y: &Permutation) -> Result<Vec<Permutation>> {
    let rank = same_rank(&[x, y])?;
    if x.length() != y.length() {
        return Ok(Vec::new());
    }
    let bound = &Permutation::longest(rank) * &x.inverse();
    let mut out = Vec::new();
    for w in all_permutations(rank) {
        if right_divisor_check(&w, &bound)? && transfer_check(&w, x, y)? {
            out.push(w);
        }
    }
    Ok(out)
}

/// `{|w(β)| : β ∈ Φ_x}`, the roots of the reflections in `w N(x) w⁻¹`.
pub fn cocycle_conjugate(w: &Permutation, x: &Permutation) -> Result<RootSet> {
    same_rank(&[w, x])?;
    Ok(x.inversion_set().iter().map(|beta| act(w, beta).root).collect())
}

/// `(w_0 x⁻¹, w_0 x⁻¹ w_0)`, which always transfers `Φ_x`.
pub fn w0_transfer(x: &Permutation) -> (Permutation, Permutation) {
    let w0 = Permutation::longest(x.rank());
    let w = &w0 * &x.inverse();
    let y = &w * &w0;
    (w, y)
}

/// From a solution `(w, x, y)`, the element `w_0 y⁻¹ w x w_0` carries
/// `Φ_{w_0 x⁻¹ w_0}` to `Φ_{w_0 y⁻¹ w_0}`. Returns whether that holds.
pub fn w0_follow_up(triple: &TransferTriple) -> bool {
    let w0 = Permutation::longest(triple.x.rank());
    let (w, x, y) = (&triple.w, &triple.x, &triple.y);
    let g = &(&(&(&w0 * &y.inverse()) * w) * x) * &w0;
    let source = &(&w0 * &x.inverse()) * &w0;
    let target = &(&w0 * &y.inverse()) * &w0;
    transfer_check(&g, &source, &target).expect("shared rank")
}

/// Largest rank accepted by [`near_longest_rigidity`].
pub const RIGIDITY_BOUND: usize = 4;

/// Exhaustively checks that `ℓ(x) = ℓ(w_0) − 1` and `w(Φ_x) = Φ_y` with
/// `w ≠ 1` force `x = y`.
pub fn near_longest_rigidity(rank: Rank) -> Result<bool> {
    if rank.get() > RIGIDITY_BOUND {
        return Err(Error::BoundExceeded { rank: rank.get(), bound: RIGIDITY_BOUND });
    }
    let target_len = rank.positive_root_count().saturating_sub(1);
    let group = all_permutations(rank);
    let near: Vec<&Permutation> = group.iter().filter(|x| x.length() == target_len).collect();
    for x in &near {
        for w in group.iter().filter(|w| !w.is_identity()) {
            if let Some(y) = transfer_image(w, x)? {
                if &y != *x {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
