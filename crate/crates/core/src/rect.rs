//! Based rectangles, rectangle partitions of the `A_n` root poset, and
//! binary trees.
//!
//! The root `(p, q)` is `α_p + … + α_{q−1}`. A based rectangle
//! `(lo, base, hi)` is the grid `{(p, q) : lo ≤ p ≤ base < q ≤ hi}`; it
//! contains exactly one simple root, `α_base`.

use std::collections::BTreeSet;
use std::fmt;

use crate::cube::{cube_from_terminal_edges, element_order, CoxeterCube};
use crate::error::{Error, Result};
use crate::typea::{GeneratorSet, Permutation, PositiveRoot, Rank, RootSet};

/// Default largest rank for the exhaustive enumerations.
pub const DEFAULT_ENUMERATION_BOUND: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasedRectangle {
    lo: usize,
    base: usize,
    hi: usize,
    rank: Rank,
}

impl BasedRectangle {
    pub fn new(rank: Rank, lo: usize, base: usize, hi: usize) -> Result<Self> {
        if !(1 <= lo && lo <= base && base < hi && hi <= rank.letters()) {
            return Err(Error::MalformedRectangle { lo, base, hi, rank: rank.get() });
        }
        Ok(BasedRectangle { lo, base, hi, rank })
    }

    pub fn rank(self) -> Rank {
        self.rank
    }

    pub fn lo(self) -> usize {
        self.lo
    }

    pub fn base(self) -> usize {
        self.base
    }

    pub fn hi(self) -> usize {
        self.hi
    }

    pub fn triple(self) -> [usize; 3] {
        [self.lo, self.base, self.hi]
    }

    pub fn len(self) -> usize {
        (self.base - self.lo + 1) * (self.hi - self.base)
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn contains(self, lo: usize, hi: usize) -> bool {
        self.lo <= lo && lo <= self.base && self.base < hi && hi <= self.hi
    }

    /// Whether the rectangle lies inside the positive roots of `{s_a, …, s_c}`.
    pub fn inside(self, t: SubtriangleInterval) -> bool {
        t.a <= self.lo && self.hi <= t.c + 1
    }

    /// Whether the rectangle shares a root with the positive roots of `{s_a, …, s_c}`.
    pub fn meets(self, t: SubtriangleInterval) -> bool {
        self.lo.max(t.a) <= self.base && self.base < self.hi.min(t.c + 1)
    }
}

impl fmt::Display for BasedRectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.lo, self.base, self.hi)
    }
}

pub fn rectangle_roots(r: BasedRectangle) -> RootSet {
    let mut set = RootSet::new();
    for p in r.lo..=r.base {
        for q in r.base + 1..=r.hi {
            set.insert(PositiveRoot::new(r.rank, p, q).expect("rectangle bounds checked"));
        }
    }
    set
}

/// The permutation whose inversion set is the rectangle.
pub fn element_of_rectangle(r: BasedRectangle) -> Permutation {
    Permutation::from_inversion_set(r.rank, &rectangle_roots(r)).expect("a based rectangle is an inversion set")
}

/// The rectangle equal to `Φ_x`, if there is one.
pub fn rectangle_of_element(x: &Permutation) -> Option<BasedRectangle> {
    let phi = x.inversion_set();
    let lo = phi.iter().map(|r| r.lo()).min()?;
    let base = phi.iter().map(|r| r.lo()).max()?;
    let hi = phi.iter().map(|r| r.hi()).max()?;
    let r = BasedRectangle::new(x.rank(), lo, base, hi).ok()?;
    (r.len() == phi.len() && phi.iter().all(|root| r.contains(root.lo(), root.hi()))).then_some(r)
}

/// Every based rectangle of the `A_rank` root poset.
pub fn all_rectangles(rank: Rank) -> Vec<BasedRectangle> {
    let m = rank.letters();
    let mut out = Vec::new();
    for lo in 1..m {
        for base in lo..m {
            for hi in base + 1..=m {
                out.push(BasedRectangle { lo, base, hi, rank });
            }
        }
    }
    out
}

/// The generator interval `{s_a, …, s_c}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubtriangleInterval {
    pub a: usize,
    pub c: usize,
}

impl SubtriangleInterval {
    pub fn new(rank: Rank, a: usize, c: usize) -> Result<Self> {
        if !(1 <= a && a <= c && c <= rank.get()) {
            return Err(Error::IncompatibleSubtriangle { a, c });
        }
        Ok(SubtriangleInterval { a, c })
    }

    pub fn generators(self) -> GeneratorSet {
        GeneratorSet::interval(self.a, self.c)
    }

    pub fn len(self) -> usize {
        self.c - self.a + 1
    }

    pub fn is_empty(self) -> bool {
        false
    }
}

impl fmt::Display for SubtriangleInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.c)
    }
}

/// A partition of the positive roots of `A_n` into `n` based rectangles,
/// stored sorted by `(lo, base, hi)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectanglePartition {
    rank: Rank,
    rectangles: Vec<BasedRectangle>,
}

impl RectanglePartition {
    pub fn new(rank: Rank, mut rectangles: Vec<BasedRectangle>) -> Result<Self> {
        if rectangles.iter().any(|r| r.rank != rank) {
            return Err(Error::InvalidPartition("rectangles of mixed rank".into()));
        }
        rectangles.sort();
        if rectangles.len() != rank.get() {
            return Err(Error::InvalidPartition(format!(
                "{} rectangles, expected {}",
                rectangles.len(),
                rank.get()
            )));
        }
        let mut covered = RootSet::new();
        for &r in &rectangles {
            let roots = rectangle_roots(r);
            if !roots.is_disjoint(&covered) {
                return Err(Error::InvalidPartition(format!("rectangle {r} overlaps another")));
            }
            covered = covered.union(&roots);
        }
        if covered.len() != rank.positive_root_count() {
            return Err(Error::InvalidPartition("rectangles do not cover every positive root".into()));
        }
        Ok(RectanglePartition { rank, rectangles })
    }

    /// Builds from `[lo, base, hi]` triples.
    pub fn from_triples(rank: Rank, triples: &[[usize; 3]]) -> Result<Self> {
        let rects = triples
            .iter()
            .map(|&[lo, base, hi]| BasedRectangle::new(rank, lo, base, hi))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rank, rects)
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn rectangles(&self) -> &[BasedRectangle] {
        &self.rectangles
    }

    pub fn triples(&self) -> Vec<[usize; 3]> {
        self.rectangles.iter().map(|r| r.triple()).collect()
    }

    /// The rectangle containing the highest root of `[a, c]`.
    pub fn highest_rectangle(&self, t: SubtriangleInterval) -> BasedRectangle {
        *self
            .rectangles
            .iter()
            .find(|r| r.contains(t.a, t.c + 1))
            .expect("a partition covers every root")
    }

    /// The rectangle containing `α_k`.
    pub fn rectangle_at(&self, k: usize) -> Option<BasedRectangle> {
        self.rectangles.iter().copied().find(|r| r.base == k)
    }
}

impl fmt::Display for RectanglePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, r) in self.rectangles.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("}")
    }
}

/// The rectangles `Φ_{x_i}` of the terminal edges of an `n`-cube in `A_n`.
pub fn partition_of_cube(c: &CoxeterCube) -> Result<RectanglePartition> {
    if c.dim() != c.rank().get() {
        return Err(Error::InvalidCube(format!("a {}-cube in {} has no rectangle partition", c.dim(), c.rank())));
    }
    let rects = c
        .terminal_edges()
        .iter()
        .map(|x| rectangle_of_element(x).ok_or(Error::NotARectangle))
        .collect::<Result<Vec<_>>>()?;
    RectanglePartition::new(c.rank(), rects)
}

/// The cube with terminal edges `element_of_rectangle(R)`, directions in
/// sorted rectangle order.
pub fn cube_of_partition(p: &RectanglePartition) -> CoxeterCube {
    let terminal: Vec<Permutation> = p.rectangles.iter().map(|&r| element_of_rectangle(r)).collect();
    cube_from_terminal_edges(&terminal).expect("every rectangle partition comes from a cube")
}

/// Intervals `[a, c]` whose parabolic positive roots are a union of rectangles
/// of `p`, ordered by size and then position.
pub fn compatible_subtriangles(p: &RectanglePartition) -> Vec<SubtriangleInterval> {
    let n = p.rank.get();
    let mut out = Vec::new();
    for len in 1..=n {
        for a in 1..=n + 1 - len {
            let t = SubtriangleInterval { a, c: a + len - 1 };
            if p.rectangles.iter().all(|r| r.inside(t) || !r.meets(t)) {
                out.push(t);
            }
        }
    }
    out
}

/// Mirrors the rectangles inside `t` across the vertical axis of its triangle.
pub fn flip_subtriangle(p: &RectanglePartition, t: SubtriangleInterval) -> Result<RectanglePartition> {
    if t.c > p.rank.get() || !compatible_subtriangles(p).contains(&t) {
        return Err(Error::IncompatibleSubtriangle { a: t.a, c: t.c });
    }
    let s = t.a + t.c;
    let rects = p
        .rectangles
        .iter()
        .map(|&r| {
            if r.inside(t) {
                BasedRectangle { lo: s + 1 - r.hi, base: s - r.base, hi: s + 1 - r.lo, rank: r.rank }
            } else {
                r
            }
        })
        .collect();
    RectanglePartition::new(p.rank, rects)
}

/// Cube directions (1-based, in the order of [`cube_of_partition`]) whose
/// rectangles lie inside `t`. Flipping all of them realizes the subtriangle
/// flip of `t` on the cube.
pub fn flip_directions(p: &RectanglePartition, t: SubtriangleInterval) -> Vec<usize> {
    (1..=p.rectangles.len()).filter(|&k| p.rectangles[k - 1].inside(t)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn leaves(&self) -> usize {
        match self {
            BinaryTree::Leaf => 1,
            BinaryTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn internal_nodes(&self) -> usize {
        self.leaves() - 1
    }

    pub fn mirror(&self) -> Self {
        match self {
            BinaryTree::Leaf => BinaryTree::Leaf,
            BinaryTree::Node(l, r) => BinaryTree::node(r.mirror(), l.mirror()),
        }
    }

    /// The subtree reached by a path of `L`/`R` steps.
    pub fn subtree(&self, path: &str) -> Option<&BinaryTree> {
        let mut at = self;
        for step in path.chars() {
            at = match (at, step.to_ascii_uppercase()) {
                (BinaryTree::Node(l, _), 'L') => l,
                (BinaryTree::Node(_, r), 'R') => r,
                _ => return None,
            };
        }
        Some(at)
    }

    /// Parses the nested-array form, e.g. `[[0,0],0]`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut chars = text.chars().filter(|c| !c.is_whitespace()).peekable();
        let tree = parse_tree(&mut chars)?;
        if chars.next().is_some() {
            return Err(Error::Parse(format!("trailing input in tree {text:?}")));
        }
        Ok(tree)
    }
}

fn parse_tree(chars: &mut std::iter::Peekable<impl Iterator<Item = char>>) -> Result<BinaryTree> {
    match chars.next() {
        Some('0') => Ok(BinaryTree::Leaf),
        Some('[') => {
            let left = parse_tree(chars)?;
            if chars.next() != Some(',') {
                return Err(Error::Parse("expected ',' between subtrees".into()));
            }
            let right = parse_tree(chars)?;
            if chars.next() != Some(']') {
                return Err(Error::Parse("expected ']' after two subtrees".into()));
            }
            Ok(BinaryTree::node(left, right))
        }
        other => Err(Error::Parse(format!("unexpected {other:?} in tree"))),
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf => f.write_str("0"),
            BinaryTree::Node(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

fn partition_subtree(p: &RectanglePartition, a: usize, c: usize) -> BinaryTree {
    if a > c {
        return BinaryTree::Leaf;
    }
    let b = p.highest_rectangle(SubtriangleInterval { a, c }).base;
    BinaryTree::node(partition_subtree(p, a, b - 1), partition_subtree(p, b + 1, c))
}

/// The tree whose root is the highest rectangle, with the triangles left
/// and right of its base as subtrees.
pub fn partition_to_tree(p: &RectanglePartition) -> BinaryTree {
    partition_subtree(p, 1, p.rank.get())
}

fn tree_rectangles(t: &BinaryTree, rank: Rank, a: usize, c: usize, out: &mut Vec<BasedRectangle>) {
    if let BinaryTree::Node(l, r) = t {
        let b = a + l.leaves() - 1;
        out.push(BasedRectangle { lo: a, base: b, hi: c + 1, rank });
        tree_rectangles(l, rank, a, b - 1, out);
        tree_rectangles(r, rank, b + 1, c, out);
    }
}

pub fn tree_to_partition(rank: Rank, t: &BinaryTree) -> Result<RectanglePartition> {
    if t.leaves() != rank.get() + 1 {
        return Err(Error::LeafCountMismatch { expected: rank.get() + 1, found: t.leaves() });
    }
    let mut rects = Vec::with_capacity(rank.get());
    tree_rectangles(t, rank, 1, rank.get(), &mut rects);
    RectanglePartition::new(rank, rects)
}

/// The path (`L`/`R` steps) to the node of `partition_to_tree(p)` whose
/// triangle is `t`.
pub fn subtriangle_path(p: &RectanglePartition, t: SubtriangleInterval) -> Option<String> {
    let (mut a, mut c) = (1, p.rank.get());
    let mut path = String::new();
    loop {
        if (a, c) == (t.a, t.c) {
            return Some(path);
        }
        if a > c || t.a < a || t.c > c {
            return None;
        }
        let b = p.highest_rectangle(SubtriangleInterval { a, c }).base;
        if t.c < b {
            c = b - 1;
            path.push('L');
        } else if t.a > b {
            a = b + 1;
            path.push('R');
        } else {
            return None;
        }
    }
}

/// Children canonicalized, then ordered so the left child is the larger
/// under (leaf count, serialized form).
pub fn tree_canonical(t: &BinaryTree) -> BinaryTree {
    match t {
        BinaryTree::Leaf => BinaryTree::Leaf,
        BinaryTree::Node(l, r) => {
            let (l, r) = (tree_canonical(l), tree_canonical(r));
            let key = |x: &BinaryTree| (x.leaves(), x.to_string());
            if key(&l) >= key(&r) {
                BinaryTree::node(l, r)
            } else {
                BinaryTree::node(r, l)
            }
        }
    }
}

/// Replaces the subtree at `path` with its mirror image.
pub fn tree_flip(t: &BinaryTree, path: &str) -> Result<BinaryTree> {
    let Some(step) = path.chars().next() else {
        return Ok(t.mirror());
    };
    match (t, step.to_ascii_uppercase()) {
        (BinaryTree::Node(l, r), 'L') => Ok(BinaryTree::node(tree_flip(l, &path[1..])?, (**r).clone())),
        (BinaryTree::Node(l, r), 'R') => Ok(BinaryTree::node((**l).clone(), tree_flip(r, &path[1..])?)),
        _ => Err(Error::Parse(format!("no node at path {path:?}"))),
    }
}

/// Every ordered binary tree with `leaves` leaves.
pub fn all_trees(leaves: usize) -> Vec<BinaryTree> {
    let mut table: Vec<Vec<BinaryTree>> = vec![Vec::new(), vec![BinaryTree::Leaf]];
    for k in 2..=leaves {
        let mut trees = Vec::new();
        for left in 1..k {
            for l in &table[left] {
                for r in &table[k - left] {
                    trees.push(BinaryTree::node(l.clone(), r.clone()));
                }
            }
        }
        table.push(trees);
    }
    table.swap_remove(leaves.min(table.len() - 1))
}

fn check_bound(rank: Rank, bound: usize) -> Result<()> {
    if rank.get() > bound {
        return Err(Error::BoundExceeded { rank: rank.get(), bound });
    }
    Ok(())
}

/// All rectangle partitions of `A_rank`, one per ordered tree.
pub fn enumerate_partitions(rank: Rank, bound: usize) -> Result<Vec<RectanglePartition>> {
    check_bound(rank, bound)?;
    all_trees(rank.get() + 1).iter().map(|t| tree_to_partition(rank, t)).collect()
}

/// One cube class: its canonical tree and a representative.
#[derive(Debug, Clone)]
pub struct CubeClass {
    pub tree: BinaryTree,
    pub partition: RectanglePartition,
    pub cube: CoxeterCube,
}

/// Cube classes modulo reorientation, one per tree isomorphism class.
pub fn enumerate_cube_classes(rank: Rank, bound: usize) -> Result<Vec<CubeClass>> {
    check_bound(rank, bound)?;
    let canonical: BTreeSet<BinaryTree> = all_trees(rank.get() + 1).iter().map(tree_canonical).collect();
    canonical
        .into_iter()
        .map(|tree| {
            let partition = tree_to_partition(rank, &tree)?;
            let cube = cube_of_partition(&partition);
            Ok(CubeClass { tree, partition, cube })
        })
        .collect()
}

/// `Edge_n`, the elements whose inversion set is a based rectangle, sorted
/// by length and then one-line notation.
pub fn edge_set(rank: Rank, bound: usize) -> Result<Vec<Permutation>> {
    check_bound(rank, bound)?;
    let mut out: Vec<Permutation> = all_rectangles(rank).into_iter().map(element_of_rectangle).collect();
    out.sort_by(element_order);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::{
        cube_canonical, cube_flip, cube_validate, square_reorient, CoxeterSquare, ReorientMove, TerminalEdges,
    };
    use crate::groupoid::nu;
    use crate::typea::all_permutations;

    fn r(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    fn rect(n: usize, lo: usize, base: usize, hi: usize) -> BasedRectangle {
        BasedRectangle::new(r(n), lo, base, hi).unwrap()
    }

    fn part(n: usize, triples: &[[usize; 3]]) -> RectanglePartition {
        RectanglePartition::from_triples(r(n), triples).unwrap()
    }

    fn p(n: usize, text: &str) -> Permutation {
        Permutation::parse(r(n), text).unwrap()
    }

    fn t(text: &str) -> BinaryTree {
        BinaryTree::parse(text).unwrap()
    }

    fn catalan(n: usize) -> usize {
        let mut c = vec![1usize; n + 1];
        for k in 1..=n {
            c[k] = (0..k).map(|i| c[i] * c[k - 1 - i]).sum();
        }
        c[n]
    }

    const A4_P: [[usize; 3]; 4] = [[1, 1, 4], [1, 4, 5], [2, 2, 3], [2, 3, 4]];

    #[test]
    fn rectangle_examples() {
        let roots = rectangle_roots(rect(2, 1, 2, 3));
        assert_eq!(roots, p(2, "s2 s1").inversion_set());
        assert_eq!(roots.len(), 2);
        assert_eq!(rectangle_roots(rect(3, 2, 2, 3)), RootSet::from_iter([PositiveRoot::simple(r(3), 2).unwrap()]));
        assert_eq!(rectangle_roots(rect(4, 1, 2, 5)).len(), 6);
        assert!(BasedRectangle::new(r(2), 2, 1, 3).is_err());
        assert!(BasedRectangle::new(r(2), 1, 3, 3).is_err());
        assert!(BasedRectangle::new(r(2), 1, 1, 4).is_err());
    }

    #[test]
    fn element_rectangle_examples() {
        assert_eq!(element_of_rectangle(rect(2, 1, 2, 3)).one_line(), vec![3, 1, 2]);
        assert_eq!(element_of_rectangle(rect(2, 1, 2, 3)), p(2, "s2 s1"));
        for k in 1..=3 {
            assert_eq!(element_of_rectangle(rect(3, k, k, k + 1)), Permutation::simple_reflection(r(3), k).unwrap());
            assert_eq!(rectangle_of_element(&Permutation::simple_reflection(r(3), k).unwrap()), Some(rect(3, k, k, k + 1)));
        }
        assert_eq!(element_of_rectangle(rect(3, 1, 2, 4)).one_line(), vec![3, 4, 1, 2]);
        assert_eq!(rectangle_of_element(&p(2, "s2 s1")), Some(rect(2, 1, 2, 3)));
        assert_eq!(rectangle_of_element(&Permutation::longest(r(2))), None);
        assert_eq!(rectangle_of_element(&p(2, "e")), None);
    }

    #[test]
    fn rectangles_are_bigrassmannian_exhaustively() {
        for n in 1..=5 {
            let edges: BTreeSet<Permutation> = edge_set(r(n), 10).unwrap().into_iter().collect();
            for x in all_permutations(r(n)) {
                assert_eq!(edges.contains(&x), x.is_bigrassmannian(), "{x}");
                assert_eq!(rectangle_of_element(&x).is_some(), x.is_bigrassmannian(), "{x}");
            }
        }
    }

    #[test]
    fn edge_set_examples() {
        let e2: BTreeSet<_> = edge_set(r(2), 10).unwrap().into_iter().collect();
        let expected: BTreeSet<_> = ["s1", "s2", "s1 s2", "s2 s1"].iter().map(|w| p(2, w)).collect();
        assert_eq!(e2, expected);
        assert_eq!(edge_set(r(1), 10).unwrap(), vec![p(1, "s1")]);
        for n in 1..=8 {
            assert_eq!(edge_set(r(n), 10).unwrap().len(), (n + 2) * (n + 1) * n / 6);
        }
        for n in 1..=7 {
            let diff = edge_set(r(n + 1), 10).unwrap().len() - edge_set(r(n), 10).unwrap().len();
            assert_eq!(diff, (n + 1) * (n + 2) / 2);
        }
        assert!(edge_set(r(11), 10).is_err());
    }

    #[test]
    fn partitions_validate() {
        assert!(RectanglePartition::from_triples(r(2), &[[1, 1, 3], [2, 2, 3]]).is_ok());
        assert!(RectanglePartition::from_triples(r(2), &[[1, 1, 2], [2, 2, 3]]).is_err());
        assert!(RectanglePartition::from_triples(r(2), &[[1, 1, 3], [1, 2, 3]]).is_err());
        assert!(RectanglePartition::from_triples(r(2), &[[1, 1, 3]]).is_err());
    }

    #[test]
    fn partition_cube_examples() {
        let sq = cube_from_terminal_edges(&[p(2, "s2"), p(2, "s1 s2")]).unwrap();
        assert_eq!(partition_of_cube(&sq).unwrap(), part(2, &[[1, 1, 3], [2, 2, 3]]));
        let right = cube_from_terminal_edges(&[p(3, "s1"), p(3, "s3"), p(3, "s2 s1 s3 s2")]).unwrap();
        assert_eq!(partition_of_cube(&right).unwrap(), part(3, &[[1, 1, 2], [3, 3, 4], [1, 2, 4]]));
        let line = cube_from_terminal_edges(&[p(1, "s1")]).unwrap();
        assert_eq!(partition_of_cube(&line).unwrap(), part(1, &[[1, 1, 2]]));

        let c = cube_of_partition(&part(2, &[[1, 1, 3], [2, 2, 3]]));
        assert_eq!(c.terminal_set(), TerminalEdges::new(vec![p(2, "s1 s2"), p(2, "s2")]));
        assert_eq!(
            square_reorient(&c.face(1, 2, 0), ReorientMove::Diagonal),
            CoxeterSquare::new(p(2, "s1 s2"), p(2, "s1"), p(2, "s2"), p(2, "s1 s2"))
        );
        assert_eq!(cube_of_partition(&part(1, &[[1, 1, 2]])), line);
        let walk = cube_of_partition(&part(4, &[[1, 1, 2], [1, 2, 3], [1, 3, 5], [4, 4, 5]]));
        assert!(cube_validate(&walk));
        assert_eq!(walk.dim(), 4);
    }

    #[test]
    fn subtriangle_examples() {
        let sub = |a, c| SubtriangleInterval { a, c };
        assert_eq!(compatible_subtriangles(&part(4, &A4_P)), vec![sub(2, 2), sub(2, 3), sub(1, 3), sub(1, 4)]);
        assert_eq!(compatible_subtriangles(&part(1, &[[1, 1, 2]])), vec![sub(1, 1)]);
        assert_eq!(compatible_subtriangles(&part(2, &[[1, 1, 3], [2, 2, 3]])), vec![sub(2, 2), sub(1, 2)]);
    }

    #[test]
    fn flip_examples() {
        let sub = |a, c| SubtriangleInterval { a, c };
        let a2 = part(2, &[[1, 1, 3], [2, 2, 3]]);
        let flipped = flip_subtriangle(&a2, sub(1, 2)).unwrap();
        assert_eq!(flipped, part(2, &[[1, 2, 3], [1, 1, 2]]));
        assert_eq!(flip_subtriangle(&flipped, sub(1, 2)).unwrap(), a2);
        let a4 = part(4, &A4_P);
        assert_eq!(
            flip_subtriangle(&a4, sub(1, 3)).unwrap(),
            part(4, &[[1, 3, 4], [1, 1, 3], [2, 2, 3], [1, 4, 5]])
        );
        assert_eq!(
            flip_subtriangle(&a4, sub(1, 2)).unwrap_err(),
            Error::IncompatibleSubtriangle { a: 1, c: 2 }
        );
    }

    #[test]
    fn tree_examples() {
        assert_eq!(partition_to_tree(&part(2, &[[1, 2, 3], [1, 1, 2]])), t("[[0,0],0]"));
        assert_eq!(partition_to_tree(&part(1, &[[1, 1, 2]])), t("[0,0]"));
        assert_eq!(partition_to_tree(&part(4, &A4_P)), t("[[0,[[0,0],0]],0]"));
        let f1 = part(4, &[[1, 1, 2], [1, 2, 5], [3, 3, 4], [3, 4, 5]]);
        assert_eq!(partition_to_tree(&f1), t("[[0,0],[[0,0],0]]"));

        assert_eq!(tree_to_partition(r(2), &t("[[0,0],0]")).unwrap(), part(2, &[[1, 2, 3], [1, 1, 2]]));
        assert_eq!(tree_to_partition(r(1), &t("[0,0]")).unwrap(), part(1, &[[1, 1, 2]]));
        assert_eq!(tree_to_partition(r(4), &t("[[0,0],[[0,0],0]]")).unwrap(), f1);
        assert_eq!(
            tree_to_partition(r(3), &t("[0,0]")).unwrap_err(),
            Error::LeafCountMismatch { expected: 4, found: 2 }
        );
    }

    #[test]
    fn tree_parsing() {
        let tree = t(" [ [0, 0] , 0 ] ");
        assert_eq!(tree.to_string(), "[[0,0],0]");
        assert_eq!(tree.leaves(), 3);
        assert!(BinaryTree::parse("[0]").is_err());
        assert!(BinaryTree::parse("[0,0]]").is_err());
        assert!(BinaryTree::parse("1").is_err());
    }

    #[test]
    fn canonical_trees() {
        assert_eq!(tree_canonical(&t("[0,[0,0]]")), t("[[0,0],0]"));
        assert_eq!(tree_canonical(&t("[0,0]")), t("[0,0]"));
        assert_eq!(tree_canonical(&t("[[[0,0],0],0]")), tree_canonical(&t("[0,[0,[0,0]]]")));
        for tree in all_trees(6) {
            let c = tree_canonical(&tree);
            for path in ["", "L", "R", "LL", "LR", "RL", "RR"] {
                if let Ok(f) = tree_flip(&tree, path) {
                    assert_eq!(tree_canonical(&f), c);
                }
            }
        }
        assert!(tree_flip(&t("[0,0]"), "LL").is_err());
    }

    #[test]
    fn round_trips() {
        for n in 1..=8 {
            for partition in enumerate_partitions(r(n), 10).unwrap() {
                assert_eq!(tree_to_partition(r(n), &partition_to_tree(&partition)).unwrap(), partition);
            }
        }
        for leaves in 2..=9 {
            for tree in all_trees(leaves) {
                let rank = r(leaves - 1);
                assert_eq!(partition_to_tree(&tree_to_partition(rank, &tree).unwrap()), tree);
            }
        }
    }

    #[test]
    fn catalan_counts() {
        for n in 1..=10 {
            let parts = enumerate_partitions(r(n), 10).unwrap();
            assert_eq!(parts.len(), catalan(n));
            let distinct: BTreeSet<_> = parts.iter().collect();
            assert_eq!(distinct.len(), parts.len());
        }
        assert!(enumerate_partitions(r(11), 10).is_err());
        assert_eq!(enumerate_partitions(r(11), 11).unwrap().len(), catalan(11));
    }

    #[test]
    fn subtriangle_counts() {
        for n in 1..=6 {
            for partition in enumerate_partitions(r(n), 10).unwrap() {
                assert_eq!(compatible_subtriangles(&partition).len(), n, "{partition}");
            }
        }
    }

    #[test]
    fn flips_mirror_subtrees() {
        for n in 1..=6 {
            for partition in enumerate_partitions(r(n), 10).unwrap() {
                let tree = partition_to_tree(&partition);
                for sub in compatible_subtriangles(&partition) {
                    let path = subtriangle_path(&partition, sub).expect("compatible triangles are tree nodes");
                    let flipped = flip_subtriangle(&partition, sub).unwrap();
                    assert_eq!(partition_to_tree(&flipped), tree_flip(&tree, &path).unwrap());
                }
            }
        }
    }

    #[test]
    fn class_counts() {
        let expected = [1, 1, 2, 3, 6];
        for (n, &count) in (1..=5).zip(&expected) {
            let classes = enumerate_cube_classes(r(n), 10).unwrap();
            assert_eq!(classes.len(), count);
            let canon: BTreeSet<TerminalEdges> = enumerate_partitions(r(n), 10)
                .unwrap()
                .iter()
                .map(|p| cube_canonical(&cube_of_partition(p)))
                .collect();
            assert_eq!(canon.len(), count);
            for class in classes {
                assert!(cube_validate(&class.cube));
            }
        }
    }

    #[test]
    fn highest_rectangles_are_nu() {
        for n in 1..=5 {
            let rank = r(n);
            for b in 1..=n {
                let x = element_of_rectangle(rect(n, 1, b, n + 1));
                let r = n + 1 - b;
                let k = GeneratorSet::full(rank).without(r);
                assert_eq!(x, nu(rank, r, &k).unwrap().element);
                let roots = rectangle_roots(rect(n, 1, b, n + 1));
                let by_support: RootSet =
                    RootSet::all_positive(rank).iter().filter(|g| g.support().contains(b)).collect();
                assert_eq!(roots, by_support);
            }
        }
    }

    #[test]
    fn single_direction_flip_is_not_the_subtriangle_flip() {
        let partition = part(3, &[[1, 1, 4], [2, 2, 4], [3, 3, 4]]);
        let sub = SubtriangleInterval { a: 1, c: 3 };
        let k = partition.rectangles().iter().position(|&x| x == partition.highest_rectangle(sub)).unwrap() + 1;
        let single = cube_flip(&cube_of_partition(&partition), k).unwrap().terminal_set();
        let mirrored = cube_of_partition(&flip_subtriangle(&partition, sub).unwrap()).terminal_set();
        assert_ne!(single, mirrored);
        assert_eq!(partition_of_cube(&cube_from_terminal_edges(single.as_slice()).unwrap()).unwrap(),
            part(3, &[[1, 3, 4], [2, 2, 3], [1, 1, 3]]));
    }

    #[test]
    fn flip_correspondence() {
        for n in 1..=5 {
            for partition in enumerate_partitions(r(n), 10).unwrap() {
                let cube = cube_of_partition(&partition);
                for sub in compatible_subtriangles(&partition) {
                    let mut flipped = cube.clone();
                    for k in flip_directions(&partition, sub) {
                        flipped = cube_flip(&flipped, k).unwrap();
                    }
                    let via_cube = flipped.terminal_set();
                    let via_partition = cube_of_partition(&flip_subtriangle(&partition, sub).unwrap()).terminal_set();
                    assert_eq!(via_cube, via_partition, "{partition} {sub}");
                }
            }
        }
    }
}
