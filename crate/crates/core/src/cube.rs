//! Coxeter squares and Coxeter `n`-cubes.
//!
//! A cube is an edge-labelled oriented `n`-cube. Vertices are bit vectors
//! and an edge with `*` in direction `k` runs from the vertex with `0` in
//! position `k` to the vertex with `1` there. The edges entering the
//! all-ones vertex are the terminal edges.
//!
//! Within the face spanned by directions `p < q`, the edges of direction
//! `q` are the horizontal `w` (top, `a_p = 1`) and `z` (bottom, `a_p = 0`),
//! and the edges of direction `p` are the vertical `x` (left, `a_q = 0`)
//! and `y` (right, `a_q = 1`).

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::groupoid::nu;
use crate::transfer::transfer_check;
use crate::typea::{GeneratorSet, Permutation, Rank};

/// Largest cube dimension the bit-vector encoding accepts.
pub const MAX_DIM: usize = 24;

/// A commuting square `w x = y z` with `w(Φ_x) = Φ_y`:
///
/// ```text
///   · --w--> ·
///   ^        ^
///   x        y
///   |        |
///   · --z--> ·
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterSquare {
    pub w: Permutation,
    pub x: Permutation,
    pub y: Permutation,
    pub z: Permutation,
}

impl CoxeterSquare {
    pub fn new(w: Permutation, x: Permutation, y: Permutation, z: Permutation) -> Self {
        CoxeterSquare { w, x, y, z }
    }

    pub fn terminal_edges(&self) -> [&Permutation; 2] {
        [&self.w, &self.y]
    }
}

impl fmt::Display for CoxeterSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(w={}, x={}, y={}, z={})", self.w, self.x, self.y, self.z)
    }
}

pub fn square_validate(q: &CoxeterSquare) -> Result<bool> {
    let rank = q.w.rank();
    for e in [&q.x, &q.y, &q.z] {
        if e.rank() != rank {
            return Err(Error::RankMismatch(rank.get(), e.rank().get()));
        }
    }
    if [&q.w, &q.x, &q.y, &q.z].iter().any(|e| e.is_identity()) {
        return Ok(false);
    }
    Ok(&q.w * &q.x == &q.y * &q.z && transfer_check(&q.w, &q.x, &q.y)?)
}

/// `(x1, x1⁻¹(x1∨x2), x2, x2⁻¹(x1∨x2))`, if that is a valid square.
pub fn square_complete(x1: &Permutation, x2: &Permutation) -> Option<CoxeterSquare> {
    if x1.rank() != x2.rank() {
        return None;
    }
    let join = x1.join_with(x2);
    let q = CoxeterSquare::new(x1.clone(), &x1.inverse() * &join, x2.clone(), &x2.inverse() * &join);
    square_validate(&q).ok()?.then_some(q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReorientMove {
    /// `(y, z, w, x)`
    Diagonal,
    /// `(w⁻¹, y, x, z⁻¹)`
    FlipHorizontal,
    /// `(y⁻¹, w, z, x⁻¹)`
    FlipVertical,
}

impl ReorientMove {
    pub const ALL: [ReorientMove; 3] =
        [ReorientMove::Diagonal, ReorientMove::FlipHorizontal, ReorientMove::FlipVertical];
}

impl FromStr for ReorientMove {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "diagonal" => Ok(ReorientMove::Diagonal),
            "flip_horizontal" | "horizontal" => Ok(ReorientMove::FlipHorizontal),
            "flip_vertical" | "vertical" => Ok(ReorientMove::FlipVertical),
            _ => Err(Error::InvalidMove(s.to_string())),
        }
    }
}

impl fmt::Display for ReorientMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReorientMove::Diagonal => "diagonal",
            ReorientMove::FlipHorizontal => "flip_horizontal",
            ReorientMove::FlipVertical => "flip_vertical",
        })
    }
}

pub fn square_reorient(q: &CoxeterSquare, mv: ReorientMove) -> CoxeterSquare {
    let CoxeterSquare { w, x, y, z } = q.clone();
    match mv {
        ReorientMove::Diagonal => CoxeterSquare::new(y, z, w, x),
        ReorientMove::FlipHorizontal => CoxeterSquare::new(w.inverse(), y, x, z.inverse()),
        ReorientMove::FlipVertical => CoxeterSquare::new(y.inverse(), w, z, x.inverse()),
    }
}

/// An edge `e_{a_1…a_n}` with exactly one `*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeLabel {
    dim: usize,
    star: usize,
    ones: u32,
}

impl EdgeLabel {
    /// `star` is a 1-based direction; bit `i − 1` of `ones` is coordinate `i`.
    pub fn new(dim: usize, star: usize, ones: u32) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM || star == 0 || star > dim {
            return Err(Error::InvalidDirection { direction: star, dim });
        }
        Ok(EdgeLabel { dim, star, ones: ones & !(1 << (star - 1)) & ((1u32 << dim) - 1) })
    }

    pub fn dim(self) -> usize {
        self.dim
    }

    pub fn direction(self) -> usize {
        self.star
    }

    /// The `1` coordinates, as a bitmask.
    pub fn ones(self) -> u32 {
        self.ones
    }

    pub fn source(self) -> u32 {
        self.ones
    }

    pub fn target(self) -> u32 {
        self.ones | (1 << (self.star - 1))
    }

    pub fn is_terminal(self) -> bool {
        self.target() == full_mask(self.dim)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let dim = text.chars().count();
        let mut star = None;
        let mut ones = 0u32;
        for (i, c) in text.chars().enumerate() {
            match c {
                '0' => {}
                '1' => ones |= 1 << i,
                '*' if star.is_none() => star = Some(i + 1),
                _ => return Err(Error::Parse(format!("bad edge label {text:?}"))),
            }
        }
        let star = star.ok_or_else(|| Error::Parse(format!("edge label {text:?} has no '*'")))?;
        if dim > MAX_DIM {
            return Err(Error::Parse(format!("edge label {text:?} is too long")));
        }
        EdgeLabel::new(dim, star, ones)
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.dim {
            let c = if i == self.star {
                '*'
            } else if self.ones & (1 << (i - 1)) != 0 {
                '1'
            } else {
                '0'
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

fn full_mask(dim: usize) -> u32 {
    ((1u64 << dim) - 1) as u32
}

/// Renders a vertex as a bit string, coordinate 1 first.
pub fn vertex_label(dim: usize, vertex: u32) -> String {
    (0..dim).map(|i| if vertex & (1 << i) != 0 { '1' } else { '0' }).collect()
}

/// Total order on elements used for canonical forms: length, then one-line.
pub fn element_order(a: &Permutation, b: &Permutation) -> Ordering {
    a.length().cmp(&b.length()).then_with(|| a.one_line().cmp(&b.one_line()))
}

/// A set of terminal edges, kept sorted by [`element_order`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TerminalEdges(Vec<Permutation>);

impl TerminalEdges {
    pub fn new(mut edges: Vec<Permutation>) -> Self {
        edges.sort_by(element_order);
        TerminalEdges(edges)
    }

    pub fn as_slice(&self) -> &[Permutation] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.0.iter()
    }

    pub fn into_vec(self) -> Vec<Permutation> {
        self.0
    }

    /// Pairwise disjoint inversion sets, each holding exactly one simple
    /// root, covering `Φ⁺` when the ambient rank equals the number of edges.
    pub fn satisfies_invariants(&self) -> bool {
        let Some(first) = self.0.first() else {
            return false;
        };
        let rank = first.rank();
        let mut seen = crate::typea::RootSet::new();
        for x in &self.0 {
            if x.rank() != rank {
                return false;
            }
            let phi = x.inversion_set();
            if !phi.is_disjoint(&seen) || phi.simple_roots().count() != 1 {
                return false;
            }
            seen = seen.union(&phi);
        }
        rank.get() != self.0.len() || seen.len() == rank.positive_root_count()
    }
}

impl Ord for TerminalEdges {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            match element_order(a, b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for TerminalEdges {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TerminalEdges {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// An edge-labelled oriented cube inside `A_rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterCube {
    rank: Rank,
    dim: usize,
    edges: BTreeMap<EdgeLabel, Permutation>,
}

impl CoxeterCube {
    /// Assembles a cube from its labels. Every edge of the `dim`-cube must be
    /// present exactly once; whether the faces are squares is left to
    /// [`cube_validate`].
    pub fn from_edges(rank: Rank, dim: usize, edges: BTreeMap<EdgeLabel, Permutation>) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::InvalidCube(format!("dimension {dim} out of range")));
        }
        let expected = dim << (dim - 1);
        if edges.len() != expected {
            return Err(Error::InvalidCube(format!("{} edges given, a {dim}-cube has {expected}", edges.len())));
        }
        for (label, x) in &edges {
            if label.dim() != dim {
                return Err(Error::InvalidCube(format!("edge label {label} has the wrong length")));
            }
            if x.rank() != rank {
                return Err(Error::RankMismatch(rank.get(), x.rank().get()));
            }
        }
        Ok(CoxeterCube { rank, dim, edges })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn edges(&self) -> &BTreeMap<EdgeLabel, Permutation> {
        &self.edges
    }

    /// The edge in direction `k` leaving `vertex` (its `k`-th bit is ignored).
    pub fn edge(&self, k: usize, vertex: u32) -> &Permutation {
        let label = EdgeLabel::new(self.dim, k, vertex).expect("direction in range");
        &self.edges[&label]
    }

    pub fn set_edge(&mut self, label: EdgeLabel, x: Permutation) -> Result<()> {
        if label.dim() != self.dim {
            return Err(Error::InvalidCube(format!("edge label {label} has the wrong length")));
        }
        self.edges.insert(label, x);
        Ok(())
    }

    /// Terminal edges in direction order.
    pub fn terminal_edges(&self) -> Vec<Permutation> {
        let full = full_mask(self.dim);
        (1..=self.dim).map(|k| self.edge(k, full).clone()).collect()
    }

    pub fn terminal_set(&self) -> TerminalEdges {
        TerminalEdges::new(self.terminal_edges())
    }

    /// The square on the face spanned by directions `p < q` through `vertex`.
    pub fn face(&self, p: usize, q: usize, vertex: u32) -> CoxeterSquare {
        let (bp, bq) = (1u32 << (p - 1), 1u32 << (q - 1));
        let base = vertex & !bp & !bq;
        CoxeterSquare::new(
            self.edge(q, base | bp).clone(),
            self.edge(p, base).clone(),
            self.edge(p, base | bq).clone(),
            self.edge(q, base).clone(),
        )
    }

    /// Every 2-face, tagged with its directions and base vertex.
    pub fn faces(&self) -> Vec<(usize, usize, u32, CoxeterSquare)> {
        let mut out = Vec::new();
        for p in 1..=self.dim {
            for q in p + 1..=self.dim {
                let mask = (1u32 << (p - 1)) | (1u32 << (q - 1));
                for v in 0..=full_mask(self.dim) {
                    if v & mask == 0 {
                        out.push((p, q, v, self.face(p, q, v)));
                    }
                }
            }
        }
        out
    }

    /// The product of edge labels along a path from `0…0` to `vertex`,
    /// raising coordinates in increasing order, later edges on the left.
    pub fn potential(&self, vertex: u32) -> Permutation {
        let mut acc = Permutation::identity(self.rank);
        let mut at = 0u32;
        for k in 1..=self.dim {
            if vertex & (1 << (k - 1)) != 0 {
                acc = self.edge(k, at) * &acc;
                at |= 1 << (k - 1);
            }
        }
        acc
    }

    /// The same cube inside a larger `A_rank`.
    pub fn embed(&self, rank: Rank) -> Result<Self> {
        let edges = self
            .edges
            .iter()
            .map(|(l, x)| Ok((*l, x.embed(rank)?)))
            .collect::<Result<_>>()?;
        Ok(CoxeterCube { rank, dim: self.dim, edges })
    }

    /// Generators occurring in any edge label.
    pub fn support(&self) -> GeneratorSet {
        self.edges.values().flat_map(|x| x.support().iter().collect::<Vec<_>>()).collect()
    }
}

/// Rebuilds a cube from terminal edges given in direction order. The edge
/// with `*` at `k` and `1`-set `A` is `(∨_{i∉A, i≠k} x_i)⁻¹ (∨_{i∉A} x_i)`.
pub fn cube_from_terminal_edges(terminal: &[Permutation]) -> Option<CoxeterCube> {
    let dim = terminal.len();
    if dim == 0 || dim > MAX_DIM {
        return None;
    }
    let rank = terminal[0].rank();
    if terminal.iter().any(|x| x.rank() != rank || x.is_identity()) {
        return None;
    }
    let full = full_mask(dim);
    // h(v) = ∨ of x_i over the zero coordinates of v
    let mut h: Vec<Option<Permutation>> = vec![None; 1 << dim];
    h[full as usize] = Some(Permutation::identity(rank));
    for v in (0..full).rev() {
        let zeros: Vec<&Permutation> =
            (1..=dim).filter(|k| v & (1 << (k - 1)) == 0).map(|k| &terminal[k - 1]).collect();
        h[v as usize] = Permutation::join(zeros).ok();
    }
    let mut edges = BTreeMap::new();
    for k in 1..=dim {
        let bit = 1u32 << (k - 1);
        for v in (0..=full).filter(|v| v & bit == 0) {
            let source = h[v as usize].as_ref()?;
            let target = h[(v | bit) as usize].as_ref()?;
            edges.insert(EdgeLabel::new(dim, k, v).ok()?, &target.inverse() * source);
        }
    }
    let cube = CoxeterCube { rank, dim, edges };
    cube_validate(&cube).then_some(cube)
}

/// No identity edges, every face a Coxeter square, and path products
/// independent of the path.
pub fn cube_validate(c: &CoxeterCube) -> bool {
    if c.edges.len() != c.dim << (c.dim - 1) || c.edges.values().any(|x| x.is_identity() || x.rank() != c.rank) {
        return false;
    }
    if !c.faces().iter().all(|(_, _, _, q)| square_validate(q).unwrap_or(false)) {
        return false;
    }
    let potentials: Vec<Permutation> = (0..=full_mask(c.dim)).map(|v| c.potential(v)).collect();
    c.edges
        .iter()
        .all(|(l, x)| x * &potentials[l.source() as usize] == potentials[l.target() as usize])
}

/// Reverses every edge parallel to direction `k` (1-based).
pub fn cube_flip(c: &CoxeterCube, k: usize) -> Result<CoxeterCube> {
    if k == 0 || k > c.dim {
        return Err(Error::InvalidDirection { direction: k, dim: c.dim });
    }
    let bit = 1u32 << (k - 1);
    let edges = c
        .edges
        .iter()
        .map(|(l, x)| {
            if l.direction() == k {
                (*l, x.inverse())
            } else {
                (EdgeLabel { ones: l.ones ^ bit, ..*l }, x.clone())
            }
        })
        .collect();
    Ok(CoxeterCube { rank: c.rank, dim: c.dim, edges })
}

/// Terminal edges after flipping the direction carrying `x_k`:
/// `{x_k⁻¹} ∪ {x_k⁻¹ (x_i ∨ x_k) : i ≠ k}`.
pub fn flip_terminal(terminal: &[Permutation], k: usize) -> Vec<Permutation> {
    let xk = &terminal[k];
    let xk_inv = xk.inverse();
    terminal
        .iter()
        .enumerate()
        .map(|(i, xi)| if i == k { xk_inv.clone() } else { &xk_inv * &xi.join_with(xk) })
        .collect()
}

/// Every terminal-edge set reachable by flips.
pub fn flip_orbit(terminal: &TerminalEdges) -> BTreeSet<TerminalEdges> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([terminal.clone()]);
    seen.insert(terminal.clone());
    while let Some(current) = queue.pop_front() {
        for k in 0..current.len() {
            let next = TerminalEdges::new(flip_terminal(current.as_slice(), k));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// The least terminal-edge set in the flip orbit.
pub fn cube_canonical(c: &CoxeterCube) -> TerminalEdges {
    canonical_terminal(&c.terminal_set())
}

pub fn canonical_terminal(terminal: &TerminalEdges) -> TerminalEdges {
    flip_orbit(terminal).into_iter().next().expect("orbit contains its seed")
}

/// Merges directions `i` and `j` into one carrying `x_i ∨ x_j`.
pub fn cube_collapse(c: &CoxeterCube, i: usize, j: usize) -> Result<CoxeterCube> {
    for d in [i, j] {
        if d == 0 || d > c.dim {
            return Err(Error::InvalidDirection { direction: d, dim: c.dim });
        }
    }
    if i == j {
        return Err(Error::InvalidDirection { direction: j, dim: c.dim });
    }
    let (lo, hi) = (i.min(j), i.max(j));
    let mut terminal = c.terminal_edges();
    let joined = terminal[lo - 1].join_with(&terminal[hi - 1]);
    terminal[lo - 1] = joined;
    terminal.remove(hi - 1);
    cube_from_terminal_edges(&terminal)
        .ok_or_else(|| Error::InvalidCube("collapsed terminal edges do not form a cube".into()))
}

/// `Prod(X, Y)`, for cubes supported on orthogonal generator sets.
pub fn product_cube(x: &CoxeterCube, y: &CoxeterCube) -> Result<CoxeterCube> {
    if x.rank != y.rank {
        return Err(Error::RankMismatch(x.rank.get(), y.rank.get()));
    }
    if !x.support().is_orthogonal_to(&y.support()) {
        return Err(Error::NotOrthogonal);
    }
    let mut terminal = x.terminal_edges();
    terminal.extend(y.terminal_edges());
    cube_from_terminal_edges(&terminal)
        .ok_or_else(|| Error::InvalidCube("product terminal edges do not form a cube".into()))
}

/// Builds an `n`-cube in `A_n` by adjoining `ν(α_{c_{k+1}}, Π_{J_k})` as a
/// new direction and conjugating the existing cube across it. Defaults to
/// `c = (1, 2, …, n)`.
pub fn construct_inductive(rank: Rank, choices: Option<&[usize]>) -> Result<CoxeterCube> {
    let n = rank.get();
    let choices: Vec<usize> = match choices {
        Some(c) => c.to_vec(),
        None => (1..=n).collect(),
    };
    let mut sorted = choices.clone();
    sorted.sort_unstable();
    if sorted != (1..=n).collect::<Vec<_>>() {
        return Err(Error::InvalidChoices(format!("{choices:?} is not an ordering of 1..={n}")));
    }
    if n > MAX_DIM {
        return Err(Error::InvalidChoices(format!("rank {n} exceeds the cube dimension limit {MAX_DIM}")));
    }
    let first = Permutation::simple_reflection(rank, choices[0])?;
    let mut cube = CoxeterCube {
        rank,
        dim: 1,
        edges: BTreeMap::from([(EdgeLabel::new(1, 1, 0)?, first)]),
    };
    let mut j = GeneratorSet::empty().with(choices[0]);
    for &alpha in &choices[1..] {
        let g = nu(rank, alpha, &j)?.element;
        let g_inv = g.inverse();
        let dim = cube.dim + 1;
        let new_bit = 1u32 << (dim - 1);
        let mut edges = BTreeMap::new();
        for (l, x) in &cube.edges {
            edges.insert(EdgeLabel::new(dim, l.direction(), l.ones())?, x.clone());
            edges.insert(EdgeLabel::new(dim, l.direction(), l.ones() | new_bit)?, &(&g * x) * &g_inv);
        }
        for v in 0..(1u32 << cube.dim) {
            edges.insert(EdgeLabel::new(dim, dim, v)?, g.clone());
        }
        cube = CoxeterCube { rank, dim, edges };
        j = j.with(alpha);
    }
    Ok(cube)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::typea::all_permutations;

    fn r(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    fn p(n: usize, text: &str) -> Permutation {
        Permutation::parse(r(n), text).unwrap()
    }

    fn ps(n: usize, texts: &[&str]) -> Vec<Permutation> {
        texts.iter().map(|t| p(n, t)).collect()
    }

    fn a2_square() -> CoxeterSquare {
        CoxeterSquare::new(p(2, "s1 s2"), p(2, "s1"), p(2, "s2"), p(2, "s1 s2"))
    }

    #[test]
    fn square_validate_examples() {
        assert!(square_validate(&a2_square()).unwrap());
        let mut q = a2_square();
        q.x = p(2, "e");
        assert!(!square_validate(&q).unwrap());
        let q = CoxeterSquare::new(p(3, "s1"), p(3, "s3"), p(3, "s3"), p(3, "s1"));
        assert!(square_validate(&q).unwrap());
        let mixed = CoxeterSquare::new(p(3, "s1"), p(2, "s1"), p(3, "s3"), p(3, "s1"));
        assert!(square_validate(&mixed).is_err());
    }

    #[test]
    fn square_complete_examples() {
        assert_eq!(square_complete(&p(2, "s1 s2"), &p(2, "s2")), Some(a2_square()));
        assert_eq!(square_complete(&p(2, "s1"), &p(2, "s2")), None);
        assert_eq!(
            square_complete(&p(3, "s1"), &p(3, "s3")),
            Some(CoxeterSquare::new(p(3, "s1"), p(3, "s3"), p(3, "s3"), p(3, "s1")))
        );
    }

    #[test]
    fn reorient_examples() {
        let q = a2_square();
        assert_eq!(
            square_reorient(&q, ReorientMove::Diagonal),
            CoxeterSquare::new(p(2, "s2"), p(2, "s1 s2"), p(2, "s1 s2"), p(2, "s1"))
        );
        let h = square_reorient(&q, ReorientMove::FlipHorizontal);
        assert_eq!(h, CoxeterSquare::new(p(2, "s2 s1"), p(2, "s2"), p(2, "s1"), p(2, "s2 s1")));
        assert_eq!(square_reorient(&h, ReorientMove::FlipHorizontal), q);
        assert_eq!("bogus".parse::<ReorientMove>().unwrap_err(), Error::InvalidMove("bogus".into()));
        assert_eq!("flip-vertical".parse::<ReorientMove>().unwrap(), ReorientMove::FlipVertical);
    }

    fn all_squares(n: usize) -> Vec<CoxeterSquare> {
        let group = all_permutations(r(n));
        let mut out = Vec::new();
        for w in group.iter().filter(|e| !e.is_identity()) {
            for x in group.iter().filter(|e| !e.is_identity()) {
                let wx = w * x;
                for y in group.iter().filter(|e| !e.is_identity()) {
                    let z = &y.inverse() * &wx;
                    let q = CoxeterSquare::new(w.clone(), x.clone(), y.clone(), z);
                    if square_validate(&q).unwrap() {
                        out.push(q);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn exhaustive_a3_squares() {
        let squares = all_squares(3);
        assert!(!squares.is_empty());
        let orth = GeneratorSet::parse(r(3), "1,3").unwrap();
        for q in &squares {
            let join = q.w.join_with(&q.y);
            assert_eq!(join, &q.w * &q.x);
            assert_eq!(join, &q.y * &q.z);
            assert!(q.w.inversion_set().is_disjoint(&q.y.inversion_set()));
            assert_eq!(join.inversion_set(), q.w.inversion_set().union(&q.y.inversion_set()));
            for mv in ReorientMove::ALL {
                assert!(square_validate(&square_reorient(q, mv)).unwrap());
            }
            let in_w13 = [&q.w, &q.x, &q.y, &q.z].iter().all(|e| e.support().iter().all(|i| orth.contains(i)));
            if in_w13 {
                let cubes: Vec<_> = [&q.y, &q.w]
                    .iter()
                    .map(|t| cube_from_terminal_edges(std::slice::from_ref(*t)).unwrap())
                    .collect();
                let prod = product_cube(&cubes[0], &cubes[1]).unwrap();
                assert_eq!(prod.face(1, 2, 0), *q);
            }
        }
    }

    #[test]
    fn a2_square_reorientation_orbit() {
        let mut seen = vec![a2_square()];
        let mut i = 0;
        while i < seen.len() {
            for mv in ReorientMove::ALL {
                let next = square_reorient(&seen[i], mv);
                if !seen.contains(&next) {
                    seen.push(next);
                }
            }
            i += 1;
        }
        let terminal_sets: BTreeSet<TerminalEdges> =
            seen.iter().map(|q| TerminalEdges::new(vec![q.w.clone(), q.y.clone()])).collect();
        let expected: BTreeSet<TerminalEdges> = [
            TerminalEdges::new(ps(2, &["s1 s2", "s2"])),
            TerminalEdges::new(ps(2, &["s2 s1", "s1"])),
        ]
        .into_iter()
        .collect();
        assert_eq!(terminal_sets, expected);
    }

    #[test]
    fn edge_labels() {
        let l = EdgeLabel::parse("*11").unwrap();
        assert_eq!((l.dim(), l.direction(), l.ones()), (3, 1, 0b110));
        assert!(l.is_terminal());
        assert_eq!(l.to_string(), "*11");
        assert_eq!(EdgeLabel::parse("1*0").unwrap().to_string(), "1*0");
        assert!(EdgeLabel::parse("110").is_err());
        assert!(EdgeLabel::parse("**0").is_err());
        assert!(EdgeLabel::parse("1x*").is_err());
    }

    #[test]
    fn reconstruct_a2_square() {
        let c = cube_from_terminal_edges(&ps(2, &["s2", "s1 s2"])).unwrap();
        assert_eq!(c.face(1, 2, 0), a2_square());
        assert_eq!(c.terminal_edges(), ps(2, &["s2", "s1 s2"]));
        assert!(cube_from_terminal_edges(&ps(2, &["s1", "s2"])).is_none());
    }

    #[test]
    fn example_a3_cubes() {
        let right = cube_from_terminal_edges(&ps(3, &["s1", "s3", "s2 s1 s3 s2"])).unwrap();
        assert!(cube_validate(&right));
        assert_eq!(p(3, "s2 s1 s3 s2").one_line(), vec![3, 4, 1, 2]);
        let left = cube_from_terminal_edges(&ps(3, &["s3", "s2 s3", "s1 s2 s3"])).unwrap();
        assert!(cube_validate(&left));
        for k in 1..=3 {
            let flipped = cube_flip(&right, k).unwrap();
            assert!(cube_validate(&flipped));
            assert_eq!(flipped.terminal_set(), right.terminal_set());
            assert_eq!(cube_flip(&flipped, k).unwrap(), right);
        }
        assert_eq!(cube_canonical(&right), TerminalEdges::new(ps(3, &["s1", "s3", "s2 s1 s3 s2"])));
        assert_ne!(cube_canonical(&left), cube_canonical(&right));

        let mut broken = right.clone();
        let label = *broken.edges().keys().next().unwrap();
        broken.set_edge(label, p(3, "e")).unwrap();
        assert!(!cube_validate(&broken));
    }

    #[test]
    fn one_cube() {
        let c = cube_from_terminal_edges(&ps(1, &["s1"])).unwrap();
        assert!(cube_validate(&c));
        assert_eq!(cube_canonical(&c), TerminalEdges::new(ps(1, &["s1"])));
        assert_eq!(construct_inductive(r(1), None).unwrap(), c);
    }

    #[test]
    fn flips_of_a2_square() {
        let c = cube_from_terminal_edges(&ps(2, &["s1 s2", "s2"])).unwrap();
        let flipped = cube_flip(&c, 1).unwrap();
        assert!(cube_validate(&flipped));
        assert_eq!(flipped.terminal_set(), TerminalEdges::new(ps(2, &["s2 s1", "s1"])));
        assert_eq!(
            cube_canonical(&c),
            cube_canonical(&cube_from_terminal_edges(&ps(2, &["s2 s1", "s1"])).unwrap())
        );
        assert!(cube_flip(&c, 3).is_err());
        assert!(cube_flip(&c, 0).is_err());
    }

    #[test]
    fn flip_formula_matches_cube_flip() {
        let cubes = [ps(3, &["s1", "s3", "s2 s1 s3 s2"]), ps(3, &["s3", "s2 s3", "s1 s2 s3"])];
        for terminal in cubes {
            let c = cube_from_terminal_edges(&terminal).unwrap();
            for k in 1..=3 {
                let flipped = cube_flip(&c, k).unwrap();
                assert_eq!(flipped.terminal_edges(), flip_terminal(&terminal, k - 1));
            }
        }
    }

    #[test]
    fn collapse_examples() {
        let left = cube_from_terminal_edges(&ps(3, &["s3", "s2 s3", "s1 s2 s3"])).unwrap();
        let sq = cube_collapse(&left, 1, 2).unwrap();
        assert_eq!(sq.terminal_set(), TerminalEdges::new(ps(3, &["s1 s2 s3", "s2 s3 s2"])));
        let right = cube_from_terminal_edges(&ps(3, &["s1", "s3", "s2 s1 s3 s2"])).unwrap();
        let sq = cube_collapse(&right, 1, 2).unwrap();
        assert_eq!(sq.terminal_set(), TerminalEdges::new(ps(3, &["s1 s3", "s2 s1 s3 s2"])));
        let line = cube_collapse(&sq, 2, 1).unwrap();
        assert_eq!(line.terminal_edges(), vec![Permutation::longest(r(3))]);
        assert!(cube_collapse(&sq, 1, 1).is_err());
        assert!(cube_collapse(&sq, 1, 3).is_err());
    }

    #[test]
    fn product_examples() {
        let a = cube_from_terminal_edges(&ps(3, &["s1"])).unwrap();
        let b = cube_from_terminal_edges(&ps(3, &["s3"])).unwrap();
        let prod = product_cube(&a, &b).unwrap();
        // X takes direction 1, so its edge is the vertical one; the diagonal
        // move puts it on top.
        assert_eq!(
            square_reorient(&prod.face(1, 2, 0), ReorientMove::Diagonal),
            CoxeterSquare::new(p(3, "s1"), p(3, "s3"), p(3, "s3"), p(3, "s1"))
        );

        let sq = cube_from_terminal_edges(&ps(2, &["s1 s2", "s2"])).unwrap().embed(r(4)).unwrap();
        let line = cube_from_terminal_edges(&ps(4, &["s4"])).unwrap();
        let prod = product_cube(&sq, &line).unwrap();
        assert_eq!(prod.dim(), 3);
        assert_eq!(prod.terminal_set(), TerminalEdges::new(ps(4, &["s1 s2", "s2", "s4"])));

        let c = cube_from_terminal_edges(&ps(3, &["s2"])).unwrap();
        assert_eq!(product_cube(&a, &c).unwrap_err(), Error::NotOrthogonal);
    }

    #[test]
    fn inductive_examples() {
        let sq = construct_inductive(r(2), None).unwrap();
        assert_eq!(sq.face(1, 2, 0), a2_square());
        let c3 = construct_inductive(r(3), None).unwrap();
        assert!(cube_validate(&c3));
        let classes = [
            canonical_terminal(&TerminalEdges::new(ps(3, &["s1", "s3", "s2 s1 s3 s2"]))),
            canonical_terminal(&TerminalEdges::new(ps(3, &["s3", "s2 s3", "s1 s2 s3"]))),
        ];
        assert!(classes.contains(&cube_canonical(&c3)));
        assert!(construct_inductive(r(3), Some(&[1, 1, 2])).is_err());
        assert!(construct_inductive(r(3), Some(&[1, 2])).is_err());
        for choices in [[2, 1, 3], [3, 1, 2], [2, 3, 1]] {
            assert!(cube_validate(&construct_inductive(r(3), Some(&choices)).unwrap()));
        }
    }

    #[test]
    fn support_of_elements() {
        assert_eq!(p(4, "s2 s1 s4").support(), GeneratorSet::parse(r(4), "1,2,4").unwrap());
        assert!(p(3, "e").support().is_empty());
    }
}
