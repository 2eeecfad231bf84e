//! DOT and ASCII renderers.

use std::fmt::Write;

use coxcube::cube::{vertex_label, CoxeterCube};
use coxcube::rect::{BinaryTree, RectanglePartition};
use coxcube::{Rank, RootSet};

/// Vertices are bit strings; each edge carries its label's reduced word.
pub fn cube_dot(c: &CoxeterCube) -> String {
    let mut out = String::from("digraph cube {\n  rankdir=BT;\n");
    for v in 0..(1u32 << c.dim()) {
        let name = vertex_label(c.dim(), v);
        writeln!(out, "  \"{name}\";").unwrap();
    }
    for (label, x) in c.edges() {
        let (s, t) = (vertex_label(c.dim(), label.source()), vertex_label(c.dim(), label.target()));
        writeln!(
            out,
            "  \"{s}\" -> \"{t}\" [label=\"{}\", tooltip=\"{label} {x}\"];",
            x.canonical_reduced_word()
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn tree_dot(t: &BinaryTree) -> String {
    fn walk(t: &BinaryTree, next: &mut usize, out: &mut String) -> usize {
        let id = *next;
        *next += 1;
        match t {
            BinaryTree::Leaf => {
                writeln!(out, "  n{id} [shape=point];").unwrap();
            }
            BinaryTree::Node(l, r) => {
                writeln!(out, "  n{id} [shape=circle, label=\"\"];").unwrap();
                let li = walk(l, next, out);
                let ri = walk(r, next, out);
                writeln!(out, "  n{id} -> n{li};").unwrap();
                writeln!(out, "  n{id} -> n{ri};").unwrap();
            }
        }
        id
    }
    let mut out = String::from("digraph tree {\n");
    walk(t, &mut 0, &mut out);
    out.push_str("}\n");
    out
}

/// Lays out the root poset as a diamond: root `(i, j)` sits in column
/// `i + j` and in the row of its depth, highest root on top.
fn diamond(rank: Rank, cell: impl Fn(usize, usize) -> char) -> String {
    let n = rank.get();
    let mut out = String::new();
    for depth in (1..=n).rev() {
        let mut line = vec![' '; 4 * n - 3];
        for i in 1..=n + 1 - depth {
            let j = i + depth;
            line[2 * (i + j - 3)] = cell(i, j);
        }
        let text: String = line.into_iter().collect();
        out.push_str(text.trim_end());
        out.push('\n');
    }
    out
}

/// Each root is marked with the letter of its rectangle; a legend follows.
pub fn partition_ascii(p: &RectanglePartition) -> String {
    let letter = |k: usize| (b'A' + (k % 26) as u8) as char;
    let mut out = diamond(p.rank(), |i, j| {
        p.rectangles()
            .iter()
            .position(|r| r.contains(i, j))
            .map(letter)
            .unwrap_or('?')
    });
    for (k, r) in p.rectangles().iter().enumerate() {
        writeln!(out, "{} = {r}", letter(k)).unwrap();
    }
    out
}

/// `*` for members of the set, `.` for the remaining positive roots.
pub fn root_set_ascii(rank: Rank, set: &RootSet) -> String {
    diamond(rank, |i, j| if set.contains_pair(i, j) { '*' } else { '.' })
}

#[cfg(test)]
mod tests {
    use super::*;
    use coxcube::cube::cube_from_terminal_edges;
    use coxcube::Permutation;

    #[test]
    fn a2_partition_diamond() {
        let rank = Rank::new(2).unwrap();
        let p = RectanglePartition::from_triples(rank, &[[1, 1, 3], [2, 2, 3]]).unwrap();
        assert_eq!(partition_ascii(&p), "  A\nA   B\nA = (1,1,3)\nB = (2,2,3)\n");
    }

    #[test]
    fn root_set_diamond() {
        let rank = Rank::new(3).unwrap();
        let x = Permutation::parse(rank, "s2 s1 s3 s2").unwrap();
        assert_eq!(root_set_ascii(rank, &x.inversion_set()), "    *\n  *   *\n.   *   .\n");
    }

    #[test]
    fn one_cube_dot() {
        let rank = Rank::new(1).unwrap();
        let c = cube_from_terminal_edges(&[Permutation::simple_reflection(rank, 1).unwrap()]).unwrap();
        let dot = cube_dot(&c);
        assert_eq!(dot.matches(" -> ").count(), 1);
        assert!(dot.contains("\"0\";") && dot.contains("\"1\";"));
        assert!(dot.contains("label=\"s1\""));
    }

    #[test]
    fn tree_dot_shape() {
        let dot = tree_dot(&BinaryTree::parse("[[0,0],0]").unwrap());
        assert_eq!(dot.matches("shape=point").count(), 3);
        assert_eq!(dot.matches(" -> ").count(), 4);
    }
}
