//! JSON encodings.
//!
//! | object      | encoding                                              |
//! |-------------|-------------------------------------------------------|
//! | permutation | one-line array, `[3,1,2]`                             |
//! | cube        | `{"rank":3,"edges":{"*11":[2,1,3,4], …}}`             |
//! | partition   | `{"rank":4,"rectangles":[[1,1,2],[1,2,5], …]}`        |
//! | tree        | nested pairs with `0` for a leaf, `[[0,0],0]`          |
//! | matrix      | `{"size":3,"m":[[1,3,2],[3,1,3],[2,3,1]]}`, `0` is ∞  |
//! | square      | `{"w":[…],"x":[…],"y":[…],"z":[…]}`                   |

use std::collections::BTreeMap;

use coxcube::cube::{CoxeterCube, CoxeterSquare, EdgeLabel, TerminalEdges};
use coxcube::generic::CoxeterMatrix;
use coxcube::rect::{BinaryTree, RectanglePartition};
use coxcube::{Permutation, Rank};
use serde_json::{json, Map, Value};

use crate::CliError;

fn bad(what: &str, detail: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("malformed {what} JSON: {detail}"))
}

fn as_usize(v: &Value, what: &str) -> Result<usize, CliError> {
    v.as_u64().map(|n| n as usize).ok_or_else(|| bad(what, format!("expected a non-negative integer, got {v}")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, CliError> {
    v.as_array().ok_or_else(|| bad(what, format!("expected an array, got {v}")))
}

pub fn permutation_to_json(x: &Permutation) -> Value {
    json!(x.one_line())
}

pub fn permutation_from_json(v: &Value) -> Result<Permutation, CliError> {
    let one_line = as_array(v, "permutation")?
        .iter()
        .map(|e| as_usize(e, "permutation"))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Permutation::from_one_line(&one_line)?)
}

pub fn elements_to_json<'a>(xs: impl IntoIterator<Item = &'a Permutation>) -> Value {
    Value::Array(xs.into_iter().map(permutation_to_json).collect())
}

/// An element with its canonical reduced word, for human-facing output.
pub fn element_summary(x: &Permutation) -> Value {
    json!({ "one_line": x.one_line(), "word": x.canonical_reduced_word().to_string() })
}

pub fn terminal_to_json(t: &TerminalEdges) -> Value {
    elements_to_json(t.iter())
}

pub fn square_to_json(q: &CoxeterSquare) -> Value {
    json!({
        "w": permutation_to_json(&q.w),
        "x": permutation_to_json(&q.x),
        "y": permutation_to_json(&q.y),
        "z": permutation_to_json(&q.z),
    })
}

pub fn square_from_json(v: &Value) -> Result<CoxeterSquare, CliError> {
    let get = |k: &str| permutation_from_json(v.get(k).ok_or_else(|| bad("square", format!("missing {k:?}")))?);
    Ok(CoxeterSquare::new(get("w")?, get("x")?, get("y")?, get("z")?))
}

pub fn cube_to_json(c: &CoxeterCube) -> Value {
    let edges: Map<String, Value> =
        c.edges().iter().map(|(l, x)| (l.to_string(), permutation_to_json(x))).collect();
    json!({ "rank": c.rank().get(), "edges": edges })
}

pub fn cube_from_json(v: &Value) -> Result<CoxeterCube, CliError> {
    let rank = Rank::new(as_usize(v.get("rank").ok_or_else(|| bad("cube", "missing \"rank\""))?, "cube")?)?;
    let edges = v
        .get("edges")
        .and_then(Value::as_object)
        .ok_or_else(|| bad("cube", "missing \"edges\" object"))?;
    let mut map = BTreeMap::new();
    let mut dim = None;
    for (label, x) in edges {
        let label = EdgeLabel::parse(label)?;
        if *dim.get_or_insert(label.dim()) != label.dim() {
            return Err(bad("cube", "edge labels of different lengths"));
        }
        map.insert(label, permutation_from_json(x)?);
    }
    let dim = dim.ok_or_else(|| bad("cube", "no edges"))?;
    if map.len() != edges.len() {
        return Err(bad("cube", "duplicate edge labels"));
    }
    Ok(CoxeterCube::from_edges(rank, dim, map)?)
}

pub fn partition_to_json(p: &RectanglePartition) -> Value {
    json!({ "rank": p.rank().get(), "rectangles": p.triples() })
}

pub fn partition_from_json(v: &Value) -> Result<RectanglePartition, CliError> {
    let rank = Rank::new(as_usize(v.get("rank").ok_or_else(|| bad("partition", "missing \"rank\""))?, "partition")?)?;
    let rects = as_array(v.get("rectangles").ok_or_else(|| bad("partition", "missing \"rectangles\""))?, "partition")?;
    let triples = rects
        .iter()
        .map(|r| {
            let t = as_array(r, "partition")?;
            if t.len() != 3 {
                return Err(bad("partition", format!("rectangle {r} is not a triple")));
            }
            Ok([as_usize(&t[0], "partition")?, as_usize(&t[1], "partition")?, as_usize(&t[2], "partition")?])
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(RectanglePartition::from_triples(rank, &triples)?)
}

pub fn tree_to_json(t: &BinaryTree) -> Value {
    match t {
        BinaryTree::Leaf => json!(0),
        BinaryTree::Node(l, r) => json!([tree_to_json(l), tree_to_json(r)]),
    }
}

pub fn tree_from_json(v: &Value) -> Result<BinaryTree, CliError> {
    match v {
        Value::Number(n) if n.as_u64() == Some(0) => Ok(BinaryTree::Leaf),
        Value::Array(children) if children.len() == 2 => {
            Ok(BinaryTree::node(tree_from_json(&children[0])?, tree_from_json(&children[1])?))
        }
        other => Err(bad("tree", format!("expected 0 or a pair, got {other}"))),
    }
}

pub fn matrix_to_json(m: &CoxeterMatrix) -> Value {
    json!({ "size": m.size(), "m": m.rows() })
}

pub fn matrix_from_json(v: &Value) -> Result<CoxeterMatrix, CliError> {
    let rows = as_array(v.get("m").ok_or_else(|| bad("matrix", "missing \"m\""))?, "matrix")?
        .iter()
        .map(|row| {
            as_array(row, "matrix")?
                .iter()
                .map(|e| as_usize(e, "matrix").map(|m| m as u32))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(size) = v.get("size") {
        if as_usize(size, "matrix")? != rows.len() {
            return Err(bad("matrix", "\"size\" disagrees with the number of rows"));
        }
    }
    Ok(CoxeterMatrix::from_rows(&rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_encoding() {
        let t = BinaryTree::parse("[[0,0],0]").unwrap();
        assert_eq!(tree_to_json(&t).to_string(), "[[0,0],0]");
        assert_eq!(tree_from_json(&tree_to_json(&t)).unwrap(), t);
        assert!(tree_from_json(&json!([0])).is_err());
        assert!(tree_from_json(&json!(1)).is_err());
    }

    #[test]
    fn matrix_encoding() {
        let m = CoxeterMatrix::dihedral(0);
        assert_eq!(matrix_to_json(&m), json!({"size": 2, "m": [[1, 0], [0, 1]]}));
        assert_eq!(matrix_from_json(&matrix_to_json(&m)).unwrap(), m);
        assert!(matrix_from_json(&json!({"size": 3, "m": [[1, 0], [0, 1]]})).is_err());
    }

    #[test]
    fn malformed_inputs() {
        assert!(cube_from_json(&json!({"rank": 2})).is_err());
        assert!(cube_from_json(&json!({"rank": 2, "edges": {"*": [2, 1, 3], "**": [1, 2, 3]}})).is_err());
        assert!(partition_from_json(&json!({"rank": 2, "rectangles": [[1, 1]]})).is_err());
        assert!(permutation_from_json(&json!([1, 1, 2])).is_err());
    }
}
