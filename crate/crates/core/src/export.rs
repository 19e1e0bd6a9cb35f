//! JSON and Graphviz renderings of decompositions and bases. JSON objects
//! come out with sorted keys and sorted vertex lists.

use std::fmt::Write;

use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::decomposition::{AtomSet, NullDecomposition, Part, Role};
use crate::tree::{Tree, VertexVector};

/// `[{"vertex": v, "coeff": c}, …]` over the nonzero entries.
pub fn sparse_json(v: &VertexVector) -> Value {
    Value::Array(
        v.sparse()
            .into_iter()
            .map(|(vertex, c)| {
                let coeff = if c.is_integer() {
                    json!(c.to_integer().to_i64())
                } else {
                    json!(c.to_string())
                };
                json!({ "vertex": vertex, "coeff": coeff })
            })
            .collect(),
    )
}

/// A basis as a list of sparse vectors, ordered by smallest supported
/// vertex.
pub fn basis_json(vectors: &[VertexVector]) -> Value {
    let mut sorted: Vec<&VertexVector> = vectors.iter().collect();
    sorted.sort_by_key(|v| v.support());
    Value::Array(sorted.into_iter().map(sparse_json).collect())
}

fn part_json(p: &Part) -> Value {
    json!({
        "vertices": p.vertices(),
        "edges": p.tree().edge_ids(),
        "supp": p.supp(),
        "core": p.core(),
        "delta_core": p.delta_core(),
    })
}

pub fn decomposition_json(d: &NullDecomposition) -> Value {
    json!({
        "supp": d.supp(),
        "core": d.core(),
        "s_parts": d.s_parts().iter().map(part_json).collect::<Vec<_>>(),
        "n_parts": d.n_parts().components().iter().map(|n| json!({
            "vertices": n.ids(),
            "edges": n.edge_ids(),
        })).collect::<Vec<_>>(),
        "connection_edges": d.connection_edges(),
        "is_s_tree": d.is_s_tree(),
    })
}

pub fn atoms_json(a: &AtomSet) -> Value {
    json!({
        "atoms": a.atoms().iter().map(part_json).collect::<Vec<_>>(),
        "bond_edges": a.bond_edges(),
    })
}

/// Plain DOT for a tree.
pub fn tree_dot(t: &Tree) -> String {
    let mut out = String::from("graph T {\n");
    for v in t.ids() {
        let _ = writeln!(out, "  {v};");
    }
    for (a, b) in t.edge_ids() {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

/// DOT with the decomposition drawn in: supported vertices filled, core
/// vertices double circles, N-parts in dotted clusters, connection edges
/// dashed, bond edges bold.
pub fn decomposition_dot(d: &NullDecomposition) -> String {
    let t = d.tree();
    let roles = d.roles();
    let bonds = d.a_set().bond_edges().to_vec();
    let mut out = String::from("graph T {\n  node [shape=circle];\n");
    for (i, &v) in t.ids().iter().enumerate() {
        match roles[i] {
            Role::Supp => {
                let _ = writeln!(out, "  {v} [style=filled, fillcolor=gray];");
            }
            Role::Core => {
                let _ = writeln!(out, "  {v} [shape=doublecircle];");
            }
            Role::Matched => {}
        }
    }
    for (k, n) in d.n_parts().components().iter().enumerate() {
        let _ = writeln!(out, "  subgraph cluster_n{k} {{\n    style=dotted;");
        for v in n.ids() {
            let _ = writeln!(out, "    {v};");
        }
        out.push_str("  }\n");
    }
    for (a, b) in t.edge_ids() {
        let style = if d.connection_edges().contains(&(a, b)) {
            " [style=dashed]"
        } else if bonds.contains(&(a, b)) {
            " [style=bold]"
        } else {
            ""
        };
        let _ = writeln!(out, "  {a} -- {b}{style};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::decompose;
    use crate::fixtures;
    use crate::tree::VertexId;

    #[test]
    fn sparse_vector_json() {
        let e1 = fixtures::e1();
        let v = VertexVector::from_sparse(&e1, &[(VertexId(3), -1), (VertexId(2), 1)]).unwrap();
        assert_eq!(
            sparse_json(&v).to_string(),
            r#"[{"coeff":1,"vertex":2},{"coeff":-1,"vertex":3}]"#
        );
    }

    #[test]
    fn decomposition_json_lists_parts() {
        let j = decomposition_json(&decompose(&fixtures::e2()));
        let parts: Vec<Value> = j["s_parts"]
            .as_array()
            .unwrap()
            .iter()
            .map(|p| p["vertices"].clone())
            .collect();
        assert_eq!(
            parts,
            vec![
                json!([1, 2, 3]),
                json!([4, 5, 6, 7, 8]),
                json!([9, 10, 11, 12])
            ]
        );
        assert_eq!(j["n_parts"][1]["vertices"], json!([15, 16, 17, 18]));
    }

    #[test]
    fn dot_styles() {
        let dot = decomposition_dot(&decompose(&fixtures::e3()));
        assert!(dot.contains("2 -- 5 [style=bold]"));
        assert!(dot.contains("1 [style=filled"));
        assert!(dot.contains("2 [shape=doublecircle]"));
        let dot = decomposition_dot(&decompose(&fixtures::e2()));
        assert!(dot.contains("1 -- 13 [style=dashed]"));
        assert!(dot.contains("cluster_n1"));
    }
}
