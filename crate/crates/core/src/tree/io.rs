//! Edge-list and JSON encodings of trees.
//!
//! Edge list: one `u v` pair per line, `#` starts a comment, blank lines are
//! ignored, and a line with a single label declares a vertex (the way a
//! one-vertex tree is written). JSON: `{"vertices":[..],"edges":[[u,v],..]}`.

use serde::{Deserialize, Serialize};

use super::{Tree, VertexId};
use crate::error::{Error, Result};

/// Serialized form of a tree. The canonical encoding sorts both lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDocument {
    #[serde(default)]
    pub vertices: Vec<VertexId>,
    pub edges: Vec<(VertexId, VertexId)>,
}

impl TreeDocument {
    pub fn into_tree(self) -> Result<Tree> {
        Tree::new(self.vertices, self.edges)
    }
}

impl TryFrom<TreeDocument> for Tree {
    type Error = Error;

    fn try_from(doc: TreeDocument) -> Result<Tree> {
        doc.into_tree()
    }
}

impl From<Tree> for TreeDocument {
    fn from(t: Tree) -> Self {
        TreeDocument::from(&t)
    }
}

impl From<&Tree> for TreeDocument {
    fn from(t: &Tree) -> Self {
        TreeDocument {
            vertices: t.ids().to_vec(),
            edges: t.edge_ids(),
        }
    }
}

/// Parses either format; a document whose first non-blank character is `{`
/// is read as JSON.
pub fn parse_tree(text: &str) -> Result<Tree> {
    if text.trim_start().starts_with('{') {
        let doc: TreeDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        doc.into_tree()
    } else {
        parse_edge_list(text)
    }
}

fn parse_label(token: &str, line: usize) -> Result<VertexId> {
    token
        .parse::<u64>()
        .map(VertexId)
        .map_err(|_| Error::Parse {
            line,
            message: format!("`{token}` is not a non-negative integer vertex label"),
        })
}

fn parse_edge_list(text: &str) -> Result<Tree> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [v] => vertices.push(parse_label(v, line)?),
            [a, b] => edges.push((parse_label(a, line)?, parse_label(b, line)?)),
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `u v`, found {} tokens", tokens.len()),
                })
            }
        }
    }
    if vertices.is_empty() && edges.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: "empty input".into(),
        });
    }
    Tree::new(vertices, edges)
}

impl Tree {
    /// Edge-list text, edges ascending. A one-vertex tree is its label.
    pub fn to_edge_list(&self) -> String {
        if self.order() == 1 {
            return format!("{}\n", self.id(0));
        }
        let mut out = String::new();
        for (a, b) in self.edge_ids() {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }

    /// Canonical JSON document (sorted vertices and edges).
    pub fn to_json(&self) -> String {
        serde_json::to_string(&TreeDocument::from(self)).expect("tree documents serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::ids;

    #[test]
    fn parses_small_star() {
        let t = parse_tree("1 2\n1 3").unwrap();
        assert_eq!(t.ids(), ids([1, 2, 3]).as_slice());
        assert_eq!(t.degree(0), 2);
    }

    #[test]
    fn comments_and_blank_lines() {
        let t = parse_tree("# a path\n\n1 2 # first\n2 3\n").unwrap();
        assert_eq!(
            t.edge_ids(),
            vec![(VertexId(1), VertexId(2)), (VertexId(2), VertexId(3))]
        );
    }

    #[test]
    fn cycle_is_rejected() {
        assert!(matches!(
            parse_tree("1 2\n2 3\n3 1"),
            Err(Error::NotATree(_))
        ));
    }

    #[test]
    fn malformed_line() {
        assert!(matches!(
            parse_tree("1 2\n2 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_tree("1 2 3\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_tree("\n# nothing\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn isolated_vertex_round_trip() {
        let t = parse_tree("7\n").unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(t.to_edge_list(), "7\n");
        assert_eq!(parse_tree(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn json_is_canonical() {
        let t = parse_tree(r#"{"vertices":[3,1,2],"edges":[[3,1],[2,1]]}"#).unwrap();
        assert_eq!(t.to_json(), r#"{"vertices":[1,2,3],"edges":[[1,2],[1,3]]}"#);
        let inferred = parse_tree(r#"{"edges":[[1,2]]}"#).unwrap();
        assert_eq!(inferred.order(), 2);
    }
}
