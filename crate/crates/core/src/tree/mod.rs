//! Immutable labeled trees and the subtree helpers the rest of the crate
//! builds on.
//!
//! A [`Tree`] stores its vertex labels sorted ascending and keeps an
//! index-based adjacency list, so index order and label order coincide.
//! Algorithms work on indices; the public surface speaks [`VertexId`].

mod io;
mod vector;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use io::{parse_tree, TreeDocument};
pub use vector::{lift, restrict, VertexVector};

/// Stable vertex label. Labels need not be contiguous.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u64);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u64> for VertexId {
    fn from(v: u64) -> Self {
        VertexId(v)
    }
}

/// Shorthand for building vertex lists in tests and fixtures.
pub fn ids<I: IntoIterator<Item = u64>>(values: I) -> Vec<VertexId> {
    values.into_iter().map(VertexId).collect()
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TreeDocument", into = "TreeDocument")]
pub struct Tree {
    ids: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tree")
            .field("vertices", &self.ids)
            .field("edges", &self.edge_ids())
            .finish()
    }
}

impl Tree {
    /// Builds and validates a tree. Vertices mentioned only in `edges` are
    /// added implicitly.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Tree>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let edges: Vec<(VertexId, VertexId)> = edges.into_iter().collect();
        let mut set: BTreeSet<VertexId> = vertices.into_iter().collect();
        for &(a, b) in &edges {
            set.insert(a);
            set.insert(b);
        }
        if set.is_empty() {
            return Err(Error::NotATree("no vertices".into()));
        }
        let ids: Vec<VertexId> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); ids.len()];
        let index = |v: VertexId| ids.binary_search(&v).expect("vertex collected above");
        for &(a, b) in &edges {
            if a == b {
                return Err(Error::NotATree(format!("self-loop at {a}")));
            }
            let (i, j) = (index(a), index(b));
            adj[i].push(j);
            adj[j].push(i);
        }
        for (i, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::NotATree(format!("duplicate edge at {}", ids[i])));
            }
        }
        if edges.len() + 1 != ids.len() {
            let what = if edges.len() + 1 > ids.len() {
                "contains a cycle"
            } else {
                "disconnected"
            };
            return Err(Error::NotATree(format!(
                "{what}: {} vertices, {} edges",
                ids.len(),
                edges.len()
            )));
        }
        let tree = Tree { ids, adj };
        if tree.reachable_count(0) != tree.order() {
            // |E| = |V| - 1 with a disconnected graph forces a cycle somewhere.
            return Err(Error::NotATree(
                "disconnected (and contains a cycle)".into(),
            ));
        }
        Ok(tree)
    }

    pub fn from_edges<E>(edges: E) -> Result<Tree>
    where
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        Tree::new(std::iter::empty(), edges)
    }

    /// Convenience constructor from raw integer pairs.
    pub fn from_pairs(pairs: &[(u64, u64)]) -> Result<Tree> {
        Tree::from_edges(pairs.iter().map(|&(a, b)| (VertexId(a), VertexId(b))))
    }

    pub fn singleton(v: VertexId) -> Tree {
        Tree {
            ids: vec![v],
            adj: vec![Vec::new()],
        }
    }

    /// Path on the labels `first..first + n`.
    pub fn path(first: u64, n: usize) -> Tree {
        assert!(n >= 1);
        let ids: Vec<VertexId> = (0..n as u64).map(|i| VertexId(first + i)).collect();
        let adj = (0..n)
            .map(|i| {
                let mut nb = Vec::new();
                if i > 0 {
                    nb.push(i - 1);
                }
                if i + 1 < n {
                    nb.push(i + 1);
                }
                nb
            })
            .collect();
        Tree { ids, adj }
    }

    /// Star with center `center` and the given leaves.
    pub fn star(center: u64, leaves: &[u64]) -> Result<Tree> {
        if leaves.is_empty() {
            return Ok(Tree::singleton(VertexId(center)));
        }
        Tree::from_edges(leaves.iter().map(|&l| (VertexId(center), VertexId(l))))
    }

    pub fn order(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ids.len() - 1
    }

    pub fn ids(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn id(&self, index: usize) -> VertexId {
        self.ids[index]
    }

    pub fn index_of(&self, v: VertexId) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    pub fn require(&self, v: VertexId) -> Result<usize> {
        self.index_of(v).ok_or(Error::VertexNotFound(v))
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.index_of(v).is_some()
    }

    pub fn max_id(&self) -> VertexId {
        *self.ids.last().expect("trees are nonempty")
    }

    pub fn neighbors(&self, index: usize) -> &[usize] {
        &self.adj[index]
    }

    pub fn neighbor_ids(&self, v: VertexId) -> Result<Vec<VertexId>> {
        let i = self.require(v)?;
        Ok(self.adj[i].iter().map(|&j| self.ids[j]).collect())
    }

    pub fn degree(&self, index: usize) -> usize {
        self.adj[index].len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, nb)| nb.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    pub fn edge_ids(&self) -> Vec<(VertexId, VertexId)> {
        self.edges()
            .map(|(i, j)| (self.ids[i], self.ids[j]))
            .collect()
    }

    fn reachable_count(&self, start: usize) -> usize {
        let mut seen = vec![false; self.order()];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 0;
        while let Some(v) = stack.pop() {
            count += 1;
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        count
    }

    /// BFS distances from `start` (in edges).
    pub fn distances(&self, start: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        let mut queue = VecDeque::from([start]);
        dist[start] = 0;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// BFS order from `root` together with each vertex's parent.
    pub fn rooted(&self, root: usize) -> (Vec<usize>, Vec<Option<usize>>) {
        let mut parent = vec![None; self.order()];
        let mut order = Vec::with_capacity(self.order());
        let mut seen = vec![false; self.order()];
        seen[root] = true;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    order.push(w);
                }
            }
        }
        (order, parent)
    }

    /// Vertex indices on the unique path from `from` to `to`, inclusive.
    pub fn path_between(&self, from: usize, to: usize) -> Vec<usize> {
        let (_, parent) = self.rooted(to);
        let mut path = vec![from];
        let mut v = from;
        while let Some(p) = parent[v] {
            path.push(p);
            v = p;
        }
        path
    }

    /// Connected components of the subgraph that keeps the marked vertices
    /// and the edges accepted by `keep_edge`. Components are sorted, and
    /// listed by smallest member.
    pub fn components_where<F>(&self, keep_vertex: &[bool], keep_edge: F) -> Vec<Vec<usize>>
    where
        F: Fn(usize, usize) -> bool,
    {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in 0..self.order() {
            if !keep_vertex[s] || seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &w in &self.adj[v] {
                    if keep_vertex[w] && !seen[w] && keep_edge(v, w) {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self, keep_vertex: &[bool]) -> Vec<Vec<usize>> {
        self.components_where(keep_vertex, |_, _| true)
    }

    /// The subtree induced on a set of vertex indices. Fails unless the set
    /// is nonempty and induces a connected subgraph.
    pub fn induced(&self, indices: &[usize]) -> Result<Tree> {
        let mut sorted: Vec<usize> = indices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.is_empty() {
            return Err(Error::NotATree("empty vertex set".into()));
        }
        let mut local = vec![usize::MAX; self.order()];
        for (k, &i) in sorted.iter().enumerate() {
            local[i] = k;
        }
        let ids = sorted.iter().map(|&i| self.ids[i]).collect();
        let adj: Vec<Vec<usize>> = sorted
            .iter()
            .map(|&i| {
                self.adj[i]
                    .iter()
                    .filter(|&&j| local[j] != usize::MAX)
                    .map(|&j| local[j])
                    .collect()
            })
            .collect();
        let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let tree = Tree { ids, adj };
        if edges + 1 != tree.order() || tree.reachable_count(0) != tree.order() {
            return Err(Error::NotATree(
                "vertex set does not induce a subtree".into(),
            ));
        }
        Ok(tree)
    }

    pub fn induced_by_ids(&self, vertices: &[VertexId]) -> Result<Tree> {
        let idx = vertices
            .iter()
            .map(|&v| self.require(v))
            .collect::<Result<Vec<_>>>()?;
        self.induced(&idx)
    }

    /// `true` if every vertex of `sub` is a vertex of `self` and every edge
    /// of `sub` is an edge of `self`.
    pub fn is_subtree_of(&self, host: &Tree) -> bool {
        self.edges().all(
            |(i, j)| match (host.index_of(self.ids[i]), host.index_of(self.ids[j])) {
                (Some(a), Some(b)) => host.adjacent(a, b),
                _ => false,
            },
        ) && self.ids.iter().all(|&v| host.contains(v))
    }

    /// Applies an injective relabeling.
    pub fn relabel<F: Fn(VertexId) -> VertexId>(&self, f: F) -> Result<Tree> {
        Tree::new(
            self.ids.iter().map(|&v| f(v)),
            self.edge_ids().into_iter().map(|(a, b)| (f(a), f(b))),
        )
    }

    /// Canonical string for the unlabeled tree, rooted at its center(s).
    /// Two trees are isomorphic iff their canonical forms are equal.
    pub fn canonical_form(&self) -> String {
        self.centers()
            .into_iter()
            .map(|c| self.rooted_code(c))
            .min()
            .expect("at least one center")
    }

    pub fn is_isomorphic(&self, other: &Tree) -> bool {
        self.order() == other.order() && self.canonical_form() == other.canonical_form()
    }

    fn centers(&self) -> Vec<usize> {
        let n = self.order();
        if n <= 2 {
            return (0..n).collect();
        }
        let mut deg: Vec<usize> = (0..n).map(|i| self.degree(i)).collect();
        let mut layer: Vec<usize> = (0..n).filter(|&i| deg[i] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &v in &layer {
                for &w in &self.adj[v] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
            layer = next;
        }
        layer.sort_unstable();
        layer
    }

    fn rooted_code(&self, root: usize) -> String {
        let (order, parent) = self.rooted(root);
        let mut codes: Vec<String> = vec![String::new(); self.order()];
        for &v in order.iter().rev() {
            let mut children: Vec<String> = self.adj[v]
                .iter()
                .filter(|&&w| parent[w] == Some(v))
                .map(|&w| std::mem::take(&mut codes[w]))
                .collect();
            children.sort_unstable();
            let mut code = String::from("(");
            for c in children {
                code.push_str(&c);
            }
            code.push(')');
            codes[v] = code;
        }
        std::mem::take(&mut codes[root])
    }
}

/// `T(u → v)`: the subtree induced on every vertex `x` whose path from `u`
/// passes through `v`. Contains `v`, never `u`.
pub fn subtree_toward(t: &Tree, u: VertexId, v: VertexId) -> Result<Tree> {
    let ui = t.require(u)?;
    let vi = t.require(v)?;
    if ui == vi {
        return Err(Error::InvalidInput(format!(
            "T({u} → {v}) needs two distinct vertices"
        )));
    }
    t.induced(&toward_indices(t, ui, vi))
}

pub(crate) fn toward_indices(t: &Tree, u: usize, v: usize) -> Vec<usize> {
    let (_, parent) = t.rooted(u);
    // Rooted at u, the wanted set is v together with its descendants.
    let mut out = vec![v];
    let mut head = 0;
    while head < out.len() {
        let x = out[head];
        head += 1;
        for &w in t.neighbors(x) {
            if parent[w] == Some(x) {
                out.push(w);
            }
        }
    }
    out.sort_unstable();
    out
}

/// `in(U ← V)` and `out(U → V)` for vertex-disjoint subtrees `U`, `V` of `t`:
/// the vertex of `U` closest to `V`, and the next vertex on the path from it
/// toward `V`.
pub fn in_out(u: &Tree, v: &Tree, t: &Tree) -> Result<(VertexId, VertexId)> {
    let u_idx = u
        .ids()
        .iter()
        .map(|&x| t.require(x))
        .collect::<Result<Vec<_>>>()?;
    let v_idx = v
        .ids()
        .iter()
        .map(|&x| t.require(x))
        .collect::<Result<Vec<_>>>()?;
    let (i, o) = in_out_indices(t, &u_idx, &v_idx)?;
    Ok((t.id(i), t.id(o)))
}

pub(crate) fn in_out_indices(t: &Tree, u: &[usize], v: &[usize]) -> Result<(usize, usize)> {
    let mut in_v = vec![false; t.order()];
    for &x in v {
        in_v[x] = true;
    }
    if u.iter().any(|&x| in_v[x]) {
        return Err(Error::NotDisjoint);
    }
    // Multi-source BFS from V.
    let mut dist = vec![usize::MAX; t.order()];
    let mut queue: VecDeque<usize> = v.iter().copied().collect();
    for &x in v {
        dist[x] = 0;
    }
    while let Some(x) = queue.pop_front() {
        for &w in t.neighbors(x) {
            if dist[w] == usize::MAX {
                dist[w] = dist[x] + 1;
                queue.push_back(w);
            }
        }
    }
    let entry = *u
        .iter()
        .min_by_key(|&&x| (dist[x], x))
        .ok_or_else(|| Error::InvalidInput("empty subtree".into()))?;
    let exit = *t
        .neighbors(entry)
        .iter()
        .find(|&&w| dist[w] + 1 == dist[entry])
        .expect("a neighbor one step closer to V exists");
    Ok((entry, exit))
}

/// A forest as a list of pairwise vertex-disjoint trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forest {
    components: Vec<Tree>,
}

impl Forest {
    pub fn new(mut components: Vec<Tree>) -> Result<Forest> {
        let mut seen = BTreeSet::new();
        for c in &components {
            for &v in c.ids() {
                if !seen.insert(v) {
                    return Err(Error::NotDisjoint);
                }
            }
        }
        components.sort_by_key(|c| c.id(0));
        Ok(Forest { components })
    }

    pub fn components(&self) -> &[Tree] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Tree> {
        self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(Tree::order).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(t: &Tree) -> Vec<u64> {
        t.ids().iter().map(|v| v.0).collect()
    }

    /// Oracle for `T(u → v)`: x qualifies iff v lies on the BFS path u..x.
    fn toward_oracle(t: &Tree, u: u64, v: u64) -> Vec<u64> {
        let ui = t.index_of(VertexId(u)).unwrap();
        let vi = t.index_of(VertexId(v)).unwrap();
        (0..t.order())
            .filter(|&x| t.path_between(ui, x).contains(&vi))
            .map(|x| t.id(x).0)
            .collect()
    }

    #[test]
    fn rejects_non_trees() {
        assert!(matches!(
            Tree::from_pairs(&[(1, 2), (2, 3), (3, 1)]),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(
            Tree::from_pairs(&[(1, 1)]),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(
            Tree::from_pairs(&[(1, 2), (2, 1)]),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(
            Tree::from_pairs(&[(1, 2), (3, 4)]),
            Err(Error::NotATree(_))
        ));
        // Right edge count, but a triangle plus an isolated vertex.
        let r = Tree::new(
            ids([4]),
            [(1, 2), (2, 3), (3, 1)].map(|(a, b)| (VertexId(a), VertexId(b))),
        );
        assert!(matches!(r, Err(Error::NotATree(_))));
    }

    #[test]
    fn subtree_toward_examples() {
        let e1 = fixtures::e1();
        let t = subtree_toward(&e1, VertexId(1), VertexId(5)).unwrap();
        assert_eq!(set(&t), vec![5, 6, 7, 8]);
        assert_eq!(set(&t), toward_oracle(&e1, 1, 5));
        let t = subtree_toward(&e1, VertexId(6), VertexId(5)).unwrap();
        assert_eq!(set(&t), vec![1, 2, 3, 4, 5]);
        assert_eq!(set(&t), toward_oracle(&e1, 6, 5));
        let p = Tree::path(1, 3);
        assert_eq!(
            set(&subtree_toward(&p, VertexId(1), VertexId(2)).unwrap()),
            vec![2, 3]
        );
        assert!(matches!(
            subtree_toward(&p, VertexId(1), VertexId(9)),
            Err(Error::VertexNotFound(VertexId(9)))
        ));
    }

    #[test]
    fn in_out_examples() {
        let p = Tree::path(1, 5);
        let u = Tree::path(1, 2);
        let v = Tree::singleton(VertexId(5));
        assert_eq!(in_out(&u, &v, &p).unwrap(), (VertexId(2), VertexId(3)));

        let e2 = fixtures::e2();
        let u = Tree::singleton(VertexId(2));
        let v = e2.induced_by_ids(&ids([15, 16, 17, 18])).unwrap();
        assert_eq!(in_out(&u, &v, &e2).unwrap(), (VertexId(2), VertexId(1)));

        let u = e2.induced_by_ids(&ids([4, 6])).unwrap();
        let v = e2.induced_by_ids(&ids([1, 2, 3])).unwrap();
        assert_eq!(in_out(&u, &v, &e2).unwrap(), (VertexId(4), VertexId(14)));

        assert_eq!(in_out(&v, &v, &e2), Err(Error::NotDisjoint));
    }

    #[test]
    fn canonical_form_detects_isomorphism() {
        let a = Tree::from_pairs(&[(1, 2), (2, 3), (3, 4)]).unwrap();
        let b = Tree::from_pairs(&[(10, 30), (30, 20), (20, 40)]).unwrap();
        let star = Tree::star(1, &[2, 3, 4]).unwrap();
        assert!(a.is_isomorphic(&b));
        assert!(!a.is_isomorphic(&star));
    }

    #[test]
    fn singleton_is_a_tree() {
        let t = Tree::singleton(VertexId(7));
        assert_eq!(t.order(), 1);
        assert_eq!(t.edge_count(), 0);
        assert_eq!(t.canonical_form(), "()");
    }
}
