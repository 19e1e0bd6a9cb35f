//! {-1,0,1} bases: S-basic subtrees and their basic vectors, the forest
//! basis of an S-atom, and the {0,1} range bases built from bouquets.
//!
//! Everything that leaves this module has been checked exactly: each basic
//! vector against the adjacency matrix of its host, each basis against the
//! kernel or column space computed by elimination.

use std::collections::{BTreeSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::decomposition::{classify, decompose, roles_of, Part, Role};
use crate::error::{Error, Result};
use crate::linalg::{adjacency_matrix, rank_of_vectors, span_equal, tree_kernel};
use crate::tree::{lift, Tree, VertexId, VertexVector};

/// How the S-basic subtree algorithm resolves its free choices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum ChoiceRule {
    /// Smallest label everywhere.
    #[default]
    Ascending,
    /// When extending through a core vertex, prefer a neighbor that leads on
    /// to a core vertex not yet reached; otherwise the smallest label.
    PreferUncoveredCore,
}

/// An S-basic subtree of an S-atom, with the pendant vertex its basic vector
/// is measured from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SBasicSubtree {
    pub tree: Tree,
    pub host: Tree,
    pub pendant: VertexId,
}

impl SBasicSubtree {
    /// Pendant vertices of the subtree, ascending.
    pub fn pendants(&self) -> Vec<VertexId> {
        (0..self.tree.order())
            .filter(|&i| self.tree.degree(i) == 1)
            .map(|i| self.tree.id(i))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicVector {
    /// Over the host the vector was lifted to.
    pub vector: VertexVector,
    pub source: SBasicSubtree,
}

/// `b(h)_v = (−1)^{d(v,h)/2}` when `d(v,h)` is even, else 0, on the
/// vertices of `b`; distances are measured inside `b`.
fn basic_entries(b: &Tree, h: VertexId) -> Result<Vec<(VertexId, i64)>> {
    let hi = b.require(h)?;
    let dist = b.distances(hi);
    Ok((0..b.order())
        .filter(|&i| dist[i].is_multiple_of(2))
        .map(|i| (b.id(i), if dist[i].is_multiple_of(4) { 1 } else { -1 }))
        .collect())
}

/// The basic vector of `b` at its recorded pendant, lifted to the host and
/// checked to lie in the host's kernel.
pub fn basic_vector(b: &SBasicSubtree) -> Result<BasicVector> {
    basic_vector_at(b, b.pendant)
}

/// As [`basic_vector`], measured from any pendant `h` of the subtree.
pub fn basic_vector_at(b: &SBasicSubtree, h: VertexId) -> Result<BasicVector> {
    let hi = b.tree.require(h)?;
    if b.tree.order() > 1 && b.tree.degree(hi) != 1 {
        return Err(Error::InvalidInput(format!(
            "{h} is not a pendant vertex of the subtree"
        )));
    }
    let vector = VertexVector::from_sparse(&b.host, &basic_entries(&b.tree, h)?)?;
    if !vector.is_null_vector_of(&b.host) {
        return Err(Error::ValidationFailed {
            reason: format!("basic vector from pendant {h} is not in the kernel of the host"),
            vertices: b.tree.ids().to_vec(),
        });
    }
    Ok(BasicVector {
        vector,
        source: b.clone(),
    })
}

/// Checks that `indices` (over `host`) span an S-basic subtree whose basic
/// vector lies in the kernel of `host`, and packages it.
fn validated_basic(host: &Tree, indices: &[usize]) -> Result<BasicVector> {
    let ids: Vec<VertexId> = indices.iter().map(|&i| host.id(i)).collect();
    let fail = |reason: &str| Error::ValidationFailed {
        reason: reason.to_string(),
        vertices: ids.clone(),
    };
    let tree = host
        .induced(indices)
        .map_err(|_| fail("vertex set does not induce a subtree"))?;
    let kernel = tree_kernel(&tree);
    let own = crate::decomposition::roles_from_kernel(&tree, &kernel);
    let c = crate::decomposition::classify_with(&tree, &own, kernel.dim());
    if !c.is_s_basic {
        return Err(fail("subtree is not S-basic"));
    }
    let pendant = (0..tree.order())
        .find(|&i| tree.degree(i) == 1 && own[i] == Role::Supp)
        .map(|i| tree.id(i))
        .ok_or_else(|| fail("subtree has no supported pendant vertex"))?;
    let b = SBasicSubtree {
        tree,
        host: host.clone(),
        pendant,
    };
    let v = basic_vector(&b)?;
    let supp: Vec<VertexId> = (0..b.tree.order())
        .filter(|&i| own[i] == Role::Supp)
        .map(|i| b.tree.id(i))
        .collect();
    if v.vector.support() != supp {
        return Err(fail(
            "basic vector support differs from the subtree's support",
        ));
    }
    Ok(v)
}

/// The S-basic subtree algorithm inside the vertices marked in `mask`,
/// starting at `seed`. Returns sorted indices.
fn sbsa_in(a: &Tree, roles: &[Role], mask: &[bool], seed: usize, rule: ChoiceRule) -> Vec<usize> {
    let n = a.order();
    let mut in_b = vec![false; n];
    let mut frontier = BTreeSet::new();
    let admit = |x: usize, in_b: &mut Vec<bool>, frontier: &mut BTreeSet<usize>| {
        in_b[x] = true;
        frontier.remove(&x);
        if roles[x] == Role::Supp {
            for &y in a.neighbors(x) {
                if mask[y] && !in_b[y] && roles[y] == Role::Core {
                    frontier.insert(y);
                }
            }
        }
    };
    let pick = |u: usize, in_b: &[bool]| -> Option<usize> {
        let fresh = a
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| mask[w] && !in_b[w]);
        match rule {
            ChoiceRule::Ascending => fresh.min(),
            ChoiceRule::PreferUncoveredCore => {
                let leads_on = |w: usize| {
                    a.neighbors(w)
                        .iter()
                        .any(|&y| y != u && mask[y] && !in_b[y] && roles[y] == Role::Core)
                };
                let all: Vec<usize> = fresh.collect();
                all.iter()
                    .copied()
                    .filter(|&w| leads_on(w))
                    .min()
                    .or_else(|| all.into_iter().min())
            }
        }
    };
    if roles[seed] == Role::Core {
        in_b[seed] = true;
        let first = pick(seed, &in_b);
        if let Some(u) = first {
            admit(u, &mut in_b, &mut frontier);
            if let Some(w) = pick(seed, &in_b) {
                admit(w, &mut in_b, &mut frontier);
            }
        }
        frontier.remove(&seed);
    } else {
        admit(seed, &mut in_b, &mut frontier);
    }
    while let Some(u) = frontier.pop_first() {
        in_b[u] = true;
        if let Some(w) = pick(u, &in_b) {
            admit(w, &mut in_b, &mut frontier);
        }
    }
    (0..n).filter(|&i| in_b[i]).collect()
}

fn require_atom(atom: &Tree) -> Result<Vec<Role>> {
    let kernel = tree_kernel(atom);
    let roles = crate::decomposition::roles_from_kernel(atom, &kernel);
    if !crate::decomposition::classify_with(atom, &roles, kernel.dim()).is_s_atom {
        return Err(Error::NotAtom);
    }
    Ok(roles)
}

/// The S-basic subtree algorithm on `atom` from vertex `v`.
pub fn sbsa(atom: &Tree, v: VertexId, rule: ChoiceRule) -> Result<SBasicSubtree> {
    let roles = require_atom(atom)?;
    if atom.order() < 3 {
        return Err(Error::TooSmall(atom.order()));
    }
    let seed = atom.require(v)?;
    let b = sbsa_in(atom, &roles, &vec![true; atom.order()], seed, rule);
    Ok(validated_basic(atom, &b)?.source)
}

/// How a basic of a forest basis was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Step {
    /// The S-basic subtree grown in a fresh piece of the atom.
    First,
    /// The latest basic with one pendant exchanged for an unused one.
    Swap,
    /// A branch of the piece's first basic hung from a core vertex
    /// together with an unused pendant.
    Graft,
    /// The one-vertex atom, whose kernel is spanned by its unit vector.
    Singleton,
}

/// The forest basis of an S-atom with its bookkeeping matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestBasis {
    pub atom: Tree,
    /// Basic vectors over the atom, in the order they were produced.
    pub basics: Vec<BasicVector>,
    pub steps: Vec<Step>,
    /// One row per basic, one column per atom vertex (label order). A row
    /// marks the vertices its basic used first: +1 supported, −1 core.
    pub mc: Vec<Vec<i8>>,
}

impl ForestBasis {
    pub fn vectors(&self) -> Vec<VertexVector> {
        if self.basics.is_empty() && self.atom.order() == 1 {
            return vec![VertexVector::unit(&self.atom, self.atom.id(0)).expect("own vertex")];
        }
        self.basics.iter().map(|b| b.vector.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The structural facts the count and independence arguments use: every
    /// row sums to 1, every vertex is first used exactly once, and each row
    /// has a +1 in a column no earlier row touches.
    pub fn check_mc(&self) -> Result<()> {
        let fail = |reason: String| {
            Err(Error::ValidationFailed {
                reason,
                vertices: self.atom.ids().to_vec(),
            })
        };
        let n = self.atom.order();
        let mut touched = vec![false; n];
        for (r, row) in self.mc.iter().enumerate() {
            if row.iter().map(|&x| x as i64).sum::<i64>() != 1 {
                return fail(format!("MC row {r} does not sum to 1"));
            }
            if !(0..n).any(|c| row[c] == 1 && !touched[c]) {
                return fail(format!("MC row {r} has no fresh +1"));
            }
            for c in 0..n {
                if row[c] != 0 {
                    if touched[c] {
                        return fail(format!("MC column {} used twice", self.atom.id(c)));
                    }
                    touched[c] = true;
                }
            }
        }
        if touched.iter().any(|&t| !t) {
            return fail("some vertex never used".into());
        }
        Ok(())
    }

    /// MC as CSV: a header of vertex labels, then one row per basic.
    pub fn mc_csv(&self) -> String {
        let mut out = String::from("basic");
        for v in self.atom.ids() {
            out.push_str(&format!(",{v}"));
        }
        out.push('\n');
        for (r, row) in self.mc.iter().enumerate() {
            out.push_str(&format!("{r}"));
            for x in row {
                out.push_str(&format!(",{x}"));
            }
            out.push('\n');
        }
        out
    }
}

/// A piece of the atom still to be processed: the vertices it may use and
/// the vertex its first basic grows from.
struct Piece {
    mask: Vec<bool>,
    seed: usize,
}

/// The forest basis of the atom `atom`, whose vertex roles are `roles`.
fn forest_basis(atom: &Tree, roles: &[Role]) -> Result<ForestBasis> {
    let n = atom.order();
    if n == 1 {
        return Ok(ForestBasis {
            atom: atom.clone(),
            basics: Vec::new(),
            steps: vec![Step::Singleton],
            mc: vec![vec![1]],
        });
    }
    let is_supp = |i: usize| roles[i] == Role::Supp;
    let first_seed = (0..n).find(|&i| is_supp(i)).ok_or(Error::NotAtom)?;
    let mut used = vec![false; n];
    let mut basics = Vec::new();
    let mut steps = Vec::new();
    let mut mc: Vec<Vec<i8>> = Vec::new();
    let mut work = VecDeque::from([Piece {
        mask: vec![true; n],
        seed: first_seed,
    }]);
    let fresh_row = |v: usize| {
        let mut row = vec![0i8; n];
        row[v] = 1;
        row
    };
    let degree_in =
        |mask: &[bool], v: usize| atom.neighbors(v).iter().filter(|&&w| mask[w]).count();

    while let Some(Piece { mask, seed }) = work.pop_front() {
        // (a) the first basic of the piece.
        let first = sbsa_in(atom, roles, &mask, seed, ChoiceRule::Ascending);
        let mut row = vec![0i8; n];
        for &v in &first {
            if !used[v] {
                row[v] = if is_supp(v) { 1 } else { -1 };
            }
        }
        for &v in &first {
            used[v] = true;
        }
        basics.push(validated_basic(atom, &first)?);
        steps.push(Step::First);
        mc.push(row);
        let mut in_first = vec![false; n];
        for &v in &first {
            in_first[v] = true;
        }
        let mut latest = first.clone();

        let unused_pendants = |used: &[bool]| -> Vec<usize> {
            (0..n)
                .filter(|&v| mask[v] && is_supp(v) && !used[v] && degree_in(&mask, v) == 1)
                .collect()
        };

        // (b) pendant swaps against the latest basic.
        loop {
            let mut swap = None;
            'search: for v in unused_pendants(&used) {
                let c = *atom
                    .neighbors(v)
                    .iter()
                    .find(|&&c| mask[c])
                    .expect("pendant has a neighbor");
                for &l in &latest {
                    if l != v && is_supp(l) && degree_in(&mask, l) == 1 && atom.adjacent(l, c) {
                        swap = Some((v, l));
                        break 'search;
                    }
                }
            }
            let Some((v, l)) = swap else { break };
            let mut next: Vec<usize> = latest.iter().copied().filter(|&x| x != l).collect();
            next.push(v);
            next.sort_unstable();
            used[v] = true;
            basics.push(validated_basic(atom, &next)?);
            steps.push(Step::Swap);
            mc.push(fresh_row(v));
            latest = next;
        }

        // (c) grafts onto core vertices of the first basic.
        loop {
            let graft = unused_pendants(&used).into_iter().find_map(|v| {
                atom.neighbors(v)
                    .iter()
                    .find(|&&x| in_first[x] && roles[x] == Role::Core)
                    .map(|&x| (v, x))
            });
            let Some((v, x)) = graft else { break };
            let w = *atom
                .neighbors(x)
                .iter()
                .find(|&&w| in_first[w])
                .expect("core vertices of a basic have two neighbors in it");
            let mut next = branch(atom, &in_first, x, w);
            next.push(x);
            next.push(v);
            next.sort_unstable();
            used[v] = true;
            basics.push(validated_basic(atom, &next)?);
            steps.push(Step::Graft);
            mc.push(fresh_row(v));
        }

        // (d–g) every leftover component becomes a piece, with a branch of
        // the first basic attached through its out vertex.
        let rest: Vec<bool> = (0..n).map(|v| mask[v] && !used[v]).collect();
        for g in atom.components(&rest) {
            let first_idx: Vec<usize> = first.clone();
            let (entry, out) = crate::tree::in_out_indices(atom, &g, &first_idx)?;
            if !in_first[out] || roles[out] != Role::Core || !is_supp(entry) {
                return Err(Error::ValidationFailed {
                    reason: "leftover component is not attached through a core vertex of the first basic".into(),
                    vertices: g.iter().map(|&i| atom.id(i)).collect(),
                });
            }
            let x = *atom
                .neighbors(out)
                .iter()
                .find(|&&x| in_first[x])
                .expect("core vertices of a basic have two neighbors in it");
            let mut piece = vec![false; n];
            for &v in &g {
                piece[v] = true;
            }
            for v in branch(atom, &in_first, x, out) {
                piece[v] = true;
            }
            work.push_back(Piece {
                mask: piece,
                seed: entry,
            });
        }
    }
    let fb = ForestBasis {
        atom: atom.clone(),
        basics,
        steps,
        mc,
    };
    fb.check_mc()?;
    Ok(fb)
}

/// `B(x → w)` for a subtree `B` (given by membership) containing the edge
/// `x ~ w`: the vertices of `B` reached from `w` without passing through
/// `x`. Unsorted.
fn branch(atom: &Tree, in_b: &[bool], x: usize, w: usize) -> Vec<usize> {
    let mut out = vec![w];
    let mut seen = BTreeSet::from([x, w]);
    let mut head = 0;
    while head < out.len() {
        let y = out[head];
        head += 1;
        for &z in atom.neighbors(y) {
            if in_b[z] && seen.insert(z) {
                out.push(z);
            }
        }
    }
    out
}

/// The forest basis of an S-atom, verified against the exact kernel.
pub fn s_basis_forest(atom: &Tree) -> Result<ForestBasis> {
    let roles = require_atom(atom)?;
    let fb = forest_basis(atom, &roles)?;
    check_null_basis(atom, &fb.vectors())?;
    Ok(fb)
}

/// Forest basis of an atom cut out of a larger tree, using the roles it
/// inherited.
pub fn atom_forest_basis(atom: &Part) -> Result<ForestBasis> {
    forest_basis(atom.tree(), atom.roles())
}

/// Checks that `vectors` is a {-1,0,1} basis of the kernel of `A(t)`.
pub fn check_null_basis(t: &Tree, vectors: &[VertexVector]) -> Result<()> {
    for v in vectors {
        if !v.is_null_vector_of(t) {
            return Err(Error::ValidationFailed {
                reason: "vector is not in the kernel".into(),
                vertices: v.support(),
            });
        }
        if !v.is_signed_unit() {
            return Err(Error::ValidationFailed {
                reason: "entry outside {-1, 0, 1}".into(),
                vertices: v.support(),
            });
        }
    }
    let kernel = tree_kernel(t);
    if vectors.len() != kernel.dim() {
        return Err(Error::SpanMismatch(format!(
            "{} vectors for a kernel of dimension {}",
            vectors.len(),
            kernel.dim()
        )));
    }
    if !span_equal(vectors, kernel.vectors())? {
        return Err(Error::SpanMismatch("vectors do not span the kernel".into()));
    }
    Ok(())
}

/// Checks that `vectors` is a basis of the column space of `A(t)`.
pub fn check_range_basis(t: &Tree, vectors: &[VertexVector]) -> Result<()> {
    let columns = adjacency_matrix(t).columns();
    let rank = rank_of_vectors(&columns)?;
    if vectors.len() != rank || rank_of_vectors(vectors)? != rank {
        return Err(Error::SpanMismatch(format!(
            "{} vectors for a column space of dimension {rank}",
            vectors.len()
        )));
    }
    if !span_equal(vectors, &columns)? {
        return Err(Error::SpanMismatch(
            "vectors do not span the column space".into(),
        ));
    }
    Ok(())
}

/// The {-1,0,1} null basis of any tree: forest bases of all its atoms,
/// lifted, ordered by smallest supported vertex.
pub fn tree_null_basis(t: &Tree) -> Result<Vec<BasicVector>> {
    let d = decompose(t);
    let atoms = d.a_set();
    if t.order() == 1 {
        let v = VertexVector::unit(t, t.id(0))?;
        check_null_basis(t, std::slice::from_ref(&v))?;
        let b = SBasicSubtree {
            tree: t.clone(),
            host: t.clone(),
            pendant: t.id(0),
        };
        return Ok(vec![BasicVector {
            vector: v,
            source: b,
        }]);
    }
    let per_atom: Vec<Result<Vec<BasicVector>>> = atoms
        .atoms()
        .par_iter()
        .map(|atom| {
            let fb = atom_forest_basis(atom)?;
            fb.basics
                .into_iter()
                .map(|b| {
                    Ok(BasicVector {
                        vector: lift(&b.vector, t)?,
                        source: b.source,
                    })
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for r in per_atom {
        out.extend(r?);
    }
    out.sort_by_key(|b| b.vector.support());
    let vectors: Vec<VertexVector> = out.iter().map(|b| b.vector.clone()).collect();
    check_null_basis(t, &vectors)?;
    Ok(out)
}

/// What a range-basis vector stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "vertex", rename_all = "lowercase")]
pub enum RangeRole {
    /// `e_v` for a core vertex `v`.
    Core(VertexId),
    /// `e_R(v)`, the bouquet of the core vertex `v`.
    Bouquet(VertexId),
    /// `e_u` for a vertex `u` of an N-part.
    Standard(VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeBasis {
    pub vectors: Vec<VertexVector>,
    pub roles: Vec<RangeRole>,
}

impl RangeBasis {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

fn push_bouquets(host: &Tree, part: &Part, basis: &mut RangeBasis) -> Result<()> {
    for c in part.core() {
        basis.vectors.push(VertexVector::unit(host, c)?);
        basis.roles.push(RangeRole::Core(c));
        basis
            .vectors
            .push(VertexVector::indicator(host, &part.bouquet(c)?)?);
        basis.roles.push(RangeRole::Bouquet(c));
    }
    Ok(())
}

/// `{e_v, e_R(v) : v ∈ Core(atom)}`, checked against the column space.
pub fn atom_range_basis(atom: &Tree) -> Result<RangeBasis> {
    let roles = require_atom(atom)?;
    let part = Part::new(atom.clone(), roles);
    let mut basis = RangeBasis {
        vectors: Vec::new(),
        roles: Vec::new(),
    };
    push_bouquets(atom, &part, &mut basis)?;
    check_range_basis(atom, &basis.vectors)?;
    Ok(basis)
}

/// Bouquet pairs of every atom (atoms by smallest vertex, cores ascending),
/// then unit vectors on the N-parts, checked against the column space.
pub fn tree_range_basis(t: &Tree) -> Result<RangeBasis> {
    let d = decompose(t);
    let mut basis = RangeBasis {
        vectors: Vec::new(),
        roles: Vec::new(),
    };
    for atom in d.a_set().atoms() {
        push_bouquets(t, atom, &mut basis)?;
    }
    for part in d.n_parts().components() {
        for &u in part.ids() {
            basis.vectors.push(VertexVector::unit(t, u)?);
            basis.roles.push(RangeRole::Standard(u));
        }
    }
    check_range_basis(t, &basis.vectors)?;
    Ok(basis)
}

/// The roles of `t` read off its own kernel. Exposed for callers that want
/// to build a [`Part`] for a standalone atom.
pub fn standalone_part(t: &Tree) -> Part {
    Part::new(t.clone(), roles_of(t))
}

/// Whether `t` is an S-atom with at least one basic (every atom but K1).
pub fn has_basic_subtrees(t: &Tree) -> bool {
    let c = classify(t);
    c.is_s_atom && c.order >= 3
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::tree::ids;

    fn e1_kernel() -> Vec<VertexVector> {
        let e1 = fixtures::e1();
        fixtures::E1_KERNEL
            .iter()
            .map(|r| VertexVector::from_ints(&e1, r).unwrap())
            .collect()
    }

    #[test]
    fn sbsa_examples() {
        let e1 = fixtures::e1();
        let b = sbsa(&e1, VertexId(2), ChoiceRule::Ascending).unwrap();
        assert_eq!(b.tree.ids(), ids([1, 2, 3]).as_slice());
        let p5 = Tree::path(1, 5);
        for v in 1..=5 {
            let b = sbsa(&p5, VertexId(v), ChoiceRule::Ascending).unwrap();
            assert_eq!(b.tree, p5);
        }
        let b = sbsa(&e1, VertexId(2), ChoiceRule::PreferUncoveredCore).unwrap();
        assert_eq!(b.tree.ids(), ids([1, 2, 5, 6, 7]).as_slice());
        let v = basic_vector_at(&b, VertexId(2)).unwrap();
        assert_eq!(v.vector.to_ints().unwrap(), vec![0, 1, 0, 0, -1, 0, 1, 0]);
    }

    #[test]
    fn sbsa_from_core_vertex() {
        let e1 = fixtures::e1();
        let b = sbsa(&e1, VertexId(1), ChoiceRule::Ascending).unwrap();
        assert_eq!(b.tree.ids(), ids([1, 2, 3]).as_slice());
        let b = sbsa(&e1, VertexId(6), ChoiceRule::Ascending).unwrap();
        assert_eq!(b.tree.ids(), ids([1, 2, 5, 6, 7]).as_slice());
    }

    #[test]
    fn sbsa_errors() {
        assert_eq!(
            sbsa(&fixtures::e3(), VertexId(1), ChoiceRule::Ascending),
            Err(Error::NotAtom)
        );
        assert_eq!(
            sbsa(&Tree::path(1, 2), VertexId(1), ChoiceRule::Ascending),
            Err(Error::NotAtom)
        );
        assert_eq!(
            sbsa(
                &Tree::singleton(VertexId(1)),
                VertexId(1),
                ChoiceRule::Ascending
            ),
            Err(Error::TooSmall(1))
        );
    }

    #[test]
    fn basic_vector_examples() {
        let e1 = fixtures::e1();
        let b = sbsa(&e1, VertexId(2), ChoiceRule::Ascending).unwrap();
        let v = basic_vector(&b).unwrap();
        assert_eq!(
            v.vector,
            VertexVector::from_sparse(&e1, &[(VertexId(2), 1), (VertexId(3), -1)]).unwrap()
        );
        let p5 = Tree::path(1, 5);
        let b = sbsa(&p5, VertexId(1), ChoiceRule::Ascending).unwrap();
        assert_eq!(
            basic_vector_at(&b, VertexId(1))
                .unwrap()
                .vector
                .to_ints()
                .unwrap(),
            vec![1, 0, -1, 0, 1]
        );
        let other = basic_vector_at(&b, VertexId(5)).unwrap();
        assert!(other
            .vector
            .is_parallel_to(&basic_vector(&b).unwrap().vector));
    }

    #[test]
    fn forest_basis_of_e1() {
        let fb = s_basis_forest(&fixtures::e1()).unwrap();
        assert_eq!(fb.len(), 4);
        assert_eq!(
            fb.steps,
            vec![Step::First, Step::Swap, Step::First, Step::Swap]
        );
        let sets: Vec<Vec<VertexId>> = fb
            .basics
            .iter()
            .map(|b| b.source.tree.ids().to_vec())
            .collect();
        assert_eq!(
            sets,
            vec![
                ids([1, 2, 3]),
                ids([1, 3, 4]),
                ids([1, 3, 5, 6, 7]),
                ids([1, 3, 5, 6, 8])
            ]
        );
        assert!(span_equal(&fb.vectors(), &e1_kernel()).unwrap());
        assert_eq!(
            fb.mc_csv(),
            "basic,1,2,3,4,5,6,7,8\n0,-1,1,1,0,0,0,0,0\n1,0,0,0,1,0,0,0,0\n2,0,0,0,0,1,-1,1,0\n3,0,0,0,0,0,0,0,1\n"
        );
    }

    #[test]
    fn forest_basis_of_star_and_path() {
        let star = Tree::star(9, &[10, 11, 12]).unwrap();
        let fb = s_basis_forest(&star).unwrap();
        assert_eq!(fb.len(), 2);
        let expected = vec![
            VertexVector::from_sparse(&star, &[(VertexId(10), 1), (VertexId(11), -1)]).unwrap(),
            VertexVector::from_sparse(&star, &[(VertexId(10), 1), (VertexId(12), -1)]).unwrap(),
        ];
        assert!(span_equal(&fb.vectors(), &expected).unwrap());
        let p5 = Tree::path(1, 5);
        let fb = s_basis_forest(&p5).unwrap();
        assert_eq!(
            fb.vectors(),
            vec![VertexVector::from_ints(&p5, &[1, 0, -1, 0, 1]).unwrap()]
        );
        let k1 = Tree::singleton(VertexId(3));
        assert_eq!(
            s_basis_forest(&k1).unwrap().vectors(),
            vec![VertexVector::unit(&k1, VertexId(3)).unwrap()]
        );
    }

    #[test]
    fn graft_step_is_exercised() {
        // Core 1 carries the pendant 4 but neither of its neighbors in the
        // first basic is a pendant, so 4 can only be reached by a graft.
        let t = Tree::from_pairs(&[
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 5),
            (5, 6),
            (5, 7),
            (3, 8),
            (8, 9),
            (8, 10),
        ])
        .unwrap();
        let fb = s_basis_forest(&t).unwrap();
        assert_eq!(
            fb.steps,
            vec![Step::First, Step::Swap, Step::Swap, Step::Graft]
        );
        assert_eq!(
            fb.basics[3].source.tree.ids(),
            ids([1, 2, 4, 5, 6]).as_slice()
        );
        fb.check_mc().unwrap();
    }

    #[test]
    fn tree_null_basis_examples() {
        let e2 = fixtures::e2();
        let basis: Vec<VertexVector> = tree_null_basis(&e2)
            .unwrap()
            .into_iter()
            .map(|b| b.vector)
            .collect();
        let expected: Vec<VertexVector> = fixtures::E2_KERNEL
            .iter()
            .map(|pairs| {
                let p: Vec<(VertexId, i64)> =
                    pairs.iter().map(|&(v, c)| (VertexId(v), c)).collect();
                VertexVector::from_sparse(&e2, &p).unwrap()
            })
            .collect();
        assert!(span_equal(&basis, &expected).unwrap());
        assert!(tree_null_basis(&Tree::path(1, 4)).unwrap().is_empty());
        let e1: Vec<VertexVector> = tree_null_basis(&fixtures::e1())
            .unwrap()
            .into_iter()
            .map(|b| b.vector)
            .collect();
        assert_eq!(e1.len(), 4);
        assert!(span_equal(&e1, &e1_kernel()).unwrap());
        assert_eq!(
            tree_null_basis(&Tree::singleton(VertexId(1)))
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn range_basis_examples() {
        let e2 = fixtures::e2();
        let s2 = e2.induced_by_ids(&ids([4, 5, 6, 7, 8])).unwrap();
        let r = atom_range_basis(&s2).unwrap();
        let sets: Vec<Vec<VertexId>> = r.vectors.iter().map(VertexVector::support).collect();
        assert_eq!(sets, vec![ids([4]), ids([6, 7]), ids([5]), ids([7, 8])]);
        assert!(atom_range_basis(&Tree::singleton(VertexId(1)))
            .unwrap()
            .is_empty());
        let r = atom_range_basis(&fixtures::e1()).unwrap();
        let sets: Vec<Vec<VertexId>> = r.vectors.iter().map(VertexVector::support).collect();
        assert_eq!(
            sets,
            vec![ids([1]), ids([2, 3, 4, 5]), ids([6]), ids([5, 7, 8])]
        );

        let r = tree_range_basis(&e2).unwrap();
        let sets: Vec<Vec<u64>> = r
            .vectors
            .iter()
            .map(|v| v.support().iter().map(|x| x.0).collect())
            .collect();
        let expected: Vec<Vec<u64>> = fixtures::E2_RANGE.iter().map(|s| s.to_vec()).collect();
        assert_eq!(sets, expected);
        let r = tree_range_basis(&Tree::path(1, 2)).unwrap();
        assert_eq!(
            r.roles,
            vec![
                RangeRole::Standard(VertexId(1)),
                RangeRole::Standard(VertexId(2))
            ]
        );
        let r = tree_range_basis(&fixtures::e3()).unwrap();
        let sets: Vec<Vec<VertexId>> = r.vectors.iter().map(VertexVector::support).collect();
        assert_eq!(sets, vec![ids([2]), ids([1, 3]), ids([5]), ids([4, 6])]);
    }
}
