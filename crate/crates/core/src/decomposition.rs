//! Support, core, the null decomposition into S-parts and N-parts, and the
//! A-set of S-atoms obtained by cutting core–core edges.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{tree_kernel, KernelBasis};
use crate::matching::{self, as_decimal};
use crate::tree::{Forest, Tree, VertexId};

/// What a vertex is in the null decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    /// In Supp(T).
    Supp,
    /// In Core(T) = N(Supp(T)).
    Core,
    /// Outside N[Supp(T)], i.e. in an N-part.
    Matched,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportCore {
    pub supp: Vec<VertexId>,
    pub core: Vec<VertexId>,
}

/// Roles of every vertex (by index), read off an exact kernel basis.
pub(crate) fn roles_from_kernel(t: &Tree, kernel: &KernelBasis) -> Vec<Role> {
    let mut roles = vec![Role::Matched; t.order()];
    for v in kernel.vectors() {
        for (i, x) in v.entries().iter().enumerate() {
            if !num_traits::Zero::is_zero(x) {
                roles[i] = Role::Supp;
            }
        }
    }
    for i in 0..t.order() {
        if roles[i] != Role::Supp && t.neighbors(i).iter().any(|&j| roles[j] == Role::Supp) {
            roles[i] = Role::Core;
        }
    }
    roles
}

pub(crate) fn roles_of(t: &Tree) -> Vec<Role> {
    roles_from_kernel(t, &tree_kernel(t))
}

fn ids_with(t: &Tree, roles: &[Role], role: Role) -> Vec<VertexId> {
    (0..t.order())
        .filter(|&i| roles[i] == role)
        .map(|i| t.id(i))
        .collect()
}

pub fn support_core(t: &Tree) -> SupportCore {
    let roles = roles_of(t);
    SupportCore {
        supp: ids_with(t, &roles, Role::Supp),
        core: ids_with(t, &roles, Role::Core),
    }
}

/// Supp(T) by the matching characterization: v is supported iff
/// ν(T − v) = ν(T).
pub fn support_by_matching(t: &Tree) -> Vec<VertexId> {
    let nu = matching::nu(t);
    (0..t.order())
        .filter(|&i| matching::nu_without(t, i) == nu)
        .map(|i| t.id(i))
        .collect()
}

/// A tree together with the support/core roles of its vertices, inherited
/// from the tree it was cut out of. Used for S-parts and atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Part {
    tree: Tree,
    roles: Vec<Role>,
}

impl Part {
    pub(crate) fn new(tree: Tree, roles: Vec<Role>) -> Part {
        debug_assert_eq!(tree.order(), roles.len());
        Part { tree, roles }
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn vertices(&self) -> &[VertexId] {
        self.tree.ids()
    }

    /// Roles by vertex index of [`Part::tree`].
    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn role(&self, v: VertexId) -> Option<Role> {
        self.tree.index_of(v).map(|i| self.roles[i])
    }

    pub fn supp(&self) -> Vec<VertexId> {
        ids_with(&self.tree, &self.roles, Role::Supp)
    }

    pub fn core(&self) -> Vec<VertexId> {
        ids_with(&self.tree, &self.roles, Role::Core)
    }

    pub fn supp_count(&self) -> usize {
        self.roles.iter().filter(|&&r| r == Role::Supp).count()
    }

    pub fn core_count(&self) -> usize {
        self.roles.iter().filter(|&&r| r == Role::Core).count()
    }

    /// Maximum degree (inside this part) over its core vertices; 0 when the
    /// core is empty.
    pub fn delta_core(&self) -> usize {
        (0..self.tree.order())
            .filter(|&i| self.roles[i] == Role::Core)
            .map(|i| self.tree.degree(i))
            .max()
            .unwrap_or(0)
    }

    /// `R(v)`: the supported neighbors of the core vertex `v` in this part.
    pub fn bouquet(&self, v: VertexId) -> Result<Vec<VertexId>> {
        let i = self.tree.require(v)?;
        if self.roles[i] != Role::Core {
            return Err(Error::NotCoreVertex(v));
        }
        Ok(self
            .tree
            .neighbors(i)
            .iter()
            .filter(|&&j| self.roles[j] == Role::Supp)
            .map(|&j| self.tree.id(j))
            .collect())
    }
}

/// S-atoms are parts with no core–core edge.
pub type Atom = Part;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullDecomposition {
    tree: Tree,
    roles: Vec<Role>,
    kernel: KernelBasis,
    s_parts: Vec<Part>,
    n_parts: Forest,
    connection_edges: Vec<(VertexId, VertexId)>,
}

impl NullDecomposition {
    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    /// The exact kernel basis the decomposition was read from.
    pub fn kernel(&self) -> &KernelBasis {
        &self.kernel
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn role(&self, v: VertexId) -> Option<Role> {
        self.tree.index_of(v).map(|i| self.roles[i])
    }

    pub fn support_core(&self) -> SupportCore {
        SupportCore {
            supp: self.supp(),
            core: self.core(),
        }
    }

    pub fn supp(&self) -> Vec<VertexId> {
        ids_with(&self.tree, &self.roles, Role::Supp)
    }

    pub fn core(&self) -> Vec<VertexId> {
        ids_with(&self.tree, &self.roles, Role::Core)
    }

    pub fn supp_count(&self) -> usize {
        self.roles.iter().filter(|&&r| r == Role::Supp).count()
    }

    pub fn core_count(&self) -> usize {
        self.roles.iter().filter(|&&r| r == Role::Core).count()
    }

    /// F_S(T), listed by smallest vertex.
    pub fn s_parts(&self) -> &[Part] {
        &self.s_parts
    }

    pub fn s_forest(&self) -> Forest {
        Forest::new(self.s_parts.iter().map(|p| p.tree.clone()).collect())
            .expect("S-parts are disjoint")
    }

    /// F_N(T), listed by smallest vertex.
    pub fn n_parts(&self) -> &Forest {
        &self.n_parts
    }

    /// |V(F_N(T))|.
    pub fn n_vertex_count(&self) -> usize {
        self.n_parts.vertex_count()
    }

    /// Conn(T), each edge as (smaller, larger).
    pub fn connection_edges(&self) -> &[(VertexId, VertexId)] {
        &self.connection_edges
    }

    /// Pairs (S-part index, N-part index) joined by a connection edge.
    pub fn adjacent_parts(&self) -> Vec<(usize, usize)> {
        let s_of = |v: VertexId| self.s_parts.iter().position(|p| p.tree.contains(v));
        let n_of = |v: VertexId| self.n_parts.components().iter().position(|p| p.contains(v));
        let mut out: Vec<(usize, usize)> = self
            .connection_edges
            .iter()
            .filter_map(|&(a, b)| match (s_of(a), n_of(b)) {
                (Some(s), Some(n)) => Some((s, n)),
                _ => match (s_of(b), n_of(a)) {
                    (Some(s), Some(n)) => Some((s, n)),
                    _ => None,
                },
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_s_tree(&self) -> bool {
        self.roles.iter().all(|&r| r != Role::Matched)
    }

    /// The A-set: every S-part with its core–core edges removed.
    pub fn a_set(&self) -> AtomSet {
        let t = &self.tree;
        let keep: Vec<bool> = self.roles.iter().map(|&r| r != Role::Matched).collect();
        let is_core = |i: usize| self.roles[i] == Role::Core;
        let atoms = t
            .components_where(&keep, |a, b| !(is_core(a) && is_core(b)))
            .into_iter()
            .map(|comp| {
                let roles = comp.iter().map(|&i| self.roles[i]).collect();
                Part::new(t.induced(&comp).expect("atoms are subtrees"), roles)
            })
            .collect();
        let bond_edges = t
            .edges()
            .filter(|&(a, b)| is_core(a) && is_core(b))
            .map(|(a, b)| (t.id(a), t.id(b)))
            .collect();
        AtomSet { atoms, bond_edges }
    }
}

pub fn decompose(t: &Tree) -> NullDecomposition {
    let kernel = tree_kernel(t);
    let roles = roles_from_kernel(t, &kernel);
    let in_s: Vec<bool> = roles.iter().map(|&r| r != Role::Matched).collect();
    let in_n: Vec<bool> = in_s.iter().map(|&x| !x).collect();
    let s_parts = t
        .components(&in_s)
        .into_iter()
        .map(|comp| {
            let r = comp.iter().map(|&i| roles[i]).collect();
            Part::new(t.induced(&comp).expect("components are subtrees"), r)
        })
        .collect();
    let n_parts = Forest::new(
        t.components(&in_n)
            .into_iter()
            .map(|comp| t.induced(&comp).expect("components are subtrees"))
            .collect(),
    )
    .expect("components are disjoint");
    let connection_edges = t
        .edges()
        .filter(|&(a, b)| in_s[a] != in_s[b])
        .map(|(a, b)| (t.id(a), t.id(b)))
        .collect();
    NullDecomposition {
        tree: t.clone(),
        roles,
        kernel,
        s_parts,
        n_parts,
        connection_edges,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomSet {
    atoms: Vec<Atom>,
    bond_edges: Vec<(VertexId, VertexId)>,
}

impl AtomSet {
    /// F_A(T), listed by smallest vertex.
    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn forest(&self) -> Forest {
        Forest::new(self.atoms.iter().map(|a| a.tree.clone()).collect())
            .expect("atoms are disjoint")
    }

    /// Bond(T): the deleted core–core edges, each as (smaller, larger).
    pub fn bond_edges(&self) -> &[(VertexId, VertexId)] {
        &self.bond_edges
    }
}

pub fn a_set(t: &Tree) -> AtomSet {
    decompose(t).a_set()
}

/// `R(v)` for a core vertex `v` of `t`.
pub fn bouquet(t: &Tree, v: VertexId) -> Result<Vec<VertexId>> {
    let i = t.require(v)?;
    let roles = roles_of(t);
    Part::new(t.clone(), roles).bouquet(t.id(i))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub order: usize,
    pub nullity: usize,
    pub supp_size: usize,
    pub core_size: usize,
    pub is_s_tree: bool,
    pub is_n_tree: bool,
    pub is_s_atom: bool,
    pub is_s_basic: bool,
    pub delta_core: usize,
}

pub fn classify(t: &Tree) -> Classification {
    let kernel = tree_kernel(t);
    let roles = roles_from_kernel(t, &kernel);
    classify_with(t, &roles, kernel.dim())
}

pub(crate) fn classify_with(t: &Tree, roles: &[Role], nullity: usize) -> Classification {
    let is_core = |i: usize| roles[i] == Role::Core;
    let is_s_tree = roles.iter().all(|&r| r != Role::Matched);
    let is_s_atom = is_s_tree && t.edges().all(|(a, b)| !(is_core(a) && is_core(b)));
    let delta_core = (0..t.order())
        .filter(|&i| is_core(i))
        .map(|i| t.degree(i))
        .max()
        .unwrap_or(0);
    Classification {
        order: t.order(),
        nullity,
        supp_size: roles.iter().filter(|&&r| r == Role::Supp).count(),
        core_size: roles.iter().filter(|&&r| r == Role::Core).count(),
        is_s_tree,
        is_n_tree: nullity == 0,
        is_s_atom,
        is_s_basic: is_s_atom && delta_core == 2,
        delta_core,
    }
}

/// A value computed by a closed formula next to the same value computed
/// independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Checked<T> {
    pub formula: T,
    pub oracle: T,
}

impl<T: PartialEq + std::fmt::Debug> Checked<T> {
    pub fn agrees(&self) -> bool {
        self.formula == self.oracle
    }

    fn check(&self, name: &str) -> Result<()> {
        if self.agrees() {
            Ok(())
        } else {
            Err(Error::FormulaMismatch(format!(
                "{name}: formula gives {:?}, independent computation gives {:?}",
                self.formula, self.oracle
            )))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub order: usize,
    pub supp_size: usize,
    pub core_size: usize,
    pub n_part_vertex_count: usize,
    /// 2·core + |V(F_N)| vs exact elimination.
    pub rank: Checked<usize>,
    /// supp − core vs exact elimination.
    pub nullity: Checked<usize>,
    /// core + |V(F_N)|/2 vs the matching DP.
    pub nu: Checked<usize>,
    /// supp + |V(F_N)|/2 vs the independent-set DP.
    pub alpha: Checked<usize>,
    /// Product over atoms vs the counting DP on the whole tree.
    pub m_count: Checked<DecimalUint>,
    pub gamma: usize,
}

/// A big unsigned integer serialized as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecimalUint(#[serde(serialize_with = "as_decimal")] pub BigUint);

/// Closed-form invariants next to independently computed ones; any
/// disagreement is an error.
pub fn invariant_report(t: &Tree) -> Result<InvariantReport> {
    report_for(&decompose(t))
}

pub fn report_for(d: &NullDecomposition) -> Result<InvariantReport> {
    let t = d.tree();
    let supp = d.supp_count();
    let core = d.core_count();
    let nv = d.n_vertex_count();
    if !nv.is_multiple_of(2) {
        return Err(Error::FormulaMismatch(format!(
            "N-forest has odd order {nv}"
        )));
    }
    let nullity_oracle = d.kernel().dim();
    let rank_oracle = t.order() - nullity_oracle;
    let (nu_oracle, m_oracle) = matching::max_matchings(t);
    let mut m_formula = BigUint::from(1u32);
    for atom in d.a_set().atoms() {
        m_formula *= matching::count_max_matchings(atom.tree());
    }
    let report = InvariantReport {
        order: t.order(),
        supp_size: supp,
        core_size: core,
        n_part_vertex_count: nv,
        rank: Checked {
            formula: 2 * core + nv,
            oracle: rank_oracle,
        },
        nullity: Checked {
            formula: supp.checked_sub(core).ok_or_else(|| {
                Error::FormulaMismatch(format!("core ({core}) larger than support ({supp})"))
            })?,
            oracle: nullity_oracle,
        },
        nu: Checked {
            formula: core + nv / 2,
            oracle: nu_oracle,
        },
        alpha: Checked {
            formula: supp + nv / 2,
            oracle: matching::alpha(t),
        },
        m_count: Checked {
            formula: DecimalUint(m_formula),
            oracle: DecimalUint(m_oracle),
        },
        gamma: matching::gamma(t),
    };
    report.rank.check("rank")?;
    report.nullity.check("nullity")?;
    report.nu.check("matching number")?;
    report.alpha.check("independence number")?;
    report.m_count.check("number of maximum matchings")?;
    if report.nu.oracle + report.nullity.oracle != report.alpha.oracle {
        return Err(Error::FormulaMismatch("ν ≠ α − nullity".into()));
    }
    if report.rank.oracle != 2 * report.nu.oracle {
        return Err(Error::FormulaMismatch("rank ≠ 2ν".into()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::tree::ids;

    fn sets(parts: impl Iterator<Item = Vec<VertexId>>) -> Vec<Vec<VertexId>> {
        parts.collect()
    }

    #[test]
    fn support_core_examples() {
        let sc = support_core(&fixtures::e1());
        assert_eq!(sc.supp, ids([2, 3, 4, 5, 7, 8]));
        assert_eq!(sc.core, ids([1, 6]));
        let sc = support_core(&Tree::path(1, 2));
        assert!(sc.supp.is_empty() && sc.core.is_empty());
        let sc = support_core(&fixtures::e2());
        assert_eq!(sc.supp, ids([2, 3, 6, 7, 8, 10, 11, 12]));
        assert_eq!(sc.core, ids([1, 4, 5, 9]));
    }

    #[test]
    fn matching_characterization_agrees() {
        for t in [
            fixtures::e1(),
            fixtures::e2(),
            fixtures::e3(),
            Tree::path(1, 7),
        ] {
            assert_eq!(support_by_matching(&t), support_core(&t).supp);
        }
    }

    #[test]
    fn decompose_e2() {
        let d = decompose(&fixtures::e2());
        assert_eq!(
            sets(d.s_parts().iter().map(|p| p.vertices().to_vec())),
            vec![ids([1, 2, 3]), ids([4, 5, 6, 7, 8]), ids([9, 10, 11, 12])]
        );
        assert_eq!(
            sets(d.n_parts().components().iter().map(|p| p.ids().to_vec())),
            vec![ids([13, 14]), ids([15, 16, 17, 18])]
        );
        assert_eq!(
            d.connection_edges(),
            &[
                (VertexId(1), VertexId(13)),
                (VertexId(4), VertexId(14)),
                (VertexId(9), VertexId(13)),
                (VertexId(9), VertexId(16)),
            ]
        );
        assert_eq!(d.adjacent_parts(), vec![(0, 0), (1, 0), (2, 0), (2, 1)]);
    }

    #[test]
    fn decompose_e1_and_p4() {
        let d = decompose(&fixtures::e1());
        assert_eq!(d.s_parts().len(), 1);
        assert_eq!(d.s_parts()[0].tree(), &fixtures::e1());
        assert!(d.n_parts().is_empty() && d.connection_edges().is_empty());
        let d = decompose(&Tree::path(1, 4));
        assert!(d.s_parts().is_empty() && d.connection_edges().is_empty());
        assert_eq!(d.n_parts().components(), &[Tree::path(1, 4)]);
    }

    #[test]
    fn a_set_examples() {
        let a = a_set(&fixtures::e3());
        assert_eq!(
            sets(a.atoms().iter().map(|p| p.vertices().to_vec())),
            vec![ids([1, 2, 3]), ids([4, 5, 6])]
        );
        assert_eq!(a.bond_edges(), &[(VertexId(2), VertexId(5))]);
        let a = a_set(&fixtures::e1());
        assert_eq!(a.atoms().len(), 1);
        assert!(a.bond_edges().is_empty());
        let a = a_set(&fixtures::e2());
        assert_eq!(a.atoms().len(), 3);
        assert!(a.bond_edges().is_empty());
        assert_eq!(a.atoms()[1].supp(), ids([6, 7, 8]));
        assert_eq!(a.atoms()[1].core(), ids([4, 5]));
    }

    #[test]
    fn bouquet_examples() {
        let e2 = fixtures::e2();
        assert_eq!(bouquet(&e2, VertexId(4)).unwrap(), ids([6, 7]));
        assert_eq!(bouquet(&e2, VertexId(9)).unwrap(), ids([10, 11, 12]));
        assert_eq!(
            bouquet(&fixtures::e1(), VertexId(1)).unwrap(),
            ids([2, 3, 4, 5])
        );
        assert_eq!(
            bouquet(&e2, VertexId(2)),
            Err(Error::NotCoreVertex(VertexId(2)))
        );
    }

    #[test]
    fn classify_examples() {
        let c = classify(&fixtures::e1());
        assert!(c.is_s_tree && c.is_s_atom && !c.is_s_basic);
        assert_eq!(c.delta_core, 4);
        let c = classify(&Tree::path(1, 5));
        assert!(c.is_s_basic);
        assert_eq!((c.supp_size, c.core_size, c.nullity), (3, 2, 1));
        assert!(classify(&Tree::path(1, 2)).is_n_tree);
        let c = classify(&Tree::singleton(VertexId(1)));
        assert!(c.is_s_tree && c.is_s_atom && !c.is_s_basic);
        assert_eq!(c.delta_core, 0);
    }

    #[test]
    fn invariant_report_examples() {
        let r = invariant_report(&fixtures::e2()).unwrap();
        assert_eq!(
            (
                r.rank.formula,
                r.nullity.formula,
                r.nu.formula,
                r.alpha.formula
            ),
            (14, 4, 7, 11)
        );
        let r = invariant_report(&fixtures::e1()).unwrap();
        assert_eq!(
            (r.rank.oracle, r.nullity.oracle, r.nu.oracle, r.alpha.oracle),
            (4, 4, 2, 6)
        );
        let r = invariant_report(&Tree::singleton(VertexId(1))).unwrap();
        assert_eq!(
            (r.rank.oracle, r.nullity.oracle, r.nu.oracle, r.alpha.oracle),
            (0, 1, 0, 1)
        );
    }
}
