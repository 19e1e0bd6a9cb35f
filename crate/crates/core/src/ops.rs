//! Stellare and S-coalescence, the S-tree-preserving operations, with the
//! splitting at internal supported vertices that undoes coalescence.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bases::{check_null_basis, check_range_basis};
use crate::decomposition::{classify, decompose, roles_of, Checked, DecimalUint, Role};
use crate::error::{Error, Result};
use crate::linalg::tree_rank;
use crate::matching;
use crate::tree::{Forest, Tree, VertexId, VertexVector};

/// `(u, w)`: `w = 0` is the original vertex `u`, `w ≥ 1` its `w`-th new
/// pendant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct StellareLabel {
    pub base: VertexId,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stellare {
    pub tree: Tree,
    /// Stellare label of every vertex of [`Stellare::tree`].
    pub labels: BTreeMap<VertexId, StellareLabel>,
}

impl Stellare {
    /// The vertex carrying label `(u, w)`.
    pub fn vertex(&self, u: VertexId, w: usize) -> Option<VertexId> {
        if w == 0 {
            return self.tree.contains(u).then_some(u);
        }
        self.labels
            .iter()
            .find(|(_, l)| l.base == u && l.index == w)
            .map(|(&v, _)| v)
    }
}

fn check_ks(t: &Tree, ks: &[usize]) -> Result<()> {
    if ks.len() != t.order() {
        return Err(Error::BadArity {
            expected: t.order(),
            got: ks.len(),
        });
    }
    if let Some(i) = ks.iter().position(|&k| k < 2) {
        return Err(Error::KTooSmall {
            vertex: t.id(i),
            k: ks[i],
        });
    }
    Ok(())
}

/// `*(k_1, …, k_n) t`: `ks[i]` pendants on the `i`-th vertex in label order.
/// New vertices take fresh labels above `t`'s largest, in order of
/// `(base, index)`.
pub fn stellare(t: &Tree, ks: &[usize]) -> Result<Stellare> {
    check_ks(t, ks)?;
    let mut labels = BTreeMap::new();
    let mut edges = t.edge_ids();
    let mut next = t.max_id().0 + 1;
    for (i, &k) in ks.iter().enumerate() {
        let u = t.id(i);
        labels.insert(u, StellareLabel { base: u, index: 0 });
        for w in 1..=k {
            let v = VertexId(next);
            next += 1;
            labels.insert(v, StellareLabel { base: u, index: w });
            edges.push((u, v));
        }
    }
    let tree = Tree::new(t.ids().to_vec(), edges)?;
    Ok(Stellare { tree, labels })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StellareReport {
    pub order: usize,
    pub nullity: Checked<usize>,
    pub rank: Checked<usize>,
    pub alpha: Checked<usize>,
    pub nu: Checked<usize>,
    pub m_count: Checked<DecimalUint>,
    pub gamma: Checked<usize>,
    /// Core = original vertices, Supp = added vertices.
    pub roles_as_predicted: bool,
}

fn mismatch<T: PartialEq + std::fmt::Debug>(name: &str, c: &Checked<T>) -> Result<()> {
    if c.agrees() {
        Ok(())
    } else {
        Err(Error::FormulaMismatch(format!(
            "{name}: formula {:?}, computed {:?}",
            c.formula, c.oracle
        )))
    }
}

/// The six closed forms for a stellare, each recomputed on the built tree.
pub fn stellare_invariants(t: &Tree, ks: &[usize]) -> Result<StellareReport> {
    let star = stellare(t, ks)?;
    let s = &star.tree;
    let n = t.order();
    let sum: usize = ks.iter().sum();
    let product = ks
        .iter()
        .fold(BigUint::from(1u32), |acc, &k| acc * BigUint::from(k));
    let rank = tree_rank(s);
    let (nu, m) = matching::max_matchings(s);
    let roles = roles_of(s);
    let roles_as_predicted = (0..s.order()).all(|i| {
        let original = t.contains(s.id(i));
        roles[i] == if original { Role::Core } else { Role::Supp }
    });
    let report = StellareReport {
        order: s.order(),
        nullity: Checked {
            formula: sum - n,
            oracle: s.order() - rank,
        },
        rank: Checked {
            formula: 2 * n,
            oracle: rank,
        },
        alpha: Checked {
            formula: sum,
            oracle: matching::alpha(s),
        },
        nu: Checked {
            formula: n,
            oracle: nu,
        },
        m_count: Checked {
            formula: DecimalUint(product),
            oracle: DecimalUint(m),
        },
        gamma: Checked {
            formula: n,
            oracle: matching::gamma(s),
        },
        roles_as_predicted,
    };
    mismatch("nullity", &report.nullity)?;
    mismatch("rank", &report.rank)?;
    mismatch("alpha", &report.alpha)?;
    mismatch("nu", &report.nu)?;
    mismatch("m", &report.m_count)?;
    mismatch("gamma", &report.gamma)?;
    if !roles_as_predicted {
        return Err(Error::FormulaMismatch(
            "stellare core is not the original vertex set".into(),
        ));
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StellareBases {
    pub stellare: Stellare,
    /// `b(i, j) = e_(i,1) − e_(i,j)` for `j = 2..=k_i`, by `(i, j)`.
    pub null: Vec<VertexVector>,
    /// `e_v, e_R(v)` for every original `v`, ascending.
    pub range: Vec<VertexVector>,
}

/// The closed-form null and range bases of a stellare, both checked
/// exactly against elimination.
pub fn stellare_bases(t: &Tree, ks: &[usize]) -> Result<StellareBases> {
    let star = stellare(t, ks)?;
    let s = &star.tree;
    let mut null = Vec::new();
    let mut range = Vec::new();
    for (i, &k) in ks.iter().enumerate() {
        let u = t.id(i);
        let first = star.vertex(u, 1).expect("k ≥ 2");
        for j in 2..=k {
            let other = star.vertex(u, j).expect("j ≤ k");
            null.push(VertexVector::from_sparse(s, &[(first, 1), (other, -1)])?);
        }
        let bouquet: Vec<VertexId> = (1..=k).map(|w| star.vertex(u, w).expect("w ≤ k")).collect();
        range.push(VertexVector::unit(s, u)?);
        range.push(VertexVector::indicator(s, &bouquet)?);
    }
    check_null_basis(s, &null)?;
    check_range_basis(s, &range)?;
    Ok(StellareBases {
        stellare: star,
        null,
        range,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanPart {
    pub tree: Tree,
    pub attach: VertexId,
}

/// Input of an S-coalescence. Parts are relabeled so their vertex sets
/// never clash; `star_vertex` overrides the label of the fused vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoalescencePlan {
    pub parts: Vec<PlanPart>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star_vertex: Option<VertexId>,
}

impl CoalescencePlan {
    pub fn new(parts: Vec<(Tree, VertexId)>) -> CoalescencePlan {
        CoalescencePlan {
            parts: parts
                .into_iter()
                .map(|(tree, attach)| PlanPart { tree, attach })
                .collect(),
            star_vertex: None,
        }
    }

    pub fn from_json(text: &str) -> Result<CoalescencePlan> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coalescence {
    pub tree: Tree,
    pub star: VertexId,
    /// For each part, old label → new label (the attach vertex maps to
    /// the fused vertex).
    pub provenance: Vec<BTreeMap<VertexId, VertexId>>,
}

/// Fuses the attach vertex of every part into one new vertex `v*`.
///
/// The other vertices are relabeled 1, 2, … part by part in ascending label
/// order; `v*` comes last unless the plan fixes it.
pub fn s_coalescence(plan: &CoalescencePlan) -> Result<Coalescence> {
    if plan.parts.is_empty() {
        return Err(Error::InvalidInput(
            "a coalescence needs at least one part".into(),
        ));
    }
    for part in &plan.parts {
        let i = part.tree.require(part.attach)?;
        let roles = roles_of(&part.tree);
        if roles.contains(&Role::Matched) {
            return Err(Error::NotSTree);
        }
        if roles[i] != Role::Supp {
            return Err(Error::NotSupported(part.attach));
        }
    }
    let mut next = 1u64;
    let mut provenance: Vec<BTreeMap<VertexId, VertexId>> = Vec::new();
    for part in &plan.parts {
        let mut map = BTreeMap::new();
        for &v in part.tree.ids() {
            if v != part.attach {
                map.insert(v, VertexId(next));
                next += 1;
            }
        }
        provenance.push(map);
    }
    let star = plan.star_vertex.unwrap_or(VertexId(next));
    if provenance.iter().any(|m| m.values().any(|&v| v == star)) {
        return Err(Error::InvalidInput(format!(
            "star vertex {star} clashes with a relabeled vertex"
        )));
    }
    let mut vertices = vec![star];
    let mut edges = Vec::new();
    for (part, map) in plan.parts.iter().zip(provenance.iter_mut()) {
        map.insert(part.attach, star);
        vertices.extend(map.values().copied());
        edges.extend(
            part.tree
                .edge_ids()
                .into_iter()
                .map(|(a, b)| (map[&a], map[&b])),
        );
    }
    let tree = Tree::new(vertices, edges)?;
    Ok(Coalescence {
        tree,
        star,
        provenance,
    })
}

/// `m(result)` against `∏ m(S_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingCountBound {
    pub result: DecimalUint,
    pub product: DecimalUint,
    /// The inequality is strict as soon as two parts have an edge; with
    /// fewer, coalescence is a relabeling and the counts are equal.
    pub strict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoalescenceReport {
    pub is_s_tree: bool,
    pub core: Checked<Vec<VertexId>>,
    pub core_size: Checked<usize>,
    pub supp: Checked<Vec<VertexId>>,
    pub supp_size: Checked<usize>,
    pub rank: Checked<usize>,
    pub nullity: Checked<usize>,
    pub nu: Checked<usize>,
    pub m_count: MatchingCountBound,
    pub alpha: Checked<usize>,
}

/// The nine coalescence identities, with every part-side quantity computed
/// on the parts and every result-side quantity on the fused tree.
pub fn coalescence_invariants(plan: &CoalescencePlan) -> Result<CoalescenceReport> {
    let c = s_coalescence(plan)?;
    let k = plan.parts.len();
    let mut core_union = Vec::new();
    let mut supp_union = vec![c.star];
    let (mut core_sum, mut supp_sum, mut rank_sum, mut nullity_sum, mut nu_sum, mut alpha_sum) =
        (0, 0, 0, 0, 0, 0);
    let mut product = BigUint::from(1u32);
    let mut nontrivial = 0;
    for (part, map) in plan.parts.iter().zip(&c.provenance) {
        let d = decompose(&part.tree);
        core_union.extend(d.core().into_iter().map(|v| map[&v]));
        supp_union.extend(
            d.supp()
                .into_iter()
                .filter(|&v| v != part.attach)
                .map(|v| map[&v]),
        );
        core_sum += d.core_count();
        supp_sum += d.supp_count();
        nullity_sum += d.kernel().dim();
        rank_sum += part.tree.order() - d.kernel().dim();
        let (nu, m) = matching::max_matchings(&part.tree);
        nu_sum += nu;
        product *= m;
        alpha_sum += matching::alpha(&part.tree);
        if part.tree.order() >= 2 {
            nontrivial += 1;
        }
    }
    core_union.sort();
    supp_union.sort();
    let d = decompose(&c.tree);
    let (nu, m) = matching::max_matchings(&c.tree);
    let strict = nontrivial >= 2;
    let report = CoalescenceReport {
        is_s_tree: d.is_s_tree(),
        core: Checked {
            formula: core_union,
            oracle: d.core(),
        },
        core_size: Checked {
            formula: core_sum,
            oracle: d.core_count(),
        },
        supp: Checked {
            formula: supp_union,
            oracle: d.supp(),
        },
        supp_size: Checked {
            formula: 1 + supp_sum - k,
            oracle: d.supp_count(),
        },
        rank: Checked {
            formula: rank_sum,
            oracle: c.tree.order() - d.kernel().dim(),
        },
        nullity: Checked {
            formula: 1 + nullity_sum - k,
            oracle: d.kernel().dim(),
        },
        nu: Checked {
            formula: nu_sum,
            oracle: nu,
        },
        m_count: MatchingCountBound {
            result: DecimalUint(m),
            product: DecimalUint(product),
            strict,
        },
        alpha: Checked {
            formula: 1 + alpha_sum - k,
            oracle: matching::alpha(&c.tree),
        },
    };
    if !report.is_s_tree {
        return Err(Error::FormulaMismatch(
            "coalescence is not an S-tree".into(),
        ));
    }
    mismatch("Core", &report.core)?;
    mismatch("core", &report.core_size)?;
    mismatch("Supp", &report.supp)?;
    mismatch("supp", &report.supp_size)?;
    mismatch("rank", &report.rank)?;
    mismatch("nullity", &report.nullity)?;
    mismatch("nu", &report.nu)?;
    mismatch("alpha", &report.alpha)?;
    let (r, p) = (&report.m_count.result.0, &report.m_count.product.0);
    let holds = if strict { r < p } else { r == p };
    if !holds {
        return Err(Error::FormulaMismatch(format!(
            "m: result {r}, product of parts {p} (strict: {strict})"
        )));
    }
    Ok(report)
}

fn require_s_tree(s: &Tree) -> Result<Vec<Role>> {
    let roles = roles_of(s);
    if roles.contains(&Role::Matched) {
        return Err(Error::NotSTree);
    }
    Ok(roles)
}

/// ISupp(s): supported vertices of degree greater than one.
pub fn i_supp(s: &Tree) -> Result<Vec<VertexId>> {
    let roles = require_s_tree(s)?;
    Ok((0..s.order())
        .filter(|&i| roles[i] == Role::Supp && s.degree(i) > 1)
        .map(|i| s.id(i))
        .collect())
}

/// Splits `s` at `v ∈ ISupp(s)` into one S-tree per neighbor `u_i` of `v`,
/// each holding a fresh copy of `v` hung on `u_i`. Copies are numbered
/// from `s.max_id() + 1` in ascending order of the neighbor.
pub fn s_decompose_step(s: &Tree, v: VertexId) -> Result<Forest> {
    let mut next = s.max_id().0 + 1;
    split_at(s, v, &mut next)
}

fn split_at(s: &Tree, v: VertexId, next: &mut u64) -> Result<Forest> {
    let i = s.require(v)?;
    let roles = require_s_tree(s)?;
    if roles[i] != Role::Supp || s.degree(i) < 2 {
        return Err(Error::NotInternalSupport(v));
    }
    let mut keep = vec![true; s.order()];
    keep[i] = false;
    let mut parts = Vec::new();
    for &u in s.neighbors(i) {
        let side = crate::tree::toward_indices(s, i, u);
        let copy = VertexId(*next);
        *next += 1;
        let mut edges: Vec<(VertexId, VertexId)> = s
            .edges()
            .filter(|&(a, b)| {
                a != i && b != i && side.binary_search(&a).is_ok() && side.binary_search(&b).is_ok()
            })
            .map(|(a, b)| (s.id(a), s.id(b)))
            .collect();
        edges.push((s.id(u), copy));
        let vertices = side.iter().map(|&x| s.id(x)).chain([copy]);
        let part = Tree::new(vertices, edges)?;
        if !classify(&part).is_s_tree {
            return Err(Error::ValidationFailed {
                reason: format!("splitting at {v} produced a part that is not an S-tree"),
                vertices: part.ids().to_vec(),
            });
        }
        parts.push(part);
    }
    Forest::new(parts)
}

/// Splits repeatedly, always at the smallest internal supported vertex,
/// until no part has one. Fresh labels start above `s.max_id()`.
pub fn s_decompose(s: &Tree) -> Result<Forest> {
    require_s_tree(s)?;
    let mut next = s.max_id().0 + 1;
    let mut done = Vec::new();
    let mut work = vec![s.clone()];
    while let Some(t) = work.pop() {
        match i_supp(&t)?.first() {
            None => done.push(t),
            Some(&v) => work.extend(split_at(&t, v, &mut next)?.into_components()),
        }
    }
    Forest::new(done)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::tree::ids;

    #[test]
    fn stellare_examples() {
        let s = stellare(&Tree::path(1, 2), &[2, 2]).unwrap();
        assert!(s.tree.is_isomorphic(&fixtures::e3()));
        let s = stellare(
            &fixtures::stellare_figure_base(),
            &fixtures::STELLARE_FIGURE_KS,
        )
        .unwrap();
        assert_eq!(s.tree.order(), 23);
        let s = stellare(&Tree::singleton(VertexId(1)), &[2]).unwrap();
        assert!(s.tree.is_isomorphic(&Tree::path(1, 3)));
        assert_eq!(s.vertex(VertexId(1), 2), Some(VertexId(3)));
        assert_eq!(
            s.labels[&VertexId(2)],
            StellareLabel {
                base: VertexId(1),
                index: 1
            }
        );
    }

    #[test]
    fn stellare_errors() {
        let p = Tree::path(1, 2);
        assert_eq!(
            stellare(&p, &[2]),
            Err(Error::BadArity {
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            stellare(&p, &[2, 1]),
            Err(Error::KTooSmall {
                vertex: VertexId(2),
                k: 1
            })
        );
    }

    #[test]
    fn stellare_invariant_examples() {
        let r = stellare_invariants(&Tree::path(1, 2), &[2, 2]).unwrap();
        assert_eq!(
            (
                r.nullity.oracle,
                r.rank.oracle,
                r.alpha.oracle,
                r.nu.oracle,
                r.gamma.oracle
            ),
            (2, 4, 4, 2, 2)
        );
        assert_eq!(r.m_count.oracle.0, BigUint::from(4u32));
        let r = stellare_invariants(&Tree::singleton(VertexId(1)), &[2]).unwrap();
        assert_eq!((r.nullity.oracle, r.rank.oracle), (1, 2));
        assert_eq!(r.m_count.oracle.0, BigUint::from(2u32));
        let r = stellare_invariants(
            &fixtures::stellare_figure_base(),
            &fixtures::STELLARE_FIGURE_KS,
        )
        .unwrap();
        assert_eq!(r.m_count.oracle.0, BigUint::from(432u32));
        assert_eq!(r.rank.oracle, 12);
    }

    #[test]
    fn stellare_basis_examples() {
        let b = stellare_bases(&Tree::path(1, 2), &[2, 2]).unwrap();
        let t = &b.stellare.tree;
        assert_eq!(
            b.null,
            vec![
                VertexVector::from_sparse(t, &[(VertexId(3), 1), (VertexId(4), -1)]).unwrap(),
                VertexVector::from_sparse(t, &[(VertexId(5), 1), (VertexId(6), -1)]).unwrap(),
            ]
        );
        let b = stellare_bases(&Tree::singleton(VertexId(1)), &[2]).unwrap();
        let t = &b.stellare.tree;
        assert_eq!(
            b.null,
            vec![VertexVector::from_sparse(t, &[(VertexId(2), 1), (VertexId(3), -1)]).unwrap()]
        );
        assert_eq!(
            b.range,
            vec![
                VertexVector::unit(t, VertexId(1)).unwrap(),
                VertexVector::indicator(t, &ids([2, 3])).unwrap(),
            ]
        );
        let b = stellare_bases(&Tree::singleton(VertexId(1)), &[3]).unwrap();
        assert_eq!((b.null.len(), b.range.len()), (2, 2));
    }

    fn p3_p3() -> CoalescencePlan {
        CoalescencePlan::new(vec![
            (Tree::path(1, 3), VertexId(3)),
            (Tree::path(1, 3), VertexId(1)),
        ])
    }

    #[test]
    fn coalescence_of_two_paths() {
        let c = s_coalescence(&p3_p3()).unwrap();
        assert!(c.tree.is_isomorphic(&Tree::path(1, 5)));
        assert_eq!(c.star, VertexId(5));
        assert_eq!(support_of(&c.tree), ids([1, 4, 5]));
        let r = coalescence_invariants(&p3_p3()).unwrap();
        assert_eq!(r.nullity.oracle, 1);
        assert_eq!(r.nu.oracle, 2);
        assert_eq!(r.m_count.result.0, BigUint::from(3u32));
        assert_eq!(r.m_count.product.0, BigUint::from(4u32));
    }

    fn support_of(t: &Tree) -> Vec<VertexId> {
        crate::decomposition::support_core(t).supp
    }

    #[test]
    fn coalescence_figure() {
        let s1 = Tree::path(1, 3);
        let s2 = Tree::from_pairs(&[
            (1, 2),
            (2, 3),
            (1, 4),
            (4, 5),
            (4, 6),
            (4, 7),
            (5, 8),
            (5, 9),
        ])
        .unwrap();
        let s3 = Tree::star(2, &[1, 3, 4]).unwrap();
        let plan = CoalescencePlan::new(vec![
            (s1, VertexId(1)),
            (s2, VertexId(1)),
            (s3, VertexId(1)),
        ]);
        let c = s_coalescence(&plan).unwrap();
        assert_eq!(c.tree.order(), 14);
        // The drawn result, labeled by hand: v* = 1.
        let drawn = Tree::from_pairs(&[
            (1, 2),
            (2, 3),
            (1, 4),
            (4, 5),
            (1, 6),
            (6, 7),
            (6, 8),
            (6, 9),
            (7, 10),
            (7, 11),
            (1, 12),
            (12, 13),
            (12, 14),
        ])
        .unwrap();
        assert!(c.tree.is_isomorphic(&drawn));
        coalescence_invariants(&plan).unwrap();
    }

    #[test]
    fn coalescence_errors() {
        let plan = CoalescencePlan::new(vec![
            (Tree::path(1, 3), VertexId(2)),
            (Tree::path(1, 3), VertexId(1)),
        ]);
        assert_eq!(
            s_coalescence(&plan).unwrap_err(),
            Error::NotSupported(VertexId(2))
        );
        let plan = CoalescencePlan::new(vec![(Tree::path(1, 2), VertexId(1))]);
        assert_eq!(s_coalescence(&plan).unwrap_err(), Error::NotSTree);
    }

    #[test]
    fn three_paths_and_single_part() {
        let plan = CoalescencePlan::new(vec![(Tree::path(1, 3), VertexId(1)); 3]);
        let r = coalescence_invariants(&plan).unwrap();
        assert_eq!(r.supp_size.oracle, 4);
        let single = CoalescencePlan::new(vec![(fixtures::e1(), VertexId(2))]);
        let r = coalescence_invariants(&single).unwrap();
        assert!(!r.m_count.strict);
        assert_eq!(r.m_count.result, r.m_count.product);
    }

    #[test]
    fn plan_json() {
        let text = r#"{"parts":[{"tree":{"edges":[[1,2],[2,3]]},"attach":3},{"tree":{"vertices":[1,2,3],"edges":[[1,2],[2,3]]},"attach":1}],"star_vertex":99}"#;
        let plan = CoalescencePlan::from_json(text).unwrap();
        assert_eq!(plan.parts.len(), 2);
        assert_eq!(s_coalescence(&plan).unwrap().star, VertexId(99));
    }

    #[test]
    fn splitting() {
        let f = s_decompose_step(&Tree::path(1, 5), VertexId(3)).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f
            .components()
            .iter()
            .all(|p| p.is_isomorphic(&Tree::path(1, 3))));

        let f = s_decompose_step(&fixtures::e1(), VertexId(5)).unwrap();
        let parts: Vec<Vec<VertexId>> = f.components().iter().map(|p| p.ids().to_vec()).collect();
        assert_eq!(parts, vec![ids([1, 2, 3, 4, 9]), ids([6, 7, 8, 10])]);

        assert!(i_supp(&fixtures::e3()).unwrap().is_empty());
        assert_eq!(i_supp(&fixtures::e1()).unwrap(), ids([5]));
        assert_eq!(
            s_decompose_step(&fixtures::e1(), VertexId(2)),
            Err(Error::NotInternalSupport(VertexId(2)))
        );
        assert_eq!(
            s_decompose_step(&Tree::path(1, 4), VertexId(2)),
            Err(Error::NotSTree)
        );
    }

    #[test]
    fn full_decomposition_gives_stellare_bricks() {
        let f = s_decompose(&fixtures::e1()).unwrap();
        for brick in f.components() {
            assert!(i_supp(brick).unwrap().is_empty());
        }
        assert_eq!(f.len(), 2);
    }
}
