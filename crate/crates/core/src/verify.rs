//! The property suite behind `verify`: every structural property checked on
//! one tree against independent computations, swept over all labeled trees
//! of small order, plus the worked examples on the fixtures.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::bases::{tree_null_basis, tree_range_basis, ChoiceRule};
use crate::decomposition::{classify, decompose, report_for, support_by_matching, Role};
use crate::error::Result;
use crate::fixtures;
use crate::generators::{enumerate_trees, enumerate_trees_with_prefix};
use crate::linalg::{brute_force, span_equal, tree_kernel, OracleReport};
use crate::matching;
use crate::tree::{ids, lift, Tree, VertexId, VertexVector};

/// Check names, in reporting order.
pub const CHECKS: &[&str] = &[
    "rank = 2 nu",
    "nullity = supp - core",
    "nu = core + |F_N|/2",
    "alpha = supp + |F_N|/2",
    "invariant report",
    "N-parts have perfect matchings",
    "S-parts are S-trees",
    "atoms are S-atoms",
    "atoms are (Core, Supp)-bipartite",
    "nullity(atom) >= delta_core - 1",
    "S-basic conditions agree",
    "m(T) = product of m(atom)",
    "max matchings avoid Conn and Bond",
    "Supp by matching",
    "kernel is the sum of S-part kernels",
    "null basis",
    "range basis",
    "Supp is the unique max independent set",
    "Core is the unique min vertex cover",
    "max matching edges meet Core once",
    "each supported vertex missed by a max matching",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

struct Outcomes(Vec<CheckOutcome>);

impl Outcomes {
    fn record(&mut self, name: &'static str, passed: bool) {
        debug_assert!(CHECKS.contains(&name));
        self.0.push(CheckOutcome {
            name,
            passed,
            detail: None,
        });
    }

    fn record_result<T>(&mut self, name: &'static str, r: Result<T>, ok: impl FnOnce(&T) -> bool) {
        let outcome = match r {
            Ok(v) => CheckOutcome {
                name,
                passed: ok(&v),
                detail: None,
            },
            Err(e) => CheckOutcome {
                name,
                passed: false,
                detail: Some(e.to_string()),
            },
        };
        self.0.push(outcome);
    }
}

/// Runs every check on `t`. Checks that need exhaustive enumeration run only
/// when `t` has at most `brute_limit` vertices; the uniqueness checks run
/// only on S-trees.
pub fn check_tree(t: &Tree, brute_limit: usize) -> Vec<CheckOutcome> {
    let mut out = Outcomes(Vec::new());
    let d = decompose(t);
    let report = report_for(&d);
    let n_f = d.n_vertex_count();
    let (supp, core) = (d.supp_count(), d.core_count());
    let nullity = d.kernel().dim();
    let rank = t.order() - nullity;
    let (nu, m) = matching::max_matchings(t);
    let alpha = matching::alpha(t);
    out.record("rank = 2 nu", rank == 2 * nu);
    out.record(
        "nullity = supp - core",
        supp >= core && nullity == supp - core,
    );
    out.record(
        "nu = core + |F_N|/2",
        n_f.is_multiple_of(2) && nu == core + n_f / 2,
    );
    out.record(
        "alpha = supp + |F_N|/2",
        n_f.is_multiple_of(2) && alpha == supp + n_f / 2,
    );
    out.record_result("invariant report", report, |_| true);
    out.record(
        "N-parts have perfect matchings",
        d.n_parts()
            .components()
            .iter()
            .all(|p| 2 * matching::nu(p) == p.order()),
    );
    out.record(
        "S-parts are S-trees",
        d.s_parts().iter().all(|p| classify(p.tree()).is_s_tree),
    );

    let atoms = d.a_set();
    let mut s_atoms = true;
    let mut bipartite = true;
    let mut bound = true;
    let mut basic = true;
    let mut product = BigUint::from(1u32);
    for atom in atoms.atoms() {
        let a = atom.tree();
        let c = classify(a);
        let own = crate::decomposition::roles_of(a);
        s_atoms &= c.is_s_atom && own == atom.roles();
        let r = atom.roles();
        bipartite &= a.edges().all(|(x, y)| {
            matches!(
                (r[x], r[y]),
                (Role::Core, Role::Supp) | (Role::Supp, Role::Core)
            )
        });
        bound &= c.nullity + 1 >= c.delta_core;
        if c.core_size > 0 {
            let n = a.order();
            let (a_nu, a_m) = matching::max_matchings(a);
            let conditions = [
                c.delta_core == 2,
                c.supp_size == c.core_size + 1,
                c.nullity == 1,
                n % 2 == 1 && a_nu == (n - 1) / 2,
                n % 2 == 1 && matching::alpha(a) == n.div_ceil(2),
            ];
            basic &= conditions.iter().all(|&x| x) || conditions.iter().all(|&x| !x);
            basic &= c.is_s_basic == conditions[0];
            product *= a_m;
        } else {
            product *= matching::count_max_matchings(a);
        }
    }
    out.record("atoms are S-atoms", s_atoms);
    out.record("atoms are (Core, Supp)-bipartite", bipartite);
    out.record("nullity(atom) >= delta_core - 1", bound);
    out.record("S-basic conditions agree", basic);

    let oracle: Option<OracleReport> = (t.order() <= brute_limit)
        .then(|| brute_force(t, brute_limit).ok())
        .flatten();
    let m_agrees = product == m
        && oracle
            .as_ref()
            .is_none_or(|o| BigUint::from(o.m_count()) == m);
    out.record("m(T) = product of m(atom)", m_agrees);
    if let Some(o) = &oracle {
        let forbidden: Vec<(VertexId, VertexId)> = d
            .connection_edges()
            .iter()
            .chain(atoms.bond_edges())
            .copied()
            .collect();
        out.record(
            "max matchings avoid Conn and Bond",
            o.matchings
                .iter()
                .all(|mm| mm.iter().all(|e| !forbidden.contains(e))),
        );
    }
    out.record("Supp by matching", support_by_matching(t) == d.supp());

    let lifted: Result<Vec<VertexVector>> = d
        .s_parts()
        .iter()
        .flat_map(|p| tree_kernel(p.tree()).vectors().to_vec())
        .map(|v| lift(&v, t))
        .collect();
    out.record_result(
        "kernel is the sum of S-part kernels",
        lifted.and_then(|l| Ok(l.len() == nullity && span_equal(&l, d.kernel().vectors())?)),
        |&ok| ok,
    );
    out.record_result("null basis", tree_null_basis(t), |b| {
        b.len() == nullity && b.iter().all(|v| v.vector.is_signed_unit())
    });
    out.record_result("range basis", tree_range_basis(t), |b| b.len() == rank);

    if let (true, Some(o)) = (d.is_s_tree(), &oracle) {
        let supp_ids = d.supp();
        let core_ids = d.core();
        out.record(
            "Supp is the unique max independent set",
            o.max_independent_sets == vec![supp_ids.clone()],
        );
        out.record(
            "Core is the unique min vertex cover",
            o.min_vertex_covers == vec![core_ids.clone()],
        );
        out.record(
            "max matching edges meet Core once",
            o.matchings.iter().all(|mm| {
                mm.iter().all(|(a, b)| {
                    core_ids.binary_search(a).is_ok() != core_ids.binary_search(b).is_ok()
                })
            }),
        );
        out.record(
            "each supported vertex missed by a max matching",
            supp_ids.iter().all(|&v| o.some_matching_misses(v)),
        );
    }
    out.0
}

/// Pass/fail counts per check over a set of trees.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub trees: usize,
    /// name → (passed, failed)
    pub checks: BTreeMap<&'static str, (usize, usize)>,
    /// The first failing tree (edge list) and what failed.
    pub first_failure: Option<(String, String)>,
}

impl Tally {
    pub fn add_tree(&mut self, t: &Tree, outcomes: &[CheckOutcome]) {
        self.trees += 1;
        for o in outcomes {
            let e = self.checks.entry(o.name).or_default();
            if o.passed {
                e.0 += 1;
            } else {
                e.1 += 1;
                if self.first_failure.is_none() {
                    let what = match &o.detail {
                        Some(d) => format!("{}: {d}", o.name),
                        None => o.name.to_string(),
                    };
                    self.first_failure = Some((t.to_edge_list(), what));
                }
            }
        }
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.trees += other.trees;
        for (k, (p, f)) in other.checks {
            let e = self.checks.entry(k).or_default();
            e.0 += p;
            e.1 += f;
        }
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
        self
    }

    pub fn failures(&self) -> usize {
        self.checks.values().map(|&(_, f)| f).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }
}

/// One tally per order `1..=k`, over all labeled trees.
pub fn exhaustive(k: usize, brute_limit: usize) -> Vec<(usize, Tally)> {
    (1..=k)
        .map(|n| {
            let tally = if n < 3 {
                enumerate_trees(n).fold(Tally::default(), |mut acc, t| {
                    acc.add_tree(&t, &check_tree(&t, brute_limit));
                    acc
                })
            } else {
                (0..n)
                    .into_par_iter()
                    .map(|p| {
                        enumerate_trees_with_prefix(n, &[p]).fold(Tally::default(), |mut acc, t| {
                            acc.add_tree(&t, &check_tree(&t, brute_limit));
                            acc
                        })
                    })
                    .collect::<Vec<_>>()
                    .into_iter()
                    .fold(Tally::default(), Tally::merge)
            };
            (n, tally)
        })
        .collect()
}

/// Renders tallies as a table: one line per scope, then one per check.
pub fn render_table(scopes: &[(String, Tally)]) -> String {
    let mut out = String::new();
    let mut total = Tally::default();
    for (label, t) in scopes {
        let status = if t.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{label:<12} trees {:>8}  failures {:>6}  {status}",
            t.trees,
            t.failures()
        );
        if let Some((tree, what)) = &t.first_failure {
            let _ = writeln!(
                out,
                "  first failure: {what}\n  tree: {}",
                tree.trim_end().replace('\n', ", ")
            );
        }
        total = total.merge(t.clone());
    }
    out.push('\n');
    for name in CHECKS {
        let (p, f) = total.checks.get(name).copied().unwrap_or((0, 0));
        let status = if f > 0 {
            "FAIL"
        } else if p == 0 {
            "n/a"
        } else {
            "PASS"
        };
        let _ = writeln!(out, "{name:<48} {p:>8} passed {f:>6} failed  {status}");
    }
    out
}

/// A worked example reproduced on a fixture.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn fixture_check(name: &str, r: Result<(bool, String)>) -> FixtureCheck {
    match r {
        Ok((passed, detail)) => FixtureCheck {
            name: name.into(),
            passed,
            detail,
        },
        Err(e) => FixtureCheck {
            name: name.into(),
            passed: false,
            detail: e.to_string(),
        },
    }
}

fn sets<'a>(it: impl Iterator<Item = &'a [VertexId]>) -> Vec<Vec<VertexId>> {
    it.map(<[VertexId]>::to_vec).collect()
}

/// The worked examples on E1, E2, E3, P5 and the stellare figure, then the
/// full per-tree suite on each fixture.
pub fn verify_fixtures() -> (Vec<FixtureCheck>, Vec<(String, Tally)>) {
    let e1 = fixtures::e1();
    let e2 = fixtures::e2();
    let e3 = fixtures::e3();
    let mut checks = Vec::new();

    checks.push(fixture_check("E1 support and core", {
        let d = decompose(&e1);
        Ok((
            d.supp() == ids([2, 3, 4, 5, 7, 8]) && d.core() == ids([1, 6]),
            format!("supp {:?}, core {:?}", d.supp(), d.core()),
        ))
    }));
    checks.push(fixture_check("E1 nullity and rank", {
        report_for(&decompose(&e1)).map(|r| {
            (
                r.nullity.oracle == 4 && r.rank.oracle == 4,
                format!("nullity {}, rank {}", r.nullity.oracle, r.rank.oracle),
            )
        })
    }));
    checks.push(fixture_check("E1 null basis spans the listed kernel", {
        (|| {
            let listed: Vec<VertexVector> = fixtures::E1_KERNEL
                .iter()
                .map(|row| VertexVector::from_ints(&e1, row))
                .collect::<Result<_>>()?;
            let basis: Vec<VertexVector> = tree_null_basis(&e1)?
                .into_iter()
                .map(|b| b.vector)
                .collect();
            Ok((
                span_equal(&basis, &listed)?,
                format!("{} vectors", basis.len()),
            ))
        })()
    }));
    checks.push(fixture_check("E2 S-parts and N-parts", {
        let d = decompose(&e2);
        let s = sets(d.s_parts().iter().map(|p| p.vertices()));
        let n = sets(d.n_parts().components().iter().map(|p| p.ids()));
        Ok((
            s == vec![ids([1, 2, 3]), ids([4, 5, 6, 7, 8]), ids([9, 10, 11, 12])]
                && n == vec![ids([13, 14]), ids([15, 16, 17, 18])],
            format!("S-parts {s:?}, N-parts {n:?}"),
        ))
    }));
    checks.push(fixture_check("E2 invariants", {
        report_for(&decompose(&e2)).map(|r| {
            (
                (r.rank.oracle, r.nullity.oracle, r.nu.oracle, r.alpha.oracle) == (14, 4, 7, 11),
                format!(
                    "rank {}, nullity {}, nu {}, alpha {}",
                    r.rank.oracle, r.nullity.oracle, r.nu.oracle, r.alpha.oracle
                ),
            )
        })
    }));
    checks.push(fixture_check("E2 null basis spans the listed basis", {
        (|| {
            let listed: Vec<VertexVector> = fixtures::E2_KERNEL
                .iter()
                .map(|pairs| {
                    let p: Vec<(VertexId, i64)> =
                        pairs.iter().map(|&(v, c)| (VertexId(v), c)).collect();
                    VertexVector::from_sparse(&e2, &p)
                })
                .collect::<Result<_>>()?;
            let basis: Vec<VertexVector> = tree_null_basis(&e2)?
                .into_iter()
                .map(|b| b.vector)
                .collect();
            Ok((
                basis.len() == 4 && span_equal(&basis, &listed)?,
                format!("{} vectors", basis.len()),
            ))
        })()
    }));
    checks.push(fixture_check("E2 range basis matches the listed basis", {
        tree_range_basis(&e2).map(|r| {
            let mut got: Vec<Vec<VertexId>> = r.vectors.iter().map(VertexVector::support).collect();
            let mut listed: Vec<Vec<VertexId>> = fixtures::E2_RANGE
                .iter()
                .map(|s| ids(s.iter().copied()))
                .collect();
            got.sort();
            listed.sort();
            (got == listed, format!("{} vectors", r.vectors.len()))
        })
    }));
    checks.push(fixture_check("E3 atoms and bond edge", {
        let a = decompose(&e3).a_set();
        let atoms = sets(a.atoms().iter().map(|p| p.vertices()));
        Ok((
            atoms == vec![ids([1, 2, 3]), ids([4, 5, 6])]
                && a.bond_edges() == [(VertexId(2), VertexId(5))],
            format!("atoms {atoms:?}, bonds {:?}", a.bond_edges()),
        ))
    }));
    checks.push(fixture_check("E3 maximum matchings", {
        let m = matching::count_max_matchings(&e3);
        Ok((m == BigUint::from(4u32), format!("m = {m}")))
    }));
    checks.push(fixture_check("P5 basic vector", {
        (|| {
            let p5 = Tree::path(1, 5);
            let b = crate::bases::sbsa(&p5, VertexId(1), ChoiceRule::Ascending)?;
            let v = crate::bases::basic_vector(&b)?.vector;
            Ok((v.to_ints() == Some(vec![1, 0, -1, 0, 1]), format!("{v}")))
        })()
    }));
    checks.push(fixture_check("stellare figure identities", {
        crate::ops::stellare_invariants(
            &fixtures::stellare_figure_base(),
            &fixtures::STELLARE_FIGURE_KS,
        )
        .map(|r| {
            (
                true,
                format!("order {}, nullity {}", r.order, r.nullity.oracle),
            )
        })
    }));

    let mut tallies = Vec::new();
    for (name, t) in [("E1", e1), ("E2", e2), ("E3", e3)] {
        let mut tally = Tally::default();
        tally.add_tree(&t, &check_tree(&t, 18));
        tallies.push((name.to_string(), tally));
    }
    (checks, tallies)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_check_passes_on_fixtures() {
        let (checks, tallies) = verify_fixtures();
        for c in &checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
        for (name, t) in &tallies {
            assert!(t.passed(), "{name}: {:?}", t.first_failure);
        }
    }

    #[test]
    fn small_sweep_passes() {
        for (n, t) in exhaustive(6, 16) {
            assert!(t.passed(), "n = {n}: {:?}", t.first_failure);
            assert_eq!(t.trees, if n <= 2 { 1 } else { n.pow(n as u32 - 2) });
        }
    }

    #[test]
    fn table_lists_every_check() {
        let table = render_table(
            &exhaustive(4, 16)
                .into_iter()
                .map(|(n, t)| (format!("n={n}"), t))
                .collect::<Vec<_>>(),
        );
        for name in CHECKS {
            assert!(table.contains(name));
        }
        assert!(!table.contains("FAIL"));
    }
}
