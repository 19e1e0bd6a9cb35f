//! Exhaustive enumeration over vertex and edge subsets of small trees.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tree::{Tree, VertexId};

pub const DEFAULT_BRUTE_FORCE_LIMIT: usize = 16;

/// Everything the enumerations found. Sets are sorted vertex lists, edges
/// are `(smaller, larger)` pairs; all lists are in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub nu: usize,
    pub matchings: Vec<Vec<(VertexId, VertexId)>>,
    pub max_independent_sets: Vec<Vec<VertexId>>,
    pub min_vertex_covers: Vec<Vec<VertexId>>,
    pub min_dominating_sets: Vec<Vec<VertexId>>,
}

impl OracleReport {
    pub fn alpha(&self) -> usize {
        self.max_independent_sets.first().map_or(0, Vec::len)
    }

    pub fn gamma(&self) -> usize {
        self.min_dominating_sets.first().map_or(0, Vec::len)
    }

    pub fn tau(&self) -> usize {
        self.min_vertex_covers.first().map_or(0, Vec::len)
    }

    pub fn m_count(&self) -> usize {
        self.matchings.len()
    }

    /// Whether some maximum matching leaves `v` unsaturated.
    pub fn some_matching_misses(&self, v: VertexId) -> bool {
        self.matchings
            .iter()
            .any(|m| m.iter().all(|&(a, b)| a != v && b != v))
    }

    /// Whether some maximum matching contains the edge `{u, v}`.
    pub fn some_matching_uses(&self, u: VertexId, v: VertexId) -> bool {
        let e = (u.min(v), u.max(v));
        self.matchings.iter().any(|m| m.contains(&e))
    }
}

fn mask_to_ids(t: &Tree, mask: u32) -> Vec<VertexId> {
    (0..t.order())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| t.id(i))
        .collect()
}

fn all_matchings(edges: &[(usize, usize)]) -> (usize, Vec<u32>) {
    fn go(
        edges: &[(usize, usize)],
        k: usize,
        used: u32,
        chosen: u32,
        size: usize,
        best: &mut (usize, Vec<u32>),
    ) {
        if k == edges.len() {
            if size > best.0 {
                *best = (size, vec![chosen]);
            } else if size == best.0 {
                best.1.push(chosen);
            }
            return;
        }
        // Not enough edges left to reach the current best.
        if size + (edges.len() - k) < best.0 {
            return;
        }
        let (a, b) = edges[k];
        if used >> a & 1 == 0 && used >> b & 1 == 0 {
            go(
                edges,
                k + 1,
                used | 1 << a | 1 << b,
                chosen | 1 << k,
                size + 1,
                best,
            );
        }
        go(edges, k + 1, used, chosen, size, best);
    }
    let mut best = (0, Vec::new());
    go(edges, 0, 0, 0, 0, &mut best);
    best
}

/// Enumerates all maximum matchings, maximum independent sets, minimum
/// vertex covers and minimum dominating sets of `t`.
pub fn brute_force(t: &Tree, limit: usize) -> Result<OracleReport> {
    let n = t.order();
    let hard = DEFAULT_BRUTE_FORCE_LIMIT.max(limit).min(24);
    if n > limit || n > hard {
        return Err(Error::TooLarge {
            order: n,
            limit: limit.min(hard),
        });
    }
    let edges: Vec<(usize, usize)> = t.edges().collect();

    let (nu, raw) = all_matchings(&edges);
    let mut matchings: Vec<Vec<(VertexId, VertexId)>> = raw
        .into_iter()
        .map(|m| {
            (0..edges.len())
                .filter(|&k| m >> k & 1 == 1)
                .map(|k| (t.id(edges[k].0), t.id(edges[k].1)))
                .collect()
        })
        .collect();
    matchings.sort();

    let closed: Vec<u32> = (0..n)
        .map(|i| t.neighbors(i).iter().fold(1u32 << i, |m, &j| m | 1 << j))
        .collect();
    let full: u32 = (1u32 << n) - 1;

    let mut independent = (0usize, Vec::new());
    let mut covers = (usize::MAX, Vec::new());
    let mut dominating = (usize::MAX, Vec::new());
    for mask in 0..=full {
        let size = mask.count_ones() as usize;
        let is_independent = edges
            .iter()
            .all(|&(a, b)| mask >> a & 1 == 0 || mask >> b & 1 == 0);
        let is_cover = edges
            .iter()
            .all(|&(a, b)| mask >> a & 1 == 1 || mask >> b & 1 == 1);
        let dominated = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .fold(0u32, |m, i| m | closed[i]);
        let keep = |slot: &mut (usize, Vec<u32>), better: bool, equal: bool| {
            if better {
                *slot = (size, vec![mask]);
            } else if equal {
                slot.1.push(mask);
            }
        };
        if is_independent {
            let s = independent.0;
            keep(&mut independent, size > s, size == s);
        }
        if is_cover {
            let s = covers.0;
            keep(&mut covers, size < s, size == s);
        }
        if dominated == full {
            let s = dominating.0;
            keep(&mut dominating, size < s, size == s);
        }
    }
    let sets = |masks: Vec<u32>| {
        let mut out: Vec<Vec<VertexId>> = masks.into_iter().map(|m| mask_to_ids(t, m)).collect();
        out.sort();
        out
    };
    Ok(OracleReport {
        nu,
        matchings,
        max_independent_sets: sets(independent.1),
        min_vertex_covers: sets(covers.1),
        min_dominating_sets: sets(dominating.1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::tree::ids;

    #[test]
    fn e3_matchings_avoid_the_bond_edge() {
        let r = brute_force(&fixtures::e3(), DEFAULT_BRUTE_FORCE_LIMIT).unwrap();
        assert_eq!(r.nu, 2);
        assert_eq!(r.m_count(), 4);
        assert!(!r.some_matching_uses(VertexId(2), VertexId(5)));
    }

    #[test]
    fn e1_unique_independent_set_and_cover() {
        let r = brute_force(&fixtures::e1(), DEFAULT_BRUTE_FORCE_LIMIT).unwrap();
        assert_eq!(r.max_independent_sets, vec![ids([2, 3, 4, 5, 7, 8])]);
        assert_eq!(r.min_vertex_covers, vec![ids([1, 6])]);
        assert_eq!(r.nu, 2);
        assert_eq!(r.m_count(), 11);
        assert_eq!(r.alpha(), 6);
        assert_eq!(r.gamma(), 2);
    }

    #[test]
    fn single_edge_and_vertex() {
        let r = brute_force(&Tree::path(1, 2), 16).unwrap();
        assert_eq!(r.m_count(), 1);
        assert_eq!(r.max_independent_sets.len(), 2);
        let r = brute_force(&Tree::singleton(VertexId(4)), 16).unwrap();
        assert_eq!(r.nu, 0);
        assert_eq!(r.m_count(), 1);
        assert_eq!(r.max_independent_sets, vec![ids([4])]);
        assert_eq!(r.min_vertex_covers, vec![vec![]]);
        assert_eq!(r.min_dominating_sets, vec![ids([4])]);
    }

    #[test]
    fn limit_is_enforced() {
        assert!(matches!(
            brute_force(&Tree::path(1, 17), 16),
            Err(Error::TooLarge {
                order: 17,
                limit: 16
            })
        ));
        assert!(brute_force(&fixtures::e2(), 18).is_ok());
    }
}
