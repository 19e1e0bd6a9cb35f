//! Linear-time dynamic programs on trees: matching number and the number of
//! maximum matchings, independence number, domination number.
//!
//! Every DP roots the tree at its smallest label (index 0).

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingInvariants {
    pub nu: usize,
    #[serde(serialize_with = "as_decimal")]
    pub m_count: BigUint,
    pub alpha: usize,
    pub gamma: usize,
}

pub(crate) fn as_decimal<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn matching_invariants(t: &Tree) -> MatchingInvariants {
    let (nu, m_count) = max_matchings(t);
    MatchingInvariants {
        nu,
        m_count,
        alpha: alpha(t),
        gamma: gamma(t),
    }
}

/// Greedy leaf matching over the vertices marked in `keep`: scanning from
/// the leaves up, match a vertex to its parent when both are still free.
/// Optimal on every forest.
pub fn nu_on(t: &Tree, keep: &[bool]) -> usize {
    let mut matched = vec![false; t.order()];
    let mut size = 0;
    let mut seen = vec![false; t.order()];
    let mut parent = vec![None; t.order()];
    for root in 0..t.order() {
        if !keep[root] || seen[root] {
            continue;
        }
        let mut order = vec![root];
        seen[root] = true;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in t.neighbors(v) {
                if keep[w] && !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    order.push(w);
                }
            }
        }
        for &v in order.iter().rev() {
            if let Some(p) = parent[v] {
                if !matched[v] && !matched[p] {
                    matched[v] = true;
                    matched[p] = true;
                    size += 1;
                }
            }
        }
    }
    size
}

/// Matching number ν(t).
pub fn nu(t: &Tree) -> usize {
    nu_on(t, &vec![true; t.order()])
}

/// ν(t − v), for the vertex at index `v`.
pub fn nu_without(t: &Tree, v: usize) -> usize {
    let mut keep = vec![true; t.order()];
    keep[v] = false;
    nu_on(t, &keep)
}

/// (size, count) in the max-plus semiring with multiplicities.
#[derive(Clone)]
struct Best {
    size: usize,
    count: BigUint,
}

impl Best {
    fn unit() -> Best {
        Best {
            size: 0,
            count: BigUint::one(),
        }
    }

    fn times(&self, other: &Best) -> Best {
        Best {
            size: self.size + other.size,
            count: &self.count * &other.count,
        }
    }

    fn plus(a: Option<Best>, b: Option<Best>) -> Option<Best> {
        match (a, b) {
            (None, x) | (x, None) => x,
            (Some(a), Some(b)) => Some(match a.size.cmp(&b.size) {
                std::cmp::Ordering::Greater => a,
                std::cmp::Ordering::Less => b,
                std::cmp::Ordering::Equal => Best {
                    size: a.size,
                    count: a.count + b.count,
                },
            }),
        }
    }
}

/// ν(t) and the exact number of maximum matchings m(t).
pub fn max_matchings(t: &Tree) -> (usize, BigUint) {
    let n = t.order();
    let (order, parent) = t.rooted(0);
    // free[v]: v unmatched inside its subtree. taken[v]: v matched to a child.
    let mut free: Vec<Best> = vec![Best::unit(); n];
    let mut taken: Vec<Option<Best>> = vec![None; n];
    let mut best: Vec<Best> = vec![Best::unit(); n];
    for &v in order.iter().rev() {
        let children: Vec<usize> = t
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| parent[w] == Some(v))
            .collect();
        let k = children.len();
        let mut prefix = vec![Best::unit(); k + 1];
        for (i, &c) in children.iter().enumerate() {
            prefix[i + 1] = prefix[i].times(&best[c]);
        }
        let mut suffix = vec![Best::unit(); k + 1];
        for (i, &c) in children.iter().enumerate().rev() {
            suffix[i] = suffix[i + 1].times(&best[c]);
        }
        let mut tk: Option<Best> = None;
        for (i, &c) in children.iter().enumerate() {
            let mut edge = free[c].clone();
            edge.size += 1;
            let option = prefix[i].times(&edge).times(&suffix[i + 1]);
            tk = Best::plus(tk, Some(option));
        }
        free[v] = prefix[k].clone();
        taken[v] = tk;
        best[v] = Best::plus(Some(free[v].clone()), taken[v].clone()).expect("free is always set");
    }
    let root = best[0].clone();
    (root.size, root.count)
}

pub fn count_max_matchings(t: &Tree) -> BigUint {
    max_matchings(t).1
}

/// Independence number by the in/out DP.
pub fn alpha(t: &Tree) -> usize {
    let (order, parent) = t.rooted(0);
    let mut inc = vec![1usize; t.order()];
    let mut exc = vec![0usize; t.order()];
    for &v in order.iter().rev() {
        if let Some(p) = parent[v] {
            inc[p] += exc[v];
            exc[p] += inc[v].max(exc[v]);
        }
    }
    inc[0].max(exc[0])
}

/// Independence number as |V| − ν (König–Egerváry; trees are bipartite).
pub fn alpha_konig(t: &Tree) -> usize {
    t.order() - nu(t)
}

/// Domination number by the three-state DP.
pub fn gamma(t: &Tree) -> usize {
    const INF: usize = usize::MAX / 4;
    let n = t.order();
    let (order, parent) = t.rooted(0);
    // chosen: v in the set. covered: v out, dominated by a child.
    // waiting: v out, not dominated yet (the parent must be chosen).
    let mut chosen = vec![1usize; n];
    let mut covered = vec![INF; n];
    let mut waiting = vec![0usize; n];
    for &v in order.iter().rev() {
        let children = t
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| parent[w] == Some(v));
        let mut base = 0usize;
        let mut extra = INF;
        let mut any = false;
        for c in children {
            any = true;
            chosen[v] += chosen[c].min(covered[c]).min(waiting[c]);
            let m = chosen[c].min(covered[c]);
            base += m;
            extra = extra.min(chosen[c] - m);
            waiting[v] = (waiting[v] + covered[c]).min(INF);
        }
        covered[v] = if any { (base + extra).min(INF) } else { INF };
    }
    chosen[0].min(covered[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::{brute_force, DEFAULT_BRUTE_FORCE_LIMIT};
    use crate::tree::VertexId;

    fn check_against_oracle(t: &Tree) {
        let r = brute_force(t, 18).unwrap();
        let inv = matching_invariants(t);
        assert_eq!(inv.nu, r.nu);
        assert_eq!(nu(t), r.nu);
        assert_eq!(inv.m_count, BigUint::from(r.m_count()));
        assert_eq!(inv.alpha, r.alpha());
        assert_eq!(alpha_konig(t), r.alpha());
        assert_eq!(inv.gamma, r.gamma());
    }

    #[test]
    fn fixtures_match_oracle() {
        check_against_oracle(&fixtures::e1());
        check_against_oracle(&fixtures::e2());
        check_against_oracle(&fixtures::e3());
    }

    #[test]
    fn examples() {
        assert_eq!(nu(&fixtures::e1()), 2);
        assert_eq!(nu(&Tree::singleton(VertexId(1))), 0);
        assert_eq!(nu(&fixtures::e2()), 7);
        assert_eq!(count_max_matchings(&fixtures::e3()), BigUint::from(4u32));
        assert_eq!(count_max_matchings(&Tree::path(1, 2)), BigUint::one());
        assert_eq!(count_max_matchings(&fixtures::e1()), BigUint::from(11u32));
        assert_eq!((alpha(&fixtures::e1()), gamma(&fixtures::e1())), (6, 2));
        let k13 = Tree::star(1, &[2, 3, 4]).unwrap();
        assert_eq!((alpha(&k13), gamma(&k13)), (3, 1));
        assert_eq!(gamma(&fixtures::e3()), 2);
    }

    #[test]
    fn singleton() {
        let t = Tree::singleton(VertexId(3));
        let inv = matching_invariants(&t);
        assert_eq!((inv.nu, inv.alpha, inv.gamma), (0, 1, 1));
        assert_eq!(inv.m_count, BigUint::one());
        assert!(!num_traits::Zero::is_zero(&inv.m_count));
    }

    #[test]
    fn paths_match_oracle() {
        for n in 1..=DEFAULT_BRUTE_FORCE_LIMIT {
            check_against_oracle(&Tree::path(1, n));
        }
    }

    #[test]
    fn nu_without_on_p3() {
        let p = Tree::path(1, 3);
        assert_eq!(nu_without(&p, 0), 1);
        assert_eq!(nu_without(&p, 1), 0);
    }
}
