//! Deterministic tree sources: Prüfer decoding and enumeration, seeded
//! random trees, random S-trees built from stellare and S-coalescence, and
//! the unlabeled trees of a given order.
//!
//! The PRNG is ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`).

use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::decomposition::{classify, roles_of, Role};
use crate::error::{Error, Result};
use crate::ops::{s_coalescence, stellare, CoalescencePlan};
use crate::tree::{Tree, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Seed(pub u64);

impl Seed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

/// A Prüfer sequence for a tree on `[0, n)`, `n = sequence.len() + 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PruferCode {
    pub sequence: Vec<usize>,
}

impl PruferCode {
    pub fn order(&self) -> usize {
        self.sequence.len() + 2
    }
}

pub fn prufer_decode(code: &PruferCode) -> Result<Tree> {
    let n = code.order();
    if let Some(&entry) = code.sequence.iter().find(|&&x| x >= n) {
        return Err(Error::BadCode { entry, n });
    }
    let mut degree = vec![1usize; n];
    for &x in &code.sequence {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &code.sequence {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        edges.push((VertexId(leaf as u64), VertexId(x as u64)));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let a = leaves.pop_first().expect("two leaves remain");
    let b = leaves.pop_first().expect("two leaves remain");
    edges.push((VertexId(a as u64), VertexId(b as u64)));
    Tree::new((0..n as u64).map(VertexId), edges)
}

/// All labeled trees on `[0, n)`, one per Prüfer code in lexicographic order.
pub struct LabeledTrees {
    n: usize,
    code: Option<Vec<usize>>,
}

impl Iterator for LabeledTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.n <= 2 {
            let n = std::mem::replace(&mut self.n, usize::MAX);
            return match n {
                1 => Some(Tree::singleton(VertexId(0))),
                2 => Some(Tree::path(0, 2)),
                _ => None,
            };
        }
        let code = self.code.as_mut()?;
        let tree = prufer_decode(&PruferCode {
            sequence: code.clone(),
        })
        .expect("codes stay in range");
        let mut i = code.len();
        loop {
            if i == 0 {
                self.code = None;
                break;
            }
            i -= 1;
            code[i] += 1;
            if code[i] < self.n {
                break;
            }
            code[i] = 0;
        }
        Some(tree)
    }
}

/// `n^(n−2)` trees for `n ≥ 2`, the single vertex for `n = 1`, nothing
/// for `n = 0`.
pub fn enumerate_trees(n: usize) -> LabeledTrees {
    LabeledTrees {
        n: if n == 0 { usize::MAX } else { n },
        code: (n >= 3).then(|| vec![0; n - 2]),
    }
}

/// Trees whose Prüfer code starts with `prefix`, for sharding a sweep.
pub fn enumerate_trees_with_prefix(n: usize, prefix: &[usize]) -> impl Iterator<Item = Tree> + '_ {
    let free = n.saturating_sub(2).saturating_sub(prefix.len());
    let valid = n >= 3 && prefix.len() <= n - 2 && prefix.iter().all(|&x| x < n);
    let total = if valid { n.pow(free as u32) } else { 0 };
    (0..total).map(move |mut k| {
        let mut sequence = prefix.to_vec();
        let mut tail = vec![0; free];
        for slot in tail.iter_mut().rev() {
            *slot = k % n;
            k /= n;
        }
        sequence.extend(tail);
        prufer_decode(&PruferCode { sequence }).expect("codes stay in range")
    })
}

fn random_tree_with(n: usize, rng: &mut ChaCha8Rng) -> Tree {
    match n {
        0 | 1 => Tree::singleton(VertexId(0)),
        2 => Tree::path(0, 2),
        _ => {
            let sequence = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_decode(&PruferCode { sequence }).expect("codes stay in range")
        }
    }
}

/// A uniformly random labeled tree on `[0, n)`.
pub fn random_tree(n: usize, seed: Seed) -> Tree {
    random_tree_with(n, &mut seed.rng())
}

fn random_stellare(budget: usize, rng: &mut ChaCha8Rng) -> Tree {
    let m = rng.gen_range(1..=budget / 3);
    let base = random_tree_with(m, rng);
    let mut spare = budget - 3 * m;
    let ks: Vec<usize> = (0..m)
        .map(|_| {
            let extra = rng.gen_range(0..=spare.min(3));
            spare -= extra;
            2 + extra
        })
        .collect();
    stellare(&base, &ks).expect("every k is at least 2").tree
}

fn random_s_tree_with(budget: usize, rng: &mut ChaCha8Rng) -> Tree {
    if budget < 3 {
        return Tree::singleton(VertexId(1));
    }
    if budget < 5 || rng.gen_bool(0.5) {
        return random_stellare(budget, rng);
    }
    let r = rng.gen_range(2..=4usize.min((budget - 1) / 2));
    let share = budget.div_ceil(r);
    let parts = (0..r)
        .map(|_| {
            let part = random_s_tree_with(rng.gen_range(3..=share), rng);
            let supp: Vec<VertexId> = roles_of(&part)
                .iter()
                .enumerate()
                .filter(|(_, &role)| role == Role::Supp)
                .map(|(i, _)| part.id(i))
                .collect();
            let attach = supp[rng.gen_range(0..supp.len())];
            (part, attach)
        })
        .collect();
    s_coalescence(&CoalescencePlan::new(parts))
        .expect("parts are S-trees attached at supported vertices")
        .tree
}

/// A random S-tree with at most `max(budget, 1)` vertices (at least 3 when
/// `budget ≥ 3`), built by a random sequence of stellare and S-coalescence
/// steps and re-checked by [`classify`].
pub fn random_s_tree(budget: usize, seed: Seed) -> Tree {
    let t = random_s_tree_with(budget, &mut seed.rng());
    assert!(classify(&t).is_s_tree, "construction must yield an S-tree");
    t
}

/// One representative of every isomorphism class of trees on `n` vertices,
/// labeled `0..n`, in a deterministic order.
pub fn enumerate_unlabeled(n: usize) -> Vec<Tree> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Tree::singleton(VertexId(0))];
    for size in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for i in 0..t.order() {
                let mut edges = t.edge_ids();
                edges.push((t.id(i), VertexId(size as u64)));
                let grown =
                    Tree::new((0..=size as u64).map(VertexId), edges).expect("leaf extension");
                if seen.insert(grown.canonical_form()) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::invariant_report;

    #[test]
    fn prufer_examples() {
        assert_eq!(
            prufer_decode(&PruferCode { sequence: vec![] }).unwrap(),
            Tree::path(0, 2)
        );
        let t = prufer_decode(&PruferCode {
            sequence: vec![3, 3, 3],
        })
        .unwrap();
        assert_eq!(t, Tree::star(3, &[0, 1, 2, 4]).unwrap());
        assert_eq!(
            prufer_decode(&PruferCode {
                sequence: vec![0, 5]
            }),
            Err(Error::BadCode { entry: 5, n: 4 })
        );
    }

    #[test]
    fn cayley_counts() {
        assert_eq!(enumerate_trees(0).count(), 0);
        assert_eq!(enumerate_trees(1).count(), 1);
        assert_eq!(enumerate_trees(2).count(), 1);
        assert!(enumerate_trees(3).all(|t| (0..3).filter(|&i| t.degree(i) == 1).count() == 2));
        for n in 3..=7usize {
            let trees: Vec<Tree> = enumerate_trees(n).collect();
            assert_eq!(trees.len(), n.pow(n as u32 - 2));
            let distinct: HashSet<Vec<(VertexId, VertexId)>> =
                trees.iter().map(Tree::edge_ids).collect();
            assert_eq!(distinct.len(), trees.len());
        }
    }

    #[test]
    fn prefix_shards_cover_everything() {
        let n = 5;
        let all: Vec<Tree> = enumerate_trees(n).collect();
        let sharded: Vec<Tree> = (0..n)
            .flat_map(|p| enumerate_trees_with_prefix(n, &[p]).collect::<Vec<_>>())
            .collect();
        assert_eq!(all, sharded);
    }

    #[test]
    fn random_tree_is_reproducible() {
        assert_eq!(random_tree(8, Seed(7)), random_tree(8, Seed(7)));
        assert_eq!(random_tree(8, Seed(7)).order(), 8);
        assert_eq!(random_tree(1, Seed(1)).order(), 1);
    }

    #[test]
    fn random_s_trees_are_s_trees() {
        for s in 0..200 {
            let t = random_s_tree(30, Seed(s));
            assert!(t.order() <= 30 && t.order() >= 3);
            let r = invariant_report(&t).unwrap();
            assert_eq!(r.n_part_vertex_count, 0);
            assert_eq!(r.nullity.oracle, r.supp_size - r.core_size);
        }
        assert_eq!(random_s_tree(2, Seed(0)).order(), 1);
    }

    #[test]
    fn unlabeled_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| enumerate_unlabeled(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }
}
