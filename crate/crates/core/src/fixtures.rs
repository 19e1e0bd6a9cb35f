//! Trees used throughout the tests and the `verify --fixtures` command.

use crate::tree::{parse_tree, Tree};

pub const E1_EDGES: &str = include_str!("../fixtures/E1.edges");
pub const E2_EDGES: &str = include_str!("../fixtures/E2.edges");
pub const E3_EDGES: &str = include_str!("../fixtures/E3.edges");

/// Star 1;2,3,4,5 joined through 5 to the star 6;7,8. An S-tree.
pub fn e1() -> Tree {
    parse_tree(E1_EDGES).expect("E1 fixture parses")
}

/// 18 vertices: S-parts {1,2,3}, {4,5,6,7,8}, {9,10,11,12} and N-parts
/// {13,14}, {15,16,17,18}.
pub fn e2() -> Tree {
    parse_tree(E2_EDGES).expect("E2 fixture parses")
}

/// Double star on 1..=6 with centers 2 and 5.
pub fn e3() -> Tree {
    parse_tree(E3_EDGES).expect("E3 fixture parses")
}

/// The kernel basis of `A(E1)` printed alongside the example, in label order.
pub const E1_KERNEL: [[i64; 8]; 4] = [
    [0, 1, 0, 0, -1, 0, 0, 1],
    [0, 0, 1, 0, -1, 0, 0, 1],
    [0, 0, 0, 1, -1, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 1, -1],
];

/// `{e2 − e3, e10 − e11, e10 − e12, e6 − e7 + e8}` as sparse pairs.
pub const E2_KERNEL: [&[(u64, i64)]; 4] = [
    &[(2, 1), (3, -1)],
    &[(10, 1), (11, -1)],
    &[(10, 1), (12, -1)],
    &[(6, 1), (7, -1), (8, 1)],
];

/// `{e1, e_{2,3}, e4, e_{6,7}, e5, e_{7,8}, e9, e_{10,11,12}, e13, …, e18}`.
pub const E2_RANGE: [&[u64]; 14] = [
    &[1],
    &[2, 3],
    &[4],
    &[6, 7],
    &[5],
    &[7, 8],
    &[9],
    &[10, 11, 12],
    &[13],
    &[14],
    &[15],
    &[16],
    &[17],
    &[18],
];

/// The 6-vertex base tree of the stellare figure: 1-2, 1-3, 3-4, 3-5, 5-6.
pub fn stellare_figure_base() -> Tree {
    Tree::from_pairs(&[(1, 2), (1, 3), (3, 4), (3, 5), (5, 6)]).expect("valid tree")
}

/// Arities of the stellare figure, in label order.
pub const STELLARE_FIGURE_KS: [usize; 6] = [4, 3, 3, 2, 2, 3];
