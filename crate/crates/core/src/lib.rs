//! Null decomposition of trees: support and core of the adjacency kernel,
//! S-parts, N-parts and atoms, closed-form invariants with independent
//! cross-checks, stellare and S-coalescence, and {-1,0,1} null bases and
//! {0,1} range bases built from S-basic subtrees.

pub mod bases;
pub mod decomposition;
pub mod error;
pub mod export;
pub mod fixtures;
pub mod generators;
pub mod linalg;
pub mod matching;
pub mod ops;
pub mod tree;
pub mod verify;

pub use bases::{
    atom_forest_basis, atom_range_basis, basic_vector, basic_vector_at, check_null_basis,
    check_range_basis, s_basis_forest, sbsa, tree_null_basis, tree_range_basis, BasicVector,
    ChoiceRule, ForestBasis, RangeBasis, RangeRole, SBasicSubtree, Step,
};
pub use decomposition::{
    a_set, bouquet, classify, decompose, invariant_report, report_for, support_by_matching,
    support_core, Atom, AtomSet, Checked, Classification, DecimalUint, InvariantReport,
    NullDecomposition, Part, Role, SupportCore,
};
pub use error::{Error, Result};
pub use generators::{
    enumerate_trees, enumerate_unlabeled, prufer_decode, random_s_tree, random_tree, PruferCode,
    Seed,
};
pub use linalg::{
    adjacency_matrix, brute_force, full_support_vector, kernel, rank, rank_of_vectors, span_equal,
    tree_kernel, tree_rank, KernelBasis, OracleReport, RationalMatrix, DEFAULT_BRUTE_FORCE_LIMIT,
};
pub use matching::{
    alpha, count_max_matchings, gamma, matching_invariants, max_matchings, nu, MatchingInvariants,
};
pub use ops::{
    coalescence_invariants, i_supp, s_coalescence, s_decompose, s_decompose_step, stellare,
    stellare_bases, stellare_invariants, Coalescence, CoalescencePlan, CoalescenceReport,
    MatchingCountBound, PlanPart, Stellare, StellareBases, StellareLabel, StellareReport,
};
pub use tree::{
    in_out, lift, parse_tree, restrict, subtree_toward, Forest, Tree, TreeDocument, VertexId,
    VertexVector,
};
