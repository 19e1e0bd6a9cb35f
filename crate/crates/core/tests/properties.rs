use proptest::prelude::*;
use treenull::{
    a_set, atom_forest_basis, classify, decompose, i_supp, invariant_report, parse_tree,
    prufer_decode, random_s_tree, random_tree, s_coalescence, s_decompose, s_decompose_step,
    span_equal, stellare_invariants, support_by_matching, support_core, tree_kernel,
    tree_null_basis, tree_range_basis, CoalescencePlan, PruferCode, Seed, Tree, VertexId,
};

fn arb_tree(max: usize) -> impl Strategy<Value = Tree> {
    (1..=max, any::<u64>()).prop_map(|(n, s)| random_tree(n, Seed(s)))
}

fn arb_s_tree(max: usize) -> impl Strategy<Value = Tree> {
    (1..=max, any::<u64>()).prop_map(|(n, s)| random_s_tree(n, Seed(s)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn invariant_formulas_hold(t in arb_tree(40)) {
        let r = invariant_report(&t).unwrap();
        prop_assert_eq!(r.rank.oracle, 2 * r.nu.oracle);
        prop_assert_eq!(r.nu.oracle + r.nullity.oracle, r.alpha.oracle);
        prop_assert_eq!(support_by_matching(&t), support_core(&t).supp);
    }

    #[test]
    fn bases_are_exact(t in arb_tree(40)) {
        let nullity = tree_kernel(&t).dim();
        let null: Vec<_> = tree_null_basis(&t).unwrap().into_iter().map(|b| b.vector).collect();
        prop_assert_eq!(null.len(), nullity);
        prop_assert!(null.iter().all(|v| v.is_signed_unit() && v.is_null_vector_of(&t)));
        let range = tree_range_basis(&t).unwrap();
        prop_assert_eq!(range.len(), t.order() - nullity);
        prop_assert!(range.vectors.iter().all(|v| v.to_ints().unwrap().iter().all(|&x| x == 0 || x == 1)));
    }

    #[test]
    fn forest_bookkeeping_holds(t in arb_s_tree(40)) {
        for atom in a_set(&t).atoms() {
            let fb = atom_forest_basis(atom).unwrap();
            fb.check_mc().unwrap();
            prop_assert_eq!(fb.len(), atom.supp_count() - atom.core_count());
            prop_assert!(span_equal(&fb.vectors(), tree_kernel(atom.tree()).vectors()).unwrap());
        }
    }

    #[test]
    fn random_s_trees_have_no_n_part(t in arb_s_tree(60)) {
        let d = decompose(&t);
        prop_assert!(d.is_s_tree());
        prop_assert!(d.n_parts().is_empty());
    }

    #[test]
    fn prufer_codes_decode_to_trees(code in (3usize..12).prop_flat_map(|n| proptest::collection::vec(0..n, n - 2))) {
        let t = prufer_decode(&PruferCode { sequence: code.clone() }).unwrap();
        prop_assert_eq!(t.order(), code.len() + 2);
        for v in 0..t.order() {
            let appearances = code.iter().filter(|&&x| x == v).count();
            prop_assert_eq!(t.degree(v), appearances + 1);
        }
    }

    #[test]
    fn text_formats_round_trip(t in arb_tree(30)) {
        prop_assert_eq!(&parse_tree(&t.to_edge_list()).unwrap(), &t);
        prop_assert_eq!(&parse_tree(&t.to_json()).unwrap(), &t);
    }

    #[test]
    fn stellare_identities(t in arb_tree(10), ks in proptest::collection::vec(2usize..=5, 10)) {
        let r = stellare_invariants(&t, &ks[..t.order()]).unwrap();
        prop_assert_eq!(r.rank.oracle, 2 * t.order());
        prop_assert!(r.roles_as_predicted);
    }

    #[test]
    fn splitting_then_coalescing_restores_the_tree(t in arb_s_tree(40)) {
        for v in i_supp(&t).unwrap() {
            let forest = s_decompose_step(&t, v).unwrap();
            let copies: Vec<VertexId> = (1..=forest.len() as u64).map(|k| VertexId(t.max_id().0 + k)).collect();
            let parts: Vec<(Tree, VertexId)> = forest
                .components()
                .iter()
                .map(|p| {
                    let copy = *copies.iter().find(|c| p.contains(**c)).unwrap();
                    (p.clone(), copy)
                })
                .collect();
            let back = s_coalescence(&CoalescencePlan::new(parts)).unwrap();
            prop_assert!(back.tree.is_isomorphic(&t));
        }
    }

    #[test]
    fn full_splitting_ends_in_bricks(t in arb_s_tree(40)) {
        let bricks = s_decompose(&t).unwrap();
        for b in bricks.components() {
            prop_assert!(classify(b).is_s_tree);
            prop_assert!(i_supp(b).unwrap().is_empty());
        }
    }
}
