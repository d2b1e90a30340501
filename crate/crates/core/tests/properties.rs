use indsublab::canon::{from_graph6, to_graph6};
use indsublab::counting::{count_cp_indsub, count_indsub, count_sub, count_sub_vc, HColoring};
use indsublab::enumerator::alternating_enumerator;
use indsublab::graph::slot_count;
use indsublab::modular::{numclique_from_modclique, mod_p_oracle, parsimony_check, Cnf3};
use indsublab::reductions::{lift_identity, LiftSpec, OracleHandle};
use indsublab::util::{mobius_transform, rat, zeta_transform, Rational};
use indsublab::{canonical_key, Graph, GraphParameter};
use num_traits::Zero;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let slots = slot_count(n);
        let top = if slots == 0 { 0 } else { u64::MAX >> (64 - slots) };
        (Just(n), 0..=top).prop_map(|(n, m)| Graph::from_slot_mask(n, m))
    })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn parameter() -> impl Strategy<Value = GraphParameter> {
    let all = GraphParameter::builtins();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn canonical_key_ignores_labels((g, perm) in graph_with_perm(8)) {
        prop_assert_eq!(canonical_key(&g).unwrap(), canonical_key(&g.permuted(&perm)).unwrap());
    }

    #[test]
    fn isomorphism_test_agrees_with_keys(a in graph(6), b in graph(6)) {
        let same = a.n() == b.n() && canonical_key(&a).unwrap() == canonical_key(&b).unwrap();
        prop_assert_eq!(a.is_isomorphic(&b), same);
    }

    #[test]
    fn graph6_round_trip(g in graph(10)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn edge_subgraph_extremes(g in graph(8)) {
        prop_assert_eq!(g.edge_subgraph(&g.edges()).unwrap(), g.clone());
        prop_assert_eq!(g.edge_subgraph(&[]).unwrap().edge_count(), 0);
    }

    #[test]
    fn complement_is_an_involution(g in graph(9)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), g.n() * g.n().saturating_sub(1) / 2);
    }

    #[test]
    fn mobius_inverts_zeta(values in prop::collection::vec(-50i64..50, 16)) {
        let mut v = values.clone();
        zeta_transform(&mut v);
        mobius_transform(&mut v);
        prop_assert_eq!(v, values);
    }

    #[test]
    fn census_matches_subset_sum(phi in parameter(), g in graph(9), k in 1usize..=5) {
        let mut direct = Rational::zero();
        if k <= g.n() {
            for a in indsublab::util::k_subsets(g.n(), k) {
                direct += phi.evaluate(&g.induced_subgraph(&a).unwrap()).unwrap();
            }
        }
        prop_assert_eq!(count_indsub(&phi, k, &g).unwrap(), direct);
    }

    #[test]
    fn enumerator_matches_naive_sum(phi in parameter(), g in graph(5)) {
        let edges = g.edges();
        let mut naive = Rational::zero();
        for mask in 0u64..1 << edges.len() {
            let v = phi.evaluate(&g.edge_subgraph_mask(&edges, mask)).unwrap();
            if mask.count_ones() % 2 == 0 { naive += v } else { naive -= v }
        }
        prop_assert_eq!(alternating_enumerator(&phi, &g).unwrap(), naive);
    }

    #[test]
    fn vertex_cover_counting_matches_brute_force(h in graph(4), g in graph(8)) {
        prop_assume!(h.vertex_cover_number().unwrap() <= 3);
        prop_assert_eq!(count_sub_vc(&h, &g).unwrap(), count_sub(&h, &g).unwrap());
    }

    #[test]
    fn lift_identity_holds(phi in parameter(), h in graph(3), c_mask in 0u64..8, sizes in prop::collection::vec(1usize..=2, 0..=2), seed in any::<u64>()) {
        prop_assume!(h.n() >= 1 && h.n() + sizes.iter().sum::<usize>() <= 6);
        let mut r = indsublab::util::rng(seed);
        let c = Graph::from_slot_mask(sizes.len() + 1, c_mask & ((1 << slot_count(sizes.len() + 1)) - 1));
        let parts = sizes.iter().map(|&s| indsublab::util::random_graph(&mut r, s)).collect();
        let spec = LiftSpec::new(c, parts).unwrap();
        let coloring = indsublab::verify::random_coloring(&mut r, &h, 2);
        let (a, b) = lift_identity(&phi, &coloring, &spec).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn cp_indsub_of_identity_coloring_is_the_value(phi in parameter(), h in graph(6)) {
        prop_assume!(h.n() >= 1);
        prop_assert_eq!(count_cp_indsub(&phi, &HColoring::identity(&h)).unwrap(), phi.evaluate(&h).unwrap());
    }

    #[test]
    fn clique_residues_from_divisibility(g in graph(6), k in 1usize..=3, pi in 0usize..3) {
        let p = [2u64, 3, 5][pi];
        let base = OracleHandle::indsub(GraphParameter::clique_indicator(), k);
        let oracle = mod_p_oracle(&base, p).unwrap();
        prop_assert_eq!(numclique_from_modclique(&g, k, p, &oracle).unwrap(), g.count_cliques(k) % p);
    }

    #[test]
    fn gadget_is_parsimonious(n in 1usize..=4, m in 1usize..=3, seed in any::<u64>()) {
        let mut r = indsublab::util::rng(seed);
        let phi = Cnf3::random(&mut r, n, m);
        let (cliques, sat) = parsimony_check(&phi, 1).unwrap();
        prop_assert_eq!(cliques, sat);
    }

    #[test]
    fn edge_count_indsub_counts_edges(g in graph(8), k in 2usize..=4) {
        // each edge lies in binom(n-2, k-2) of the k-sets
        let n = g.n();
        let want = if k > n { 0 } else { g.edge_count() as i64 * i64::try_from(indsublab::util::binomial(n - 2, k - 2)).unwrap() };
        prop_assert_eq!(count_indsub(&GraphParameter::edge_count(), k, &g).unwrap(), rat(want));
    }
}
