mod common;

use proptest::prelude::*;

use fheavy::canon::canonical_code;
use fheavy::conditions::{is_2_heavy, is_family_f_heavy, satisfies_fan, theorem4_condition, theorem5_condition};
use fheavy::cycles::{find_cycle_through, find_hamilton_cycle};
use fheavy::io::{decode_graph6, encode_graph6, read_edge_list, write_edge_list};
use fheavy::patterns::catalog;
use fheavy::Graph;

fn graph_on(n: usize) -> impl Strategy<Value = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
        let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
    })
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(graph_on)
}

/// Two graphs of one order; half the time the second is a relabeling of
/// the first.
fn graph_pair(max_n: usize) -> impl Strategy<Value = (Graph, Graph)> {
    (1..=max_n).prop_flat_map(|n| {
        let perm = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
        (graph_on(n), graph_on(n), perm, any::<bool>())
            .prop_map(|(a, b, perm, same)| if same { (relabeled(&a, &perm), a) } else { (a, b) })
    })
}

fn relabeled(g: &Graph, perm: &[usize]) -> Graph {
    Graph::new(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn graph6_round_trip(g in graph(40)) {
        let s = encode_graph6(&g).unwrap();
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph(20)) {
        prop_assert_eq!(read_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_code_decides_isomorphism((a, b) in graph_pair(7)) {
        prop_assert_eq!(canonical_code(&a) == canonical_code(&b), common::isomorphic_by_permutation(&a, &b));
    }

    #[test]
    fn conditions_are_invariant_under_relabeling(g in graph(10), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = relabeled(&g, &perm);
        prop_assert_eq!(satisfies_fan(&g).verdict, satisfies_fan(&h).verdict);
        prop_assert_eq!(is_2_heavy(&g).verdict, is_2_heavy(&h).verdict);
        prop_assert_eq!(theorem4_condition(&g).verdict, theorem4_condition(&h).verdict);
        prop_assert_eq!(theorem5_condition(&g).verdict, theorem5_condition(&h).verdict);
        prop_assert_eq!(find_hamilton_cycle(&g).is_some(), find_hamilton_cycle(&h).is_some());
    }

    #[test]
    fn every_reported_violation_rechecks(g in graph(12)) {
        let reports = [
            satisfies_fan(&g),
            is_2_heavy(&g),
            theorem4_condition(&g),
            theorem5_condition(&g),
            is_family_f_heavy(&g, &catalog()).unwrap(),
        ];
        for r in reports {
            prop_assert_eq!(r.verdict, r.violations.is_empty(), "{}", r.condition);
            for v in &r.violations {
                prop_assert!(v.revalidate(&g), "{}: {}", r.condition, v);
            }
        }
    }

    #[test]
    fn hamiltonicity_matches_permutation_search(g in graph(8)) {
        let found = find_hamilton_cycle(&g);
        prop_assert_eq!(found.is_some(), common::hamiltonian_by_permutation(&g));
        if let Some(c) = found {
            prop_assert!(c.is_valid_in(&g));
            prop_assert_eq!(c.len(), g.n());
        }
    }

    #[test]
    fn cycle_through_covers_its_set(g in graph(9), mask in any::<u16>()) {
        let want: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        if let Some(c) = find_cycle_through(&g, &want) {
            prop_assert!(c.is_valid_in(&g));
            prop_assert!(want.iter().all(|&v| c.contains(v)));
        } else if want.len() == g.n() && g.n() >= 3 {
            prop_assert!(!common::hamiltonian_by_permutation(&g));
        }
    }
}
