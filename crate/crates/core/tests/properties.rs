use proptest::prelude::*;

mod common;
use common::*;

use ktdom::domatic::zelinka_floor;
use ktdom::generators::{complete, complete_bipartite, gnp, k_join, JoinRule};
use ktdom::{
    d_oracle, d_xk, gamma_oracle, gamma_xk, io, is_ktuple_dominating, kjoin_decomposition_exists,
    Graph, Mode, VertexSet,
};

const CASES: u32 = 1000;

/// The two-case definition, written out literally.
fn two_case(g: &Graph, s: &VertexSet, k: usize) -> bool {
    (0..g.n()).all(|v| {
        let inside = (0..g.n())
            .filter(|&u| s.contains(u) && g.is_adjacent(u, v))
            .count();
        if s.contains(v) {
            inside >= k - 1
        } else {
            inside >= k
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn superset_closure(input in superset_input()) {
        common::superset_closure(input)?;
    }

    #[test]
    fn monotone_in_k(input in graph_and_k()) {
        common::monotone_in_k(input)?;
    }

    #[test]
    fn complement_is_an_involution(input in graph_bits(1, 12)) {
        complement_involution(input)?;
    }

    #[test]
    fn solving_is_deterministic(input in determinism_input()) {
        determinism(input)?;
    }

    #[test]
    fn certificates_are_sound(input in graph_and_k()) {
        certificate_soundness(input)?;
    }

    #[test]
    fn uniform_test_matches_two_case_definition((n, bits) in graph_bits(1, 8), k in 1usize..=4) {
        let g = graph_from_bits(n, &bits);
        for mask in 0..1u64 << n {
            let s = subset(n, mask);
            prop_assert_eq!(is_ktuple_dominating(&g, &s, k).unwrap(), two_case(&g, &s, k));
        }
    }

    #[test]
    fn solvers_match_oracles((n, bits) in graph_bits(1, 8), k in 1usize..=3) {
        let g = graph_from_bits(n, &bits);
        for mode in [Mode::Closed, Mode::Open] {
            if gate(&g, k, mode) {
                prop_assert_eq!(gamma_xk(&g, k, mode).unwrap().value, gamma_oracle(&g, k, mode).unwrap().value);
                prop_assert_eq!(d_xk(&g, k, mode).unwrap().value, d_oracle(&g, k, mode).unwrap().value);
            }
        }
    }

    #[test]
    fn domatic_bounds((n, bits) in graph_bits(1, 9), k in 1usize..=3) {
        let g = graph_from_bits(n, &bits);
        if !gate(&g, k, Mode::Closed) {
            return Ok(());
        }
        let delta = g.min_degree();
        let gamma = gamma_xk(&g, k, Mode::Closed).unwrap();
        let d = d_xk(&g, k, Mode::Closed).unwrap();

        prop_assert!(gamma.value * d.value <= n);
        if gamma.value * d.value == n {
            prop_assert!(d.witness.classes.iter().all(|c| c.len() == gamma.value));
        }

        prop_assert!(d.value <= (delta + 1) / k);
        if d.value * k == delta + 1 {
            for v in (0..n).filter(|&v| g.degree(v) == delta) {
                let closed = g.closed_neighbors(v);
                prop_assert!(d.witness.classes.iter().all(|c| c.intersection_len(&closed) == k));
            }
        }

        if let Some(floor) = zelinka_floor(&g, k) {
            prop_assert!(d.value >= floor);
        }

        if gate(&g, k, Mode::Open) {
            let dt = d_xk(&g, k, Mode::Open).unwrap().value;
            prop_assert!(dt <= d.value);
            prop_assert!(d.value <= 2 * dt + 1);
        }
    }

    #[test]
    fn bipartite_gamma_floor(a in 1usize..=5, b in 1usize..=5, bits in prop::collection::vec(any::<bool>(), 25), k in 2usize..=4) {
        let edges = (0..a).flat_map(|u| (0..b).map(move |v| (u, v)))
            .filter(|&(u, v)| bits[u * 5 + v])
            .map(|(u, v)| (u, a + v));
        let g = Graph::from_edges(a + b, edges).unwrap();
        prop_assert!(g.is_bipartite());
        if gate(&g, k, Mode::Closed) {
            let gamma = gamma_xk(&g, k, Mode::Closed).unwrap().value;
            prop_assert!(gamma >= 2 * k - 2);
            if gamma == 2 * k - 2 {
                prop_assert!(g == complete_bipartite(k - 1, k - 1).unwrap());
            }
        }
    }

    #[test]
    fn min_decomposition_equals_gamma((n, bits) in graph_bits(1, 7), k in 1usize..=3) {
        let g = graph_from_bits(n, &bits);
        if !gate(&g, k, Mode::Closed) {
            return Ok(());
        }
        let gamma = gamma_xk(&g, k, Mode::Closed).unwrap().value;
        let min_t = (1..=n).find(|&t| kjoin_decomposition_exists(&g, k, t).unwrap().is_some());
        prop_assert_eq!(min_t, Some(gamma));
        if let Some(t) = min_t {
            let witness = kjoin_decomposition_exists(&g, k, t).unwrap().unwrap();
            prop_assert!(is_ktuple_dominating(&g, &witness, k).unwrap());
            prop_assert!(g.induced_min_degree(&witness).unwrap() >= k - 1);
        }
    }

    #[test]
    fn join_with_single_vertex_adds_one_neighbor((n, bits) in graph_bits(1, 8)) {
        let h = graph_from_bits(n, &bits);
        let j = k_join(&complete(1).unwrap(), &h, 1, JoinRule::All).unwrap();
        prop_assert!(j.check_invariants());
        for v in 0..n {
            prop_assert_eq!(j.degree(v + 1), h.degree(v) + 1);
        }
    }

    #[test]
    fn edge_list_round_trip((n, bits) in graph_bits(1, 12)) {
        let g = graph_from_bits(n, &bits);
        let text = io::write_graph(&g);
        let back = io::read_graph(&text).unwrap();
        prop_assert!(back == g);
        prop_assert_eq!(io::write_graph(&back), text);
    }
}

#[test]
fn gamma_matches_oracle_on_seeded_samples() {
    for seed in 0..200 {
        let g = gnp(8, 0.5, seed).unwrap();
        for k in 1..=3 {
            for mode in [Mode::Closed, Mode::Open] {
                if gate(&g, k, mode) {
                    assert_eq!(
                        gamma_xk(&g, k, mode).unwrap().value,
                        gamma_oracle(&g, k, mode).unwrap().value,
                        "seed {seed}, k {k}, {mode}"
                    );
                }
            }
        }
    }
}

#[test]
fn domatic_matches_oracle_on_seeded_samples() {
    for seed in 0..100 {
        let g = gnp(9, 0.7, seed).unwrap();
        for k in 1..=2 {
            for mode in [Mode::Closed, Mode::Open] {
                if gate(&g, k, mode) {
                    assert_eq!(
                        d_xk(&g, k, mode).unwrap().value,
                        d_oracle(&g, k, mode).unwrap().value,
                        "seed {seed}, k {k}, {mode}"
                    );
                }
            }
        }
    }
}

#[test]
fn closed_domatic_can_exceed_twice_total() {
    // K3 at k = 1: three singleton dominating sets, but any two vertices are
    // needed to totally dominate.
    let g = complete(3).unwrap();
    assert_eq!(d_xk(&g, 1, Mode::Closed).unwrap().value, 3);
    assert_eq!(d_xk(&g, 1, Mode::Open).unwrap().value, 1);
}
