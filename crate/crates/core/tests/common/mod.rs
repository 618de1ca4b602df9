#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use ktdom::domatic::zelinka_floor;
use ktdom::generators::{gnp, random_regular};
use ktdom::{
    d_xk, gamma_xk, is_domatic_partition, is_ktuple_dominating, is_ktuple_total_dominating,
    verify_all, zelinka_partition, Graph, Mode, VertexSet,
};

pub type Outcome = Result<(), TestCaseError>;

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Labeled graph on `n` vertices whose edge `i` (lexicographic) is present
/// when bit `i` of `mask` is set.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let bits: Vec<bool> = (0..n * (n.max(1) - 1) / 2)
        .map(|i| mask >> i & 1 == 1)
        .collect();
    graph_from_bits(n, &bits)
}

/// Every labeled graph on `1..=max_n` vertices.
pub fn all_graphs(max_n: usize) -> impl Iterator<Item = Graph> {
    (1..=max_n).flat_map(|n| (0..1u64 << (n * (n - 1) / 2)).map(move |m| graph_from_mask(n, m)))
}

/// `(n, adjacency bits)` for a labeled graph on `lo..=hi` vertices.
pub fn graph_bits(lo: usize, hi: usize) -> impl Strategy<Value = (usize, Vec<bool>)> {
    (lo..=hi).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(any::<bool>(), n * (n - 1) / 2),
        )
    })
}

pub fn subset(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1)).unwrap()
}

pub fn gate(g: &Graph, k: usize, mode: Mode) -> bool {
    g.min_degree() >= mode.required_degree(k)
}

pub fn superset_input() -> impl Strategy<Value = ((usize, Vec<bool>), usize, u64, u64)> {
    (graph_bits(1, 9), 1usize..=3, any::<u64>(), any::<u64>())
}

pub fn superset_closure(
    ((n, bits), k, mask, extra): ((usize, Vec<bool>), usize, u64, u64),
) -> Outcome {
    let g = graph_from_bits(n, &bits);
    let s = subset(n, mask);
    let mut bigger = s.clone();
    bigger.union_with(&subset(n, extra));
    if is_ktuple_dominating(&g, &s, k).unwrap() {
        prop_assert!(is_ktuple_dominating(&g, &bigger, k).unwrap());
    }
    if is_ktuple_total_dominating(&g, &s, k).unwrap() {
        prop_assert!(is_ktuple_total_dominating(&g, &bigger, k).unwrap());
    }
    Ok(())
}

pub fn graph_and_k() -> impl Strategy<Value = ((usize, Vec<bool>), usize)> {
    (graph_bits(1, 9), 1usize..=3)
}

pub fn monotone_in_k(((n, bits), k): ((usize, Vec<bool>), usize)) -> Outcome {
    let g = graph_from_bits(n, &bits);
    for mode in [Mode::Closed, Mode::Open] {
        if gate(&g, k + 1, mode) {
            let lo = gamma_xk(&g, k, mode).unwrap().value;
            let hi = gamma_xk(&g, k + 1, mode).unwrap().value;
            prop_assert!(lo <= hi, "{mode}: γ×{k} = {lo} > γ×{} = {hi}", k + 1);
            prop_assert!(d_xk(&g, k + 1, mode).unwrap().value <= d_xk(&g, k, mode).unwrap().value);
        }
    }
    Ok(())
}

pub fn complement_involution((n, bits): (usize, Vec<bool>)) -> Outcome {
    let g = graph_from_bits(n, &bits);
    let c = g.complement();
    prop_assert!(c.check_invariants());
    prop_assert!(c.complement() == g);
    for v in 0..n {
        prop_assert_eq!(g.degree(v) + c.degree(v), n - 1);
    }
    Ok(())
}

pub fn determinism_input() -> impl Strategy<Value = ((usize, Vec<bool>), usize, u64)> {
    (graph_bits(1, 8), 1usize..=3, any::<u64>())
}

pub fn determinism(((n, bits), k, seed): ((usize, Vec<bool>), usize, u64)) -> Outcome {
    let g = graph_from_bits(n, &bits);
    for mode in [Mode::Closed, Mode::Open] {
        if gate(&g, k, mode) {
            prop_assert_eq!(
                gamma_xk(&g, k, mode).unwrap(),
                gamma_xk(&g, k, mode).unwrap()
            );
            prop_assert_eq!(d_xk(&g, k, mode).unwrap(), d_xk(&g, k, mode).unwrap());
        }
    }
    prop_assert_eq!(verify_all(&g, k).unwrap(), verify_all(&g, k).unwrap());
    prop_assert!(gnp(n, 0.5, seed).unwrap() == gnp(n, 0.5, seed).unwrap());
    if n >= 4 && n % 2 == 0 {
        let a = random_regular(n, 3, seed).unwrap();
        prop_assert!(a.is_regular() && a.min_degree() == 3);
        prop_assert!(a == random_regular(n, 3, seed).unwrap());
    }
    Ok(())
}

pub fn certificate_soundness(((n, bits), k): ((usize, Vec<bool>), usize)) -> Outcome {
    let g = graph_from_bits(n, &bits);
    for mode in [Mode::Closed, Mode::Open] {
        if !gate(&g, k, mode) {
            continue;
        }
        let gamma = gamma_xk(&g, k, mode).unwrap();
        prop_assert_eq!(gamma.witness.len(), gamma.value);
        let ok = match mode {
            Mode::Closed => is_ktuple_dominating(&g, &gamma.witness, k).unwrap(),
            Mode::Open => is_ktuple_total_dominating(&g, &gamma.witness, k).unwrap(),
        };
        prop_assert!(ok);
        let d = d_xk(&g, k, mode).unwrap();
        prop_assert_eq!(d.witness.len(), d.value);
        prop_assert!(is_domatic_partition(&g, &d.witness).unwrap());
    }
    if gate(&g, k, Mode::Closed) && zelinka_floor(&g, k).is_some() {
        let p = zelinka_partition(&g, k).unwrap();
        prop_assert!(is_domatic_partition(&g, &p).unwrap());
    }
    Ok(())
}
