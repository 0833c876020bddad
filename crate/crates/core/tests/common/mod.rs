#![allow(dead_code)]

use proptest::prelude::*;
use raag_core::{Letter, SimplicialGraph, VertexId, Word};

/// Graph on `v1..vn` with edges chosen by `mask` bits.
pub fn graph_from_mask(n: usize, mask: u64) -> SimplicialGraph {
    let labels = (1..=n).map(|i| VertexId::new(format!("v{i}")).unwrap()).collect();
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    SimplicialGraph::new(labels, edges).unwrap()
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = SimplicialGraph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, m)| graph_from_mask(n, m))
}

pub fn arb_word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..2 * rank, 0..=max_len)
        .prop_map(|codes| codes.into_iter().map(Letter::from_code).collect())
}

pub fn arb_graph_and_word(max_n: usize, max_len: usize) -> impl Strategy<Value = (SimplicialGraph, Word)> {
    arb_graph(max_n).prop_flat_map(move |g| {
        let n = g.vertex_count();
        (Just(g), arb_word(n, max_len))
    })
}

/// Random tree on `n` vertices from a parent sequence.
pub fn arb_tree(max_n: usize) -> impl Strategy<Value = SimplicialGraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1)).prop_map(move |parents| {
            let labels = (1..=n).map(|i| VertexId::new(format!("v{i}")).unwrap()).collect();
            let edges: Vec<(usize, usize)> =
                parents.iter().enumerate().map(|(i, p)| (p.index(i + 1), i + 1)).collect();
            SimplicialGraph::new(labels, edges).unwrap()
        })
    })
}
