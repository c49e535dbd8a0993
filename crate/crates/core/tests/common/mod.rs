#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use cliquealg::graph::EdgeSigns;
use cliquealg::{VertexId, WeightedGraph};
use proptest::prelude::*;

pub fn pairs(n: u32) -> Vec<(VertexId, VertexId)> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            out.push((a, b));
        }
    }
    out
}

/// Graph on `1..=n` with the edges selected by `mask` from [`pairs`].
pub fn graph_from(weights: &[u32], mask: &[bool]) -> WeightedGraph {
    let edges: Vec<_> = pairs(weights.len() as u32)
        .into_iter()
        .zip(mask)
        .filter(|(_, &keep)| keep)
        .map(|(e, _)| e)
        .collect();
    WeightedGraph::weighted(weights, &edges).unwrap()
}

pub fn arb_graph(min_n: usize, max_n: usize, max_weight: u32) -> impl Strategy<Value = WeightedGraph> {
    (min_n..=max_n).prop_flat_map(move |n| {
        let m = n * n.saturating_sub(1) / 2;
        (prop::collection::vec(1..=max_weight, n), prop::collection::vec(any::<bool>(), m))
            .prop_map(|(w, mask)| graph_from(&w, &mask))
    })
}

pub fn arb_signed_graph(
    min_n: usize,
    max_n: usize,
    max_weight: u32,
) -> impl Strategy<Value = (WeightedGraph, EdgeSigns)> {
    arb_graph(min_n, max_n, max_weight).prop_flat_map(|g| {
        let m = g.edge_count();
        (Just(g), prop::collection::vec(0..2u8, m).prop_map(EdgeSigns))
    })
}

/// Every labelled graph on `1..=n` with all weight vectors from `1..=max_weight`.
pub fn all_graphs(n: usize, max_weight: u32) -> Vec<WeightedGraph> {
    let m = n * n.saturating_sub(1) / 2;
    let mut weight_vectors = vec![Vec::new()];
    for _ in 0..n {
        weight_vectors = weight_vectors
            .into_iter()
            .flat_map(|w: Vec<u32>| {
                (1..=max_weight).map(move |x| {
                    let mut w = w.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for weights in &weight_vectors {
        for mask in 0u32..(1 << m) {
            let bits: Vec<bool> = (0..m).map(|j| mask >> j & 1 == 1).collect();
            out.push(graph_from(weights, &bits));
        }
    }
    out
}

/// All words reachable from `w` by swapping adjacent commuting letters.
pub fn commutation_class(g: &WeightedGraph, w: &[usize]) -> BTreeSet<Vec<usize>> {
    let mut seen = BTreeSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(u) = queue.pop_front() {
        for i in 0..u.len().saturating_sub(1) {
            if u[i] != u[i + 1] && g.adjacent(u[i], u[i + 1]) {
                let mut v = u.clone();
                v.swap(i, i + 1);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    seen
}

/// Brute-force clique count: subsets of vertex indices that are pairwise adjacent.
pub fn clique_subsets(g: &WeightedGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    (0u32..(1 << n))
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|s| s.iter().enumerate().all(|(k, &a)| s[k + 1..].iter().all(|&b| g.adjacent(a, b))))
        .collect()
}
