//! Graph families used by the benchmarks.

use cliquealg::WeightedGraph;

pub fn cycle(n: u32) -> WeightedGraph {
    let edges: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
    WeightedGraph::unit(n, &edges).expect("valid cycle")
}

pub fn complete(n: u32) -> WeightedGraph {
    let mut edges = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            edges.push((a, b));
        }
    }
    WeightedGraph::unit(n, &edges).expect("valid complete graph")
}

pub fn corpus(name: &str) -> WeightedGraph {
    cliquealg::corpus::load(name).expect("known corpus name").expect("valid corpus file")
}
