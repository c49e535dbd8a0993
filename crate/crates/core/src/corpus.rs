//! Built-in example graphs, shipped as JSON documents.

use crate::graph::{parse_graph, GraphError, WeightedGraph};

const ENTRIES: &[(&str, &str)] = &[
    ("empty", include_str!("../corpus/empty.json")),
    ("k1", include_str!("../corpus/k1.json")),
    ("k1p2", include_str!("../corpus/k1p2.json")),
    ("pentagon", include_str!("../corpus/pentagon.json")),
    ("section4", include_str!("../corpus/section4.json")),
    ("k2", include_str!("../corpus/k2.json")),
    ("k3", include_str!("../corpus/k3.json")),
    ("k4", include_str!("../corpus/k4.json")),
    ("k5", include_str!("../corpus/k5.json")),
    ("c3", include_str!("../corpus/c3.json")),
    ("c4", include_str!("../corpus/c4.json")),
    ("c5", include_str!("../corpus/c5.json")),
    ("c6", include_str!("../corpus/c6.json")),
    ("c7", include_str!("../corpus/c7.json")),
    ("c8", include_str!("../corpus/c8.json")),
    ("p2", include_str!("../corpus/p2.json")),
    ("p3", include_str!("../corpus/p3.json")),
    ("p4", include_str!("../corpus/p4.json")),
    ("p5", include_str!("../corpus/p5.json")),
    ("p6", include_str!("../corpus/p6.json")),
    ("dodecahedron", include_str!("../corpus/dodecahedron.json")),
    ("mixed", include_str!("../corpus/mixed.json")),
    ("weighted", include_str!("../corpus/weighted.json")),
    ("wheel4", include_str!("../corpus/wheel4.json")),
    ("wheel5", include_str!("../corpus/wheel5.json")),
    ("free3", include_str!("../corpus/free3.json")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|(name, _)| *name)
}

pub fn source(name: &str) -> Option<&'static str> {
    ENTRIES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

/// Parses the named corpus graph; `None` for an unknown name.
pub fn load(name: &str) -> Option<Result<WeightedGraph, GraphError>> {
    source(name).map(parse_graph)
}

/// Every corpus graph, by name.
pub fn all() -> Vec<(&'static str, WeightedGraph)> {
    names()
        .map(|n| (n, load(n).expect("listed").expect("corpus files are valid")))
        .collect()
}
