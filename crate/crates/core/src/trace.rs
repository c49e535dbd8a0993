//! Free partially commutative (trace) monoids and power series on them.
//!
//! Letters are the vertices of a graph; two letters commute exactly when
//! they are joined by an edge. Edge signs play no role here. Each trace is
//! stored by its lexicographically least representative, where letters are
//! ordered by ascending vertex id.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::{clique_indices, VertexId, WeightedGraph};
use crate::series::TruncatedSeries;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TraceError {
    #[error("letter {0} is not a vertex of the graph")]
    UnknownLetter(VertexId),
    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: u32, right: u32 },
}

/// A trace, by its canonical representative. Orders by weight, then
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TraceWord {
    weight: u32,
    letters: Vec<usize>,
}

impl TraceWord {
    pub fn unit() -> Self {
        TraceWord { weight: 0, letters: Vec::new() }
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Dense vertex indices of the canonical representative.
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn is_unit(&self) -> bool {
        self.letters.is_empty()
    }
}

/// The trace monoid of a graph together with the data needed to normalise.
#[derive(Debug, Clone)]
pub struct TraceMonoid<'g> {
    graph: &'g WeightedGraph,
}

impl<'g> TraceMonoid<'g> {
    pub fn new(graph: &'g WeightedGraph) -> Self {
        TraceMonoid { graph }
    }

    pub fn graph(&self) -> &WeightedGraph {
        self.graph
    }

    fn commute(&self, a: usize, b: usize) -> bool {
        self.graph.adjacent(a, b)
    }

    /// Lexicographically least representative of the class of `letters`:
    /// repeatedly take the least letter that commutes with everything
    /// still in front of it.
    pub fn normalize(&self, letters: &[usize]) -> TraceWord {
        let mut rest: Vec<usize> = letters.to_vec();
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut best: Option<usize> = None;
            for i in 0..rest.len() {
                let l = rest[i];
                if best.is_some_and(|b| rest[b] <= l) {
                    continue;
                }
                if rest[..i].iter().all(|&m| self.commute(m, l)) {
                    best = Some(i);
                }
            }
            out.push(rest.remove(best.expect("the first letter is always available")));
        }
        let weight = out.iter().map(|&i| self.graph.weight(i)).sum();
        TraceWord { weight, letters: out }
    }

    /// Normal form of a word given by user vertex ids.
    pub fn normalize_ids(&self, ids: &[VertexId]) -> Result<TraceWord, TraceError> {
        let letters = ids
            .iter()
            .map(|&id| self.graph.index_of(id).ok_or(TraceError::UnknownLetter(id)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.normalize(&letters))
    }

    pub fn multiply(&self, u: &TraceWord, v: &TraceWord) -> TraceWord {
        let mut letters = u.letters.clone();
        letters.extend_from_slice(&v.letters);
        self.normalize(&letters)
    }

    pub fn ids(&self, t: &TraceWord) -> Vec<VertexId> {
        t.letters.iter().map(|&i| self.graph.id(i)).collect()
    }

    pub fn render(&self, t: &TraceWord) -> String {
        if t.is_unit() {
            return "1".to_string();
        }
        t.letters
            .iter()
            .map(|&i| format!("x{}", self.graph.id(i)))
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Every trace of weight at most `bound`, by weight then lexicographically.
    pub fn enumerate(&self, bound: u32) -> Vec<TraceWord> {
        let mut by_weight: Vec<BTreeSet<TraceWord>> = vec![BTreeSet::new(); bound as usize + 1];
        by_weight[0].insert(TraceWord::unit());
        for w in 1..=bound as usize {
            let mut level = BTreeSet::new();
            for (letter, v) in self.graph.vertices().iter().enumerate() {
                let p = v.weight as usize;
                if p > w {
                    continue;
                }
                for t in &by_weight[w - p] {
                    let mut letters = t.letters.clone();
                    letters.push(letter);
                    level.insert(self.normalize(&letters));
                }
            }
            by_weight[w] = level;
        }
        by_weight.into_iter().flatten().collect()
    }

    /// `χ_M` restricted to weight at most `bound`.
    pub fn characteristic(&self, bound: u32) -> MonoidSeries {
        MonoidSeries {
            truncation: bound,
            entries: self.enumerate(bound).into_iter().map(|t| (t, BigInt::one())).collect(),
        }
    }

    /// `μ_M = Σ_Q (−1)^{|Q|} [Q]` over all cliques, truncated at `bound`.
    pub fn clique_series(&self, bound: u32) -> MonoidSeries {
        let mut s = MonoidSeries::zero(bound);
        for clique in clique_indices(self.graph) {
            let sign = if clique.len() % 2 == 0 { 1 } else { -1 };
            s.add_term(self.normalize(&clique), BigInt::from(sign));
        }
        s
    }

    pub fn one(&self, bound: u32) -> MonoidSeries {
        let mut s = MonoidSeries::zero(bound);
        s.add_term(TraceWord::unit(), BigInt::one());
        s
    }

    /// Cauchy product; entries above the truncation are dropped.
    pub fn mul(&self, f: &MonoidSeries, h: &MonoidSeries) -> Result<MonoidSeries, TraceError> {
        if f.truncation != h.truncation {
            return Err(TraceError::TruncationMismatch { left: f.truncation, right: h.truncation });
        }
        let bound = f.truncation;
        let mut out = MonoidSeries::zero(bound);
        for (u, a) in &f.entries {
            for (v, b) in &h.entries {
                if u.weight + v.weight > bound {
                    // entries are sorted by weight
                    break;
                }
                out.add_term(self.multiply(u, v), a * b);
            }
        }
        Ok(out)
    }

    pub fn render_series(&self, f: &MonoidSeries) -> String {
        if f.entries.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (t, c)) in f.entries.iter().enumerate() {
            let negative = c < &BigInt::zero();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let magnitude = if negative { -c } else { c.clone() };
            if t.is_unit() {
                out.push_str(&magnitude.to_string());
            } else {
                if !magnitude.is_one() {
                    out.push_str(&format!("{magnitude}*"));
                }
                out.push_str(&self.render(t));
            }
        }
        out
    }
}

/// Integer-valued function on traces of weight at most `truncation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidSeries {
    truncation: u32,
    entries: BTreeMap<TraceWord, BigInt>,
}

impl MonoidSeries {
    pub fn zero(truncation: u32) -> Self {
        MonoidSeries { truncation, entries: BTreeMap::new() }
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    /// Adds `c` at `t`; ignored above the truncation.
    pub fn add_term(&mut self, t: TraceWord, c: BigInt) {
        if t.weight > self.truncation || c.is_zero() {
            return;
        }
        match self.entries.entry(t) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn get(&self, t: &TraceWord) -> BigInt {
        self.entries.get(t).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&TraceWord, &BigInt)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.entries.len() == 1
            && self.entries.iter().all(|(t, c)| t.is_unit() && c.is_one())
    }

    /// Entries that differ from the unit series.
    pub fn residual(&self) -> MonoidSeries {
        let mut r = self.clone();
        r.add_term(TraceWord::unit(), -BigInt::one());
        r
    }

    pub fn add(&self, other: &MonoidSeries) -> Result<MonoidSeries, TraceError> {
        if self.truncation != other.truncation {
            return Err(TraceError::TruncationMismatch {
                left: self.truncation,
                right: other.truncation,
            });
        }
        let mut out = self.clone();
        for (t, c) in &other.entries {
            out.add_term(t.clone(), c.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for TraceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.letters)
    }
}

pub fn trace_normal_form(ids: &[VertexId], g: &WeightedGraph) -> Result<TraceWord, TraceError> {
    TraceMonoid::new(g).normalize_ids(ids)
}

pub fn enumerate_traces(g: &WeightedGraph, bound: u32) -> Vec<TraceWord> {
    TraceMonoid::new(g).enumerate(bound)
}

pub fn clique_series(g: &WeightedGraph, bound: u32) -> MonoidSeries {
    TraceMonoid::new(g).clique_series(bound)
}

/// Pushforward along `trace ↦ z^{weight}`.
pub fn weight_map(f: &MonoidSeries) -> TruncatedSeries {
    let mut coefficients = vec![BigInt::zero(); f.truncation as usize + 1];
    for (t, c) in &f.entries {
        coefficients[t.weight as usize] += c;
    }
    TruncatedSeries::from_coefficients(coefficients)
}

#[derive(Debug, Clone)]
pub struct CartierFoataReport {
    pub truncation: u32,
    pub traces: usize,
    /// `μ_M · χ_M − 1`.
    pub left_residual: MonoidSeries,
    /// `χ_M · μ_M − 1`.
    pub right_residual: MonoidSeries,
}

impl CartierFoataReport {
    pub fn passed(&self) -> bool {
        self.left_residual.is_empty() && self.right_residual.is_empty()
    }
}

/// Checks `μ_M · χ_M = χ_M · μ_M = 1` through weight `bound`.
pub fn verify_cartier_foata(g: &WeightedGraph, bound: u32) -> CartierFoataReport {
    let m = TraceMonoid::new(g);
    let mu = m.clique_series(bound);
    let chi = m.characteristic(bound);
    let left = m.mul(&mu, &chi).expect("same truncation");
    let right = m.mul(&chi, &mu).expect("same truncation");
    CartierFoataReport {
        truncation: bound,
        traces: chi.len(),
        left_residual: left.residual(),
        right_residual: right.residual(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::clique_polynomial;
    use crate::series::hilbert_series;

    /// a..e = 1..5 with ab, ac, bc, cd commuting.
    fn section4() -> WeightedGraph {
        WeightedGraph::unit(5, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap()
    }

    fn pentagon() -> WeightedGraph {
        WeightedGraph::unit(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap()
    }

    #[test]
    fn normal_forms() {
        let g = section4();
        assert_eq!(trace_normal_form(&[2, 1], &g).unwrap(), trace_normal_form(&[1, 2], &g).unwrap());
        let m = TraceMonoid::new(&g);
        assert_eq!(m.ids(&trace_normal_form(&[2, 1], &g).unwrap()), vec![1, 2]);
        assert_eq!(m.ids(&trace_normal_form(&[5, 4], &g).unwrap()), vec![5, 4]);
        assert!(trace_normal_form(&[], &g).unwrap().is_unit());
        assert_eq!(trace_normal_form(&[9], &g), Err(TraceError::UnknownLetter(9)));
        // c moves to the front, d stays ahead of b and a
        assert_eq!(m.ids(&trace_normal_form(&[4, 3, 2, 1], &g).unwrap()), vec![3, 4, 1, 2]);
    }

    #[test]
    fn enumeration_counts() {
        let free = WeightedGraph::unit(2, &[]).unwrap();
        assert_eq!(enumerate_traces(&free, 2).len(), 7);
        let edge = WeightedGraph::unit(2, &[(1, 2)]).unwrap();
        assert_eq!(enumerate_traces(&edge, 2).len(), 6);
        let traces = enumerate_traces(&pentagon(), 2);
        let per_weight: Vec<usize> = (0..=2)
            .map(|w| traces.iter().filter(|t| t.weight() == w).count())
            .collect();
        assert_eq!(per_weight, vec![1, 5, 20]);
    }

    #[test]
    fn clique_series_of_section4_example() {
        let g = section4();
        let m = TraceMonoid::new(&g);
        assert_eq!(
            m.render_series(&m.clique_series(8)),
            "1 - x1 - x2 - x3 - x4 - x5 + x1*x2 + x1*x3 + x2*x3 + x3*x4 - x1*x2*x3"
        );
        let single = WeightedGraph::unit(1, &[]).unwrap();
        let m = TraceMonoid::new(&single);
        assert_eq!(m.render_series(&m.clique_series(3)), "1 - x1");
    }

    #[test]
    fn products() {
        let edge = WeightedGraph::unit(2, &[(1, 2)]).unwrap();
        let m = TraceMonoid::new(&edge);
        let mut a = MonoidSeries::zero(4);
        a.add_term(m.normalize_ids(&[2]).unwrap(), BigInt::one());
        let mut b = MonoidSeries::zero(4);
        b.add_term(m.normalize_ids(&[1]).unwrap(), BigInt::one());
        let ab = m.mul(&a, &b).unwrap();
        assert_eq!(ab.len(), 1);
        assert_eq!(ab.get(&m.normalize_ids(&[1, 2]).unwrap()), BigInt::one());
        let chi = m.characteristic(4);
        assert_eq!(m.mul(&chi, &m.one(4)).unwrap(), chi);
        assert!(m.mul(&chi, &m.one(3)).is_err());
    }

    #[test]
    fn cartier_foata_examples() {
        for g in [section4(), pentagon(), WeightedGraph::unit(3, &[]).unwrap()] {
            let report = verify_cartier_foata(&g, 8);
            assert!(report.passed());
        }
    }

    #[test]
    fn weight_map_examples() {
        let g = pentagon();
        let m = TraceMonoid::new(&g);
        assert_eq!(weight_map(&m.characteristic(6)), hilbert_series(&g, 6));
        assert_eq!(weight_map(&m.clique_series(6)), clique_polynomial(&g).to_series(6));
        assert!(weight_map(&m.one(5)).is_one());
    }
}
