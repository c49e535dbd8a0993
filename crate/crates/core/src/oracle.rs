//! Brute-force dimensions of the homogeneous components of `A(Γ)`.
//!
//! Degree `n` of the free algebra has one basis vector per word of degree
//! `n`; the ideal in that degree is spanned by the products `u·r·v` with `r`
//! a defining commutator. The dimension of `A_n` is the number of words
//! minus the rank of those products. Everything here is built from the
//! graph edges directly, with its own word indexing and exact elimination.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::freealg::NCPolynomial;
use crate::graph::{EdgeSigns, WeightedGraph};
use crate::series::TruncatedSeries;

pub const DEFAULT_WORD_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("degree {degree} has {words} words, above the cap of {cap}")]
    CapExceeded { degree: usize, words: BigInt, cap: usize, partial: TruncatedSeries },
    #[error("{given} edge signs for {edges} edges")]
    SignCount { given: usize, edges: usize },
}

/// A sparse integer row: column → nonzero coefficient.
pub type Row = BTreeMap<usize, BigInt>;

/// Words of one degree and the rows `u·r·v` spanning the ideal there.
#[derive(Debug, Clone)]
pub struct DegreeComponentBasis {
    pub degree: usize,
    /// Words as dense vertex indices, in the order they were generated.
    pub words: Vec<Vec<usize>>,
    pub relation_rows: Vec<Row>,
    index: HashMap<Vec<usize>, usize>,
}

/// Number of words of each degree up to `n`.
pub fn word_counts(g: &WeightedGraph, n: usize) -> Vec<BigInt> {
    let mut counts = vec![BigInt::zero(); n + 1];
    counts[0] = BigInt::one();
    for d in 1..=n {
        for v in g.vertices() {
            let w = v.weight as usize;
            if w <= d {
                let prev = counts[d - w].clone();
                counts[d] += prev;
            }
        }
    }
    counts
}

fn words_of_degree(weights: &[usize], n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn extend(weights: &[usize], left: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(current.clone());
            return;
        }
        for (l, &w) in weights.iter().enumerate() {
            if w <= left {
                current.push(l);
                extend(weights, left - w, current, out);
                current.pop();
            }
        }
    }
    extend(weights, n, &mut current, &mut out);
    out
}

impl DegreeComponentBasis {
    pub fn build(
        g: &WeightedGraph,
        signs: &EdgeSigns,
        degree: usize,
        cap: usize,
    ) -> Result<Self, OracleError> {
        if signs.len() != g.edge_count() {
            return Err(OracleError::SignCount { given: signs.len(), edges: g.edge_count() });
        }
        let count = word_counts(g, degree).pop().expect("nonempty");
        if count > BigInt::from(cap) {
            return Err(OracleError::CapExceeded {
                degree,
                words: count,
                cap,
                partial: TruncatedSeries::zero(0),
            });
        }
        let weights: Vec<usize> = g.vertices().iter().map(|v| v.weight as usize).collect();
        let words = words_of_degree(&weights, degree);
        let index: HashMap<Vec<usize>, usize> =
            words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();

        let mut seen = HashSet::new();
        let mut relation_rows = Vec::new();
        for (edge, &q) in g.edges().iter().zip(signs.as_slice()) {
            let (a, b) = (edge.a, edge.b);
            let rdeg = weights[a] + weights[b];
            if rdeg > degree {
                continue;
            }
            // x_a x_b − (−1)^q x_b x_a
            let other = if q == 0 { -1 } else { 1 };
            for i in 0..=degree - rdeg {
                for u in words_of_degree(&weights, i) {
                    for v in words_of_degree(&weights, degree - rdeg - i) {
                        let mut first = u.clone();
                        first.extend([a, b]);
                        first.extend(&v);
                        let mut second = u.clone();
                        second.extend([b, a]);
                        second.extend(&v);
                        let key = (index[&first], index[&second]);
                        if !seen.insert(key) {
                            continue;
                        }
                        let mut row = Row::new();
                        row.insert(key.0, BigInt::one());
                        *row.entry(key.1).or_insert_with(BigInt::zero) += other;
                        row.retain(|_, c| !c.is_zero());
                        if !row.is_empty() {
                            relation_rows.push(row);
                        }
                    }
                }
            }
        }
        Ok(DegreeComponentBasis { degree, words, relation_rows, index })
    }

    pub fn column(&self, word: &[usize]) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::default();
        for row in &self.relation_rows {
            e.insert(row.clone());
        }
        e
    }

    pub fn dimension(&self) -> usize {
        self.words.len() - self.echelon().rank()
    }

    /// Integer row for a homogeneous polynomial of this degree, cleared of
    /// denominators. `None` if some word has the wrong degree.
    pub fn row_of(&self, p: &NCPolynomial) -> Option<Row> {
        let lcm = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut row = Row::new();
        for (w, c) in p.terms() {
            let col = self.column(w.letters())?;
            let value = c.numer() * (&lcm / c.denom());
            *row.entry(col).or_insert_with(BigInt::zero) += value;
        }
        row.retain(|_, c| !c.is_zero());
        Some(row)
    }
}

/// Row echelon form over the integers, one pivot row per leading column.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    pivots: HashMap<usize, Row>,
}

fn normalize(row: &mut Row) {
    let g = row.values().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let lead_negative = row.values().next_back().is_some_and(|c| c.is_negative());
    if g.is_zero() {
        return;
    }
    let g = if lead_negative { -g } else { g };
    if !g.is_one() {
        for c in row.values_mut() {
            *c = &*c / &g;
        }
    }
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Fraction-free reduction of `row`; the remainder is zero exactly when
    /// `row` lies in the span.
    pub fn reduce(&self, mut row: Row) -> Row {
        row.retain(|_, c| !c.is_zero());
        let mut done = Row::new();
        while let Some((&col, _)) = row.iter().next_back() {
            let Some(pivot) = self.pivots.get(&col) else {
                // move the leading term aside and continue below it
                let (col, c) = row.pop_last().expect("nonempty");
                done.insert(col, c);
                continue;
            };
            let a = row[&col].clone();
            let p = &pivot[&col];
            let g = a.gcd(p);
            let (ma, mp) = (p / &g, &a / &g);
            for c in row.values_mut() {
                *c *= &ma;
            }
            for c in done.values_mut() {
                *c *= &ma;
            }
            for (k, c) in pivot {
                let entry = row.entry(*k).or_insert_with(BigInt::zero);
                *entry -= &mp * c;
            }
            row.retain(|_, c| !c.is_zero());
        }
        normalize(&mut done);
        done
    }

    /// Adds `row` to the span; returns whether the rank grew.
    pub fn insert(&mut self, row: Row) -> bool {
        let mut row = row;
        row.retain(|_, c| !c.is_zero());
        loop {
            let Some((&col, _)) = row.iter().next_back() else {
                return false;
            };
            match self.pivots.get(&col) {
                None => {
                    normalize(&mut row);
                    self.pivots.insert(col, row);
                    return true;
                }
                Some(pivot) => {
                    let a = row[&col].clone();
                    let p = &pivot[&col];
                    let g = a.gcd(p);
                    let (ma, mp) = (p / &g, &a / &g);
                    for c in row.values_mut() {
                        *c *= &ma;
                    }
                    for (k, c) in pivot {
                        let entry = row.entry(*k).or_insert_with(BigInt::zero);
                        *entry -= &mp * c;
                    }
                    row.retain(|_, c| !c.is_zero());
                    normalize(&mut row);
                }
            }
        }
    }

    pub fn contains(&self, row: &Row) -> bool {
        self.reduce(row.clone()).is_empty()
    }
}

/// `dim A_n` for the given edge signs, refusing more than `cap` words.
pub fn dimension_by_rank_capped(
    g: &WeightedGraph,
    signs: &EdgeSigns,
    n: usize,
    cap: usize,
) -> Result<usize, OracleError> {
    Ok(DegreeComponentBasis::build(g, signs, n, cap)?.dimension())
}

pub fn dimension_by_rank(g: &WeightedGraph, signs: &EdgeSigns, n: usize) -> Result<usize, OracleError> {
    dimension_by_rank_capped(g, signs, n, DEFAULT_WORD_CAP)
}

/// Dimensions through degree `n`. On a cap failure the error carries the
/// series of the degrees already computed.
pub fn oracle_hilbert_capped(
    g: &WeightedGraph,
    signs: &EdgeSigns,
    n: usize,
    cap: usize,
) -> Result<TruncatedSeries, OracleError> {
    let mut dims = Vec::with_capacity(n + 1);
    for d in 0..=n {
        match dimension_by_rank_capped(g, signs, d, cap) {
            Ok(dim) => dims.push(BigInt::from(dim)),
            Err(OracleError::CapExceeded { degree, words, cap, .. }) => {
                let partial = if dims.is_empty() {
                    TruncatedSeries::zero(0)
                } else {
                    TruncatedSeries::from_coefficients(dims)
                };
                return Err(OracleError::CapExceeded { degree, words, cap, partial });
            }
            Err(e) => return Err(e),
        }
    }
    Ok(TruncatedSeries::from_coefficients(dims))
}

pub fn oracle_hilbert(g: &WeightedGraph, signs: &EdgeSigns, n: usize) -> Result<TruncatedSeries, OracleError> {
    oracle_hilbert_capped(g, signs, n, DEFAULT_WORD_CAP)
}

/// Whether a homogeneous polynomial over the graph's letters lies in the
/// ideal. Inhomogeneous input is split by degree and each part tested.
pub fn in_ideal(g: &WeightedGraph, signs: &EdgeSigns, p: &NCPolynomial) -> Result<bool, OracleError> {
    let mut parts: BTreeMap<usize, NCPolynomial> = BTreeMap::new();
    for (w, c) in p.terms() {
        let d: usize = w.letters().iter().map(|&l| g.weight(l) as usize).sum();
        parts.entry(d).or_insert_with(NCPolynomial::zero).add_term(w.clone(), c.clone());
    }
    for (d, part) in parts {
        let basis = DegreeComponentBasis::build(g, signs, d, DEFAULT_WORD_CAP)?;
        let row = basis.row_of(&part).expect("degree checked");
        if !basis.echelon().contains(&row) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagon() -> WeightedGraph {
        WeightedGraph::unit(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap()
    }

    fn k3() -> WeightedGraph {
        WeightedGraph::unit(3, &[(1, 2), (2, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn pentagon_dimensions() {
        let g = pentagon();
        let b = DegreeComponentBasis::build(&g, &g.effective_signs(), 2, DEFAULT_WORD_CAP).unwrap();
        assert_eq!(b.words.len(), 25);
        assert_eq!(b.relation_rows.len(), 5);
        assert_eq!(b.dimension(), 20);
        assert_eq!(dimension_by_rank(&k3(), &EdgeSigns::zero(3), 3).unwrap(), 10);
        let free = WeightedGraph::unit(3, &[]).unwrap();
        for n in 0..5 {
            assert_eq!(dimension_by_rank(&free, &EdgeSigns::zero(0), n).unwrap(), 3usize.pow(n as u32));
        }
    }

    #[test]
    fn known_series() {
        let g = pentagon();
        assert_eq!(
            oracle_hilbert(&g, &g.effective_signs(), 4).unwrap(),
            TruncatedSeries::from_i64s(&[1, 5, 20, 75, 275])
        );
        let heavy = WeightedGraph::weighted(&[2], &[]).unwrap();
        assert_eq!(
            oracle_hilbert(&heavy, &EdgeSigns::zero(0), 5).unwrap(),
            TruncatedSeries::from_i64s(&[1, 0, 1, 0, 1, 0])
        );
        assert_eq!(
            oracle_hilbert(&k3(), &k3().effective_signs(), 4).unwrap(),
            TruncatedSeries::from_i64s(&[1, 3, 6, 10, 15])
        );
    }

    #[test]
    fn independent_of_signs() {
        let g = k3();
        for signs in EdgeSigns::all(3) {
            for n in 0..=5 {
                assert_eq!(
                    dimension_by_rank(&g, &signs, n).unwrap(),
                    (n + 2) * (n + 1) / 2,
                    "{signs} n={n}"
                );
            }
        }
    }

    #[test]
    fn antisymmetric_square_vanishes() {
        // ab + ba = 0 over a single edge: dimension of degree 2 is 3
        let g = WeightedGraph::unit(2, &[(1, 2)]).unwrap();
        assert_eq!(dimension_by_rank(&g, &EdgeSigns(vec![1]), 2).unwrap(), 3);
    }

    #[test]
    fn cap_reports_partial_series() {
        let free = WeightedGraph::unit(3, &[]).unwrap();
        match oracle_hilbert_capped(&free, &EdgeSigns::zero(0), 5, 30) {
            Err(OracleError::CapExceeded { degree, partial, .. }) => {
                assert_eq!(degree, 4);
                assert_eq!(partial, TruncatedSeries::from_i64s(&[1, 3, 9, 27]));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            dimension_by_rank(&free, &EdgeSigns::zero(1), 1),
            Err(OracleError::SignCount { .. })
        ));
    }

    #[test]
    fn echelon_membership() {
        let mut e = Echelon::default();
        let row = |pairs: &[(usize, i64)]| -> Row {
            pairs.iter().map(|&(k, v)| (k, BigInt::from(v))).collect()
        };
        assert!(e.insert(row(&[(0, 2), (3, 4)])));
        assert!(e.insert(row(&[(1, 1), (3, 3)])));
        assert!(!e.insert(row(&[(0, 1), (1, -1), (3, -1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&row(&[(0, 3), (1, 3), (3, 15)])));
        assert!(!e.contains(&row(&[(2, 1)])));
        assert!(!e.contains(&row(&[(0, 1), (3, 1)])));
    }
}
