//! Edge-sign independence of leading words and normal-word counts.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::SeedableRng;

use super::{groebner_for_graph, GroebnerError};
use crate::freealg::Word;
use crate::graph::{EdgeSigns, VertexId, WeightedGraph};
use crate::series::TruncatedSeries;

/// Disagreement between the first assignment and a later one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignDiscrepancy {
    pub baseline: EdgeSigns,
    pub other: EdgeSigns,
    /// Leading words present for the baseline only.
    pub missing: Vec<Word>,
    /// Leading words present for the other assignment only.
    pub extra: Vec<Word>,
    pub baseline_series: TruncatedSeries,
    pub other_series: TruncatedSeries,
}

#[derive(Debug, Clone)]
pub struct SignIndependenceReport {
    pub degree: u32,
    pub assignments: Vec<EdgeSigns>,
    pub leading_words: BTreeSet<Word>,
    pub series: TruncatedSeries,
    pub discrepancies: Vec<SignDiscrepancy>,
}

impl SignIndependenceReport {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Computes a basis through `degree` for each assignment and compares
/// leading words and normal-word counts against the first one.
pub fn verify_sign_assignments(
    g: &WeightedGraph,
    assignments: &[EdgeSigns],
    order: Option<&[VertexId]>,
    degree: u32,
) -> Result<SignIndependenceReport, GroebnerError> {
    let mut baseline: Option<(EdgeSigns, BTreeSet<Word>, TruncatedSeries)> = None;
    let mut discrepancies = Vec::new();
    for signs in assignments {
        let gb = groebner_for_graph(g, signs, order, degree)?;
        let words = gb.leading_words_through(degree);
        let series = gb.hilbert_series(degree as usize)?;
        match &baseline {
            None => baseline = Some((signs.clone(), words, series)),
            Some((base_signs, base_words, base_series)) => {
                if &words != base_words || &series != base_series {
                    discrepancies.push(SignDiscrepancy {
                        baseline: base_signs.clone(),
                        other: signs.clone(),
                        missing: base_words.difference(&words).cloned().collect(),
                        extra: words.difference(base_words).cloned().collect(),
                        baseline_series: base_series.clone(),
                        other_series: series,
                    });
                }
            }
        }
    }
    let (_, leading_words, series) = baseline.unwrap_or_else(|| {
        (EdgeSigns::zero(0), BTreeSet::new(), TruncatedSeries::zero(degree as usize))
    });
    Ok(SignIndependenceReport {
        degree,
        assignments: assignments.to_vec(),
        leading_words,
        series,
        discrepancies,
    })
}

/// All-zero signs, the parity signs, then `trials` random assignments drawn
/// from `seed`.
pub fn verify_sign_independence(
    g: &WeightedGraph,
    trials: usize,
    degree: u32,
    seed: u64,
) -> Result<SignIndependenceReport, GroebnerError> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut assignments = vec![EdgeSigns::zero(g.edge_count()), g.default_signs()];
    assignments.extend((0..trials).map(|_| EdgeSigns::random(g.edge_count(), &mut rng)));
    verify_sign_assignments(g, &assignments, None, degree)
}
