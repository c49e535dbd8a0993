//! Aho–Corasick automaton recognising words that avoid a set of factors.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::freealg::Word;
use crate::series::TruncatedSeries;

/// Deterministic automaton over letters `0..letters`. A state is the
/// longest suffix of the input read so far that is a prefix of some
/// pattern; a state is forbidden once any pattern has been seen.
#[derive(Debug, Clone)]
pub struct FactorAutomaton {
    letters: usize,
    delta: Vec<usize>,
    forbidden: Vec<bool>,
}

impl FactorAutomaton {
    pub fn new(patterns: &[Word], letters: usize) -> Self {
        const NONE: usize = usize::MAX;
        let mut trie: Vec<usize> = vec![NONE; letters];
        let mut forbidden = vec![false];
        for p in patterns {
            let mut state = 0;
            for &l in p.letters() {
                assert!(l < letters, "pattern letter out of range");
                if trie[state * letters + l] == NONE {
                    trie[state * letters + l] = forbidden.len();
                    forbidden.push(false);
                    trie.extend(std::iter::repeat(NONE).take(letters));
                }
                state = trie[state * letters + l];
            }
            forbidden[state] = true;
        }

        let states = forbidden.len();
        let mut delta = trie;
        let mut fail = vec![0usize; states];
        let mut queue = VecDeque::new();
        for l in 0..letters {
            match delta[l] {
                NONE => delta[l] = 0,
                child => {
                    fail[child] = 0;
                    queue.push_back(child);
                }
            }
        }
        while let Some(s) = queue.pop_front() {
            forbidden[s] = forbidden[s] || forbidden[fail[s]];
            for l in 0..letters {
                let t = delta[s * letters + l];
                if t == NONE {
                    delta[s * letters + l] = delta[fail[s] * letters + l];
                } else {
                    fail[t] = delta[fail[s] * letters + l];
                    queue.push_back(t);
                }
            }
        }
        FactorAutomaton { letters, delta, forbidden }
    }

    pub fn states(&self) -> usize {
        self.forbidden.len()
    }

    pub fn step(&self, state: usize, letter: usize) -> usize {
        self.delta[state * self.letters + letter]
    }

    pub fn is_forbidden(&self, state: usize) -> bool {
        self.forbidden[state]
    }

    pub fn accepts(&self, word: &Word) -> bool {
        let mut state = 0;
        if self.forbidden[state] {
            return false;
        }
        for &l in word.letters() {
            state = self.step(state, l);
            if self.forbidden[state] {
                return false;
            }
        }
        true
    }

    /// Number of accepted words of each degree up to `truncation`, where
    /// letter `l` has degree `degrees[l]`.
    pub fn count_by_degree(&self, degrees: &[u32], truncation: usize) -> TruncatedSeries {
        assert_eq!(degrees.len(), self.letters);
        let states = self.states();
        let mut table: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); states]; truncation + 1];
        if !self.forbidden[0] {
            table[0][0] = BigInt::from(1);
        }
        for d in 0..truncation {
            let (done, rest) = table.split_at_mut(d + 1);
            let row = &done[d];
            for (s, count) in row.iter().enumerate() {
                if count.is_zero() {
                    continue;
                }
                for (l, &deg) in degrees.iter().enumerate() {
                    let next = d + deg as usize;
                    if next > truncation {
                        continue;
                    }
                    let t = self.step(s, l);
                    if !self.forbidden[t] {
                        rest[next - d - 1][t] += count;
                    }
                }
            }
        }
        TruncatedSeries::from_coefficients(
            table.into_iter().map(|row| row.into_iter().sum()).collect(),
        )
    }
}
