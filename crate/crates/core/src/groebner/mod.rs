//! Noncommutative rewriting, degree-truncated Gröbner bases, and Hilbert
//! series by counting normal words.
//!
//! A rule `lhs -> rhs` comes from a monic polynomial `f = lhs - rhs` with
//! `lhs = in(f)` under DegLex. [`mora_truncated`] completes a homogeneous
//! generating set through a degree bound `D`: afterwards every overlap of
//! degree at most `D` reduces to zero, which is exactly what is needed to
//! count normal words (and therefore read off the Hilbert series) through
//! degree `D`. Asking a basis for coefficients beyond `D` is an error.

mod automaton;
mod engine;
mod signs;

use std::collections::{BTreeSet, HashSet};

use serde_json::{json, Value};
use thiserror::Error;

use crate::freealg::{presentation_with, AlgebraError, GradedAlphabet, NCPolynomial, Word};
use crate::graph::{EdgeSigns, VertexId, WeightedGraph};
use crate::series::TruncatedSeries;

pub use automaton::FactorAutomaton;
pub use signs::{
    verify_sign_assignments, verify_sign_independence, SignDiscrepancy, SignIndependenceReport,
};

use engine::{Coding, Completion, Poly, Rule, RuleSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("relation `{0}` is not homogeneous")]
    NotHomogeneous(String),
    #[error("basis is complete through degree {complete_through}, cannot certify degree {requested}")]
    BeyondCompleteness { requested: usize, complete_through: u32 },
    #[error("composition does not belong to the given pair of rules")]
    ForeignComposition,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `lhs -> rhs` for the monic polynomial `lhs - rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: NCPolynomial,
}

impl RewriteRule {
    /// Normalises `f` to be monic and splits off its initial term.
    pub fn from_polynomial(f: &NCPolynomial, alphabet: &GradedAlphabet) -> Result<Self, GroebnerError> {
        let monic = f.monic(alphabet)?;
        let lhs = monic.initial_term(alphabet)?.0.clone();
        let rhs = NCPolynomial::word(lhs.clone()).sub(&monic);
        Ok(RewriteRule { lhs, rhs })
    }

    /// The source polynomial `lhs - rhs`.
    pub fn polynomial(&self) -> NCPolynomial {
        NCPolynomial::word(self.lhs.clone()).sub(&self.rhs)
    }

    pub fn render(&self, alphabet: &GradedAlphabet) -> String {
        format!("{} -> {}", alphabet.render_word(&self.lhs), alphabet.render(&self.rhs))
    }

    fn encode(&self, coding: &Coding) -> Rule {
        Rule { lhs: coding.encode_word(&self.lhs), rhs: coding.encode(&self.rhs) }
    }

    fn decode(rule: &Rule, coding: &Coding) -> Self {
        RewriteRule { lhs: coding.decode_word(&rule.lhs.word), rhs: coding.decode(&rule.rhs) }
    }
}

/// Rule set for reduction; unlike the completion engine, duplicate left-hand
/// sides keep the first rule, matching "first rule in list order".
fn rule_set(rules: &[RewriteRule], coding: &Coding) -> RuleSet {
    let mut set = RuleSet::new();
    let mut seen = BTreeSet::new();
    for r in rules {
        if seen.insert(r.lhs.clone()) {
            set.insert(r.encode(coding));
        }
    }
    set
}

/// Rewrites the largest word of `p` that contains `rule.lhs`, replacing
/// occurrences leftmost first until the words coming from it are free of
/// `lhs`. Other words are left alone.
pub fn rewrite_once(p: &NCPolynomial, rule: &RewriteRule, alphabet: &GradedAlphabet) -> NCPolynomial {
    let coding = Coding::new(alphabet);
    let set = rule_set(std::slice::from_ref(rule), &coding);
    let mut encoded = coding.encode(p);
    let target = encoded
        .iter()
        .rev()
        .find(|(k, _)| set.is_reducible(&k.word))
        .map(|(k, c)| (k.clone(), c.clone()));
    if let Some((key, c)) = target {
        encoded.remove(&key);
        for (k, c) in set.normal_form(Poly::from([(key, c)])) {
            engine::add_term(&mut encoded, k, c);
        }
    }
    coding.decode(&encoded)
}

/// Whether some sequence of single rewrites by `rules` takes `f` to zero.
/// Without a Gröbner basis the answer can differ from [`reduce`], which
/// follows one fixed strategy. Searches every path, so keep inputs small.
pub fn reduces_to_zero(f: &NCPolynomial, rules: &[RewriteRule]) -> bool {
    let mut seen = HashSet::new();
    let mut stack = vec![f.clone()];
    while let Some(p) = stack.pop() {
        if p.is_zero() {
            return true;
        }
        if !seen.insert(p.clone()) {
            continue;
        }
        for (w, c) in p.terms() {
            for rule in rules {
                let n = rule.lhs.len();
                for start in 0..=w.len().saturating_sub(n) {
                    if n > w.len() || w.letters()[start..start + n] != *rule.lhs.letters() {
                        continue;
                    }
                    let left = Word::new(w.letters()[..start].to_vec());
                    let right = Word::new(w.letters()[start + n..].to_vec());
                    let replacement = rule.rhs.sandwich(&left, &right).scale(c);
                    let next = p.sub(&NCPolynomial::monomial(w.clone(), c.clone())).add(&replacement);
                    stack.push(next);
                }
            }
        }
    }
    false
}

/// Normal form of `f`: no word of the result contains any lhs. Each step
/// rewrites the largest reducible word with the first matching rule at its
/// leftmost occurrence.
pub fn reduce(f: &NCPolynomial, rules: &[RewriteRule], alphabet: &GradedAlphabet) -> NCPolynomial {
    let coding = Coding::new(alphabet);
    let set = rule_set(rules, &coding);
    coding.decode(&set.normal_form(coding.encode(f)))
}

/// Triple `(a, b, c)` with `ab = in(f)`, `bc = in(g)` and `b` nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    pub a: Word,
    pub b: Word,
    pub c: Word,
}

impl Composition {
    /// The overlap word `abc`.
    pub fn word(&self) -> Word {
        self.a.concat(&self.b).concat(&self.c)
    }
}

/// All proper overlaps of `in(f)` followed by `in(g)`. The trivial `b = 1`
/// triple is never listed.
pub fn compositions(f: &RewriteRule, g: &RewriteRule) -> Vec<Composition> {
    let u = f.lhs.letters();
    let v = g.lhs.letters();
    let max = u.len().min(v.len());
    (1..max)
        .filter(|&k| u[u.len() - k..] == v[..k])
        .map(|k| Composition {
            a: Word::new(u[..u.len() - k].to_vec()),
            b: Word::new(v[..k].to_vec()),
            c: Word::new(v[k..].to_vec()),
        })
        .collect()
}

/// `a · rhs(g) − rhs(f) · c`.
pub fn composition_result(
    f: &RewriteRule,
    g: &RewriteRule,
    comp: &Composition,
) -> Result<NCPolynomial, GroebnerError> {
    if comp.a.concat(&comp.b) != f.lhs || comp.b.concat(&comp.c) != g.lhs || comp.b.is_empty() {
        return Err(GroebnerError::ForeignComposition);
    }
    let left = g.rhs.sandwich(&comp.a, &Word::empty());
    let right = f.rhs.sandwich(&Word::empty(), &comp.c);
    Ok(left.sub(&right))
}

/// Reduces each rule by the others until nothing changes, dropping rules
/// that reduce to zero. Rules keep their relative order.
pub fn self_reduce(rules: &[RewriteRule], alphabet: &GradedAlphabet) -> Vec<RewriteRule> {
    let mut current: Vec<RewriteRule> = rules.to_vec();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < current.len() {
            let others: Vec<RewriteRule> = current
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, r)| r.clone())
                .collect();
            let reduced = reduce(&current[i].polynomial(), &others, alphabet);
            if reduced.is_zero() {
                current.remove(i);
                changed = true;
                continue;
            }
            let rule = RewriteRule::from_polynomial(&reduced, alphabet).expect("nonzero");
            if rule != current[i] {
                current[i] = rule;
                changed = true;
            }
            i += 1;
        }
        if !changed {
            return current;
        }
    }
}

/// Self-reduced rewriting system complete through `degree_bound`.
#[derive(Debug, Clone)]
pub struct TruncatedGB {
    alphabet: GradedAlphabet,
    rules: Vec<RewriteRule>,
    degree_bound: u32,
    completion: Completion,
}

/// Completes homogeneous generators through degree `bound`.
///
/// Generators are added in ascending degree (input order within a degree);
/// generators above the bound cannot affect lower degrees and are left out.
pub fn mora_truncated(
    gens: &[NCPolynomial],
    alphabet: &GradedAlphabet,
    bound: u32,
) -> Result<TruncatedGB, GroebnerError> {
    let mut sorted = Vec::with_capacity(gens.len());
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let deg = g
            .homogeneous_degree(alphabet)
            .ok_or_else(|| GroebnerError::NotHomogeneous(alphabet.render(g)))?;
        sorted.push((deg, g));
    }
    sorted.sort_by_key(|&(deg, _)| deg);

    let coding = Coding::new(alphabet);
    let mut completion = Completion::new(coding.clone(), bound);
    for (deg, g) in sorted {
        if deg <= bound {
            completion.add(coding.encode(g));
        }
    }
    completion.run();
    let rules = completion
        .rules
        .iter()
        .map(|(_, r)| RewriteRule::decode(r, &coding))
        .collect();
    Ok(TruncatedGB { alphabet: alphabet.clone(), rules, degree_bound: bound, completion })
}

impl TruncatedGB {
    pub fn alphabet(&self) -> &GradedAlphabet {
        &self.alphabet
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn complete_through(&self) -> u32 {
        self.degree_bound
    }

    /// Number of overlaps whose results were reduced during completion.
    pub fn overlaps_processed(&self) -> usize {
        self.completion.overlaps_processed
    }

    pub fn leading_words(&self) -> Vec<Word> {
        self.rules.iter().map(|r| r.lhs.clone()).collect()
    }

    pub fn leading_word_set(&self) -> BTreeSet<Word> {
        self.rules.iter().map(|r| r.lhs.clone()).collect()
    }

    /// Leading words of degree at most `n`.
    pub fn leading_words_through(&self, n: u32) -> BTreeSet<Word> {
        self.rules
            .iter()
            .filter(|r| self.alphabet.degree(&r.lhs) <= n)
            .map(|r| r.lhs.clone())
            .collect()
    }

    pub fn reduce(&self, f: &NCPolynomial) -> NCPolynomial {
        let coding = &self.completion.coding;
        coding.decode(&self.completion.rules.normal_form(coding.encode(f)))
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        !self.completion.rules.is_reducible(&self.completion.coding.encode_word(w).word)
    }

    /// Hilbert series through `n` by counting normal words.
    pub fn hilbert_series(&self, n: usize) -> Result<TruncatedSeries, GroebnerError> {
        if n > self.degree_bound as usize {
            return Err(GroebnerError::BeyondCompleteness {
                requested: n,
                complete_through: self.degree_bound,
            });
        }
        Ok(count_normal_words(&self.leading_words(), &self.alphabet, n))
    }

    /// An overlap of degree at most the bound that fails to reduce to zero,
    /// as `(left rule, right rule, composition)`. `None` certifies completeness.
    pub fn unresolved_composition(&self) -> Option<(usize, usize, Composition)> {
        let o = self.completion.unresolved_overlap()?;
        let position = |id| self.completion.rules.iter().position(|(i, _)| i == id).expect("live");
        let (left, right) = (position(o.left), position(o.right));
        let comps = compositions(&self.rules[left], &self.rules[right]);
        let comp = comps.into_iter().find(|c| c.b.len() == o.len).expect("overlap exists");
        Some((left, right, comp))
    }

    /// One rule per line, `lhs -> rhs`, in DegLex order of the left-hand sides.
    pub fn render_text(&self) -> String {
        self.sorted_rules()
            .iter()
            .map(|r| r.render(&self.alphabet) + "\n")
            .collect()
    }

    fn sorted_rules(&self) -> Vec<&RewriteRule> {
        let mut rules: Vec<&RewriteRule> = self.rules.iter().collect();
        rules.sort_by(|a, b| self.alphabet.compare(&a.lhs, &b.lhs));
        rules
    }

    /// Words are written as sequences of `ids[var]` (variable indices when `None`).
    pub fn to_json(&self, ids: Option<&[VertexId]>) -> Value {
        let word = |w: &Word| -> Value {
            w.letters()
                .iter()
                .map(|&v| ids.map_or(json!(v), |ids| json!(ids[v])))
                .collect()
        };
        let rules: Vec<Value> = self
            .sorted_rules()
            .into_iter()
            .map(|r| {
                json!({
                    "lhs": word(&r.lhs),
                    "rhs": self.alphabet.sorted_terms_desc(&r.rhs).into_iter().map(|(w, c)| json!({
                        "coefficient": c.to_string(),
                        "word": word(w),
                    })).collect::<Vec<_>>(),
                    "text": r.render(&self.alphabet),
                })
            })
            .collect();
        json!({
            "complete_through": self.degree_bound,
            "alphabet": self.alphabet.to_json(),
            "rules": rules,
        })
    }
}

/// Number of words of each degree through `truncation` that contain no
/// leading word as a factor.
pub fn count_normal_words(leading: &[Word], alphabet: &GradedAlphabet, truncation: usize) -> TruncatedSeries {
    let automaton = FactorAutomaton::new(leading, alphabet.len());
    let degrees: Vec<u32> = (0..alphabet.len()).map(|v| alphabet.degree_of(v)).collect();
    automaton.count_by_degree(&degrees, truncation)
}

/// Truncated Gröbner basis of the graph algebra for the given edge signs.
/// `order` (largest first) overrides the graph's stored precedence.
pub fn groebner_for_graph(
    g: &WeightedGraph,
    signs: &EdgeSigns,
    order: Option<&[VertexId]>,
    bound: u32,
) -> Result<TruncatedGB, GroebnerError> {
    let p = presentation_with(g, signs, order)?;
    mora_truncated(&p.relations, &p.alphabet, bound)
}

/// Hilbert series through `n` via a Gröbner basis of the graph algebra with
/// its effective edge signs.
pub fn hilbert_via_groebner(
    g: &WeightedGraph,
    order: Option<&[VertexId]>,
    n: usize,
) -> Result<TruncatedSeries, GroebnerError> {
    let gb = groebner_for_graph(g, &g.effective_signs(), order, n as u32)?;
    gb.hilbert_series(n)
}

impl GradedAlphabet {
    pub(crate) fn sorted_terms_desc<'a>(
        &self,
        p: &'a NCPolynomial,
    ) -> Vec<(&'a Word, &'a num_rational::BigRational)> {
        let mut terms = p.sorted_terms(self);
        terms.reverse();
        terms
    }
}
