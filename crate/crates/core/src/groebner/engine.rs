//! Internal rewriting engine.
//!
//! Words are recoded so that each letter is the variable's precedence rank.
//! With that coding DegLex is exactly the derived order on
//! `(degree, letters)`, so polynomials can live in a `BTreeMap` whose last
//! entry is the initial term.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::freealg::{GradedAlphabet, NCPolynomial, Word};

pub(crate) type Letter = u32;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct Key {
    pub deg: u32,
    pub word: Vec<Letter>,
}

pub(crate) type Poly = BTreeMap<Key, BigRational>;

pub(crate) fn add_term(p: &mut Poly, key: Key, c: BigRational) {
    use std::collections::btree_map::Entry;
    match p.entry(key) {
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Translation between alphabet variables and rank letters.
#[derive(Debug, Clone)]
pub(crate) struct Coding {
    /// Degree of each rank letter.
    degrees: Vec<u32>,
    rank_of: Vec<Letter>,
    var_of: Vec<usize>,
}

impl Coding {
    pub fn new(alphabet: &GradedAlphabet) -> Self {
        let n = alphabet.len();
        let rank_of: Vec<Letter> = (0..n).map(|v| alphabet.rank(v)).collect();
        let var_of: Vec<usize> = (0..n as u32).map(|r| alphabet.var_of_rank(r)).collect();
        let degrees = var_of.iter().map(|&v| alphabet.degree_of(v)).collect();
        Coding { degrees, rank_of, var_of }
    }

    pub fn degree(&self, letters: &[Letter]) -> u32 {
        letters.iter().map(|&l| self.degrees[l as usize]).sum()
    }

    pub fn key(&self, letters: Vec<Letter>) -> Key {
        Key { deg: self.degree(&letters), word: letters }
    }

    pub fn encode_word(&self, w: &Word) -> Key {
        self.key(w.letters().iter().map(|&v| self.rank_of[v]).collect())
    }

    pub fn decode_word(&self, letters: &[Letter]) -> Word {
        Word::new(letters.iter().map(|&l| self.var_of[l as usize]).collect())
    }

    pub fn encode(&self, p: &NCPolynomial) -> Poly {
        p.terms().map(|(w, c)| (self.encode_word(w), c.clone())).collect()
    }

    pub fn decode(&self, p: &Poly) -> NCPolynomial {
        NCPolynomial::from_terms(p.iter().map(|(k, c)| (self.decode_word(&k.word), c.clone())))
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Rule {
    pub lhs: Key,
    pub rhs: Poly,
}

impl Rule {
    /// Rule from a nonzero polynomial: monic, `lhs = in(p)`, `rhs = lhs − p`.
    pub fn from_poly(mut p: Poly) -> Rule {
        let (lhs, lead) = p.pop_last().expect("nonzero polynomial");
        let factor = -lead.recip();
        let rhs = p.into_iter().map(|(k, c)| (k, c * &factor)).collect();
        Rule { lhs, rhs }
    }

    pub fn polynomial(&self) -> Poly {
        let mut p: Poly = self.rhs.iter().map(|(k, c)| (k.clone(), -c.clone())).collect();
        p.insert(self.lhs.clone(), BigRational::one());
        p
    }
}

/// Rewrite rules addressed by stable ids, with an index on left-hand sides.
#[derive(Debug, Clone, Default)]
pub(crate) struct RuleSet {
    slots: Vec<Option<Rule>>,
    index: HashMap<Vec<Letter>, usize>,
    /// Multiset of lhs lengths.
    lengths: BTreeMap<usize, usize>,
}

impl RuleSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, rule: Rule) -> usize {
        let id = self.slots.len();
        self.index.insert(rule.lhs.word.clone(), id);
        *self.lengths.entry(rule.lhs.word.len()).or_insert(0) += 1;
        self.slots.push(Some(rule));
        id
    }

    pub fn remove(&mut self, id: usize) -> Rule {
        let rule = self.slots[id].take().expect("live rule");
        self.index.remove(&rule.lhs.word);
        let len = rule.lhs.word.len();
        let count = self.lengths.get_mut(&len).expect("length tracked");
        *count -= 1;
        if *count == 0 {
            self.lengths.remove(&len);
        }
        rule
    }

    pub fn get(&self, id: usize) -> Option<&Rule> {
        self.slots.get(id).and_then(Option::as_ref)
    }

    pub fn get_mut(&mut self, id: usize) -> Option<&mut Rule> {
        self.slots.get_mut(id).and_then(Option::as_mut)
    }

    /// Live rules in insertion order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rule)> {
        self.slots.iter().enumerate().filter_map(|(i, r)| r.as_ref().map(|r| (i, r)))
    }

    /// First rule (by id) whose lhs occurs in `word`, with its leftmost position.
    pub fn find(&self, word: &[Letter]) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for start in 0..word.len() {
            for &len in self.lengths.keys() {
                if start + len > word.len() {
                    break;
                }
                if let Some(&id) = self.index.get(&word[start..start + len]) {
                    if best.map_or(true, |b| (id, start) < b) {
                        best = Some((id, start));
                    }
                }
            }
        }
        best
    }

    pub fn is_reducible(&self, word: &[Letter]) -> bool {
        (0..word.len()).any(|start| {
            self.lengths
                .keys()
                .take_while(|&&len| start + len <= word.len())
                .any(|&len| self.index.contains_key(&word[start..start + len]))
        })
    }

    /// Full normal form: the largest reducible term is rewritten first,
    /// using the first matching rule at its leftmost occurrence.
    pub fn normal_form(&self, mut work: Poly) -> Poly {
        let mut out = Poly::new();
        while let Some((key, c)) = work.pop_last() {
            match self.find(&key.word) {
                None => {
                    out.insert(key, c);
                }
                Some((id, start)) => {
                    let rule = self.get(id).expect("indexed rule is live");
                    let end = start + rule.lhs.word.len();
                    for (rk, rc) in &rule.rhs {
                        let mut word = Vec::with_capacity(key.word.len() - rule.lhs.word.len() + rk.word.len());
                        word.extend_from_slice(&key.word[..start]);
                        word.extend_from_slice(&rk.word);
                        word.extend_from_slice(&key.word[end..]);
                        let deg = key.deg - rule.lhs.deg + rk.deg;
                        add_term(&mut work, Key { deg, word }, &c * rc);
                    }
                }
            }
        }
        out
    }
}

/// Proper overlap of `left.lhs` and `right.lhs`: `b` is a nonempty proper
/// suffix of the first and a proper prefix of the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Overlap {
    pub left: usize,
    pub right: usize,
    /// Length of `b` in letters.
    pub len: usize,
}

pub(crate) fn overlap_lengths(u: &[Letter], v: &[Letter]) -> Vec<usize> {
    let max = u.len().min(v.len());
    (1..max).filter(|&k| u[u.len() - k..] == v[..k]).collect()
}

/// `a · rhs(right) − rhs(left) · c` for `u = ab`, `v = bc`.
pub(crate) fn overlap_result(left: &Rule, right: &Rule, len: usize, coding: &Coding) -> Poly {
    let u = &left.lhs.word;
    let v = &right.lhs.word;
    let a = &u[..u.len() - len];
    let c = &v[len..];
    let a_deg = coding.degree(a);
    let c_deg = coding.degree(c);
    let mut out = Poly::new();
    for (k, coef) in &right.rhs {
        let mut word = a.to_vec();
        word.extend_from_slice(&k.word);
        add_term(&mut out, Key { deg: k.deg + a_deg, word }, coef.clone());
    }
    for (k, coef) in &left.rhs {
        let mut word = k.word.clone();
        word.extend_from_slice(c);
        add_term(&mut out, Key { deg: k.deg + c_deg, word }, -coef.clone());
    }
    out
}

/// Degree-truncated completion. Overlaps are processed by ascending degree
/// of `abc`, first-in first-out within a degree.
#[derive(Debug, Clone)]
pub(crate) struct Completion {
    pub coding: Coding,
    pub rules: RuleSet,
    bound: u32,
    queue: BTreeMap<(u32, u64), Overlap>,
    seq: u64,
    pub overlaps_processed: usize,
}

impl Completion {
    pub fn new(coding: Coding, bound: u32) -> Self {
        Completion {
            coding,
            rules: RuleSet::new(),
            bound,
            queue: BTreeMap::new(),
            seq: 0,
            overlaps_processed: 0,
        }
    }

    /// Reduces `p` and, if anything is left, adds it and restores self-reducedness.
    pub fn add(&mut self, p: Poly) {
        let mut pending = vec![p];
        while let Some(p) = pending.pop() {
            let p = self.rules.normal_form(p);
            if p.is_empty() {
                continue;
            }
            let rule = Rule::from_poly(p);
            let lhs = rule.lhs.word.clone();
            let victims: Vec<usize> = self
                .rules
                .iter()
                .filter(|(_, r)| contains(&r.lhs.word, &lhs))
                .map(|(id, _)| id)
                .collect();
            for id in victims {
                pending.push(self.rules.remove(id).polynomial());
            }
            let id = self.rules.insert(rule);
            let stale: Vec<usize> = self
                .rules
                .iter()
                .filter(|&(other, r)| other != id && r.rhs.keys().any(|k| contains(&k.word, &lhs)))
                .map(|(other, _)| other)
                .collect();
            for other in stale {
                let rhs = std::mem::take(&mut self.rules.get_mut(other).expect("live").rhs);
                let reduced = self.rules.normal_form(rhs);
                self.rules.get_mut(other).expect("live").rhs = reduced;
            }
            self.enqueue(id);
        }
    }

    fn enqueue(&mut self, id: usize) {
        let new = self.rules.get(id).expect("live").lhs.clone();
        let others: Vec<(usize, Key)> =
            self.rules.iter().map(|(other, r)| (other, r.lhs.clone())).collect();
        for (other, lhs) in others {
            self.push_overlaps(id, &new, other, &lhs);
            if other != id {
                self.push_overlaps(other, &lhs, id, &new);
            }
        }
    }

    fn push_overlaps(&mut self, left: usize, u: &Key, right: usize, v: &Key) {
        for len in overlap_lengths(&u.word, &v.word) {
            let deg = u.deg + v.deg - self.coding.degree(&v.word[..len]);
            if deg <= self.bound {
                self.seq += 1;
                self.queue.insert((deg, self.seq), Overlap { left, right, len });
            }
        }
    }

    pub fn run(&mut self) {
        while let Some((_, o)) = self.queue.pop_first() {
            let (Some(left), Some(right)) = (self.rules.get(o.left), self.rules.get(o.right)) else {
                continue;
            };
            let result = overlap_result(left, right, o.len, &self.coding);
            self.overlaps_processed += 1;
            self.add(result);
        }
    }

    /// First overlap of degree at most the bound whose result does not reduce to zero.
    pub fn unresolved_overlap(&self) -> Option<Overlap> {
        for (i, f) in self.rules.iter() {
            for (j, g) in self.rules.iter() {
                for len in overlap_lengths(&f.lhs.word, &g.lhs.word) {
                    let deg = f.lhs.deg + g.lhs.deg - self.coding.degree(&g.lhs.word[..len]);
                    if deg > self.bound {
                        continue;
                    }
                    let r = overlap_result(f, g, len, &self.coding);
                    if !self.rules.normal_form(r).is_empty() {
                        return Some(Overlap { left: i, right: j, len });
                    }
                }
            }
        }
        None
    }
}

pub(crate) fn contains(word: &[Letter], pattern: &[Letter]) -> bool {
    pattern.len() <= word.len() && word.windows(pattern.len()).any(|w| w == pattern)
}
