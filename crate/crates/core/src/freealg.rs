//! Words and noncommutative polynomials over graded variables, the DegLex
//! order, graded commutators, and the presentations `A(Γ)` and `DGA(Γ)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::graph::{EdgeSigns, GraphError, VertexId, WeightedGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("duplicate variable name `{0}`")]
    DuplicateName(String),
    #[error("variable `{0}` has degree 0")]
    ZeroDegree(String),
    #[error("precedence is not a permutation of the variables: {0}")]
    BadPrecedence(String),
    #[error("the zero polynomial has no initial term")]
    ZeroPolynomial,
    #[error("commutator of a variable with itself")]
    SelfCommutator,
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub degree: u32,
}

/// Graded variables together with the precedence DegLex breaks ties with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAlphabet {
    variables: Vec<Variable>,
    /// Variable indices, largest first.
    precedence: Vec<usize>,
    /// `rank[v]`: larger rank means larger variable.
    rank: Vec<u32>,
}

impl GradedAlphabet {
    /// `precedence` lists variable indices from largest to smallest.
    pub fn new(variables: Vec<Variable>, precedence: Vec<usize>) -> Result<Self, AlgebraError> {
        let mut names = HashSet::new();
        for v in &variables {
            if v.degree == 0 {
                return Err(AlgebraError::ZeroDegree(v.name.clone()));
            }
            if !names.insert(v.name.as_str()) {
                return Err(AlgebraError::DuplicateName(v.name.clone()));
            }
        }
        let n = variables.len();
        if precedence.len() != n {
            return Err(AlgebraError::BadPrecedence(format!(
                "{} entries for {n} variables",
                precedence.len()
            )));
        }
        let mut rank = vec![u32::MAX; n];
        for (pos, &v) in precedence.iter().enumerate() {
            if v >= n || rank[v] != u32::MAX {
                return Err(AlgebraError::BadPrecedence(format!("entry {v}")));
            }
            rank[v] = (n - 1 - pos) as u32;
        }
        Ok(GradedAlphabet { variables, precedence, rank })
    }

    /// Later variables are larger.
    pub fn with_index_precedence(variables: Vec<Variable>) -> Result<Self, AlgebraError> {
        let precedence = (0..variables.len()).rev().collect();
        Self::new(variables, precedence)
    }

    /// One variable `x<id>` per vertex, in vertex order, with degree equal
    /// to the vertex weight. `order` (largest first) defaults to the order
    /// stored with the graph, then to descending vertex id.
    pub fn for_graph(g: &WeightedGraph, order: Option<&[VertexId]>) -> Result<Self, AlgebraError> {
        let variables = g
            .vertices()
            .iter()
            .map(|v| Variable { name: format!("x{}", v.id), degree: v.weight })
            .collect();
        let precedence = match order.or(g.order()) {
            Some(ids) => {
                g.check_order(ids)?;
                ids.iter().map(|&id| g.index_of(id).expect("checked")).collect()
            }
            None => (0..g.vertex_count()).rev().collect(),
        };
        Self::new(variables, precedence)
    }

    pub fn len(&self) -> usize {
        self.variables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.variables.is_empty()
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn degree_of(&self, var: usize) -> u32 {
        self.variables[var].degree
    }

    pub fn name(&self, var: usize) -> &str {
        &self.variables[var].name
    }

    pub fn rank(&self, var: usize) -> u32 {
        self.rank[var]
    }

    pub fn var_of_rank(&self, rank: u32) -> usize {
        self.precedence[self.len() - 1 - rank as usize]
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.name == name)
    }

    pub fn degree(&self, w: &Word) -> u32 {
        w.0.iter().map(|&v| self.variables[v].degree).sum()
    }

    /// DegLex: degree first, then position by position by precedence; at
    /// equal degree a proper prefix is smaller.
    pub fn compare(&self, u: &Word, v: &Word) -> Ordering {
        self.degree(u).cmp(&self.degree(v)).then_with(|| {
            u.0.iter()
                .map(|&x| self.rank[x])
                .cmp(v.0.iter().map(|&x| self.rank[x]))
        })
    }

    /// `|a||b| mod 2`, the sign of the ordinary graded commutator.
    pub fn default_sign(&self, a: usize, b: usize) -> u8 {
        ((self.degree_of(a) * self.degree_of(b)) % 2) as u8
    }

    /// `x1*x4^2*x5`; the empty word renders as `1`.
    pub fn render_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w.0[j] == w.0[i] {
                j += 1;
            }
            let name = self.name(w.0[i]);
            parts.push(if j - i > 1 { format!("{name}^{}", j - i) } else { name.to_string() });
            i = j;
        }
        parts.join("*")
    }

    /// Terms in descending DegLex order.
    pub fn render(&self, p: &NCPolynomial) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (w, c)) in p.sorted_terms(self).into_iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let magnitude = c.abs();
            if w.is_empty() {
                out.push_str(&magnitude.to_string());
            } else {
                if !magnitude.is_one() {
                    out.push_str(&format!("{magnitude}*"));
                }
                out.push_str(&self.render_word(w));
            }
        }
        out
    }

    /// Parses the text form written by [`GradedAlphabet::render`].
    /// Juxtaposition and `*` both denote products.
    pub fn parse_polynomial(&self, text: &str) -> Result<NCPolynomial, AlgebraError> {
        PolyParser { alphabet: self, text, pos: 0 }.parse()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "variables": self.variables.iter().map(|v| json!({"name": v.name, "degree": v.degree})).collect::<Vec<_>>(),
            "precedence": self.precedence.iter().map(|&v| self.name(v)).collect::<Vec<_>>(),
        })
    }
}

/// A word over variable indices of some alphabet.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Leftmost position where `pattern` occurs as a factor.
    pub fn find(&self, pattern: &Word) -> Option<usize> {
        if pattern.is_empty() {
            return Some(0);
        }
        self.0.windows(pattern.len()).position(|w| w == pattern.0.as_slice())
    }

    pub fn contains(&self, pattern: &Word) -> bool {
        self.find(pattern).is_some()
    }
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Word(letters)
    }
}

/// Finite linear combination of words with nonzero rational coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct NCPolynomial {
    terms: BTreeMap<Word, BigRational>,
}

impl NCPolynomial {
    pub fn zero() -> Self {
        NCPolynomial::default()
    }

    pub fn monomial(w: Word, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(w: Word) -> Self {
        Self::monomial(w, BigRational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, BigRational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Integer-coefficient shorthand, mostly for tests.
    pub fn from_int_terms<I: IntoIterator<Item = (Vec<usize>, i64)>>(terms: I) -> Self {
        Self::from_terms(
            terms
                .into_iter()
                .map(|(w, c)| (Word(w), BigRational::from_integer(BigInt::from(c)))),
        )
    }

    pub fn add_term(&mut self, w: Word, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in an order that does not depend on any alphabet.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    /// Terms in ascending DegLex order.
    pub fn sorted_terms<'a>(&'a self, alphabet: &GradedAlphabet) -> Vec<(&'a Word, &'a BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| alphabet.compare(a.0, b.0));
        v
    }

    pub fn add(&self, other: &NCPolynomial) -> NCPolynomial {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NCPolynomial) -> NCPolynomial {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> NCPolynomial {
        if c.is_zero() {
            return Self::zero();
        }
        NCPolynomial {
            terms: self.terms.iter().map(|(w, d)| (w.clone(), d * c)).collect(),
        }
    }

    /// Product in the free algebra.
    pub fn mul(&self, other: &NCPolynomial) -> NCPolynomial {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// `left · self · right`.
    pub fn sandwich(&self, left: &Word, right: &Word) -> NCPolynomial {
        NCPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (left.concat(w).concat(right), c.clone()))
                .collect(),
        }
    }

    /// The DegLex-largest word and its coefficient.
    pub fn initial_term(&self, alphabet: &GradedAlphabet) -> Result<(&Word, &BigRational), AlgebraError> {
        self.terms
            .iter()
            .max_by(|a, b| alphabet.compare(a.0, b.0))
            .ok_or(AlgebraError::ZeroPolynomial)
    }

    /// Degree if every word has the same degree; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self, alphabet: &GradedAlphabet) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|w| alphabet.degree(w));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self, alphabet: &GradedAlphabet) -> bool {
        self.is_zero() || self.homogeneous_degree(alphabet).is_some()
    }

    /// Divides by the initial coefficient.
    pub fn monic(&self, alphabet: &GradedAlphabet) -> Result<NCPolynomial, AlgebraError> {
        let (_, lead) = self.initial_term(alphabet)?;
        Ok(self.scale(&lead.recip()))
    }

    pub fn to_json(&self, alphabet: &GradedAlphabet) -> Value {
        Value::Array(
            self.sorted_terms(alphabet)
                .into_iter()
                .rev()
                .map(|(w, c)| json!({ "coefficient": c.to_string(), "word": w.0 }))
                .collect(),
        )
    }
}

/// `x_a x_b − (−1)^q x_b x_a`.
pub fn graded_commutator(a: usize, b: usize, sign: u8) -> Result<NCPolynomial, AlgebraError> {
    if a == b {
        return Err(AlgebraError::SelfCommutator);
    }
    let swapped = if sign % 2 == 0 { -1 } else { 1 };
    Ok(NCPolynomial::from_int_terms([(vec![a, b], 1), (vec![b, a], swapped)]))
}

struct PolyParser<'a> {
    alphabet: &'a GradedAlphabet,
    text: &'a str,
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn error(&self, message: impl Into<String>) -> AlgebraError {
        AlgebraError::Parse { offset: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += self.rest().chars().next().map_or(0, char::len_utf8);
        }
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        let s = &self.text[self.pos..self.pos + len];
        self.pos += len;
        Some(s)
    }

    fn variable(&mut self) -> Option<usize> {
        self.skip_ws();
        // longest matching name wins, so `x12` is not read as `x1` `2`
        let rest = self.rest();
        let (var, len) = self
            .alphabet
            .variables()
            .iter()
            .enumerate()
            .filter(|(_, v)| rest.starts_with(v.name.as_str()))
            .map(|(i, v)| (i, v.name.len()))
            .max_by_key(|&(_, len)| len)?;
        self.pos += len;
        Some(var)
    }

    fn parse(mut self) -> Result<NCPolynomial, AlgebraError> {
        let mut poly = NCPolynomial::zero();
        self.skip_ws();
        if self.rest() == "0" {
            return Ok(poly);
        }
        let mut first = true;
        loop {
            self.skip_ws();
            if self.rest().is_empty() {
                if first {
                    return Err(self.error("empty polynomial"));
                }
                break;
            }
            let negative = if self.eat('-') {
                true
            } else if self.eat('+') || first {
                false
            } else {
                return Err(self.error("expected `+` or `-`"));
            };
            first = false;
            let (coefficient, word) = self.term()?;
            poly.add_term(word, if negative { -coefficient } else { coefficient });
        }
        Ok(poly)
    }

    fn term(&mut self) -> Result<(BigRational, Word), AlgebraError> {
        let mut coefficient = BigRational::one();
        let mut have_number = false;
        if let Some(num) = self.digits() {
            let num: BigInt = num.parse().expect("digits");
            let den: BigInt = if self.eat('/') {
                let d = self.digits().ok_or_else(|| self.error("expected denominator"))?;
                d.parse().expect("digits")
            } else {
                BigInt::one()
            };
            if den.is_zero() {
                return Err(self.error("zero denominator"));
            }
            coefficient = BigRational::new(num, den);
            have_number = true;
        }
        let mut letters = Vec::new();
        loop {
            let before = self.pos;
            let star = self.eat('*');
            match self.variable() {
                Some(v) => {
                    let power = if self.eat('^') {
                        self.digits()
                            .ok_or_else(|| self.error("expected exponent"))?
                            .parse::<usize>()
                            .map_err(|_| self.error("exponent too large"))?
                    } else {
                        1
                    };
                    letters.extend(std::iter::repeat(v).take(power));
                }
                None if star => return Err(self.error("expected a variable after `*`")),
                None => {
                    self.pos = before;
                    break;
                }
            }
        }
        if letters.is_empty() && !have_number {
            return Err(self.error("expected a coefficient or variable"));
        }
        Ok((coefficient, Word(letters)))
    }
}

// ---------------------------------------------------------------------------
// Presentations

/// Generator `y_j` of the differential graded algebra, one per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DgaGenerator {
    pub name: String,
    pub degree: u32,
    pub edge: (VertexId, VertexId),
    /// Index into [`Presentation::relations`]; `d y_j` is that relation.
    pub differential: usize,
}

/// `A(Γ) = k⟨x_i⟩ / ([x_a, x_b] : edges)` together with `DGA(Γ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub alphabet: GradedAlphabet,
    pub relations: Vec<NCPolynomial>,
    pub signs: EdgeSigns,
    pub dga_generators: Vec<DgaGenerator>,
}

/// Presentation with the graph's effective edge signs and stored order.
pub fn presentation_of(g: &WeightedGraph) -> Presentation {
    presentation_with(g, &g.effective_signs(), None).expect("graph data is consistent")
}

pub fn presentation_with(
    g: &WeightedGraph,
    signs: &EdgeSigns,
    order: Option<&[VertexId]>,
) -> Result<Presentation, AlgebraError> {
    if signs.len() != g.edge_count() {
        return Err(GraphError::SignCount { expected: g.edge_count(), found: signs.len() }.into());
    }
    let alphabet = GradedAlphabet::for_graph(g, order)?;
    let mut relations = Vec::with_capacity(g.edge_count());
    let mut dga_generators = Vec::with_capacity(g.edge_count());
    for (j, (e, &q)) in g.edges().iter().zip(signs.as_slice()).enumerate() {
        relations.push(graded_commutator(e.a, e.b, q)?);
        dga_generators.push(DgaGenerator {
            name: format!("y{}", j + 1),
            degree: g.weight(e.a) + g.weight(e.b) + 1,
            edge: (g.id(e.a), g.id(e.b)),
            differential: j,
        });
    }
    Ok(Presentation { alphabet, relations, signs: signs.clone(), dga_generators })
}

impl Presentation {
    pub fn render_text(&self) -> String {
        let a = &self.alphabet;
        let gens: Vec<String> = a
            .variables()
            .iter()
            .map(|v| format!("{} (deg {})", v.name, v.degree))
            .collect();
        let mut out = format!("A = k<{}> / I\n", gens.join(", "));
        for (j, r) in self.relations.iter().enumerate() {
            out.push_str(&format!("  r{} = {}\n", j + 1, a.render(r)));
        }
        let ys: Vec<String> = self
            .dga_generators
            .iter()
            .map(|y| format!("{} (deg {})", y.name, y.degree))
            .collect();
        out.push_str(&format!(
            "DGA = (k<{}{}{}>, d)\n",
            gens.join(", "),
            if ys.is_empty() { "" } else { ", " },
            ys.join(", ")
        ));
        for v in a.variables() {
            out.push_str(&format!("  d {} = 0\n", v.name));
        }
        for y in &self.dga_generators {
            out.push_str(&format!("  d {} = {}\n", y.name, a.render(&self.relations[y.differential])));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let a = &self.alphabet;
        json!({
            "alphabet": a.to_json(),
            "relations": self.relations.iter().map(|r| json!({
                "text": a.render(r),
                "terms": r.to_json(a),
            })).collect::<Vec<_>>(),
            "signs": self.signs.as_slice(),
            "dga": {
                "generators": self.dga_generators.iter().map(|y| json!({
                    "name": y.name,
                    "degree": y.degree,
                    "edge": [y.edge.0, y.edge.1],
                    "differential": a.render(&self.relations[y.differential]),
                })).collect::<Vec<_>>(),
            },
        })
    }
}
