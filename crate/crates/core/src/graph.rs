//! Vertex-weighted simple graphs, clique enumeration and clique polynomials.
//!
//! A [`WeightedGraph`] keeps the user's vertex ids in every report but works
//! on a dense re-indexing internally: vertices are stored sorted by id, so
//! the dense index order agrees with the id order. Edges keep the endpoint
//! orientation and the order in which they were declared, because the
//! commutator relation of an edge is written in that orientation.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// User-facing vertex identifier.
pub type VertexId = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("{at}: duplicate vertex id {id}")]
    DuplicateVertex { id: VertexId, at: String },
    #[error("{at}: loop edge on vertex {id}")]
    LoopEdge { id: VertexId, at: String },
    #[error("{at}: edge endpoint {id} is not a declared vertex")]
    UnknownEndpoint { id: VertexId, at: String },
    #[error("{at}: vertex {id} has non-positive weight {weight}")]
    NonPositiveWeight { id: VertexId, weight: i64, at: String },
    #[error("{at}: duplicate edge {{{a}, {b}}}")]
    DuplicateEdge { a: VertexId, b: VertexId, at: String },
    #[error("{at}: edge sign must be 0 or 1, got {sign}")]
    InvalidSign { sign: i64, at: String },
    #[error("{at}: {message}")]
    Syntax { message: String, at: String },
    #[error("invalid vertex order: {0}")]
    InvalidOrder(String),
    #[error("expected {expected} edge signs, got {found}")]
    SignCount { expected: usize, found: usize },
    #[error("invalid sign policy `{0}` (expected default, zero, random:<seed> or explicit)")]
    InvalidSignPolicy(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub id: VertexId,
    pub weight: u32,
}

/// An edge between two dense vertex indices, in declared orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    /// Explicit ℤ/2 sign from the input document, if any.
    pub sign: Option<u8>,
}

/// Edge input given by user vertex ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeSpec {
    pub a: VertexId,
    pub b: VertexId,
    pub sign: Option<u8>,
}

impl EdgeSpec {
    pub fn new(a: VertexId, b: VertexId) -> Self {
        EdgeSpec { a, b, sign: None }
    }

    pub fn signed(a: VertexId, b: VertexId, sign: u8) -> Self {
        EdgeSpec { a, b, sign: Some(sign) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    vertices: Vec<Vertex>,
    index: HashMap<VertexId, usize>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<bool>>,
    order: Option<Vec<VertexId>>,
}

impl WeightedGraph {
    /// Validates and builds a graph. Errors carry the offending item's
    /// position (`vertices[i]`, `edges[j]`).
    pub fn new(vertices: Vec<Vertex>, edges: Vec<EdgeSpec>) -> Result<Self, GraphError> {
        let located: Vec<(Vertex, String)> = vertices
            .into_iter()
            .enumerate()
            .map(|(i, v)| (v, format!("vertices[{i}]")))
            .collect();
        let located_edges: Vec<(EdgeSpec, String)> = edges
            .into_iter()
            .enumerate()
            .map(|(j, e)| (e, format!("edges[{j}]")))
            .collect();
        Self::build(located, located_edges)
    }

    fn build(
        vertices: Vec<(Vertex, String)>,
        edges: Vec<(EdgeSpec, String)>,
    ) -> Result<Self, GraphError> {
        let mut seen = HashSet::new();
        for (v, at) in &vertices {
            if v.weight == 0 {
                return Err(GraphError::NonPositiveWeight {
                    id: v.id,
                    weight: 0,
                    at: at.clone(),
                });
            }
            if !seen.insert(v.id) {
                return Err(GraphError::DuplicateVertex {
                    id: v.id,
                    at: at.clone(),
                });
            }
        }
        let mut sorted: Vec<Vertex> = vertices.into_iter().map(|(v, _)| v).collect();
        sorted.sort_by_key(|v| v.id);
        let index: HashMap<VertexId, usize> =
            sorted.iter().enumerate().map(|(i, v)| (v.id, i)).collect();

        let n = sorted.len();
        let mut adjacency = vec![vec![false; n]; n];
        let mut out = Vec::with_capacity(edges.len());
        for (e, at) in edges {
            if e.a == e.b {
                return Err(GraphError::LoopEdge { id: e.a, at });
            }
            let a = *index
                .get(&e.a)
                .ok_or_else(|| GraphError::UnknownEndpoint { id: e.a, at: at.clone() })?;
            let b = *index
                .get(&e.b)
                .ok_or_else(|| GraphError::UnknownEndpoint { id: e.b, at: at.clone() })?;
            if let Some(s) = e.sign {
                if s > 1 {
                    return Err(GraphError::InvalidSign { sign: s as i64, at });
                }
            }
            if adjacency[a][b] {
                return Err(GraphError::DuplicateEdge { a: e.a, b: e.b, at });
            }
            adjacency[a][b] = true;
            adjacency[b][a] = true;
            out.push(Edge { a, b, sign: e.sign });
        }
        Ok(WeightedGraph {
            vertices: sorted,
            index,
            edges: out,
            adjacency,
            order: None,
        })
    }

    /// Unit-weight graph on vertices `1..=n`.
    pub fn unit(n: u32, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let vertices = (1..=n).map(|id| Vertex { id, weight: 1 }).collect();
        Self::new(vertices, edges.iter().map(|&(a, b)| EdgeSpec::new(a, b)).collect())
    }

    /// Graph on vertices `1..=weights.len()` with the given weights.
    pub fn weighted(weights: &[u32], edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let vertices = weights
            .iter()
            .enumerate()
            .map(|(i, &weight)| Vertex { id: i as VertexId + 1, weight })
            .collect();
        Self::new(vertices, edges.iter().map(|&(a, b)| EdgeSpec::new(a, b)).collect())
    }

    pub fn empty() -> Self {
        Self::new(Vec::new(), Vec::new()).expect("empty graph is valid")
    }

    /// Attaches a variable precedence (largest first) to the graph.
    pub fn with_order(mut self, order: Vec<VertexId>) -> Result<Self, GraphError> {
        self.check_order(&order)?;
        self.order = Some(order);
        Ok(self)
    }

    pub fn check_order(&self, order: &[VertexId]) -> Result<(), GraphError> {
        if order.len() != self.vertices.len() {
            return Err(GraphError::InvalidOrder(format!(
                "expected {} vertex ids, got {}",
                self.vertices.len(),
                order.len()
            )));
        }
        let mut seen = HashSet::new();
        for id in order {
            if !self.index.contains_key(id) {
                return Err(GraphError::InvalidOrder(format!("unknown vertex {id}")));
            }
            if !seen.insert(*id) {
                return Err(GraphError::InvalidOrder(format!("vertex {id} listed twice")));
            }
        }
        Ok(())
    }

    /// Precedence stored with the graph, if any (largest first).
    pub fn order(&self) -> Option<&[VertexId]> {
        self.order.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn id(&self, index: usize) -> VertexId {
        self.vertices[index].id
    }

    pub fn weight(&self, index: usize) -> u32 {
        self.vertices[index].weight
    }

    pub fn index_of(&self, id: VertexId) -> Option<usize> {
        self.index.get(&id).copied()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    /// Sign `p_a * p_b mod 2` of the ordinary graded commutator.
    pub fn parity_sign(&self, edge: &Edge) -> u8 {
        ((self.weight(edge.a) * self.weight(edge.b)) % 2) as u8
    }

    /// Explicit sign if present, otherwise the parity sign.
    pub fn effective_sign(&self, edge: &Edge) -> u8 {
        edge.sign.unwrap_or_else(|| self.parity_sign(edge))
    }

    pub fn effective_signs(&self) -> EdgeSigns {
        EdgeSigns(self.edges.iter().map(|e| self.effective_sign(e)).collect())
    }

    /// Parity signs, ignoring any explicit signs from the input.
    pub fn default_signs(&self) -> EdgeSigns {
        EdgeSigns(self.edges.iter().map(|e| self.parity_sign(e)).collect())
    }

    /// Copy of the graph with every edge sign set explicitly.
    pub fn with_signs(&self, signs: &EdgeSigns) -> Result<Self, GraphError> {
        if signs.len() != self.edges.len() {
            return Err(GraphError::SignCount {
                expected: self.edges.len(),
                found: signs.len(),
            });
        }
        let mut g = self.clone();
        for (e, &s) in g.edges.iter_mut().zip(signs.as_slice()) {
            if s > 1 {
                return Err(GraphError::InvalidSign {
                    sign: s as i64,
                    at: "sign assignment".into(),
                });
            }
            e.sign = Some(s);
        }
        Ok(g)
    }

    /// Disjoint union; the vertices of `other` are shifted past the largest id of `self`.
    pub fn disjoint_union(&self, other: &WeightedGraph) -> WeightedGraph {
        self.combine(other, false)
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &WeightedGraph) -> WeightedGraph {
        self.combine(other, true)
    }

    fn combine(&self, other: &WeightedGraph, connect: bool) -> WeightedGraph {
        let shift = self.vertices.iter().map(|v| v.id).max().unwrap_or(0);
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().map(|v| Vertex {
            id: v.id + shift,
            weight: v.weight,
        }));
        let mut edges: Vec<EdgeSpec> = self.edge_specs();
        edges.extend(other.edge_specs().into_iter().map(|e| EdgeSpec {
            a: e.a + shift,
            b: e.b + shift,
            sign: e.sign,
        }));
        if connect {
            for u in &self.vertices {
                for v in &other.vertices {
                    edges.push(EdgeSpec::new(u.id, v.id + shift));
                }
            }
        }
        WeightedGraph::new(vertices, edges).expect("combining valid graphs")
    }

    pub fn edge_specs(&self) -> Vec<EdgeSpec> {
        self.edges
            .iter()
            .map(|e| EdgeSpec {
                a: self.id(e.a),
                b: self.id(e.b),
                sign: e.sign,
            })
            .collect()
    }
}

/// Effective ℤ/2 sign for each edge, in edge order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSigns(pub Vec<u8>);

impl EdgeSigns {
    pub fn zero(edges: usize) -> Self {
        EdgeSigns(vec![0; edges])
    }

    pub fn random<R: Rng + ?Sized>(edges: usize, rng: &mut R) -> Self {
        EdgeSigns((0..edges).map(|_| rng.gen_range(0..2u8)).collect())
    }

    /// Every assignment for `edges` edges, in binary counting order.
    pub fn all(edges: usize) -> Vec<EdgeSigns> {
        assert!(edges < 32, "too many edges for exhaustive sign enumeration");
        (0u32..(1 << edges))
            .map(|mask| EdgeSigns((0..edges).map(|j| ((mask >> j) & 1) as u8).collect()))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn all_zero(&self) -> bool {
        self.0.iter().all(|&s| s == 0)
    }
}

impl fmt::Display for EdgeSigns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// How edge signs are chosen before building the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignPolicy {
    /// `p_a * p_b mod 2` on every edge, ignoring the document.
    Default,
    Zero,
    Random(u64),
    /// Signs from the document, falling back to the parity sign.
    Explicit,
}

impl SignPolicy {
    pub fn resolve(&self, g: &WeightedGraph) -> EdgeSigns {
        match self {
            SignPolicy::Default => g.default_signs(),
            SignPolicy::Zero => EdgeSigns::zero(g.edge_count()),
            SignPolicy::Random(seed) => {
                use rand::SeedableRng;
                let mut rng = rand::rngs::StdRng::seed_from_u64(*seed);
                EdgeSigns::random(g.edge_count(), &mut rng)
            }
            SignPolicy::Explicit => g.effective_signs(),
        }
    }
}

impl FromStr for SignPolicy {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "default" => Ok(SignPolicy::Default),
            "zero" => Ok(SignPolicy::Zero),
            "explicit" => Ok(SignPolicy::Explicit),
            _ => s
                .strip_prefix("random:")
                .and_then(|seed| seed.parse().ok())
                .map(SignPolicy::Random)
                .ok_or_else(|| GraphError::InvalidSignPolicy(s.to_string())),
        }
    }
}

impl fmt::Display for SignPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignPolicy::Default => write!(f, "default"),
            SignPolicy::Zero => write!(f, "zero"),
            SignPolicy::Random(seed) => write!(f, "random:{seed}"),
            SignPolicy::Explicit => write!(f, "explicit"),
        }
    }
}

// ---------------------------------------------------------------------------
// Documents

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDocument {
    pub vertices: Vec<VertexDocument>,
    #[serde(default)]
    pub edges: Vec<EdgeDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<VertexId>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexDocument {
    pub id: VertexId,
    pub weight: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeDocument {
    pub a: VertexId,
    pub b: VertexId,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i64>,
}

impl GraphDocument {
    pub fn into_graph(self) -> Result<WeightedGraph, GraphError> {
        let mut vertices = Vec::with_capacity(self.vertices.len());
        for (i, v) in self.vertices.into_iter().enumerate() {
            vertices.push((checked_vertex(v.id, v.weight, format!("vertices[{i}]"))?, format!("vertices[{i}]")));
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for (j, e) in self.edges.into_iter().enumerate() {
            let at = format!("edges[{j}]");
            let sign = e.sign.map(|s| checked_sign(s, &at)).transpose()?;
            edges.push((EdgeSpec { a: e.a, b: e.b, sign }, at));
        }
        let g = WeightedGraph::build(vertices, edges)?;
        match self.order {
            Some(order) => g.with_order(order),
            None => Ok(g),
        }
    }
}

fn checked_vertex(id: VertexId, weight: i64, at: String) -> Result<Vertex, GraphError> {
    if weight <= 0 || weight > u32::MAX as i64 {
        return Err(GraphError::NonPositiveWeight { id, weight, at });
    }
    Ok(Vertex { id, weight: weight as u32 })
}

fn checked_sign(sign: i64, at: &str) -> Result<u8, GraphError> {
    match sign {
        0 | 1 => Ok(sign as u8),
        _ => Err(GraphError::InvalidSign { sign, at: at.to_string() }),
    }
}

impl From<&WeightedGraph> for GraphDocument {
    fn from(g: &WeightedGraph) -> Self {
        GraphDocument {
            vertices: g
                .vertices
                .iter()
                .map(|v| VertexDocument { id: v.id, weight: v.weight as i64 })
                .collect(),
            edges: g
                .edge_specs()
                .into_iter()
                .map(|e| EdgeDocument { a: e.a, b: e.b, sign: e.sign.map(i64::from) })
                .collect(),
            order: g.order.clone(),
        }
    }
}

/// Parses a graph document: JSON when the first non-blank character is `{`,
/// otherwise the line-oriented `v`/`e`/`o` edge-list format.
pub fn parse_graph(source: &str) -> Result<WeightedGraph, GraphError> {
    if source.trim_start().starts_with('{') {
        parse_json(source)
    } else {
        parse_edge_list(source)
    }
}

fn parse_json(source: &str) -> Result<WeightedGraph, GraphError> {
    let doc: GraphDocument = serde_json::from_str(source).map_err(|e| GraphError::Syntax {
        message: e.to_string(),
        at: format!("line {}", e.line()),
    })?;
    doc.into_graph()
}

fn parse_edge_list(source: &str) -> Result<WeightedGraph, GraphError> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut order = None;
    for (lineno, raw) in source.lines().enumerate() {
        let at = format!("line {}", lineno + 1);
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| -> Result<i64, GraphError> {
            s.parse::<i64>().map_err(|_| GraphError::Syntax {
                message: format!("expected an integer, found `{s}`"),
                at: at.clone(),
            })
        };
        let id = |s: &str| -> Result<VertexId, GraphError> {
            let v = num(s)?;
            VertexId::try_from(v).map_err(|_| GraphError::Syntax {
                message: format!("vertex id {v} out of range"),
                at: at.clone(),
            })
        };
        match fields[0] {
            "v" if fields.len() == 3 => {
                let vid = id(fields[1])?;
                vertices.push((checked_vertex(vid, num(fields[2])?, at.clone())?, at.clone()));
            }
            "e" if fields.len() == 3 || fields.len() == 4 => {
                let sign = match fields.get(3) {
                    Some(s) => Some(checked_sign(num(s)?, &at)?),
                    None => None,
                };
                edges.push((EdgeSpec { a: id(fields[1])?, b: id(fields[2])?, sign }, at.clone()));
            }
            "o" => {
                order = Some(fields[1..].iter().map(|s| id(s)).collect::<Result<Vec<_>, _>>()?);
            }
            _ => {
                return Err(GraphError::Syntax {
                    message: format!("unrecognised line `{line}`"),
                    at,
                })
            }
        }
    }
    let g = WeightedGraph::build(vertices, edges)?;
    match order {
        Some(order) => g.with_order(order),
        None => Ok(g),
    }
}

// ---------------------------------------------------------------------------
// Cliques

/// A complete subgraph, reported by sorted user ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clique {
    pub vertices: Vec<VertexId>,
    pub weight: u32,
}

impl Clique {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

/// Dense-index form of every clique, including the empty one.
pub(crate) fn clique_indices(g: &WeightedGraph) -> Vec<Vec<usize>> {
    fn extend(g: &WeightedGraph, current: &mut Vec<usize>, candidates: &[usize], out: &mut Vec<Vec<usize>>) {
        out.push(current.clone());
        for (k, &v) in candidates.iter().enumerate() {
            let next: Vec<usize> = candidates[k + 1..]
                .iter()
                .copied()
                .filter(|&u| g.adjacent(v, u))
                .collect();
            current.push(v);
            extend(g, current, &next, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    extend(g, &mut Vec::new(), &all, &mut out);
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    out
}

/// Every complete subgraph, each once, ordered by size then by sorted ids.
pub fn cliques(g: &WeightedGraph) -> Vec<Clique> {
    clique_indices(g)
        .into_iter()
        .map(|members| Clique {
            weight: members.iter().map(|&i| g.weight(i)).sum(),
            vertices: members.iter().map(|&i| g.id(i)).collect(),
        })
        .collect()
}

/// `Σ_j Σ_i (−1)^i c_{i,j} z^j`, stored sparsely by exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CliquePolynomial {
    coefficients: BTreeMap<u32, i64>,
}

impl CliquePolynomial {
    /// Builds from `(exponent, coefficient)` pairs; like terms are summed and zeros dropped.
    pub fn from_terms<I: IntoIterator<Item = (u32, i64)>>(terms: I) -> Self {
        let mut coefficients = BTreeMap::new();
        for (j, c) in terms {
            *coefficients.entry(j).or_insert(0) += c;
        }
        coefficients.retain(|_, c| *c != 0);
        CliquePolynomial { coefficients }
    }

    pub fn coefficient(&self, exponent: u32) -> i64 {
        self.coefficients.get(&exponent).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.coefficients.keys().next_back().copied().unwrap_or(0)
    }

    /// Nonzero `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.coefficients.iter().map(|(&j, &c)| (j, c))
    }
}

impl fmt::Display for CliquePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, u32)> = self.terms().map(|(j, c)| (c, j)).collect();
        write_univariate(f, terms.iter().map(|(c, j)| (c.signum() < 0, c.unsigned_abs().to_string(), *j)))
    }
}

/// Writes `c0 + c1 z + c2 z^2 ...` from `(negative, |coefficient|, exponent)` triples.
pub(crate) fn write_univariate<I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (bool, String, u32)>,
{
    let mut first = true;
    for (negative, magnitude, j) in terms {
        if first {
            if negative {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if negative { '-' } else { '+' })?;
        }
        first = false;
        let unit = magnitude == "1";
        match j {
            0 => write!(f, "{magnitude}")?,
            1 if unit => write!(f, "z")?,
            1 => write!(f, "{magnitude}z")?,
            _ if unit => write!(f, "z^{j}")?,
            _ => write!(f, "{magnitude}z^{j}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

pub fn clique_polynomial(g: &WeightedGraph) -> CliquePolynomial {
    CliquePolynomial::from_terms(clique_indices(g).into_iter().map(|members| {
        let weight: u32 = members.iter().map(|&i| g.weight(i)).sum();
        let sign = if members.len() % 2 == 0 { 1 } else { -1 };
        (weight, sign)
    }))
}

/// `None` when the graph has no triangle, otherwise the lexicographically
/// least triangle by sorted ids.
pub fn find_triangle(g: &WeightedGraph) -> Option<[VertexId; 3]> {
    let n = g.vertex_count();
    for i in 0..n {
        for j in i + 1..n {
            if !g.adjacent(i, j) {
                continue;
            }
            for k in j + 1..n {
                if g.adjacent(i, k) && g.adjacent(j, k) {
                    return Some([g.id(i), g.id(j), g.id(k)]);
                }
            }
        }
    }
    None
}

pub fn is_triangle_free(g: &WeightedGraph) -> bool {
    find_triangle(g).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InertnessReport {
    pub triangle_free: bool,
    pub witness_triangle: Option<[VertexId; 3]>,
    pub clique_polynomial: CliquePolynomial,
    /// `1 − Σ z^{p_i} + Σ z^{p_a + p_b}`.
    pub two_term_polynomial: CliquePolynomial,
    pub matches: bool,
}

pub fn two_term_polynomial(g: &WeightedGraph) -> CliquePolynomial {
    let vertices = g.vertices().iter().map(|v| (v.weight, -1));
    let edges = g.edges().iter().map(|e| (g.weight(e.a) + g.weight(e.b), 1));
    CliquePolynomial::from_terms(std::iter::once((0, 1)).chain(vertices).chain(edges))
}

pub fn inertness_report(g: &WeightedGraph) -> InertnessReport {
    let witness_triangle = find_triangle(g);
    let clique_polynomial = clique_polynomial(g);
    let two_term_polynomial = two_term_polynomial(g);
    let matches = clique_polynomial == two_term_polynomial;
    let triangle_free = witness_triangle.is_none();
    // The lightest clique on three or more vertices is a triangle, so it
    // cannot cancel against anything else.
    assert_eq!(matches, triangle_free, "inertness criterion violated");
    InertnessReport {
        triangle_free,
        witness_triangle,
        clique_polynomial,
        two_term_polynomial,
        matches,
    }
}
