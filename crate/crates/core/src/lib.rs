//! Clique polynomials, Hilbert series and graded commutator algebras of
//! weighted graphs.
//!
//! A graph with positive vertex weights `p_i` defines the algebra
//! `A(Γ) = k⟨x_i⟩ / ([x_a, x_b] : ab ∈ E)` with `|x_i| = p_i`. Its Hilbert
//! series is the inverse of the clique polynomial; the crate computes it by
//! inverting the polynomial, by counting normal words of a noncommutative
//! Gröbner basis, by enumerating traces, and by brute-force linear algebra.

pub mod corpus;
pub mod freealg;
pub mod graph;
pub mod groebner;
pub mod oracle;
pub mod series;
pub mod trace;

pub use freealg::{GradedAlphabet, NCPolynomial, Presentation, Word};
pub use graph::{
    clique_polynomial, cliques, inertness_report, is_triangle_free, parse_graph, Clique,
    CliquePolynomial, EdgeSigns, GraphError, InertnessReport, SignPolicy, VertexId, WeightedGraph,
};
pub use groebner::{hilbert_via_groebner, mora_truncated, RewriteRule, TruncatedGB};
pub use oracle::{dimension_by_rank, oracle_hilbert};
pub use series::{hilbert_series, TruncatedSeries};
pub use trace::{MonoidSeries, TraceMonoid, TraceWord};
