mod common;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use cliquealg::freealg::{GradedAlphabet, NCPolynomial, Variable, Word};
use cliquealg::graph::{clique_polynomial, cliques, EdgeSigns};
use cliquealg::groebner::{groebner_for_graph, reduce, RewriteRule};
use cliquealg::trace::{weight_map, MonoidSeries, TraceMonoid};
use cliquealg::{hilbert_series, TruncatedSeries, WeightedGraph};

use common::{arb_graph, arb_signed_graph, clique_subsets, commutation_class};

const CASES: u32 = 256;

fn arb_series(truncation: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-20i64..=20, truncation + 1).prop_map(|c| TruncatedSeries::from_i64s(&c))
}

fn arb_unit_series(truncation: usize) -> impl Strategy<Value = TruncatedSeries> {
    (prop_oneof![Just(1i64), Just(-1)], prop::collection::vec(-9i64..=9, truncation)).prop_map(|(a0, rest)| {
        let mut c = vec![a0];
        c.extend(rest);
        TruncatedSeries::from_i64s(&c)
    })
}

fn series_triple() -> impl Strategy<Value = (TruncatedSeries, TruncatedSeries, TruncatedSeries)> {
    (0usize..=10).prop_flat_map(|n| (arb_series(n), arb_series(n), arb_series(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn series_ring_axioms((f, g, h) in series_triple()) {
        let n = f.truncation();
        let zero = TruncatedSeries::zero(n);
        let one = TruncatedSeries::one(n);
        prop_assert_eq!(f.checked_add(&g).unwrap(), g.checked_add(&f).unwrap());
        prop_assert_eq!(
            f.checked_add(&g).unwrap().checked_add(&h).unwrap(),
            f.checked_add(&g.checked_add(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(f.checked_add(&zero).unwrap(), f.clone());
        prop_assert_eq!(f.checked_sub(&f).unwrap(), zero.clone());
        prop_assert_eq!(f.checked_mul(&g).unwrap(), g.checked_mul(&f).unwrap());
        prop_assert_eq!(
            f.checked_mul(&g).unwrap().checked_mul(&h).unwrap(),
            f.checked_mul(&g.checked_mul(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(
            f.checked_mul(&g.checked_add(&h).unwrap()).unwrap(),
            f.checked_mul(&g).unwrap().checked_add(&f.checked_mul(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(f.checked_mul(&one).unwrap(), f.clone());
        prop_assert_eq!(f.checked_mul(&zero).unwrap(), zero);
    }

    #[test]
    fn series_inversion(f in (0usize..=12).prop_flat_map(arb_unit_series)) {
        let inv = f.invert().unwrap();
        prop_assert!(f.checked_mul(&inv).unwrap().is_one());
        prop_assert_eq!(inv.invert().unwrap(), f);
    }

    #[test]
    fn deglex_is_admissible(
        weights in prop::collection::vec(1u32..=3, 1..=4),
        words in prop::collection::vec(prop::collection::vec(0usize..4, 0..6), 4),
        shuffle in Just((0usize..4).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let n = weights.len();
        let vars = weights.iter().enumerate().map(|(i, &d)| Variable { name: format!("v{i}"), degree: d }).collect();
        let precedence: Vec<usize> = shuffle.into_iter().filter(|&i| i < n).collect();
        let a = GradedAlphabet::new(vars, precedence).unwrap();
        let w: Vec<Word> = words.into_iter().map(|w| Word::new(w.into_iter().map(|l| l % n).collect())).collect();
        let (u, v, left, right) = (&w[0], &w[1], &w[2], &w[3]);

        // totality and antisymmetry
        prop_assert_eq!(a.compare(u, v), a.compare(v, u).reverse());
        prop_assert_eq!(a.compare(u, v) == Ordering::Equal, u == v);
        // degree comes first
        if a.degree(u) < a.degree(v) {
            prop_assert_eq!(a.compare(u, v), Ordering::Less);
        }
        // compatible with concatenation on both sides
        let wrap = |x: &Word| left.concat(x).concat(right);
        prop_assert_eq!(a.compare(&wrap(u), &wrap(v)), a.compare(u, v));
        // transitivity
        let mut sorted = vec![u.clone(), v.clone(), left.clone()];
        sorted.sort_by(|x, y| a.compare(x, y));
        prop_assert_ne!(a.compare(&sorted[0], &sorted[2]), Ordering::Greater);
        // the empty word is the least element
        prop_assert_ne!(a.compare(&Word::empty(), u), Ordering::Greater);
    }
}

/// One random sequence of single rewrites, to compare against `reduce`.
fn reduce_randomly(f: &NCPolynomial, rules: &[RewriteRule], picks: &[usize]) -> NCPolynomial {
    let mut p = f.clone();
    let mut step = 0;
    loop {
        let mut redexes = Vec::new();
        for (w, c) in p.terms() {
            for (r, rule) in rules.iter().enumerate() {
                let n = rule.lhs.len();
                for start in 0..=w.len().saturating_sub(n) {
                    if n <= w.len() && w.letters()[start..start + n] == *rule.lhs.letters() {
                        redexes.push((w.clone(), c.clone(), r, start));
                    }
                }
            }
        }
        if redexes.is_empty() {
            return p;
        }
        let (w, c, r, start) = redexes.swap_remove(picks[step % picks.len()] % redexes.len());
        step += 1;
        let n = rules[r].lhs.len();
        let left = Word::new(w.letters()[..start].to_vec());
        let right = Word::new(w.letters()[start + n..].to_vec());
        p = p
            .sub(&NCPolynomial::monomial(w, c.clone()))
            .add(&rules[r].rhs.sandwich(&left, &right).scale(&c));
    }
}

fn arb_polynomial(letters: usize, max_len: usize) -> impl Strategy<Value = Vec<(Vec<usize>, i64)>> {
    prop::collection::vec((prop::collection::vec(0..letters, 0..=max_len), -5i64..=5), 1..6)
}

const CONFLUENCE_DEGREE: u32 = 6;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn reduction_is_confluent_on_completed_bases(
        (g, signs, terms, picks, perm) in arb_signed_graph(1, 4, 2).prop_flat_map(|(g, s)| {
            let n = g.vertex_count();
            (
                Just(g),
                Just(s),
                arb_polynomial(n, CONFLUENCE_DEGREE as usize),
                prop::collection::vec(any::<usize>(), 1..8),
                Just((0..64usize).collect::<Vec<_>>()).prop_shuffle(),
            )
        })
    ) {
        let gb = groebner_for_graph(&g, &signs, None, CONFLUENCE_DEGREE).unwrap();
        let a = gb.alphabet();
        let f = NCPolynomial::from_terms(terms.into_iter().filter_map(|(w, c)| {
            let w = Word::new(w);
            (a.degree(&w) <= CONFLUENCE_DEGREE).then(|| (w, BigRational::from_integer(BigInt::from(c))))
        }));
        let mut shuffled: Vec<RewriteRule> = Vec::new();
        for &i in &perm {
            if let Some(r) = gb.rules().get(i) {
                shuffled.push(r.clone());
            }
        }
        prop_assert_eq!(shuffled.len(), gb.rules().len());

        let canonical = gb.reduce(&f);
        prop_assert_eq!(reduce(&f, &shuffled, a), canonical.clone());
        prop_assert_eq!(reduce_randomly(&f, gb.rules(), &picks), canonical.clone());
        prop_assert!(canonical.terms().all(|(w, _)| gb.is_normal(w)));
    }
}

fn arb_monoid_series(g: &WeightedGraph, truncation: u32) -> impl Strategy<Value = MonoidSeries> {
    let g = g.clone();
    let n = g.vertex_count().max(1);
    prop::collection::vec((prop::collection::vec(0..n, 0..=8), -4i64..=4), 0..8).prop_map(move |terms| {
        let m = TraceMonoid::new(&g);
        let mut s = MonoidSeries::zero(truncation);
        for (w, c) in terms {
            if g.vertex_count() == 0 && !w.is_empty() {
                continue;
            }
            s.add_term(m.normalize(&w), BigInt::from(c));
        }
        s
    })
}

fn graph_with_three_series(
    truncation: u32,
) -> impl Strategy<Value = (WeightedGraph, MonoidSeries, MonoidSeries, MonoidSeries)> {
    arb_graph(0, 4, 3).prop_flat_map(move |g| {
        let (a, b, c) = (
            arb_monoid_series(&g, truncation),
            arb_monoid_series(&g, truncation),
            arb_monoid_series(&g, truncation),
        );
        (Just(g), a, b, c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn weight_is_a_ring_homomorphism((g, f, h, _) in graph_with_three_series(8)) {
        let m = TraceMonoid::new(&g);
        let product = m.mul(&f, &h).unwrap();
        prop_assert_eq!(weight_map(&product), weight_map(&f).checked_mul(&weight_map(&h)).unwrap());
        let sum = f.add(&h).unwrap();
        prop_assert_eq!(weight_map(&sum), weight_map(&f).checked_add(&weight_map(&h)).unwrap());
        prop_assert!(weight_map(&m.one(8)).is_one());
    }

    #[test]
    fn monoid_product_is_associative_and_unital((g, f, h, k) in graph_with_three_series(6)) {
        let m = TraceMonoid::new(&g);
        let left = m.mul(&m.mul(&f, &h).unwrap(), &k).unwrap();
        let right = m.mul(&f, &m.mul(&h, &k).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(m.mul(&f, &m.one(6)).unwrap(), f.clone());
        prop_assert_eq!(m.mul(&m.one(6), &f).unwrap(), f);
    }

    #[test]
    fn trace_normal_form_is_a_class_invariant(
        (g, w) in arb_graph(1, 5, 2).prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), prop::collection::vec(0..n, 0..=7))
        })
    ) {
        let m = TraceMonoid::new(&g);
        let t = m.normalize(&w);
        prop_assert_eq!(m.normalize(t.letters()), t.clone());
        let class = commutation_class(&g, &w);
        prop_assert_eq!(class.iter().next().unwrap().as_slice(), t.letters());
        for u in &class {
            prop_assert_eq!(m.normalize(u), t.clone());
        }
        let weight: u32 = w.iter().map(|&l| g.weight(l)).sum();
        prop_assert_eq!(t.weight(), weight);
    }

    #[test]
    fn clique_polynomial_of_union_and_join(g in arb_graph(0, 5, 3), h in arb_graph(0, 5, 3)) {
        let (cg, ch) = (clique_polynomial(&g), clique_polynomial(&h));
        let n = (cg.degree() + ch.degree()) as usize;
        let (sg, sh) = (cg.to_series(n), ch.to_series(n));
        let one = TruncatedSeries::one(n);
        let union = clique_polynomial(&g.disjoint_union(&h)).to_series(n);
        prop_assert_eq!(union, sg.checked_add(&sh).unwrap().checked_sub(&one).unwrap());
        let join = clique_polynomial(&g.join(&h)).to_series(n);
        prop_assert_eq!(join, sg.checked_mul(&sh).unwrap());
    }

    #[test]
    fn unit_weight_clique_counts(g in arb_graph(0, 7, 1)) {
        let subsets = clique_subsets(&g);
        let p = clique_polynomial(&g);
        for (i, c) in p.terms() {
            let count = subsets.iter().filter(|s| s.len() == i as usize).count() as i64;
            prop_assert_eq!(c, if i % 2 == 0 { count } else { -count });
        }
        let total: i64 = p.terms().map(|(_, c)| c.abs()).sum();
        prop_assert_eq!(total as usize, subsets.len());
        prop_assert_eq!(cliques(&g).len(), subsets.len());
    }

    #[test]
    fn hilbert_series_inverts_clique_polynomial(g in arb_graph(0, 6, 3), n in 0usize..=12) {
        let h = hilbert_series(&g, n);
        let c = clique_polynomial(&g).to_series(n);
        prop_assert!(h.checked_mul(&c).unwrap().is_one());
    }

    #[test]
    fn trace_counts_match_hilbert_series(g in arb_graph(0, 4, 3), n in 0u32..=6) {
        let m = TraceMonoid::new(&g);
        prop_assert_eq!(weight_map(&m.characteristic(n)), hilbert_series(&g, n as usize));
    }

    #[test]
    fn groebner_counts_ignore_signs(
        (g, signs) in arb_signed_graph(0, 4, 2),
        n in 0u32..=6,
    ) {
        let gb = groebner_for_graph(&g, &signs, None, n).unwrap();
        let zero = groebner_for_graph(&g, &EdgeSigns::zero(g.edge_count()), None, n).unwrap();
        prop_assert_eq!(gb.leading_words_through(n), zero.leading_words_through(n));
        prop_assert_eq!(gb.hilbert_series(n as usize).unwrap(), hilbert_series(&g, n as usize));
    }
}
