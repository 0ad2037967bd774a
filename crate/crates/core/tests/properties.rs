mod common;

use num_traits::{One, Zero};
use proptest::prelude::*;

use dstar::exactnum::{binomial, comtet_first_kind, poly_mul, product_set, stirling2, ExactInt, NatSet};
use dstar::graph::{parse_edge_list, parse_graph6, Family, Graph};
use dstar::oracle::{binomial_pascal, comtet_expand_naive, series_divide, star_count_enumerate, stirling2_explicit};
use dstar::starseq::{
    frequency_from_star, frequency_sequence, handshake_sum, star_from_frequency, star_sequence,
    StarTriangle,
};
use dstar::zagreb::{generating_function, m2_direct, m2_from_frequency, m2_from_star, recurrence_check};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter_map(|(e, keep)| keep.then_some(e));
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_triangle(max_n: usize) -> impl Strategy<Value = StarTriangle> {
    (0..=max_n).prop_flat_map(|n| {
        let dim = n.saturating_sub(1);
        proptest::collection::vec(-50i64..=50, dim * (dim + 1) / 2).prop_map(move |vals| {
            let mut it = vals.into_iter();
            StarTriangle::from_fn(n, |_, _| ExactInt::from(it.next().unwrap()))
        })
    })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.vertex_count(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in arb_graph(8)) {
        prop_assert_eq!(parse_graph6(g.to_graph6().as_bytes()).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(8)) {
        prop_assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn handshaking(g in arb_graph(9)) {
        prop_assert_eq!(g.degrees().sum(), 2 * g.edge_count());
        prop_assert_eq!(handshake_sum(&frequency_sequence(&g)), ExactInt::from(g.edge_count()));
        prop_assert_eq!(star_sequence(&g).get(0, 0), ExactInt::from(g.edge_count()));
    }

    #[test]
    fn inversion_is_linear_bijection(t in arb_triangle(8)) {
        prop_assert_eq!(frequency_from_star(&star_from_frequency(&t)), t.clone());
        prop_assert_eq!(star_from_frequency(&frequency_from_star(&t)), t);
    }

    #[test]
    fn graph_triangles_invert(g in arb_graph(8)) {
        let s = star_sequence(&g);
        let f = frequency_sequence(&g);
        prop_assert!(s.is_nonnegative() && f.is_nonnegative());
        prop_assert_eq!(star_from_frequency(&f), s.clone());
        prop_assert_eq!(frequency_from_star(&s), f);
    }

    #[test]
    fn star_sequence_is_relabeling_invariant(
        (g, perm) in arb_graph(7).prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        let h = relabel(&g, &perm);
        prop_assert_eq!(star_sequence(&h), star_sequence(&g));
        prop_assert_eq!(frequency_sequence(&h), frequency_sequence(&g));
    }

    #[test]
    fn enumeration_matches_formula(g in arb_graph(7)) {
        let s = star_sequence(&g);
        for (a, b, v) in s.entries() {
            prop_assert_eq!(&star_count_enumerate(&g, a, b), v);
        }
    }

    #[test]
    fn three_routes_agree(g in arb_graph(8), p in 0u64..=6) {
        let d = m2_direct(&g, p);
        prop_assert_eq!(m2_from_frequency(&frequency_sequence(&g), p), d.clone());
        prop_assert_eq!(m2_from_star(&star_sequence(&g), p), d);
    }

    #[test]
    fn gf_series_reproduces_sequence(g in arb_graph(6)) {
        let gf = generating_function(&g);
        let terms = 2 * gf.denominator_roots.len() + 1;
        let series = series_divide(&gf.numerator, &gf.denominator(), terms).unwrap();
        for (p, v) in series.iter().enumerate() {
            prop_assert_eq!(v, &m2_direct(&g, p as u64));
        }
    }

    #[test]
    fn recurrence_holds(g in arb_graph(6)) {
        let order = product_set(g.vertex_count().saturating_sub(1) as u64).len() as u64;
        prop_assert!(recurrence_check(&g, 2 * order).passed());
    }

    #[test]
    fn comtet_naive_agrees(elems in proptest::collection::btree_set(0u64..=40, 0..=14)) {
        let set: NatSet = elems.into_iter().collect();
        let poly = comtet_first_kind(&set);
        prop_assert_eq!(&comtet_expand_naive(&set), &poly);
        prop_assert!(poly.coefficients().last().unwrap().is_one());
        prop_assert_eq!(poly.degree(), set.len());
        if set.contains(0) {
            prop_assert!(poly.comtet(0).is_zero());
        }
        for s in set.iter() {
            prop_assert!(poly.eval(&ExactInt::from(s)).is_zero());
        }
    }

    #[test]
    fn poly_mul_degree_and_commutativity(
        a in proptest::collection::vec(-20i64..=20, 1..8),
        b in proptest::collection::vec(-20i64..=20, 1..8),
    ) {
        let a: Vec<ExactInt> = a.into_iter().map(Into::into).collect();
        let b: Vec<ExactInt> = b.into_iter().map(Into::into).collect();
        let ab = poly_mul(&a, &b);
        prop_assert_eq!(ab.len(), a.len() + b.len() - 1);
        prop_assert_eq!(ab, poly_mul(&b, &a));
    }
}

#[test]
fn stirling_recurrence_matches_explicit_sum() {
    for n in 0..=12 {
        for k in 0..=n {
            assert_eq!(stirling2(n, k), stirling2_explicit(n, k), "{{{n},{k}}}");
        }
    }
}

#[test]
fn binomial_matches_pascal() {
    for n in 0..=20 {
        for k in 0..=22 {
            assert_eq!(binomial(n as u64, k as u64), binomial_pascal(n, k));
        }
    }
}

#[test]
fn product_set_growth() {
    let mut prev = 0;
    for n in 0..=30u64 {
        let c = product_set(n);
        assert!(c.len() >= prev);
        prev = c.len();
        if n >= 1 {
            assert!(c.contains(0) && c.contains(n * n));
        }
    }
}

#[test]
fn complete_graph_scaling() {
    for n in 0..=8usize {
        let g = Family::Complete(n).build().unwrap();
        for p in 0..=6u64 {
            let want = binomial(n as u64, 2) * num_traits::pow(ExactInt::from(n.saturating_sub(1)), 2 * p as usize);
            assert_eq!(m2_direct(&g, p), want, "K{n} p={p}");
            assert_eq!(m2_from_star(&star_sequence(&g), p), want);
        }
    }
}

#[test]
fn double_star_degree_sequence() {
    for a in 0..6 {
        for b in 0..6 {
            let g = Family::DoubleStar(a, b).build().unwrap();
            let mut want = vec![a + 1, b + 1];
            want.extend(std::iter::repeat(1).take(a + b));
            want.sort_unstable_by(|x, y| y.cmp(x));
            assert_eq!(g.degrees().sorted_desc(), want);
            assert_eq!(g.vertex_count(), a + b + 2);
        }
    }
}

#[test]
fn all_small_graphs_verify() {
    use dstar::verify::{verify_graph, VerifyOptions};
    for n in 0..=5 {
        for g in common::iso_classes(n) {
            let r = verify_graph(&g, VerifyOptions::default());
            assert!(r.passed(), "{r:?}");
        }
    }
}

#[test]
fn every_class_satisfies_series_oracle_on_six_vertices() {
    let graphs = common::iso_classes(6);
    assert_eq!(graphs.len(), 156);
    for g in &graphs {
        let gf = generating_function(g);
        let series = series_divide(&gf.numerator, &gf.denominator(), 31).unwrap();
        for (p, v) in series.iter().enumerate() {
            assert_eq!(v, &m2_direct(g, p as u64));
        }
    }
}
