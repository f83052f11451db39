use num_bigint::BigInt;
use proptest::prelude::*;

use cliquegraph::clique::line::{
    components_allow_three_clique_line, degrees_one_or, ThreeCliqueLineConditions,
};
use cliquegraph::clique::{
    build_clique_graph, build_line_graph, clique_number, clique_regular_orders,
    enumerate_cliques_of_order, is_clique_regular, verify_incidence_identities,
    verify_phi_identity,
};
use cliquegraph::graph::{are_isomorphic, is_witness, parse_graph6, write_graph6};
use cliquegraph::spectral::{
    char_poly_exact, degree_bounds, interlacing_bounds, line_graph_extremes,
    predicted_clique_charpoly, spectrum_exact, spectrum_numeric,
};
use cliquegraph::srg::{rca_decisions, srg_spectrum_from_params, QuadSurd, SrgParams};
use cliquegraph::{Graph, IntPolynomial, Polynomial};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            Graph::from_fn(n, |_, _| it.next().unwrap())
        })
    })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn regular_graph() -> impl Strategy<Value = Graph> {
    // circulants are regular; the connection set is closed under negation
    (3usize..=12, proptest::collection::vec(any::<bool>(), 6)).prop_map(|(n, pick)| {
        Graph::from_fn(n, |i, j| {
            let d = (j - i).min(n - (j - i));
            d >= 1 && d <= pick.len() && pick[d - 1]
        })
    })
}

fn int_poly(c: &[i64]) -> IntPolynomial {
    Polynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn clique_regular_orders_are_two_or_clique_number(g in graph(9)) {
        let w = clique_number(&g);
        for o in clique_regular_orders(&g) {
            prop_assert!(o == 2 || o == w, "order {o}, clique number {w}");
        }
    }

    #[test]
    fn graph6_round_trip(g in graph(30)) {
        let text = write_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn invariants_survive_relabeling((g, perm) in graph_with_perm(9)) {
        let h = g.permute(&perm).unwrap();
        let witness = are_isomorphic(&g, &h).unwrap();
        prop_assert!(witness.is_some_and(|w| is_witness(&g, &h, &w)));
        prop_assert_eq!(clique_regular_orders(&g), clique_regular_orders(&h));
        prop_assert_eq!(char_poly_exact(&g).unwrap(), char_poly_exact(&h).unwrap());
    }

    #[test]
    fn three_clique_line_graph_regularity(g in graph(9)) {
        let l = build_line_graph(&g).clique_graph;
        prop_assume!((0..g.n()).all(|v| g.degree(v) > 0) && l.edge_count() > 0);
        prop_assert_eq!(
            is_clique_regular(&l, 3).unwrap().regular,
            components_allow_three_clique_line(&g)
        );
    }

    #[test]
    fn higher_clique_line_graph_regularity(g in graph(9), omega in 4usize..=8) {
        let l = build_line_graph(&g).clique_graph;
        prop_assume!((0..g.n()).all(|v| g.degree(v) > 0) && l.edge_count() > 0);
        prop_assert_eq!(is_clique_regular(&l, omega).unwrap().regular, degrees_one_or(&g, omega));
    }

    #[test]
    fn three_clique_graph_of_line_graph(g in graph(8)) {
        prop_assume!(g.is_connected() && g.edge_count() >= 2);
        let l = build_line_graph(&g).clique_graph;
        let c = build_clique_graph(&l, 3).unwrap().clique_graph;
        let iso = are_isomorphic(&c, &g).unwrap().is_some();
        prop_assert_eq!(iso, ThreeCliqueLineConditions::of(&g).all());
    }

    #[test]
    fn higher_clique_graph_of_line_graph(g in graph(8), omega in 4usize..=7) {
        prop_assume!(g.is_connected() && g.edge_count() >= 2);
        let l = build_line_graph(&g).clique_graph;
        let c = build_clique_graph(&l, omega).unwrap().clique_graph;
        let iso = are_isomorphic(&c, &g).unwrap().is_some();
        prop_assert_eq!(iso, g.degree_info().k == Some(omega));
    }

    #[test]
    fn identities_and_bounds_on_clique_regular_graphs(g in graph(9)) {
        for h in [g.clone(), build_line_graph(&g).clique_graph] {
            if h.n() > 20 {
                continue;
            }
            for omega in clique_regular_orders(&h) {
                prop_assert!(verify_incidence_identities(&h, omega).unwrap());
                prop_assert!(verify_phi_identity(&h, omega, 2).unwrap());
                let c = build_clique_graph(&h, omega).unwrap().clique_graph;
                let values = spectrum_numeric(&c, 1e-6).unwrap().values_f64();
                let (lo, hi) = line_graph_extremes(&h).unwrap();
                let inter = interlacing_bounds(omega, lo, hi);
                let deg = degree_bounds::<f64>(omega, h.degree_info().max_degree);
                for x in values {
                    prop_assert!(inter.contains(x, 1e-9), "{x} outside {inter:?}");
                    prop_assert!(deg.contains(x, 1e-9), "{x} outside {deg:?}");
                }
            }
        }
    }

    #[test]
    fn rca_routes_agree(g in graph(9)) {
        for omega in 2..=clique_number(&g) + 1 {
            let (a, b) = rca_decisions(&g, omega).unwrap();
            prop_assert_eq!(a, b, "omega {}", omega);
        }
    }

    #[test]
    fn exact_and_numeric_spectra_agree(g in graph(9)) {
        let exact = spectrum_exact(&g, 1e-6).unwrap();
        let numeric = spectrum_numeric(&g, 1e-6).unwrap();
        let (mut a, mut b) = (exact.values_f64(), numeric.values_f64());
        a.sort_by(f64::total_cmp);
        b.sort_by(f64::total_cmp);
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() < 1e-6);
        }
        let p = char_poly_exact(&g).unwrap();
        for (v, _) in exact.exact_entries().unwrap_or_default() {
            if let Some(r) = v.as_integer() {
                prop_assert_eq!(p.eval(&BigInt::from(r)), BigInt::from(0));
            }
        }
    }

    #[test]
    fn trace_identities(g in graph(9)) {
        let values = spectrum_numeric(&g, 1e-6).unwrap().values_f64();
        let power = |k: i32| values.iter().map(|x| x.powi(k)).sum::<f64>();
        let triangles = enumerate_cliques_of_order(&g, 3).unwrap().len() as f64;
        prop_assert!(power(1).abs() < 1e-8);
        prop_assert!((power(2) - 2.0 * g.edge_count() as f64).abs() < 1e-7);
        prop_assert!((power(3) - 6.0 * triangles).abs() < 1e-6);
        // coefficients of p(x): x^n − |E| x^{n−2} − 2t x^{n−3} + …
        let p = char_poly_exact(&g).unwrap();
        let n = g.n();
        if n >= 2 {
            prop_assert_eq!(p.coeff(n - 2), BigInt::from(-(g.edge_count() as i64)));
        }
        if n >= 3 {
            prop_assert_eq!(p.coeff(n - 3), BigInt::from(-2 * triangles as i64));
        }
    }

    #[test]
    fn line_graph_transfer(g in regular_graph()) {
        let k = g.degree_info().k.unwrap();
        prop_assume!(k > 0);
        let l = build_line_graph(&g).clique_graph;
        let predicted = predicted_clique_charpoly(&char_poly_exact(&g).unwrap(), g.n(), k, 2).unwrap();
        prop_assert_eq!(predicted, char_poly_exact(&l).unwrap());
    }

    #[test]
    fn polynomial_shift_is_substitution(
        c in proptest::collection::vec(-20i64..20, 1..7),
        a in -5i64..5,
        x in -5i64..5,
    ) {
        let p = int_poly(&c);
        let lhs = p.shift(&BigInt::from(a)).eval(&BigInt::from(x));
        prop_assert_eq!(lhs, p.eval(&BigInt::from(x + a)));
    }

    #[test]
    fn surd_order_matches_floats(
        a in -50i64..50, b in -20i64..20, d in 2i64..30, c in 1i64..10,
        a2 in -50i64..50, b2 in -20i64..20, c2 in 1i64..10,
    ) {
        let x = QuadSurd::new(a, b, d, c);
        let y = QuadSurd::new(a2, b2, d, c2);
        let (fx, fy) = (x.to_f64(), y.to_f64());
        if (fx - fy).abs() > 1e-9 {
            prop_assert_eq!(x < y, fx < fy);
        }
        if let (Some(s), Some(p)) = (x.checked_add(&y), x.checked_mul(&y)) {
            prop_assert!((s.to_f64() - (fx + fy)).abs() < 1e-9);
            prop_assert!((p.to_f64() - fx * fy).abs() < 1e-6);
        }
    }

    #[test]
    fn srg_eigenvalue_identities(n in 5u64..200, k in 2u64..60, lambda in 0u64..30, mu in 1u64..30) {
        let Ok(p) = SrgParams::new(n, k, lambda, mu) else { return Ok(()); };
        let Ok(s) = srg_spectrum_from_params(&p) else { return Ok(()); };
        let sum = s.r.checked_add(&s.s).unwrap();
        let prod = s.r.checked_mul(&s.s).unwrap();
        prop_assert_eq!(sum, QuadSurd::integer(lambda as i64 - mu as i64));
        prop_assert_eq!(prod, QuadSurd::integer(mu as i64 - k as i64));
        prop_assert_eq!(1 + s.f + s.g, n);
        let trace = k as f64 + s.f as f64 * s.r.to_f64() + s.g as f64 * s.s.to_f64();
        prop_assert!(trace.abs() < 1e-6);
    }
}
