use proptest::prelude::*;

use num_bigint::BigInt;
use relroots::multigraph::format::parse_graph;
use relroots::relpoly::{
    f_form, f_to_h, f_vector_bruteforce, h_to_f, h_vector, reliability_poly, spanning_tree_count, HVector, Poly,
};
use relroots::{GraphFormat, MinorMode, Multigraph};

fn multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_m).prop_map(move |e| Multigraph::new(n, e).unwrap())
    })
}

/// Connected, via a random spanning tree plus random extra edges.
fn connected_multigraph(max_n: usize, extra: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_n).prop_flat_map(move |n| {
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|v| (0..v).boxed()).collect();
        (parents, prop::collection::vec((0..n, 0..n), 0..=extra)).prop_map(move |(p, e)| {
            let tree = p.into_iter().enumerate().map(|(i, u)| (u, i + 1));
            Multigraph::new(n, tree.chain(e)).unwrap()
        })
    })
}

fn q() -> Poly {
    Poly::monomial(BigInt::from(1), 1)
}

fn one_minus_q() -> Poly {
    Poly::one_minus_q_pow(1)
}

/// Vertices of each connected component of `g`, ascending.
fn components(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut stack = vec![s];
        comp[s] = id;
        let mut verts = vec![];
        while let Some(v) = stack.pop() {
            verts.push(v);
            for &(a, b) in g.edges() {
                let w = if a == v { b } else if b == v { a } else { continue };
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        verts.sort_unstable();
        out.push(verts);
    }
    out
}

fn induced(g: &Multigraph, verts: &[usize]) -> Multigraph {
    let idx = |v: usize| verts.iter().position(|&x| x == v);
    let edges = g.edges().iter().filter_map(|&(u, v)| Some((idx(u)?, idx(v)?)));
    Multigraph::new(verts.len(), edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn engine_matches_subset_oracle(g in connected_multigraph(6, 7)) {
        prop_assume!(g.size() <= 12);
        let rel = reliability_poly(&g);
        let f = f_vector_bruteforce(&g).unwrap();
        prop_assert_eq!(&f_form(&rel, g.size(), g.corank()).unwrap(), &f);
        let h = h_vector(&g).unwrap();
        prop_assert_eq!(&f_to_h(&f).unwrap(), &h);
        prop_assert_eq!(h_to_f(&h), f);
    }

    #[test]
    fn disconnected_graphs_have_zero_reliability(g in multigraph(7, 8)) {
        prop_assert_eq!(reliability_poly(&g).is_zero(), !g.is_connected());
    }

    #[test]
    fn deletion_contraction(g in connected_multigraph(6, 6), pick in any::<prop::sample::Index>()) {
        let non_loops: Vec<usize> = (0..g.size()).filter(|&e| g.edges()[e].0 != g.edges()[e].1).collect();
        prop_assume!(!non_loops.is_empty());
        let e = non_loops[pick.index(non_loops.len())];
        let del = reliability_poly(&g.edge_minor(e, MinorMode::Delete).unwrap());
        let con = reliability_poly(&g.edge_minor(e, MinorMode::Contract).unwrap());
        prop_assert_eq!(reliability_poly(&g), &(&q() * &del) + &(&one_minus_q() * &con));
    }

    #[test]
    fn bridge_factorization(g in connected_multigraph(7, 4)) {
        for e in g.bridges().unwrap() {
            let minus = g.edge_minor(e, MinorMode::Delete).unwrap();
            let parts = components(&minus);
            prop_assert_eq!(parts.len(), 2);
            let r1 = reliability_poly(&induced(&minus, &parts[0]));
            let r2 = reliability_poly(&induced(&minus, &parts[1]));
            prop_assert_eq!(reliability_poly(&g), &(&one_minus_q() * &r1) * &r2);
        }
    }

    #[test]
    fn cut_vertex_factorization(a in connected_multigraph(4, 4), b in connected_multigraph(4, 4)) {
        let na = a.order();
        let shift = |v: usize| if v == 0 { na - 1 } else { na - 1 + v };
        let edges = a.edges().iter().copied().chain(b.edges().iter().map(|&(u, v)| (shift(u), shift(v))));
        let glued = Multigraph::new(na + b.order() - 1, edges).unwrap();
        prop_assert_eq!(reliability_poly(&glued), &reliability_poly(&a) * &reliability_poly(&b));
    }

    #[test]
    fn loops_do_not_matter(g in connected_multigraph(6, 6), loops in prop::collection::vec(0usize..6, 1..4)) {
        let n = g.order();
        let with = Multigraph::new(n, g.edges().iter().copied().chain(loops.iter().map(|&v| (v % n, v % n)))).unwrap();
        prop_assert_eq!(reliability_poly(&with), reliability_poly(&g));
    }

    #[test]
    fn h_vector_structure(g in connected_multigraph(7, 6)) {
        let h = h_vector(&g).unwrap();
        prop_assert_eq!(h.0.len(), g.corank() + 1);
        prop_assert_eq!(&h.0[0], &BigInt::from(1));
        prop_assert_eq!(h.total(), spanning_tree_count(&g));
        prop_assert!(h.0.iter().all(|x| x >= &BigInt::from(0)));
        if h.0.len() > 1 {
            let bridges = g.bridges().unwrap().len();
            prop_assert_eq!(&h.0[1], &BigInt::from(g.order() - 1 - bridges));
        }
    }

    #[test]
    fn rel_endpoints(g in connected_multigraph(7, 6)) {
        let rel = reliability_poly(&g);
        prop_assert_eq!(rel.coeff(0), BigInt::from(1));
        prop_assert!(rel.degree().unwrap() <= g.size());
        if g.order() >= 2 {
            let sum: BigInt = rel.coeffs().iter().sum();
            prop_assert_eq!(sum, BigInt::from(0));
        }
    }

    #[test]
    fn canonical_key_relabel_invariant(g in multigraph(7, 10), perm in Just((0..7).collect::<Vec<usize>>()).prop_shuffle()) {
        let n = g.order();
        let p: Vec<usize> = perm.into_iter().filter(|&v| v < n).collect();
        let h = g.relabel(&p).unwrap();
        prop_assert_eq!(h.canonical_key(), g.canonical_key());
        prop_assert_eq!(h.canonical_form(), g.canonical_form());
    }

    #[test]
    fn sparse6_round_trip(g in multigraph(70, 12)) {
        let s = g.to_sparse6();
        prop_assert_eq!(parse_graph(s.as_bytes(), GraphFormat::Sparse6).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip(g in multigraph(70, 12)) {
        let simple = Multigraph::new(g.order(), {
            let mut e: Vec<(usize, usize)> = g.edges().iter().copied().filter(|(u, v)| u != v).collect();
            e.sort_unstable();
            e.dedup();
            e
        }).unwrap();
        let s = simple.to_graph6().unwrap();
        prop_assert_eq!(&parse_graph(s.as_bytes(), GraphFormat::Graph6).unwrap(), &simple);
        let j = simple.to_json();
        prop_assert_eq!(parse_graph(j.as_bytes(), GraphFormat::EdgeListJson).unwrap(), simple);
    }

    #[test]
    fn f_h_transform_round_trip(h in prop::collection::vec(0i64..50, 1..8)) {
        let mut h = h;
        h[0] = 1;
        let hv = HVector::from_i64(&h);
        prop_assert_eq!(f_to_h(&h_to_f(&hv)).unwrap(), hv);
    }
}
