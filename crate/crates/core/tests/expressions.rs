use polar_core::catalog::families;
use polar_core::expr::{eval_expr, format_expr, parse_expr, AtomKind, GraphExpr, IntExpr};
use polar_core::graph::is_isomorphic;
use polar_core::Graph;
use proptest::prelude::*;

fn component_sizes(g: &Graph) -> Vec<usize> {
    let mut sizes: Vec<usize> = g.components().iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    sizes
}

#[test]
fn parses_family_shapes() {
    let e = parse_expr("K_1 + (k+1)K_2").unwrap();
    assert_eq!(
        e,
        GraphExpr::Union(vec![GraphExpr::k(1), GraphExpr::repeat(IntExpr::new(1, 1), GraphExpr::k(2))])
    );
    let e = parse_expr("co(3K_2) + K_1").unwrap();
    assert_eq!(
        e,
        GraphExpr::Union(vec![
            GraphExpr::complement(GraphExpr::repeat(IntExpr::constant(3), GraphExpr::k(2))),
            GraphExpr::k(1),
        ])
    );
    assert_eq!(parse_expr("K_2").unwrap(), GraphExpr::k(2));
    assert_eq!(
        parse_expr("K_{2,2,2}").unwrap(),
        GraphExpr::atom(AtomKind::K, [IntExpr::constant(2); 3])
    );
}

#[test]
fn multiplicity_binds_tighter_than_join() {
    let e = parse_expr("2K_2 * K_1").unwrap();
    let GraphExpr::Join(children) = &e else { panic!("{e:?}") };
    assert!(matches!(children[0], GraphExpr::Repeat { .. }));
}

#[test]
fn rejects_malformed_text() {
    for text in ["", "K_", "K_1 +", "co(K_2", "K_{k*k}", "Q_3", "K_1 ++ K_2"] {
        assert!(parse_expr(text).is_err(), "{text:?}");
    }
}

#[test]
fn round_trips() {
    for text in ["K_1 + (k+1)K_2", "co(2P_3) + kK_1", "K_{2,2,2}", "(2K_{k+1} * K_2) + (k-1)K_1"] {
        let e = parse_expr(text).unwrap();
        assert_eq!(parse_expr(&format_expr(&e)).unwrap(), e, "{text}");
    }
    for family in families() {
        assert_eq!(parse_expr(&format_expr(&family.expr)).unwrap(), family.expr, "{}", family.id);
    }
}

#[test]
fn evaluation_examples() {
    let f1 = eval_expr(&parse_expr("K_1 + (k+1)K_2").unwrap(), 2).unwrap();
    assert_eq!(f1.order(), 7);
    assert_eq!(component_sizes(&f1), vec![1, 2, 2, 2]);
    let k33 = eval_expr(&parse_expr("K_{k+1,k+1}").unwrap(), 2).unwrap();
    assert_eq!((k33.order(), k33.size()), (6, 9));
    let f24 = eval_expr(&parse_expr("(2K_{k+1} * K_2) + (k-1)K_1").unwrap(), 3).unwrap();
    assert_eq!(f24.order(), 12);
    assert!(eval_expr(&parse_expr("(k-3)K_1").unwrap(), 2).is_err());
    assert!(eval_expr(&parse_expr("C_k").unwrap(), 2).is_err());
    let c5 = eval_expr(&parse_expr("C_{k+3}").unwrap(), 2).unwrap();
    assert!(is_isomorphic(&c5, &Graph::cycle(5).unwrap()).unwrap());
}

#[test]
fn symbolic_vertex_counts_match_evaluation() {
    for family in families() {
        let count = family.expr.vertex_count();
        for k in 2..=4 {
            let g = eval_expr(&family.expr, k).unwrap();
            assert_eq!(count.eval(k), g.order() as i64, "{} at k={k}", family.id);
        }
    }
}

fn arb_size() -> impl Strategy<Value = IntExpr> {
    (0i64..=1, 0i64..=2).prop_map(|(coef, constant)| IntExpr::new(coef, constant.max(1 - coef)))
}

fn arb_expr() -> impl Strategy<Value = GraphExpr> {
    let atom = prop_oneof![
        arb_size().prop_map(|s| GraphExpr::atom(AtomKind::K, [s])),
        (arb_size(), arb_size()).prop_map(|(a, b)| GraphExpr::atom(AtomKind::K, [a, b])),
        arb_size().prop_map(|s| GraphExpr::atom(AtomKind::P, [s])),
    ];
    atom.prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            proptest::collection::vec(inner.clone(), 2..=3).prop_map(GraphExpr::Union),
            proptest::collection::vec(inner.clone(), 2..=3).prop_map(GraphExpr::Join),
            inner.clone().prop_map(GraphExpr::complement),
            (arb_size(), inner).prop_map(|(n, c)| GraphExpr::repeat(n, c)),
        ]
    })
}

proptest! {
    #[test]
    fn evaluation_is_a_homomorphism(a in arb_expr(), b in arb_expr(), k in 2i64..=3) {
        let (ga, gb) = (eval_expr(&a, k).unwrap(), eval_expr(&b, k).unwrap());
        let union = GraphExpr::Union(vec![a.clone(), b.clone()]);
        prop_assert_eq!(eval_expr(&union, k).unwrap(), ga.disjoint_union(&gb));
        let join = GraphExpr::Join(vec![a.clone(), b.clone()]);
        prop_assert_eq!(eval_expr(&join, k).unwrap(), ga.join(&gb));
        prop_assert_eq!(eval_expr(&GraphExpr::complement(a.clone()), k).unwrap(), ga.complement());
        let twice = GraphExpr::repeat(IntExpr::constant(2), a);
        prop_assert_eq!(eval_expr(&twice, k).unwrap(), ga.disjoint_union(&ga));
    }

    #[test]
    fn format_then_parse_is_identity(e in arb_expr()) {
        prop_assert_eq!(parse_expr(&format_expr(&e)).unwrap(), e);
    }

    #[test]
    fn vertex_count_is_exact(e in arb_expr(), k in 2i64..=4) {
        prop_assert_eq!(e.vertex_count().eval(k), eval_expr(&e, k).unwrap().order() as i64);
    }
}
