use std::collections::HashMap;

use proptest::prelude::*;
use wsys_core::algebra::{coef, Monomial};
use wsys_core::glws::{feps_direct, WglEngine};
use wsys_core::invariants::{interlace_graph_with, EdgePolicy};
use wsys_core::{DMat, Graph, Perm, Poly, RatFunc, Var};

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-5i64..=5, 0u32..3, 0u32..3, 0u32..2), 0..5).prop_map(|terms| {
        Poly::from_terms(terms.into_iter().map(|(c, a, b, n)| {
            (Monomial::from_pairs([(Var::Z, a), (Var::U, b), (Var::N, n)]), coef(c))
        }))
    })
}

fn perm(max: usize) -> impl Strategy<Value = Perm> {
    (0..=max)
        .prop_flat_map(|m| Just((1..=m).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Perm::from_one_line(&v).unwrap())
}

fn graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), 0..(1u64 << pairs)).prop_map(|(n, code)| Graph::from_code(n, code))
    })
}

proptest! {
    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn text_round_trip(p in poly()) {
        prop_assert_eq!(p.to_string().parse::<Poly>().unwrap(), p);
    }

    #[test]
    fn subst_is_a_homomorphism(p in poly(), q in poly(), s in poly()) {
        let b: HashMap<Var, Poly> = [(Var::Z, s)].into();
        prop_assert_eq!((&p * &q).subst(&b), &p.subst(&b) * &q.subst(&b));
        prop_assert_eq!((&p + &q).subst(&b), &p.subst(&b) + &q.subst(&b));
    }

    #[test]
    fn ratfunc_normal_form(cs in prop::collection::vec(-4i64..=4, 0..5), d in 0u32..4) {
        let num = Poly::from_univariate(Var::Z, &cs.iter().map(|&c| coef(c)).collect::<Vec<_>>());
        let r = RatFunc::new(&num, d).unwrap();
        let one_minus_z = Poly::one() - Poly::var(Var::Z);
        prop_assert_eq!(&RatFunc::new(&(&num * &one_minus_z), d + 1).unwrap(), &r);
        let s = r.add(&r);
        let doubled: Vec<_> = r.series(8).iter().map(|c| c * coef(2)).collect();
        prop_assert_eq!(s.series(8), doubled);
    }

    #[test]
    fn perm_inverse_and_text(a in perm(8)) {
        prop_assert_eq!(a.compose(&a.inverse()), Perm::identity(a.len()));
        prop_assert_eq!(a.to_string().parse::<Perm>().unwrap(), a);
    }

    #[test]
    fn wgl_rotation_invariant(a in perm(6), k in 0usize..6) {
        let e = WglEngine::new();
        let k = if a.is_empty() { 0 } else { k % a.len() };
        prop_assert_eq!(e.wgl(&a.rotate(k)).unwrap(), e.wgl(&a).unwrap());
    }

    #[test]
    fn wgl_specializations(a in perm(7)) {
        let e = WglEngine::new();
        prop_assert_eq!(e.casimir_to_n(&a).unwrap(), Poly::var_pow(Var::N, a.cycle_count() as u32));
        prop_assert_eq!(e.feps(&a).unwrap(), feps_direct(&a));
    }

    #[test]
    fn interlace_independent_of_edge_order(g in graph(6), seed in any::<u64>()) {
        prop_assert_eq!(
            interlace_graph_with(&g, EdgePolicy::First),
            interlace_graph_with(&g, EdgePolicy::Random(seed))
        );
    }

    #[test]
    fn pivot_is_an_involution_preserving_interlace(g in graph(6)) {
        for (a, b) in g.edges() {
            let h = g.pivot(a, b).unwrap();
            prop_assert_eq!(&h.pivot(a, b).unwrap(), &g);
            prop_assert_eq!(
                interlace_graph_with(&h, EdgePolicy::First),
                interlace_graph_with(&g, EdgePolicy::First)
            );
        }
    }

    #[test]
    fn graph_dmat_exchange(g in graph(6)) {
        let d = DMat::from_graph(&g).unwrap();
        prop_assert!(d.check_symmetric_exchange());
        prop_assert!(d.is_admissible(0));
    }
}
