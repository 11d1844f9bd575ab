use halfdeg_core::poly::{int, rat, rationalize, to_f64, MultiPoly, Rational, UniPoly};
use num_traits::Zero;
use proptest::prelude::*;

const N: usize = 3;

fn poly_strategy(nvars: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(
        (prop::collection::vec(0u32..4, nvars), -6i64..=6, 1i64..=4),
        0..6,
    )
    .prop_map(move |terms| {
        MultiPoly::from_terms(
            nvars,
            terms
                .into_iter()
                .map(|(e, p, q)| (e, rat(p, q))),
        )
        .unwrap()
    })
}

fn point_strategy(nvars: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-5i64..=5, 1i64..=3), nvars)
        .prop_map(|v| v.into_iter().map(|(p, q)| rat(p, q)).collect())
}

proptest! {
    #[test]
    fn ring_axioms(f in poly_strategy(N), g in poly_strategy(N), h in poly_strategy(N)) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &MultiPoly::one(N), f.clone());
    }

    #[test]
    fn no_zero_terms_stored(f in poly_strategy(N), g in poly_strategy(N)) {
        for p in [&f + &g, &f - &g, &f * &g] {
            prop_assert!(p.terms().all(|(m, c)| !c.is_zero() && m.nvars() == N));
        }
    }

    #[test]
    fn product_degree_adds(f in poly_strategy(N), g in poly_strategy(N)) {
        let prod = &f * &g;
        match (f.degree(), g.degree()) {
            (Some(a), Some(b)) => prop_assert_eq!(prod.degree(), Some(a + b)),
            _ => prop_assert!(prod.is_zero()),
        }
    }

    #[test]
    fn evaluation_is_multiplicative(f in poly_strategy(N), g in poly_strategy(N), p in point_strategy(N)) {
        let lhs = (&f * &g).evaluate(&p).unwrap();
        prop_assert_eq!(lhs, f.evaluate(&p).unwrap() * g.evaluate(&p).unwrap());
        let sum = (&f + &g).evaluate(&p).unwrap();
        prop_assert_eq!(sum, f.evaluate(&p).unwrap() + g.evaluate(&p).unwrap());
    }

    #[test]
    fn leading_term_is_multiplicative(f in poly_strategy(N), g in poly_strategy(N)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let prod = &f * &g;
        let (mf, cf) = f.lex_leading().unwrap();
        let (mg, cg) = g.lex_leading().unwrap();
        let (mp, cp) = prod.lex_leading().unwrap();
        prop_assert_eq!(mp, &mf.mul(mg));
        prop_assert_eq!(cp, &(cf * cg));
    }

    #[test]
    fn identity_substitution(f in poly_strategy(N)) {
        let ids: Vec<MultiPoly> = (0..N).map(|i| MultiPoly::var(N, i)).collect();
        prop_assert_eq!(f.substitute(&ids).unwrap(), f);
    }

    #[test]
    fn substitution_commutes_with_evaluation(
        f in poly_strategy(2),
        a in poly_strategy(N),
        b in poly_strategy(N),
        p in point_strategy(N),
    ) {
        let composed = f.substitute(&[a.clone(), b.clone()]).unwrap();
        let inner = [a.evaluate(&p).unwrap(), b.evaluate(&p).unwrap()];
        prop_assert_eq!(composed.evaluate(&p).unwrap(), f.evaluate(&inner).unwrap());
    }

    #[test]
    fn univariate_division_identity(
        a in prop::collection::vec(-5i64..=5, 1..7),
        b in prop::collection::vec(-5i64..=5, 1..4),
    ) {
        let a = UniPoly::new(a.into_iter().map(int).collect());
        let b = UniPoly::new(b.into_iter().map(int).collect());
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn derivative_obeys_product_rule(
        a in prop::collection::vec(-5i64..=5, 1..6),
        b in prop::collection::vec(-5i64..=5, 1..6),
    ) {
        let a = UniPoly::new(a.into_iter().map(int).collect());
        let b = UniPoly::new(b.into_iter().map(int).collect());
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn square_free_parts_rebuild(roots in prop::collection::vec(-4i64..=4, 1..7)) {
        let f = UniPoly::from_roots(&roots.iter().map(|&r| int(r)).collect::<Vec<_>>());
        let mut rebuilt = UniPoly::constant(int(1));
        for (q, m) in f.square_free_decomposition().unwrap() {
            rebuilt = &rebuilt * &q.pow(m as u32);
        }
        prop_assert_eq!(rebuilt, f);
    }

    #[test]
    fn rationalize_is_close(x in -100.0f64..100.0) {
        let q = rationalize(x, 1_000_000);
        prop_assert!(*q.denom() <= 1_000_000.into());
        prop_assert!((to_f64(&q) - x).abs() <= 1e-6);
    }
}

#[test]
fn zero_polynomial_has_no_degree_or_leading_term() {
    let z = MultiPoly::zero(2);
    assert_eq!(z.degree(), None);
    assert!(z.lex_leading().is_err());
    assert_eq!(UniPoly::zero().degree(), None);
}

#[test]
fn graded_order_prefers_total_degree() {
    let x = |i| MultiPoly::var(2, i);
    let f = &(&x(0) * &(&x(0) * &x(0))) + &(&(&x(0) * &x(0)) * &(&x(1) * &x(1)));
    let (m, c) = f.lex_leading().unwrap();
    assert_eq!(m.exponents(), &[2, 2]);
    assert_eq!(c, &int(1));
}
