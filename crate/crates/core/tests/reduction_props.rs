mod common;

use common::{random_symmetric, rng, small_rational};
use halfdeg_core::poly::{Rational, UniPoly};
use halfdeg_core::reduction::{
    enumerate_patterns, lift_point, partitions_at_most, principle_instances, reduce_polynomial,
    Mode, MultiplicityPattern, Principle,
};
use halfdeg_core::search::{minimize_instance, SearchConfig};
use halfdeg_core::symmetric::{decompose_to_elementary, vieta_map};
use proptest::prelude::*;
use rand::Rng;

/// Partitions of `m` into at most `k` parts via `p(m, k) = p(m, k-1) + p(m-k, k)`.
fn partition_count(m: usize, k: usize) -> usize {
    if m == 0 {
        return 1;
    }
    if k == 0 {
        return 0;
    }
    partition_count(m, k - 1) + if m >= k { partition_count(m - k, k) } else { 0 }
}

#[test]
fn pattern_counts_follow_the_partition_recurrence() {
    for n in 1..=12 {
        for k in 1..=n {
            let real = enumerate_patterns(n, k, Mode::RealLine).unwrap();
            assert_eq!(real.len(), partition_count(n, k), "n={n} k={k}");
            let orthant = enumerate_patterns(n, k, Mode::Orthant).unwrap();
            let expected: usize = (0..=n).map(|z| partition_count(n - z, k)).sum();
            assert_eq!(orthant.len(), expected);
            for p in real.iter().chain(&orthant) {
                assert_eq!(p.n(), n);
                assert!(p.k() <= k);
                assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
            }
        }
    }
}

#[test]
fn patterns_come_in_decreasing_order_without_repeats() {
    for m in 1..=10 {
        for k in 1..=m {
            let ps = partitions_at_most(m, k);
            assert!(ps.windows(2).all(|w| w[0] > w[1]));
        }
    }
}

#[test]
fn out_of_range_test_set_sizes_are_rejected() {
    assert!(enumerate_patterns(3, 0, Mode::RealLine).is_err());
    assert!(enumerate_patterns(3, 4, Mode::RealLine).is_err());
}

#[test]
fn lifted_points_reproduce_reduced_values() {
    let mut r = rng(41);
    for _ in 0..40 {
        let n = r.random_range(1..=5);
        let d = r.random_range(1..=5);
        let (f, _) = random_symmetric(&mut r, n, d, 5);
        for mode in [Mode::RealLine, Mode::Orthant] {
            let k = r.random_range(1..=n);
            for p in enumerate_patterns(n, k, mode).unwrap() {
                let inst = reduce_polynomial(&f, &p).unwrap();
                assert!(inst.reduced.degree() <= f.degree());
                let t: Vec<Rational> = (0..p.k()).map(|_| small_rational(&mut r, 6, 3)).collect();
                let x = lift_point(&p, &t).unwrap();
                assert_eq!(x.len(), n);
                assert_eq!(f.evaluate(&x).unwrap(), inst.reduced.evaluate(&t).unwrap());
            }
        }
    }
}

#[test]
fn orbit_space_route_agrees_with_direct_evaluation() {
    // G at the coefficient vector of prod (t - x_i) equals F(x).
    let mut r = rng(42);
    for _ in 0..40 {
        let n = r.random_range(2..=5);
        let d = r.random_range(1..=6);
        let (f, _) = random_symmetric(&mut r, n, d, 5);
        let g = decompose_to_elementary(&f).unwrap();
        let k = r.random_range(1..=n);
        let patterns = enumerate_patterns(n, k, Mode::RealLine).unwrap();
        let p = &patterns[r.random_range(0..patterns.len())];
        let t: Vec<Rational> = (0..p.k()).map(|_| small_rational(&mut r, 5, 2)).collect();
        let x = lift_point(p, &t).unwrap();
        let poly = UniPoly::from_roots(&x);
        let z = poly.elementary_values().unwrap();
        assert_eq!(z, vieta_map(&x));
        assert_eq!(g.evaluate(&z).unwrap(), f.evaluate(&x).unwrap());
    }
}

#[test]
fn larger_test_sets_reach_lower_minima() {
    let mut r = rng(43);
    let cfg = SearchConfig {
        lo: -2.0,
        hi: 2.0,
        grid: 9,
        descent_steps: 0,
        ..SearchConfig::default()
    };
    for _ in 0..10 {
        let n = 4;
        let (f, _) = random_symmetric(&mut r, n, 4, 6);
        let mut previous = f64::INFINITY;
        for k in 1..=n {
            let best = enumerate_patterns(n, k, Mode::RealLine)
                .unwrap()
                .iter()
                .map(|p| minimize_instance(&reduce_polynomial(&f, p).unwrap(), &cfg).unwrap().value)
                .fold(f64::INFINITY, f64::min);
            assert!(best <= previous + 1e-12, "k={k}: {best} > {previous}");
            previous = best;
        }
    }
}

#[test]
fn principle_sizes() {
    let x = |i| halfdeg_core::MultiPoly::var(6, i);
    let p4: halfdeg_core::MultiPoly = (0..6).map(|i| x(i).pow(4)).fold(halfdeg_core::MultiPoly::zero(6), |a, b| &a + &b);
    let inst = principle_instances(&p4, Principle::HalfDegree, Mode::RealLine).unwrap();
    let parts: Vec<Vec<usize>> = inst.iter().map(|i| i.pattern.parts().to_vec()).collect();
    assert_eq!(parts, vec![vec![6], vec![5, 1], vec![4, 2], vec![3, 3]]);
    assert_eq!(Principle::HalfDegree.test_set_size(3, 2), 2);
    assert_eq!(Principle::HalfDegree.test_set_size(3, 3), 2);
    assert_eq!(Principle::HalfDegree.test_set_size(9, 8), 4);
    assert_eq!(Principle::Degree.test_set_size(3, 9), 3);
    assert_eq!(Principle::Degree.test_set_size(5, 2), 2);
    let c = halfdeg_core::MultiPoly::one(3);
    assert!(principle_instances(&c, Principle::Degree, Mode::RealLine).is_err());
}

proptest! {
    #[test]
    fn lift_has_requested_shape(
        parts in prop::collection::vec(1usize..4, 0..4),
        zeros in 0usize..3,
        seed in any::<u64>(),
    ) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        prop_assume!(!parts.is_empty() || zeros > 0);
        let p = MultiplicityPattern::new(parts.clone(), zeros).unwrap();
        let mut r = rng(seed);
        let t: Vec<Rational> = (0..parts.len()).map(|_| small_rational(&mut r, 9, 2)).collect();
        let x = lift_point(&p, &t).unwrap();
        prop_assert_eq!(x.len(), parts.iter().sum::<usize>() + zeros);
        let mut at = 0;
        for (tj, &size) in t.iter().zip(&parts) {
            prop_assert!(x[at..at + size].iter().all(|v| v == tj));
            at += size;
        }
        prop_assert!(x[at..].iter().all(|v| *v == Rational::from_integer(0.into())));
        prop_assert!(lift_point(&p, &t[..t.len().saturating_sub(1)]).is_err() || t.is_empty());
    }
}
