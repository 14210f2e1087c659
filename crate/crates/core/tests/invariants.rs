mod common;

use std::collections::BTreeSet;

use common::{gcd, monoid, random_corpus};
use numsg_core::catenary::{catenary_element, catenary_set, is_betti, monoid_catenary, nabla_graph};
use numsg_core::factorization::{count_factorizations, factorizations, FactorizationVector};
use numsg_core::oracle::{oracle_betti, oracle_catenary, oracle_factorizations, oracle_membership};
use numsg_core::{betti_elements, NumericalMonoid};
use proptest::prelude::*;

fn generators_strategy() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(2u64..=30, 2..=4)
        .prop_filter("cofinite", |g| g.iter().fold(0, |a, &b| gcd(a, b)) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimalization_is_idempotent(raw in generators_strategy()) {
        let s = NumericalMonoid::new(&raw).unwrap();
        let again = NumericalMonoid::new(s.generators()).unwrap();
        prop_assert_eq!(&again, &s);
        // No generator is a combination of the others.
        for (i, &g) in s.generators().iter().enumerate() {
            let others: Vec<u64> = s.generators().iter().enumerate()
                .filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
            prop_assert!(!oracle_membership(&others, g).unwrap()[g as usize]);
        }
    }

    #[test]
    fn membership_matches_dp(raw in generators_strategy()) {
        let s = NumericalMonoid::new(&raw).unwrap();
        let end = (s.frobenius() + 2 * s.largest_generator() as i64) as u64;
        let table = oracle_membership(s.generators(), end).unwrap();
        for n in 0..=end {
            prop_assert_eq!(s.is_element(n), table[n as usize], "n = {}", n);
        }
    }

    #[test]
    fn frobenius_is_last_gap(raw in generators_strategy()) {
        let s = NumericalMonoid::new(&raw).unwrap();
        let f = s.frobenius();
        prop_assert!(!s.contains(f));
        for j in 1..=s.largest_generator() as i64 {
            prop_assert!(s.contains(f + j));
        }
        prop_assert_eq!(s.gaps().len() as u64, s.genus());
    }

    #[test]
    fn apery_sets(raw in generators_strategy(), pick in 0usize..4) {
        let s = NumericalMonoid::new(&raw).unwrap();
        let m = s.generators()[pick % s.embedding_dimension()];
        let ap = s.apery_set(m).unwrap();
        prop_assert_eq!(ap.len() as u64, m);
        prop_assert!(ap.contains(&0));
        let residues: BTreeSet<u64> = ap.iter().map(|w| w % m).collect();
        prop_assert_eq!(residues.len() as u64, m);
        for &w in &ap {
            prop_assert!(s.is_element(w));
            prop_assert!(!s.contains(w as i64 - m as i64));
        }
    }

    #[test]
    fn distance_axioms(raw in generators_strategy(), n in 0u64..400) {
        let s = NumericalMonoid::new(&raw).unwrap();
        let z = factorizations(&s, n as i64);
        for a in z.iter().take(12) {
            for b in z.iter().take(12) {
                let d = a.distance(b).unwrap();
                prop_assert_eq!(d, b.distance(a).unwrap());
                prop_assert_eq!(d == 0, a == b);
                prop_assert!(d >= a.length().abs_diff(b.length()));
                for c in z.iter().take(6) {
                    prop_assert!(d <= a.distance(c).unwrap() + c.distance(b).unwrap());
                }
            }
        }
    }
}

#[test]
fn factorizations_match_oracle_on_corpus() {
    for s in random_corpus(7, 40, 4, 30) {
        for n in 0..=s.betti_bound() {
            let fast: Vec<Vec<u64>> = factorizations(&s, n as i64)
                .into_iter()
                .map(FactorizationVector::into_inner)
                .collect();
            let slow = oracle_factorizations(s.generators(), n).unwrap();
            assert_eq!(fast, slow, "{s} at {n}");
            for a in &fast {
                let value: u64 = a.iter().zip(s.generators()).map(|(x, g)| x * g).sum();
                assert_eq!(value, n);
            }
        }
    }
}

#[test]
fn unique_factorization_below_first_betti() {
    for s in random_corpus(11, 30, 4, 30) {
        let first = betti_elements(&s)[0];
        for n in s.elements_up_to(first - 1) {
            assert_eq!(count_factorizations(&s, n), 1, "{s} at {n}");
        }
        assert!(count_factorizations(&s, first) >= 2);
    }
}

#[test]
fn catenary_profile_invariants() {
    for s in random_corpus(13, 25, 4, 20) {
        let (set, profile) = catenary_set(&s, None).unwrap();
        let expected: Vec<u64> = s.elements_up_to(profile.window_end).collect();
        let listed: Vec<u64> = profile.entries.iter().map(|&(n, _)| n).collect();
        assert_eq!(listed, expected);
        for &(n, c) in &profile.entries {
            assert_eq!(c == 0, count_factorizations(&s, n) <= 1, "{s} at {n}");
        }
        assert_eq!(set.last().copied(), Some(monoid_catenary(&s).unwrap()), "{s}");
        assert!(set.contains(&0));
        assert!(!set.contains(&1));
    }
}

#[test]
fn nabla_components_agree_with_betti_test() {
    for s in random_corpus(17, 30, 4, 30) {
        let betti: BTreeSet<u64> = betti_elements(&s).into_iter().collect();
        for n in s.elements_up_to(s.betti_bound()).filter(|&n| n > 0) {
            let graph = nabla_graph(&s, n as i64).unwrap();
            assert_eq!(!graph.is_connected(), betti.contains(&n), "{s} at {n}");
            assert_eq!(!graph.is_connected(), is_betti(&s, n));
            // Components partition the vertex set.
            let mut all: Vec<usize> = graph.components.concat();
            all.sort_unstable();
            assert_eq!(all, (0..graph.vertices.len()).collect::<Vec<_>>());
        }
    }
}

#[test]
fn betti_past_the_scan_bound_is_empty() {
    // The oracle scans further than the optimized bound and finds nothing new.
    for s in random_corpus(19, 20, 3, 15) {
        let fast = betti_elements(&s);
        let slow = oracle_betti(&s, s.betti_bound() + 2 * s.largest_generator()).unwrap();
        assert_eq!(fast, slow, "{s}");
    }
}

#[test]
fn two_generator_catenary_is_the_larger_generator() {
    for (a, b) in [(2u64, 3u64), (3, 7), (5, 8), (9, 10), (4, 11)] {
        let s = monoid(&[a, b]);
        let (set, _) = catenary_set(&s, None).unwrap();
        assert_eq!(set, BTreeSet::from([0, b]));
        assert_eq!(catenary_element(&s, (a * b) as i64).unwrap(), b);
        assert_eq!(oracle_catenary(&s, (a * b) as i64).unwrap(), b);
    }
}
