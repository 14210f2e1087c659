#![allow(dead_code)]

use numsg_core::{adjoin, monoid_catenary, AdjoinStep, NumericalMonoid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn monoid(g: &[u64]) -> NumericalMonoid {
    NumericalMonoid::new(g).unwrap()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `count` distinct monoids with at most `max_k` raw generators, each in
/// `2..=max_gen`, drawn from a fixed seed.
pub fn random_corpus(seed: u64, count: usize, max_k: usize, max_gen: u64) -> Vec<NumericalMonoid> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<NumericalMonoid> = Vec::new();
    while out.len() < count {
        let k = rng.gen_range(2..=max_k);
        let raw: Vec<u64> = (0..k).map(|_| rng.gen_range(2..=max_gen)).collect();
        if raw.iter().fold(0, |a, &b| gcd(a, b)) != 1 {
            continue;
        }
        let s = NumericalMonoid::new(&raw).unwrap();
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

/// Valid adjoin steps with base generators `<= max_base_gen` and
/// `c <= max_c`, drawn from a fixed seed.
pub fn random_steps(seed: u64, count: usize, max_base_gen: u64, max_c: u64) -> Vec<AdjoinStep> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<AdjoinStep> = Vec::new();
    while out.len() < count {
        let k = rng.gen_range(2..=3);
        let raw: Vec<u64> = (0..k).map(|_| rng.gen_range(2..=max_base_gen)).collect();
        if raw.iter().fold(0, |a, &b| gcd(a, b)) != 1 {
            continue;
        }
        let base = NumericalMonoid::new(&raw).unwrap();
        let cat = monoid_catenary(&base).unwrap();
        if cat >= max_c {
            continue;
        }
        let c = rng.gen_range(cat + 1..=max_c);
        let b = rng.gen_range(base.multiplicity() + 1..=c * base.multiplicity());
        if let Ok(step) = adjoin(&base, c, b) {
            if !out.iter().any(|s| s.result == step.result) {
                out.push(step);
            }
        }
    }
    out
}
