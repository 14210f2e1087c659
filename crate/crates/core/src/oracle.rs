//! Definition-level reference implementations.
//!
//! Nothing here shares code with the optimized paths: no residue tables, no
//! pruning, no spanning trees. Inputs are capped so the brute force stays
//! cheap enough for tests.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::monoid::NumericalMonoid;

pub const MAX_ELEMENT: u64 = 100_000;
pub const MAX_FACTORIZATIONS: usize = 5_000;

/// Coin-problem table: entry `n` is true iff `n` is a non-negative integer
/// combination of `generators`, for `n` in `0..=end`.
pub fn oracle_membership(generators: &[u64], end: u64) -> Result<Vec<bool>> {
    if end > MAX_ELEMENT * 10 {
        return Err(Error::CapExceeded { what: "membership table length" });
    }
    let mut table = alloc::vec![false; end as usize + 1];
    table[0] = true;
    for n in 1..=end as usize {
        table[n] = generators
            .iter()
            .any(|&g| g as usize <= n && g > 0 && table[n - g as usize]);
    }
    Ok(table)
}

/// Every coefficient vector `a` with `Σ a_i·g_i = n`, by plain nested ranges
/// `0..=n/g_i`. Order is lexicographic.
pub fn oracle_factorizations(generators: &[u64], n: u64) -> Result<Vec<Vec<u64>>> {
    if n > MAX_ELEMENT {
        return Err(Error::CapExceeded { what: "element too large" });
    }
    let mut out = Vec::new();
    let mut current = alloc::vec![0u64; generators.len()];
    enumerate(generators, 0, n, &mut current, &mut out)?;
    Ok(out)
}

fn enumerate(
    generators: &[u64],
    index: usize,
    remaining: u64,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) -> Result<()> {
    if index == generators.len() {
        if remaining == 0 {
            if out.len() == MAX_FACTORIZATIONS {
                return Err(Error::CapExceeded { what: "too many factorizations" });
            }
            out.push(current.clone());
        }
        return Ok(());
    }
    let g = generators[index];
    for a in 0..=remaining / g {
        current[index] = a;
        enumerate(generators, index + 1, remaining - a * g, current, out)?;
    }
    current[index] = 0;
    Ok(())
}

fn literal_distance(a: &[u64], b: &[u64]) -> u64 {
    let common: Vec<u64> = a.iter().zip(b).map(|(&x, &y)| x.min(y)).collect();
    let left: u64 = a.iter().zip(&common).map(|(&x, &c)| x - c).sum();
    let right: u64 = b.iter().zip(&common).map(|(&y, &c)| y - c).sum();
    left.max(right)
}

fn connected<F: Fn(usize, usize) -> bool>(count: usize, adjacent: F) -> bool {
    components(count, adjacent) <= 1
}

fn components<F: Fn(usize, usize) -> bool>(count: usize, adjacent: F) -> usize {
    let mut seen = alloc::vec![false; count];
    let mut found = 0;
    for start in 0..count {
        if seen[start] {
            continue;
        }
        found += 1;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for (v, flag) in seen.iter_mut().enumerate() {
                if !*flag && adjacent(u, v) {
                    *flag = true;
                    queue.push_back(v);
                }
            }
        }
    }
    found
}

/// Smallest `N` such that the graph on `Z_S(n)` with edges of distance
/// `<= N` is connected, trying `N = 0, 1, 2, …`.
pub fn oracle_catenary(s: &NumericalMonoid, n: i64) -> Result<u64> {
    if !s.contains(n) {
        return Err(Error::NotAnElement { value: n });
    }
    let z = oracle_factorizations(s.generators(), n as u64)?;
    let mut threshold = 0;
    loop {
        if connected(z.len(), |u, v| literal_distance(&z[u], &z[v]) <= threshold) {
            return Ok(threshold);
        }
        threshold += 1;
    }
}

/// Elements up to `scan_end` whose ∇-graph is disconnected, checked by BFS
/// over the factorization vertices.
pub fn oracle_betti(s: &NumericalMonoid, scan_end: u64) -> Result<Vec<u64>> {
    let g = s.generators();
    let mut out = Vec::new();
    for n in 1..=scan_end {
        let z = oracle_factorizations(g, n)?;
        if z.len() < 2 {
            continue;
        }
        let shares = |u: usize, v: usize| z[u].iter().zip(&z[v]).any(|(&x, &y)| x > 0 && y > 0);
        if !connected(z.len(), shares) {
            out.push(n);
        }
    }
    Ok(out)
}
