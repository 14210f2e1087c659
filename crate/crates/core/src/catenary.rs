//! Catenary degrees, ∇-graphs and Betti elements.

use alloc::vec::Vec;
use alloc::collections::BTreeSet;

use crate::arith::UnionFind;
use crate::error::{Error, Result};
use crate::factorization::{distance, factorizations_capped, FactorizationVector};
use crate::monoid::NumericalMonoid;

/// Default bound on `|Z_S(n)|` before pairwise work is refused.
pub const DEFAULT_FACTORIZATION_CAP: usize = 20_000;

/// Knobs for the per-element computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatenaryConfig {
    pub factorization_cap: usize,
}

impl Default for CatenaryConfig {
    fn default() -> Self {
        CatenaryConfig {
            factorization_cap: DEFAULT_FACTORIZATION_CAP,
        }
    }
}

fn require_element(s: &NumericalMonoid, n: i64) -> Result<u64> {
    if !s.contains(n) {
        return Err(Error::NotAnElement { value: n });
    }
    Ok(n as u64)
}

/// Catenary degree `c_S(n)` with the default factorization cap.
pub fn catenary_element(s: &NumericalMonoid, n: i64) -> Result<u64> {
    catenary_element_with(s, n, &CatenaryConfig::default())
}

pub fn catenary_element_with(s: &NumericalMonoid, n: i64, config: &CatenaryConfig) -> Result<u64> {
    let n = require_element(s, n)?;
    let z = factorizations_capped(s, n, config.factorization_cap)?;
    Ok(bottleneck(&z))
}

/// Largest edge of a minimum spanning tree of the complete distance graph.
///
/// The smallest `N` for which edges of weight `<= N` connect the vertex set
/// is exactly this bottleneck value. Dense Prim keeps memory linear in the
/// number of factorizations; ties resolve to the lowest vertex index.
fn bottleneck(z: &[FactorizationVector]) -> u64 {
    let v = z.len();
    if v <= 1 {
        return 0;
    }
    let mut in_tree = alloc::vec![false; v];
    let mut best = alloc::vec![u64::MAX; v];
    in_tree[0] = true;
    for j in 1..v {
        best[j] = distance(z[0].coefficients(), z[j].coefficients());
    }
    let mut worst = 0;
    for _ in 1..v {
        let mut pick = usize::MAX;
        for j in 0..v {
            if !in_tree[j] && (pick == usize::MAX || best[j] < best[pick]) {
                pick = j;
            }
        }
        worst = worst.max(best[pick]);
        in_tree[pick] = true;
        let row = z[pick].coefficients();
        for j in 0..v {
            if !in_tree[j] {
                let d = distance(row, z[j].coefficients());
                if d < best[j] {
                    best[j] = d;
                }
            }
        }
    }
    worst
}

/// Factorizations of one element grouped into connected components under
/// the "shares an atom" adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NablaGraph {
    pub element: u64,
    pub vertices: Vec<FactorizationVector>,
    /// Each component lists vertex indices in ascending order; components are
    /// ordered by their smallest index.
    pub components: Vec<Vec<usize>>,
}

impl NablaGraph {
    pub fn is_connected(&self) -> bool {
        self.components.len() <= 1
    }
}

pub fn nabla_graph(s: &NumericalMonoid, n: i64) -> Result<NablaGraph> {
    nabla_graph_with(s, n, &CatenaryConfig::default())
}

pub fn nabla_graph_with(s: &NumericalMonoid, n: i64, config: &CatenaryConfig) -> Result<NablaGraph> {
    let n = require_element(s, n)?;
    let vertices = factorizations_capped(s, n, config.factorization_cap)?;
    // Factorizations using atom i form a clique, so merging along each
    // atom's support recovers the components.
    let mut uf = UnionFind::new(vertices.len());
    for i in 0..s.embedding_dimension() {
        let mut first = None;
        for (idx, a) in vertices.iter().enumerate() {
            if a.coefficients()[i] > 0 {
                match first {
                    None => first = Some(idx),
                    Some(f) => {
                        uf.union(f, idx);
                    }
                }
            }
        }
    }
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut root_slot: Vec<Option<usize>> = alloc::vec![None; vertices.len()];
    for idx in 0..vertices.len() {
        let root = uf.find(idx);
        match root_slot[root] {
            Some(slot) => components[slot].push(idx),
            None => {
                root_slot[root] = Some(components.len());
                components.push(alloc::vec![idx]);
            }
        }
    }
    Ok(NablaGraph {
        element: n,
        vertices,
        components,
    })
}

/// Whether `∇_n` is disconnected, decided without enumerating `Z_S(n)`.
///
/// Let `D` be the atoms that divide `n`. Every factorization is contained in
/// the clique of each of its atoms, and atoms `i`, `j` appear together in
/// some factorization iff `n - n_i - n_j ∈ S`. So `∇_n` is connected iff the
/// graph on `D` with those edges is connected.
pub fn is_betti(s: &NumericalMonoid, n: u64) -> bool {
    if n == 0 || !s.is_element(n) {
        return false;
    }
    let g = s.generators();
    let divisors: Vec<usize> = (0..g.len())
        .filter(|&i| n >= g[i] && s.is_element(n - g[i]))
        .collect();
    if divisors.len() < 2 {
        return false;
    }
    let mut uf = UnionFind::new(divisors.len());
    for x in 0..divisors.len() {
        for y in x + 1..divisors.len() {
            let pair = g[divisors[x]] + g[divisors[y]];
            if n >= pair && s.is_element(n - pair) {
                uf.union(x, y);
            }
        }
    }
    uf.components() > 1
}

/// All Betti elements in ascending order.
///
/// Suppose `n > frobenius + 2·n_k`. Then `n - n_i - n_j ∈ S` for every pair
/// of atoms, so for factorizations `a ∋ n_i` and `a' ∋ n_j` the vector
/// `e_i + e_j + z`, with `z ∈ Z(n - n_i - n_j)`, is adjacent to both and
/// `∇_n` is connected. Hence scanning `n_1 + n_2 ..= frobenius + 2·n_k`
/// finds every Betti element.
pub fn betti_elements(s: &NumericalMonoid) -> Vec<u64> {
    if s.embedding_dimension() < 2 {
        return Vec::new();
    }
    let g = s.generators();
    (g[0] + g[1]..=s.betti_bound())
        .filter(|&n| is_betti(s, n))
        .collect()
}

/// Catenary degree of the monoid: the maximum over its Betti elements.
pub fn monoid_catenary(s: &NumericalMonoid) -> Result<u64> {
    monoid_catenary_with(s, &CatenaryConfig::default())
}

pub fn monoid_catenary_with(s: &NumericalMonoid, config: &CatenaryConfig) -> Result<u64> {
    betti_elements(s).into_iter().try_fold(0, |acc, b| {
        Ok(acc.max(catenary_element_with(s, b as i64, config)?))
    })
}

/// Per-element catenary degrees over `[0, window_end]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatenaryProfile {
    pub monoid: NumericalMonoid,
    pub window_end: u64,
    /// `(element, catenary degree)` for every element up to `window_end`.
    pub entries: Vec<(u64, u64)>,
    /// `c(n) = c(n - n_1)` held for every element in the last `n_1`
    /// integers of the window.
    pub stable: bool,
}

impl CatenaryProfile {
    pub fn catenary_set(&self) -> BTreeSet<u64> {
        self.entries.iter().map(|&(_, c)| c).collect()
    }

    pub fn degree_of(&self, n: u64) -> Option<u64> {
        self.entries
            .binary_search_by_key(&n, |&(e, _)| e)
            .ok()
            .map(|i| self.entries[i].1)
    }
}

/// Heuristic default window: `frobenius + 2·n_k + max Betti + n_1`.
pub fn default_window(s: &NumericalMonoid) -> u64 {
    let betti_max = betti_elements(s).last().copied().unwrap_or(0);
    s.betti_bound() + betti_max + s.multiplicity()
}

/// Set of catenary degrees observed on `[0, window_end]` (default window
/// when `None`) along with the full profile.
pub fn catenary_set(
    s: &NumericalMonoid,
    window_end: Option<u64>,
) -> Result<(BTreeSet<u64>, CatenaryProfile)> {
    catenary_set_with(s, window_end, &CatenaryConfig::default())
}

pub fn catenary_set_with(
    s: &NumericalMonoid,
    window_end: Option<u64>,
    config: &CatenaryConfig,
) -> Result<(BTreeSet<u64>, CatenaryProfile)> {
    let window_end = match window_end {
        Some(w) => {
            if (w as i128) < s.frobenius() as i128 + 1 {
                return Err(Error::WindowTooSmall {
                    window_end: w,
                    minimum: s.frobenius() + 1,
                });
            }
            w
        }
        None => default_window(s),
    };
    let elements: Vec<u64> = s.elements_up_to(window_end).collect();
    let degrees = degrees_of(s, &elements, config)?;
    let entries: Vec<(u64, u64)> = elements.into_iter().zip(degrees).collect();

    let m = s.multiplicity();
    let tail_start = window_end.saturating_sub(m) + 1;
    let mut stable = true;
    for &(n, c) in entries.iter().rev().take_while(|&&(n, _)| n >= tail_start) {
        let earlier = n.checked_sub(m).and_then(|p| {
            entries
                .binary_search_by_key(&p, |&(e, _)| e)
                .ok()
                .map(|i| entries[i].1)
        });
        if earlier != Some(c) {
            stable = false;
            break;
        }
    }

    let profile = CatenaryProfile {
        monoid: s.clone(),
        window_end,
        entries,
        stable,
    };
    Ok((profile.catenary_set(), profile))
}

#[cfg(feature = "parallel")]
fn degrees_of(s: &NumericalMonoid, elements: &[u64], config: &CatenaryConfig) -> Result<Vec<u64>> {
    use rayon::prelude::*;
    elements
        .par_iter()
        .map(|&n| catenary_element_with(s, n as i64, config))
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn degrees_of(s: &NumericalMonoid, elements: &[u64], config: &CatenaryConfig) -> Result<Vec<u64>> {
    elements
        .iter()
        .map(|&n| catenary_element_with(s, n as i64, config))
        .collect()
}
