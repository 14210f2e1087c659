//! Numerical monoids given by their minimal generators.
//!
//! Membership is answered through residue tables modulo the multiplicity
//! `n_1`: entry `r` holds the smallest element congruent to `r` that can be
//! written with the generators seen so far (`u64::MAX` when there is none).
//! The table for the full generator list is the Apéry set of `n_1`, so
//! `n ∈ S` iff `n >= table[n mod n_1]`. One table is kept per generator
//! prefix; the factorization enumerator prunes with them.

use alloc::vec::Vec;
use core::fmt;

use crate::arith::{gcd, gcd_all};
use crate::error::{Error, Result};

const UNREACHABLE: u64 = u64::MAX;

/// Largest multiplicity (or Apéry modulus) accepted. One residue table of
/// this many entries is stored per generator.
pub const MAX_MODULUS: u64 = 1 << 22;

fn check_modulus(m: u64) -> Result<usize> {
    if m > MAX_MODULUS {
        return Err(Error::TooLarge {
            modulus: m,
            limit: MAX_MODULUS,
        });
    }
    Ok(m as usize)
}

#[derive(Clone, PartialEq, Eq)]
pub struct NumericalMonoid {
    generators: Vec<u64>,
    frobenius: i64,
    /// `prefix_tables[j]` is the residue table of `⟨n_1, …, n_{j+1}⟩`.
    prefix_tables: Vec<Vec<u64>>,
}

impl NumericalMonoid {
    /// Builds the monoid generated by `raw`, reducing to the minimal
    /// generating set in ascending order.
    pub fn new(raw: &[u64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if raw.contains(&0) {
            return Err(Error::NonPositiveGenerator);
        }
        let g = gcd_all(raw);
        if g != 1 {
            return Err(Error::NotCofinite { gcd: g });
        }

        let mut sorted = raw.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        // A candidate can only be written using strictly smaller generators,
        // so one ascending pass that keeps the non-representable candidates
        // yields the unique minimal generating set.
        let modulus = sorted[0];
        let mut table = alloc::vec![UNREACHABLE; check_modulus(modulus)?];
        table[0] = 0;
        let mut generators = alloc::vec![modulus];
        let mut prefix_tables = alloc::vec![table.clone()];
        for &candidate in &sorted[1..] {
            if residue_contains(&table, candidate) {
                continue;
            }
            add_generator(&mut table, candidate)?;
            generators.push(candidate);
            prefix_tables.push(table.clone());
        }

        let max_apery = *table.iter().max().expect("modulus is positive");
        debug_assert_ne!(max_apery, UNREACHABLE);
        let frobenius = i64::try_from(max_apery)
            .map_err(|_| Error::Overflow { context: "computing the Frobenius number" })?
            - modulus as i64;

        Ok(NumericalMonoid {
            generators,
            frobenius,
            prefix_tables,
        })
    }

    /// The monoid ℕ = ⟨1⟩.
    pub fn naturals() -> Self {
        Self::new(&[1]).expect("⟨1⟩ is valid")
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Number of minimal generators `k`.
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// The smallest generator `n_1`.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// The largest generator `n_k`.
    pub fn largest_generator(&self) -> u64 {
        *self.generators.last().expect("generators are nonempty")
    }

    /// Largest integer outside the monoid; `-1` for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// `frobenius + 2·n_k`, the end of the window in which every Betti
    /// element lies.
    pub fn betti_bound(&self) -> u64 {
        (self.frobenius + 2 * self.largest_generator() as i64) as u64
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && self.is_element(n as u64)
    }

    pub fn is_element(&self, n: u64) -> bool {
        residue_contains(self.full_table(), n)
    }

    /// Membership in the submonoid generated by the first `count` generators.
    pub(crate) fn prefix_contains(&self, count: usize, n: u64) -> bool {
        residue_contains(&self.prefix_tables[count - 1], n)
    }

    /// Number of integers outside the monoid (the genus).
    pub fn genus(&self) -> u64 {
        let m = self.multiplicity();
        self.full_table()
            .iter()
            .enumerate()
            .map(|(r, &w)| (w - r as u64) / m)
            .sum()
    }

    /// All gaps in ascending order. The list has [`genus`](Self::genus) entries.
    pub fn gaps(&self) -> Vec<u64> {
        if self.frobenius < 0 {
            return Vec::new();
        }
        (1..=self.frobenius as u64)
            .filter(|&n| !self.is_element(n))
            .collect()
    }

    /// Elements of the monoid in `[0, end]`, ascending.
    pub fn elements_up_to(&self, end: u64) -> impl Iterator<Item = u64> + '_ {
        (0..=end).filter(move |&n| self.is_element(n))
    }

    /// Apéry set of `m`: the smallest element of each residue class modulo
    /// `m`, returned in ascending order.
    pub fn apery_set(&self, m: u64) -> Result<Vec<u64>> {
        let mut set = self.apery_by_residue(m)?;
        set.sort_unstable();
        Ok(set)
    }

    /// Apéry set of `m` indexed by residue class.
    pub fn apery_by_residue(&self, m: u64) -> Result<Vec<u64>> {
        if m == 0 || !self.is_element(m) {
            return Err(Error::NotAnElement { value: m as i64 });
        }
        if m == self.multiplicity() {
            return Ok(self.full_table().to_vec());
        }
        let len = check_modulus(m)?;
        let mut table = alloc::vec![UNREACHABLE; len];
        table[0] = 0;
        for &g in &self.generators {
            add_generator(&mut table, g)?;
        }
        Ok(table)
    }

    fn full_table(&self) -> &[u64] {
        self.prefix_tables.last().expect("at least one table")
    }
}

impl fmt::Debug for NumericalMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalMonoid{}", self)
    }
}

impl fmt::Display for NumericalMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("⟨")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("⟩")
    }
}

fn residue_contains(table: &[u64], n: u64) -> bool {
    let w = table[(n % table.len() as u64) as usize];
    w != UNREACHABLE && n >= w
}

/// Round-robin update of a residue table with a new generator `a`.
///
/// The step `r -> r + a (mod m)` splits the residues into `gcd(a, m)` cycles.
/// Within a cycle the smallest entry cannot improve, so a single lap
/// starting from it relaxes every other entry.
fn add_generator(table: &mut [u64], a: u64) -> Result<()> {
    let m = table.len() as u64;
    let step = a % m;
    if step == 0 {
        return Ok(());
    }
    let cycles = gcd(step, m);
    let cycle_len = m / cycles;
    for start in 0..cycles {
        let mut best = start;
        let mut q = start;
        for _ in 1..cycle_len {
            q = (q + step) % m;
            if table[q as usize] < table[best as usize] {
                best = q;
            }
        }
        let mut current = table[best as usize];
        if current == UNREACHABLE {
            continue;
        }
        let mut q = best;
        for _ in 1..cycle_len {
            q = (q + step) % m;
            let via = current
                .checked_add(a)
                .ok_or(Error::Overflow { context: "building a residue table" })?;
            current = via.min(table[q as usize]);
            table[q as usize] = current;
        }
    }
    Ok(())
}
