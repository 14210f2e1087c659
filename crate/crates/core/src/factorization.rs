//! Factorization sets `Z_S(n)` and the vector arithmetic used to compare
//! factorizations.

use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::monoid::NumericalMonoid;

/// Exponent vector over the generators of a monoid, in generator order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FactorizationVector(Vec<u64>);

impl FactorizationVector {
    pub fn new(coefficients: Vec<u64>) -> Self {
        FactorizationVector(coefficients)
    }

    pub fn zero(dimension: usize) -> Self {
        FactorizationVector(alloc::vec![0; dimension])
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u64> {
        self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    /// Number of atoms in the factorization, `|a|`.
    pub fn length(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Coordinate-wise minimum.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_dimension(other)?;
        Ok(FactorizationVector(
            self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect(),
        ))
    }

    /// `max(|a - gcd(a,a')|, |a' - gcd(a,a')|)`.
    pub fn distance(&self, other: &Self) -> Result<u64> {
        self.check_dimension(other)?;
        Ok(distance(&self.0, &other.0))
    }

    /// The element `Σ a_i·n_i` this vector factors, if it fits in `u64`.
    pub fn evaluate(&self, generators: &[u64]) -> Result<u64> {
        if generators.len() != self.0.len() {
            return Err(Error::DimensionMismatch {
                left: self.0.len(),
                right: generators.len(),
            });
        }
        self.0.iter().zip(generators).try_fold(0u64, |acc, (&a, &g)| {
            a.checked_mul(g)
                .and_then(|t| acc.checked_add(t))
                .ok_or(Error::Overflow { context: "evaluating a factorization" })
        })
    }

    fn check_dimension(&self, other: &Self) -> Result<()> {
        if self.0.len() != other.0.len() {
            return Err(Error::DimensionMismatch {
                left: self.0.len(),
                right: other.0.len(),
            });
        }
        Ok(())
    }
}

impl From<Vec<u64>> for FactorizationVector {
    fn from(v: Vec<u64>) -> Self {
        FactorizationVector(v)
    }
}

impl fmt::Display for FactorizationVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Distance between two equal-length coefficient slices.
pub(crate) fn distance(a: &[u64], b: &[u64]) -> u64 {
    let (mut left, mut right) = (0u64, 0u64);
    for (&x, &y) in a.iter().zip(b) {
        if x > y {
            left += x - y;
        } else {
            right += y - x;
        }
    }
    left.max(right)
}

/// Visits every factorization of `n`, stopping early when `visit` breaks.
///
/// Coefficients are chosen from the largest generator down. A branch is only
/// entered when the remainder lies in the submonoid generated by the
/// generators still available, so every branch reaches a factorization.
pub fn for_each_factorization<F>(s: &NumericalMonoid, n: u64, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[u64]) -> ControlFlow<()>,
{
    let k = s.embedding_dimension();
    if !s.is_element(n) {
        return ControlFlow::Continue(());
    }
    let mut coefficients = alloc::vec![0u64; k];
    descend(s, k - 1, n, &mut coefficients, &mut visit)
}

fn descend<F>(
    s: &NumericalMonoid,
    index: usize,
    remaining: u64,
    coefficients: &mut [u64],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[u64]) -> ControlFlow<()>,
{
    let g = s.generators()[index];
    if index == 0 {
        debug_assert_eq!(remaining % g, 0);
        coefficients[0] = remaining / g;
        return visit(coefficients);
    }
    for a in 0..=remaining / g {
        let rest = remaining - a * g;
        if s.prefix_contains(index, rest) {
            coefficients[index] = a;
            descend(s, index - 1, rest, coefficients, visit)?;
        }
    }
    coefficients[index] = 0;
    ControlFlow::Continue(())
}

/// All factorizations of `n` in lexicographic order; empty when `n ∉ S`.
pub fn factorizations(s: &NumericalMonoid, n: i64) -> Vec<FactorizationVector> {
    if n < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let _ = for_each_factorization(s, n as u64, |a| {
        out.push(FactorizationVector(a.to_vec()));
        ControlFlow::Continue(())
    });
    out.sort_unstable();
    out
}

/// Like [`factorizations`], but fails once more than `cap` are found.
pub fn factorizations_capped(
    s: &NumericalMonoid,
    n: u64,
    cap: usize,
) -> Result<Vec<FactorizationVector>> {
    let mut out = Vec::new();
    let flow = for_each_factorization(s, n, |a| {
        if out.len() == cap {
            return ControlFlow::Break(());
        }
        out.push(FactorizationVector(a.to_vec()));
        ControlFlow::Continue(())
    });
    if flow.is_break() {
        return Err(Error::ExplosionGuard { element: n, cap });
    }
    out.sort_unstable();
    Ok(out)
}

/// Number of factorizations of `n`.
pub fn count_factorizations(s: &NumericalMonoid, n: u64) -> usize {
    let mut count = 0;
    let _ = for_each_factorization(s, n, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// Fewest atoms in any factorization of `n`, or `None` when `n ∉ S`.
pub fn min_length(s: &NumericalMonoid, n: u64) -> Option<u64> {
    let mut best: Option<u64> = None;
    let _ = for_each_factorization(s, n, |a| {
        let len: u64 = a.iter().sum();
        best = Some(best.map_or(len, |b| b.min(len)));
        ControlFlow::Continue(())
    });
    best
}
